// Command-line front end: describe, verify, export, sweep and selftest.
#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "powergraph/acceptance.hpp"
#include "powergraph/fgraph_io.hpp"
#include "powergraph/group_spec.hpp"
#include "powergraph/oracle.hpp"
#include "powergraph/structural.hpp"

namespace pg = powergraph;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Writes to --out when given, stdout otherwise.
void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

pg::GroupSpec parse_spec_or_explain(const std::string& text) {
  try {
    return pg::parse_group_spec(text);
  } catch (const pg::SpecParseError& e) {
    std::ostringstream os;
    os << "invalid group spec: " << e.what() << "\n  " << text << "\n  " << std::string(e.position(), ' ') << "^";
    throw UsageError(os.str());
  }
}

// "a..b", "a,b,c" or a single number.
std::vector<pg::u64> parse_range(const std::string& text) {
  std::vector<pg::u64> out;
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty() || s[0] == '-')
      throw UsageError("invalid range '" + text + "' (expected a..b, a,b,c or a number)");
    return static_cast<pg::u64>(v);
  };
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const auto lo = number(text.substr(0, dots)), hi = number(text.substr(dots + 2));
    if (hi < lo) throw UsageError("empty range '" + text + "'");
    if (hi - lo > 100000) throw UsageError("range '" + text + "' is too large");
    for (auto v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(number(item));
  return out;
}

std::vector<pg::GroupSpec> family_specs(pg::GroupFamily family, const std::vector<pg::u64>& values,
                                        pg::u64 max_order, std::vector<std::string>& skipped) {
  std::vector<pg::GroupSpec> specs;
  for (pg::u64 v : values) {
    if (v == 0) continue;
    switch (family) {
      case pg::GroupFamily::Abelian:
        for (pg::u64 w : values)
          if (w >= v) specs.push_back({family, {v, w}});
        break;
      case pg::GroupFamily::Dihedral:
        if (v >= 2) specs.push_back({family, {v}});
        break;
      case pg::GroupFamily::Quaternion:
        if (v >= 2) specs.push_back({family, {v}});
        break;
      case pg::GroupFamily::Semidirect:
        for (pg::u64 m = 2; v >= 2 && v * m <= max_order; ++m)
          for (pg::u64 s = 2; s <= v + 1; ++s)
            if (pg::semidirect_flower_condition(v, m, s)) specs.push_back({family, {v, m, s}});
        break;
      case pg::GroupFamily::PGL2:
        try {
          pg::make_pgl2(v);
          specs.push_back({family, {v}});
        } catch (const std::exception&) {
          skipped.push_back("pgl2:" + std::to_string(v));
        }
        break;
      default:
        specs.push_back({family, {v}});
    }
  }
  return specs;
}

std::string graph_text(const pg::FunctionalGraph& g, const std::string& format, const std::string& name) {
  if (format == "dot") return pg::to_dot(g, name);
  if (format == "json") return pg::to_json_summary(g).dump(2);
  return pg::to_text(g);
}

int run_describe(const std::string& group_text, pg::u64 t, const std::string& format, const std::string& out) {
  const auto spec = parse_spec_or_explain(group_text);
  auto result = pg::structural_graph(spec, t);
  if (!result) {
    std::cerr << "note: no structural theorem applies to " << spec.to_string()
              << "; falling back to brute-force enumeration\n";
    const auto group = pg::make_group(spec);
    result = pg::StructuralResult{pg::brute_force_graph(*group, t), "brute-force enumeration", std::nullopt};
  }
  if (format == "json") {
    auto j = result->to_json();
    j["group"] = spec.to_string();
    j["t"] = t;
    emit(j.dump(2), out);
  } else {
    emit(graph_text(result->graph, format, spec.to_string()), out);
  }
  return 0;
}

int run_verify(const std::string& group_text, pg::u64 t, const std::string& format, const std::string& out,
               const std::string& dot_path) {
  const auto spec = parse_spec_or_explain(group_text);
  const auto report = pg::verify(spec, t);
  emit(format == "json" ? report.to_json().dump(2) : report.to_text(), out);
  if (!dot_path.empty()) {
    std::string dot = pg::to_dot(report.brute_force, spec.to_string() + " brute force");
    if (report.structural) dot += pg::to_dot(report.structural->graph, spec.to_string() + " structural");
    emit(dot, dot_path);
  }
  if (!report.structural && format == "json") std::cerr << "note: " << report.notice << "\n";
  return report.verdict.value_or(true) ? 0 : 1;
}

int run_export(const std::string& group_text, pg::u64 t, const std::string& format, const std::string& out) {
  const auto spec = parse_spec_or_explain(group_text);
  const auto group = pg::make_group(spec);
  const auto graph = pg::brute_force_graph(*group, t);
  if (format == "json") {
    nlohmann::json census = nlohmann::json::object();
    for (const auto& [code, count] : pg::tree_census(*group, t)) census[code] = count;
    nlohmann::json j{{"group", spec.to_string()}, {"t", t},           {"order", group->order()},
                     {"text", pg::to_text(graph)}, {"tree_census", census}, {"components", pg::to_json_summary(graph)}};
    emit(j.dump(2), out);
  } else {
    emit(graph_text(graph, format, spec.to_string()), out);
  }
  return 0;
}

std::string verdict_cell(const pg::SweepRow& r) {
  if (!r.error.empty()) return "error (" + r.error + ")";
  if (!r.applicable()) return "n/a";
  return r.verdict() ? "true" : "false";
}

int run_sweep(const std::string& family_text, const std::string& range, const std::string& t_range,
              pg::u64 max_order, const std::string& format, const std::string& out) {
  pg::GroupFamily family;
  try {
    family = pg::parse_family(family_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::vector<std::string> skipped;
  const auto specs = family_specs(family, parse_range(range), max_order, skipped);
  const auto ts = parse_range(t_range);
  if (ts.empty() || ts.front() == 0) throw UsageError("t values must be positive");
  for (const auto& s : skipped) std::cerr << "note: skipping unsupported group " << s << "\n";

  const auto [t_lo, t_hi] = std::minmax_element(ts.begin(), ts.end());
  auto rows = pg::sweep(specs, *t_lo, *t_hi);
  std::erase_if(rows, [&](const pg::SweepRow& r) { return std::find(ts.begin(), ts.end(), r.t) == ts.end(); });

  bool all_ok = true;
  std::ostringstream os;
  if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json routes = nlohmann::json::array();
      for (const auto& [name, ok] : r.routes) routes.push_back({{"provenance", name}, {"isomorphic", ok}});
      j.push_back({{"group", r.group},
                   {"t", r.t},
                   {"order", r.order},
                   {"flower_type", r.flower ? nlohmann::json(r.flower->to_string()) : nlohmann::json(nullptr)},
                   {"components", r.components},
                   {"distinct_trees", r.distinct_trees},
                   {"routes", routes},
                   {"verdict", r.applicable() || !r.error.empty() ? nlohmann::json(r.verdict()) : nlohmann::json(nullptr)},
                   {"error", r.error}});
      all_ok = all_ok && (r.verdict() || (!r.applicable() && r.error.empty()));
    }
    os << j.dump(2);
  } else {
    os << std::left << std::setw(28) << "group" << std::setw(5) << "t" << std::setw(8) << "order" << std::setw(24)
       << "flower type" << std::setw(12) << "components" << std::setw(8) << "trees"
       << "verdict\n";
    for (const auto& r : rows) {
      std::string type = r.flower ? r.flower->to_string() : "-";
      if (type.size() > 22) type = type.substr(0, 19) + "...";
      os << std::setw(28) << r.group << std::setw(5) << r.t << std::setw(8) << r.order << std::setw(24) << type
         << std::setw(12) << r.components << std::setw(8) << r.distinct_trees
         << verdict_cell(r) << "\n";
      all_ok = all_ok && (r.verdict() || (!r.applicable() && r.error.empty()));
    }
    std::size_t passed = 0, uncovered = 0;
    for (const auto& r : rows) {
      passed += r.verdict() ? 1 : 0;
      uncovered += !r.applicable() && r.error.empty() ? 1 : 0;
    }
    os << passed << "/" << rows.size() << " rows verified";
    if (uncovered) os << ", " << uncovered << " without a structural theorem (brute force only)";
    os << "\n";
  }
  emit(os.str(), out);
  return all_ok ? 0 : 1;
}

int run_selftest() {
  const auto results = pg::run_acceptance(&std::cout);
  std::size_t failed = 0;
  for (const auto& r : results) failed += r.passed ? 0 : 1;
  std::cout << results.size() - failed << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Functional graphs of power maps g -> g^t on finite groups"};
  app.require_subcommand(1, 1);

  std::string group, format = "text", out, dot, family, range, t_range = "1..12";
  pg::u64 t = 2, max_order = 400;
  const auto positive = CLI::PositiveNumber;
  const auto formats = CLI::IsMember({"text", "json", "dot"});

  auto* describe = app.add_subcommand("describe", "Structural description of the power-map graph");
  describe->add_option("--group,-g", group, "Group spec, e.g. quaternion:24")->required();
  describe->add_option("--t,-t", t, "Exponent t >= 1")->required()->check(positive);
  describe->add_option("--format,-f", format, "text, json or dot")->check(formats);
  describe->add_option("--out,-o", out, "Write to this file instead of stdout");

  auto* verify = app.add_subcommand("verify", "Compare the structural graph with brute-force enumeration");
  verify->add_option("--group,-g", group, "Group spec")->required();
  verify->add_option("--t,-t", t, "Exponent t >= 1")->required()->check(positive);
  verify->add_option("--format,-f", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out,-o", out, "Write the report to this file");
  verify->add_option("--dot", dot, "Also write both graphs as DOT to this file");

  auto* exporter = app.add_subcommand("export", "Enumerate the power-map graph and export it");
  exporter->add_option("--group,-g", group, "Group spec")->required();
  exporter->add_option("--t,-t", t, "Exponent t >= 1")->required()->check(positive);
  exporter->add_option("--format,-f", format, "text, json or dot")->check(formats);
  exporter->add_option("--out,-o", out, "Write to this file instead of stdout");

  auto* sweeper = app.add_subcommand("sweep", "Verify a family of groups over a range of exponents");
  sweeper->add_option("--family", family, "cyclic, abelian, units, dihedral, quaternion, semidirect or pgl2")
      ->required();
  sweeper->add_option("--range", range, "Family parameter values: a..b or a,b,c")->required();
  sweeper->add_option("--t-range", t_range, "Exponents: a..b or a,b,c (default 1..12)");
  sweeper->add_option("--max-order", max_order, "Order bound for semidirect instances (default 400)");
  sweeper->add_option("--format,-f", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  sweeper->add_option("--out,-o", out, "Write to this file instead of stdout");

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*describe) return run_describe(group, t, format, out);
    if (*verify) return run_verify(group, t, format, out, dot);
    if (*exporter) return run_export(group, t, format, out);
    if (*sweeper) return run_sweep(family, range, t_range, max_order, format, out);
    if (*selftest) return run_selftest();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

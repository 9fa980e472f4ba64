#include "powergraph/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "powergraph/fgraph_io.hpp"

namespace powergraph {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

}  // namespace

unsigned worker_threads() {
  if (const char* env = std::getenv("POWERGRAPH_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<Vertex> power_successors(const FiniteGroup& group, u64 t) {
  if (t == 0) throw std::domain_error("exponent t must be positive");
  const std::size_t n = group.order();
  if (n > kMaxGroupOrder) throw std::length_error("group exceeds the 2^24 element limit");
  std::vector<Vertex> succ(n);
  auto fill = [&](std::size_t begin, std::size_t end) {
    for (std::size_t g = begin; g < end; ++g) succ[g] = power(group, static_cast<Element>(g), t);
  };
  const unsigned workers = n < (1u << 15) ? 1 : std::min<unsigned>(worker_threads(), 64);
  if (workers == 1) {
    fill(0, n);
    return succ;
  }
  std::vector<std::jthread> pool;
  const std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk, end = std::min(n, begin + chunk);
    if (begin < end) pool.emplace_back(fill, begin, end);
  }
  return succ;
}

FunctionalGraph brute_force_graph(const FiniteGroup& group, u64 t) {
  const auto succ = power_successors(group, t);
  return from_map(succ);
}

std::vector<OrbitInfo> orbit_table(const FiniteGroup& group, u64 t) {
  const auto succ = power_successors(group, t);
  const auto dec = decompose_map(succ);
  std::vector<OrbitInfo> out(succ.size());
  for (Vertex v = 0; v < succ.size(); ++v) out[v] = {v, dec.preperiod[v], dec.period(v)};
  return out;
}

TreeCensus tree_census(const FiniteGroup& group, u64 t) {
  TreeCensus census;
  const auto graph = brute_force_graph(group, t);
  for (const auto& c : graph.components())
    for (const auto& tree : c.trees()) ++census[tree.code()];
  return census;
}

VerifyReport verify(const GroupSpec& spec, u64 t) {
  VerifyReport report;
  report.spec = spec.to_string();
  report.t = t;

  auto start = std::chrono::steady_clock::now();
  report.structural = structural_graph(spec, t);
  report.structural_ms = elapsed_ms(start);

  start = std::chrono::steady_clock::now();
  const auto group = make_group(spec);
  report.order = group->order();
  report.brute_force = brute_force_graph(*group, t);
  report.brute_force_ms = elapsed_ms(start);

  report.distinct_trees = distinct_tree_count(report.brute_force);
  report.periodic_points = report.brute_force.periodic_count();
  report.components = report.brute_force.components().size();
  if (report.structural)
    report.verdict = is_isomorphic(report.structural->graph, report.brute_force);
  else
    report.notice = "no structural theorem applies to " + report.spec + "; brute-force enumeration only";
  return report;
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json out{
      {"group", spec},
      {"t", t},
      {"order", order},
      {"brute_force", {{"vertices", brute_force.vertex_count()}, {"text", powergraph::to_text(brute_force)},
                       {"components", to_json_summary(brute_force)}}},
      {"distinct_trees", distinct_trees},
      {"periodic_points", periodic_points},
      {"component_count", components},
      {"elapsed_ms", {{"structural", structural_ms}, {"brute_force", brute_force_ms}}},
  };
  if (structural) {
    out["structural"] = structural->to_json();
    out["structural"]["vertices"] = structural->graph.vertex_count();
    out["verdict"] = *verdict;
  } else {
    out["structural"] = nullptr;
    out["verdict"] = nullptr;
    out["notice"] = notice;
  }
  return out;
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  os << "group:            " << spec << " (order " << order << ")\n";
  os << "t:                " << t << "\n";
  if (structural) {
    os << "structural:       " << powergraph::to_text(structural->graph) << "\n";
    os << "  provenance:     " << structural->provenance << "\n";
    os << "  vertices:       " << structural->graph.vertex_count() << "\n";
  } else {
    os << "structural:       none (" << notice << ")\n";
  }
  os << "brute force:      " << powergraph::to_text(brute_force) << "\n";
  os << "  vertices:       " << brute_force.vertex_count() << "\n";
  os << "periodic points:  " << periodic_points << "\n";
  os << "components:       " << components << "\n";
  os << "distinct trees:   " << distinct_trees << "\n";
  os << "time (ms):        structural " << structural_ms << ", brute force " << brute_force_ms << "\n";
  os << "verdict:          " << (verdict ? (*verdict ? "isomorphic" : "MISMATCH") : "n/a") << "\n";
  return os.str();
}

bool SweepRow::verdict() const {
  return error.empty() && !routes.empty() &&
         std::all_of(routes.begin(), routes.end(), [](const auto& r) { return r.second; });
}

std::vector<SweepRow> sweep(const std::vector<GroupSpec>& specs, u64 t_first, u64 t_last, unsigned threads) {
  if (t_first == 0 || t_last < t_first) throw std::invalid_argument("t range must satisfy 1 <= first <= last");
  const u64 width = t_last - t_first + 1;
  std::vector<SweepRow> rows(specs.size() * width);
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      const auto& spec = specs[i];
      SweepRow* row = &rows[i * width];
      try {
        const auto group = make_group(spec);
        const auto flower = detect_flower_type(*group);
        for (u64 t = t_first; t <= t_last; ++t, ++row) {
          row->group = spec.to_string();
          row->t = t;
          row->order = group->order();
          row->flower = flower;
          try {
            const auto brute = brute_force_graph(*group, t);
            row->components = brute.components().size();
            row->distinct_trees = distinct_tree_count(brute);
            for (const auto& route : structural_routes(spec, t, flower))
              row->routes.emplace_back(route.provenance, is_isomorphic(route.graph, brute));
          } catch (const std::exception& e) {
            row->error = e.what();
          }
        }
      } catch (const std::exception& e) {
        for (u64 t = t_first; t <= t_last; ++t, ++row) {
          row->group = spec.to_string();
          row->t = t;
          row->error = e.what();
        }
      }
    }
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(threads ? threads : worker_threads(), specs.size()));
  std::vector<std::jthread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  pool.clear();
  return rows;
}

}  // namespace powergraph

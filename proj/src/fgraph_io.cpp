#include "powergraph/fgraph_io.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace powergraph {

using nlohmann::json;

namespace {

// Rotation of the component starting at its canonical position.
std::vector<RootedTree> canonical_rotation(const Component& c) {
  const auto trees = c.trees();
  const std::size_t m = trees.size();
  if (c.is_regular()) return {trees.begin(), trees.end()};
  std::size_t best = 0;
  for (std::size_t s = 1; s < m; ++s) {
    for (std::size_t k = 0; k < m; ++k) {
      const auto& a = trees[(s + k) % m].code();
      const auto& b = trees[(best + k) % m].code();
      if (a == b) continue;
      if (a < b) best = s;
      break;
    }
  }
  std::vector<RootedTree> out;
  for (std::size_t k = 0; k < m; ++k) out.push_back(trees[(best + k) % m]);
  return out;
}

std::string render_class(const ComponentClass& cls) {
  const auto& c = cls.representative;
  const std::string prefix = cls.multiplicity > 1 ? std::to_string(cls.multiplicity) + "x" : "";
  if (!c.is_regular()) {
    std::string inner;
    for (const auto& t : canonical_rotation(c)) inner += (inner.empty() ? "" : "; ") + describe_tree(t);
    return prefix + "Cyc[" + inner + "]";
  }
  const auto& tree = c.trees()[0];
  const auto m = c.cycle_length();
  if (tree.is_leaf()) return prefix + "Cyc(" + std::to_string(m) + ")";
  const std::string desc = describe_tree(tree);
  if (m == 1 && cls.multiplicity == 1) return "{" + desc + "}";
  return prefix + "Cyc(" + std::to_string(m) + "," + desc + ")";
}

}  // namespace

std::vector<ComponentClass> component_classes(const FunctionalGraph& graph) {
  std::map<std::string, ComponentClass> by_code;
  for (const auto& c : graph.components()) {
    auto [it, inserted] = by_code.try_emplace(c.canonical_code(), ComponentClass{c, 0});
    ++it->second.multiplicity;
  }
  std::vector<ComponentClass> out;
  for (auto& [code, cls] : by_code) out.push_back(std::move(cls));
  std::stable_sort(out.begin(), out.end(), [](const ComponentClass& a, const ComponentClass& b) {
    const auto& ta = a.representative.trees()[0];
    const auto& tb = b.representative.trees()[0];
    if (ta.node_count() != tb.node_count()) return ta.node_count() > tb.node_count();
    if (ta.code() != tb.code()) return ta.code() < tb.code();
    if (a.multiplicity != b.multiplicity) return a.multiplicity < b.multiplicity;
    return a.representative.cycle_length() < b.representative.cycle_length();
  });
  return out;
}

std::string to_text(const FunctionalGraph& graph) {
  if (graph.empty()) return "0";
  std::string out;
  for (const auto& cls : component_classes(graph)) {
    if (!out.empty()) out += " (+) ";
    out += render_class(cls);
  }
  return out;
}

json to_json_summary(const FunctionalGraph& graph) {
  json out = json::array();
  for (const auto& cls : component_classes(graph)) {
    const auto& c = cls.representative;
    json entry{{"multiplicity", cls.multiplicity}, {"cycle_length", c.cycle_length()}};
    if (c.is_regular()) {
      const auto& t = c.trees()[0];
      entry["tree_code"] = t.code();
      entry["tree_node_count"] = t.node_count();
      entry["tree_depth"] = t.depth();
      entry["tree"] = describe_tree(t);
    } else {
      json codes = json::array();
      for (const auto& t : canonical_rotation(c)) codes.push_back(t.code());
      entry["tree_code"] = nullptr;
      entry["cycle_tree_codes"] = std::move(codes);
    }
    out.push_back(std::move(entry));
  }
  return out;
}

FunctionalGraph from_json_summary(const json& input) {
  const json& summary = input.is_object() && input.contains("components") ? input.at("components") : input;
  if (!summary.is_array()) throw std::invalid_argument("graph summary must be a JSON array");
  FunctionalGraph g;
  for (const auto& entry : summary) {
    const auto k = entry.at("multiplicity").get<u64>();
    const auto m = entry.at("cycle_length").get<u64>();
    std::vector<RootedTree> trees;
    if (entry.contains("cycle_tree_codes")) {
      for (const auto& code : entry.at("cycle_tree_codes")) trees.push_back(parse_tree_code(code.get<std::string>()));
      if (trees.size() != m) throw std::invalid_argument("cycle_tree_codes length differs from cycle_length");
    } else {
      trees.assign(m, parse_tree_code(entry.at("tree_code").get<std::string>()));
    }
    const Component comp(std::move(trees));
    for (u64 i = 0; i < k; ++i) g.add(comp);
  }
  return g;
}

std::string to_dot(const FunctionalGraph& graph, std::string_view name) {
  std::vector<std::pair<std::string, const Component*>> ordered;
  for (const auto& c : graph.components()) ordered.emplace_back(c.canonical_code(), &c);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n";
  os << "  node [shape=point,width=0.08];\n";
  std::size_t next = 0;
  for (std::size_t ci = 0; ci < ordered.size(); ++ci) {
    const auto cycle = canonical_rotation(*ordered[ci].second);
    os << "  subgraph cluster_" << ci << " {\n    style=invis;\n";
    const std::size_t first = next;
    next += cycle.size();
    for (std::size_t i = 0; i < cycle.size(); ++i) os << "    v" << first + i << " [color=red];\n";
    for (std::size_t i = 0; i < cycle.size(); ++i)
      os << "    v" << first + i << " -> v" << first + (i + 1) % cycle.size() << ";\n";
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      std::vector<std::pair<RootedTree, std::size_t>> queue{{cycle[i], first + i}};
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const auto [t, id] = queue[head];
        for (const auto& child : t.children()) {
          os << "    v" << next << " -> v" << id << ";\n";
          queue.emplace_back(child, next++);
        }
      }
    }
    os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace powergraph

#include "powergraph/fgraph.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace powergraph {

namespace {

// Start index of the lexicographically least rotation of s.
std::size_t least_rotation(const std::vector<std::uint32_t>& s) {
  const std::size_t n = s.size();
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const auto a = s[(i + k) % n];
    const auto b = s[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b)
      i += k + 1;
    else
      j += k + 1;
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

}  // namespace

Component::Component(std::vector<RootedTree> cycle_trees) : trees_(std::move(cycle_trees)) {
  if (trees_.empty()) throw std::invalid_argument("a component needs a cycle of length >= 1");
}

std::size_t Component::vertex_count() const {
  std::size_t n = 0;
  for (const auto& t : trees_) n += t.node_count();
  return n;
}

bool Component::is_regular() const {
  return std::all_of(trees_.begin(), trees_.end(), [&](const RootedTree& t) { return t == trees_[0]; });
}

std::string Component::canonical_code() const {
  if (is_regular()) return "R" + std::to_string(trees_.size()) + ":" + trees_[0].code();
  std::vector<const std::string*> codes;
  for (const auto& t : trees_) codes.push_back(&t.code());
  auto distinct = codes;
  std::sort(distinct.begin(), distinct.end(), [](auto* a, auto* b) { return *a < *b; });
  distinct.erase(std::unique(distinct.begin(), distinct.end(), [](auto* a, auto* b) { return *a == *b; }),
                 distinct.end());
  std::vector<std::uint32_t> ranks;
  ranks.reserve(codes.size());
  for (auto* c : codes) {
    auto it = std::lower_bound(distinct.begin(), distinct.end(), c, [](auto* a, auto* b) { return *a < *b; });
    ranks.push_back(static_cast<std::uint32_t>(it - distinct.begin()));
  }
  const std::size_t start = least_rotation(ranks);
  std::string out = "[";
  for (std::size_t i = 0; i < codes.size(); ++i) out += *codes[(start + i) % codes.size()];
  out += "]";
  return out;
}

std::size_t FunctionalGraph::vertex_count() const {
  std::size_t n = 0;
  for (const auto& c : components_) n += c.vertex_count();
  return n;
}

std::size_t FunctionalGraph::periodic_count() const {
  std::size_t n = 0;
  for (const auto& c : components_) n += c.cycle_length();
  return n;
}

void FunctionalGraph::append(const FunctionalGraph& other) {
  components_.insert(components_.end(), other.components_.begin(), other.components_.end());
}

FunctionalGraph cyc(u64 m, const RootedTree& tree) {
  if (m == 0) throw std::domain_error("cycle length must be positive");
  FunctionalGraph g;
  g.add(Component(std::vector<RootedTree>(m, tree)));
  return g;
}

FunctionalGraph loop(const RootedTree& tree) { return cyc(1, tree); }

FunctionalGraph disjoint_union(std::span<const FunctionalGraph> graphs) {
  FunctionalGraph out;
  for (const auto& g : graphs) out.append(g);
  return out;
}

FunctionalGraph replicate(u64 k, const FunctionalGraph& graph) {
  FunctionalGraph out;
  for (u64 i = 0; i < k; ++i) out.append(graph);
  return out;
}

const RootedTree& MapDecomposition::hanging_tree(Vertex v) const {
  return graph.components()[component[v]].trees()[cycle_position[v]];
}

std::size_t MapDecomposition::period(Vertex v) const {
  return graph.components()[component[v]].cycle_length();
}

MapDecomposition decompose_map(std::span<const Vertex> successor) {
  const std::size_t n = successor.size();
  if (n > std::numeric_limits<Vertex>::max()) throw std::length_error("map too large");
  for (std::size_t v = 0; v < n; ++v)
    if (successor[v] >= n) throw std::out_of_range("successor index out of range");

  // Periodic points: walk each unvisited path until it meets known ground.
  enum : std::uint8_t { kUnseen, kOnPath, kDone };
  std::vector<std::uint8_t> state(n, kUnseen);
  std::vector<std::uint8_t> periodic(n, 0);
  std::vector<Vertex> path;
  for (std::size_t s = 0; s < n; ++s) {
    if (state[s] != kUnseen) continue;
    path.clear();
    Vertex v = static_cast<Vertex>(s);
    while (state[v] == kUnseen) {
      state[v] = kOnPath;
      path.push_back(v);
      v = successor[v];
    }
    if (state[v] == kOnPath) {
      Vertex w = v;
      do {
        periodic[w] = 1;
        w = successor[w];
      } while (w != v);
    }
    for (Vertex p : path) state[p] = kDone;
  }

  // Reverse edges of the non-periodic part in CSR form.
  std::vector<std::uint32_t> offset(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v)
    if (!periodic[v]) ++offset[successor[v] + 1];
  for (std::size_t v = 0; v < n; ++v) offset[v + 1] += offset[v];
  std::vector<Vertex> kids(offset[n]);
  {
    auto fill = offset;
    for (std::size_t v = 0; v < n; ++v)
      if (!periodic[v]) kids[fill[successor[v]]++] = static_cast<Vertex>(v);
  }

  MapDecomposition out;
  out.component.assign(n, 0);
  out.cycle_position.assign(n, 0);
  out.preperiod.assign(n, 0);

  // Breadth-first order from the periodic roots.
  std::vector<Vertex> order;
  order.reserve(n);
  for (std::size_t v = 0; v < n; ++v)
    if (periodic[v]) order.push_back(static_cast<Vertex>(v));
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Vertex v = order[head];
    for (auto k = offset[v]; k < offset[v + 1]; ++k) {
      out.preperiod[kids[k]] = out.preperiod[v] + 1;
      order.push_back(kids[k]);
    }
  }

  std::vector<RootedTree> tree(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    if (offset[v] == offset[v + 1]) continue;
    std::vector<RootedTree> children;
    children.reserve(offset[v + 1] - offset[v]);
    for (auto k = offset[v]; k < offset[v + 1]; ++k) children.push_back(std::move(tree[kids[k]]));
    tree[v] = RootedTree::from_children(std::move(children));
  }

  std::vector<Component> components;
  std::vector<std::uint8_t> assigned(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (!periodic[s] || assigned[s]) continue;
    std::vector<RootedTree> cycle;
    Vertex v = static_cast<Vertex>(s);
    do {
      assigned[v] = 1;
      out.component[v] = static_cast<std::uint32_t>(components.size());
      out.cycle_position[v] = static_cast<std::uint32_t>(cycle.size());
      cycle.push_back(std::move(tree[v]));
      v = successor[v];
    } while (v != s);
    components.emplace_back(std::move(cycle));
  }
  for (Vertex v : order) {
    if (periodic[v]) continue;
    out.component[v] = out.component[successor[v]];
    out.cycle_position[v] = out.cycle_position[successor[v]];
  }
  out.graph = FunctionalGraph(std::move(components));
  return out;
}

FunctionalGraph from_map(std::span<const Vertex> successor) { return decompose_map(successor).graph; }

std::vector<Vertex> to_map(const FunctionalGraph& graph) {
  const std::size_t n = graph.vertex_count();
  if (n > std::numeric_limits<Vertex>::max()) throw std::length_error("graph too large for an explicit map");
  std::vector<Vertex> succ(n);
  Vertex next = 0;
  std::vector<std::pair<RootedTree, Vertex>> stack;
  for (const auto& comp : graph.components()) {
    const Vertex first = next;
    const auto m = static_cast<Vertex>(comp.cycle_length());
    next += m;
    for (Vertex i = 0; i < m; ++i) {
      succ[first + i] = first + (i + 1) % m;
      stack.emplace_back(comp.trees()[i], first + i);
      while (!stack.empty()) {
        auto [t, id] = std::move(stack.back());
        stack.pop_back();
        for (const auto& child : t.children()) {
          succ[next] = id;
          stack.emplace_back(child, next++);
        }
      }
    }
  }
  return succ;
}

FunctionalGraph tensor(const FunctionalGraph& a, const FunctionalGraph& b) {
  const auto fa = to_map(a);
  const auto fb = to_map(b);
  const u64 size = checked_mul(fa.size(), fb.size());
  if (size > std::numeric_limits<Vertex>::max()) throw std::length_error("tensor product too large");
  std::vector<Vertex> succ(size);
  const auto nb = static_cast<Vertex>(fb.size());
  for (std::size_t i = 0; i < fa.size(); ++i)
    for (std::size_t j = 0; j < fb.size(); ++j) succ[i * nb + j] = fa[i] * nb + fb[j];
  return from_map(succ);
}

std::string canonical_form(const FunctionalGraph& graph) {
  std::vector<std::string> codes;
  codes.reserve(graph.components().size());
  for (const auto& c : graph.components()) codes.push_back(c.canonical_code());
  std::sort(codes.begin(), codes.end());
  std::string out;
  for (const auto& c : codes) {
    out += c;
    out += '|';
  }
  return out;
}

bool is_isomorphic(const FunctionalGraph& a, const FunctionalGraph& b) {
  if (a.components().size() != b.components().size()) return false;
  if (a.vertex_count() != b.vertex_count() || a.periodic_count() != b.periodic_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::size_t distinct_tree_count(const FunctionalGraph& graph) {
  std::set<std::string_view> codes;
  for (const auto& c : graph.components())
    for (const auto& t : c.trees()) codes.insert(t.code());
  return codes.size();
}

}  // namespace powergraph

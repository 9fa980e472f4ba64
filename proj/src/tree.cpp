#include "powergraph/tree.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace powergraph {

struct RootedTree::Node {
  std::vector<RootedTree> children;
  std::size_t nodes = 1;
  std::size_t depth = 0;
  std::string code;
  std::string label;
};

namespace {

constexpr std::size_t kMaxNodes = std::size_t{1} << 26;

bool needs_parens(const std::string& label) { return label.find(' ') != std::string::npos; }

std::string wrap(const std::string& label) {
  return needs_parens(label) ? "(" + label + ")" : label;
}

}  // namespace

RootedTree::RootedTree() {
  static const auto kLeaf = [] {
    auto n = std::make_shared<Node>();
    n->code = "()";
    n->label = "*";
    return std::shared_ptr<const Node>(std::move(n));
  }();
  node_ = kLeaf;
}

RootedTree RootedTree::from_children(std::vector<RootedTree> children, std::string label) {
  if (children.empty()) {
    RootedTree t;
    if (label.empty() || label == "*") return t;
  }
  std::sort(children.begin(), children.end(), [](const RootedTree& a, const RootedTree& b) {
    return a.node_ != b.node_ && a.code() < b.code();
  });
  auto node = std::make_shared<Node>();
  std::size_t code_len = 2;
  for (const auto& c : children) {
    node->nodes += c.node_count();
    node->depth = std::max(node->depth, c.depth() + 1);
    code_len += c.code().size();
  }
  if (node->nodes > kMaxNodes) throw std::length_error("rooted tree exceeds node limit");
  node->code.reserve(code_len);
  node->code.push_back('(');
  for (const auto& c : children) node->code += c.code();
  node->code.push_back(')');
  node->children = std::move(children);
  node->label = std::move(label);
  return RootedTree(std::shared_ptr<const Node>(std::move(node)));
}

std::span<const RootedTree> RootedTree::children() const { return node_->children; }
std::size_t RootedTree::node_count() const { return node_->nodes; }
std::size_t RootedTree::depth() const { return node_->depth; }
const std::string& RootedTree::code() const { return node_->code; }
const std::string& RootedTree::label() const { return node_->label; }

bool operator==(const RootedTree& a, const RootedTree& b) {
  return a.node_ == b.node_ || a.code() == b.code();
}

RootedTree leaf() { return RootedTree(); }

RootedTree enclose(Forest forest) {
  if (forest.empty()) return leaf();
  std::sort(forest.begin(), forest.end());
  std::string label = "<";
  bool labelled = true;
  for (std::size_t i = 0; i < forest.size() && labelled;) {
    std::size_t j = i;
    while (j < forest.size() && forest[j] == forest[i]) ++j;
    const std::string& l = forest[i].label();
    if (l.empty()) {
      labelled = false;
      break;
    }
    if (i > 0) label += " (+) ";
    if (j - i > 1) label += std::to_string(j - i) + "x";
    label += wrap(l);
    i = j;
  }
  label += ">";
  return RootedTree::from_children(std::move(forest), labelled ? label : std::string{});
}

RootedTree tree_sum(std::span<const RootedTree> trees) {
  std::vector<RootedTree> children;
  std::string label;
  bool labelled = true;
  for (const auto& t : trees) {
    children.insert(children.end(), t.children().begin(), t.children().end());
    if (t.is_leaf()) continue;
    if (t.label().empty()) labelled = false;
    if (!labelled) continue;
    if (!label.empty()) label += " + ";
    label += t.label().find("+_") != std::string::npos ? "(" + t.label() + ")" : t.label();
  }
  if (children.empty()) return leaf();
  return RootedTree::from_children(std::move(children), labelled ? label : std::string{});
}

RootedTree tree_sum(const RootedTree& a, const RootedTree& b) {
  const RootedTree parts[] = {a, b};
  return tree_sum(parts);
}

RootedTree scalar_dot(u64 k, const RootedTree& tree) {
  if (k == 0) throw std::domain_error("scalar_dot requires k >= 1");
  if (k == 1 || tree.is_leaf()) return tree;
  const auto kids = tree.children();
  if (checked_mul(k, tree.node_count() - 1) + 1 > kMaxNodes)
    throw std::length_error("rooted tree exceeds node limit");
  std::vector<RootedTree> children;
  children.reserve(kids.size() * k);
  for (u64 i = 0; i < k; ++i) children.insert(children.end(), kids.begin(), kids.end());
  std::string label;
  if (!tree.label().empty()) label = std::to_string(k) + "." + wrap(tree.label());
  return RootedTree::from_children(std::move(children), std::move(label));
}

RootedTree elementary_tree(const Sequence& seq) {
  const std::size_t d = seq.length();
  if (d == 0) return leaf();
  if (seq.product() > kMaxNodes) throw std::length_error("elementary tree exceeds node limit");
  // nu(i) uses the 1-based indexing of the layered recursion.
  auto nu = [&](std::size_t i) { return seq[i - 1]; };
  auto layer_children = [&](std::size_t k, u64 top_count, const std::vector<RootedTree>& layers) {
#ifdef POWERGRAPH_MUTATE_EQ1
    ++top_count;  // corrupted on purpose in the mutation-check build
#endif
    std::vector<RootedTree> children(top_count, layers[k - 1]);
    for (std::size_t i = 1; i < k; ++i)
      children.insert(children.end(), nu(i) - nu(i + 1), layers[i - 1]);
    return children;
  };
  std::vector<RootedTree> layers{leaf()};
  for (std::size_t k = 1; k < d; ++k)
    layers.push_back(RootedTree::from_children(layer_children(k, nu(k), layers)));
  return RootedTree::from_children(layer_children(d, nu(d) - 1, layers), "T" + seq.to_string());
}

std::optional<std::map<std::size_t, Layer>> homogeneous_layers(const RootedTree& tree) {
  std::map<std::size_t, Layer> layers;
  for (const auto& child : tree.children()) {
    auto [it, inserted] = layers.try_emplace(child.depth(), Layer{child, 0});
    if (!inserted && !(it->second.tree == child)) return std::nullopt;
    ++it->second.multiplicity;
  }
  return layers;
}

bool is_homogeneous(const RootedTree& tree) { return homogeneous_layers(tree).has_value(); }

RootedTree j_sum(const RootedTree& tree, std::size_t j, const RootedTree& addend) {
  const auto layers = homogeneous_layers(tree);
  if (!layers) throw std::domain_error("j-sum requires a homogeneous tree");
  const auto it = layers->find(j);
  if (it == layers->end())
    throw std::domain_error("j-sum: tree has no child subtree of depth " + std::to_string(j));
  std::vector<RootedTree> children;
  bool replaced = false;
  for (const auto& child : tree.children()) {
    if (!replaced && child.depth() == j) {
      children.push_back(tree_sum(child, addend));
      replaced = true;
    } else {
      children.push_back(child);
    }
  }
  std::string label;
  if (!tree.label().empty() && !addend.label().empty())
    label = wrap(tree.label()) + " +_" + std::to_string(j) + " " + wrap(addend.label());
  return RootedTree::from_children(std::move(children), std::move(label));
}

std::string canonical_code(const RootedTree& tree) { return tree.code(); }

RootedTree parse_tree_code(std::string_view code) {
  std::vector<std::vector<RootedTree>> stack;
  std::optional<RootedTree> result;
  for (std::size_t pos = 0; pos < code.size(); ++pos) {
    const char c = code[pos];
    if (c == '(') {
      if (result) throw std::invalid_argument("tree code has trailing data at position " + std::to_string(pos));
      stack.emplace_back();
    } else if (c == ')') {
      if (stack.empty()) throw std::invalid_argument("unbalanced ')' at position " + std::to_string(pos));
      auto node = RootedTree::from_children(std::move(stack.back()));
      stack.pop_back();
      if (stack.empty())
        result = std::move(node);
      else
        stack.back().push_back(std::move(node));
    } else {
      throw std::invalid_argument(std::string("unexpected character '") + c + "' at position " +
                                  std::to_string(pos));
    }
  }
  if (!result || !stack.empty()) throw std::invalid_argument("incomplete tree code");
  return *result;
}

std::optional<Sequence> elementary_sequence(const RootedTree& tree) {
  if (tree.is_leaf()) return Sequence{};
  const std::size_t d = tree.depth();
  std::vector<u64> count(d, 0);
  for (const auto& child : tree.children()) ++count[child.depth()];
  std::vector<u64> nu(d);
  nu[d - 1] = count[d - 1] + 1;
  for (std::size_t i = d - 1; i >= 1; --i) nu[i - 1] = nu[i] + count[i - 1];
  u64 product = 1;
  for (u64 x : nu) {
    if (__builtin_mul_overflow(product, x, &product) || product > tree.node_count()) return std::nullopt;
  }
  if (product != tree.node_count()) return std::nullopt;
  Sequence seq(std::move(nu));
  if (elementary_tree(seq) == tree) return seq;
  return std::nullopt;
}

std::string describe_tree(const RootedTree& tree) {
  if (!tree.label().empty()) return tree.label();
  if (auto seq = elementary_sequence(tree)) return seq->is_one() ? "*" : "T" + seq->to_string();
  std::vector<std::string> terms;
  const auto kids = tree.children();
  std::size_t leaves = 0;
  for (std::size_t i = 0; i < kids.size();) {
    std::size_t j = i;
    while (j < kids.size() && kids[j] == kids[i]) ++j;
    const u64 k = j - i;
    if (kids[i].is_leaf()) {
      leaves = k;
    } else {
      const auto single = RootedTree::from_children({kids[i]});
      std::string inner;
      if (auto seq = elementary_sequence(single))
        inner = "T" + seq->to_string();
      else
        inner = "<" + describe_tree(kids[i]) + ">";
      terms.push_back(k == 1 ? inner : std::to_string(k) + "." + inner);
    }
    i = j;
  }
  if (leaves > 0) terms.insert(terms.begin(), "T(" + std::to_string(leaves + 1) + ")");
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) out += (i ? " + " : "") + terms[i];
  return out;
}

std::string tree_to_dot(const RootedTree& tree, std::string_view name) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n  node [shape=point];\n";
  std::vector<std::pair<RootedTree, std::size_t>> queue{{tree, 0}};
  std::size_t next = 1;
  os << "  n0 [shape=circle,label=\"\"];\n";
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto [t, id] = queue[head];
    for (const auto& child : t.children()) {
      os << "  n" << next << " -> n" << id << ";\n";
      queue.emplace_back(child, next++);
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace powergraph

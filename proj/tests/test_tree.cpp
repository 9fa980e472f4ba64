#include <doctest.h>

#include <stdexcept>

#include "powergraph/tree.hpp"

using namespace powergraph;

namespace {
RootedTree T(std::initializer_list<u64> seq) { return elementary_tree(Sequence(seq)); }
RootedTree star(u64 k) { return enclose(Forest(k, leaf())); }
}  // namespace

TEST_CASE("elementary trees follow the layered recursion") {
  CHECK(T({}).is_leaf());
  CHECK(T({3}) == star(2));
  // T(4,2): one 4-leaf star plus two leaves under the root.
  CHECK(T({4, 2}) == enclose({star(4), leaf(), leaf()}));
  CHECK(T({2, 2}) == enclose({star(2)}));
  CHECK(T({2, 2, 2}) == enclose({enclose({star(2), star(2)})}));
  CHECK(T({4, 2}).node_count() == 8);
  CHECK(T({4, 2}).depth() == 2);
  CHECK(T({5, 3, 3}).node_count() == 45);
}

TEST_CASE("canonical codes") {
  CHECK(canonical_code(leaf()) == "()");
  CHECK(canonical_code(star(2)) == "(()())");
  CHECK(canonical_code(T({2, 2})) == "((()()))");
  // Child order does not matter.
  CHECK(enclose({star(3), leaf()}) == enclose({leaf(), star(3)}));
  for (const auto& t : {T({4, 2}), T({2, 2, 2}), T({6, 3, 3})}) CHECK(parse_tree_code(canonical_code(t)) == t);
  CHECK_THROWS_AS((void)parse_tree_code("(()"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_tree_code("()()"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_tree_code("(x)"), std::invalid_argument);
}

TEST_CASE("sums and scalar multiples") {
  CHECK(tree_sum(T({2}), T({3})) == T({4}));
  CHECK(tree_sum(leaf(), T({2, 2})) == T({2, 2}));
  CHECK(scalar_dot(3, T({2})) == T({4}));
  CHECK(scalar_dot(2, T({2, 2})) == enclose({star(2), star(2)}));
  CHECK(scalar_dot(5, leaf()).is_leaf());
  CHECK(scalar_dot(65, T({2, 2})).node_count() == 65 * 3 + 1);
  CHECK_THROWS_AS((void)scalar_dot(0, T({2})), std::domain_error);
}

TEST_CASE("homogeneity and j-sums") {
  CHECK(is_homogeneous(T({4, 2})));
  CHECK(is_homogeneous(T({2, 2, 2})));
  CHECK_FALSE(is_homogeneous(enclose({star(2), star(3)})));

  const auto q48 = j_sum(T({2, 2, 2}), 2, star(24));
  CHECK(q48.node_count() == 32);
  CHECK(q48.depth() == 3);
  // The depth-2 child of T(2,2,2) gains 24 extra leaves.
  Forest inner{star(2), star(2)};
  inner.insert(inner.end(), 24, leaf());
  CHECK(q48 == enclose({enclose(inner)}));
  CHECK(j_sum(T({4, 2}), 0, star(2)) == enclose({star(4), star(2), leaf()}));
  CHECK_THROWS_AS((void)j_sum(enclose({star(2), star(3)}), 1, star(1)), std::domain_error);
  CHECK_THROWS_AS((void)j_sum(T({4, 2}), 2, star(2)), std::domain_error);
}

TEST_CASE("elementary recognition and descriptions") {
  CHECK(elementary_sequence(T({4, 2})) == Sequence{4, 2});
  CHECK(elementary_sequence(leaf()) == Sequence{});
  CHECK_FALSE(elementary_sequence(enclose({star(2), star(3)})).has_value());
  CHECK(describe_tree(T({4, 2})) == "T(4,2)");
  // Unlabelled trees are recognized structurally.
  CHECK(describe_tree(parse_tree_code(T({2, 2}).code())) == "T(2,2)");
  CHECK(describe_tree(tree_sum(T({5}), scalar_dot(65, T({2, 2})))) == "T(5) + 65.T(2,2)");
  CHECK(tree_to_dot(T({3})).find("n2 -> n0") != std::string::npos);
}

TEST_CASE("every elementary tree with product <= 200 is recognized") {
  // Enumerate non-increasing sequences with terms >= 2.
  std::vector<std::vector<u64>> stack{{}};
  std::size_t checked = 0;
  while (!stack.empty()) {
    auto seq = stack.back();
    stack.pop_back();
    u64 product = 1;
    for (u64 v : seq) product *= v;
    const auto tree = elementary_tree(Sequence(seq));
    CHECK(tree.node_count() == product);
    CHECK(tree.depth() == seq.size());
    CHECK(elementary_sequence(parse_tree_code(tree.code())) == Sequence(seq));
    ++checked;
    const u64 top = seq.empty() ? 200 : seq.back();
    for (u64 v = 2; v <= top && product * v <= 200; ++v) {
      auto next = seq;
      next.push_back(v);
      stack.push_back(next);
    }
  }
  CHECK(checked > 100);
}

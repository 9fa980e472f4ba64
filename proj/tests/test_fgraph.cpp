#include <doctest.h>

#include <stdexcept>

#include <numeric>
#include <random>

#include "powergraph/fgraph.hpp"
#include "powergraph/fgraph_io.hpp"

using namespace powergraph;

namespace {

RootedTree T(std::initializer_list<u64> seq) { return elementary_tree(Sequence(seq)); }

FunctionalGraph join(std::initializer_list<FunctionalGraph> parts) {
  return disjoint_union(std::span<const FunctionalGraph>(parts.begin(), parts.size()));
}

std::vector<Vertex> random_map(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  std::vector<Vertex> succ(n);
  for (auto& s : succ) s = pick(rng);
  return succ;
}

// Same map with vertices renamed by a random permutation.
std::vector<Vertex> relabel(std::mt19937_64& rng, const std::vector<Vertex>& succ) {
  std::vector<Vertex> perm(succ.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Vertex> out(succ.size());
  for (Vertex v = 0; v < succ.size(); ++v) out[perm[v]] = perm[succ[v]];
  return out;
}

}  // namespace

TEST_CASE("doubling mod 4 is a single loop carrying T(2,2)") {
  const std::vector<Vertex> succ{0, 2, 0, 2};
  const auto g = from_map(succ);
  CHECK(is_isomorphic(g, loop(T({2, 2}))));
  CHECK(to_text(g) == "{T(2,2)}");
  const auto dec = decompose_map(succ);
  CHECK(dec.preperiod == std::vector<std::uint32_t>{0, 2, 1, 2});
  CHECK(dec.is_periodic(0));
  CHECK(dec.period(3) == 1);
  CHECK(dec.hanging_tree(0) == T({2, 2}));
}

TEST_CASE("identity and permutations") {
  const std::vector<Vertex> id{0, 1, 2, 3, 4};
  CHECK(is_isomorphic(from_map(id), replicate(5, cyc(1))));
  const std::vector<Vertex> rot{1, 2, 0, 4, 3};
  CHECK(is_isomorphic(from_map(rot), join({cyc(3), cyc(2)})));
  CHECK_FALSE(is_isomorphic(from_map(rot), cyc(5)));
  CHECK(from_map(std::vector<Vertex>{}).empty());
}

TEST_CASE("irregular components render and round-trip") {
  // 0 <-> 1 with 2 -> 0: the two cycle vertices carry different trees.
  const std::vector<Vertex> succ{1, 0, 0};
  const auto g = from_map(succ);
  REQUIRE(g.components().size() == 1);
  CHECK_FALSE(g.components()[0].is_regular());
  CHECK(to_text(g) == "Cyc[T(2); *]");
  CHECK(is_isomorphic(from_json_summary(to_json_summary(g)), g));
  CHECK(is_isomorphic(from_map(to_map(g)), g));
}

TEST_CASE("tensor products") {
  CHECK(is_isomorphic(tensor(cyc(3), cyc(2)), cyc(6)));
  CHECK(is_isomorphic(tensor(cyc(4), cyc(6)), replicate(2, cyc(12))));
  CHECK(is_isomorphic(tensor(loop(T({2})), loop(T({3}))), loop(T({6}))));
  CHECK(is_isomorphic(tensor(loop(T({4, 2})), cyc(2)), cyc(2, T({4, 2}))));
  CHECK(tensor(cyc(5, T({2})), cyc(3)).vertex_count() == 30);
}

TEST_CASE("text rendering follows the bracket notation") {
  const auto t42 = T({4, 2});
  CHECK(to_text(join({loop(t42), replicate(4, cyc(2, t42))})) == "{T(4,2)} (+) 4xCyc(2,T(4,2))");
  CHECK(to_text(join({cyc(2, T({3})), replicate(2, loop(T({3}))), replicate(6, cyc(2))})) ==
        "Cyc(2,T(3)) (+) 2xCyc(1,T(3)) (+) 6xCyc(2)");
  CHECK(to_text(replicate(3, cyc(1))) == "3xCyc(1)");
  CHECK(to_text(FunctionalGraph{}) == "0");
}

TEST_CASE("canonical form is invariant under relabelling") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 300; ++i) {
    const auto succ = random_map(rng, 1 + rng() % 60);
    const auto a = from_map(succ);
    const auto b = from_map(relabel(rng, succ));
    CHECK(canonical_form(a) == canonical_form(b));
    CHECK(a.vertex_count() == succ.size());
  }
}

TEST_CASE("random maps round-trip through to_map, JSON and DOT") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto g = from_map(random_map(rng, 1 + rng() % 40));
    CHECK(is_isomorphic(from_map(to_map(g)), g));
    CHECK(is_isomorphic(from_json_summary(to_json_summary(g)), g));
    CHECK(to_dot(g) == to_dot(from_map(to_map(g))));
  }
}

TEST_CASE("preperiod is the distance to the first periodic point") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const auto succ = random_map(rng, 1 + rng() % 50);
    const auto dec = decompose_map(succ);
    for (Vertex v = 0; v < succ.size(); ++v) {
      // A vertex is periodic iff it returns to itself within n steps.
      auto periodic = [&](Vertex x) {
        Vertex y = succ[x];
        for (std::size_t k = 0; k < succ.size() && y != x; ++k) y = succ[y];
        return y == x;
      };
      std::uint32_t steps = 0;
      Vertex x = v;
      while (!periodic(x)) {
        x = succ[x];
        ++steps;
      }
      CHECK(dec.preperiod[v] == steps);
    }
  }
}

TEST_CASE("distinct tree count and vertex bookkeeping") {
  const auto g = join({loop(T({2, 2})), cyc(3, T({2})), cyc(2)});
  CHECK(distinct_tree_count(g) == 3);
  CHECK(g.vertex_count() == 4 + 6 + 2);
  CHECK(g.periodic_count() == 1 + 3 + 2);
  CHECK_THROWS_AS((void)cyc(0), std::domain_error);
  CHECK_THROWS_AS(Component(std::vector<RootedTree>{}), std::invalid_argument);
}

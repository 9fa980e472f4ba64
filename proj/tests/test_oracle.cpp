#include <doctest.h>

#include <stdexcept>

#include <random>

#include "powergraph/acceptance.hpp"
#include "powergraph/fgraph_io.hpp"
#include "powergraph/oracle.hpp"

using namespace powergraph;

namespace {

RootedTree T(std::initializer_list<u64> seq) { return elementary_tree(Sequence(seq)); }

}  // namespace

TEST_CASE("brute force on small groups") {
  CHECK(is_isomorphic(brute_force_graph(*make_cyclic(4), 2), loop(T({2, 2}))));
  CHECK(to_text(brute_force_graph(*make_quaternion(6), 3)) == "Cyc(2,T(3)) (+) 2xCyc(1,T(3)) (+) 6xCyc(2)");
  // Every element of S3 = D3 squares into the rotation subgroup.
  const auto d3 = brute_force_graph(*make_dihedral(3), 2);
  CHECK(d3.vertex_count() == 6);
  CHECK(d3.periodic_count() == 3);
  CHECK(brute_force_graph(*make_pgl2(11), 1).periodic_count() == 1320);
}

TEST_CASE("power successors") {
  const auto g = make_semidirect(21, 3, 4);
  const auto succ = power_successors(*g, 7);
  REQUIRE(succ.size() == g->order());
  for (Element x = 0; x < g->order(); ++x) {
    Element acc = g->identity();
    for (int i = 0; i < 7; ++i) acc = g->multiply(acc, x);
    CHECK(succ[x] == acc);
  }
}

TEST_CASE("orbit table agrees with naive iteration") {
  std::mt19937_64 rng(5);
  for (const auto& spec : {"dihedral:20", "quaternion:32", "abelian:4x6", "pgl2:5", "semidirect:n=7,m=6,s=3"}) {
    const auto g = make_group(parse_group_spec(spec));
    for (u64 t : {2, 3, 6, 10}) {
      const auto succ = power_successors(*g, t);
      const auto table = orbit_table(*g, t);
      REQUIRE(table.size() == g->order());
      for (const auto& info : table) {
        // Walk until a repeat: the first repeated vertex is the cycle entry.
        std::vector<Element> path{info.element};
        std::vector<long> seen(g->order(), -1);
        seen[info.element] = 0;
        Element x = info.element;
        while (true) {
          x = succ[x];
          if (seen[x] >= 0) break;
          seen[x] = static_cast<long>(path.size());
          path.push_back(x);
        }
        CHECK(info.preperiod == static_cast<u64>(seen[x]));
        CHECK(info.period == path.size() - static_cast<u64>(seen[x]));
      }
    }
  }
}

TEST_CASE("tree census") {
  const auto census = tree_census(*make_cyclic(4), 2);
  REQUIRE(census.size() == 1);
  CHECK(census.begin()->first == canonical_code(T({2, 2})));
  CHECK(census.begin()->second == 1);

  const auto pgl = tree_census(*make_pgl2(11), 2);
  CHECK(pgl.size() == 4);
  u64 total = 0;
  for (const auto& [code, count] : pgl) total += count;
  CHECK(total == brute_force_graph(*make_pgl2(11), 2).periodic_count());
}

TEST_CASE("verify reports") {
  const auto ok = verify(parse_group_spec("abelian:6x12"), 14);
  REQUIRE(ok.verdict);
  CHECK(*ok.verdict);
  CHECK(ok.order == 72);
  CHECK(ok.components == 5);
  CHECK(ok.distinct_trees == 1);
  const auto json = ok.to_json();
  CHECK(json.at("verdict") == true);
  CHECK(json.at("structural").at("provenance") == "abelian formula");

  // Semidihedral group of order 16: no theorem, so only the enumeration.
  const auto none = verify(parse_group_spec("semidirect:n=8,m=2,s=3"), 2);
  CHECK_FALSE(none.verdict.has_value());
  CHECK_FALSE(none.structural.has_value());
  CHECK_FALSE(none.notice.empty());
  CHECK(none.to_json().at("verdict").is_null());
  CHECK(none.brute_force.vertex_count() == 16);
}

TEST_CASE("central tree of a flower group matches the pseudo-flower") {
  for (const auto& spec : {"quaternion:48", "dihedral:24", "semidirect:n=21,m=3,s=4", "pgl2:7", "abelian:3x3"}) {
    const auto g = make_group(parse_group_spec(spec));
    const auto flower = flower_decompose(*g);
    REQUIRE(flower);
    for (u64 t = 1; t <= 16; ++t) {
      const auto d = decompose_map(power_successors(*g, t));
      CHECK(d.hanging_tree(g->identity()) == central_tree(flower->type(), t));
    }
  }
}

TEST_CASE("central elements carry the central tree") {
  // x -> x z is a graph automorphism for z central with z^t = z.
  for (const auto& spec : {"quaternion:40", "dihedral:12", "pgl2:4"}) {
    const auto g = make_group(parse_group_spec(spec));
    for (u64 t = 1; t <= 12; ++t) {
      const auto d = decompose_map(power_successors(*g, t));
      const auto root = d.hanging_tree(g->identity());
      for (Element z : center(*g))
        if (power(*g, z, t) == z) CHECK(d.hanging_tree(z) == root);
    }
  }
}

TEST_CASE("sweep rows") {
  const std::vector<GroupSpec> specs{parse_group_spec("cyclic:12"), parse_group_spec("quaternion:16"),
                                     parse_group_spec("semidirect:n=8,m=2,s=3")};
  const auto rows = sweep(specs, 1, 6, 2);
  REQUIRE(rows.size() == 18);
  for (std::size_t i = 0; i < 12; ++i) {
    CHECK(rows[i].applicable());
    CHECK(rows[i].verdict());
  }
  CHECK(rows[6].flower.has_value());
  for (std::size_t i = 12; i < 18; ++i) {
    CHECK_FALSE(rows[i].applicable());
    CHECK(rows[i].error.empty());
  }
  CHECK(rows[0].t == 1);
  CHECK(rows[5].t == 6);
}

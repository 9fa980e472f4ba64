#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <random>

#include "powergraph/group_spec.hpp"
#include "powergraph/groups.hpp"

using namespace powergraph;

namespace {

std::vector<std::size_t> sizes(const std::vector<ElementSet>& sets) {
  std::vector<std::size_t> out;
  for (const auto& s : sets) out.push_back(s.size());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t count_of(const std::vector<std::size_t>& v, std::size_t x) {
  return static_cast<std::size_t>(std::count(v.begin(), v.end(), x));
}

// A subgroup given by its sorted elements, re-indexed densely.
class Subgroup final : public FiniteGroup {
 public:
  Subgroup(const FiniteGroup& parent, ElementSet elements) : parent_(parent), elements_(std::move(elements)) {}
  std::size_t order() const override { return elements_.size(); }
  Element multiply(Element a, Element b) const override { return local(parent_.multiply(elements_[a], elements_[b])); }
  Element identity() const override { return local(parent_.identity()); }
  std::string label(Element g) const override { return parent_.label(elements_[g]); }
  std::string name() const override { return "subgroup of " + parent_.name(); }
  Element global(Element g) const { return elements_[g]; }
  Element local(Element g) const {
    return static_cast<Element>(std::lower_bound(elements_.begin(), elements_.end(), g) - elements_.begin());
  }

 private:
  const FiniteGroup& parent_;
  ElementSet elements_;
};

ElementSet closure(const FiniteGroup& g, Element a, Element b) {
  std::vector<std::uint8_t> in(g.order(), 0);
  ElementSet out{g.identity()};
  in[g.identity()] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Element gen : {a, b}) {
      const Element x = g.multiply(out[i], gen);
      if (!in[x]) {
        in[x] = 1;
        out.push_back(x);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("group orders") {
  CHECK(make_cyclic(12)->order() == 12);
  CHECK(make_abelian({6, 12})->order() == 72);
  CHECK(make_units_mod(91)->order() == 72);
  CHECK(make_units_mod(1)->order() == 1);
  CHECK(make_dihedral(6)->order() == 12);
  CHECK(make_quaternion(6)->order() == 24);
  CHECK(make_semidirect(65, 4, 8)->order() == 260);
  CHECK(make_pgl2(5)->order() == 120);
  CHECK(make_pgl2(4)->order() == 60);
  CHECK(make_pgl2(9)->order() == 720);
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(make_quaternion(1), std::invalid_argument);
  CHECK_THROWS_AS(make_semidirect(7, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_pgl2(6), std::invalid_argument);
  CHECK_THROWS_AS(make_pgl2(32), std::invalid_argument);
  CHECK_THROWS_AS(make_cyclic(0), std::invalid_argument);
  CHECK_THROWS_AS(make_cyclic(u64{1} << 25), std::invalid_argument);
  CHECK_THROWS_AS(make_abelian({}), std::invalid_argument);
}

TEST_CASE("group axioms hold on every family") {
  const std::vector<std::unique_ptr<FiniteGroup>> groups = [] {
    std::vector<std::unique_ptr<FiniteGroup>> v;
    v.push_back(make_cyclic(30));
    v.push_back(make_abelian({2, 6, 4}));
    v.push_back(make_units_mod(360));
    v.push_back(make_dihedral(9));
    v.push_back(make_quaternion(5));
    v.push_back(make_semidirect(13, 3, 3));
    for (u64 q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27}) v.push_back(make_pgl2(q));
    return v;
  }();
  for (const auto& g : groups) {
    CAPTURE(g->name());
    CHECK(spot_check_group_axioms(*g, 500, 3));
    // Exhaustive associativity on the small ones.
    if (g->order() <= 40) {
      bool assoc = true;
      for (Element a = 0; a < g->order(); ++a)
        for (Element b = 0; b < g->order(); ++b)
          for (Element c = 0; c < g->order(); ++c)
            assoc = assoc && g->multiply(g->multiply(a, b), c) == g->multiply(a, g->multiply(b, c));
      CHECK(assoc);
    }
  }
}

TEST_CASE("power") {
  const auto c6 = make_cyclic(6);
  CHECK(power(*c6, 1, 14) == 2);
  CHECK(power(*c6, c6->identity(), 9) == c6->identity());
  const auto q24 = make_quaternion(6);
  // b^2 = a^n; b is stored at index 2n and a^i at index i.
  CHECK(power(*q24, 12, 2) == 6);
  CHECK(q24->label(12) == "a^0 b");
  CHECK_THROWS_AS((void)power(*q24, 1, 0), std::domain_error);
  const auto u = make_units_mod(91);
  CHECK(u->label(power(*u, 1, 5)) == "32");  // residue 2 sits at index 1
}

TEST_CASE("element orders and cyclicity") {
  CHECK(is_cyclic(*make_cyclic(10)));
  CHECK(is_cyclic(*make_units_mod(50)));
  CHECK_FALSE(is_cyclic(*make_units_mod(91)));
  CHECK(is_cyclic(*make_abelian({3, 4})));
  CHECK(is_abelian(*make_abelian({2, 2})));
  CHECK_FALSE(is_abelian(*make_dihedral(3)));
  const auto orders = element_orders(*make_quaternion(2));
  CHECK(std::count(orders.begin(), orders.end(), 4) == 6);
  CHECK(units_mod_factors(91) == std::vector<u64>{6, 12});
  CHECK(units_mod_factors(32) == std::vector<u64>{2, 8});
  CHECK(units_mod_factors(2) == std::vector<u64>{1});
}

TEST_CASE("maximal cyclic subgroups") {
  const auto c6 = mu_subgroups(*make_cyclic(6));
  REQUIRE(c6.size() == 1);
  CHECK(c6[0].size() == 6);

  CHECK(sizes(mu_subgroups(*make_quaternion(2))) == std::vector<std::size_t>{4, 4, 4});

  const auto pgl = sizes(mu_subgroups(*make_pgl2(5)));
  CHECK(pgl.size() == 31);
  CHECK(count_of(pgl, 4) == 15);
  CHECK(count_of(pgl, 6) == 10);
  CHECK(count_of(pgl, 5) == 6);
}

TEST_CASE("flower decomposition") {
  const auto q24 = flower_decompose(*make_quaternion(6));
  REQUIRE(q24);
  CHECK(q24->type() == FlowerType{2, {4, 4, 4, 4, 4, 4, 12}});

  const auto d12 = flower_decompose(*make_semidirect(6, 2, 5));
  REQUIRE(d12);
  CHECK(d12->type() == FlowerType{1, {2, 2, 2, 2, 2, 2, 6}});

  CHECK_FALSE(flower_decompose(*make_abelian({2, 4})).has_value());
  CHECK_THROWS_AS((void)flower_decompose(*make_cyclic(6)), std::domain_error);

  const auto klein = flower_decompose(*make_abelian({2, 2}));
  REQUIRE(klein);
  CHECK(klein->type() == FlowerType{1, {2, 2, 2}});
}

TEST_CASE("flower types") {
  const FlowerType q8{2, {4, 4, 4}};
  CHECK(q8.element_count() == 8);
  CHECK(q8.to_string() == "(2; 4,4,4)");
  CHECK_NOTHROW(q8.validate());
  CHECK_THROWS_AS(FlowerType({3, {4, 6}}).validate(), std::domain_error);
  CHECK_THROWS_AS(FlowerType({2, {}}).validate(), std::domain_error);
}

TEST_CASE("center") {
  CHECK(center(*make_abelian({2, 6})).size() == 12);
  const auto q24 = center(*make_quaternion(6));
  CHECK(q24 == ElementSet{0, 6});
  const auto pgl = make_pgl2(5);
  CHECK(center(*pgl) == ElementSet{pgl->identity()});
  CHECK(pgl->label(pgl->identity()) == "[[1,0],[0,1]]");
}

TEST_CASE("compatible generators") {
  for (const auto& g : {make_quaternion(6), make_semidirect(65, 4, 8), make_pgl2(5), make_dihedral(8)}) {
    CAPTURE(g->name());
    const auto flower = flower_decompose(*g);
    REQUIRE(flower);
    const auto gens = compatible_generators(*g, *flower);
    REQUIRE(gens.size() == flower->petals.size());
    const u64 c0 = flower->pistil.size();
    const Element target = power(*g, gens[0], flower->petals[0].size() / c0);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      CHECK(cyclic_subgroup(*g, gens[i]) == flower->petals[i]);
      CHECK(power(*g, gens[i], flower->petals[i].size() / c0) == target);
    }
  }
}

TEST_CASE("noncyclic subgroups of Q4n are flower groups with pistil H meet C0") {
  std::mt19937_64 rng(11);
  std::size_t tested = 0;
  for (u64 n : {4, 6, 8, 9, 12}) {
    const auto q = make_quaternion(n);
    const auto flower = flower_decompose(*q);
    REQUIRE(flower);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(q->order() - 1));
    for (int i = 0; i < 60; ++i) {
      const auto elements = closure(*q, pick(rng), pick(rng));
      const Subgroup h(*q, elements);
      if (is_cyclic(h)) continue;
      ++tested;
      const auto sub = flower_decompose(h);
      REQUIRE(sub);
      ElementSet pistil;
      for (Element x : sub->pistil) pistil.push_back(h.global(x));
      std::sort(pistil.begin(), pistil.end());
      ElementSet meet;
      std::set_intersection(elements.begin(), elements.end(), flower->pistil.begin(), flower->pistil.end(),
                            std::back_inserter(meet));
      CHECK(pistil == meet);
    }
  }
  CHECK(tested > 50);
}

TEST_CASE("semidirect flower condition gives type (1; m x n, n)") {
  struct Case {
    u64 n, m, s;
  };
  for (const auto [n, m, s] : {Case{65, 4, 8}, Case{7, 3, 2}, Case{7, 6, 3}, Case{9, 2, 8}, Case{21, 3, 4}}) {
    CAPTURE(n);
    CAPTURE(s);
    const auto flower = flower_decompose(*make_semidirect(n, m, s));
    REQUIRE(flower);
    FlowerType expected{1, std::vector<u64>(n, m)};
    expected.petals.push_back(n);
    std::sort(expected.petals.begin(), expected.petals.end());
    CHECK(flower->type() == expected);
  }
}

TEST_CASE("group spec parsing") {
  CHECK(parse_group_spec("cyclic:12") == GroupSpec{GroupFamily::Cyclic, {12}});
  CHECK(parse_group_spec("abelian:6x12") == GroupSpec{GroupFamily::Abelian, {6, 12}});
  CHECK(parse_group_spec("units:91") == GroupSpec{GroupFamily::Units, {91}});
  CHECK(parse_group_spec("dihedral:12") == GroupSpec{GroupFamily::Dihedral, {6}});
  CHECK(parse_group_spec("quaternion:24") == GroupSpec{GroupFamily::Quaternion, {6}});
  CHECK(parse_group_spec("semidirect:n=65,m=4,s=8") == GroupSpec{GroupFamily::Semidirect, {65, 4, 8}});
  CHECK(parse_group_spec("pgl2:5") == GroupSpec{GroupFamily::PGL2, {5}});
  for (const char* text : {"cyclic:12", "abelian:2x3x4", "dihedral:12", "quaternion:48", "semidirect:n=65,m=4,s=8"})
    CHECK(parse_group_spec(text).to_string() == text);
  CHECK(make_group(parse_group_spec("quaternion:24"))->order() == 24);
  CHECK(make_group(parse_group_spec("dihedral:12"))->order() == 12);
}

TEST_CASE("group spec errors carry a position") {
  auto position_of = [](const char* text) -> std::size_t {
    try {
      (void)parse_group_spec(text);
    } catch (const SpecParseError& e) {
      return e.position();
    }
    return 999;
  };
  CHECK(position_of("cyclic") == 6);
  CHECK(position_of("cyclicx:4") == 0);
  CHECK(position_of("cyclic:") == 7);
  CHECK(position_of("cyclic:0") == 7);
  CHECK(position_of("abelian:6x") == 10);
  CHECK(position_of("abelian:6y12") == 9);
  CHECK(position_of("quaternion:25") == 11);
  CHECK(position_of("dihedral:7") == 9);
  CHECK(position_of("semidirect:n=65,s=4,m=8") == 16);
  CHECK(position_of("pgl2:5 ") == 6);
}

#include "powergraph/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>

#include "powergraph/fgraph_io.hpp"
#include "powergraph/oracle.hpp"
#include "powergraph/structural.hpp"

namespace powergraph {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::size_t kMinPropertyCases = 1000;
constexpr u64 kSweepMaxT = 24;

FunctionalGraph join(std::initializer_list<FunctionalGraph> parts) {
  return disjoint_union(std::span<const FunctionalGraph>(parts.begin(), parts.size()));
}

RootedTree T(std::initializer_list<u64> seq) { return elementary_tree(Sequence(seq)); }

// Collects sub-checks; the first failure is kept for the detail line.
struct Check {
  bool ok = true;
  std::string first_failure;
  void require(bool condition, const std::string& what) {
    if (!condition && ok) first_failure = what;
    ok = ok && condition;
  }
};

// Criteria 1-6 share this shape: structural result matches the expected
// graph, the brute-force graph matches both, and the vertex count is right.
Check golden(const std::string& spec_text, u64 t, const FunctionalGraph& expected, std::size_t vertices,
             const FiniteGroup* oracle_group = nullptr) {
  Check c;
  const auto spec = parse_group_spec(spec_text);
  const auto result = structural_graph(spec, t);
  c.require(result.has_value(), "no structural result for " + spec_text);
  if (!result) return c;
  const auto group = make_group(spec);
  const auto brute = brute_force_graph(oracle_group ? *oracle_group : *group, t);
  c.require(is_isomorphic(result->graph, expected), "structural graph differs from the expected graph: " +
                                                        to_text(result->graph));
  c.require(is_isomorphic(brute, expected), "brute-force graph differs from the expected graph: " + to_text(brute));
  c.require(brute.vertex_count() == vertices, "brute-force graph has " + std::to_string(brute.vertex_count()) +
                                                  " vertices, expected " + std::to_string(vertices));
  return c;
}

struct FlowerCase {
  std::unique_ptr<FiniteGroup> group;
  std::string name;
  FlowerDecomposition flower;
};

std::vector<FlowerCase> flower_corpus(const std::vector<GroupSpec>& specs) {
  std::vector<FlowerCase> out;
  for (const auto& spec : specs) {
    auto group = make_group(spec);
    if (is_cyclic(*group)) continue;
    auto flower = flower_decompose(*group);
    if (flower) out.push_back({std::move(group), spec.to_string(), std::move(*flower)});
  }
  return out;
}

struct PropertyOutcome {
  std::string name;
  std::size_t cases = 0;
  Check check;
};

PropertyOutcome elementary_law(std::mt19937_64& rng) {
  PropertyOutcome out{"elementary-tree law", 0, {}};
  std::uniform_int_distribution<int> len_dist(1, 5), term_dist(2, 7);
  std::uniform_int_distribution<u64> n_dist(1, 300), t_dist(1, 30);
  for (; out.cases < kMinPropertyCases; ++out.cases) {
    std::vector<u64> terms;
    u64 product = 1;
    for (int i = len_dist(rng); i > 0; --i) {
      const u64 v = std::min<u64>(term_dist(rng), terms.empty() ? 7 : terms.back());
      if (product * v > 20000) break;
      terms.push_back(v);
      product *= v;
    }
    std::sort(terms.rbegin(), terms.rend());
    const Sequence seq(terms);
    const auto tree = elementary_tree(seq);
    out.check.require(tree.node_count() == seq.product() && tree.depth() == seq.length(),
                      "T" + seq.to_string() + " has wrong node count or depth");

    // Cyclic groups: the tree at the identity is T_{gcd_t(n)} and there are omega periodic points.
    const u64 n = n_dist(rng), t = t_dist(rng);
    const auto group = make_cyclic(n);
    const auto dec = decompose_map(power_successors(*group, t));
    const auto split = nu_omega_split(n, t);
    out.check.require(dec.hanging_tree(0) == elementary_tree(iterated_gcd(n, t)) &&
                          dec.graph.periodic_count() == split.omega,
                      "cyclic law fails for n=" + std::to_string(n) + ", t=" + std::to_string(t));
  }
  return out;
}

PropertyOutcome cycle_tensor_law(std::mt19937_64& rng) {
  PropertyOutcome out{"cycle tensor law", 0, {}};
  std::uniform_int_distribution<u64> r_dist(1, 8);
  for (; out.cases < kMinPropertyCases; ++out.cases) {
    const u64 a = r_dist(rng), b = r_dist(rng);
    out.check.require(is_isomorphic(tensor(cyc(a), cyc(b)), replicate(gcd(a, b), cyc(lcm(a, b)))),
                      "Cyc(" + std::to_string(a) + ") x Cyc(" + std::to_string(b) + ")");
  }
  return out;
}

PropertyOutcome loop_tensor_law(std::mt19937_64& rng) {
  PropertyOutcome out{"loop tensor law", 0, {}};
  std::uniform_int_distribution<u64> n_dist(1, 64), t_dist(1, 24);
  for (; out.cases < kMinPropertyCases; ++out.cases) {
    const u64 t = t_dist(rng);
    const auto u = iterated_gcd(n_dist(rng), t);
    const auto v = iterated_gcd(n_dist(rng), t);
    const auto lhs = tensor(loop(elementary_tree(u)), loop(elementary_tree(v)));
    out.check.require(is_isomorphic(lhs, loop(elementary_tree(sequence_product(u, v)))),
                      "{T" + u.to_string() + "} x {T" + v.to_string() + "}");
  }
  return out;
}

struct TypeCase {
  FlowerType type;
  u64 t;
};

std::vector<TypeCase> random_type_corpus() {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<u64> t_dist(1, 24);
  std::vector<TypeCase> out;
  for (std::size_t i = 0; i < kMinPropertyCases; ++i) {
    auto type = random_flower_type(rng, 500);
    out.push_back({std::move(type), t_dist(rng)});
  }
  return out;
}

PropertyOutcome central_node_law(const std::vector<TypeCase>& corpus) {
  PropertyOutcome out{"central-tree node count", 0, {}};
  for (const auto& [type, t] : corpus) {
    ++out.cases;
    const u64 nu0 = nu_omega_split(type.pistil, t).nu;
    u64 expected = 0;
    for (u64 c : type.petals) expected += nu_omega_split(c, t).nu;
    expected -= (type.petals.size() - 1) * nu0;
    const auto tree = central_tree(type, t);
    out.check.require(tree.node_count() == expected, type.to_string() + ", t=" + std::to_string(t));
    out.check.require(flower_graph(type, t).vertex_count() == type.element_count(),
                      "flower graph size for " + type.to_string() + ", t=" + std::to_string(t));
  }
  return out;
}

PropertyOutcome tree_count_bound(const std::vector<FlowerCase>& corpus) {
  PropertyOutcome out{"tree-count bound", 0, {}};
  for (const auto& fc : corpus)
    for (u64 t = 1; t <= kSweepMaxT; ++t, ++out.cases) {
      const auto count = distinct_tree_count(brute_force_graph(*fc.group, t));
      out.check.require(count <= fc.flower.petals.size() + 1, fc.name + ", t=" + std::to_string(t));
    }
  return out;
}

PropertyOutcome petal_stability(const std::vector<FlowerCase>& corpus) {
  PropertyOutcome out{"petal stability", 0, {}};
  constexpr std::uint32_t kPistil = ~std::uint32_t{0};
  for (const auto& fc : corpus) {
    if (fc.group->order() > 200) continue;
    std::vector<std::uint32_t> petal_of(fc.group->order(), kPistil);
    for (std::uint32_t i = 0; i < fc.flower.petals.size(); ++i)
      for (Element g : fc.flower.petals[i])
        if (!std::binary_search(fc.flower.pistil.begin(), fc.flower.pistil.end(), g)) petal_of[g] = i;
    for (u64 t = 1; t <= kSweepMaxT; ++t, ++out.cases) {
      const auto succ = power_successors(*fc.group, t);
      bool stable = true;
      for (Element g = 0; g < succ.size(); ++g)
        if (petal_of[succ[g]] != kPistil && petal_of[g] != petal_of[succ[g]]) stable = false;
      out.check.require(stable, fc.name + ", t=" + std::to_string(t));
    }
  }
  return out;
}

bool pistil_central(const FiniteGroup& group, const FlowerDecomposition& flower) {
  for (Element z : flower.pistil)
    for (Element g = 0; g < group.order(); ++g)
      if (group.multiply(z, g) != group.multiply(g, z)) return false;
  return true;
}

PropertyOutcome pistil_in_center(const std::vector<FlowerCase>& corpus) {
  PropertyOutcome out{"pistil in center", 0, {}};
  for (const auto& fc : corpus) {
    ++out.cases;
    out.check.require(pistil_central(*fc.group, fc.flower), fc.name);
  }
  // Top up with random members of the nonabelian families.
  std::mt19937_64 rng(7);
  const auto semis = semidirect_instances(1000);
  std::uniform_int_distribution<int> family(0, 3);
  std::uniform_int_distribution<u64> dn(3, 150), qn(2, 100);
  std::uniform_int_distribution<std::size_t> si(0, semis.size() - 1), pi(0, 6);
  const u64 pgl_q[] = {3, 4, 5, 7, 8, 9, 11};
  while (out.cases < kMinPropertyCases) {
    GroupSpec spec;
    switch (family(rng)) {
      case 0: spec = {GroupFamily::Dihedral, {dn(rng)}}; break;
      case 1: spec = {GroupFamily::Quaternion, {qn(rng)}}; break;
      case 2: spec = semis[si(rng)]; break;
      default: spec = {GroupFamily::PGL2, {pgl_q[pi(rng)]}}; break;
    }
    const auto group = make_group(spec);
    const auto flower = flower_decompose(*group);
    ++out.cases;
    out.check.require(flower && pistil_central(*group, *flower), spec.to_string());
  }
  return out;
}

CriterionResult run(int id, std::string title, const std::function<Check(std::string&)>& body) {
  CriterionResult r{id, std::move(title), false, {}, 0};
  const auto start = Clock::now();
  try {
    std::string detail;
    const auto check = body(detail);
    r.passed = check.ok;
    r.detail = check.ok ? detail : check.first_failure;
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

}  // namespace

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << (r.passed ? "[PASS]" : "[FAIL]") << " criterion " << r.id << ": " << r.title;
  if (!r.detail.empty()) os << " (" << r.detail << ")";
  os << " [" << r.seconds << " s]";
  return os.str();
}

std::vector<GroupSpec> semidirect_instances(u64 max_order) {
  std::vector<GroupSpec> out;
  for (u64 n = 2; 2 * n <= max_order; ++n)
    for (u64 m = 2; n * m <= max_order; ++m)
      for (u64 s = 2; s <= n + 1; ++s)
        if (semidirect_flower_condition(n, m, s)) out.push_back({GroupFamily::Semidirect, {n, m, s}});
  return out;
}

std::vector<GroupSpec> acceptance_corpus() {
  std::vector<GroupSpec> out;
  for (u64 n = 1; n <= 60; ++n) out.push_back({GroupFamily::Cyclic, {n}});
  for (u64 a = 2; a <= 12; ++a) {
    out.push_back({GroupFamily::Abelian, {a}});
    for (u64 b = a; b <= 12; ++b) {
      out.push_back({GroupFamily::Abelian, {a, b}});
      for (u64 c = b; c <= 12; ++c) out.push_back({GroupFamily::Abelian, {a, b, c}});
    }
  }
  for (u64 n = 3; n <= 30; ++n) out.push_back({GroupFamily::Dihedral, {n}});
  for (u64 n = 2; n <= 15; ++n) out.push_back({GroupFamily::Quaternion, {n}});
  for (auto& spec : semidirect_instances(400)) out.push_back(std::move(spec));
  for (u64 q : {3, 4, 5, 7, 8, 9}) out.push_back({GroupFamily::PGL2, {q}});
  return out;
}

FlowerType random_flower_type(std::mt19937_64& rng, u64 max_sum) {
  std::uniform_int_distribution<u64> c0_dist(1, 12);
  FlowerType type{c0_dist(rng), {}};
  const u64 units = max_sum / type.pistil;  // petal orders are multiples of c0
  std::uniform_int_distribution<u64> k_dist(1, std::min<u64>(8, units));
  const u64 k = k_dist(rng);
  u64 left = units;
  for (u64 i = 0; i < k; ++i) {
    const u64 reserve = k - i - 1;
    const u64 cap = std::max<u64>(1, std::min<u64>(left - reserve, 2 * left / (k - i)));
    const u64 r = std::uniform_int_distribution<u64>(1, cap)(rng);
    type.petals.push_back(r * type.pistil);
    left -= r;
  }
  std::sort(type.petals.begin(), type.petals.end());
  return type;
}

std::vector<CriterionResult> run_acceptance(std::ostream* log) {
  std::vector<CriterionResult> results;
  const auto suite_start = Clock::now();
  auto record = [&](CriterionResult r) {
    if (log) *log << format_result(r) << std::endl;
    results.push_back(std::move(r));
  };

  record(run(1, "abelian C6 x C12 and Z_91^* at t=14", [](std::string& detail) {
    const auto t42 = T({4, 2});
    const auto expected = join({loop(t42), replicate(4, cyc(2, t42))});
    const auto units = make_units_mod(91);
    auto c = golden("abelian:6x12", 14, expected, 72, units.get());
    const auto text = to_text(structural_graph(parse_group_spec("abelian:6x12"), 14)->graph);
    c.require(text == "{T(4,2)} (+) 4xCyc(2,T(4,2))", "rendered as " + text);
    detail = text;
    return c;
  }));

  record(run(2, "Q24 at t=3", [](std::string& detail) {
    const auto t3 = T({3});
    const auto expected = join({cyc(2, t3), replicate(2, loop(t3)), replicate(6, cyc(2))});
    auto c = golden("quaternion:24", 3, expected, 24);
    const auto text = to_text(structural_graph(parse_group_spec("quaternion:24"), 3)->graph);
    c.require(text == "Cyc(2,T(3)) (+) 2xCyc(1,T(3)) (+) 6xCyc(2)", "rendered as " + text);
    detail = text;
    return c;
  }));

  record(run(3, "Q48 at t=10", [](std::string& detail) {
    const auto t222 = T({2, 2, 2});
    const std::size_t alpha = two_adic_valuation(12);
    const auto expected = join({replicate(2, loop(t222)), loop(j_sum(t222, alpha, enclose(Forest(24, leaf()))))});
    auto c = golden("quaternion:48", 10, expected, 48);
    c.require(alpha == 2, "alpha = " + std::to_string(alpha));
    detail = to_text(structural_graph(parse_group_spec("quaternion:48"), 10)->graph);
    return c;
  }));

  record(run(4, "C65 x|_8 C4 at t=10", [](std::string& detail) {
    const auto t5 = T({5});
    const auto expected = join({replicate(2, cyc(6, t5)), loop(tree_sum(t5, scalar_dot(65, T({2, 2}))))});
    auto c = golden("semidirect:n=65,m=4,s=8", 10, expected, 260);
    detail = to_text(structural_graph(parse_group_spec("semidirect:n=65,m=4,s=8"), 10)->graph);
    return c;
  }));

  record(run(5, "PGL(2,5) at t=2", [](std::string& detail) {
    const auto expected = join({replicate(10, cyc(2, T({2}))), replicate(6, cyc(4)),
                                loop(tree_sum(scalar_dot(15, T({2, 2})), scalar_dot(10, T({2}))))});
    auto c = golden("pgl2:5", 2, expected, 120);
    const auto census = tree_census(*make_pgl2(5), 2);
    c.require(census.size() == 3, "tree census has " + std::to_string(census.size()) + " distinct trees");
    detail = to_text(structural_graph(parse_group_spec("pgl2:5"), 2)->graph) + "; 3 distinct trees";
    return c;
  }));

  record(run(6, "PGL(2,11) at t=2", [](std::string& detail) {
    Check c;
    const auto report = verify(parse_group_spec("pgl2:11"), 2);
    c.require(report.verdict.value_or(false), "verify verdict is not true");
    c.require(report.order == 1320 && report.brute_force.vertex_count() == 1320, "wrong vertex count");
    const auto census = tree_census(*make_pgl2(11), 2);
    c.require(census.size() == 4, "tree census has " + std::to_string(census.size()) + " distinct trees");
    detail = "verdict true, 1320 vertices, 4 distinct trees";
    return c;
  }));

  record(run(7, "oracle sweep over the corpus, t = 1..24", [](std::string& detail) {
    Check c;
    const auto corpus = acceptance_corpus();
    const auto rows = sweep(corpus, 1, kSweepMaxT);
    std::size_t route_checks = 0, failures = 0;
    for (const auto& row : rows) {
      route_checks += row.routes.size();
      if (!row.verdict()) {
        ++failures;
        std::string why = row.applicable() ? row.error : "no structural theorem applies";
        for (const auto& [name, ok] : row.routes)
          if (!ok) why += (why.empty() ? "" : "; ") + name + " mismatch";
        c.require(false, row.group + " t=" + std::to_string(row.t) + ": " + why);
      }
    }
    detail = std::to_string(corpus.size()) + " groups, " + std::to_string(rows.size()) + " rows, " +
             std::to_string(route_checks) + " route checks, " + std::to_string(failures) + " failures";
    if (!c.ok) c.first_failure = std::to_string(failures) + " failures, first: " + c.first_failure;
    return c;
  }));

  const auto type_corpus = random_type_corpus();

  record(run(8, "property suites", [&](std::string& detail) {
    Check c;
    std::mt19937_64 rng(12345);
    const auto flowers = flower_corpus(acceptance_corpus());
    std::vector<PropertyOutcome> outcomes;
    outcomes.push_back(elementary_law(rng));
    outcomes.push_back(cycle_tensor_law(rng));
    outcomes.push_back(loop_tensor_law(rng));
    outcomes.push_back(central_node_law(type_corpus));
    outcomes.push_back(tree_count_bound(flowers));
    outcomes.push_back(petal_stability(flowers));
    outcomes.push_back(pistil_in_center(flowers));
    for (const auto& o : outcomes) {
      c.require(o.cases >= kMinPropertyCases, o.name + " ran only " + std::to_string(o.cases) + " cases");
      c.require(o.check.ok, o.name + " failed on " + o.check.first_failure);
      detail += (detail.empty() ? "" : ", ") + o.name + " " + std::to_string(o.cases);
    }
    return c;
  }));

  record(run(9, "rewrite rules agree with the pseudo-flower central tree", [&](std::string& detail) {
    Check c;
    std::size_t applied = 0;
    for (const auto& [type, t] : type_corpus) {
      const auto ruled = central_tree_rules(type, t);
      if (!ruled) continue;
      ++applied;
      c.require(*ruled == central_tree(type, t), "rules give a wrong tree for " + type.to_string() +
                                                     ", t=" + std::to_string(t));
    }
    std::size_t insufficient = 0;
    for (u64 n = 2; n <= 40; ++n)
      for (u64 t = 2; t <= 62; t += 4) {
        ++insufficient;
        c.require(!central_tree_rules(quaternion_type(n), t).has_value(),
                  "rules claimed a tree for Q" + std::to_string(4 * n) + ", t=" + std::to_string(t));
      }
    detail = std::to_string(applied) + "/" + std::to_string(type_corpus.size()) +
             " random types resolved by the rules, " + std::to_string(insufficient) +
             " quaternion cases with t = 2 (mod 4) reported insufficient";
    return c;
  }));

  const double total = std::chrono::duration<double>(Clock::now() - suite_start).count();
  CriterionResult timing{10, "suite completes in under 60 s", total < 60.0, {}, total};
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << "criteria 1-9 took " << total << " s";
  timing.detail = os.str();
  record(std::move(timing));
  return results;
}

}  // namespace powergraph

#include "powergraph/groups.hpp"

#include <algorithm>
#include <array>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "powergraph/finite_field.hpp"

namespace powergraph {

namespace {

void require_order(u64 order) {
  if (order == 0) throw std::invalid_argument("group order must be positive");
  if (order > kMaxGroupOrder)
    throw std::invalid_argument("group order " + std::to_string(order) + " exceeds the 2^24 element limit");
}

class CyclicGroup final : public FiniteGroup {
 public:
  explicit CyclicGroup(u64 n) : n_(n) { require_order(n); }
  std::size_t order() const override { return n_; }
  Element multiply(Element a, Element b) const override { return static_cast<Element>((u64{a} + b) % n_); }
  std::string label(Element g) const override { return std::to_string(g); }
  std::string name() const override { return "C_" + std::to_string(n_); }
  std::optional<std::vector<u64>> cyclic_factors() const override { return std::vector<u64>{n_}; }

 private:
  u64 n_;
};

class AbelianGroup final : public FiniteGroup {
 public:
  explicit AbelianGroup(std::vector<u64> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw std::invalid_argument("abelian group needs at least one factor");
    u64 n = 1;
    for (u64 r : factors_) {
      if (r == 0) throw std::invalid_argument("cyclic factor orders must be positive");
      n = checked_mul(n, r);
      require_order(n);
    }
    order_ = n;
  }
  std::size_t order() const override { return order_; }
  Element multiply(Element a, Element b) const override {
    u64 out = 0, place = 1;
    for (u64 r : factors_) {
      out += ((a % r + b % r) % r) * place;
      a = static_cast<Element>(a / r);
      b = static_cast<Element>(b / r);
      place *= r;
    }
    return static_cast<Element>(out);
  }
  std::string label(Element g) const override {
    std::string s = "(";
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      s += (i ? "," : "") + std::to_string(g % factors_[i]);
      g = static_cast<Element>(g / factors_[i]);
    }
    return s + ")";
  }
  std::string name() const override {
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) s += (i ? " x C_" : "C_") + std::to_string(factors_[i]);
    return s;
  }
  std::optional<std::vector<u64>> cyclic_factors() const override { return factors_; }

 private:
  std::vector<u64> factors_;
  u64 order_ = 1;
};

class UnitsGroup final : public FiniteGroup {
 public:
  explicit UnitsGroup(u64 n) : n_(n) {
    if (n == 0) throw std::invalid_argument("modulus must be positive");
    require_order(n);
    index_.assign(n, 0);
    for (u64 x = (n == 1 ? 0 : 1); x < n || (n == 1 && x == 0); ++x) {
      if (gcd(x, n) != 1 && n != 1) continue;
      index_[x] = static_cast<Element>(residues_.size());
      residues_.push_back(x);
      if (n == 1) break;
    }
  }
  std::size_t order() const override { return residues_.size(); }
  Element multiply(Element a, Element b) const override { return index_[mul_mod(residues_[a], residues_[b], n_)]; }
  std::string label(Element g) const override { return std::to_string(residues_[g]); }
  std::string name() const override { return "Z_" + std::to_string(n_) + "^*"; }
  std::optional<std::vector<u64>> cyclic_factors() const override { return units_mod_factors(n_); }

 private:
  u64 n_;
  std::vector<u64> residues_;
  std::vector<Element> index_;
};

// r^i s^j stored as i + n j.
class DihedralGroup final : public FiniteGroup {
 public:
  explicit DihedralGroup(u64 n) : n_(n) {
    if (n < 2) throw std::invalid_argument("dihedral group needs n >= 2");
    require_order(checked_mul(2, n));
  }
  std::size_t order() const override { return 2 * n_; }
  Element multiply(Element a, Element b) const override {
    const u64 i = a % n_, j = a / n_, k = b % n_, l = b / n_;
    const u64 rot = j == 0 ? (i + k) % n_ : (i + n_ - k) % n_;
    return static_cast<Element>(rot + n_ * ((j + l) % 2));
  }
  std::string label(Element g) const override {
    return (g / n_ ? "s r^" : "r^") + std::to_string(g % n_);
  }
  std::string name() const override { return "D_" + std::to_string(2 * n_); }

 private:
  u64 n_;
};

// a^i b^j stored as i + 2n j.
class QuaternionGroup final : public FiniteGroup {
 public:
  explicit QuaternionGroup(u64 n) : n_(n) {
    if (n < 2) throw std::invalid_argument("generalized quaternion group needs n >= 2");
    require_order(checked_mul(4, n));
  }
  std::size_t order() const override { return 4 * n_; }
  Element multiply(Element x, Element y) const override {
    const u64 m = 2 * n_;
    const u64 i = x % m, j = x / m, k = y % m, l = y / m;
    if (j == 0) return static_cast<Element>((i + k) % m + m * l);
    if (l == 0) return static_cast<Element>((i + m - k) % m + m);
    return static_cast<Element>((i + m - k + n_) % m);
  }
  std::string label(Element g) const override {
    const u64 m = 2 * n_;
    return "a^" + std::to_string(g % m) + (g / m ? " b" : "");
  }
  std::string name() const override { return "Q_" + std::to_string(4 * n_); }

 private:
  u64 n_;
};

// b^i a^j stored as i + n j, with (b^i a^j)(b^k a^l) = b^{i + k s^j} a^{j + l}.
class SemidirectGroup final : public FiniteGroup {
 public:
  SemidirectGroup(u64 n, u64 m, u64 s) : n_(n), m_(m), s_(s) {
    if (n == 0 || m == 0) throw std::invalid_argument("semidirect product needs n, m >= 1");
    require_order(checked_mul(n, m));
    if (pow_mod(s, m, n) != 1 % n)
      throw std::invalid_argument("semidirect product requires s^m = 1 (mod n); got n=" + std::to_string(n) +
                                  ", m=" + std::to_string(m) + ", s=" + std::to_string(s));
    spow_.resize(m);
    for (u64 j = 0; j < m; ++j) spow_[j] = pow_mod(s, j, n);
  }
  std::size_t order() const override { return n_ * m_; }
  Element multiply(Element x, Element y) const override {
    const u64 i = x % n_, j = x / n_, k = y % n_, l = y / n_;
    return static_cast<Element>((i + mul_mod(k, spow_[j], n_)) % n_ + n_ * ((j + l) % m_));
  }
  std::string label(Element g) const override {
    return "b^" + std::to_string(g % n_) + " a^" + std::to_string(g / n_);
  }
  std::string name() const override {
    return "C_" + std::to_string(n_) + " x|_" + std::to_string(s_) + " C_" + std::to_string(m_);
  }

 private:
  u64 n_, m_, s_;
  std::vector<u64> spow_;
};

// Nonsingular 2x2 matrices scaled so the first nonzero entry (row-major) is 1.
class PGL2Group final : public FiniteGroup {
 public:
  explicit PGL2Group(u64 q) : field_(q), q_(q) {
    const u64 order = checked_mul(checked_mul(q, q), q) - q;
    require_order(order);
    lookup_.assign(q * q * q * q, kNone);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b)
        for (std::uint32_t c = 0; c < q; ++c)
          for (std::uint32_t d = 0; d < q; ++d) {
            const Matrix mat{a, b, c, d};
            if (determinant(mat) == 0 || normalize(mat) != mat) continue;
            lookup_[key(mat)] = static_cast<Element>(mats_.size());
            mats_.push_back(mat);
          }
    if (mats_.size() != order) throw std::logic_error("PGL(2,q) enumeration has the wrong size");
    identity_ = lookup_[key({1, 0, 0, 1})];
  }
  std::size_t order() const override { return mats_.size(); }
  Element identity() const override { return identity_; }
  Element multiply(Element x, Element y) const override {
    const auto& [a, b, c, d] = mats_[x];
    const auto& [e, f, g, h] = mats_[y];
    const Matrix prod{field_.add(field_.mul(a, e), field_.mul(b, g)), field_.add(field_.mul(a, f), field_.mul(b, h)),
                      field_.add(field_.mul(c, e), field_.mul(d, g)), field_.add(field_.mul(c, f), field_.mul(d, h))};
    return lookup_[key(normalize(prod))];
  }
  std::string label(Element g) const override {
    const auto& [a, b, c, d] = mats_[g];
    std::ostringstream os;
    os << "[[" << a << "," << b << "],[" << c << "," << d << "]]";
    return os.str();
  }
  std::string name() const override { return "PGL(2," + std::to_string(q_) + ")"; }

 private:
  using Matrix = std::array<std::uint32_t, 4>;
  static constexpr Element kNone = ~Element{0};

  std::uint32_t determinant(const Matrix& m) const {
    return field_.add(field_.mul(m[0], m[3]), field_.neg(field_.mul(m[1], m[2])));
  }
  Matrix normalize(const Matrix& m) const {
    const auto lead = m[0] != 0 ? m[0] : m[1] != 0 ? m[1] : m[2] != 0 ? m[2] : m[3];
    const auto s = field_.inv(lead);
    return {field_.mul(m[0], s), field_.mul(m[1], s), field_.mul(m[2], s), field_.mul(m[3], s)};
  }
  std::size_t key(const Matrix& m) const { return ((m[0] * q_ + m[1]) * q_ + m[2]) * q_ + m[3]; }

  FiniteField field_;
  u64 q_;
  std::vector<Matrix> mats_;
  std::vector<Element> lookup_;
  Element identity_ = 0;
};

}  // namespace

std::unique_ptr<FiniteGroup> make_cyclic(u64 n) { return std::make_unique<CyclicGroup>(n); }
std::unique_ptr<FiniteGroup> make_abelian(std::vector<u64> factors) {
  return std::make_unique<AbelianGroup>(std::move(factors));
}
std::unique_ptr<FiniteGroup> make_units_mod(u64 n) { return std::make_unique<UnitsGroup>(n); }
std::unique_ptr<FiniteGroup> make_dihedral(u64 n) { return std::make_unique<DihedralGroup>(n); }
std::unique_ptr<FiniteGroup> make_quaternion(u64 n) { return std::make_unique<QuaternionGroup>(n); }

std::unique_ptr<FiniteGroup> make_semidirect(u64 n, u64 m, u64 s) {
  auto g = std::make_unique<SemidirectGroup>(n, m, s);
  if (!spot_check_group_axioms(*g, 256))
    throw std::invalid_argument("semidirect parameters do not define a group");
  return g;
}

std::unique_ptr<FiniteGroup> make_pgl2(u64 q) { return std::make_unique<PGL2Group>(q); }

std::vector<u64> units_mod_factors(u64 n) {
  if (n == 0) throw std::invalid_argument("modulus must be positive");
  std::vector<u64> out;
  for (auto [p, e] : factorize(n)) {
    if (p != 2) {
      u64 pe = 1;
      for (unsigned i = 0; i < e; ++i) pe *= p;
      out.push_back(euler_phi(pe));
    } else if (e == 2) {
      out.push_back(2);
    } else if (e >= 3) {
      out.push_back(2);
      out.push_back(u64{1} << (e - 2));
    }
  }
  if (out.empty()) out.push_back(1);
  return out;
}

Element power(const FiniteGroup& group, Element g, u64 t) {
  if (t == 0) throw std::domain_error("exponent t must be positive");
  Element result = group.identity();
  Element base = g;
  while (true) {
    if (t & 1) result = group.multiply(result, base);
    t >>= 1;
    if (t == 0) break;
    base = group.multiply(base, base);
  }
  return result;
}

std::vector<u64> element_orders(const FiniteGroup& group) {
  const u64 n = group.order();
  const auto factors = factorize(n);
  std::vector<u64> orders(n);
  for (Element g = 0; g < n; ++g) {
    u64 ord = n;
    for (auto [p, e] : factors)
      while (ord % p == 0 && power(group, g, ord / p) == group.identity()) ord /= p;
    orders[g] = ord;
  }
  return orders;
}

bool is_cyclic(const FiniteGroup& group) {
  const auto orders = element_orders(group);
  return std::find(orders.begin(), orders.end(), group.order()) != orders.end();
}

bool is_abelian(const FiniteGroup& group) {
  const auto n = static_cast<Element>(group.order());
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (group.multiply(a, b) != group.multiply(b, a)) return false;
  return true;
}

ElementSet cyclic_subgroup(const FiniteGroup& group, Element g) {
  ElementSet out{group.identity()};
  for (Element x = g; x != group.identity(); x = group.multiply(x, g)) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

ElementSet center(const FiniteGroup& group) {
  const auto n = static_cast<Element>(group.order());
  ElementSet out;
  for (Element z = 0; z < n; ++z) {
    bool central = true;
    for (Element g = 0; g < n && central; ++g) central = group.multiply(z, g) == group.multiply(g, z);
    if (central) out.push_back(z);
  }
  return out;
}

std::vector<ElementSet> mu_subgroups(const FiniteGroup& group) {
  const auto n = static_cast<Element>(group.order());
  const auto orders = element_orders(group);
  // <x> is not maximal iff x = h^p for some h and prime p | ord(h); that set
  // is closed under passing to other generators of <x>.
  std::vector<std::uint8_t> contained(n, 0);
  for (Element h = 0; h < n; ++h)
    for (auto [p, e] : factorize(orders[h])) contained[power(group, h, p)] = 1;
  std::vector<std::uint8_t> assigned(n, 0);
  std::vector<ElementSet> out;
  for (Element g = 0; g < n; ++g) {
    if (contained[g] || assigned[g]) continue;
    auto sub = cyclic_subgroup(group, g);
    for (Element x : sub)
      if (orders[x] == orders[g]) assigned[x] = 1;
    out.push_back(std::move(sub));
  }
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

void FlowerType::validate() const {
  if (pistil == 0) throw std::domain_error("pistil order must be positive");
  if (petals.empty()) throw std::domain_error("a flower type needs at least one petal");
  for (u64 c : petals)
    if (c == 0 || c % pistil != 0)
      throw std::domain_error("pistil order " + std::to_string(pistil) + " must divide every petal order " +
                              to_string());
}

u64 FlowerType::element_count() const {
  u64 sum = 0;
  for (u64 c : petals) sum = checked_add(sum, c);
  return sum - (petals.size() - 1) * pistil;
}

std::string FlowerType::to_string() const {
  std::string s = "(" + std::to_string(pistil) + ";";
  for (std::size_t i = 0; i < petals.size(); ++i) s += (i ? "," : " ") + std::to_string(petals[i]);
  return s + ")";
}

FlowerType FlowerDecomposition::type() const {
  FlowerType t{pistil.size(), {}};
  for (const auto& p : petals) t.petals.push_back(p.size());
  std::sort(t.petals.begin(), t.petals.end());
  return t;
}

std::optional<FlowerDecomposition> flower_decompose(const FiniteGroup& group) {
  if (is_cyclic(group)) throw std::domain_error(group.name() + " is cyclic; flower groups are noncyclic");
  if (group.order() > 100000)
    std::clog << "warning: flower decomposition of a group of order " << group.order()
              << " enumerates every cyclic subgroup and may be slow\n";
  auto petals = mu_subgroups(group);
  ElementSet pistil = petals.front();
  for (const auto& p : petals) {
    ElementSet meet;
    std::set_intersection(pistil.begin(), pistil.end(), p.begin(), p.end(), std::back_inserter(meet));
    pistil = std::move(meet);
  }
  // Every element outside the pistil must lie in exactly one petal; then all
  // pairwise intersections equal the pistil.
  std::vector<std::uint32_t> cover(group.order(), 0);
  for (const auto& p : petals)
    for (Element g : p) ++cover[g];
  std::vector<std::uint8_t> in_pistil(group.order(), 0);
  for (Element g : pistil) in_pistil[g] = 1;
  for (Element g = 0; g < group.order(); ++g)
    if (!in_pistil[g] && cover[g] != 1) return std::nullopt;

  FlowerDecomposition out{std::move(pistil), std::move(petals)};
  if (out.type().element_count() != group.order())
    throw std::logic_error("flower counting identity failed for " + group.name());
  return out;
}

std::vector<Element> compatible_generators(const FiniteGroup& group, const FlowerDecomposition& flower) {
  const u64 c0 = flower.pistil.size();
  const auto orders = element_orders(group);
  std::vector<Element> gens;
  for (const auto& petal : flower.petals) {
    const auto it = std::find_if(petal.begin(), petal.end(), [&](Element g) { return orders[g] == petal.size(); });
    gens.push_back(*it);
  }
  const Element target = power(group, gens[0], flower.petals[0].size() / c0);
  for (std::size_t i = 1; i < gens.size(); ++i) {
    const Element h = gens[i];
    const Element x = power(group, h, flower.petals[i].size() / c0);
    u64 f = 0;
    for (Element y = group.identity(); y != target; y = group.multiply(y, x)) ++f;
    const u64 ci = flower.petals[i].size();
    u64 fi = f == 0 ? c0 : f;
    for (u64 step = 0; gcd(fi, ci) != 1; ++step, fi += c0)
      if (step > ci) throw std::logic_error("no petal generator in the required residue class");
    gens[i] = power(group, h, fi);
  }
  return gens;
}

bool spot_check_group_axioms(const FiniteGroup& group, std::size_t samples, std::uint64_t seed) {
  const auto n = static_cast<Element>(group.order());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Element> pick(0, n - 1);
  const Element e = group.identity();
  for (std::size_t i = 0; i < samples; ++i) {
    const Element a = pick(rng), b = pick(rng), c = pick(rng);
    if (group.multiply(group.multiply(a, b), c) != group.multiply(a, group.multiply(b, c))) return false;
    if (group.multiply(a, e) != a || group.multiply(e, a) != a) return false;
    // Finite cancellative monoid: powers of a must return to e within n steps.
    Element x = a;
    std::size_t steps = 1;
    while (x != e && steps <= n) {
      x = group.multiply(x, a);
      ++steps;
    }
    if (x != e) return false;
  }
  return true;
}

}  // namespace powergraph

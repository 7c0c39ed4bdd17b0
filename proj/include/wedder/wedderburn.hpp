#pragma once

// Wedderburn decompositions FG for the supported families.
//
// Split metacyclic groups go through the strong Shoda pairs (G_d, K) with
// K = <a^x, b^{dy}>, x | m, d = o_x(r), y | n/d; the other families start from
// their known rational decomposition and are base-changed to F.

#include <algorithm>
#include <string>
#include <variant>
#include <vector>

#include "wedder/abfield.hpp"
#include "wedder/groupzoo.hpp"

namespace wedder {

/// (center(zeta_N)/center, sigma, zeta_T^c) with sigma: zeta_N -> zeta_N^sigma.
struct CyclicCyclotomicAlgebra {
  Field center;
  u64 top_conductor = 1;
  u64 sigma_residue = 0;
  u64 twist_order = 1;
  u64 twist_exponent = 0;

  friend bool operator==(const CyclicCyclotomicAlgebra&, const CyclicCyclotomicAlgebra&) = default;
};

enum class QuaternionForm { MinusOneMinusOne, MinusOneMinusThree, MinusTwoMinusFive, ZetaForm };

/// (a, b / base). ZetaForm is (-1, (zeta_N - zeta_N^{-1})^2) for odd N.
struct QuaternionSymbol {
  Field base;
  QuaternionForm form = QuaternionForm::MinusOneMinusOne;
  u64 zeta = 0;

  friend bool operator==(const QuaternionSymbol&, const QuaternionSymbol&) = default;
};

struct FieldAlgebra {
  Field field;
  friend bool operator==(const FieldAlgebra&, const FieldAlgebra&) = default;
};

using Algebra = std::variant<FieldAlgebra, CyclicCyclotomicAlgebra, QuaternionSymbol>;

struct SimpleComponent {
  u64 matrix_size = 1;
  Algebra algebra;
  u64 multiplicity = 1;

  friend bool operator==(const SimpleComponent&, const SimpleComponent&) = default;
};

using Decomposition = std::vector<SimpleComponent>;

// ---------------------------------------------------------------------------
// Algebra helpers

inline Field center_of(const Algebra& a) {
  if (const auto* f = std::get_if<FieldAlgebra>(&a)) return f->field;
  if (const auto* c = std::get_if<CyclicCyclotomicAlgebra>(&a)) return c->center;
  return std::get<QuaternionSymbol>(a).base;
}

inline u64 cyclic_degree(const CyclicCyclotomicAlgebra& a) {
  return compositum(a.center, cyclotomic(a.top_conductor)).degree() / a.center.degree();
}

/// Degree over the center (square root of the dimension).
inline u64 algebra_degree(const Algebra& a) {
  if (std::holds_alternative<FieldAlgebra>(a)) return 1;
  if (const auto* c = std::get_if<CyclicCyclotomicAlgebra>(&a)) return cyclic_degree(*c);
  return 2;
}

inline Field center_of(const SimpleComponent& c) { return center_of(c.algebra); }

/// Degree of the simple algebra M_s(A) over its center.
inline u64 component_degree(const SimpleComponent& c) { return c.matrix_size * algebra_degree(c.algebra); }

/// F-dimension of one copy of the component; F must be contained in the center.
inline u64 dimension_over(const SimpleComponent& c, const Field& f) {
  const u64 deg = component_degree(c);
  return deg * deg * relative_degree(center_of(c), f);
}

inline u64 total_dimension(const Decomposition& d, const Field& f) {
  u64 total = 0;
  for (const auto& c : d) total += c.multiplicity * dimension_over(c, f);
  return total;
}

/// Validating constructor: sigma must generate Gal(center(zeta_N)/center) and
/// the twist must lie in the center.
inline CyclicCyclotomicAlgebra make_cyclic_algebra(Field center, u64 top_conductor, u64 sigma, u64 twist_order,
                                                   u64 twist_exponent) {
  if (top_conductor == 0 || twist_order == 0) throw DomainError("cyclic algebra: conductors must be positive");
  const u64 n = top_conductor;
  const u64 s = n == 1 ? 0 : sigma % n;
  const u64 big = lcm(center.conductor(), n);
  const ResidueSubgroup galois = reduce_subgroup(center.fixer_in(big), n);
  if (n > 1 && !galois.contains(s)) throw DomainError("cyclic algebra: sigma does not fix the center");
  if (n > 1 && mult_order(static_cast<i64>(s), n) != galois.size()) {
    throw DomainError("cyclic algebra: sigma does not generate the Galois group");
  }
  const u64 c = twist_exponent % twist_order;
  if (!contains_root_of_unity(center, twist_order / gcd(twist_order, c))) {
    throw DomainError("cyclic algebra: twist is not in the center");
  }
  return {std::move(center), n, s, twist_order, c};
}

inline bool twist_is_trivial(const CyclicCyclotomicAlgebra& a) { return a.twist_exponent % a.twist_order == 0; }

inline bool twist_is_minus_one(const CyclicCyclotomicAlgebra& a) {
  return a.twist_order / gcd(a.twist_order, a.twist_exponent) == 2;
}

/// The cyclic form of a ZetaForm quaternion symbol.
inline CyclicCyclotomicAlgebra zeta_form_as_cyclic(const QuaternionSymbol& q) {
  if (q.form != QuaternionForm::ZetaForm) throw DomainError("zeta_form_as_cyclic: not a zeta-form symbol");
  return make_cyclic_algebra(q.base, q.zeta, q.zeta - 1, 2, 1);
}

namespace detail {

/// Collapses trivial cases: degree 1 becomes the center, trivial twist becomes a
/// matrix ring, and degree 2 with sigma = -1 and twist -1 is tagged as a quaternion.
inline SimpleComponent simplify(u64 matrix_size, const CyclicCyclotomicAlgebra& a, u64 multiplicity) {
  const u64 deg = cyclic_degree(a);
  if (deg == 1) return {matrix_size, FieldAlgebra{a.center}, multiplicity};
  if (twist_is_trivial(a)) return {matrix_size * deg, FieldAlgebra{a.center}, multiplicity};
  if (deg == 2 && twist_is_minus_one(a) && a.top_conductor % 2 == 1 && a.sigma_residue == a.top_conductor - 1) {
    return {matrix_size, QuaternionSymbol{a.center, QuaternionForm::ZetaForm, a.top_conductor}, multiplicity};
  }
  return {matrix_size, a, multiplicity};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Base change

/// L ⊗_base C for a component C whose center contains base, with base ⊆ L:
/// [Z ∩ L : base] copies of the component base-changed to ZL.
inline Decomposition tensor_with_field(const SimpleComponent& c, const Field& l, const Field& base) {
  const Field z = center_of(c);
  if (!subfield_of(base, z) || !subfield_of(base, l)) throw DomainError("tensor_with_field: base is not a subfield");
  const u64 copies = relative_degree(intersect(z, l), base);
  const Field zl = compositum(z, l);
  const u64 mult = c.multiplicity * copies;

  if (std::holds_alternative<FieldAlgebra>(c.algebra)) return {{c.matrix_size, FieldAlgebra{zl}, mult}};

  const auto* q = std::get_if<QuaternionSymbol>(&c.algebra);
  if (q && q->form != QuaternionForm::ZetaForm) return {{c.matrix_size, QuaternionSymbol{zl, q->form, q->zeta}, mult}};

  // Restriction of (E/Z, sigma, a) to ZL is M_j((E.ZL/ZL, sigma^j, a)) with j = [E ∩ ZL : Z].
  const CyclicCyclotomicAlgebra a = q ? zeta_form_as_cyclic(*q) : std::get<CyclicCyclotomicAlgebra>(c.algebra);
  const Field top = compositum(z, cyclotomic(a.top_conductor));
  const u64 j = relative_degree(intersect(top, zl), z);
  const u64 sigma = a.top_conductor == 1 ? 0 : powmod(a.sigma_residue, j, a.top_conductor);
  return {detail::simplify(c.matrix_size * j,
                           make_cyclic_algebra(zl, a.top_conductor, sigma, a.twist_order, a.twist_exponent), mult)};
}

/// Component-wise F ⊗_Q of a rational decomposition.
inline Decomposition base_change(const Decomposition& rational, const Field& f) {
  Decomposition out;
  for (const auto& c : rational) {
    for (auto& piece : tensor_with_field(c, f, rationals())) out.push_back(std::move(piece));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Split metacyclic groups

/// Strong Shoda pair (G_d, K) with G_d = <a, b^d> and K = <a^x, b^{dy}>.
struct ShodaPair {
  u64 d = 1;
  u64 x = 1;
  u64 y = 1;

  u64 quotient_order() const { return x * y; }  // [H:K]
  friend bool operator==(const ShodaPair&, const ShodaPair&) = default;
};

/// All strong Shoda pairs, ordered by (x, y). Distinct pairs give distinct
/// primitive central idempotents since every K here is normal in G.
inline std::vector<ShodaPair> enumerate_shoda_pairs(const MetacyclicSplit& g) {
  if (gcd(g.m, g.n) != 1) throw DomainError("enumerate_shoda_pairs: gcd(m, n) must be 1");
  std::vector<ShodaPair> out;
  for (u64 x : divisors(g.m)) {
    const u64 d = x == 1 ? 1 : mult_order(static_cast<i64>(g.r % x), x);
    for (u64 y : divisors(g.n / d)) out.push_back({d, x, y});
  }
  return out;
}

/// Gal(F(zeta_h)/F) as a subgroup of (Z/hZ)^*.
inline ResidueSubgroup galois_image(const Field& f, u64 h) {
  if (h == 1) return ResidueSubgroup{};
  return reduce_subgroup(f.fixer_in(lcm(f.conductor(), h)), h);
}

/// The components F G e_C(G, G_d, K) for all Galois orbits C, as a single
/// entry with the orbit count as multiplicity.
inline SimpleComponent component_of_pair(const MetacyclicSplit& g, const ShodaPair& pair, const Field& f) {
  const u64 x = pair.x;
  const u64 y = pair.y;
  const u64 h = x * y;
  const ResidueSubgroup image = galois_image(f, h);

  // rho_j: conjugation by b^j on H/K = C_x x C_y
  auto rho = [&](u64 j) -> u64 {
    if (h == 1) return 0;
    return crt_pair(x == 1 ? 0 : powmod(g.r, j, x), x, 1 % y, y);
  };
  // {j : rho_j in image} is a subgroup of Z/d, so the least s divides d
  u64 s = 1;
  while (!image.contains(rho(s))) ++s;

  const u64 orbits_num = euler_phi(h);
  const u64 orbits_den = image.size() * s;
  if (orbits_num % orbits_den != 0) throw std::logic_error("component_of_pair: non-integral orbit count");
  const u64 multiplicity = orbits_num / orbits_den;

  // center: F(zeta_h)^{rho_s}
  const u64 big = lcm(f.conductor(), h);
  const ResidueSubgroup fixer_big = f.fixer_in(big);
  const ResidueSubgroup cyc = subgroup_closure(h, {static_cast<i64>(rho(s))});
  ResidueSubgroup center_fixer{big, {}};
  for (u64 z : fixer_big.elements) {
    if (cyc.contains(z % h)) center_fixer.elements.push_back(z);
  }
  if (big == 1) center_fixer = ResidueSubgroup{};
  const Field center(center_fixer);

  const u64 sigma = x == 1 ? 0 : powmod(g.r, s, x);
  return detail::simplify(s, make_cyclic_algebra(center, x, sigma, y, y == 1 ? 0 : 1), multiplicity);
}

/// E_F(G, <a b^{n/k}>) = G, i.e. Q(zeta_m) ∩ F ⊆ Fix(zeta_m -> zeta_m^r).
inline bool e_F_is_whole_group(const MetacyclicSplit& g, const Field& f) {
  const Field fixed = g.m == 1 ? rationals() : make_field(g.m, {static_cast<i64>(g.r)});
  return subfield_of(intersect(cyclotomic(g.m), f), fixed);
}

inline Decomposition decompose_metacyclic(const MetacyclicSplit& g, const Field& f) {
  Decomposition out;
  for (const auto& pair : enumerate_shoda_pairs(g)) out.push_back(component_of_pair(g, pair, f));
  return out;
}

/// Same decomposition obtained as F ⊗_Q QG; must agree with decompose_metacyclic.
inline Decomposition decompose_metacyclic_by_base_change(const MetacyclicSplit& g, const Field& f) {
  return base_change(decompose_metacyclic(g, rationals()), f);
}

// ---------------------------------------------------------------------------
// Rational decompositions of the remaining families

inline Decomposition rational_decomposition_quaternion(u64 k) {
  if (k < 1) throw DomainError("quaternion: k must be positive");
  Decomposition out;
  auto field = [](u64 size, Field z) { return SimpleComponent{size, FieldAlgebra{std::move(z)}, 1}; };
  if (k % 2 == 0) {
    for (int i = 0; i < 4; ++i) out.push_back(field(1, rationals()));
  } else {
    out.push_back(field(1, rationals()));
    out.push_back(field(1, rationals()));
    out.push_back(field(1, cyclotomic(4)));
  }
  for (u64 d : divisors(2 * k)) {
    if (d <= 2) continue;
    if (k % d == 0) {
      out.push_back(field(2, cyclotomic_real(d)));
    } else if (d % 4 == 0) {
      out.push_back({1, QuaternionSymbol{cyclotomic_real(d), QuaternionForm::MinusOneMinusOne, 0}, 1});
    } else {
      const u64 half = d / 2;
      out.push_back({1, QuaternionSymbol{cyclotomic_real(half), QuaternionForm::ZetaForm, half}, 1});
    }
  }
  return out;
}

inline Decomposition rational_decomposition_sl23() {
  const Field q = rationals();
  return {
      {1, FieldAlgebra{q}, 1},
      {1, FieldAlgebra{cyclotomic(3)}, 1},
      {3, FieldAlgebra{q}, 1},
      {1, QuaternionSymbol{q, QuaternionForm::MinusOneMinusOne, 0}, 1},
      {2, FieldAlgebra{cyclotomic(3)}, 1},
  };
}

inline Decomposition rational_decomposition_sl25() {
  const Field q = rationals();
  const Field sqrt5 = cyclotomic_real(5);
  return {
      {1, FieldAlgebra{q}, 1},
      {4, FieldAlgebra{q}, 1},
      {1, QuaternionSymbol{sqrt5, QuaternionForm::MinusOneMinusOne, 0}, 1},
      {2, QuaternionSymbol{q, QuaternionForm::MinusOneMinusThree, 0}, 1},
      {5, FieldAlgebra{q}, 1},
      {3, QuaternionSymbol{q, QuaternionForm::MinusOneMinusOne, 0}, 1},
      {3, FieldAlgebra{sqrt5}, 1},
  };
}

inline Decomposition rational_decomposition_binary_octahedral() {
  const Field q = rationals();
  return {
      {1, FieldAlgebra{q}, 1},
      {1, FieldAlgebra{q}, 1},
      {2, FieldAlgebra{q}, 1},
      {3, FieldAlgebra{q}, 1},
      {3, FieldAlgebra{q}, 1},
      {1, QuaternionSymbol{cyclotomic_real(8), QuaternionForm::MinusOneMinusOne, 0}, 1},
      {2, QuaternionSymbol{q, QuaternionForm::MinusOneMinusThree, 0}, 1},
  };
}

inline Decomposition decompose(const GroupSpec& g, const Field& f);

/// F(base x C_p) = F base ⊗_F (F ⊕ F(zeta_p)^c).
inline Decomposition decompose_product(const ProductWithCyclic& g, const Field& f) {
  const Decomposition base = decompose(*g.base, f);
  const Field fp = compositum(f, cyclotomic(g.p));
  const u64 copies = (g.p - 1) / relative_degree(fp, f);
  Decomposition out = base;
  for (const auto& c : base) {
    for (auto piece : tensor_with_field(c, fp, f)) {
      piece.multiplicity *= copies;
      out.push_back(std::move(piece));
    }
  }
  return out;
}

inline Decomposition decompose(const GroupSpec& g, const Field& f) {
  validate(g);
  if (const auto* c = std::get_if<Cyclic>(&g)) return decompose_metacyclic({c->m, 1, 1, c->m == 1 ? u64{0} : u64{1}}, f);
  if (const auto* m = std::get_if<MetacyclicSplit>(&g)) return decompose_metacyclic(*m, f);
  if (const auto* q = std::get_if<QuaternionGen>(&g)) return base_change(rational_decomposition_quaternion(q->k), f);
  if (std::holds_alternative<SL23>(g)) return base_change(rational_decomposition_sl23(), f);
  if (std::holds_alternative<SL25>(g)) return base_change(rational_decomposition_sl25(), f);
  if (std::holds_alternative<BinaryOctahedral>(g)) return base_change(rational_decomposition_binary_octahedral(), f);
  return decompose_product(std::get<ProductWithCyclic>(g), f);
}

// ---------------------------------------------------------------------------
// Text

inline std::string format_algebra(const Algebra& a) {
  if (const auto* f = std::get_if<FieldAlgebra>(&a)) return format_field(f->field);
  if (const auto* q = std::get_if<QuaternionSymbol>(&a)) {
    std::string symbol;
    switch (q->form) {
      case QuaternionForm::MinusOneMinusOne: symbol = "-1,-1"; break;
      case QuaternionForm::MinusOneMinusThree: symbol = "-1,-3"; break;
      case QuaternionForm::MinusTwoMinusFive: symbol = "-2,-5"; break;
      case QuaternionForm::ZetaForm: {
        const std::string z = "E(" + std::to_string(q->zeta) + ")";
        symbol = "-1,(" + z + "-" + z + "^-1)^2";
        break;
      }
    }
    return "(" + symbol + " / " + format_field(q->base) + ")";
  }
  const auto& c = std::get<CyclicCyclotomicAlgebra>(a);
  return "(" + format_field(c.center) + "(E(" + std::to_string(c.top_conductor) + ")) / " + format_field(c.center) +
         ", E(" + std::to_string(c.top_conductor) + ")->E(" + std::to_string(c.top_conductor) + ")^" +
         std::to_string(c.sigma_residue) + ", E(" + std::to_string(c.twist_order) + ")^" +
         std::to_string(c.twist_exponent) + ")";
}

inline std::string format_component(const SimpleComponent& c) {
  std::string s = format_algebra(c.algebra);
  if (c.matrix_size > 1) s = "M_" + std::to_string(c.matrix_size) + "(" + s + ")";
  return s;
}

inline std::string algebra_kind(const Algebra& a) {
  if (std::holds_alternative<FieldAlgebra>(a)) return "field";
  if (std::holds_alternative<QuaternionSymbol>(a)) return "quaternion";
  return "cyclic";
}

}  // namespace wedder

#pragma once

// Local and global Schur indices of the algebras produced by wedderburn.hpp,
// and the exceptional (type 1 / type 2) classification of simple components.

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>
#include <vector>

#include "wedder/wedderburn.hpp"

namespace wedder {

/// Local indices at the places in the support; places absent from the list have index 1.
struct LocalIndexProfile {
  std::vector<std::pair<u64, u64>> entries;  // (place, index), place kInfinitePrime = infinity

  u64 at(u64 place) const {
    for (const auto& [pl, idx] : entries) {
      if (pl == place) return idx;
    }
    return 1;
  }

  /// Nontrivial finite entries, ascending.
  std::vector<std::pair<u64, u64>> finite_nontrivial() const {
    std::vector<std::pair<u64, u64>> out;
    for (const auto& e : entries) {
      if (e.first != kInfinitePrime && e.second > 1) out.push_back(e);
    }
    return out;
  }

  friend bool operator==(const LocalIndexProfile&, const LocalIndexProfile&) = default;
};

/// Local index at infinity: 2 iff the center is real, lcm(N, T) > 2 and the twist is -1.
inline u64 local_index_infinite(const CyclicCyclotomicAlgebra& a) {
  if (cyclic_degree(a) == 1) return 1;
  const u64 n = lcm(a.top_conductor, a.twist_order);
  return (is_totally_real(a.center) && n > 2 && twist_is_minus_one(a)) ? 2 : 1;
}

/// Both closed forms of the odd-prime index formula for one algebra.
struct OddPrimeIndexForms {
  u64 root_of_unity_form = 0;  // min l with zeta_n^{cl} in <zeta_{p^f-1}^e>
  u64 congruence_form = 0;     // min l with (p^f-1)/gcd(p^f-1,e) = 0 mod n/gcd(n,cl)
  u64 e = 1;
  u64 f = 1;
};

namespace detail {

/// min{l : (p^f-1)/gcd(p^f-1,e) = 0 mod t/gcd(t,l)}; the Zc formulas use t = k or h.
inline u64 min_index_congruence(u64 p, u64 f, u64 e, u64 n, u64 c) {
  const u64 pfe = (powmod(p, f, e) + e - 1) % e;  // (p^f - 1) mod e
  const u64 g = gcd(pfe, e);                       // gcd(p^f - 1, e)
  for (u64 l = 1; l <= n; ++l) {
    const u64 t = n / gcd(n, mulmod(c % n, l % n, n));
    const u64 gt = detail::checked_mul(g, t);
    const u64 pf_mod = (powmod(p, f, gt) + gt - 1) % gt;  // (p^f - 1) mod g t
    if ((pf_mod / g) % t == 0) return l;
  }
  throw std::logic_error("min_index_congruence: no solution below n");
}

inline u64 min_index_roots(u64 p, u64 f, u64 e, u64 n, u64 c) {
  using boost::multiprecision::cpp_int;
  const cpp_int pf = boost::multiprecision::pow(cpp_int(p), static_cast<unsigned>(f)) - 1;
  const cpp_int g = boost::multiprecision::gcd(pf, cpp_int(e));
  const cpp_int order = pf / g;  // <zeta_{p^f-1}^e> = mu_order
  for (u64 l = 1; l <= n; ++l) {
    // zeta_n^{cl} has order dividing `order` iff n | c l order
    if ((cpp_int(c) * l * order) % n == 0) return l;
  }
  throw std::logic_error("min_index_roots: no solution below n");
}

}  // namespace detail

inline OddPrimeIndexForms local_index_odd_prime_forms(const CyclicCyclotomicAlgebra& a, u64 p) {
  if (p == 2) throw DomainError("local_index_odd_prime: p = 2 is not covered by this formula");
  if (!is_prime(p)) throw DomainError("local_index_odd_prime: " + std::to_string(p) + " is not prime");
  const u64 n = lcm(a.top_conductor, a.twist_order);
  const u64 c = (a.twist_exponent % a.twist_order) * (n / a.twist_order) % n;
  const Field top = compositum(a.center, cyclotomic(a.top_conductor));
  OddPrimeIndexForms out;
  out.e = relative_ramification(top, a.center, p);
  out.f = splitting_data(a.center, p).f;
  out.root_of_unity_form = detail::min_index_roots(p, out.f, out.e, n, c);
  out.congruence_form = detail::min_index_congruence(p, out.f, out.e, n, c);
  return out;
}

inline u64 local_index_odd_prime(const CyclicCyclotomicAlgebra& a, u64 p) {
  // unramified extension with a unit factor set
  if (is_prime(p) && p != 2 && a.top_conductor % p != 0) return 1;
  const auto forms = local_index_odd_prime_forms(a, p);
  if (forms.root_of_unity_form != forms.congruence_form) {
    throw std::logic_error("local_index_odd_prime: the two closed forms disagree");
  }
  return forms.root_of_unity_form;
}

/// m_2 is only decided when 2 does not divide N or the index is forced to 1
/// (it divides both the twist order and the degree).
inline u64 local_index_two(const CyclicCyclotomicAlgebra& a) {
  if (a.top_conductor % 2 != 0) return 1;
  const u64 t = a.twist_order / gcd(a.twist_order, a.twist_exponent);
  if (gcd(t, cyclic_degree(a)) == 1) return 1;
  throw UnsupportedError("local index at 2 of " + format_algebra(a) + " is not supported");
}

inline LocalIndexProfile local_profile(const CyclicCyclotomicAlgebra& a) {
  LocalIndexProfile out;
  out.entries.push_back({kInfinitePrime, local_index_infinite(a)});
  for (u64 p : prime_divisors(a.top_conductor == 0 ? 1 : a.top_conductor)) {
    out.entries.push_back({p, p == 2 ? local_index_two(a) : local_index_odd_prime(a, p)});
  }
  const u64 t = a.twist_order / gcd(a.twist_order, a.twist_exponent);
  const u64 deg = cyclic_degree(a);
  for (const auto& [place, idx] : out.entries) {
    if (t % idx != 0 || deg % idx != 0) throw std::logic_error("local_profile: index does not divide the twist order");
  }
  return out;
}

namespace detail {

/// Ramified places of the rational quaternion algebras.
inline std::vector<u64> rational_ramification(QuaternionForm form) {
  switch (form) {
    case QuaternionForm::MinusOneMinusOne: return {kInfinitePrime, 2};
    case QuaternionForm::MinusOneMinusThree: return {kInfinitePrime, 3};
    case QuaternionForm::MinusTwoMinusFive: return {kInfinitePrime, 5};
    case QuaternionForm::ZetaForm: break;
  }
  throw DomainError("rational_ramification: zeta form has no rational model");
}

}  // namespace detail

/// Rational symbols over L: a ramified finite place p stays ramified iff the
/// local degree e_p f_p of L is odd; infinity stays ramified iff L is real.
inline LocalIndexProfile local_profile(const QuaternionSymbol& q) {
  if (q.form == QuaternionForm::ZetaForm) return local_profile(zeta_form_as_cyclic(q));
  LocalIndexProfile out;
  for (u64 place : detail::rational_ramification(q.form)) {
    if (place == kInfinitePrime) {
      out.entries.push_back({place, is_totally_real(q.base) ? 2 : 1});
    } else {
      const auto sp = splitting_data(q.base, place);
      out.entries.push_back({place, (sp.e * sp.f) % 2 == 1 ? 2 : 1});
    }
  }
  return out;
}

inline LocalIndexProfile local_profile(const Algebra& a) {
  if (std::holds_alternative<FieldAlgebra>(a)) return {};
  if (const auto* c = std::get_if<CyclicCyclotomicAlgebra>(&a)) return local_profile(*c);
  return local_profile(std::get<QuaternionSymbol>(a));
}

/// Global index = lcm of the local indices.
inline u64 schur_index(const LocalIndexProfile& profile) {
  u64 out = 1;
  for (const auto& [place, idx] : profile.entries) out = lcm(out, idx);
  return out;
}

inline u64 schur_index(const Algebra& a) { return schur_index(local_profile(a)); }

/// Table notation: "[p, s]" for each nontrivial finite local index; "[ ]" when none.
inline std::string format_local_indices(const LocalIndexProfile& profile) {
  std::string out;
  for (const auto& [p, s] : profile.finite_nontrivial()) {
    if (!out.empty()) out += ", ";
    out += "[" + std::to_string(p) + ", " + std::to_string(s) + "]";
  }
  return out.empty() ? "[ ]" : out;
}

// ---------------------------------------------------------------------------
// Exceptional components

enum class ExceptionalKind { NotExceptional, Type1, Type2 };

enum class ExceptionalReason {
  TotallyDefiniteQuaternion,
  CommutativeDivision,
  MatrixTooLarge,
  Type2List,
  Type1Division,
  NotInType2List,
};

struct ExceptionalVerdict {
  ExceptionalKind kind = ExceptionalKind::NotExceptional;
  ExceptionalReason reason = ExceptionalReason::MatrixTooLarge;
  friend bool operator==(const ExceptionalVerdict&, const ExceptionalVerdict&) = default;
};

inline std::string to_string(ExceptionalKind k) {
  switch (k) {
    case ExceptionalKind::NotExceptional: return "NotExceptional";
    case ExceptionalKind::Type1: return "Type1";
    case ExceptionalKind::Type2: return "Type2";
  }
  return "?";
}

inline std::string to_string(ExceptionalReason r) {
  switch (r) {
    case ExceptionalReason::TotallyDefiniteQuaternion: return "TotallyDefiniteQuaternion";
    case ExceptionalReason::CommutativeDivision: return "CommutativeDivision";
    case ExceptionalReason::MatrixTooLarge: return "MatrixTooLarge";
    case ExceptionalReason::Type2List: return "Type2List";
    case ExceptionalReason::Type1Division: return "Type1Division";
    case ExceptionalReason::NotInType2List: return "NotInType2List";
  }
  return "?";
}

/// Totally definite quaternion algebra: real center, degree 2, index 2.
inline bool is_totally_definite_quaternion(const SimpleComponent& c, u64 index) {
  return component_degree(c) == 2 && index == 2 && is_totally_real(center_of(c));
}

inline ExceptionalVerdict classify_exceptional(const SimpleComponent& c) {
  const LocalIndexProfile profile = local_profile(c.algebra);
  const u64 index = schur_index(profile);
  const u64 deg = component_degree(c);
  const u64 effective_size = deg / index;  // M_{effective_size}(D), D of degree `index`
  const Field z = center_of(c);

  if (effective_size == 1) {
    if (index == 1) return {ExceptionalKind::NotExceptional, ExceptionalReason::CommutativeDivision};
    if (is_totally_definite_quaternion(c, index)) {
      return {ExceptionalKind::NotExceptional, ExceptionalReason::TotallyDefiniteQuaternion};
    }
    return {ExceptionalKind::Type1, ExceptionalReason::Type1Division};
  }
  if (effective_size == 2) {
    bool listed = false;
    if (index == 1) {
      // D is the center: Q or an imaginary quadratic field
      listed = z.degree() == 1 || (z.degree() == 2 && !is_totally_real(z));
    } else if (index == 2) {
      listed = z.degree() == 1 && profile.at(kInfinitePrime) == 2;
    }
    if (listed) return {ExceptionalKind::Type2, ExceptionalReason::Type2List};
    return {ExceptionalKind::NotExceptional, ExceptionalReason::NotInType2List};
  }
  return {ExceptionalKind::NotExceptional, ExceptionalReason::MatrixTooLarge};
}

}  // namespace wedder

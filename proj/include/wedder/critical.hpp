#pragma once

// F-critical decisions for the families of Amitsur's classification, and the
// enumeration of F-critical groups up to a given order.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wedder/schur.hpp"

namespace wedder {

struct CriticalReport {
  GroupSpec group;
  Field field;
  bool verdict = false;
  std::optional<SimpleComponent> witness;
  std::optional<std::string> failed_condition;
  std::vector<std::string> diagnostics;
};

/// Index data of the (Z)(c) conditions for G = C_p ⋊_k C_n and a divisor h of k.
struct ZcIndexData {
  Field k_field;    // K
  Field k_h_field;  // K_h = K ∩ F(zeta_{ph})
  u64 h = 1;
  u64 e = 1;
  u64 f = 1;
  u64 e_h = 1;
  u64 f_h = 1;
  u64 m_p = 1;
  u64 m_p_h = 1;
};

namespace detail {

inline CriticalReport reject(const GroupSpec& g, const Field& f, std::string why) {
  CriticalReport r{g, f, false, std::nullopt, std::move(why), {}};
  return r;
}

inline CriticalReport accept(const GroupSpec& g, const Field& f, SimpleComponent witness) {
  return {g, f, true, std::move(witness), std::nullopt, {}};
}

inline bool odd(u64 x) { return x % 2 == 1; }

/// min{l : (p^f - 1)/gcd(p^f - 1, e) = 0 mod t/gcd(t, l)}.
inline u64 zc_min_index(u64 p, u64 f, u64 e, u64 t) { return min_index_congruence(p, f, e, t, 1); }

/// Fix(zeta_p -> zeta_p^r, zeta_t fixed) inside F(zeta_{pt}), i.e. F(zeta_t, trace of zeta_p).
inline Field trace_field(const Field& f, u64 p, u64 r, u64 t) {
  const u64 pt = p * t;
  const u64 big = lcm(f.conductor(), pt);
  const u64 r_prime = crt_pair(r % p, p, 1 % t, t);
  const ResidueSubgroup action = subgroup_closure(pt, {static_cast<i64>(r_prime)});
  ResidueSubgroup fixer{big, {}};
  for (u64 z : f.fixer_in(big).elements) {
    if (action.contains(z % pt)) fixer.elements.push_back(z);
  }
  return Field(std::move(fixer));
}

}  // namespace detail

inline ZcIndexData zc_index_data(const MetacyclicSplit& g, u64 h, const Field& f) {
  if (!is_prime(g.m) || g.m == 2) throw DomainError("zc_index_data: m must be an odd prime");
  if (h == 0 || g.k % h != 0) throw DomainError("zc_index_data: h must divide k");
  const u64 p = g.m;
  const u64 k = g.k;
  ZcIndexData out;
  out.h = h;
  out.k_field = detail::trace_field(f, p, g.r, k);
  const Field top = compositum(f, cyclotomic(p * k));
  out.e = relative_ramification(top, out.k_field, p);
  out.f = splitting_data(out.k_field, p).f;
  out.m_p = detail::zc_min_index(p, out.f, out.e, k);

  const Field top_h = compositum(f, cyclotomic(p * h));
  out.k_h_field = intersect(out.k_field, top_h);
  out.e_h = relative_ramification(top_h, out.k_h_field, p);
  out.f_h = splitting_data(out.k_h_field, p).f;
  out.m_p_h = detail::zc_min_index(p, out.f_h, out.e_h, h);
  return out;
}

// ---------------------------------------------------------------------------
// Family predicates

/// SL(2,3) or Q8 alone: F totally imaginary with e_2, f_2 odd.
inline CriticalReport critical_sl23(const GroupSpec& g, const Field& f) {
  if (is_totally_real(f)) return detail::reject(g, f, "F not totally imaginary");
  const auto sp = splitting_data(f, 2);
  if (!detail::odd(sp.e)) return detail::reject(g, f, "e_2(F) even");
  if (!detail::odd(sp.f)) return detail::reject(g, f, "f_2(F) even");
  return detail::accept(g, f, {1, QuaternionSymbol{f, QuaternionForm::MinusOneMinusOne, 0}, 1});
}

inline CriticalReport critical_q8(const Field& f) { return critical_sl23(QuaternionGen{2}, f); }

/// (SL(2,3) or Q8) x C_p.
inline CriticalReport critical_with_cyclic(const GroupSpec& base, u64 p, const Field& f) {
  const bool is_sl23 = std::holds_alternative<SL23>(base);
  const auto* q = std::get_if<QuaternionGen>(&base);
  if (!is_sl23 && !(q && q->k == 2)) throw DomainError("critical_with_cyclic: base must be SL(2,3) or Q8");
  if (!is_prime(p) || p == 2 || (is_sl23 && p == 3)) throw DomainError("critical_with_cyclic: p must be coprime to |base|");
  const GroupSpec g = product_with_cyclic(base, p);
  if (!detail::odd(mult_order(2, p))) return detail::reject(g, f, "o_p(2) even");
  if (!is_totally_real(f)) return detail::reject(g, f, "F not totally real");
  const Field fp = compositum(f, cyclotomic(p));
  const auto sp = splitting_data(fp, 2);
  if (!detail::odd(sp.e)) return detail::reject(g, f, "e_2(F(zeta_p)) even");
  if (!detail::odd(sp.f)) return detail::reject(g, f, "f_2(F(zeta_p)) even");
  const u64 copies = (p - 1) / relative_degree(fp, f);
  return detail::accept(g, f, {1, QuaternionSymbol{fp, QuaternionForm::MinusOneMinusOne, 0}, copies});
}

/// Faithful component of C_p ⋊_2 C_4 over F (a zeta-form quaternion when E_F = G).
inline SimpleComponent zb_component(u64 p, const Field& f) {
  const MetacyclicSplit g{p, 4, 2, p - 1};
  return component_of_pair(g, ShodaPair{2, p, 2}, f);
}

inline CriticalReport critical_zb(u64 p, const Field& f) {
  if (!is_prime(p) || p == 2) throw DomainError("critical_zb: p must be an odd prime");
  const GroupSpec g = MetacyclicSplit{p, 4, 2, p - 1};
  if (p % 4 != 3) return detail::reject(g, f, "p not congruent to -1 mod 4");
  if (is_totally_real(f)) return detail::reject(g, f, "F not totally imaginary");
  if (!subfield_of(intersect(cyclotomic(p), f), cyclotomic_real(p))) {
    return detail::reject(g, f, "Q(zeta_p) ∩ F not contained in Q(zeta_p + zeta_p^-1)");
  }
  const auto sp = splitting_data(f, p);
  if (!detail::odd(sp.e)) return detail::reject(g, f, "e_p(F) even");
  if (!detail::odd(sp.f)) return detail::reject(g, f, "f_p(F) even");
  return detail::accept(g, f, zb_component(p, f));
}

/// C_q x (C_p ⋊_2 C_4).
inline CriticalReport critical_zc_product(u64 q, u64 p, const Field& f) {
  if (!is_prime(p) || !is_prime(q) || p == 2 || q == 2 || p == q) {
    throw DomainError("critical_zc_product: p, q must be distinct odd primes");
  }
  const GroupSpec g = product_with_cyclic(MetacyclicSplit{p, 4, 2, p - 1}, q);
  if (!detail::odd(mult_order(static_cast<i64>(p), q))) return detail::reject(g, f, "o_q(p) even");
  if (p % 4 != 3) return detail::reject(g, f, "p not congruent to -1 mod 4");
  if (!is_totally_real(f)) return detail::reject(g, f, "F not totally real");
  const Field fq = compositum(f, cyclotomic(q));
  const auto sp = splitting_data(fq, p);
  if (!detail::odd(sp.e)) return detail::reject(g, f, "e_p(F(zeta_q)) even");
  if (!detail::odd(sp.f)) return detail::reject(g, f, "f_p(F(zeta_q)) even");
  const u64 copies = (q - 1) / relative_degree(fq, f);
  SimpleComponent w = tensor_with_field(zb_component(p, f), fq, f).front();
  w.multiplicity *= copies;
  return detail::accept(g, f, std::move(w));
}

// ---------------------------------------------------------------------------
// (Z)(c) with m = p prime and n >= 8

enum class ZcSubcase { None, I, II, III };

namespace detail {

inline bool all_odd_prime_conditions(u64 p, u64 n, u64 bound, bool include_two) {
  for (u64 q : prime_divisors(n)) {
    if (q == 2 && !include_two) continue;
    if (valuation(q, p - 1) > valuation(q, bound)) return false;
  }
  return true;
}

}  // namespace detail

/// Which valuation pattern of the (Z)(c) conditions the parameters satisfy (F-independent).
inline ZcSubcase zc_subcase(u64 p, u64 n, u64 k) {
  if (p % 4 == 1 || n % 2 == 1) return ZcSubcase::I;
  const unsigned vk = valuation(2, k);
  const unsigned vn = valuation(2, n);
  if (vk == 1 && vn == 2) return ZcSubcase::II;
  if (valuation(2, p + 1) + 1 <= vk && vn == vk + 1) return ZcSubcase::III;
  return ZcSubcase::None;
}

/// Family preconditions: n >= 8, p an odd prime not dividing n, o_p(r) = n/k,
/// and every prime of n divides both k and n/k.
inline std::optional<std::string> zc_family_violation(const MetacyclicSplit& g) {
  if (!is_prime(g.m) || g.m == 2) return "m is not an odd prime";
  if (g.n < 8) return "n < 8";
  if (g.n % g.m == 0) return "p divides n";
  for (u64 q : prime_divisors(g.n)) {
    if (g.k % q != 0 || (g.n / g.k) % q != 0) return "prime " + std::to_string(q) + " of n does not divide both k and n/k";
  }
  return std::nullopt;
}

/// The subcase clauses and the quotient quantifiers, given a provider of the
/// index data (e_h, f_h) for each divisor h of k (h = k gives e, f).
struct ZcEvaluation {
  bool holds = false;
  std::string failed;
  std::vector<std::string> diagnostics;
};

inline ZcEvaluation evaluate_zc_conditions(const MetacyclicSplit& g, bool field_imaginary,
                                           const std::function<std::pair<u64, u64>(u64)>& index_data) {
  const u64 p = g.m;
  const u64 n = g.n;
  const u64 k = g.k;
  const u64 u = n / k;
  ZcEvaluation out;
  auto m_ph = [&](u64 h) {
    const auto [e, f] = index_data(h);
    return detail::zc_min_index(p, f, e, h);
  };

  const u64 mp = m_ph(k);
  if (mp != u) {
    out.failed = "m_p = " + std::to_string(mp) + " differs from n/k = " + std::to_string(u);
    return out;
  }

  auto odd_ok = [&](u64 bound) { return detail::all_odd_prime_conditions(p, n, bound, false); };
  auto all_ok = [&](u64 bound) { return detail::all_odd_prime_conditions(p, n, bound, true); };
  auto require_below = [&](u64 h) -> bool {
    const u64 v = m_ph(h);
    if (v < u) return true;
    out.failed = "quotient h=" + std::to_string(h) + " has m_{p,h} = " + std::to_string(v) + ", not below n/k";
    return false;
  };
  auto require_m_p2 = [&]() -> bool {
    if (!(n == 2 * k && field_imaginary)) return true;
    const u64 v = m_ph(2);
    if (v == 1) return true;
    out.failed = "n = 2k and F totally imaginary but m_{p,2} = " + std::to_string(v);
    return false;
  };

  const unsigned vp1 = valuation(2, p + 1);
  switch (zc_subcase(p, n, k)) {
    case ZcSubcase::None:
      out.failed = "no subcase (i)-(iii) applies";
      return out;
    case ZcSubcase::I:
      if (!all_ok(k)) {
        out.failed = "subcase (i): v_q(p-1) > v_q(k)";
        return out;
      }
      for (u64 h : divisors(k)) {
        if (h == k || !all_ok(h)) continue;
        if (!require_below(h)) return out;
      }
      if (!require_m_p2()) return out;
      break;
    case ZcSubcase::II:
      if (!odd_ok(k)) {
        out.failed = "subcase (ii): v_q(p-1) > v_q(k) for an odd q";
        return out;
      }
      for (u64 h : divisors(k)) {
        if (h == k || valuation(2, h) != 1 || !odd_ok(h)) continue;
        if (!require_below(h)) return out;
      }
      break;
    case ZcSubcase::III:
      if (!odd_ok(k)) {
        out.failed = "subcase (iii): v_q(p-1) > v_q(k) for an odd q";
        return out;
      }
      for (u64 h : divisors(k)) {
        if (h == k || valuation(2, h) < vp1 + 1 || !odd_ok(k)) continue;
        if (!require_below(h)) return out;
      }
      for (u64 h : divisors(k)) {
        if (h == k || h == 2 || valuation(2, h) != 1 || !odd_ok(h)) continue;
        if (!require_below(h)) return out;
      }
      if (!require_m_p2()) return out;
      for (u64 h : divisors(k)) {
        const unsigned v = valuation(2, h);
        if (h != k && v >= 2 && v <= vp1) {
          out.diagnostics.push_back("divisor h=" + std::to_string(h) + " is covered by neither quantifier of subcase (iii)");
        }
      }
      break;
  }
  out.holds = true;
  return out;
}

inline CriticalReport critical_zc_general(const MetacyclicSplit& g, const Field& f) {
  if (const auto bad = zc_family_violation(g)) return detail::reject(g, f, "NotInFamily: " + *bad);
  const u64 p = g.m;
  const Field trace = make_field(p, {static_cast<i64>(g.r)});
  if (!subfield_of(intersect(cyclotomic(p), f), trace)) {
    return detail::reject(g, f, "Q(zeta_p) ∩ F not contained in the trace field of r");
  }
  const auto eval = evaluate_zc_conditions(g, is_totally_imaginary(f), [&](u64 h) {
    const ZcIndexData d = zc_index_data(g, h, f);
    return std::pair<u64, u64>{d.e_h, d.f_h};
  });
  CriticalReport r = eval.holds ? detail::accept(g, f, component_of_pair(g, ShodaPair{g.n / g.k, p, g.k}, f))
                                : detail::reject(g, f, eval.failed);
  r.diagnostics = eval.diagnostics;
  return r;
}

inline CriticalReport never_critical(const GroupSpec& g, const Field& f) {
  if (!std::holds_alternative<SL25>(g) && !std::holds_alternative<BinaryOctahedral>(g)) {
    throw DomainError("never_critical: only SL(2,5) and O*");
  }
  return detail::reject(g, f, "SL(2,5) and O* are never critical");
}

// ---------------------------------------------------------------------------
// Dispatcher

namespace detail {

inline CriticalReport with_group(CriticalReport r, const GroupSpec& g) {
  r.group = g;
  return r;
}

inline bool is_zb_core(const MetacyclicSplit& c) {
  return c.n == 4 && c.k == 2 && is_prime(c.m) && c.m != 2;
}

}  // namespace detail

inline CriticalReport is_critical(const GroupSpec& g, const Field& f) {
  validate(g);
  if (std::holds_alternative<Cyclic>(g)) return detail::reject(g, f, "abelian");
  if (std::holds_alternative<SL25>(g) || std::holds_alternative<BinaryOctahedral>(g)) return never_critical(g, f);
  if (std::holds_alternative<SL23>(g)) return critical_sl23(g, f);

  if (const auto* q = std::get_if<QuaternionGen>(&g)) {
    if (q->k == 2) return critical_q8(f);
    if (q->k % 2 == 0) return detail::reject(g, f, "Q_{4k} with k even is critical only for k = 2");
    if (q->k == 1) return detail::reject(g, f, "abelian");
    // Q_{4k} = C_k ⋊_2 C_4 for odd k
    return detail::with_group(is_critical(MetacyclicSplit{q->k, 4, 2, q->k - 1}, f), g);
  }

  if (const auto* pr = std::get_if<ProductWithCyclic>(&g)) {
    const GroupSpec& base = *pr->base;
    if (std::holds_alternative<SL23>(base)) return critical_with_cyclic(base, pr->p, f);
    if (const auto* q = std::get_if<QuaternionGen>(&base)) {
      if (q->k == 2) return critical_with_cyclic(base, pr->p, f);
      if (q->k % 2 == 1 && q->k > 1) {
        return detail::with_group(is_critical(product_with_cyclic(MetacyclicSplit{q->k, 4, 2, q->k - 1}, pr->p), f), g);
      }
      return detail::reject(g, f, "NotInAmitsurList");
    }
    if (const auto* m = std::get_if<MetacyclicSplit>(&base)) {
      const auto split = split_central_factor(*m);
      const u64 central = split.central * pr->p;
      if (split.core.m == 1 || split.core.n == split.core.k) return detail::reject(g, f, "abelian");
      if (is_prime(central) && central != 2 && detail::is_zb_core(split.core)) {
        return detail::with_group(critical_zc_product(central, split.core.m, f), g);
      }
      return detail::reject(g, f, "cyclic direct factor other than C_q x (C_p : C_4)");
    }
    if (std::holds_alternative<Cyclic>(base)) return detail::reject(g, f, "abelian");
    return detail::reject(g, f, "NotInAmitsurList");
  }

  const auto& m = std::get<MetacyclicSplit>(g);
  const auto split = split_central_factor(m);
  const MetacyclicSplit& core = split.core;
  if (core.m == 1 || core.n == core.k) return detail::reject(g, f, "abelian");
  if (split.central > 1) {
    if (is_prime(split.central) && split.central != 2 && detail::is_zb_core(core)) {
      return detail::with_group(critical_zc_product(split.central, core.m, f), g);
    }
    return detail::reject(g, f, "cyclic direct factor other than C_q x (C_p : C_4)");
  }
  if (!is_prime(core.m)) return detail::reject(g, f, "m is not prime");
  if (detail::is_zb_core(core)) return detail::with_group(critical_zb(core.m, f), g);
  if (core.n < 8) return detail::reject(g, f, "NotInFamily: n < 8");
  return detail::with_group(critical_zc_general(core, f), g);
}

// ---------------------------------------------------------------------------
// Cyclotomic fields

/// Direct evaluation of the simplified conditions for F = Q(zeta_m), m >= 3.
/// Residue degrees over Q(zeta_m, zeta_h) are o_{lcm(m,h)}(p).
inline bool cyclotomic_specialization(const GroupSpec& g, u64 m) {
  if (m < 3) throw DomainError("cyclotomic_specialization: m must be at least 3");
  const u64 s = valuation(2, m);
  const u64 m_odd = m >> s;
  auto family_a = [&] { return s <= 1 && mult_order(2, m_odd) % 2 == 1; };
  auto family_b = [&](u64 p) {
    return p % 4 == 3 && gcd(p, m) == 1 && mult_order(static_cast<i64>(p), m) % 2 == 1;
  };
  auto family_c = [&](const MetacyclicSplit& c) {
    if (zc_family_violation(c) || gcd(c.m, m) != 1) return false;
    const u64 p = c.m;
    const u64 u = c.n / c.k;
    return evaluate_zc_conditions(c, true, [&](u64 h) {
             return std::pair<u64, u64>{u, mult_order(static_cast<i64>(p), lcm(m, h))};
           })
        .holds;
  };

  if (std::holds_alternative<SL23>(g)) return family_a();
  if (const auto* q = std::get_if<QuaternionGen>(&g)) {
    if (q->k == 2) return family_a();
    if (q->k % 2 == 1 && q->k > 1) return cyclotomic_specialization(MetacyclicSplit{q->k, 4, 2, q->k - 1}, m);
    return false;
  }
  if (const auto* mc = std::get_if<MetacyclicSplit>(&g)) {
    const auto split = split_central_factor(*mc);
    if (split.central > 1 || split.core.m == 1 || split.core.n == split.core.k) return false;
    if (!is_prime(split.core.m)) return false;
    if (detail::is_zb_core(split.core)) return family_b(split.core.m);
    return family_c(split.core);
  }
  // Cyclic groups, SL(2,5), O* and the direct products need a totally real F.
  return false;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace detail {

/// Smallest residue of order u modulo the prime p.
inline u64 smallest_of_order_prime(u64 u, u64 p) {
  u64 g = 2;
  while (mult_order(static_cast<i64>(g), p) != p - 1) ++g;
  const u64 base = powmod(g, (p - 1) / u, p);
  u64 best = p;
  u64 power = 1;
  for (u64 j = 0; j < u; ++j) {
    if (gcd(j, u) == 1) best = std::min(best, power);
    power = mulmod(power, base, p);
  }
  return best;
}

inline std::vector<u64> primes_up_to(u64 n) {
  std::vector<u64> out;
  if (n < 2) return out;
  std::vector<bool> composite(n + 1, false);
  for (u64 i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace detail

/// Critical groups of order at most max_order among the parameterized families,
/// sorted by order and then structure string.
inline std::vector<CriticalReport> enumerate_critical(const Field& f, u64 max_order) {
  if (max_order < 1) throw DomainError("enumerate_critical: max_order must be positive");
  std::vector<GroupSpec> candidates;
  const bool real = is_totally_real(f);
  const auto primes = detail::primes_up_to(max_order / 4 + 2);

  if (max_order >= 8) candidates.push_back(QuaternionGen{2});
  if (max_order >= 24) candidates.push_back(SL23{});
  for (u64 p : primes) {
    if (p == 2 || !real || mult_order(2, p) % 2 == 0) continue;
    if (8 * p <= max_order) candidates.push_back(product_with_cyclic(QuaternionGen{2}, p));
    if (p != 3 && 24 * p <= max_order) candidates.push_back(product_with_cyclic(SL23{}, p));
  }
  for (u64 p : primes) {
    if (p % 4 != 3 || 4 * p > max_order) continue;
    if (!real) candidates.push_back(MetacyclicSplit{p, 4, 2, p - 1});
    if (!real) continue;
    for (u64 q : primes) {
      if (4 * p * q > max_order) break;
      if (q == 2 || q == p || mult_order(static_cast<i64>(p), q) % 2 == 0) continue;
      candidates.push_back(product_with_cyclic(MetacyclicSplit{p, 4, 2, p - 1}, q));
    }
  }
  for (u64 p : primes) {
    if (p == 2 || 8 * p > max_order) continue;
    for (u64 n = 8; n * p <= max_order; ++n) {
      if (n % p == 0) continue;
      const auto n_primes = prime_divisors(n);
      for (u64 u : divisors(gcd(n, p - 1))) {
        if (u == 1) continue;
        const u64 k = n / u;
        const bool shaped = std::all_of(n_primes.begin(), n_primes.end(), [&](u64 q) { return k % q == 0 && u % q == 0; });
        if (!shaped || zc_subcase(p, n, k) == ZcSubcase::None) continue;
        candidates.push_back(MetacyclicSplit{p, n, k, detail::smallest_of_order_prime(u, p)});
      }
    }
  }

  std::vector<CriticalReport> out;
  for (const auto& g : candidates) {
    CriticalReport r = is_critical(g, f);
    if (r.verdict) out.push_back(std::move(r));
  }
  std::stable_sort(out.begin(), out.end(), [](const CriticalReport& a, const CriticalReport& b) {
    const u64 oa = order(a.group);
    const u64 ob = order(b.group);
    if (oa != ob) return oa < ob;
    return format_group(a.group) < format_group(b.group);
  });
  return out;
}

/// SmallGroup identifiers of the rational critical groups up to order 200,
/// keyed by structure string; used only to decorate reports.
inline std::optional<std::string> known_smallgroup_id(const GroupSpec& g) {
  static const std::map<std::string, std::string> ids = {
      {"C5 : C8 (k=4)", "[40, 1]"},          {"C3 : C16 (k=8)", "[48, 1]"},
      {"C7 x Q8", "[56, 10]"},               {"C7 : C9 (k=3)", "[63, 1]"},
      {"C5 : C16 (k=4)", "[80, 3]"},         {"C3 x (C7 : C4 (k=2))", "[84, 4]"},
      {"C13 : C8 (k=4)", "[104, 1]"},        {"C13 : C9 (k=3)", "[117, 1]"},
      {"C11 x (C3 : C4 (k=2))", "[132, 1]"}, {"C13 x (C3 : C4 (k=2))", "[156, 3]"},
      {"C7 x SL(2,3)", "[168, 22]"},         {"C11 : C16 (k=8)", "[176, 1]"},
      {"C23 x Q8", "[184, 10]"},
  };
  const auto it = ids.find(format_group(g));
  if (it == ids.end()) return std::nullopt;
  return it->second;
}

}  // namespace wedder

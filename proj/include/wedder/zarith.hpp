#pragma once

// Exact integer and residue-class primitives.
//
// Everything here works on machine integers (64-bit) with explicit overflow
// checks; products that may exceed 64 bits go through unsigned __int128.
// Residues are always normalized to [0, m).

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wedder/errors.hpp"

namespace wedder {

using u64 = std::uint64_t;
using i64 = std::int64_t;

namespace detail {

inline u64 checked_mul(u64 a, u64 b) {
  if (a != 0 && b > std::numeric_limits<u64>::max() / a) {
    throw std::overflow_error("wedder: integer overflow in multiplication");
  }
  return a * b;
}

}  // namespace detail

inline u64 gcd(u64 a, u64 b) { return std::gcd(a, b); }

inline u64 lcm(u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  return detail::checked_mul(a / gcd(a, b), b);
}

/// Representative of r mod m in [0, m).
inline u64 mod(i64 r, u64 m) {
  if (m == 0) throw DomainError("mod: modulus must be positive");
  const i64 sm = static_cast<i64>(m);
  i64 x = r % sm;
  if (x < 0) x += sm;
  return static_cast<u64>(x);
}

inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

inline u64 powmod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

/// Exact integer power with overflow check.
inline u64 ipow(u64 base, unsigned exp) {
  u64 result = 1;
  for (unsigned i = 0; i < exp; ++i) result = detail::checked_mul(result, base);
  return result;
}

/// Deterministic trial-division primality test (desk-scale inputs).
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (u64 d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

struct PrimePower {
  u64 prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization by trial division, primes in increasing order.
inline std::vector<PrimePower> factorize(u64 n) {
  if (n == 0) throw DomainError("factorize: zero has no factorization");
  std::vector<PrimePower> out;
  for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

inline std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> out;
  for (const auto& pp : factorize(n)) out.push_back(pp.prime);
  return out;
}

/// All positive divisors, sorted ascending.
inline std::vector<u64> divisors(u64 n) {
  std::vector<u64> out{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    u64 pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline u64 euler_phi(u64 n) {
  u64 result = n;
  for (const auto& pp : factorize(n)) result = result / pp.prime * (pp.prime - 1);
  return result;
}

/// v_p(m): the largest k with p^k | m.
inline unsigned valuation(u64 p, u64 m) {
  if (!is_prime(p)) throw DomainError("valuation: " + std::to_string(p) + " is not prime");
  if (m == 0) throw DomainError("valuation: m must be positive");
  unsigned k = 0;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  return k;
}

/// o_m(r): multiplicative order of r modulo m.
inline u64 mult_order(i64 r, u64 m) {
  if (m == 0) throw DomainError("mult_order: modulus must be positive");
  if (m == 1) return 1;
  const u64 x = mod(r, m);
  if (gcd(x, m) != 1) {
    throw DomainError("mult_order: " + std::to_string(r) + " is not a unit modulo " + std::to_string(m));
  }
  u64 order = euler_phi(m);
  for (const auto& [p, e] : factorize(order)) {
    for (unsigned i = 0; i < e; ++i) {
      if (powmod(x, order / p, m) != 1) break;
      order /= p;
    }
  }
  return order;
}

/// A subgroup of (Z/mZ)^*, stored as the full sorted list of its elements.
struct ResidueSubgroup {
  u64 modulus = 1;
  std::vector<u64> elements{0};  // mod 1 the unit group is {0}

  std::size_t size() const { return elements.size(); }

  bool contains(u64 x) const {
    return std::binary_search(elements.begin(), elements.end(), x % modulus);
  }

  friend bool operator==(const ResidueSubgroup&, const ResidueSubgroup&) = default;
};

/// Bitmap membership view; cheaper than binary search in hot loops.
inline std::vector<bool> membership_mask(const ResidueSubgroup& h) {
  std::vector<bool> mask(h.modulus, false);
  for (u64 x : h.elements) mask[x] = true;
  return mask;
}

/// The full unit group (Z/mZ)^*.
inline ResidueSubgroup unit_group(u64 m) {
  if (m == 0) throw DomainError("unit_group: modulus must be positive");
  ResidueSubgroup g{m, {}};
  if (m == 1) {
    g.elements = {0};
    return g;
  }
  g.elements.reserve(euler_phi(m));
  for (u64 x = 1; x < m; ++x) {
    if (gcd(x, m) == 1) g.elements.push_back(x);
  }
  return g;
}

/// Smallest subgroup of (Z/mZ)^* containing the given generators.
inline ResidueSubgroup subgroup_closure(u64 m, const std::vector<i64>& generators) {
  if (m == 0) throw DomainError("subgroup_closure: modulus must be positive");
  std::vector<u64> gens;
  for (i64 g : generators) {
    const u64 x = mod(g, m);
    if (gcd(x, m) != 1 && m != 1) {
      throw DomainError("subgroup_closure: generator " + std::to_string(g) + " is not a unit modulo " +
                        std::to_string(m));
    }
    gens.push_back(x);
  }
  ResidueSubgroup h{m, {}};
  if (m == 1) return ResidueSubgroup{};

  std::vector<bool> seen(m, false);
  std::vector<u64> frontier{1};
  seen[1] = true;
  h.elements.push_back(1);
  while (!frontier.empty()) {
    const u64 x = frontier.back();
    frontier.pop_back();
    for (u64 g : gens) {
      const u64 y = mulmod(x, g, m);
      if (!seen[y]) {
        seen[y] = true;
        h.elements.push_back(y);
        frontier.push_back(y);
      }
    }
  }
  std::sort(h.elements.begin(), h.elements.end());
  return h;
}

/// Product set H1*H2 of two subgroups of the same unit group.
inline ResidueSubgroup subgroup_product(const ResidueSubgroup& a, const ResidueSubgroup& b) {
  if (a.modulus != b.modulus) throw DomainError("subgroup_product: moduli differ");
  const u64 m = a.modulus;
  if (m == 1) return a;
  std::vector<bool> seen(m, false);
  ResidueSubgroup h{m, {}};
  // `seen` is always a union of b-cosets, so an already-covered x adds nothing.
  for (u64 x : a.elements) {
    if (seen[x]) continue;
    for (u64 y : b.elements) {
      const u64 z = mulmod(x, y, m);
      if (!seen[z]) {
        seen[z] = true;
        h.elements.push_back(z);
      }
    }
  }
  std::sort(h.elements.begin(), h.elements.end());
  return h;
}

inline ResidueSubgroup subgroup_intersection(const ResidueSubgroup& a, const ResidueSubgroup& b) {
  if (a.modulus != b.modulus) throw DomainError("subgroup_intersection: moduli differ");
  ResidueSubgroup h{a.modulus, {}};
  std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(), b.elements.end(),
                        std::back_inserter(h.elements));
  return h;
}

inline bool is_subgroup_of(const ResidueSubgroup& small, const ResidueSubgroup& big) {
  if (small.modulus != big.modulus) throw DomainError("is_subgroup_of: moduli differ");
  return std::includes(big.elements.begin(), big.elements.end(), small.elements.begin(), small.elements.end());
}

/// Preimage of a subgroup of (Z/mZ)^* under reduction (Z/MZ)^* -> (Z/mZ)^*, m | M.
inline ResidueSubgroup lift_subgroup(const ResidueSubgroup& h, u64 big_modulus) {
  if (big_modulus % h.modulus != 0) throw DomainError("lift_subgroup: target modulus is not a multiple");
  if (big_modulus == h.modulus) return h;
  const std::vector<bool> mask = membership_mask(h);
  ResidueSubgroup out{big_modulus, {}};
  for (u64 x = 1; x < big_modulus; ++x) {
    if (mask[x % h.modulus] && gcd(x, big_modulus) == 1) out.elements.push_back(x);
  }
  return out;
}

/// Image of a subgroup under reduction modulo d, d | m.
inline ResidueSubgroup reduce_subgroup(const ResidueSubgroup& h, u64 d) {
  if (d == 0 || h.modulus % d != 0) throw DomainError("reduce_subgroup: d must divide the modulus");
  ResidueSubgroup out{d, {}};
  if (d == 1) return ResidueSubgroup{};
  std::vector<bool> seen(d, false);
  for (u64 x : h.elements) {
    const u64 y = x % d;
    if (!seen[y]) {
      seen[y] = true;
      out.elements.push_back(y);
    }
  }
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

/// Solution x mod (m1*m2) of x = a1 (m1), x = a2 (m2) for coprime moduli.
inline u64 crt_pair(u64 a1, u64 m1, u64 a2, u64 m2) {
  if (gcd(m1, m2) != 1) throw DomainError("crt_pair: moduli are not coprime");
  const u64 m = detail::checked_mul(m1, m2);
  if (m1 == 1) return a2 % m;
  if (m2 == 1) return a1 % m;
  // x = a1 + m1 * t, with t = (a2 - a1) * m1^{-1} mod m2
  const u64 inv = powmod(m1 % m2, euler_phi(m2) - 1, m2);
  const u64 diff = mod(static_cast<i64>(a2 % m2) - static_cast<i64>(a1 % m2), m2);
  const u64 t = mulmod(diff, inv, m2);
  return (a1 % m1 + static_cast<u64>((static_cast<unsigned __int128>(m1) * t) % m)) % m;
}

/// Isomorphism (Z/mZ)^* <-> prod (Z/m_i Z)^* for a pairwise coprime factorization m = prod m_i.
class CrtSplit {
 public:
  CrtSplit(u64 modulus, std::vector<u64> factors) : modulus_(modulus), factors_(std::move(factors)) {
    u64 product = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (factors_[i] == 0) throw DomainError("CrtSplit: zero factor");
      for (std::size_t j = 0; j < i; ++j) {
        if (gcd(factors_[i], factors_[j]) != 1) throw DomainError("CrtSplit: factors are not pairwise coprime");
      }
      product = detail::checked_mul(product, factors_[i]);
    }
    if (product != modulus_) throw DomainError("CrtSplit: factors do not multiply to the modulus");
  }

  u64 modulus() const { return modulus_; }
  const std::vector<u64>& factors() const { return factors_; }

  std::vector<u64> split(u64 x) const {
    std::vector<u64> out;
    out.reserve(factors_.size());
    for (u64 f : factors_) out.push_back(x % f);
    return out;
  }

  u64 join(const std::vector<u64>& components) const {
    if (components.size() != factors_.size()) throw DomainError("CrtSplit::join: wrong number of components");
    u64 x = 0;
    u64 m = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      x = crt_pair(x, m, components[i] % factors_[i], factors_[i]);
      m *= factors_[i];
    }
    return x;
  }

 private:
  u64 modulus_;
  std::vector<u64> factors_;
};

/// Convenience: the primary decomposition m = prod p^a as a CrtSplit.
inline CrtSplit primary_split(u64 m) {
  std::vector<u64> f;
  for (const auto& [p, e] : factorize(m)) f.push_back(ipow(p, e));
  return CrtSplit(m, f);
}

}  // namespace wedder

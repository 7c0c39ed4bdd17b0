#pragma once

#include <random>
#include <vector>

#include "wedder/wedder.hpp"

namespace wedder::testing {

/// Random abelian field of conductor dividing some m <= max_m.
inline Field random_field(std::mt19937_64& rng, u64 max_m) {
  const u64 m = 1 + rng() % max_m;
  std::vector<i64> gens;
  const int count = static_cast<int>(rng() % 3);
  for (int i = 0; i < count && m > 2; ++i) {
    const u64 g = 1 + rng() % (m - 1);
    if (gcd(g, m) == 1) gens.push_back(static_cast<i64>(g));
  }
  return make_field(m, gens);
}

inline u64 random_prime(std::mt19937_64& rng, u64 below) {
  for (;;) {
    const u64 p = 2 + rng() % (below - 2);
    if (is_prime(p)) return p;
  }
}

/// Every split metacyclic C_m : C_n (gcd(m,n) = 1) of order <= max_order, one per (m, n, k, <r>).
inline std::vector<MetacyclicSplit> metacyclic_up_to(u64 max_order) {
  std::vector<MetacyclicSplit> out;
  for (u64 m = 1; m <= max_order; ++m) {
    for (u64 n = 1; m * n <= max_order; ++n) {
      if (gcd(m, n) != 1) continue;
      std::vector<ResidueSubgroup> seen;
      for (u64 r = 0; r < (m == 1 ? 1 : m); ++r) {
        if (m > 1 && gcd(r, m) != 1) continue;
        const u64 u = mult_order(static_cast<i64>(r), m);
        if (n % u != 0) continue;
        const auto h = subgroup_closure(m, {static_cast<i64>(r)});
        bool dup = false;
        for (const auto& s : seen) dup = dup || s == h;
        if (dup) continue;
        seen.push_back(h);
        out.push_back({m, n, n / u, r});
      }
    }
  }
  return out;
}

}  // namespace wedder::testing

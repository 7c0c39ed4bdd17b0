#pragma once

// Abelian number fields as fixed fields F = Fix(H) inside Q(zeta_m), with H a
// subgroup of (Z/mZ)^* ~ Gal(Q(zeta_m)/Q). Values are kept in canonical form
// (m is the true conductor) so structural equality is field equality.

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wedder/zarith.hpp"

namespace wedder {

class AbelianNumberField {
 public:
  /// The field Q.
  AbelianNumberField() = default;

  /// Canonicalizing constructor: Fix(fixer) inside Q(zeta_{fixer.modulus}).
  explicit AbelianNumberField(ResidueSubgroup fixer) : fixer_(std::move(fixer)) { canonicalize(); }

  u64 conductor() const { return fixer_.modulus; }
  const ResidueSubgroup& fixer() const { return fixer_; }
  u64 degree() const { return euler_phi(conductor()) / fixer_.size(); }

  /// Fixer of this field viewed inside Q(zeta_M); M must be a multiple of the conductor.
  ResidueSubgroup fixer_in(u64 big_modulus) const { return lift_subgroup(fixer_, big_modulus); }

  friend bool operator==(const AbelianNumberField&, const AbelianNumberField&) = default;

  /// Total order used for deterministic sorting (conductor, then fixer).
  friend bool operator<(const AbelianNumberField& a, const AbelianNumberField& b) {
    if (a.conductor() != b.conductor()) return a.conductor() < b.conductor();
    return a.fixer_.elements < b.fixer_.elements;
  }

 private:
  void canonicalize() {
    const u64 m = fixer_.modulus;
    if (m == 1) return;
    const std::vector<bool> in_fixer = membership_mask(fixer_);
    // For each prime q^a || m find the least b such that every unit that is
    // 1 modulo (m/q^a)*q^b already lies in the fixer. The conductor is the
    // product of the q^b.
    u64 d = 1;
    for (const auto& [q, a] : factorize(m)) {
      const u64 qa = ipow(q, a);
      const u64 rest = m / qa;
      unsigned best = a;
      for (unsigned b = 0; b < a; ++b) {
        const u64 step = rest * ipow(q, b);
        bool kernel_inside = true;
        for (u64 x = 1; x < m; x += step) {
          if (x % q == 0) continue;
          if (!in_fixer[x]) {
            kernel_inside = false;
            break;
          }
        }
        if (kernel_inside) {
          best = b;
          break;
        }
      }
      d *= ipow(q, best);
    }
    if (d != m) fixer_ = reduce_subgroup(fixer_, d);
  }

  ResidueSubgroup fixer_{};
};

using Field = AbelianNumberField;

inline Field rationals() { return Field{}; }

/// Q(zeta_m).
inline Field cyclotomic(u64 m) {
  if (m == 0) throw DomainError("cyclotomic: m must be positive");
  if (m == 1) return rationals();
  return Field(ResidueSubgroup{m, {1}});
}

/// Fix(H) with H generated by the given residues modulo m.
inline Field make_field(u64 m, const std::vector<i64>& fixer_generators) {
  return Field(subgroup_closure(m, fixer_generators));
}

/// Q(zeta_m + zeta_m^{-1}).
inline Field cyclotomic_real(u64 m) { return make_field(m, {-1}); }

/// Abelian fields are either totally real or totally imaginary; this is true
/// iff complex conjugation (-1 mod m) lies in the fixer.
inline bool is_totally_real(const Field& f) {
  const u64 m = f.conductor();
  return m <= 2 || f.fixer().contains(m - 1);
}

inline bool is_totally_imaginary(const Field& f) { return !is_totally_real(f); }

/// F ⊆ G (as subfields of a common cyclotomic field).
inline bool subfield_of(const Field& small, const Field& big) {
  const u64 m = lcm(small.conductor(), big.conductor());
  return is_subgroup_of(big.fixer_in(m), small.fixer_in(m));
}

inline Field compositum(const Field& a, const Field& b) {
  const u64 m = lcm(a.conductor(), b.conductor());
  return Field(subgroup_intersection(a.fixer_in(m), b.fixer_in(m)));
}

inline Field intersect(const Field& a, const Field& b) {
  const u64 m = lcm(a.conductor(), b.conductor());
  return Field(subgroup_product(a.fixer_in(m), b.fixer_in(m)));
}

/// zeta_k in F.
inline bool contains_root_of_unity(const Field& f, u64 k) {
  if (k == 0) throw DomainError("contains_root_of_unity: k must be positive");
  if (k <= 2) return true;
  const u64 m = lcm(f.conductor(), k);
  for (u64 x : f.fixer_in(m).elements) {
    if (x % k != 1) return false;
  }
  return true;
}

/// Relative degree [big : small]; requires small ⊆ big.
inline u64 relative_degree(const Field& big, const Field& small) {
  if (!subfield_of(small, big)) throw DomainError("relative_degree: not a subfield");
  return big.degree() / small.degree();
}

/// Marker for the infinite prime in PrimeSplitting.
inline constexpr u64 kInfinitePrime = 0;

/// Splitting of a rational prime (or the infinite prime) in an abelian field.
/// For the infinite prime e = 2 encodes "complex places".
struct PrimeSplitting {
  u64 prime = kInfinitePrime;
  u64 e = 1;
  u64 f = 1;
  u64 g = 1;

  friend bool operator==(const PrimeSplitting&, const PrimeSplitting&) = default;
};

inline PrimeSplitting splitting_at_infinity(const Field& field) {
  const u64 e = is_totally_real(field) ? 1 : 2;
  return {kInfinitePrime, e, 1, field.degree() / e};
}

/// e, f, g of the rational prime p in F, read off from the inertia and
/// decomposition subgroups of (Z/mZ)^* modulo the fixer.
inline PrimeSplitting splitting_data(const Field& field, u64 p) {
  if (!is_prime(p)) throw DomainError("splitting_data: " + std::to_string(p) + " is not prime");
  const u64 m = field.conductor();
  if (m == 1) return {p, 1, 1, 1};

  const unsigned a = valuation(p, m);
  const u64 pa = ipow(p, a);
  const u64 rest = m / pa;
  const std::vector<bool> in_fixer = membership_mask(field.fixer());

  // Inertia: units congruent to 1 modulo the prime-to-p part.
  std::vector<u64> inertia;
  u64 inertia_in_fixer = 0;
  for (u64 x = 1; x < m; x += rest) {
    if (x % p == 0) continue;
    inertia.push_back(x);
    if (in_fixer[x]) ++inertia_in_fixer;
  }
  const u64 e = inertia.size() / inertia_in_fixer;

  // Decomposition group: inertia times powers of the Frobenius lift.
  const u64 frob = crt_pair(1, pa, p % rest, rest);
  const u64 frob_order = rest == 1 ? 1 : mult_order(static_cast<i64>(p), rest);
  u64 decomposition_in_fixer = 0;
  u64 power = 1;
  for (u64 j = 0; j < frob_order; ++j) {
    for (u64 x : inertia) {
      if (in_fixer[mulmod(x, power, m)]) ++decomposition_in_fixer;
    }
    power = mulmod(power, frob, m);
  }
  const u64 decomposition_size = inertia.size() * frob_order;
  const u64 ef = decomposition_size / decomposition_in_fixer;
  const u64 f = ef / e;
  return {p, e, f, field.degree() / ef};
}

/// Splitting data for a place given as a rational prime or kInfinitePrime.
inline PrimeSplitting splitting_at(const Field& field, u64 place) {
  return place == kInfinitePrime ? splitting_at_infinity(field) : splitting_data(field, place);
}

/// e_p(big/small) = e_p(big/Q) / e_p(small/Q) for abelian small ⊆ big.
inline u64 relative_ramification(const Field& big, const Field& small, u64 p) {
  if (!subfield_of(small, big)) throw DomainError("relative_ramification: not a subfield");
  const u64 eb = splitting_at(big, p).e;
  const u64 es = splitting_at(small, p).e;
  if (eb % es != 0) throw std::logic_error("relative_ramification: ramification is not multiplicative");
  return eb / es;
}

/// f_p(big/small) = f_p(big/Q) / f_p(small/Q) for abelian small ⊆ big.
inline u64 relative_residue_degree(const Field& big, const Field& small, u64 p) {
  if (!subfield_of(small, big)) throw DomainError("relative_residue_degree: not a subfield");
  const u64 fb = splitting_at(big, p).f;
  const u64 fs = splitting_at(small, p).f;
  if (fb % fs != 0) throw std::logic_error("relative_residue_degree: residue degree is not multiplicative");
  return fb / fs;
}

// ---------------------------------------------------------------------------
// Notation: Rationals, GaussianRationals, CF(m), NF(m,[ a1, ..., ar ])

inline std::string format_field(const Field& f) {
  const u64 m = f.conductor();
  if (m == 1) return "Rationals";
  if (f.fixer().size() == 1) return m == 4 ? "GaussianRationals" : "CF(" + std::to_string(m) + ")";
  std::string out = "NF(" + std::to_string(m) + ",[ ";
  const auto& el = f.fixer().elements;
  for (std::size_t i = 0; i < el.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(el[i]);
  }
  out += " ])";
  return out;
}

namespace detail {

inline std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

inline u64 parse_u64(std::string_view s, std::string_view what) {
  if (s.empty() || s.size() > 18) throw ParseError(std::string("expected a positive integer for ") + std::string(what));
  u64 v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw ParseError(std::string("expected a positive integer for ") + std::string(what));
    v = v * 10 + static_cast<u64>(c - '0');
  }
  return v;
}

inline i64 parse_i64(std::string_view s, std::string_view what) {
  if (!s.empty() && s.front() == '-') return -static_cast<i64>(parse_u64(s.substr(1), what));
  return static_cast<i64>(parse_u64(s, what));
}

}  // namespace detail

/// Parses Q, Rationals, GaussianRationals, CF(m) and NF(m,[...]); in NF the
/// list must be a full subgroup of (Z/mZ)^*.
inline Field parse_field(std::string_view text) {
  const std::string s = detail::strip_spaces(text);
  if (s == "Q" || s == "Rationals" || s == "CF(1)") return rationals();
  if (s == "GaussianRationals") return cyclotomic(4);
  auto ends_with = [&](std::string_view suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (s.rfind("CF(", 0) == 0 && ends_with(")")) {
    const u64 m = detail::parse_u64(std::string_view(s).substr(3, s.size() - 4), "CF conductor");
    if (m == 0) throw ParseError("CF conductor must be positive");
    return cyclotomic(m);
  }
  if (s.rfind("NF(", 0) == 0 && ends_with("])")) {
    const std::size_t comma = s.find(",[");
    if (comma == std::string::npos) throw ParseError("malformed NF notation: " + std::string(text));
    const u64 m = detail::parse_u64(std::string_view(s).substr(3, comma - 3), "NF conductor");
    if (m == 0) throw ParseError("NF conductor must be positive");
    const std::string list = s.substr(comma + 2, s.size() - comma - 4);
    std::vector<i64> elems;
    std::size_t pos = 0;
    while (pos <= list.size() && !list.empty()) {
      const std::size_t next = list.find(',', pos);
      const std::string tok = list.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
      elems.push_back(detail::parse_i64(tok, "NF residue"));
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    if (elems.empty()) throw ParseError("NF residue list is empty");
    std::vector<u64> given;
    for (i64 x : elems) {
      const u64 r = mod(x, m);
      if (gcd(r, m) != 1 && m != 1) throw ParseError("NF residue " + std::to_string(x) + " is not a unit");
      given.push_back(r);
    }
    std::sort(given.begin(), given.end());
    given.erase(std::unique(given.begin(), given.end()), given.end());
    ResidueSubgroup h = subgroup_closure(m, elems);
    if (h.elements != given) {
      throw ParseError("NF residue list is not a subgroup of the unit group: " + std::string(text));
    }
    return Field(std::move(h));
  }
  throw ParseError("unrecognized field notation: " + std::string(text));
}

}  // namespace wedder

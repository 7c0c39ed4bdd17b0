#pragma once

// Finite group families handled by the library, their structure strings, and
// the Amitsur (Z)(c) membership test for split metacyclic groups.

#include <cctype>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wedder/zarith.hpp"

namespace wedder {

struct Cyclic {
  u64 m = 1;
  friend bool operator==(const Cyclic&, const Cyclic&) = default;
};

/// <a>_m ⋊_k <b>_n with b^{-1} a b = a^r; k is the order of the kernel of the action.
struct MetacyclicSplit {
  u64 m = 1;
  u64 n = 1;
  u64 k = 1;
  u64 r = 0;
  friend bool operator==(const MetacyclicSplit&, const MetacyclicSplit&) = default;
};

/// Generalized quaternion group Q_{4k} = <a, b | a^{2k}, a^k = b^2, b^{-1} a b = a^{-1}>.
struct QuaternionGen {
  u64 k = 2;
  friend bool operator==(const QuaternionGen&, const QuaternionGen&) = default;
};

struct SL23 {
  friend bool operator==(const SL23&, const SL23&) = default;
};
struct SL25 {
  friend bool operator==(const SL25&, const SL25&) = default;
};
struct BinaryOctahedral {
  friend bool operator==(const BinaryOctahedral&, const BinaryOctahedral&) = default;
};

struct ProductWithCyclic;

using GroupSpec = std::variant<Cyclic, MetacyclicSplit, QuaternionGen, SL23, SL25, BinaryOctahedral, ProductWithCyclic>;

/// base x C_p, p prime and coprime to |base|.
struct ProductWithCyclic {
  std::shared_ptr<const GroupSpec> base;
  u64 p = 2;

  friend bool operator==(const ProductWithCyclic& a, const ProductWithCyclic& b) {
    if (a.p != b.p) return false;
    if (!a.base || !b.base) return a.base == b.base;
    return *a.base == *b.base;
  }
};

inline u64 order(const GroupSpec& g);

namespace detail {

struct OrderVisitor {
  u64 operator()(const Cyclic& c) const { return c.m; }
  u64 operator()(const MetacyclicSplit& g) const { return checked_mul(g.m, g.n); }
  u64 operator()(const QuaternionGen& q) const { return checked_mul(4, q.k); }
  u64 operator()(const SL23&) const { return 24; }
  u64 operator()(const SL25&) const { return 120; }
  u64 operator()(const BinaryOctahedral&) const { return 48; }
  u64 operator()(const ProductWithCyclic& g) const { return checked_mul(order(*g.base), g.p); }
};

}  // namespace detail

inline u64 order(const GroupSpec& g) { return std::visit(detail::OrderVisitor{}, g); }

/// Smallest residue r' with <r'> = <r> in (Z/mZ)^*.
inline u64 canonical_generator(u64 r, u64 m) {
  if (m == 1) return 0;
  const u64 target = mult_order(static_cast<i64>(r), m);
  // generators of <r> are the r^j with gcd(j, target) = 1
  u64 best = m;
  u64 power = 1;
  for (u64 j = 0; j < target; ++j) {
    if (gcd(j, target) == 1 && power < best) best = power;
    power = mulmod(power, r % m, m);
  }
  return best;
}

/// Smallest residue of multiplicative order u modulo m, if any.
inline std::optional<u64> smallest_of_order(u64 u, u64 m) {
  if (m == 1) return u == 1 ? std::optional<u64>(0) : std::nullopt;
  for (u64 x = 1; x < m; ++x) {
    if (gcd(x, m) == 1 && mult_order(static_cast<i64>(x), m) == u) return x;
  }
  return std::nullopt;
}

/// Validates and normalizes a metacyclic descriptor (r reduced into [0, m)).
inline MetacyclicSplit make_metacyclic(u64 m, u64 n, u64 k, i64 r) {
  if (m == 0 || n == 0 || k == 0) throw DomainError("metacyclic: m, n, k must be positive");
  if (gcd(m, n) != 1) throw DomainError("metacyclic: gcd(m, n) must be 1");
  if (n % k != 0) throw DomainError("metacyclic: k must divide n");
  const u64 rr = mod(r, m);
  if (m > 1 && gcd(rr, m) != 1) throw DomainError("metacyclic: r must be a unit modulo m");
  if (mult_order(static_cast<i64>(rr), m) != n / k) {
    throw DomainError("metacyclic: the order of r modulo m must equal n/k");
  }
  return {m, n, k, rr};
}

/// Same, choosing the canonical action (smallest r of order n/k).
inline MetacyclicSplit make_metacyclic(u64 m, u64 n, u64 k) {
  if (m == 0 || n == 0 || k == 0) throw DomainError("metacyclic: m, n, k must be positive");
  if (n % k != 0) throw DomainError("metacyclic: k must divide n");
  const auto r = smallest_of_order(n / k, m);
  if (!r) throw DomainError("metacyclic: no unit of order n/k modulo m");
  return make_metacyclic(m, n, k, static_cast<i64>(*r));
}

inline bool has_canonical_action(const MetacyclicSplit& g) {
  const auto r = smallest_of_order(g.n / g.k, g.m);
  return r && *r == g.r;
}

inline GroupSpec product_with_cyclic(GroupSpec base, u64 p) {
  if (!is_prime(p)) throw DomainError("product: cyclic factor order must be prime");
  if (order(base) % p == 0) throw DomainError("product: p must be coprime to the order of the base group");
  return ProductWithCyclic{std::make_shared<const GroupSpec>(std::move(base)), p};
}

/// Checks the structural invariants of a descriptor; throws DomainError when violated.
inline void validate(const GroupSpec& g) {
  if (const auto* c = std::get_if<Cyclic>(&g)) {
    if (c->m == 0) throw DomainError("cyclic: order must be positive");
  } else if (const auto* mc = std::get_if<MetacyclicSplit>(&g)) {
    make_metacyclic(mc->m, mc->n, mc->k, static_cast<i64>(mc->r));
    if (mc->r >= mc->m && mc->m > 1) throw DomainError("metacyclic: r must be reduced modulo m");
  } else if (const auto* q = std::get_if<QuaternionGen>(&g)) {
    if (q->k < 1) throw DomainError("quaternion: k must be positive");
  } else if (const auto* pr = std::get_if<ProductWithCyclic>(&g)) {
    if (!pr->base) throw DomainError("product: missing base group");
    validate(*pr->base);
    if (!is_prime(pr->p) || order(*pr->base) % pr->p == 0) {
      throw DomainError("product: p must be a prime coprime to the base order");
    }
  }
}

// ---------------------------------------------------------------------------
// Structure strings

inline std::string format_group(const GroupSpec& g);

namespace detail {

struct FormatVisitor {
  std::string operator()(const Cyclic& c) const { return "C" + std::to_string(c.m); }
  std::string operator()(const MetacyclicSplit& g) const {
    std::string s = "C" + std::to_string(g.m) + " : C" + std::to_string(g.n) + " (k=" + std::to_string(g.k);
    if (!has_canonical_action(g)) s += ", r=" + std::to_string(g.r);
    return s + ")";
  }
  std::string operator()(const QuaternionGen& q) const { return "Q" + std::to_string(4 * q.k); }
  std::string operator()(const SL23&) const { return "SL(2,3)"; }
  std::string operator()(const SL25&) const { return "SL(2,5)"; }
  std::string operator()(const BinaryOctahedral&) const { return "O*"; }
  std::string operator()(const ProductWithCyclic& g) const {
    std::string inner = format_group(*g.base);
    if (std::holds_alternative<MetacyclicSplit>(*g.base) || std::holds_alternative<ProductWithCyclic>(*g.base)) {
      inner = "(" + inner + ")";
    }
    return "C" + std::to_string(g.p) + " x " + inner;
  }
};

class GroupParser {
 public:
  explicit GroupParser(std::string text) : s_(std::move(text)) {}

  GroupSpec parse_all() {
    GroupSpec g = parse();
    if (pos_ != s_.size()) fail("trailing characters");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse group '" + s_ + "': " + why +
                     " (grammar: Cn | Cm:Cn(k=K[,r=R]) | Q4k | SL(2,3) | SL(2,5) | O* | Cp x <group>)");
  }

  bool eat(std::string_view tok) {
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view tok) {
    if (!eat(tok)) fail("expected '" + std::string(tok) + "'");
  }

  u64 number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 18) fail("number too large");
    return std::stoull(s_.substr(start, pos_ - start));
  }

  i64 signed_number() {
    if (eat("-")) return -static_cast<i64>(number());
    return static_cast<i64>(number());
  }

  GroupSpec parse() {
    if (eat("(")) {
      GroupSpec g = parse();
      expect(")");
      return g;
    }
    if (eat("SL(2,3)")) return SL23{};
    if (eat("SL(2,5)")) return SL25{};
    if (eat("O*")) return BinaryOctahedral{};
    if (eat("Q")) {
      const u64 q = number();
      if (q < 8 || q % 4 != 0) fail("quaternion order must be a multiple of 4 and at least 8");
      return QuaternionGen{q / 4};
    }
    if (eat("C")) {
      const u64 m = number();
      if (m == 0) fail("cyclic order must be positive");
      if (eat(":")) {
        expect("C");
        const u64 n = number();
        expect("(k=");
        const u64 k = number();
        std::optional<i64> r;
        if (eat(",r=")) r = signed_number();
        expect(")");
        return r ? make_metacyclic(m, n, k, *r) : make_metacyclic(m, n, k);
      }
      if (eat("x")) {
        GroupSpec base = parse();
        return product_with_cyclic(std::move(base), m);
      }
      return Cyclic{m};
    }
    fail("unknown group family");
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline std::string format_group(const GroupSpec& g) { return std::visit(detail::FormatVisitor{}, g); }

/// Parses the structure grammar; whitespace is ignored.
inline GroupSpec parse_group(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  return detail::GroupParser(std::move(compact)).parse_all();
}

// ---------------------------------------------------------------------------
// Amitsur (Z)(c)

struct AmitsurReport {
  bool holds = false;
  std::string failed;  // first violated condition, empty when holds
};

namespace detail {

struct PrimeAction {
  u64 p = 0;
  unsigned gamma = 0;        // v_p(m)
  std::vector<u64> x_primes;  // X_p
  u64 r_order = 1;            // |R_p|
  u64 k_p = 1;
};

inline std::vector<PrimeAction> prime_actions(const MetacyclicSplit& g) {
  std::vector<PrimeAction> out;
  for (const auto& [p, gamma] : factorize(g.m == 0 ? 1 : g.m)) {
    PrimeAction pa{p, gamma, {}, 1, 1};
    const u64 pg = ipow(p, gamma);
    for (const auto& [q, beta] : factorize(g.n)) {
      // Q_q is generated by b^{n/q^beta}; it acts nontrivially iff r^{n/q^beta} != 1 mod p^gamma.
      if (powmod(g.r, g.n / ipow(q, beta), pg) != 1 % pg) {
        pa.x_primes.push_back(q);
        pa.r_order *= ipow(q, beta);
      }
    }
    if (!pa.x_primes.empty()) {
      // generator of R_p is b^{n/|R_p|}; the image of the action has order o_{p^gamma}(r^{n/|R_p|})
      const u64 image = mult_order(static_cast<i64>(powmod(g.r, g.n / pa.r_order, pg)), pg);
      pa.k_p = pa.r_order / image;
    }
    out.push_back(pa);
  }
  return out;
}

}  // namespace detail

/// Membership of C_m ⋊_k C_n in Amitsur's family (Z)(c). C_n = ∏ R_p is read
/// as: every prime divisor of n lies in exactly one X_p.
inline AmitsurReport amitsur_z_c(const MetacyclicSplit& g) {
  if (gcd(g.m, g.n) != 1) return {false, "gcd(m, n) != 1"};
  if (g.n == 1) return {false, "C_n trivial"};
  const auto actions = detail::prime_actions(g);
  for (u64 q : prime_divisors(g.n)) {
    int hits = 0;
    for (const auto& pa : actions) {
      hits += static_cast<int>(std::count(pa.x_primes.begin(), pa.x_primes.end(), q));
    }
    if (hits != 1) return {false, "C_n is not the direct product of the R_p (prime " + std::to_string(q) + ")"};
  }
  for (const auto& pa : actions) {
    const u64 p = pa.p;
    const u64 modulus = g.m * g.n / (ipow(p, pa.gamma) * pa.r_order);
    const u64 o_big = mult_order(static_cast<i64>(p), modulus);
    for (u64 q : pa.x_primes) {
      const unsigned vk = valuation(q, g.k);
      const u64 o_small = mult_order(static_cast<i64>(p), ipow(q, vk));
      if (o_big % (q * o_small) == 0) {
        return {false, "condition (a) fails for p=" + std::to_string(p) + ", q=" + std::to_string(q)};
      }
      if (q % 2 == 1 || p % 4 == 1) {
        if (valuation(q, p - 1) > vk) {
          return {false, "condition (b) fails for p=" + std::to_string(p) + ", q=" + std::to_string(q)};
        }
      }
      if (q == 2 && p % 4 == 3) {
        if (!(vk == 1 || vk > valuation(2, p + 1))) {
          return {false, "condition (c) fails for p=" + std::to_string(p)};
        }
      }
    }
  }
  return {true, {}};
}

/// The inequality chain 1 <= v_q(|R_p|/k_p) <= v_q(p-1) <= v_q(k_p) for every
/// acting prime pair. Requires amitsur_z_c(g).
inline bool remark_z_checks(const MetacyclicSplit& g) {
  if (!amitsur_z_c(g).holds) throw DomainError("remark_z_checks: group is not in (Z)(c)");
  for (const auto& pa : detail::prime_actions(g)) {
    for (u64 q : pa.x_primes) {
      const unsigned a = valuation(q, pa.r_order / pa.k_p);
      const unsigned b = valuation(q, pa.p - 1);
      const unsigned c = valuation(q, pa.k_p);
      if (!(1 <= a && a <= b && b <= c)) return false;
    }
  }
  return true;
}

/// G / <b^{hn/k}> = C_m ⋊_h C_{hn/k}.
inline MetacyclicSplit central_quotient(const MetacyclicSplit& g, u64 h) {
  if (h == 0 || g.k % h != 0) throw DomainError("central_quotient: h must divide k");
  return {g.m, h * g.n / g.k, h, g.r};
}

/// Splits off the central cyclic direct factor: G = C_c x core, where in the
/// core every Sylow subgroup of <a> is acted on and every Sylow subgroup of <b>
/// acts nontrivially.
struct MetacyclicCore {
  u64 central = 1;
  MetacyclicSplit core;
};

inline MetacyclicCore split_central_factor(const MetacyclicSplit& g) {
  u64 m_act = 1;
  u64 central = 1;
  const u64 u = g.n / g.k;
  for (const auto& [p, a] : factorize(g.m)) {
    const u64 pa = ipow(p, a);
    if (g.r % pa == 1 % pa) {
      central *= pa;
    } else {
      m_act *= pa;
    }
  }
  u64 n_act = 1;
  for (const auto& [q, b] : factorize(g.n)) {
    const u64 qb = ipow(q, b);
    if (u % q == 0) {
      n_act *= qb;
    } else {
      central *= qb;
    }
  }
  const u64 k_act = g.k / (g.n / n_act);
  // b_act = b^{n/n_act} acts as r^{n/n_act}; reduce modulo m_act
  const u64 r_act = m_act == 1 ? 0 : powmod(g.r, g.n / n_act, m_act);
  return {central, {m_act, n_act, k_act, r_act}};
}

}  // namespace wedder

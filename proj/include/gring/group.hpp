#pragma once

// Abelian groups Z^r x C_{n_1} x ... x C_{n_k}, written multiplicatively.
//
// GroupSpec is the symbolic form; every question about an infinite group is
// answered from (free_rank, torsion_invariants) alone. FiniteAbelianGroup is
// the enumerable form for free_rank = 0.
//
// Text grammar: factors `Z^<t>` (or `Z`), `C<n>`, joined by `x`; `1` is the
// trivial group. Whitespace is insignificant.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gring/arith.hpp"
#include "gring/error.hpp"
#include "gring/finite_ring.hpp"
#include "gring/ring_spec.hpp"

namespace gring {

struct GroupSpec {
  std::uint64_t free_rank = 0;
  std::vector<std::uint64_t> torsion_invariants;

  bool operator==(const GroupSpec&) const = default;
};

inline void validate(const GroupSpec& spec) {
  for (auto n : spec.torsion_invariants)
    if (n < 2) throw spec_error("torsion invariant " + std::to_string(n) + " < 2");
}

inline std::string to_string(const GroupSpec& spec, bool compact = false) {
  std::vector<std::string> parts;
  if (spec.free_rank) parts.push_back("Z^" + std::to_string(spec.free_rank));
  for (auto n : spec.torsion_invariants) parts.push_back("C" + std::to_string(n));
  if (parts.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? (compact ? "x" : " x ") : "") + parts[i];
  return out;
}

inline GroupSpec parse_group_spec(std::string_view text) {
  detail::Cursor cur(text);
  GroupSpec spec;
  if (cur.at_end()) cur.fail("group spec");
  if (cur.peek() == '1') {
    cur.integer();
    if (!cur.at_end()) cur.fail("end of input after trivial group '1'");
    return spec;
  }
  do {
    if (cur.accept('Z')) {
      std::uint64_t rank = 1;
      if (cur.accept('^')) rank = cur.integer();
      spec.free_rank += rank;
    } else if (cur.accept('C')) {
      std::size_t at = cur.position();
      std::uint64_t n = cur.integer();
      if (n < 2) cur.fail("cyclic order >= 2 (at " + std::to_string(at) + ")");
      spec.torsion_invariants.push_back(n);
    } else {
      cur.fail("'Z^<t>', 'C<n>' or '1'");
    }
  } while (cur.accept('x'));
  if (!cur.at_end()) cur.fail("'x' or end of input");
  return spec;
}

inline bool is_torsion(const GroupSpec& spec) { return spec.free_rank == 0; }
inline bool is_torsion_free(const GroupSpec& spec) { return spec.torsion_invariants.empty(); }
inline bool torsion_nontrivial(const GroupSpec& spec) { return !spec.torsion_invariants.empty(); }

// Exponent of the torsion subgroup (1 when trivial).
inline std::uint64_t torsion_exponent(const GroupSpec& spec) {
  std::uint64_t e = 1;
  for (auto n : spec.torsion_invariants) e = std::lcm(e, n);
  return e;
}

inline std::uint64_t torsion_order(const GroupSpec& spec) {
  std::uint64_t order = 1;
  for (auto n : spec.torsion_invariants) {
    auto next = checked_mul(order, n);
    if (!next) throw limit_error("torsion order overflows 64 bits");
    order = *next;
  }
  return order;
}

// Orders of torsion elements: the divisors of the exponent.
inline std::set<std::uint64_t> order_set(const GroupSpec& spec) { return divisors(torsion_exponent(spec)); }

// Primes p with a nontrivial p-primary component.
inline std::set<std::uint64_t> supp(const GroupSpec& spec) {
  std::set<std::uint64_t> out;
  for (auto n : spec.torsion_invariants)
    for (auto p : prime_divisors(n)) out.insert(p);
  return out;
}

inline bool torsion_is_p_group(const GroupSpec& spec, std::uint64_t p) {
  if (!is_prime(p)) throw precondition_error(std::to_string(p) + " is not prime");
  return std::all_of(spec.torsion_invariants.begin(), spec.torsion_invariants.end(),
                     [p](auto n) { return is_power_of(n, p); });
}

// Prime-power invariants of the torsion part, sorted.
inline std::vector<std::uint64_t> primary_invariants(const GroupSpec& spec) {
  std::vector<std::uint64_t> out;
  for (auto n : spec.torsion_invariants)
    for (auto p : prime_divisors(n)) out.push_back(p_part(n, p));
  std::sort(out.begin(), out.end());
  return out;
}

// Same group up to isomorphism.
inline bool isomorphic(const GroupSpec& a, const GroupSpec& b) {
  return a.free_rank == b.free_rank && primary_invariants(a) == primary_invariants(b);
}

// Concrete finite abelian group. Elements are residue tuples in
// lexicographic order (last factor varies fastest); index 0 is the identity.
class FiniteAbelianGroup {
 public:
  explicit FiniteAbelianGroup(std::vector<std::uint64_t> invariants) : invariants_(std::move(invariants)) {
    order_ = 1;
    for (auto n : invariants_) {
      if (n < 2) throw spec_error("torsion invariant " + std::to_string(n) + " < 2");
      order_ *= static_cast<index_t>(n);
    }
    strides_.assign(invariants_.size(), 1);
    for (std::size_t i = invariants_.size(); i-- > 1;) strides_[i - 1] = strides_[i] * static_cast<index_t>(invariants_[i]);
    mul_table_.resize(std::size_t(order_) * order_);
    for (index_t a = 0; a < order_; ++a)
      for (index_t b = 0; b < order_; ++b) mul_table_[std::size_t(a) * order_ + b] = compose(a, b);
  }

  index_t order() const { return order_; }
  index_t identity() const { return 0; }
  const std::vector<std::uint64_t>& invariants() const { return invariants_; }
  GroupSpec spec() const { return {0, invariants_}; }

  std::vector<std::uint64_t> residues(index_t g) const {
    std::vector<std::uint64_t> out(invariants_.size());
    for (std::size_t i = 0; i < invariants_.size(); ++i) out[i] = (g / strides_[i]) % invariants_[i];
    return out;
  }
  index_t from_residues(const std::vector<std::uint64_t>& r) const {
    index_t g = 0;
    for (std::size_t i = 0; i < invariants_.size(); ++i) g += static_cast<index_t>(r[i] % invariants_[i]) * strides_[i];
    return g;
  }

  index_t mul(index_t a, index_t b) const { return mul_table_[std::size_t(a) * order_ + b]; }
  index_t inverse(index_t a) const {
    auto r = residues(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (invariants_[i] - r[i]) % invariants_[i];
    return from_residues(r);
  }
  index_t pow(index_t a, std::uint64_t k) const {
    auto r = residues(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (r[i] * (k % invariants_[i])) % invariants_[i];
    return from_residues(r);
  }

  // lcm over components of n_i / gcd(n_i, r_i).
  std::uint64_t order_of(index_t g) const {
    auto r = residues(g);
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < r.size(); ++i) out = std::lcm(out, invariants_[i] / std::gcd(invariants_[i], r[i]));
    return out;
  }

  // {g : order_of(g) is a power of p}
  std::vector<index_t> p_primary(std::uint64_t p) const {
    if (!is_prime(p)) throw precondition_error(std::to_string(p) + " is not prime");
    std::vector<index_t> out;
    for (index_t g = 0; g < order_; ++g)
      if (is_power_of(order_of(g), p)) out.push_back(g);
    return out;
  }

  // Monomial text: generators g, h, k, ... name the cyclic factors in order.
  std::string format(index_t g) const {
    auto r = residues(g);
    std::string out;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (r[i] == 0) continue;
      out += generator_name(i);
      if (r[i] > 1) out += "^" + std::to_string(r[i]);
    }
    return out.empty() ? "1" : out;
  }

  static std::string generator_name(std::size_t i) {
    static constexpr std::string_view names = "ghklmnpqrsuvwyz";
    if (i < names.size()) return std::string(1, names[i]);
    return "g" + std::to_string(i);
  }

 private:
  index_t compose(index_t a, index_t b) const {
    auto ra = residues(a), rb = residues(b);
    for (std::size_t i = 0; i < ra.size(); ++i) ra[i] = (ra[i] + rb[i]) % invariants_[i];
    return from_residues(ra);
  }

  std::vector<std::uint64_t> invariants_;
  std::vector<index_t> strides_;
  index_t order_ = 1;
  std::vector<index_t> mul_table_;
};

inline FiniteAbelianGroup build_group(const GroupSpec& spec, std::uint64_t limit = default_enumeration_limit) {
  validate(spec);
  if (spec.free_rank != 0)
    throw limit_error("group " + to_string(spec) + " has nonzero free rank and is not enumerable");
  std::optional<std::uint64_t> order = 1;
  for (auto n : spec.torsion_invariants) order = order ? checked_mul(*order, n) : std::nullopt;
  detail::checked_size(order, limit, "group " + to_string(spec));
  return FiniteAbelianGroup(spec.torsion_invariants);
}

}  // namespace gring

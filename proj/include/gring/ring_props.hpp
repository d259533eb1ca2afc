#pragma once

// Element-level and ring-level predicates on finite commutative rings.
//
// In a finite commutative ring every regular element is a unit, so the
// ring-level scans read regularity from the cached unit flags of
// FiniteRing::kinds(). The literal definitions (is_unit / is_regular below)
// are kept for element-level queries and for cross-checking the collapse.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gring/arith.hpp"
#include "gring/error.hpp"
#include "gring/finite_ring.hpp"

namespace gring {

// Literal scan for y with xy = 1.
inline bool is_unit(const FiniteRing& ring, index_t x) {
  for (index_t y = 0; y < ring.size(); ++y)
    if (ring.mul(x, y) == ring.one()) return true;
  return false;
}

// Literal scan: no nonzero y with xy = 0.
inline bool is_regular(const FiniteRing& ring, index_t x) {
  for (index_t y = 1; y < ring.size(); ++y)
    if (ring.mul(x, y) == ring.zero()) return false;
  return true;
}

inline bool is_nilpotent(const FiniteRing& ring, index_t x) { return ring.orbit_kind(x) & kind_nilpotent; }

// Cached regularity (= unit flag for finite rings).
inline bool regular_flag(const FiniteRing& ring, index_t x) { return ring.kinds()[x] & kind_unit; }
inline bool nilpotent_flag(const FiniteRing& ring, index_t x) { return ring.kinds()[x] & kind_nilpotent; }

// Subset of a ring's elements, kept sorted.
struct IdealSet {
  std::uint64_t ring_id = 0;
  std::vector<index_t> members;

  std::size_t size() const { return members.size(); }
  bool contains(index_t x) const { return std::binary_search(members.begin(), members.end(), x); }
  bool operator==(const IdealSet& other) const { return ring_id == other.ring_id && members == other.members; }
};

inline IdealSet make_set(const FiniteRing& ring, std::vector<index_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return {ring.id(), std::move(members)};
}

// Additive subgroup grown one generator at a time. Adding t extends the
// span H to H + <t>, the union of the cosets H + j*t for j below the order
// of t modulo H, so the cost is linear in the size of the new span.
class AdditiveSpan {
 public:
  explicit AdditiveSpan(const FiniteRing& ring) : ring_(ring), member_(ring.size(), 0), elements_{ring.zero()} {
    member_[ring.zero()] = 1;
  }

  bool contains(index_t x) const { return member_[x] != 0; }

  // Returns false when t is already in the span.
  bool insert(index_t t) {
    if (contains(t)) return false;
    const std::size_t old_size = elements_.size();
    index_t multiple = t;
    while (!contains(multiple)) {
      for (std::size_t i = 0; i < old_size; ++i) {
        index_t e = ring_.add(elements_[i], multiple);
        member_[e] = 1;
        elements_.push_back(e);
      }
      multiple = ring_.add(multiple, t);
    }
    generators_.push_back(t);
    return true;
  }

  const std::vector<index_t>& elements() const { return elements_; }
  const std::vector<index_t>& generators() const { return generators_; }
  std::size_t size() const { return elements_.size(); }

  IdealSet to_set() const { return make_set(ring_, elements_); }

 private:
  FiniteRing ring_;
  std::vector<std::uint8_t> member_;
  std::vector<index_t> elements_;
  std::vector<index_t> generators_;
};

// Smallest additive subgroup containing `seeds` and closed under
// multiplication by each of `multipliers`. When the multipliers additively
// generate the ring the result is the ideal generated by the seeds.
inline IdealSet ideal_closure(const FiniteRing& ring, const std::vector<index_t>& seeds,
                              const std::vector<index_t>& multipliers) {
  AdditiveSpan span(ring);
  std::vector<index_t> queue;
  for (index_t s : seeds)
    if (span.insert(s)) queue.push_back(s);
  while (!queue.empty()) {
    index_t s = queue.back();
    queue.pop_back();
    for (index_t m : multipliers) {
      index_t t = ring.mul(s, m);
      if (span.insert(t)) queue.push_back(t);
    }
  }
  return span.to_set();
}

inline std::vector<index_t> all_elements(const FiniteRing& ring) {
  std::vector<index_t> out(ring.size());
  for (index_t i = 0; i < ring.size(); ++i) out[i] = i;
  return out;
}

// Contains 0, closed under +, absorbs multiplication by the whole ring.
// Closure is checked through a generating set of the additive span, which
// is exact: the span equals the set iff the set is a subgroup, and a
// subgroup absorbs R iff each of its generators does.
inline bool is_ideal(const FiniteRing& ring, const IdealSet& set) {
  if (set.ring_id != ring.id() || !set.contains(ring.zero())) return false;
  AdditiveSpan span(ring);
  for (index_t x : set.members) {
    span.insert(x);
    if (span.size() > set.size()) return false;
  }
  for (index_t g : span.generators())
    for (index_t r = 0; r < ring.size(); ++r)
      if (!set.contains(ring.mul(g, r))) return false;
  return true;
}

// Proper ideal P with ab in P => a in P or b in P, checked over all pairs of
// cosets of P (membership of ab depends only on the cosets of a and b).
inline bool is_prime_ideal(const FiniteRing& ring, const IdealSet& set) {
  if (!is_ideal(ring, set) || set.contains(ring.one())) return false;
  std::vector<std::int64_t> coset(ring.size(), -1);
  std::vector<index_t> reps;
  for (index_t x = 0; x < ring.size(); ++x) {
    if (coset[x] >= 0) continue;
    for (index_t p : set.members) coset[ring.add(x, p)] = static_cast<std::int64_t>(reps.size());
    reps.push_back(x);
  }
  for (std::size_t i = 1; i < reps.size(); ++i)
    for (std::size_t j = i; j < reps.size(); ++j)
      if (set.contains(ring.mul(reps[i], reps[j]))) return false;
  return true;
}

inline IdealSet nilradical(const FiniteRing& ring) {
  std::vector<index_t> out;
  const auto& kinds = ring.kinds();
  for (index_t x = 0; x < ring.size(); ++x)
    if (kinds[x] & kind_nilpotent) out.push_back(x);
  return {ring.id(), std::move(out)};
}

// {r : p*r nilpotent}
inline IdealSet n_p_set(const FiniteRing& ring, std::uint64_t p) {
  if (!is_prime(p)) throw precondition_error(std::to_string(p) + " is not prime");
  index_t image = int_image(ring, static_cast<std::int64_t>(p));
  std::vector<index_t> out;
  for (index_t r = 0; r < ring.size(); ++r)
    if (nilpotent_flag(ring, ring.mul(image, r))) out.push_back(r);
  return {ring.id(), std::move(out)};
}

// Least y with xy = 0 and x + y regular.
inline std::optional<index_t> complement_witness(const FiniteRing& ring, index_t x) {
  for (index_t y = 0; y < ring.size(); ++y)
    if (ring.mul(x, y) == ring.zero() && regular_flag(ring, ring.add(x, y))) return y;
  return std::nullopt;
}

// Least element without a complement; nilpotents are skipped when
// `skip_nilpotent` is set (the semi-complemented question).
inline std::optional<index_t> first_uncomplemented(const FiniteRing& ring, bool skip_nilpotent) {
  for (index_t x = 0; x < ring.size(); ++x) {
    if (skip_nilpotent && nilpotent_flag(ring, x)) continue;
    if (!complement_witness(ring, x)) return x;
  }
  return std::nullopt;
}

// Least element that is neither regular nor nilpotent.
inline std::optional<index_t> first_mixed_element(const FiniteRing& ring) {
  const auto& kinds = ring.kinds();
  for (index_t x = 0; x < ring.size(); ++x)
    if (kinds[x] == 0) return x;
  return std::nullopt;
}

inline std::optional<index_t> first_nonzero_nilpotent(const FiniteRing& ring) {
  const auto& kinds = ring.kinds();
  for (index_t x = 1; x < ring.size(); ++x)
    if (kinds[x] & kind_nilpotent) return x;
  return std::nullopt;
}

inline bool is_complemented(const FiniteRing& ring) { return !first_uncomplemented(ring, false); }
inline bool is_semi_complemented(const FiniteRing& ring) { return !first_uncomplemented(ring, true); }
inline bool has_property_D(const FiniteRing& ring) { return !first_mixed_element(ring); }
inline bool is_reduced(const FiniteRing& ring) { return !first_nonzero_nilpotent(ring); }

// Every nonzero element regular.
inline bool is_domain(const FiniteRing& ring) {
  const auto& kinds = ring.kinds();
  for (index_t x = 1; x < ring.size(); ++x)
    if (!(kinds[x] & kind_unit)) return false;
  return true;
}

// For every x some y with x = x^2 y.
inline bool is_von_neumann_regular(const FiniteRing& ring) {
  for (index_t x = 0; x < ring.size(); ++x) {
    index_t sq = ring.mul(x, x);
    bool found = false;
    for (index_t y = 0; y < ring.size() && !found; ++y) found = ring.mul(sq, y) == x;
    if (!found) return false;
  }
  return true;
}

inline std::vector<index_t> idempotents(const FiniteRing& ring) {
  std::vector<index_t> out;
  for (index_t e = 0; e < ring.size(); ++e)
    if (ring.mul(e, e) == e) out.push_back(e);
  return out;
}

// Minimal nonzero idempotents under e <= f  <=>  ef = e.
inline std::vector<index_t> primitive_idempotents(const FiniteRing& ring) {
  auto all = idempotents(ring);
  std::vector<index_t> out;
  for (index_t e : all) {
    if (e == ring.zero()) continue;
    bool minimal = true;
    for (index_t f : all) {
      if (f == ring.zero() || f == e) continue;
      if (ring.mul(e, f) == f) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(e);
  }
  return out;
}

inline bool is_indecomposable(const FiniteRing& ring) { return idempotents(ring).size() == 2; }

// One prime per primitive idempotent e: P_e = {x : xe nilpotent}. Each is
// re-verified to be a prime ideal.
inline std::vector<IdealSet> minimal_primes(const FiniteRing& ring) {
  std::vector<IdealSet> out;
  for (index_t e : primitive_idempotents(ring)) {
    std::vector<index_t> members;
    for (index_t x = 0; x < ring.size(); ++x)
      if (nilpotent_flag(ring, ring.mul(x, e))) members.push_back(x);
    IdealSet p{ring.id(), std::move(members)};
    if (!is_prime_ideal(ring, p))
      throw invariant_violation("idempotent " + ring.format(e) + " yields a non-prime ideal in " + ring.name());
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace gring

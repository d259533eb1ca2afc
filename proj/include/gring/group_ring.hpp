#pragma once

// Group rings RG over a finite ring R and a finite abelian group G.
//
// Elements are coefficient vectors indexed by group element. The
// materialized ring orders them colexicographically: the coefficient of the
// identity is the least significant digit, so index 1 is the element 1.

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gring/error.hpp"
#include "gring/finite_ring.hpp"
#include "gring/group.hpp"
#include "gring/ring_props.hpp"

namespace gring {

struct GroupRingElement {
  std::uint64_t parent = 0;
  std::vector<index_t> coeffs;  // r_g for each group element index g

  bool operator==(const GroupRingElement&) const = default;
};

namespace detail {

class GroupRingImpl final : public RingImpl {
 public:
  GroupRingImpl(FiniteRing base, FiniteAbelianGroup group, index_t size)
      : RingImpl(size), base_(std::move(base)), group_(std::move(group)), width_(group_.order()) {}

  index_t add(index_t a, index_t b) const override {
    index_t da[max_digits], db[max_digits];
    split(a, da);
    split(b, db);
    for (std::size_t i = 0; i < width_; ++i) da[i] = base_.add(da[i], db[i]);
    return join(da);
  }
  index_t neg(index_t a) const override {
    index_t da[max_digits];
    split(a, da);
    for (std::size_t i = 0; i < width_; ++i) da[i] = base_.neg(da[i]);
    return join(da);
  }
  index_t mul(index_t a, index_t b) const override {
    index_t da[max_digits], db[max_digits], out[max_digits] = {};
    split(a, da);
    split(b, db);
    convolve(base_, group_, da, db, out);
    return join(out);
  }
  std::string format(index_t a) const override {
    index_t da[max_digits];
    split(a, da);
    return format_coeffs(base_, group_, da);
  }
  bool compound_format() const override { return true; }

  // coefficient of k in a*b is the sum over gh = k of a_g b_h
  static void convolve(const FiniteRing& base, const FiniteAbelianGroup& group, const index_t* a, const index_t* b,
                       index_t* out) {
    const index_t n = group.order();
    for (index_t g = 0; g < n; ++g) {
      if (a[g] == 0) continue;
      for (index_t h = 0; h < n; ++h) {
        if (b[h] == 0) continue;
        index_t k = group.mul(g, h);
        out[k] = base.add(out[k], base.mul(a[g], b[h]));
      }
    }
  }

  static std::string format_coeffs(const FiniteRing& base, const FiniteAbelianGroup& group, const index_t* c) {
    std::string out;
    for (index_t g = 0; g < group.order(); ++g) {
      if (c[g] == 0) continue;
      if (!out.empty()) out += '+';
      if (g == group.identity()) {
        out += coefficient_text(base, c[g]);
        continue;
      }
      if (c[g] != base.one()) out += coefficient_text(base, c[g]);
      out += group.format(g);
    }
    return out.empty() ? "0" : out;
  }

  void split(index_t code, index_t* out) const { decode_digits(code, base_.size(), width_, out); }
  index_t join(const index_t* digits) const { return encode_digits(digits, base_.size(), width_); }

 private:
  FiniteRing base_;
  FiniteAbelianGroup group_;
  std::size_t width_;
};

}  // namespace detail

class GroupRing {
 public:
  GroupRing(FiniteRing ring, FiniteAbelianGroup group, std::uint64_t limit = default_enumeration_limit)
      : ring_(std::move(ring)), group_(std::move(group)), limit_(limit), id_(detail::next_parent_id()),
        cache_(std::make_shared<Cache>()) {
    if (group_.order() > max_digits)
      throw limit_error("group of order " + std::to_string(group_.order()) + " is too large for a group ring");
    size_ = checked_pow(ring_.size(), group_.order());
  }

  const FiniteRing& ring() const { return ring_; }
  const FiniteAbelianGroup& group() const { return group_; }
  std::uint64_t id() const { return id_; }
  // |R|^|G|, or nullopt beyond 64 bits.
  std::optional<std::uint64_t> size() const { return size_; }
  bool materializable() const { return size_ && *size_ <= std::min<std::uint64_t>(limit_, UINT32_MAX); }
  std::string name() const { return enclose(ring_.name()) + "[" + to_string(group_.spec()) + "]"; }

  GroupRingElement zero() const { return {id_, std::vector<index_t>(group_.order(), ring_.zero())}; }
  GroupRingElement one() const { return embed_ring(ring_.one()); }
  GroupRingElement monomial(index_t r, index_t g) const {
    GroupRingElement out = zero();
    out.coeffs.at(g) = r;
    return out;
  }
  GroupRingElement embed_ring(index_t r) const { return monomial(r, group_.identity()); }
  GroupRingElement embed_group(index_t g) const { return monomial(ring_.one(), g); }
  GroupRingElement from_coeffs(std::vector<index_t> coeffs) const {
    if (coeffs.size() != group_.order()) throw precondition_error("coefficient vector length differs from |G|");
    for (index_t c : coeffs)
      if (c >= ring_.size()) throw precondition_error("coefficient out of range");
    return {id_, std::move(coeffs)};
  }

  GroupRingElement add(const GroupRingElement& a, const GroupRingElement& b) const {
    check(a);
    check(b);
    GroupRingElement out = a;
    for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] = ring_.add(a.coeffs[i], b.coeffs[i]);
    return out;
  }
  GroupRingElement neg(const GroupRingElement& a) const {
    check(a);
    GroupRingElement out = a;
    for (auto& c : out.coeffs) c = ring_.neg(c);
    return out;
  }
  GroupRingElement sub(const GroupRingElement& a, const GroupRingElement& b) const { return add(a, neg(b)); }
  GroupRingElement mul(const GroupRingElement& a, const GroupRingElement& b) const {
    check(a);
    check(b);
    GroupRingElement out = zero();
    detail::GroupRingImpl::convolve(ring_, group_, a.coeffs.data(), b.coeffs.data(), out.coeffs.data());
    return out;
  }
  GroupRingElement scale(index_t r, const GroupRingElement& a) const { return mul(embed_ring(r), a); }
  GroupRingElement pow(GroupRingElement x, std::uint64_t k) const {
    GroupRingElement result = one();
    while (k) {
      if (k & 1) result = mul(result, x);
      x = mul(x, x);
      k >>= 1;
    }
    return result;
  }

  // Coefficient sum; a surjective ring homomorphism RG -> R.
  index_t augmentation(const GroupRingElement& a) const {
    check(a);
    index_t s = ring_.zero();
    for (index_t c : a.coeffs) s = ring_.add(s, c);
    return s;
  }

  bool is_zero(const GroupRingElement& a) const { return a == zero(); }

  // Unit / nilpotent flags from the power orbit, without materializing RG.
  std::uint8_t orbit_kind(const GroupRingElement& x) const {
    check(x);
    const GroupRingElement z = zero(), u = one();
    GroupRingElement tortoise = x, hare = x;
    std::uint64_t power = 1, lambda = 1;
    for (;;) {
      if (hare == z) return kind_nilpotent;
      if (hare == u) return kind_unit;
      hare = mul(hare, x);
      if (hare == tortoise) return hare == z ? kind_nilpotent : (hare == u ? kind_unit : 0);
      if (power == lambda) {
        tortoise = hare;
        power *= 2;
        lambda = 0;
      }
      ++lambda;
    }
  }
  bool is_nilpotent(const GroupRingElement& x) const { return orbit_kind(x) & kind_nilpotent; }
  // Regular = unit in a finite ring.
  bool is_regular(const GroupRingElement& x) const { return orbit_kind(x) & kind_unit; }

  std::string format(const GroupRingElement& a) const {
    check(a);
    return detail::GroupRingImpl::format_coeffs(ring_, group_, a.coeffs.data());
  }

  // Index in the materialized ring.
  index_t encode(const GroupRingElement& a) const {
    check(a);
    require_materializable();
    return detail::encode_digits(a.coeffs.data(), ring_.size(), group_.order());
  }
  GroupRingElement decode(index_t code) const {
    require_materializable();
    GroupRingElement out = zero();
    detail::decode_digits(code, ring_.size(), group_.order(), out.coeffs.data());
    return out;
  }

  // RG as a FiniteRing; built once and shared by copies of this GroupRing.
  const FiniteRing& materialized() const {
    require_materializable();
    std::call_once(cache_->once, [this] {
      cache_->ring.emplace(std::make_unique<detail::GroupRingImpl>(ring_, group_, static_cast<index_t>(*size_)),
                           name());
    });
    return *cache_->ring;
  }

 private:
  struct Cache {
    std::once_flag once;
    std::optional<FiniteRing> ring;
  };

  static std::string enclose(const std::string& s) {
    return s.find(' ') == std::string::npos ? s : "(" + s + ")";
  }

  void check(const GroupRingElement& a) const {
    if (a.parent != id_) throw mixed_parent_error("element does not belong to group ring " + name());
  }
  void require_materializable() const {
    if (!materializable())
      throw limit_error("group ring " + name() + " exceeds the enumeration limit of " + std::to_string(limit_) +
                        " elements");
  }

  FiniteRing ring_;
  FiniteAbelianGroup group_;
  std::uint64_t limit_;
  std::uint64_t id_;
  std::optional<std::uint64_t> size_;
  std::shared_ptr<Cache> cache_;
};

inline FiniteRing materialize(const GroupRing& rg) { return rg.materialized(); }

inline std::vector<GroupRingElement> decode_all(const GroupRing& rg, const IdealSet& set) {
  std::vector<GroupRingElement> out;
  out.reserve(set.size());
  for (index_t x : set.members) out.push_back(rg.decode(x));
  return out;
}

// N(R)G + ideal generated by { r(g - 1) : p in supp(G), r in N_p(R), g in G_p },
// closed under addition and multiplication by every monomial r*g. The result
// lives in the materialized ring.
inline IdealSet nilradical_formula(const GroupRing& rg) {
  const FiniteRing& R = rg.ring();
  const FiniteAbelianGroup& G = rg.group();
  std::vector<index_t> seeds;
  for (index_t r : nilradical(R).members)
    for (index_t g = 0; g < G.order(); ++g) seeds.push_back(rg.encode(rg.monomial(r, g)));
  for (auto p : supp(G.spec())) {
    auto primary = G.p_primary(p);
    for (index_t r : n_p_set(R, p).members)
      for (index_t g : primary) seeds.push_back(rg.encode(rg.sub(rg.monomial(r, g), rg.embed_ring(r))));
  }
  std::vector<index_t> monomials;
  for (index_t r = 0; r < R.size(); ++r)
    for (index_t g = 0; g < G.order(); ++g) monomials.push_back(rg.encode(rg.monomial(r, g)));
  return ideal_closure(rg.materialized(), seeds, monomials);
}

// Given a complement t of a in RH (H cyclic, R reduced), the coefficient sum
// x of t is a complement of a in R.
inline index_t project_complement(const GroupRing& rh, index_t a, const GroupRingElement& t) {
  const FiniteRing& R = rh.ring();
  if (rh.group().invariants().size() > 1) throw precondition_error("complement projection needs a cyclic group");
  if (a >= R.size()) throw precondition_error("ring element out of range");
  if (!is_reduced(R)) throw not_reduced_error("complement projection needs a reduced base ring; " + R.name() + " is not");
  GroupRingElement ea = rh.embed_ring(a);
  if (!rh.is_zero(rh.mul(ea, t))) throw precondition_error("a*t != 0");
  if (!rh.is_regular(rh.add(ea, t))) throw precondition_error("a + t is not regular in " + rh.name());
  index_t x = rh.augmentation(t);
  if (R.mul(a, x) != R.zero() || !regular_flag(R, R.add(a, x)))
    throw invariant_violation("projected complement failed to re-verify");
  return x;
}

struct PnDecomposition {
  index_t scalar;                    // -(p-1) * sum a_i, in R
  GroupRingElement nilpotent_part;  // sum a_i (p-1+g^i)
};

// alpha = -(p-1) sum a_i + sum a_i (p-1+g^i) in R*C_{p^n} when p is nilpotent in R.
inline PnDecomposition pn_decomposition(const GroupRing& rg, std::uint64_t p, std::uint64_t n,
                                        const GroupRingElement& alpha) {
  const FiniteRing& R = rg.ring();
  if (!is_prime(p)) throw precondition_error(std::to_string(p) + " is not prime");
  auto order = checked_pow(p, n);
  if (n < 1 || !order || rg.group().invariants() != std::vector<std::uint64_t>{*order})
    throw precondition_error("group must be cyclic of order p^n");
  if (!is_nilpotent(R, int_image(R, static_cast<std::int64_t>(p))))
    throw precondition_error(std::to_string(p) + " is not nilpotent in " + R.name());
  index_t p_minus_1 = int_image(R, static_cast<std::int64_t>(p) - 1);
  index_t sum = rg.augmentation(alpha);
  PnDecomposition out{R.neg(R.mul(p_minus_1, sum)), rg.zero()};
  auto& part = out.nilpotent_part.coeffs;
  for (index_t i = 0; i < alpha.coeffs.size(); ++i) {
    index_t a = alpha.coeffs[i];
    part[0] = R.add(part[0], R.mul(a, p_minus_1));
    part[i] = R.add(part[i], a);
  }
  if (rg.add(rg.embed_ring(out.scalar), out.nilpotent_part) != alpha)
    throw invariant_violation("decomposition parts do not sum to alpha");
  if (!rg.is_nilpotent(out.nilpotent_part)) throw invariant_violation("decomposition remainder is not nilpotent");
  return out;
}

// Min(RG) -> Min(R), Q -> Q /\ R: checks that every contraction is a minimal
// prime of R and that every minimal prime of R is hit.
inline bool min_spectrum_contraction_check(const GroupRing& rg) {
  const FiniteRing& R = rg.ring();
  if (!is_reduced(R)) throw precondition_error(R.name() + " is not reduced");
  const FiniteRing& RG = rg.materialized();
  if (!is_reduced(RG)) throw precondition_error(rg.name() + " is not reduced");
  auto base_primes = minimal_primes(R);
  std::vector<bool> hit(base_primes.size(), false);
  for (const auto& q : minimal_primes(RG)) {
    std::vector<index_t> members;
    for (index_t r = 0; r < R.size(); ++r)
      if (q.contains(rg.encode(rg.embed_ring(r)))) members.push_back(r);
    IdealSet contraction{R.id(), std::move(members)};
    bool found = false;
    for (std::size_t i = 0; i < base_primes.size(); ++i) {
      if (base_primes[i] == contraction) {
        hit[i] = true;
        found = true;
      }
    }
    if (!found) return false;
  }
  for (bool h : hit)
    if (!h) return false;
  return true;
}

}  // namespace gring

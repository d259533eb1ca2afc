#pragma once

// Finite commutative rings with identity, materialized from a RingSpec.
//
// Every element is a canonical index in [0, size) with 0 the additive and 1
// the multiplicative identity. Operations evaluate structurally; rings of at
// most `table_threshold` elements additionally cache full operation tables.

#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gring/arith.hpp"
#include "gring/error.hpp"
#include "gring/parallel.hpp"
#include "gring/ring_spec.hpp"

namespace gring {

using index_t = std::uint32_t;

inline constexpr std::uint64_t default_enumeration_limit = 65536;
inline constexpr index_t table_threshold = 256;

// Largest number of base-ring digits a structural element may carry.
inline constexpr std::size_t max_digits = 32;

namespace detail {

class RingImpl {
 public:
  explicit RingImpl(index_t size) : size_(size) {}
  virtual ~RingImpl() = default;

  virtual index_t add(index_t a, index_t b) const = 0;
  virtual index_t mul(index_t a, index_t b) const = 0;
  virtual index_t neg(index_t a) const = 0;
  virtual std::string format(index_t a) const = 0;
  // True when format() output needs parentheses to be used as a coefficient.
  virtual bool compound_format() const { return false; }

  index_t size() const { return size_; }

 private:
  index_t size_;
};

inline std::uint64_t next_parent_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1);
}

}  // namespace detail

// Element together with the identity of its ring, for the checked API.
struct RingElem {
  std::uint64_t ring_id = 0;
  index_t index = 0;
  bool operator==(const RingElem&) const = default;
};

// Per-element power-orbit facts; see FiniteRing::kinds().
enum ElementKind : std::uint8_t {
  kind_unit = 1,
  kind_nilpotent = 2,
};

class FiniteRing {
 public:
  FiniteRing(std::unique_ptr<const detail::RingImpl> impl, std::string name, std::optional<RingSpec> spec = {})
      : state_(std::make_shared<State>()) {
    state_->impl = std::move(impl);
    state_->size = state_->impl->size();
    state_->name = std::move(name);
    state_->spec = std::move(spec);
    state_->id = detail::next_parent_id();
    if (state_->size <= table_threshold) build_tables();
  }

  index_t size() const { return state_->size; }
  index_t zero() const { return 0; }
  index_t one() const { return 1; }
  std::uint64_t id() const { return state_->id; }
  const std::string& name() const { return state_->name; }
  const std::optional<RingSpec>& spec() const { return state_->spec; }
  bool has_tables() const { return !state_->mul_table.empty(); }

  index_t add(index_t a, index_t b) const {
    const State& s = *state_;
    return s.add_table.empty() ? s.impl->add(a, b) : s.add_table[std::size_t(a) * s.size + b];
  }
  index_t mul(index_t a, index_t b) const {
    const State& s = *state_;
    return s.mul_table.empty() ? s.impl->mul(a, b) : s.mul_table[std::size_t(a) * s.size + b];
  }
  index_t neg(index_t a) const {
    const State& s = *state_;
    return s.neg_table.empty() ? s.impl->neg(a) : s.neg_table[a];
  }
  index_t sub(index_t a, index_t b) const { return add(a, neg(b)); }

  index_t pow(index_t x, std::uint64_t k) const {
    index_t result = one();
    while (k) {
      if (k & 1) result = mul(result, x);
      x = mul(x, x);
      k >>= 1;
    }
    return result;
  }

  std::string format(index_t a) const { return state_->impl->format(a); }
  bool compound_format() const { return state_->impl->compound_format(); }

  // Checked element API. Mixing elements of different rings throws.
  RingElem elem(index_t index) const {
    if (index >= size()) throw precondition_error("element index out of range for " + name());
    return {id(), index};
  }
  RingElem add(RingElem a, RingElem b) const { return {id(), add(own(a), own(b))}; }
  RingElem mul(RingElem a, RingElem b) const { return {id(), mul(own(a), own(b))}; }
  RingElem neg(RingElem a) const { return {id(), neg(own(a))}; }
  RingElem pow(RingElem a, std::uint64_t k) const { return {id(), pow(own(a), k)}; }

  // Unit / nilpotent flags for every element, from the power orbit of each
  // element. Computed once on first use; safe under concurrent readers.
  const std::vector<std::uint8_t>& kinds() const {
    std::call_once(state_->kinds_once, [this] {
      std::vector<std::uint8_t> out(size());
      parallel_for(size(), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t x = lo; x < hi; ++x) out[x] = orbit_kind(static_cast<index_t>(x));
      });
      state_->kinds = std::move(out);
    });
    return state_->kinds;
  }

  // Unit / nilpotent classification of a single element by walking its
  // powers x, x^2, ... with Brent cycle detection. A unit's orbit is purely
  // periodic through 1; a nilpotent's orbit ends at the fixed point 0.
  std::uint8_t orbit_kind(index_t x) const {
    index_t tortoise = x;
    index_t hare = x;
    std::uint64_t power = 1;
    std::uint64_t lambda = 1;
    for (;;) {
      if (hare == 0) return kind_nilpotent;
      if (hare == 1) return kind_unit;
      hare = mul(hare, x);
      if (hare == tortoise) {
        // The hare has walked the whole cycle once; any 0 or 1 on it was seen.
        return (hare == 0) ? kind_nilpotent : (hare == 1 ? kind_unit : 0);
      }
      if (power == lambda) {
        tortoise = hare;
        power *= 2;
        lambda = 0;
      }
      ++lambda;
    }
  }

  bool operator==(const FiniteRing& other) const { return state_ == other.state_; }

  const detail::RingImpl& impl() const { return *state_->impl; }

 private:
  struct State {
    std::unique_ptr<const detail::RingImpl> impl;
    index_t size = 0;
    std::vector<index_t> add_table, mul_table, neg_table;
    std::string name;
    std::optional<RingSpec> spec;
    std::uint64_t id = 0;
    std::once_flag kinds_once;
    std::vector<std::uint8_t> kinds;
  };

  index_t own(RingElem e) const {
    if (e.ring_id != id()) throw mixed_parent_error("element does not belong to ring " + name());
    return e.index;
  }

  void build_tables() {
    State& s = *state_;
    std::size_t n = s.size;
    s.add_table.resize(n * n);
    s.mul_table.resize(n * n);
    s.neg_table.resize(n);
    for (index_t a = 0; a < n; ++a) {
      s.neg_table[a] = s.impl->neg(a);
      for (index_t b = 0; b < n; ++b) {
        s.add_table[a * n + b] = s.impl->add(a, b);
        s.mul_table[a * n + b] = s.impl->mul(a, b);
      }
    }
  }

  std::shared_ptr<State> state_;
};

// n * 1_R, by double-and-add; negative n goes through neg.
inline index_t int_image(const FiniteRing& ring, std::int64_t n) {
  std::uint64_t k = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  index_t acc = ring.zero();
  index_t term = ring.one();
  while (k) {
    if (k & 1) acc = ring.add(acc, term);
    term = ring.add(term, term);
    k >>= 1;
  }
  return n < 0 ? ring.neg(acc) : acc;
}

namespace detail {

// Digit vectors are stored least significant digit first.
inline void decode_digits(index_t code, index_t radix, std::size_t count, index_t* out) {
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = code % radix;
    code /= radix;
  }
}

inline index_t encode_digits(const index_t* digits, index_t radix, std::size_t count) {
  index_t code = 0;
  for (std::size_t i = count; i-- > 0;) code = code * radix + digits[i];
  return code;
}

inline std::string coefficient_text(const FiniteRing& base, index_t c) {
  std::string s = base.format(c);
  return base.compound_format() ? "(" + s + ")" : s;
}

class ZnImpl final : public RingImpl {
 public:
  explicit ZnImpl(index_t n) : RingImpl(n) {}
  index_t add(index_t a, index_t b) const override {
    std::uint64_t s = std::uint64_t(a) + b;
    return static_cast<index_t>(s >= size() ? s - size() : s);
  }
  index_t mul(index_t a, index_t b) const override {
    return static_cast<index_t>((std::uint64_t(a) * b) % size());
  }
  index_t neg(index_t a) const override { return a == 0 ? 0 : size() - a; }
  std::string format(index_t a) const override { return std::to_string(a); }
};

// B[x]/(f) for monic f of degree d; coefficient c_i is digit i.
class PolyQuotImpl final : public RingImpl {
 public:
  PolyQuotImpl(FiniteRing base, std::vector<index_t> modulus, index_t size)
      : RingImpl(size), base_(std::move(base)), modulus_(std::move(modulus)), degree_(modulus_.size() - 1) {}

  index_t add(index_t a, index_t b) const override {
    index_t da[max_digits], db[max_digits];
    split(a, da);
    split(b, db);
    for (std::size_t i = 0; i < degree_; ++i) da[i] = base_.add(da[i], db[i]);
    return join(da);
  }
  index_t neg(index_t a) const override {
    index_t da[max_digits];
    split(a, da);
    for (std::size_t i = 0; i < degree_; ++i) da[i] = base_.neg(da[i]);
    return join(da);
  }
  index_t mul(index_t a, index_t b) const override {
    index_t da[max_digits], db[max_digits];
    split(a, da);
    split(b, db);
    std::array<index_t, 2 * max_digits> prod{};
    for (std::size_t i = 0; i < degree_; ++i) {
      if (da[i] == 0) continue;
      for (std::size_t j = 0; j < degree_; ++j) prod[i + j] = base_.add(prod[i + j], base_.mul(da[i], db[j]));
    }
    // x^d = -(m_0 + ... + m_{d-1} x^{d-1})
    for (std::size_t k = 2 * degree_ - 1; k-- > degree_;) {
      index_t c = prod[k];
      if (c == 0) continue;
      prod[k] = 0;
      for (std::size_t j = 0; j < degree_; ++j)
        prod[k - degree_ + j] = base_.sub(prod[k - degree_ + j], base_.mul(c, modulus_[j]));
    }
    return join(prod.data());
  }
  std::string format(index_t a) const override {
    index_t da[max_digits];
    split(a, da);
    std::string out;
    for (std::size_t k = degree_; k-- > 0;) {
      if (da[k] == 0) continue;
      if (!out.empty()) out += '+';
      if (k == 0) {
        out += coefficient_text(base_, da[k]);
        continue;
      }
      if (da[k] != base_.one()) out += coefficient_text(base_, da[k]);
      out += 'x';
      if (k > 1) out += "^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
  }
  bool compound_format() const override { return true; }

 private:
  void split(index_t code, index_t* out) const { decode_digits(code, base_.size(), degree_, out); }
  index_t join(const index_t* digits) const { return encode_digits(digits, base_.size(), degree_); }

  FiniteRing base_;
  std::vector<index_t> modulus_;  // m_0..m_d with m_d = 1
  std::size_t degree_;
};

// Direct product; factor 0 is the least significant digit. The natural code
// of (1,...,1) and the code 1 trade places so that index 1 is the identity.
class ProductImpl final : public RingImpl {
 public:
  ProductImpl(std::vector<FiniteRing> factors, index_t size) : RingImpl(size), factors_(std::move(factors)) {
    index_t stride = 1;
    one_code_ = 0;
    for (const auto& f : factors_) {
      strides_.push_back(stride);
      one_code_ += stride;
      stride *= f.size();
    }
  }

  index_t add(index_t a, index_t b) const override {
    return combine(a, b, [](const FiniteRing& r, index_t x, index_t y) { return r.add(x, y); });
  }
  index_t mul(index_t a, index_t b) const override {
    return combine(a, b, [](const FiniteRing& r, index_t x, index_t y) { return r.mul(x, y); });
  }
  index_t neg(index_t a) const override {
    return combine(a, 0, [](const FiniteRing& r, index_t x, index_t) { return r.neg(x); });
  }
  std::string format(index_t a) const override {
    index_t code = swap(a);
    std::string out = "(";
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) out += ',';
      out += factors_[i].format((code / strides_[i]) % factors_[i].size());
    }
    return out + ")";
  }

  // Canonical index of the tuple of factor indices.
  index_t from_components(const std::vector<index_t>& parts) const {
    index_t code = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) code += parts[i] * strides_[i];
    return swap(code);
  }
  std::vector<index_t> components(index_t a) const {
    index_t code = swap(a);
    std::vector<index_t> out;
    for (std::size_t i = 0; i < factors_.size(); ++i) out.push_back((code / strides_[i]) % factors_[i].size());
    return out;
  }

 private:
  index_t swap(index_t code) const {
    if (code == 1) return one_code_;
    if (code == one_code_) return 1;
    return code;
  }

  template <class Op>
  index_t combine(index_t a, index_t b, Op op) const {
    index_t ca = swap(a), cb = swap(b), out = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      index_t n = factors_[i].size();
      index_t x = (ca / strides_[i]) % n;
      index_t y = (cb / strides_[i]) % n;
      out += op(factors_[i], x, y) * strides_[i];
    }
    return swap(out);
  }

  std::vector<FiniteRing> factors_;
  std::vector<index_t> strides_;
  index_t one_code_ = 1;
};

inline std::uint64_t checked_size(std::optional<std::uint64_t> size, std::uint64_t limit, const std::string& what) {
  std::uint64_t cap = std::min<std::uint64_t>(limit, UINT32_MAX);
  if (!size || *size > cap)
    throw limit_error(what + " exceeds the enumeration limit of " + std::to_string(limit) + " elements");
  return *size;
}

}  // namespace detail

// Builds the ring described by `spec`. Same spec, same tables.
inline FiniteRing build_ring(const RingSpec& spec, std::uint64_t limit = default_enumeration_limit) {
  validate(spec);
  std::string name = to_string(spec);
  if (const auto* zn = std::get_if<ZnSpec>(&spec.node)) {
    auto n = detail::checked_size(zn->modulus, limit, name);
    return FiniteRing(std::make_unique<detail::ZnImpl>(static_cast<index_t>(n)), name, spec);
  }
  if (const auto* pq = std::get_if<PolyQuotSpec>(&spec.node)) {
    FiniteRing base = build_ring(*pq->base, limit);
    std::size_t degree = pq->modulus.size() - 1;
    if (degree > max_digits) throw limit_error(name + ": modulus degree above " + std::to_string(max_digits));
    std::vector<index_t> modulus;
    for (auto c : pq->modulus) modulus.push_back(int_image(base, c));
    if (modulus.back() != base.one())
      throw spec_error("non-monic modulus: leading coefficient of " + detail::poly_to_string(pq->modulus) +
                       " is not 1 in " + base.name());
    auto n = detail::checked_size(checked_pow(base.size(), degree), limit, name);
    return FiniteRing(std::make_unique<detail::PolyQuotImpl>(base, std::move(modulus), static_cast<index_t>(n)), name,
                      spec);
  }
  const auto& prod = std::get<ProductSpec>(spec.node);
  std::vector<FiniteRing> factors;
  std::optional<std::uint64_t> total = 1;
  for (const auto& f : prod.factors) {
    factors.push_back(build_ring(f, limit));
    total = total ? checked_mul(*total, factors.back().size()) : std::nullopt;
  }
  auto n = detail::checked_size(total, limit, name);
  return FiniteRing(std::make_unique<detail::ProductImpl>(std::move(factors), static_cast<index_t>(n)), name, spec);
}

inline FiniteRing build_ring(std::string_view text, std::uint64_t limit = default_enumeration_limit) {
  return build_ring(parse_ring_spec(text), limit);
}

// Component access for product rings; factor 0 first.
inline std::vector<index_t> components(const FiniteRing& ring, index_t a) {
  const auto* p = dynamic_cast<const detail::ProductImpl*>(&ring.impl());
  if (!p) throw precondition_error(ring.name() + " is not a product ring");
  return p->components(a);
}

inline index_t from_components(const FiniteRing& ring, const std::vector<index_t>& parts) {
  const auto* p = dynamic_cast<const detail::ProductImpl*>(&ring.impl());
  if (!p) throw precondition_error(ring.name() + " is not a product ring");
  return p->from_components(parts);
}

}  // namespace gring

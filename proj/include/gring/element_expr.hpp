#pragma once

// Element expressions over a group ring: sums of terms `c`, `c*g^k`, `g`,
// `-3*g*h^2`, with generators g, h, k, ... naming the cyclic factors in
// order. Coefficients are integers mapped into R by n -> n*1. Exponents may
// be negative. Over the infinite cyclic group the single generator is `g`
// and the result is a LaurentElement.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gring/error.hpp"
#include "gring/group.hpp"
#include "gring/group_ring.hpp"
#include "gring/laurent.hpp"
#include "gring/ring_spec.hpp"

namespace gring {

namespace detail {

struct Term {
  std::int64_t coefficient = 1;
  std::vector<std::int64_t> exponents;  // one per generator
};

class ElementParser {
 public:
  ElementParser(std::string_view text, std::size_t generators) : cur_(text), generators_(generators) {}

  std::vector<Term> parse() {
    std::vector<Term> terms;
    if (cur_.at_end()) cur_.fail("element expression");
    bool first = true;
    while (!cur_.at_end()) {
      std::int64_t sign = 1;
      if (cur_.accept('-')) sign = -1;
      else if (!first && !cur_.accept('+')) cur_.fail("'+' or '-'");
      first = false;
      Term t = term();
      t.coefficient *= sign;
      terms.push_back(std::move(t));
    }
    return terms;
  }

 private:
  Term term() {
    Term t;
    t.exponents.assign(generators_, 0);
    if (cur_.peek_digit()) {
      std::uint64_t v = cur_.integer();
      if (v > static_cast<std::uint64_t>(INT64_MAX)) cur_.fail("smaller coefficient");
      t.coefficient = static_cast<std::int64_t>(v);
      bool star = cur_.accept('*');
      if (generator_at(cur_.peek()) < 0) {
        if (star) cur_.fail(generators_ ? "generator name" : "end of term (the group is trivial)");
        return t;
      }
    } else if (generator_at(cur_.peek()) < 0) {
      cur_.fail(generators_ ? "integer or generator name" : "integer (the group is trivial)");
    }
    for (;;) {
      int gen = generator_at(cur_.peek());
      cur_.accept(cur_.peek());
      std::int64_t e = 1;
      if (cur_.accept('^')) {
        std::int64_t s = cur_.accept('-') ? -1 : 1;
        std::uint64_t v = cur_.integer();
        if (v > static_cast<std::uint64_t>(INT64_MAX)) cur_.fail("smaller exponent");
        e = s * static_cast<std::int64_t>(v);
      }
      t.exponents[gen] += e;
      bool star = cur_.accept('*');
      if (generator_at(cur_.peek()) < 0) {
        if (star) cur_.fail("generator name");
        return t;
      }
    }
  }

  int generator_at(char c) const {
    for (std::size_t i = 0; i < generators_; ++i)
      if (FiniteAbelianGroup::generator_name(i) == std::string(1, c)) return static_cast<int>(i);
    return -1;
  }

  Cursor cur_;
  std::size_t generators_;
};

}  // namespace detail

inline GroupRingElement parse_element(const GroupRing& rg, std::string_view text) {
  const auto& G = rg.group();
  const auto& inv = G.invariants();
  GroupRingElement out = rg.zero();
  for (const auto& t : detail::ElementParser(text, inv.size()).parse()) {
    std::vector<std::uint64_t> residues(inv.size());
    for (std::size_t i = 0; i < inv.size(); ++i) {
      auto n = static_cast<std::int64_t>(inv[i]);
      residues[i] = static_cast<std::uint64_t>(((t.exponents[i] % n) + n) % n);
    }
    index_t g = G.from_residues(residues);
    out = rg.add(out, rg.monomial(int_image(rg.ring(), t.coefficient), g));
  }
  return out;
}

inline LaurentElement parse_laurent(const FiniteRing& ring, std::string_view text) {
  auto terms = detail::ElementParser(text, 1).parse();
  std::int64_t lo = 0, hi = 0;
  for (const auto& t : terms) {
    lo = std::min(lo, t.exponents[0]);
    hi = std::max(hi, t.exponents[0]);
  }
  if (hi - lo > 4096) throw limit_error("Laurent support window above 4096 exponents");
  LaurentElement out{lo, std::vector<index_t>(static_cast<std::size_t>(hi - lo + 1), ring.zero())};
  for (const auto& t : terms) {
    auto& c = out.coeffs[static_cast<std::size_t>(t.exponents[0] - lo)];
    c = ring.add(c, int_image(ring, t.coefficient));
  }
  return out.trimmed();
}

}  // namespace gring

#pragma once

// Finitely supported elements of R[Z] = R[x, x^-1], used to exercise the
// scalar-annihilator property of zero-divisors over a torsion-free group.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gring/arith.hpp"
#include "gring/error.hpp"
#include "gring/finite_ring.hpp"

namespace gring {

inline constexpr std::size_t default_laurent_window = 4;

struct LaurentElement {
  std::int64_t lo = 0;          // exponent of coeffs[0]
  std::vector<index_t> coeffs;  // window [lo, lo + coeffs.size() - 1]

  bool is_zero() const {
    for (index_t c : coeffs)
      if (c != 0) return false;
    return true;
  }
  std::int64_t hi() const { return lo + static_cast<std::int64_t>(coeffs.size()) - 1; }

  // Tight support window; zero becomes the empty element at exponent 0.
  LaurentElement trimmed() const {
    std::size_t begin = 0, end = coeffs.size();
    while (begin < end && coeffs[begin] == 0) ++begin;
    while (end > begin && coeffs[end - 1] == 0) --end;
    if (begin == end) return {};
    return {lo + static_cast<std::int64_t>(begin), {coeffs.begin() + begin, coeffs.begin() + end}};
  }
  std::size_t window() const { return trimmed().coeffs.size(); }

  bool operator==(const LaurentElement& other) const {
    auto a = trimmed(), b = other.trimmed();
    return a.lo == b.lo && a.coeffs == b.coeffs;
  }
};

inline LaurentElement laurent_mul(const FiniteRing& ring, const LaurentElement& a, const LaurentElement& b) {
  if (a.coeffs.empty() || b.coeffs.empty()) return {};
  LaurentElement out{a.lo + b.lo, std::vector<index_t>(a.coeffs.size() + b.coeffs.size() - 1, ring.zero())};
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      out.coeffs[i + j] = ring.add(out.coeffs[i + j], ring.mul(a.coeffs[i], b.coeffs[j]));
  }
  return out.trimmed();
}

inline std::string format(const FiniteRing& ring, const LaurentElement& a, const std::string& var = "g") {
  std::string out;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    index_t c = a.coeffs[i];
    if (c == 0) continue;
    std::int64_t e = a.lo + static_cast<std::int64_t>(i);
    if (!out.empty()) out += '+';
    std::string coeff = ring.format(c);
    if (ring.compound_format()) coeff = "(" + coeff + ")";
    if (e == 0) {
      out += coeff;
      continue;
    }
    if (c != ring.one()) out += coeff;
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "0" : out;
}

// Least nonzero r with r*alpha = 0, i.e. r annihilating every coefficient.
// Absent means alpha is regular in R[Z].
inline std::optional<index_t> mccoy_scalar_witness(const FiniteRing& ring, const LaurentElement& alpha) {
  if (alpha.is_zero()) throw precondition_error("scalar witness requested for alpha = 0");
  for (index_t r = 1; r < ring.size(); ++r) {
    bool kills = true;
    for (index_t c : alpha.coeffs) {
      if (ring.mul(r, c) != ring.zero()) {
        kills = false;
        break;
      }
    }
    if (kills) return r;
  }
  return std::nullopt;
}

// Exhaustive search for nonzero beta with support window <= `window` and
// alpha*beta = 0. Shifts are units of R[Z], so beta ranges over exponents
// 0 .. window-1 only.
inline std::optional<LaurentElement> find_laurent_annihilator(const FiniteRing& ring, const LaurentElement& alpha,
                                                              std::size_t window,
                                                              std::uint64_t limit = default_enumeration_limit) {
  if (window == 0) return std::nullopt;
  auto count = checked_pow(ring.size(), window);
  if (!count || *count > limit)
    throw limit_error("Laurent window " + std::to_string(window) + " over " + ring.name() +
                      " exceeds the enumeration limit of " + std::to_string(limit));
  LaurentElement beta{0, std::vector<index_t>(window, ring.zero())};
  for (std::uint64_t code = 1; code < *count; ++code) {
    std::uint64_t c = code;
    for (std::size_t j = 0; j < window; ++j) {
      beta.coeffs[j] = static_cast<index_t>(c % ring.size());
      c /= ring.size();
    }
    if (laurent_mul(ring, alpha, beta).is_zero()) return beta.trimmed();
  }
  return std::nullopt;
}

}  // namespace gring

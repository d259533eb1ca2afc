#pragma once

#include <vector>

#include "gring/gring.hpp"
#include "oracle.hpp"

namespace support {

inline gring::GroupRingElement to_library(const gring::GroupRing& rg, const oracle::ZnGroupRing& o, const oracle::Vec& v) {
  auto out = rg.zero();
  for (std::size_t i = 0; i < v.size(); ++i) {
    auto r = o.residues(i);
    std::vector<std::uint64_t> ru(r.begin(), r.end());
    out.coeffs[rg.group().from_residues(ru)] = gring::int_image(rg.ring(), v[i]);
  }
  return out;
}

inline std::vector<gring::GroupRingElement> library_set(const gring::GroupRing& rg, const oracle::ZnGroupRing& o,
                                                        const std::set<oracle::Vec>& vs) {
  std::vector<gring::GroupRingElement> out;
  for (const auto& v : vs) out.push_back(to_library(rg, o, v));
  return out;
}

inline gring::IdealSet encode_set(const gring::GroupRing& rg, const std::vector<gring::GroupRingElement>& xs) {
  std::vector<gring::index_t> codes;
  for (const auto& x : xs) codes.push_back(rg.encode(x));
  return gring::make_set(rg.materialized(), codes);
}

}  // namespace support

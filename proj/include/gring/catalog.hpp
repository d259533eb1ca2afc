#pragma once

// Built-in sweep of rings and groups shared by the CLI catalog verb and the
// acceptance suite.

#include <string>
#include <vector>

#include "gring/finite_ring.hpp"
#include "gring/group.hpp"

namespace gring::catalog {

inline const std::vector<std::string>& ring_texts() {
  static const std::vector<std::string> rings = {
      "Z2",  "Z3",  "Z4",          "Z5",          "Z6",          "Z7",           "Z8",       "Z9",
      "Z10", "Z11", "Z12",         "Z2[x]/(x^2)", "Z2[x]/(x^2+x+1)", "Z4[x]/(x^2-2)", "Z2 x Z4", "Z2 x Z3",
  };
  return rings;
}

inline const std::vector<std::string>& concrete_group_texts() {
  static const std::vector<std::string> groups = {"1", "C2", "C3", "C4", "C5", "C6", "C2 x C2"};
  return groups;
}

inline const std::vector<std::string>& symbolic_group_texts() {
  static const std::vector<std::string> groups = {"Z^1", "Z^1 x C2", "Z^1 x C3"};
  return groups;
}

inline std::vector<FiniteRing> rings() {
  std::vector<FiniteRing> out;
  for (const auto& t : ring_texts()) out.push_back(build_ring(t));
  return out;
}

inline std::vector<GroupSpec> concrete_groups() {
  std::vector<GroupSpec> out;
  for (const auto& t : concrete_group_texts()) out.push_back(parse_group_spec(t));
  return out;
}

inline std::vector<GroupSpec> symbolic_groups() {
  std::vector<GroupSpec> out;
  for (const auto& t : symbolic_group_texts()) out.push_back(parse_group_spec(t));
  return out;
}

inline std::vector<GroupSpec> all_groups() {
  auto out = concrete_groups();
  for (auto& g : symbolic_groups()) out.push_back(std::move(g));
  return out;
}

}  // namespace gring::catalog

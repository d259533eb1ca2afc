#pragma once

// Brute-force side of the cross-validation: every question is answered by
// scanning the materialized group ring, then compared with the classifier.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gring/classifier.hpp"
#include "gring/finite_ring.hpp"
#include "gring/group.hpp"
#include "gring/group_ring.hpp"
#include "gring/ring_props.hpp"

namespace gring {

// Least element of `ring` refuting question q, or nullopt when q holds.
inline std::optional<index_t> oracle_counterexample(Question q, const FiniteRing& ring) {
  switch (q) {
    case Question::reduced: return first_nonzero_nilpotent(ring);
    case Question::domain:
      for (index_t x = 1; x < ring.size(); ++x)
        if (!regular_flag(ring, x)) return x;
      return std::nullopt;
    case Question::indecomposable:
      for (index_t e : idempotents(ring))
        if (e != ring.zero() && e != ring.one()) return e;
      return std::nullopt;
    case Question::complemented: return first_uncomplemented(ring, false);
    case Question::property_D: return first_mixed_element(ring);
    case Question::semi_complemented: return first_uncomplemented(ring, true);
  }
  return std::nullopt;
}

inline bool oracle(Question q, const FiniteRing& ring) { return !oracle_counterexample(q, ring); }

struct QuestionReport {
  Question question;
  Verdict verdict;  // classifier side
  Truth oracle = Truth::not_applicable;
  std::optional<index_t> counterexample;  // in the materialized group ring
  std::string counterexample_text;

  bool compared() const { return oracle != Truth::not_applicable; }
  bool agree() const { return verdict.value == oracle; }
};

struct PairReport {
  std::string ring;
  GroupSpec group;
  std::optional<std::uint64_t> group_ring_size;  // when G is finite
  bool materialized = false;
  std::vector<QuestionReport> rows;

  bool all_agree() const {
    for (const auto& r : rows)
      if (r.compared() && !r.agree()) return false;
    return true;
  }
};

// |R|^|G| for finite G.
inline std::optional<std::uint64_t> group_ring_size(const FiniteRing& R, const GroupSpec& spec) {
  if (!is_torsion(spec)) return std::nullopt;
  std::uint64_t g = 1;
  for (auto n : spec.torsion_invariants) {
    auto next = checked_mul(g, n);
    if (!next) return std::nullopt;
    g = *next;
  }
  return checked_pow(R.size(), g);
}

// Classifier verdicts for every question, plus oracle verdicts on the
// materialized RG when G is finite and |R|^|G| <= limit.
inline PairReport compare_pair(const FiniteRing& R, const GroupSpec& spec, std::uint64_t limit,
                               bool require_oracle = false) {
  PairReport report{R.name(), spec, group_ring_size(R, spec), false, {}};
  std::optional<GroupRing> rg;
  bool fits = report.group_ring_size && *report.group_ring_size <= limit &&
              torsion_order(spec) <= max_digits;
  if (require_oracle && !fits) {
    if (!is_torsion(spec)) throw limit_error("group " + to_string(spec) + " is not finite; no brute-force oracle");
    throw limit_error("group ring " + R.name() + "[" + to_string(spec) + "] has more than " + std::to_string(limit) +
                      " elements");
  }
  if (fits) {
    rg.emplace(R, build_group(spec, limit), limit);
    report.materialized = true;
  }
  for (Question q : all_questions) {
    QuestionReport row{q, classify(q, R, spec), Truth::not_applicable, std::nullopt, {}};
    if (rg) {
      const FiniteRing& RG = rg->materialized();
      row.counterexample = oracle_counterexample(q, RG);
      row.oracle = truth(!row.counterexample);
      if (row.counterexample) row.counterexample_text = RG.format(*row.counterexample);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace gring

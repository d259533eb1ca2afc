#pragma once

// Decides questions about RG from the finite ring R and the symbolic group
// spec alone, through the group-ring characterization theorems. RG itself is
// never enumerated here; see verify.hpp for the brute-force side.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gring/error.hpp"
#include "gring/finite_ring.hpp"
#include "gring/group.hpp"
#include "gring/ring_props.hpp"

namespace gring {

enum class Question { reduced, domain, indecomposable, complemented, property_D, semi_complemented };

inline constexpr std::array<Question, 6> all_questions = {Question::reduced,      Question::domain,
                                                          Question::indecomposable, Question::complemented,
                                                          Question::property_D,   Question::semi_complemented};

inline std::string_view question_name(Question q) {
  switch (q) {
    case Question::reduced: return "reduced";
    case Question::domain: return "domain";
    case Question::indecomposable: return "indecomposable";
    case Question::complemented: return "complemented";
    case Question::property_D: return "property_D";
    case Question::semi_complemented: return "semi_complemented";
  }
  return "?";
}

enum class Truth { yes, no, not_applicable };

inline std::string_view truth_name(Truth t) {
  switch (t) {
    case Truth::yes: return "true";
    case Truth::no: return "false";
    case Truth::not_applicable: return "n/a";
  }
  return "?";
}

inline Truth truth(bool b) { return b ? Truth::yes : Truth::no; }

struct TheoremClause {
  std::string id;
  std::string statement;
  bool axiom = false;
  // Groups the clause speaks about.
  std::function<bool(const GroupSpec&)> applies;
};

class TheoremRegistry {
 public:
  static const TheoremRegistry& instance() {
    static const TheoremRegistry registry;
    return registry;
  }

  const TheoremClause* find(std::string_view id) const {
    for (const auto& c : clauses_)
      if (c.id == id) return &c;
    return nullptr;
  }
  const std::vector<TheoremClause>& clauses() const { return clauses_; }

 private:
  TheoremRegistry() {
    auto any = [](const GroupSpec&) { return true; };
    clauses_ = {
        {"reduced.order_regular", "RG reduced <=> R reduced and every n in o(G) regular in R", false, any},
        {"domain.torsion_free", "RG integral domain <=> R integral domain and G torsion-free", false, any},
        {"indecomposable.sing_trivial",
         "RG indecomposable <=> R indecomposable and no p in supp(G) is a unit of R (Sing_R(G) trivial)", false, any},
        {"complemented.torsion", "G torsion: RG complemented <=> R complemented and o(G) in reg(R)", false,
         [](const GroupSpec& g) { return is_torsion(g); }},
        {"complemented.non_torsion",
         "G not torsion: RG complemented <=> R reduced, Min(R) compact and o(G) in reg(R)", false,
         [](const GroupSpec& g) { return !is_torsion(g); }},
        {"min_spectrum.finite_compact", "Min(R) of a finite ring is finite, hence compact", true, any},
        {"property_D.torsion_free", "G torsion-free: RG has Property D <=> R has Property D", false,
         [](const GroupSpec& g) { return is_torsion_free(g); }},
        {"property_D.p_group",
         "t(G) nontrivial: RG has Property D <=> R has Property D and t(G) is a p-group with p nilpotent in R", false,
         [](const GroupSpec& g) { return torsion_nontrivial(g); }},
        {"property_D.mixed_primes", "distinct primes p, q nilpotent in R would force 1 nilpotent", true,
         [](const GroupSpec& g) { return supp(g).size() >= 2; }},
        {"semi.dichotomy", "R semi-complemented <=> R complemented or R has Property D", false, any},
    };
  }

  std::vector<TheoremClause> clauses_;
};

struct Witness {
  enum class Kind {
    nilpotent_element,       // nonzero nilpotent of R
    uncomplemented_element,  // element of R without complement
    mixed_element,           // element of R neither regular nor nilpotent
    zero_divisor,            // nonzero non-regular element of R
    nontrivial_idempotent,   // idempotent of R other than 0, 1
    order_not_regular,       // n in o(G) with n*1 not regular in R
    unit_prime,              // p in supp(G) with p*1 a unit of R
    prime_not_nilpotent,     // unique p in supp(G) with p*1 not nilpotent
    mixed_primes,            // two distinct primes in supp(G)
    torsion_order,           // a torsion invariant of G
  };
  Kind kind;
  std::vector<std::uint64_t> values;  // ring element indices or integers
  std::string text;
};

struct Verdict {
  Truth value = Truth::not_applicable;
  std::vector<std::string> clauses;  // registry ids, deciding clause first
  std::string failed;                // failed condition, set when value is no
  std::vector<std::string> trace;
  std::optional<Witness> witness;
  std::string via;                   // semi_complemented: disjunct(s) that held
};

struct Classification {
  std::string ring_name;
  GroupSpec group;
  std::map<Question, Verdict> verdicts;

  const Verdict& at(Question q) const { return verdicts.at(q); }
};

namespace detail {

inline Witness element_witness(const FiniteRing& R, Witness::Kind kind, index_t x, const char* label) {
  return {kind, {x}, std::string(label) + ":" + R.format(x)};
}

inline Verdict fail(Verdict v, std::string failed, Witness w) {
  v.value = Truth::no;
  v.failed = std::move(failed);
  v.trace.push_back(v.failed);
  v.witness = std::move(w);
  return v;
}

// Least n in o(G) whose image in R is not regular.
inline std::optional<std::uint64_t> irregular_order(const FiniteRing& R, const GroupSpec& spec) {
  for (auto n : order_set(spec))
    if (!regular_flag(R, int_image(R, static_cast<std::int64_t>(n)))) return n;
  return std::nullopt;
}

inline Verdict check_orders(Verdict v, const FiniteRing& R, const GroupSpec& spec) {
  if (auto n = irregular_order(R, spec))
    return fail(std::move(v), "order " + std::to_string(*n) + " in o(G) is not regular in R",
                {Witness::Kind::order_not_regular, {*n}, "n:" + std::to_string(*n)});
  v.trace.push_back("every n in o(G) is regular in R");
  v.value = Truth::yes;
  return v;
}

}  // namespace detail

inline Verdict classify_reduced(const FiniteRing& R, const GroupSpec& spec) {
  Verdict v;
  v.clauses = {"reduced.order_regular"};
  if (auto x = first_nonzero_nilpotent(R))
    return detail::fail(std::move(v), "R is not reduced",
                        detail::element_witness(R, Witness::Kind::nilpotent_element, *x, "x"));
  v.trace.push_back("R is reduced");
  return detail::check_orders(std::move(v), R, spec);
}

inline Verdict classify_domain(const FiniteRing& R, const GroupSpec& spec) {
  Verdict v;
  v.clauses = {"domain.torsion_free"};
  for (index_t x = 1; x < R.size(); ++x)
    if (!regular_flag(R, x))
      return detail::fail(std::move(v), "R is not an integral domain",
                          detail::element_witness(R, Witness::Kind::zero_divisor, x, "x"));
  v.trace.push_back("R is an integral domain");
  if (!is_torsion_free(spec)) {
    auto n = spec.torsion_invariants.front();
    return detail::fail(std::move(v), "G has torsion",
                        {Witness::Kind::torsion_order, {n}, "C" + std::to_string(n)});
  }
  v.trace.push_back("G is torsion-free");
  v.value = Truth::yes;
  return v;
}

inline Verdict classify_indecomposable(const FiniteRing& R, const GroupSpec& spec) {
  Verdict v;
  v.clauses = {"indecomposable.sing_trivial"};
  for (index_t e : idempotents(R))
    if (e != R.zero() && e != R.one())
      return detail::fail(std::move(v), "R has a nontrivial idempotent",
                          detail::element_witness(R, Witness::Kind::nontrivial_idempotent, e, "e"));
  v.trace.push_back("R is indecomposable");
  for (auto p : supp(spec))
    if (regular_flag(R, int_image(R, static_cast<std::int64_t>(p))))
      return detail::fail(std::move(v), "p=" + std::to_string(p) + " is a unit of R, so Sing_R(G) is nontrivial",
                          {Witness::Kind::unit_prime, {p}, "p:" + std::to_string(p)});
  v.trace.push_back("Sing_R(G) is trivial");
  v.value = Truth::yes;
  return v;
}

inline Verdict classify_complemented(const FiniteRing& R, const GroupSpec& spec) {
  Verdict v;
  if (is_torsion(spec)) {
    v.clauses = {"complemented.torsion"};
    v.trace.push_back("G is torsion");
    if (auto x = first_uncomplemented(R, false))
      return detail::fail(std::move(v), "R is not complemented",
                          detail::element_witness(R, Witness::Kind::uncomplemented_element, *x, "x"));
    v.trace.push_back("R is complemented");
  } else {
    v.clauses = {"complemented.non_torsion", "min_spectrum.finite_compact"};
    v.trace.push_back("G is not torsion");
    if (auto x = first_nonzero_nilpotent(R))
      return detail::fail(std::move(v), "R is not reduced",
                          detail::element_witness(R, Witness::Kind::nilpotent_element, *x, "x"));
    v.trace.push_back("R is reduced");
    v.trace.push_back("Min(R) is finite, hence compact");
  }
  return detail::check_orders(std::move(v), R, spec);
}

inline Verdict classify_property_D(const FiniteRing& R, const GroupSpec& spec) {
  Verdict v;
  v.clauses = {is_torsion_free(spec) ? "property_D.torsion_free" : "property_D.p_group"};
  if (auto x = first_mixed_element(R))
    return detail::fail(std::move(v), "R lacks Property D",
                        detail::element_witness(R, Witness::Kind::mixed_element, *x, "x"));
  v.trace.push_back("R has Property D");
  if (is_torsion_free(spec)) {
    v.trace.push_back("G is torsion-free");
    v.value = Truth::yes;
    return v;
  }
  auto primes = supp(spec);
  if (primes.size() >= 2) {
    v.clauses.push_back("property_D.mixed_primes");
    auto it = primes.begin();
    std::uint64_t p = *it++, q = *it;
    return detail::fail(std::move(v), "t(G) is not a p-group",
                        {Witness::Kind::mixed_primes, {p, q}, "p:" + std::to_string(p) + ",q:" + std::to_string(q)});
  }
  std::uint64_t p = *primes.begin();
  v.trace.push_back("t(G) is a nontrivial " + std::to_string(p) + "-group");
  if (!is_nilpotent(R, int_image(R, static_cast<std::int64_t>(p))))
    return detail::fail(std::move(v), "p=" + std::to_string(p) + " is not nilpotent in R",
                        {Witness::Kind::prime_not_nilpotent, {p}, "p:" + std::to_string(p)});
  v.trace.push_back("p=" + std::to_string(p) + " is nilpotent in R");
  v.value = Truth::yes;
  return v;
}

inline Verdict classify_semi_complemented(const FiniteRing& R, const GroupSpec& spec) {
  Verdict c = classify_complemented(R, spec);
  Verdict d = classify_property_D(R, spec);
  Verdict v;
  v.clauses = {"semi.dichotomy"};
  v.clauses.insert(v.clauses.end(), c.clauses.begin(), c.clauses.end());
  v.clauses.insert(v.clauses.end(), d.clauses.begin(), d.clauses.end());
  bool cy = c.value == Truth::yes, dy = d.value == Truth::yes;
  if (cy && dy) v.via = "complemented,property_D";
  else if (cy) v.via = "complemented";
  else if (dy) v.via = "property_D";
  if (!v.via.empty()) {
    v.value = Truth::yes;
    v.trace.push_back("holds via " + v.via);
    return v;
  }
  v.trace.push_back("not complemented: " + c.failed);
  v.trace.push_back("no Property D: " + d.failed);
  return detail::fail(std::move(v), "neither complemented nor Property D", *c.witness);
}

inline Verdict classify(Question q, const FiniteRing& R, const GroupSpec& spec) {
  switch (q) {
    case Question::reduced: return classify_reduced(R, spec);
    case Question::domain: return classify_domain(R, spec);
    case Question::indecomposable: return classify_indecomposable(R, spec);
    case Question::complemented: return classify_complemented(R, spec);
    case Question::property_D: return classify_property_D(R, spec);
    case Question::semi_complemented: return classify_semi_complemented(R, spec);
  }
  throw precondition_error("unknown question");
}

inline Classification classify_all(const FiniteRing& R, const GroupSpec& spec) {
  validate(spec);
  Classification out{R.name(), spec, {}};
  for (Question q : all_questions) out.verdicts.emplace(q, classify(q, R, spec));
  auto yes = [&](Question q) { return out.at(q).value == Truth::yes; };
  if ((yes(Question::domain) && !(yes(Question::reduced) && yes(Question::indecomposable))) ||
      (yes(Question::complemented) && !yes(Question::reduced)) ||
      (yes(Question::semi_complemented) != (yes(Question::complemented) || yes(Question::property_D))))
    throw invariant_violation("inconsistent classification for " + R.name() + " and " + to_string(spec));
  return out;
}

}  // namespace gring

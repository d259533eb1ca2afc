#pragma once

// Command implementations behind the `gring` executable. Each run_* writes
// its report to `out` and returns the process exit code:
//   0 success / agreement, 1 verified disagreement, 2 parse error,
//   3 resource limit.

#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gring/catalog.hpp"
#include "gring/classifier.hpp"
#include "gring/element_expr.hpp"
#include "gring/error.hpp"
#include "gring/finite_ring.hpp"
#include "gring/group.hpp"
#include "gring/group_ring.hpp"
#include "gring/laurent.hpp"
#include "gring/parallel.hpp"
#include "gring/ring_props.hpp"
#include "gring/verify.hpp"

namespace gring::cli {

enum ExitCode : int { exit_ok = 0, exit_disagreement = 1, exit_parse = 2, exit_limit = 3 };

struct Command {
  std::string verb;  // classify | verify | nilradical | catalog | witness
  std::string ring;
  std::string group = "1";
  std::string element;
  std::uint64_t limit = default_enumeration_limit;
  std::size_t window = default_laurent_window;
  bool machine = false;
  bool list_elements = false;
};

// Enumeration limit from GRING_LIMIT, else the built-in default.
inline std::uint64_t default_limit_from_env() {
  if (const char* env = std::getenv("GRING_LIMIT")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return default_enumeration_limit;
}

// One key=value record per line.
class ReportLine {
 public:
  ReportLine& add(std::string key, std::string value) {
    fields_.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  std::string str() const {
    std::string out;
    for (const auto& [k, v] : fields_) {
      if (!out.empty()) out += ' ';
      out += k + "=" + (v.empty() ? "-" : v);
    }
    return out;
  }

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

inline std::pair<RingSpec, GroupSpec> parse_specs(const std::string& ring_text, const std::string& group_text) {
  return {parse_ring_spec(ring_text), parse_group_spec(group_text)};
}

inline std::string no_spaces(std::string s) {
  std::string out;
  for (char c : s)
    if (c != ' ') out += c;
  return out;
}

inline std::string pair_id(const FiniteRing& R, const GroupSpec& G) {
  return (R.spec() ? to_string(*R.spec(), true) : no_spaces(R.name())) + "|" + to_string(G, true);
}

inline std::string join(const std::vector<std::string>& parts, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

inline std::string agree_text(const QuestionReport& row) {
  if (!row.compared()) return "n/a";
  return row.agree() ? "yes" : "no";
}

inline void print_verdict(std::ostream& out, Question q, const Verdict& v) {
  out << "  " << std::left << std::setw(18) << question_name(q) << " = " << std::setw(6) << truth_name(v.value);
  if (!v.via.empty()) out << " via " << v.via;
  if (v.value == Truth::no) out << " (" << v.failed << "; witness " << v.witness->text << ")";
  out << "  [" << join(v.clauses) << "]\n";
  for (const auto& step : v.trace) out << "      - " << step << "\n";
}

inline int run_classify(const Command& cmd, std::ostream& out) {
  auto [rspec, gspec] = parse_specs(cmd.ring, cmd.group);
  FiniteRing R = build_ring(rspec, cmd.limit);
  Classification c = classify_all(R, gspec);
  const std::string id = pair_id(R, gspec);
  if (!cmd.machine) out << "ring " << R.name() << ", group " << to_string(gspec) << "\n";
  for (Question q : all_questions) {
    const Verdict& v = c.at(q);
    if (cmd.machine) {
      out << ReportLine()
                 .add("pair", id)
                 .add("question", std::string(question_name(q)))
                 .add("verdict", std::string(truth_name(v.value)))
                 .add("via", v.via)
                 .add("clauses", join(v.clauses))
                 .add("witness", v.witness ? v.witness->text : "")
                 .str()
          << "\n";
    } else {
      print_verdict(out, q, v);
    }
  }
  return exit_ok;
}

inline void print_pair(std::ostream& out, const PairReport& report, const std::string& id, bool machine) {
  for (const auto& row : report.rows) {
    if (machine) {
      out << ReportLine()
                 .add("pair", id)
                 .add("question", std::string(question_name(row.question)))
                 .add("theorem", std::string(truth_name(row.verdict.value)))
                 .add("oracle", std::string(truth_name(row.oracle)))
                 .add("agree", agree_text(row))
                 .add("witness", row.verdict.witness ? row.verdict.witness->text : "")
                 .add("oracle_witness", row.counterexample_text)
                 .str()
          << "\n";
    } else {
      out << "  " << std::left << std::setw(18) << question_name(row.question) << " theorem=" << std::setw(6)
          << truth_name(row.verdict.value) << " oracle=" << std::setw(6) << truth_name(row.oracle)
          << " agree=" << agree_text(row);
      if (row.verdict.witness) out << "  witness " << row.verdict.witness->text;
      if (!row.counterexample_text.empty()) out << "  RG counterexample " << row.counterexample_text;
      out << "\n";
    }
  }
}

inline int run_verify(const Command& cmd, std::ostream& out) {
  auto [rspec, gspec] = parse_specs(cmd.ring, cmd.group);
  FiniteRing R = build_ring(rspec, cmd.limit);
  PairReport report = compare_pair(R, gspec, cmd.limit, true);
  if (!cmd.machine)
    out << "ring " << R.name() << ", group " << to_string(gspec) << ", |RG| = " << *report.group_ring_size << "\n";
  print_pair(out, report, pair_id(R, gspec), cmd.machine);
  bool ok = report.all_agree();
  if (!cmd.machine) out << (ok ? "all questions agree\n" : "DISAGREEMENT between theorem and brute force\n");
  return ok ? exit_ok : exit_disagreement;
}

inline int run_nilradical(const Command& cmd, std::ostream& out) {
  auto [rspec, gspec] = parse_specs(cmd.ring, cmd.group);
  FiniteRing R = build_ring(rspec, cmd.limit);
  GroupRing rg(R, build_group(gspec, cmd.limit), cmd.limit);
  const FiniteRing& RG = rg.materialized();
  IdealSet formula = nilradical_formula(rg);
  IdealSet brute = nilradical(RG);
  bool equal = formula == brute;
  const std::string id = pair_id(R, gspec);
  if (cmd.machine) {
    out << ReportLine()
               .add("pair", id)
               .add("formula_size", std::to_string(formula.size()))
               .add("bruteforce_size", std::to_string(brute.size()))
               .add("equal", equal ? "yes" : "no")
               .str()
        << "\n";
  } else {
    out << "nilradical of " << rg.name() << "\n"
        << "  formula set size     " << formula.size() << "\n"
        << "  brute-force set size " << brute.size() << "\n"
        << "  equal                " << (equal ? "yes" : "no") << "\n";
  }
  if (cmd.list_elements || brute.size() <= 64) {
    const IdealSet& shown = equal ? brute : formula;
    for (index_t x : shown.members) {
      if (cmd.machine) out << ReportLine().add("pair", id).add("element", RG.format(x)).str() << "\n";
      else out << "    " << RG.format(x) << "\n";
    }
    if (!equal) {
      for (index_t x : brute.members) {
        if (formula.contains(x)) continue;
        if (cmd.machine) out << ReportLine().add("pair", id).add("missing_from_formula", RG.format(x)).str() << "\n";
        else out << "    missing from formula: " << RG.format(x) << "\n";
      }
    }
  }
  return equal ? exit_ok : exit_disagreement;
}

inline int run_catalog(const Command& cmd, std::ostream& out) {
  auto rings = catalog::rings();
  auto groups = catalog::all_groups();
  struct Cell {
    std::size_t ring, group;
  };
  std::vector<Cell> cells;
  for (std::size_t r = 0; r < rings.size(); ++r)
    for (std::size_t g = 0; g < groups.size(); ++g) cells.push_back({r, g});
  std::vector<std::string> blocks(cells.size());
  std::vector<char> agree(cells.size(), 1);
  parallel_for(
      cells.size(),
      [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
          const auto& R = rings[cells[i].ring];
          const auto& G = groups[cells[i].group];
          PairReport report = compare_pair(R, G, cmd.limit);
          std::ostringstream os;
          if (!cmd.machine) {
            os << R.name() << " over " << to_string(G);
            if (report.group_ring_size) os << " (|RG| = " << *report.group_ring_size << ")";
            if (!report.materialized) os << " [theorem only]";
            os << "\n";
          }
          print_pair(os, report, pair_id(R, G), cmd.machine);
          blocks[i] = os.str();
          agree[i] = report.all_agree();
        }
      },
      1);
  bool ok = true;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    out << blocks[i];
    ok = ok && agree[i];
  }
  if (!cmd.machine)
    out << rings.size() << " rings x " << groups.size() << " groups: "
        << (ok ? "all compared questions agree" : "DISAGREEMENTS found") << "\n";
  return ok ? exit_ok : exit_disagreement;
}

inline int run_witness(const Command& cmd, std::ostream& out) {
  auto [rspec, gspec] = parse_specs(cmd.ring, cmd.group);
  FiniteRing R = build_ring(rspec, cmd.limit);
  if (cmd.element.empty()) throw parse_error(cmd.element, 0, "element expression (--element)");

  if (gspec.free_rank == 1 && gspec.torsion_invariants.empty()) {
    LaurentElement alpha = parse_laurent(R, cmd.element);
    ReportLine line;
    line.add("element", format(R, alpha));
    if (alpha.is_zero()) {
      line.add("zero_divisor", "yes").add("mccoy_scalar", "n/a");
      out << line.str() << "\n";
      return exit_ok;
    }
    auto r = mccoy_scalar_witness(R, alpha);
    auto beta = find_laurent_annihilator(R, alpha, cmd.window, cmd.limit);
    line.add("mccoy_scalar", r ? R.format(*r) : "absent");
    line.add("window", std::to_string(cmd.window));
    line.add("window_annihilator", beta ? format(R, *beta) : "absent");
    bool consistent = r.has_value() || !beta.has_value();
    line.add("verified", consistent ? "yes" : "no");
    out << line.str() << "\n";
    return consistent ? exit_ok : exit_disagreement;
  }

  GroupRing rg(R, build_group(gspec, cmd.limit), cmd.limit);
  const FiniteRing& RG = rg.materialized();
  index_t x = rg.encode(parse_element(rg, cmd.element));
  bool unit = regular_flag(RG, x);
  bool nil = nilpotent_flag(RG, x);
  auto y = complement_witness(RG, x);
  bool verified = !y || (RG.mul(x, *y) == RG.zero() && regular_flag(RG, RG.add(x, *y)));
  ReportLine line;
  line.add("element", RG.format(x))
      .add("unit", unit ? "yes" : "no")
      .add("nilpotent", nil ? "yes" : "no")
      .add("regular", unit ? "yes" : "no")
      .add("complement", y ? RG.format(*y) : "absent")
      .add("verified", verified ? "yes" : "no");
  if (cmd.machine) {
    out << line.str() << "\n";
  } else {
    out << "element   " << RG.format(x) << " in " << rg.name() << "\n"
        << "  unit      " << (unit ? "yes" : "no") << "\n"
        << "  nilpotent " << (nil ? "yes" : "no") << "\n"
        << "  regular   " << (unit ? "yes" : "no") << "\n";
    if (y)
      out << "  complement " << RG.format(*y) << " (x*y = 0, x+y = " << RG.format(RG.add(x, *y))
          << " regular; re-verified " << (verified ? "yes" : "no") << ")\n";
    else
      out << "  complement absent (exhaustive scan of " << RG.size() << " elements)\n";
  }
  return verified ? exit_ok : exit_disagreement;
}

// Dispatches a command and maps library exceptions to exit codes.
inline int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  try {
    if (cmd.limit == 0) throw spec_error("limit must be positive");
    if (cmd.verb != "catalog" && cmd.ring.empty()) throw parse_error(cmd.ring, 0, "ring spec (--ring)");
    if (cmd.verb == "classify") return run_classify(cmd, out);
    if (cmd.verb == "verify") return run_verify(cmd, out);
    if (cmd.verb == "nilradical") return run_nilradical(cmd, out);
    if (cmd.verb == "catalog") return run_catalog(cmd, out);
    if (cmd.verb == "witness") return run_witness(cmd, out);
    err << "unknown command '" << cmd.verb << "'\n";
    return exit_parse;
  } catch (const limit_error& e) {
    err << "limit: " << e.what() << "\n";
    return exit_limit;
  } catch (const invariant_violation& e) {
    err << "internal check failed: " << e.what() << "\n";
    return exit_disagreement;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return exit_parse;
  }
}

}  // namespace gring::cli

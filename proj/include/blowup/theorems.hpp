#pragma once

#include "blowup/invariants.hpp"

namespace blowup {

enum class Verdict {
  HYPOTHESES_NOT_MET,
  BOUND_HOLDS,
  EQUALITY,
  VIOLATION,
  SKIPPED_UNRESOLVED,
};

std::string verdict_name(Verdict v);
std::optional<Verdict> verdict_from_name(const std::string& s);

// One checker per bundled statement. Hypotheses are listed explicitly and a
// failed hypothesis yields HYPOTHESES_NOT_MET, never a silent default. A
// VIOLATION on a hypotheses-met instance indicts the kernel, so callers
// treat it as fatal.
struct TheoremReport {
  std::string id;
  std::vector<std::pair<std::string, bool>> hypotheses;
  bool t_infinite = false;       // empty minimum at reduction number 0
  std::optional<int> t;
  std::optional<int> bound;
  std::optional<int> actual;
  Verdict verdict = Verdict::HYPOTHESES_NOT_MET;
  std::string notes;

  bool operator==(const TheoremReport&) const = default;
};

TheoremReport check_equi_grade_g(const AnalyzedInstance& a);    // thm-1.1a
TheoremReport check_equi_grade_g1(const AnalyzedInstance& a);   // thm-1.1b
TheoremReport check_upper_bound(const AnalyzedInstance& a);     // rem-1.2
TheoremReport check_r2_formula(const AnalyzedInstance& a);      // cor-1.3
TheoremReport check_dev_one(const AnalyzedInstance& a);         // thm-1.5
TheoremReport check_equi_two(const AnalyzedInstance& a);        // prop-1.8
TheoremReport check_dev_one_pair(const AnalyzedInstance& a);    // rem-1.9
TheoremReport check_reg_bound(const AnalyzedInstance& a);       // thm-2.5
TheoremReport check_power_products(const AnalyzedInstance& a);  // lem-2.2
TheoremReport check_graded_pieces(const AnalyzedInstance& a);   // lem-2.3

// All checkers in a fixed order; inapplicable statements come back as
// HYPOTHESES_NOT_MET.
std::vector<TheoremReport> check_all(const AnalyzedInstance& a);
// A single checker by its statement id, or nullopt for an unknown id.
std::optional<TheoremReport> check_by_id(const std::string& id,
                                         const AnalyzedInstance& a);
std::vector<std::string> known_statement_ids();

}  // namespace blowup

#include "blowup/theorems.hpp"

#include <algorithm>
#include <sstream>

#include "blowup/errors.hpp"

namespace blowup {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::HYPOTHESES_NOT_MET: return "HYPOTHESES_NOT_MET";
    case Verdict::BOUND_HOLDS: return "BOUND_HOLDS";
    case Verdict::EQUALITY: return "EQUALITY";
    case Verdict::VIOLATION: return "VIOLATION";
    case Verdict::SKIPPED_UNRESOLVED: return "SKIPPED_UNRESOLVED";
  }
  return "?";
}

std::optional<Verdict> verdict_from_name(const std::string& s) {
  for (Verdict v : {Verdict::HYPOTHESES_NOT_MET, Verdict::BOUND_HOLDS,
                    Verdict::EQUALITY, Verdict::VIOLATION,
                    Verdict::SKIPPED_UNRESOLVED}) {
    if (verdict_name(v) == s) return v;
  }
  return std::nullopt;
}

namespace {

struct TVal {
  bool infinite = false;
  int value = 0;
};

// t = min { depth R/I^j - r + j | 1 <= j <= r }; infinite for r = 0
TVal t_of(const InvariantReport& rep) {
  const int r = rep.reduction.r_j;
  if (r == 0) return {true, 0};
  TVal t{false, 0};
  bool first = true;
  for (int j = 1; j <= r; ++j) {
    int v = rep.depths.at(j) - r + j;
    if (first || v < t.value) t.value = v;
    first = false;
  }
  return t;
}

void set_t(TheoremReport& tr, const TVal& t) {
  tr.t_infinite = t.infinite;
  if (!t.infinite) tr.t = t.value;
}

// floor(t) clauses: max{floor, t} with the empty-minimum convention that an
// infinite t degrades to the floor
int clamp_with_floor(const TVal& t, int floor) {
  return t.infinite ? floor : std::max(floor, t.value);
}

Verdict lower_bound_verdict(int bound, int actual) {
  if (actual < bound) return Verdict::VIOLATION;
  if (actual == bound) return Verdict::EQUALITY;
  return Verdict::BOUND_HOLDS;
}

bool all_hold(const TheoremReport& tr) {
  for (const auto& [name, ok] : tr.hypotheses) {
    if (!ok) return false;
  }
  return true;
}

bool exact_r(const InvariantReport& rep) { return rep.reduction.verified; }

}  // namespace

TheoremReport check_equi_grade_g(const AnalyzedInstance& a) {
  const InvariantReport& rep = a.report;
  TheoremReport tr;
  tr.id = "thm-1.1a";
  bool g_ok = rep.height.has_value();
  int g = rep.height.value_or(-1);
  tr.hypotheses = {
      {"base_ring_CM", rep.is_CM},
      {"equimultiple", g_ok && rep.is_equimultiple},
      {"reduction_verified", exact_r(rep)},
      {"grade_Gplus_equals_height", g_ok && rep.grade_Gplus == g},
  };
  if (!all_hold(tr)) return tr;
  TVal t = t_of(rep);
  set_t(tr, t);
  tr.bound = g + clamp_with_floor(t, 0);
  tr.actual = rep.depth_G;
  tr.verdict = lower_bound_verdict(*tr.bound, *tr.actual);
  return tr;
}

TheoremReport check_equi_grade_g1(const AnalyzedInstance& a) {
  const InvariantReport& rep = a.report;
  TheoremReport tr;
  tr.id = "thm-1.1b";
  bool g_ok = rep.height.has_value();
  int g = rep.height.value_or(-1);
  tr.hypotheses = {
      {"base_ring_CM", rep.is_CM},
      {"equimultiple", g_ok && rep.is_equimultiple},
      {"reduction_verified", exact_r(rep)},
      {"grade_Gplus_equals_height_minus_1", g_ok && rep.grade_Gplus == g - 1},
  };
  if (!all_hold(tr)) return tr;
  TVal t = t_of(rep);
  set_t(tr, t);
  tr.bound = g + clamp_with_floor(t, -1);
  tr.actual = rep.depth_G;
  tr.verdict = lower_bound_verdict(*tr.bound, *tr.actual);
  return tr;
}

TheoremReport check_upper_bound(const AnalyzedInstance& a) {
  const InvariantReport& rep = a.report;
  TheoremReport tr;
  tr.id = "rem-1.2";
  tr.hypotheses = {{"depth_window_nonempty", !rep.depths.empty()}};
  if (!all_hold(tr)) return tr;
  int m = rep.depths.begin()->second;
  for (const auto& [j, d] : rep.depths) m = std::min(m, d);
  tr.bound = m + rep.spread;
  tr.actual = rep.depth_G;
  std::ostringstream os;
  os << "infimum truncated at j = " << rep.depth_window;
  tr.notes = os.str();
  if (*tr.actual > *tr.bound) {
    tr.verdict = Verdict::VIOLATION;
  } else if (*tr.actual == *tr.bound) {
    tr.verdict = Verdict::EQUALITY;
  } else {
    tr.verdict = Verdict::BOUND_HOLDS;
  }
  return tr;
}

TheoremReport check_r2_formula(const AnalyzedInstance& a) {
  const InvariantReport& rep = a.report;
  TheoremReport tr;
  tr.id = "cor-1.3";
  bool g_ok = rep.height.has_value();
  int g = rep.height.value_or(-1);
  bool depths_ok = rep.depths.count(1) && rep.depths.count(2);
  tr.hypotheses = {
      {"base_ring_CM", rep.is_CM},
      {"equimultiple", g_ok && rep.is_equimultiple},
      {"reduction_number_two", exact_r(rep) && rep.reduction.r_j == 2},
      {"depth_drop_at_square",
       depths_ok && rep.depths.at(2) < rep.depths.at(1)},
      {"grade_Gplus_in_range",
       g_ok && (rep.grade_Gplus == g || rep.grade_Gplus == g - 1)},
  };
  if (!all_hold(tr)) return tr;
  tr.bound = g + rep.depths.at(2);
  tr.actual = rep.depth_G;
  tr.verdict =
      (*tr.bound == *tr.actual) ? Verdict::EQUALITY : Verdict::VIOLATION;
  return tr;
}

TheoremReport check_dev_one(const AnalyzedInstance& a) {
  const InvariantReport& rep = a.report;
  TheoremReport tr;
  tr.id = "thm-1.5";
  bool g_ok = rep.height.has_value();
  int g = rep.height.value_or(-1);
  tr.hypotheses = {
      {"base_ring_CM", rep.is_CM},
      {"analytic_deviation_one", g_ok && rep.deviation == 1},
      {"reduction_verified", exact_r(rep)},
      {"grade_Gplus_equals_height", g_ok && rep.grade_Gplus == g},
      {"localization_asserted", a.options.localization_asserted},
  };
  tr.notes =
      "localization hypothesis is user-asserted, not computed "
      "(primary decomposition is out of scope)";
  if (!all_hold(tr)) return tr;
  TVal t = t_of(rep);
  set_t(tr, t);
  tr.bound = g + 1 + clamp_with_floor(t, -1);
  tr.actual = rep.depth_G;
  tr.verdict = lower_bound_verdict(*tr.bound, *tr.actual);
  return tr;
}

namespace {

// shared body of the two-generator statements: conclusions
//   depth R/I^j >= min{depth R/I^r - 1, depth R/I^{r+1}}  (j = r+1..r+3)
//   depth G >= min({depth R/I^j | j <= r-1} u {depth R/I^r - 1,
//                   depth R/I^{r+1}})
void two_generator_conclusions(const AnalyzedInstance& a, TheoremReport& tr) {
  const InvariantReport& rep = a.report;
  const int r = rep.reduction.r_j;
  if (a.options.max_power && r + 3 > *a.options.max_power) {
    tr.verdict = Verdict::HYPOTHESES_NOT_MET;
    tr.notes += "; max-power cap below the conclusion window";
    return;
  }
  const int floor_val =
      std::min(depth_of_power(a, r) - 1, depth_of_power(a, r + 1));
  bool power_ok = true;
  for (int j = r + 1; j <= r + 3; ++j) {
    if (depth_of_power(a, j) < floor_val) power_ok = false;
  }
  int bound = floor_val;
  for (int j = 1; j <= r - 1; ++j)
    bound = std::min(bound, depth_of_power(a, j));
  tr.bound = bound;
  tr.actual = rep.depth_G;
  if (!power_ok) {
    tr.verdict = Verdict::VIOLATION;
    tr.notes += "; power-depth conclusion failed";
    return;
  }
  tr.verdict = lower_bound_verdict(*tr.bound, *tr.actual);
}

}  // namespace

TheoremReport check_equi_two(const AnalyzedInstance& a) {
  const InvariantReport& rep = a.report;
  TheoremReport tr;
  tr.id = "prop-1.8";
  bool g_ok = rep.height.has_value();
  bool two_gen = rep.reduction.s() == 2 && exact_r(rep);
  bool colon_eq = false;
  if (two_gen) {
    const int r = rep.reduction.r_j;
    Ideal c1 = ideal_colon(a.powers->lifted(r), rep.reduction.j_gens[0]);
    Ideal c2 = ideal_colon(a.powers->lifted(r), rep.reduction.j_gens[1]);
    colon_eq = ideal_equal(c1, c2);
  }
  tr.hypotheses = {
      {"height_two", g_ok && rep.height == 2},
      {"equimultiple", g_ok && rep.is_equimultiple},
      {"two_generated_reduction", two_gen},
      {"reduction_number_positive", two_gen && rep.reduction.r_j >= 1},
      {"colon_symmetry", colon_eq},
  };
  if (!all_hold(tr)) return tr;
  two_generator_conclusions(a, tr);
  return tr;
}

TheoremReport check_dev_one_pair(const AnalyzedInstance& a) {
  const InvariantReport& rep = a.report;
  TheoremReport tr;
  tr.id = "rem-1.9";
  bool g_ok = rep.height.has_value();
  bool two_gen = rep.reduction.s() == 2 && exact_r(rep);
  bool colon_eq = false;
  bool sat_ok = false;
  if (two_gen) {
    const int r = rep.reduction.r_j;
    const Polynomial& a1 = rep.reduction.j_gens[0];
    const Polynomial& a2 = rep.reduction.j_gens[1];
    Ideal c1 = ideal_colon(a.powers->lifted(r), a1);
    Ideal c2 = ideal_colon(a.powers->lifted(r), a2);
    colon_eq = ideal_equal(c1, c2);
    const RingPtr S = a.ideal.ring();
    Ideal a1_l = a.base.lift(Ideal(S, {a1}));
    Ideal sat = ideal_saturate(a1_l, a2);
    Ideal meet = ideal_intersect(sat, a.powers->lifted(r));
    sat_ok = ideal_contains(a1_l, meet);
  }
  tr.hypotheses = {
      {"height_one", g_ok && rep.height == 1},
      {"analytic_deviation_one", g_ok && rep.deviation == 1},
      {"two_generated_reduction", two_gen},
      {"reduction_number_positive", two_gen && rep.reduction.r_j >= 1},
      {"colon_symmetry", colon_eq},
      {"saturation_inclusion", sat_ok},
  };
  if (!all_hold(tr)) return tr;
  two_generator_conclusions(a, tr);
  return tr;
}

TheoremReport check_reg_bound(const AnalyzedInstance& a) {
  const InvariantReport& rep = a.report;
  TheoremReport tr;
  tr.id = "thm-2.5";
  tr.hypotheses = {
      {"base_ring_CM", rep.is_CM},
      {"reduction_verified", exact_r(rep)},
      {"regularity_exact", rep.regularity.status == RegStatus::exact},
  };
  if (rep.regularity.status != RegStatus::exact) {
    tr.verdict = Verdict::SKIPPED_UNRESOLVED;
    tr.notes = "regularity is only a lower bound (" +
               std::to_string(rep.regularity.value) +
               "); the stated minimum cannot be instantiated soundly";
    return tr;
  }
  if (!all_hold(tr)) return tr;
  const int reg = rep.regularity.value;
  const int s = rep.reduction.s();
  if (!rep.depths.count(std::max(1, s + reg))) {
    tr.verdict = Verdict::HYPOTHESES_NOT_MET;
    tr.notes = "depth window shorter than s + reg";
    return tr;
  }
  int rhs = rep.depths.at(1);
  for (int j = 1; j <= reg + 1 && rep.depths.count(j); ++j)
    rhs = std::min(rhs, rep.depths.at(j));
  for (int j = reg + 2; j <= s + reg; ++j)
    rhs = std::min(rhs, rep.depths.at(j) + j - reg);
  tr.bound = rhs;
  tr.actual = rep.depth_G;
  tr.verdict = lower_bound_verdict(*tr.bound, *tr.actual);
  return tr;
}

namespace {
// the graded model can only resolve quotients by homogeneous data; a basis
// drawn as random combinations of mixed-degree generators falls outside it
bool homogeneous_basis(const FilterRegularResult& fr) {
  if (!fr.found_basis) return false;
  for (const auto& g : fr.basis) {
    if (!g.weighted_degree().homogeneous) return false;
  }
  return true;
}
}  // namespace

TheoremReport check_power_products(const AnalyzedInstance& a) {
  const InvariantReport& rep = a.report;
  TheoremReport tr;
  tr.id = "lem-2.2";
  tr.hypotheses = {
      {"base_ring_CM", rep.is_CM},
      {"reduction_verified", exact_r(rep)},
      {"regularity_exact", rep.regularity.status == RegStatus::exact},
      {"intersection_basis_found",
       rep.filter_regular.found_basis && rep.filter_regular.cond_intersection},
      {"homogeneous_basis", homogeneous_basis(rep.filter_regular)},
  };
  if (!all_hold(tr)) return tr;
  const int reg = rep.regularity.value;
  const int s = rep.reduction.s();
  const int d = rep.dim_R;
  const RingPtr S = a.ideal.ring();
  int checked = 0;
  int worst_margin = INT32_MAX;
  std::pair<int, int> worst{0, 0};
  int worst_bound = 0, worst_actual = 0;
  for (int i = 0; i <= s; ++i) {
    std::vector<Polynomial> head;
    for (int k = 0; k < i; ++k)
      head.push_back(rep.filter_regular.basis[k]);
    for (int j = std::max(1, reg + i); j <= reg + s + 1; ++j) {
      if (a.options.max_power && j > *a.options.max_power) continue;
      Ideal prod = i == 0 ? Ideal::zero(S)
                          : ideal_product(Ideal(S, head), a.powers->raw(j));
      Ideal quotient_by = a.base.lift(prod);
      int depth;
      if (quotient_by.is_zero_ideal()) {
        depth = S->nvars();
      } else {
        depth = depth_of(ModuleMap::cyclic(S, quotient_by.groebner()));
      }
      int rhs = d - i;
      for (int n = 0; n <= i - 1; ++n)
        rhs = std::min(rhs, depth_of_power(a, j - n) - n);
      ++checked;
      if (depth - rhs < worst_margin) {
        worst_margin = depth - rhs;
        worst = {i, j};
        worst_bound = rhs;
        worst_actual = depth;
      }
    }
  }
  tr.bound = worst_bound;
  tr.actual = worst_actual;
  std::ostringstream os;
  os << checked << " product quotients checked; tightest at i=" << worst.first
     << " j=" << worst.second;
  tr.notes = os.str();
  tr.verdict = worst_margin < 0
                   ? Verdict::VIOLATION
                   : (worst_margin == 0 ? Verdict::EQUALITY
                                        : Verdict::BOUND_HOLDS);
  return tr;
}

TheoremReport check_graded_pieces(const AnalyzedInstance& a) {
  const InvariantReport& rep = a.report;
  TheoremReport tr;
  tr.id = "lem-2.3";
  tr.hypotheses = {
      {"base_ring_CM", rep.is_CM},
      {"reduction_verified", exact_r(rep)},
      {"regularity_exact", rep.regularity.status == RegStatus::exact},
      {"graded_basis_found",
       rep.filter_regular.found_basis && rep.filter_regular.cond_graded},
      {"homogeneous_basis", homogeneous_basis(rep.filter_regular)},
  };
  if (!all_hold(tr)) return tr;
  const int reg = rep.regularity.value;
  const int s = rep.reduction.s();
  const RingPtr S = a.ideal.ring();
  int checked = 0, skipped = 0;
  int worst_margin = INT32_MAX;
  int worst_bound = 0, worst_actual = 0;
  std::pair<int, int> worst{0, 0};
  for (int i = 0; i <= s; ++i) {
    std::vector<Polynomial> head;
    for (int k = 0; k < i; ++k)
      head.push_back(rep.filter_regular.basis[k]);
    for (int j = reg + i + 1; j <= reg + s + 1; ++j) {
      if (a.options.max_power && j + 1 > *a.options.max_power) continue;
      // [G/(a*_1..a*_i)]_j = I^j / (I^{j+1} + (a_1..a_i) I^{j-1})
      Ideal denom = a.powers->raw(j + 1);
      if (i > 0)
        denom = ideal_sum(denom,
                          ideal_product(Ideal(S, head), a.powers->raw(j - 1)));
      auto pres =
          subquotient_presentation(a.powers->lifted(j).groebner(),
                                   a.base.lift(denom));
      if (!pres) {
        ++skipped;
        continue;
      }
      int depth = depth_of(*pres);
      int rhs = depth_of_power(a, j - i) - i + 1;
      for (int n = j - i + 1; n <= j + 1; ++n)
        rhs = std::min(rhs, depth_of_power(a, n) + n - j - 1);
      ++checked;
      if (depth - rhs < worst_margin) {
        worst_margin = depth - rhs;
        worst = {i, j};
        worst_bound = rhs;
        worst_actual = depth;
      }
    }
  }
  std::ostringstream os;
  os << checked << " graded pieces checked, " << skipped
     << " zero pieces skipped";
  if (checked > 0) {
    os << "; tightest at i=" << worst.first << " j=" << worst.second;
    tr.bound = worst_bound;
    tr.actual = worst_actual;
    tr.verdict = worst_margin < 0
                     ? Verdict::VIOLATION
                     : (worst_margin == 0 ? Verdict::EQUALITY
                                          : Verdict::BOUND_HOLDS);
  } else {
    tr.verdict = Verdict::BOUND_HOLDS;
    os << "; vacuous";
  }
  tr.notes = os.str();
  return tr;
}

std::vector<TheoremReport> check_all(const AnalyzedInstance& a) {
  return {
      check_equi_grade_g(a),  check_equi_grade_g1(a), check_upper_bound(a),
      check_r2_formula(a),    check_dev_one(a),       check_equi_two(a),
      check_dev_one_pair(a),  check_reg_bound(a),     check_power_products(a),
      check_graded_pieces(a),
  };
}

std::vector<std::string> known_statement_ids() {
  return {"thm-1.1a", "thm-1.1b", "rem-1.2",  "cor-1.3", "thm-1.5",
          "prop-1.8", "rem-1.9",  "thm-2.5", "lem-2.2", "lem-2.3"};
}

std::optional<TheoremReport> check_by_id(const std::string& id,
                                         const AnalyzedInstance& a) {
  if (id == "thm-1.1a") return check_equi_grade_g(a);
  if (id == "thm-1.1b") return check_equi_grade_g1(a);
  if (id == "rem-1.2") return check_upper_bound(a);
  if (id == "cor-1.3") return check_r2_formula(a);
  if (id == "thm-1.5") return check_dev_one(a);
  if (id == "prop-1.8") return check_equi_two(a);
  if (id == "rem-1.9") return check_dev_one_pair(a);
  if (id == "thm-2.5") return check_reg_bound(a);
  if (id == "lem-2.2") return check_power_products(a);
  if (id == "lem-2.3") return check_graded_pieces(a);
  return std::nullopt;
}

}  // namespace blowup

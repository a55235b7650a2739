#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "blowup/blowup_algebra.hpp"

namespace blowup {

// Cached powers of an ideal of R, raw and lifted, shared across the
// invariant computations of one instance.
class PowersCache {
 public:
  PowersCache(QuotientRing base, Ideal ideal)
      : base_(std::move(base)), ideal_(std::move(ideal)) {}
  const QuotientRing& base() const { return base_; }
  const Ideal& ideal() const { return ideal_; }
  const Ideal& raw(int j);     // I^j
  const Ideal& lifted(int j);  // I^j + K

 private:
  QuotientRing base_;
  Ideal ideal_;
  std::map<int, Ideal> raw_;
  std::map<int, Ideal> lifted_;
};

struct ReductionData {
  std::vector<Polynomial> j_gens;  // in the ambient ring
  // s x n coefficient rows over F_p when the generators are constant
  // combinations of the ideal generators; empty otherwise
  std::vector<std::vector<uint32_t>> coeff_matrix;
  bool user_supplied = false;
  bool verified = false;
  int r_j = -1;
  int trials = 0;
  std::string note;
  int s() const { return static_cast<int>(j_gens.size()); }
};

// Verified reduction of I: either checks a user-supplied J or draws s random
// F_p-combinations of the generators, retrying with fresh coefficients.
// r_J is the least j with I^(j+1) = J I^j in R, searched up to rmax.
ReductionData find_reduction(PowersCache& pc,
                             const std::vector<Polynomial>& igens, int s,
                             uint64_t seed, int rmax,
                             const std::optional<std::vector<Polynomial>>&
                                 user_j = std::nullopt);

enum class RegStatus { exact, lower_bound_only, unresolved };

struct RegularityResult {
  int value = 0;  // exact value, or the best lower bound otherwise
  RegStatus status = RegStatus::unresolved;
  int t_used = 0;
  std::string note;
  AInvariants detail;
};

// Castelnuovo-Mumford regularity of G from the a-invariant protocol, with
// the sanity window [r_J, resolution twist bound].
RegularityResult regularity_of(const BlowupPresentation& b,
                               const ModuleMap& g_pres, int r_j,
                               int twist_bound, int tmax = 12);

struct VVReport {
  std::map<int, bool> per_j;  // I^j cap (X) == X I^(j-1) in R
  std::optional<bool> element_regular_on_R;  // when X is a single element
  bool all_hold() const {
    for (const auto& [j, ok] : per_j) {
      if (!ok) return false;
    }
    return true;
  }
};

// Intersection criterion per power: I^j cap X = X I^(j-1) in R for
// j = 1..jmax, where X is an element or an ideal.
VVReport vv_condition(PowersCache& pc, const Ideal& x_ideal, int jmax,
                      const std::optional<Polynomial>& single = std::nullopt);

struct FilterRegularResult {
  bool attempted = false;
  bool found_basis = false;
  std::vector<Polynomial> basis;  // the passing ordered basis
  std::vector<int> order;  // permutation of the tried basis that passed
  int fresh_draws = 0;     // extra random bases drawn beyond the given one
  bool cond_intersection = false;  // colon-intersection condition
  bool cond_graded = false;        // graded colon condition in G
  bool cond_graded_checked = false;
  int window_lo = 0, window_hi = 0;
  int reg_standin = 0;
  std::vector<std::string> trace;
};

// Searches basis orderings of the reduction for the colon-intersection and
// graded filter-regularity conditions over j in [reg+1, reg+s+2]. Failure is
// a warning (trace retained), never fatal.
FilterRegularResult filter_regular_check(PowersCache& pc,
                                         const BlowupPresentation& b,
                                         const ReductionData& red,
                                         int reg_standin);

struct InvariantReport {
  std::string ring_desc;
  std::string ideal_desc;
  int dim_R = 0;
  int depth_R = 0;
  bool is_CM = false;
  std::optional<int> height;      // unavailable when R is not CM
  int spread = 0;                 // analytic spread
  std::optional<int> deviation;   // spread - height
  bool is_equimultiple = false;
  ReductionData reduction;
  std::map<int, int> depths;      // j -> depth R/I^j
  int depth_G = 0;
  int grade_Gplus = 0;
  RegularityResult regularity;
  int twist_bound = 0;
  int depth_window = 0;
  FilterRegularResult filter_regular;
  std::vector<std::string> notes;
};

struct InstanceOptions {
  uint64_t seed = 0;
  int rmax = 30;
  std::optional<int> max_power;  // cap on the depth-of-powers window
  int reg_tmax = 12;
  std::optional<std::vector<Polynomial>> user_j;
  std::optional<int> s_override;
  bool localization_asserted = false;
  bool run_filter_regular = true;
};

struct AnalyzedInstance {
  InvariantReport report;
  QuotientRing base;
  Ideal ideal;
  BlowupPresentation blowup;
  std::shared_ptr<PowersCache> powers;
  InstanceOptions options;
  // depth R/I^j cache shared with the checkers; seeded from report.depths
  std::shared_ptr<std::map<int, int>> depth_cache;
};

// depth R/I^j through the instance cache, computing on demand past the
// report window.
int depth_of_power(const AnalyzedInstance& a, int j);

// height of I in R = dim R - dim R/I, gated on R Cohen-Macaulay.
int height_of(const QuotientRing& base, const Ideal& ideal);

// Full invariant pipeline for one (R, I) instance.
AnalyzedInstance analyze_instance(QuotientRing base, Ideal ideal,
                                  InstanceOptions opt);

// Writes a in terms of the given generators modulo K: a = sum q_i g_i + k.
// Returns the q_i, or nullopt if a lies outside (gens) + K.
std::optional<std::vector<Polynomial>> express_in_gens(
    const Polynomial& a, const std::vector<Polynomial>& gens, const Ideal& k);

}  // namespace blowup

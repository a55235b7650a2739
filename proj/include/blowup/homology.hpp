#pragma once

#include <map>
#include <optional>
#include <vector>

#include "blowup/ideal.hpp"

namespace blowup {

// Degree in the (weight, second) bigrading. Plain rings use y == 0
// throughout.
struct Bidegree {
  int w = 0;
  int y = 0;
  bool operator==(const Bidegree&) const = default;
  Bidegree operator+(const Bidegree& o) const { return {w + o.w, y + o.y}; }
  Bidegree operator-(const Bidegree& o) const { return {w - o.w, y - o.y}; }
  auto operator<=>(const Bidegree&) const = default;
};

struct GradedFreeModule {
  RingPtr ring;
  std::vector<Bidegree> twists;
  int rank() const { return static_cast<int>(twists.size()); }
};

// Graded map between free modules, matrix convention mat[row][col] with rows
// indexed by the target basis. Entry (i, j) is homogeneous of bidegree
// source.twists[j] - target.twists[i] or zero.
class ModuleMap {
 public:
  GradedFreeModule source;
  GradedFreeModule target;
  std::vector<std::vector<Polynomial>> mat;

  static ModuleMap cyclic(RingPtr ring, const std::vector<Polynomial>& gens);
  static ModuleMap zero_into(GradedFreeModule target);
  // derive source twists from homogeneous columns
  static ModuleMap from_columns(GradedFreeModule target,
                                const std::vector<MVec>& cols);

  int source_rank() const { return source.rank(); }
  int target_rank() const { return target.rank(); }
  MVec column(int j) const;
  std::vector<std::vector<Polynomial>> columns() const;
  bool is_homogeneous() const;
  Bidegree bidegree_of(const MVec& v) const;  // w.r.t. target twists
};

// Bidegree of a module element against a twist vector; throws if the
// element is not bihomogeneous.
Bidegree element_bidegree(const MVec& v, const std::vector<Bidegree>& twists);

// Generators of ker(map) between free modules (a Groebner basis of the
// syzygy module of the columns).
std::vector<MVec> kernel_gens(const ModuleMap& m);
ModuleMap syzygy(const ModuleMap& m);

class FreeResolution {
 public:
  GradedFreeModule f0;
  std::vector<ModuleMap> maps;  // maps[k] : F_{k+1} -> F_k
  bool zero_module = false;

  int pd() const { return static_cast<int>(maps.size()); }
  int length() const { return pd(); }
  const GradedFreeModule& module(int k) const {
    return k == 0 ? f0 : maps[k - 1].source;
  }
  // homological degree -> twist -> rank
  std::map<int, std::map<Bidegree, int>> betti() const;
  void validate() const;  // d.d = 0, minimality, length bound
};

// Minimal graded free resolution of coker(pres): iterated syzygies with
// unit-entry pruning after every step.
FreeResolution free_resolution(const ModuleMap& pres);

// depth over the maximal graded ideal of the ambient polynomial ring,
// nvars - pd (Auslander-Buchsbaum). Throws zero_module_error for the zero
// module.
int depth_of(const ModuleMap& pres);

// Hilbert function of coker(pres) in weighted degree d, by standard
// monomial counting against a module Groebner basis of the column module.
long coker_piece_dim(const ModuleMap& pres, int d);

// Hom(Koszul(elems), M) with M = coker(pres). Cohomology is computed
// exactly at module level: kernels via syzygy computations, vanishing via
// membership of kernel generators in image + relations.
class KoszulCohomology {
 public:
  KoszulCohomology(std::vector<Polynomial> elems, ModuleMap pres);

  int nelems() const { return static_cast<int>(elems_.size()); }
  bool vanishes(int i) const;
  // least i with nonvanishing cohomology; requires coker != (elems)*coker
  int grade() const;
  // dimensions of the degree-d pieces of H^i for d in [wlo, whi]
  std::map<int, long> piece_dims(int i, int wlo, int whi) const;
  // top second-grading degree of H^i, exact; nullopt when H^i = 0.
  // exp_cap: multiples with any y-exponent >= exp_cap lie in the image
  // (elems = t-th powers kill the cohomology), bounding the search.
  std::optional<int> top_ydeg(int i, int exp_cap) const;

  const std::vector<Bidegree>& level_twists(int i) const;

 private:
  struct Level;
  const Level& level(int i) const;
  std::vector<Polynomial> elems_;
  ModuleMap pres_;
  RingPtr ring_;
  mutable std::vector<std::shared_ptr<Level>> levels_;
};

struct AInvariants {
  // i -> top degree of the i-th local cohomology; disengaged = -infinity
  std::map<int, std::optional<int>> a;
  std::map<int, bool> stabilized;
  // per i, the per-power candidate trace (nullopt = vanished at that power)
  std::map<int, std::vector<std::optional<int>>> trace;
  bool all_stabilized = false;
  int t_used = 0;
};

// Candidate a-invariants of the second grading for supports in the listed
// variables, via Koszul cohomology of (vars^t) with the colimit twist
// normalization; a candidate is accepted once unchanged for `stable_runs`
// consecutive powers, up to t <= tmax.
AInvariants a_invariants(const std::vector<int>& yvars, const ModuleMap& pres,
                         int imax, int tmax = 12, int stable_runs = 3);

// Presentation of the subquotient (U + K)/(V + K) of the quotient ring
// ambient/K, as a module over the ambient ring: generators are the
// generators of U, relations computed by a syzygy run. Returns nullopt for
// the zero module.
std::optional<ModuleMap> subquotient_presentation(
    const std::vector<Polynomial>& u_gens, const Ideal& v_plus_k);

}  // namespace blowup

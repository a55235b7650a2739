#include "blowup/homology.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

#include "blowup/errors.hpp"
#include "blowup/matrix.hpp"

namespace blowup {

Bidegree element_bidegree(const MVec& v, const std::vector<Bidegree>& twists) {
  if (v.is_zero()) throw kernel_error("bidegree of the zero element");
  const PolyRing& R = *v.ring();
  std::optional<Bidegree> deg;
  for (const auto& t : v.terms()) {
    Bidegree d{t.m.deg + twists[t.comp].w, R.deg2(t.m) + twists[t.comp].y};
    if (!deg) {
      deg = d;
    } else if (!(*deg == d)) {
      throw kernel_error("module element is not bihomogeneous");
    }
  }
  return *deg;
}

ModuleMap ModuleMap::cyclic(RingPtr ring,
                            const std::vector<Polynomial>& gens) {
  GradedFreeModule tgt{ring, {Bidegree{0, 0}}};
  std::vector<MVec> cols;
  for (const auto& g : gens) {
    if (!g.is_zero()) cols.push_back(MVec::embed(g, 1, 0));
  }
  return from_columns(std::move(tgt), cols);
}

ModuleMap ModuleMap::zero_into(GradedFreeModule target) {
  ModuleMap m;
  m.target = std::move(target);
  m.source.ring = m.target.ring;
  m.mat.assign(m.target.rank(), {});
  return m;
}

ModuleMap ModuleMap::from_columns(GradedFreeModule target,
                                  const std::vector<MVec>& cols) {
  ModuleMap m;
  m.target = std::move(target);
  m.source.ring = m.target.ring;
  const int tr = m.target.rank();
  m.mat.assign(tr, std::vector<Polynomial>());
  for (int i = 0; i < tr; ++i)
    m.mat[i].assign(cols.size(), Polynomial::zero(m.target.ring));
  for (size_t j = 0; j < cols.size(); ++j) {
    const MVec& v = cols[j];
    assert(v.rank() == tr);
    m.source.twists.push_back(element_bidegree(v, m.target.twists));
    for (int i = 0; i < tr; ++i) m.mat[i][j] = v.component(i);
  }
  return m;
}

MVec ModuleMap::column(int j) const {
  std::vector<MTerm> ts;
  for (int i = 0; i < target_rank(); ++i) {
    for (const auto& t : mat[i][j].terms()) ts.push_back({i, t.m, t.c});
  }
  return MVec::from_terms(target.ring, target_rank(), std::move(ts));
}

std::vector<std::vector<Polynomial>> ModuleMap::columns() const {
  std::vector<std::vector<Polynomial>> cols(source_rank());
  for (int j = 0; j < source_rank(); ++j) {
    cols[j].reserve(target_rank());
    for (int i = 0; i < target_rank(); ++i) cols[j].push_back(mat[i][j]);
  }
  return cols;
}

bool ModuleMap::is_homogeneous() const {
  const PolyRing& R = *target.ring;
  for (int i = 0; i < target_rank(); ++i) {
    for (int j = 0; j < source_rank(); ++j) {
      const Polynomial& e = mat[i][j];
      if (e.is_zero()) continue;
      Bidegree want = source.twists[j] - target.twists[i];
      for (const auto& t : e.terms()) {
        if (t.m.deg != want.w || R.deg2(t.m) != want.y) return false;
      }
    }
  }
  return true;
}

Bidegree ModuleMap::bidegree_of(const MVec& v) const {
  return element_bidegree(v, target.twists);
}

std::vector<MVec> kernel_gens(const ModuleMap& m) {
  return kernel_mod(m.columns(), {}, m.target.ring, m.target_rank());
}

ModuleMap syzygy(const ModuleMap& m) {
  auto k = kernel_gens(m);
  return ModuleMap::from_columns(m.source, k);
}

// ---------------------------------------------------------------------------
// resolution with unit-entry pruning

namespace {

struct Complex {
  RingPtr ring;
  std::vector<std::vector<Bidegree>> twists;            // F_0 .. F_L
  std::vector<std::vector<std::vector<Polynomial>>> d;  // d[k]: F_{k+1} -> F_k

  int rank(int k) const { return static_cast<int>(twists[k].size()); }
  int len() const { return static_cast<int>(d.size()); }

  void erase_source_col(int k, int j) {
    for (auto& row : d[k]) row.erase(row.begin() + j);
    twists[k + 1].erase(twists[k + 1].begin() + j);
    if (k + 1 < len()) d[k + 1].erase(d[k + 1].begin() + j);
  }
  void erase_target_row(int k, int i) {
    d[k].erase(d[k].begin() + i);
    twists[k].erase(twists[k].begin() + i);
    if (k > 0) {
      for (auto& row : d[k - 1]) row.erase(row.begin() + i);
    }
  }
};

// cancel the scalar unit pivot at d[k][i][j] by a change of basis in F_k and
// F_{k+1}, then drop the two basis vectors
void cancel_pivot(Complex& cx, int k, int i, int j) {
  const PolyRing& R = *cx.ring;
  const auto& F = R.field();
  auto& M = cx.d[k];
  const uint32_t uinv = F.inv(M[i][j].lc());

  // clear row i with column operations; the next map's rows follow
  for (int c = 0; c < cx.rank(k + 1); ++c) {
    if (c == j || M[i][c].is_zero()) continue;
    Polynomial alpha = M[i][c].scaled(uinv);
    for (int r = 0; r < cx.rank(k); ++r) {
      if (!M[r][j].is_zero()) M[r][c] = M[r][c] - alpha * M[r][j];
    }
    if (k + 1 < cx.len()) {
      auto& N = cx.d[k + 1];
      for (size_t v = 0; v < N[c].size(); ++v) {
        if (!N[c][v].is_zero()) N[j][v] = N[j][v] + alpha * N[c][v];
      }
    }
  }
  // clear column j with row operations; the previous map's columns follow
  for (int r = 0; r < cx.rank(k); ++r) {
    if (r == i || M[r][j].is_zero()) continue;
    Polynomial beta = M[r][j].scaled(uinv);
    // row i is zero outside column j, so only column j changes here
    M[r][j] = M[r][j] - beta * M[i][j];
    if (k > 0) {
      auto& P = cx.d[k - 1];
      for (int t2 = 0; t2 < cx.rank(k - 1); ++t2) {
        if (!P[t2][r].is_zero()) P[t2][i] = P[t2][i] + beta * P[t2][r];
      }
    }
  }
  cx.erase_source_col(k, j);
  cx.erase_target_row(k, i);
}

void minimize_complex(Complex& cx) {
  bool found = true;
  while (found) {
    found = false;
    for (int k = 0; k < cx.len() && !found; ++k) {
      for (int i = 0; i < cx.rank(k) && !found; ++i) {
        for (int j = 0; j < cx.rank(k + 1) && !found; ++j) {
          const Polynomial& e = cx.d[k][i][j];
          if (!e.is_zero() && e.is_unit_constant()) {
            cancel_pivot(cx, k, i, j);
            found = true;
          }
        }
      }
    }
  }
  while (cx.len() > 0 && cx.rank(cx.len()) == 0) {
    cx.d.pop_back();
    cx.twists.pop_back();
  }
}

ModuleMap map_of(const Complex& cx, int k) {
  ModuleMap m;
  m.target = {cx.ring, cx.twists[k]};
  m.source = {cx.ring, cx.twists[k + 1]};
  m.mat = cx.d[k];
  return m;
}

}  // namespace

FreeResolution free_resolution(const ModuleMap& pres) {
  if (!pres.is_homogeneous())
    throw kernel_error("free resolution needs a homogeneous presentation");
  const RingPtr ring = pres.target.ring;
  const int nvars = ring->nvars();

  Complex cx;
  cx.ring = ring;
  cx.twists.push_back(pres.target.twists);
  cx.twists.push_back(pres.source.twists);
  cx.d.push_back(pres.mat);
  minimize_complex(cx);

  FreeResolution res;
  res.f0 = {ring, cx.twists[0]};
  if (cx.rank(0) == 0) {
    res.zero_module = true;
    return res;
  }
  // drop all-zero presentation columns (nothing points at F_1 yet)
  for (int j = cx.rank(1) - 1; j >= 0; --j) {
    bool zero = true;
    for (int i = 0; i < cx.rank(0); ++i) {
      if (!cx.d[0][i][j].is_zero()) zero = false;
    }
    if (zero) {
      for (auto& row : cx.d[0]) row.erase(row.begin() + j);
      cx.twists[1].erase(cx.twists[1].begin() + j);
    }
  }

  while (cx.len() > 0 && cx.rank(cx.len()) > 0) {
    // replace the top free module's columns by a basis of their span, then
    // read the syzygies off the basis divisions
    std::vector<int> shape_before;
    for (int k = 0; k <= cx.len(); ++k) shape_before.push_back(cx.rank(k));

    ModuleMap last = map_of(cx, cx.len() - 1);
    std::vector<MVec> cols;
    for (int j = 0; j < last.source_rank(); ++j) cols.push_back(last.column(j));
    auto gb = module_groebner(std::move(cols));
    ModuleMap replaced = ModuleMap::from_columns(last.target, gb);
    cx.d.back() = replaced.mat;
    cx.twists.back() = replaced.source.twists;
    if (gb.empty()) break;

    auto kg = generating_syzygies(gb);
    if (kg.empty()) {
      // still minimize the generator replacement before finishing
      minimize_complex(cx);
      break;
    }
    ModuleMap next = ModuleMap::from_columns(replaced.source, kg);
    cx.twists.push_back(next.source.twists);
    cx.d.push_back(next.mat);
    minimize_complex(cx);
    if (cx.len() > nvars + 1)
      throw kernel_error("resolution exceeded the variable-count bound");

    // a round that neither lengthens the complex nor shrinks a rank found
    // only redundancy syzygies: the kernel of the pruned map is zero
    std::vector<int> shape_after;
    for (int k = 0; k <= cx.len(); ++k) shape_after.push_back(cx.rank(k));
    if (shape_after == shape_before) break;
  }

  res.f0 = {ring, cx.twists[0]};
  for (int k = 0; k < cx.len(); ++k) res.maps.push_back(map_of(cx, k));
  res.validate();
  return res;
}

std::map<int, std::map<Bidegree, int>> FreeResolution::betti() const {
  std::map<int, std::map<Bidegree, int>> b;
  if (zero_module) return b;
  for (int k = 0; k <= pd(); ++k) {
    for (const auto& t : module(k).twists) b[k][t]++;
  }
  return b;
}

void FreeResolution::validate() const {
  if (zero_module) return;
  const RingPtr ring = f0.ring;
  const int n = ring->nvars();
  if (pd() > n)
    throw kernel_error("resolution length exceeds the number of variables");
  for (const auto& m : maps) {
    if (!m.is_homogeneous())
      throw kernel_error("resolution map is not homogeneous");
    for (const auto& row : m.mat) {
      for (const auto& e : row) {
        if (!e.is_zero() && e.is_unit_constant())
          throw kernel_error("resolution is not minimal: unit entry");
      }
    }
    for (int j = 0; j < m.source_rank(); ++j) {
      bool all_zero = true;
      for (int i = 0; i < m.target_rank(); ++i) {
        if (!m.mat[i][j].is_zero()) all_zero = false;
      }
      if (all_zero) throw kernel_error("resolution has a zero column");
    }
  }
  for (size_t k = 0; k + 1 < maps.size(); ++k) {
    const ModuleMap& a = maps[k];
    const ModuleMap& b = maps[k + 1];
    for (int i = 0; i < a.target_rank(); ++i) {
      for (int j = 0; j < b.source_rank(); ++j) {
        Polynomial acc = Polynomial::zero(ring);
        for (int c = 0; c < a.source_rank(); ++c) {
          if (!a.mat[i][c].is_zero() && !b.mat[c][j].is_zero())
            acc = acc + a.mat[i][c] * b.mat[c][j];
        }
        if (!acc.is_zero())
          throw kernel_error("resolution differentials do not compose to 0");
      }
    }
  }
}

int depth_of(const ModuleMap& pres) {
  FreeResolution r = free_resolution(pres);
  if (r.zero_module)
    throw zero_module_error("depth of the zero module is undefined");
  return pres.target.ring->nvars() - r.pd();
}

long coker_piece_dim(const ModuleMap& pres, int d) {
  const RingPtr ring = pres.target.ring;
  std::vector<MVec> cols;
  for (int j = 0; j < pres.source_rank(); ++j) cols.push_back(pres.column(j));
  auto gb = module_groebner(std::move(cols));
  long acc = 0;
  for (int comp = 0; comp < pres.target_rank(); ++comp) {
    int need = d - pres.target.twists[comp].w;
    for (const auto& m : ring->monomials_of_degree(need)) {
      bool divisible = false;
      for (const auto& g : gb) {
        if (g.lt().comp == comp && PolyRing::divides(g.lt().m, m)) {
          divisible = true;
          break;
        }
      }
      if (!divisible) ++acc;
    }
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Koszul cohomology

struct KoszulCohomology::Level {
  std::vector<std::vector<int>> subsets;
  std::vector<Bidegree> twists;
  int rank = 0;
};

namespace {

std::vector<std::vector<int>> index_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

int subset_index(const std::vector<std::vector<int>>& sets,
                 const std::vector<int>& s) {
  auto it = std::lower_bound(sets.begin(), sets.end(), s);
  assert(it != sets.end() && *it == s);
  return static_cast<int>(it - sets.begin());
}

// columns of Hom(K, F0) differential between the given subset levels
std::vector<std::vector<Polynomial>> hom_diff_cols(
    const std::vector<Polynomial>& elems, int c0,
    const std::vector<std::vector<int>>& src_sets,
    const std::vector<std::vector<int>>& tgt_sets, const RingPtr& ring) {
  const int tgt_rank = static_cast<int>(tgt_sets.size()) * c0;
  std::vector<std::vector<Polynomial>> cols;
  for (const auto& T : src_sets) {
    for (int b = 0; b < c0; ++b) {
      std::vector<Polynomial> col(tgt_rank, Polynomial::zero(ring));
      for (int j = 0; j < static_cast<int>(elems.size()); ++j) {
        if (std::find(T.begin(), T.end(), j) != T.end()) continue;
        std::vector<int> Tj = T;
        Tj.insert(std::upper_bound(Tj.begin(), Tj.end(), j), j);
        int sgn = 0;
        for (int k : T) {
          if (k < j) ++sgn;
        }
        int ti = subset_index(tgt_sets, Tj);
        col[ti * c0 + b] = (sgn % 2 == 0) ? elems[j] : -elems[j];
      }
      cols.push_back(std::move(col));
    }
  }
  return cols;
}

// presentation relations copied into every subset block of a level
std::vector<MVec> level_relations(const ModuleMap& pres, int nsets,
                                  const RingPtr& ring) {
  const int c0 = pres.target_rank();
  std::vector<MVec> rels;
  for (int s = 0; s < nsets; ++s) {
    for (int j = 0; j < pres.source_rank(); ++j) {
      MVec col = pres.column(j);
      std::vector<MTerm> ts;
      for (const auto& t : col.terms())
        ts.push_back({s * c0 + t.comp, t.m, t.c});
      rels.push_back(MVec::from_terms(ring, nsets * c0, std::move(ts)));
    }
  }
  return rels;
}

}  // namespace

KoszulCohomology::KoszulCohomology(std::vector<Polynomial> elems,
                                   ModuleMap pres)
    : elems_(std::move(elems)), pres_(std::move(pres)) {
  ring_ = pres_.target.ring;
  levels_.resize(elems_.size() + 2);
  for (const auto& f : elems_) {
    if (f.is_zero()) throw kernel_error("Koszul element is zero");
    if (!same_ring(f.ring(), ring_))
      throw ring_mismatch_error("Koszul element from another ring");
  }
}

const KoszulCohomology::Level& KoszulCohomology::level(int i) const {
  assert(i >= 0 && i < static_cast<int>(levels_.size()));
  if (!levels_[i]) {
    auto lvp = std::make_shared<Level>();
    Level& lv = *lvp;
    if (i <= nelems()) {
      lv.subsets = index_subsets(nelems(), i);
      for (const auto& T : lv.subsets) {
        Bidegree shift{0, 0};
        for (int k : T) {
          int w = 0, y = 0;
          if (!elems_[k].bidegree(&w, &y))
            throw kernel_error("Koszul element is not bihomogeneous");
          shift.w += w;
          shift.y += y;
        }
        for (const auto& t : pres_.target.twists) {
          lv.twists.push_back({t.w - shift.w, t.y - shift.y});
        }
      }
    }
    lv.rank = static_cast<int>(lv.twists.size());
    levels_[i] = std::move(lvp);
  }
  return *levels_[i];
}

const std::vector<Bidegree>& KoszulCohomology::level_twists(int i) const {
  return level(i).twists;
}

namespace {
struct CohomologyData {
  std::vector<MVec> ker;     // generators of ker(d^i) as a preimage module
  std::vector<MVec> im;      // image columns of d^{i-1} plus relations
  std::vector<Bidegree> twists;
};
}  // namespace

static CohomologyData cohomology_data(const std::vector<Polynomial>& elems,
                                      const ModuleMap& pres, int i,
                                      const std::vector<std::vector<int>>& prev_sets,
                                      const std::vector<std::vector<int>>& cur_sets,
                                      const std::vector<std::vector<int>>& next_sets,
                                      const std::vector<Bidegree>& cur_twists,
                                      const RingPtr& ring) {
  const int c0 = pres.target_rank();
  const int n = static_cast<int>(elems.size());
  CohomologyData out;
  out.twists = cur_twists;
  const int cur_rank = static_cast<int>(cur_sets.size()) * c0;

  if (i == n) {
    for (int b = 0; b < cur_rank; ++b)
      out.ker.push_back(MVec::unit(ring, cur_rank, b));
  } else {
    auto cols = hom_diff_cols(elems, c0, cur_sets, next_sets, ring);
    auto rel_next =
        level_relations(pres, static_cast<int>(next_sets.size()), ring);
    out.ker = kernel_mod(cols, rel_next, ring, static_cast<int>(next_sets.size()) * c0);
  }

  out.im = level_relations(pres, static_cast<int>(cur_sets.size()), ring);
  if (i > 0) {
    auto cols = hom_diff_cols(elems, c0, prev_sets, cur_sets, ring);
    for (const auto& col : cols) {
      std::vector<MTerm> ts;
      for (int r = 0; r < static_cast<int>(col.size()); ++r) {
        for (const auto& t : col[r].terms()) ts.push_back({r, t.m, t.c});
      }
      out.im.push_back(MVec::from_terms(ring, cur_rank, std::move(ts)));
    }
  }
  return out;
}

bool KoszulCohomology::vanishes(int i) const {
  if (i < 0 || i > nelems()) return true;
  const Level& prev = level(std::max(0, i - 1));
  const Level& cur = level(i);
  const Level& next = level(i + 1);
  auto data = cohomology_data(elems_, pres_, i, prev.subsets, cur.subsets,
                              next.subsets, cur.twists, ring_);
  auto gb = module_groebner(std::move(data.im));
  for (const auto& k : data.ker) {
    if (!module_nf(k, gb).is_zero()) return false;
  }
  return true;
}

int KoszulCohomology::grade() const {
  for (int i = 0; i <= nelems(); ++i) {
    if (!vanishes(i)) return i;
  }
  throw kernel_error(
      "Koszul cohomology vanishes everywhere: the elements act invertibly");
}

std::map<int, long> KoszulCohomology::piece_dims(int i, int wlo,
                                                 int whi) const {
  std::map<int, long> out;
  if (i < 0 || i > nelems()) {
    for (int d = wlo; d <= whi; ++d) out[d] = 0;
    return out;
  }
  const Level& prev = level(std::max(0, i - 1));
  const Level& cur = level(i);
  const Level& next = level(i + 1);
  auto data = cohomology_data(elems_, pres_, i, prev.subsets, cur.subsets,
                              next.subsets, cur.twists, ring_);

  for (int d = wlo; d <= whi; ++d) {
    std::vector<std::pair<int, Monomial>> basis;
    std::map<std::pair<int, std::array<uint16_t, Monomial::kMaxVars>>, size_t>
        index;
    for (int comp = 0; comp < cur.rank; ++comp) {
      for (auto& m : ring_->monomials_of_degree(d - cur.twists[comp].w)) {
        index[{comp, m.e}] = basis.size();
        basis.push_back({comp, std::move(m)});
      }
    }
    auto coords = [&](const MVec& v, const Monomial& mult) {
      std::vector<uint32_t> row(basis.size(), 0);
      for (const auto& t : v.terms()) {
        Monomial m = ring_->mul(t.m, mult);
        auto it = index.find({t.comp, m.e});
        assert(it != index.end());
        row[it->second] = t.c;
      }
      return row;
    };
    auto span_rows = [&](const std::vector<MVec>& gens, ModpMatrix& m) {
      for (const auto& g : gens) {
        if (g.is_zero()) continue;
        Bidegree gd = element_bidegree(g, cur.twists);
        for (const auto& mult : ring_->monomials_of_degree(d - gd.w)) {
          m.add_row(coords(g, mult));
        }
      }
    };
    ModpMatrix mi(ring_->field(), 0, basis.size());
    span_rows(data.im, mi);
    long rank_img = static_cast<long>(mi.rref());
    ModpMatrix mk(ring_->field(), 0, basis.size());
    span_rows(data.im, mk);
    span_rows(data.ker, mk);
    long rank_ker = static_cast<long>(mk.rref());
    out[d] = rank_ker - rank_img;
  }
  return out;
}

std::optional<int> KoszulCohomology::top_ydeg(int i, int exp_cap) const {
  if (i < 0 || i > nelems()) return std::nullopt;
  const Level& prev = level(std::max(0, i - 1));
  const Level& cur = level(i);
  const Level& next = level(i + 1);
  auto data = cohomology_data(elems_, pres_, i, prev.subsets, cur.subsets,
                              next.subsets, cur.twists, ring_);
  auto gb = module_groebner(std::move(data.im));

  std::vector<int> yv;
  for (int v = 0; v < ring_->nvars(); ++v) {
    if (!ring_->grading2().empty() && ring_->grading2()[v] == 1)
      yv.push_back(v);
    else if (!ring_->grading2().empty() && ring_->grading2()[v] > 1)
      throw kernel_error("top_ydeg expects a 0/1 second grading");
  }

  int lo = 0, hi = 0;
  bool any = false;
  std::vector<std::pair<MVec, int>> live;
  for (const auto& u : data.ker) {
    if (module_nf(u, gb).is_zero()) continue;
    int yd = element_bidegree(u, cur.twists).y;
    live.push_back({u, yd});
    lo = any ? std::min(lo, yd) : yd;
    hi = any ? std::max(hi, yd) : yd;
    any = true;
  }
  if (!any) return std::nullopt;
  hi += static_cast<int>(yv.size()) * std::max(0, exp_cap - 1);

  std::function<void(int, int, std::vector<uint16_t>&,
                     std::vector<Monomial>&)>
      enum_y = [&](int idx, int left, std::vector<uint16_t>& curv,
                   std::vector<Monomial>& outv) {
        if (idx == static_cast<int>(yv.size())) {
          if (left == 0) outv.push_back(ring_->mono(curv));
          return;
        }
        for (int e = 0; e <= std::min(left, exp_cap - 1); ++e) {
          curv[yv[idx]] = static_cast<uint16_t>(e);
          enum_y(idx + 1, left - e, curv, outv);
        }
        curv[yv[idx]] = 0;
      };

  for (int n = hi; n >= lo; --n) {
    for (auto& [u, yd] : live) {
      int need = n - yd;
      if (need < 0) continue;
      std::vector<uint16_t> curv(ring_->nvars(), 0);
      std::vector<Monomial> mults;
      enum_y(0, need, curv, mults);
      for (const auto& mu : mults) {
        if (!module_nf(u.times_term(mu, 1), gb).is_zero()) return n;
      }
    }
  }
  return std::nullopt;
}

AInvariants a_invariants(const std::vector<int>& yvars, const ModuleMap& pres,
                         int imax, int tmax, int stable_runs) {
  const RingPtr ring = pres.target.ring;
  AInvariants out;
  std::map<int, int> run_len;
  std::map<int, std::optional<int>> last;
  for (int i = 0; i <= imax; ++i) {
    out.stabilized[i] = false;
    out.trace[i] = {};
  }
  for (int t = 1; t <= tmax; ++t) {
    out.t_used = t;
    std::vector<Polynomial> elems;
    for (int v : yvars)
      elems.push_back(poly_pow(Polynomial::variable(ring, v), t));
    KoszulCohomology kc(std::move(elems), pres);
    for (int i = 0; i <= imax; ++i) {
      if (out.stabilized[i]) continue;
      std::optional<int> cand = kc.top_ydeg(i, t);
      out.trace[i].push_back(cand);
      if (t > 1 && cand == last[i]) {
        run_len[i]++;
      } else {
        run_len[i] = 1;
      }
      last[i] = cand;
      out.a[i] = cand;
      if (run_len[i] >= stable_runs) out.stabilized[i] = true;
    }
    bool all = true;
    for (int i = 0; i <= imax; ++i) {
      if (!out.stabilized[i]) all = false;
    }
    if (all) break;
  }
  out.all_stabilized = true;
  for (int i = 0; i <= imax; ++i) {
    if (!out.stabilized[i]) out.all_stabilized = false;
  }
  return out;
}

std::optional<ModuleMap> subquotient_presentation(
    const std::vector<Polynomial>& u_gens, const Ideal& v_plus_k) {
  const RingPtr ring = v_plus_k.ring();
  std::vector<Polynomial> live;
  for (const auto& u : u_gens) {
    if (!v_plus_k.contains(u)) live.push_back(u);
  }
  if (live.empty()) return std::nullopt;

  GradedFreeModule f0;
  f0.ring = ring;
  for (const auto& u : live) {
    int w = 0, y = 0;
    if (!u.bidegree(&w, &y))
      throw kernel_error("subquotient generator is not bihomogeneous");
    f0.twists.push_back({w, y});
  }
  std::vector<std::vector<Polynomial>> cols;
  for (const auto& u : live) cols.push_back({u});
  std::vector<MVec> w_rels;
  for (const auto& g : v_plus_k.groebner())
    w_rels.push_back(MVec::embed(g, 1, 0));
  auto rel = kernel_mod(cols, w_rels, ring, 1);
  return ModuleMap::from_columns(std::move(f0), rel);
}

}  // namespace blowup

#include "blowup/invariants.hpp"

#include <algorithm>
#include <functional>
#include <cassert>
#include <random>
#include <sstream>

#include "blowup/errors.hpp"

namespace blowup {

const Ideal& PowersCache::raw(int j) {
  if (j < 0) throw kernel_error("negative ideal power");
  auto it = raw_.find(j);
  if (it != raw_.end()) return it->second;
  if (j == 0) {
    raw_.emplace(0, Ideal::unit(ideal_.ring()));
  } else if (j == 1) {
    raw_.emplace(1, ideal_);
  } else {
    raw_.emplace(j, ideal_product(raw(j - 1), ideal_));
  }
  return raw_.at(j);
}

const Ideal& PowersCache::lifted(int j) {
  auto it = lifted_.find(j);
  if (it != lifted_.end()) return it->second;
  lifted_.emplace(j, base_.lift(raw(j)));
  return lifted_.at(j);
}

namespace {

// least j with I^(j+1) = J I^j in R, or -1 if none up to rmax
int reduction_number(PowersCache& pc, const Ideal& J, int rmax) {
  for (int j = 0; j <= rmax; ++j) {
    Ideal rhs = pc.base().lift(ideal_product(J, pc.raw(j)));
    if (ideal_equal(pc.lifted(j + 1), rhs)) return j;
  }
  return -1;
}

std::string poly_list_str(const std::vector<Polynomial>& v) {
  std::string s;
  for (const auto& f : v) {
    if (!s.empty()) s += ", ";
    s += f.to_string();
  }
  return s;
}

}  // namespace

std::optional<std::vector<Polynomial>> express_in_gens(
    const Polynomial& a, const std::vector<Polynomial>& gens, const Ideal& k) {
  const RingPtr ring = a.ring();
  const int n = static_cast<int>(gens.size());
  std::vector<MVec> mgens;
  for (int i = 0; i < n; ++i) {
    MVec v = MVec::embed(gens[i], 1 + n, 0) + MVec::unit(ring, 1 + n, 1 + i);
    mgens.push_back(std::move(v));
  }
  for (const auto& kg : k.gens())
    mgens.push_back(MVec::embed(kg, 1 + n, 0));
  auto gb = module_groebner(std::move(mgens));
  MVec r = module_nf(MVec::embed(a, 1 + n, 0), gb);
  if (!r.component(0).is_zero()) return std::nullopt;
  std::vector<Polynomial> q;
  for (int i = 0; i < n; ++i) q.push_back(-r.component(1 + i));
  return q;
}

ReductionData find_reduction(PowersCache& pc,
                             const std::vector<Polynomial>& igens, int s,
                             uint64_t seed, int rmax,
                             const std::optional<std::vector<Polynomial>>&
                                 user_j) {
  ReductionData out;
  const RingPtr ring = pc.ideal().ring();
  const auto& F = ring->field();
  const int n = static_cast<int>(igens.size());

  if (user_j) {
    out.user_supplied = true;
    out.j_gens = *user_j;
    for (const auto& g : out.j_gens) {
      if (!pc.lifted(1).contains(g)) {
        out.note = "supplied generator " + g.to_string() +
                   " does not lie in the ideal";
        return out;
      }
    }
    // constant-combination rows when available (used by the graded checks)
    bool constant = true;
    std::vector<std::vector<uint32_t>> rows;
    for (const auto& g : out.j_gens) {
      auto q = express_in_gens(g, igens, pc.base().defining());
      if (!q) {
        constant = false;
        break;
      }
      std::vector<uint32_t> row;
      for (const auto& c : *q) {
        if (c.is_zero()) {
          row.push_back(0);
        } else if (c.is_unit_constant()) {
          row.push_back(c.lc());
        } else {
          constant = false;
          break;
        }
      }
      if (!constant) break;
      rows.push_back(std::move(row));
    }
    if (constant) out.coeff_matrix = std::move(rows);
    Ideal J(ring, out.j_gens);
    int r = reduction_number(pc, J, rmax);
    out.trials = 1;
    if (r < 0) {
      out.note = "reduction not confirmed within rmax = " +
                 std::to_string(rmax);
      return out;
    }
    out.r_j = r;
    out.verified = true;
    return out;
  }

  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 10; ++attempt) {
    ++out.trials;
    std::vector<std::vector<uint32_t>> rows;
    std::vector<Polynomial> gens;
    for (int k = 0; k < s; ++k) {
      std::vector<uint32_t> row;
      Polynomial g = Polynomial::zero(ring);
      for (int i = 0; i < n; ++i) {
        uint32_t c = static_cast<uint32_t>(rng() % F.p());
        row.push_back(c);
        g = g + igens[i].scaled(c);
      }
      rows.push_back(std::move(row));
      gens.push_back(std::move(g));
    }
    Ideal J(ring, gens);
    int r = reduction_number(pc, J, rmax);
    if (r >= 0) {
      out.j_gens = std::move(gens);
      out.coeff_matrix = std::move(rows);
      out.r_j = r;
      out.verified = true;
      return out;
    }
  }
  out.note =
      "no verified reduction after 10 random draws (is s at least the "
      "analytic spread, and the field large enough?)";
  return out;
}

RegularityResult regularity_of(const BlowupPresentation& b,
                               const ModuleMap& g_pres, int r_j,
                               int twist_bound, int tmax) {
  RegularityResult out;
  auto ai = a_invariants(b.yvar_indices(), g_pres, b.n_y, tmax);
  out.detail = ai;
  out.t_used = ai.t_used;

  constexpr int kNegInf = INT32_MIN / 2;
  int reg_all = kNegInf;
  int reg_stab = kNegInf;
  for (const auto& [i, cand] : ai.a) {
    if (cand) {
      reg_all = std::max(reg_all, *cand + i);
      if (ai.stabilized.at(i)) reg_stab = std::max(reg_stab, *cand + i);
    }
  }
  if (ai.all_stabilized && reg_all > kNegInf) {
    if (reg_all >= r_j && reg_all <= twist_bound) {
      out.value = reg_all;
      out.status = RegStatus::exact;
      return out;
    }
    out.value = std::max(r_j, reg_all);
    out.status = RegStatus::lower_bound_only;
    std::ostringstream os;
    os << "stabilized candidate " << reg_all << " outside the sanity window ["
       << r_j << ", " << twist_bound << "]";
    out.note = os.str();
    return out;
  }
  out.value = std::max(r_j, reg_stab == kNegInf ? r_j : reg_stab);
  out.status = RegStatus::unresolved;
  out.note = "regularity unresolved: a-invariant candidates did not all "
             "stabilize within t <= " +
             std::to_string(tmax);
  return out;
}

VVReport vv_condition(PowersCache& pc, const Ideal& x_ideal, int jmax,
                      const std::optional<Polynomial>& single) {
  VVReport out;
  for (int j = 1; j <= jmax; ++j) {
    Ideal lhs = ideal_intersect(pc.lifted(j), pc.base().lift(x_ideal));
    Ideal rhs = pc.base().lift(ideal_product(x_ideal, pc.raw(j - 1)));
    out.per_j[j] = ideal_equal(lhs, rhs);
  }
  if (single) {
    Ideal ann = ideal_colon(pc.base().lift(Ideal::zero(pc.ideal().ring())),
                            *single);
    out.element_regular_on_R =
        ideal_equal(ann, pc.base().lift(Ideal::zero(pc.ideal().ring())));
  }
  return out;
}

namespace {

// a -> initial form in G as a polynomial of the blow-up ring A: write
// a = sum q_i f_i mod K, then a* = sum (q_i mod I) @y_i
std::optional<Polynomial> initial_form_in_A(const Polynomial& a,
                                            const BlowupPresentation& b,
                                            PowersCache& pc) {
  auto q = express_in_gens(a, b.ideal_gens, b.base.defining());
  if (!q) return std::nullopt;
  Polynomial out = Polynomial::zero(b.A);
  for (int i = 0; i < b.n_y; ++i) {
    Polynomial qi = pc.lifted(1).normal_form((*q)[i]);
    if (qi.is_zero()) continue;
    out = out + map_vars(qi, b.A, b.s_to_a) * b.y_poly(i);
  }
  return out;
}

std::vector<std::vector<int>> permutations_up_to(int s, size_t cap) {
  std::vector<int> idx(s);
  for (int i = 0; i < s; ++i) idx[i] = i;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(idx);
    if (out.size() >= cap) break;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

}  // namespace

namespace {
// one candidate basis (a reduction generating set in a fixed order)
struct BasisCandidate {
  std::vector<Polynomial> gens;
  std::vector<int> order;
  int draw = 0;
};
}  // namespace

FilterRegularResult filter_regular_check(PowersCache& pc,
                                         const BlowupPresentation& b,
                                         const ReductionData& red,
                                         int reg_standin) {
  FilterRegularResult out;
  out.attempted = true;
  out.reg_standin = reg_standin;
  const int s = red.s();
  out.window_lo = reg_standin + 1;
  out.window_hi = reg_standin + s + 2;
  if (!red.verified || s == 0) {
    out.trace.push_back("no verified reduction basis available");
    return out;
  }
  const RingPtr ring = pc.ideal().ring();

  // candidate bases: permutations of the verified basis, then (for random
  // reductions) a couple of fresh draws with the same reduction number
  std::vector<BasisCandidate> candidates;
  for (const auto& perm : permutations_up_to(s, 24)) {
    BasisCandidate c;
    c.order = perm;
    for (int k : perm) c.gens.push_back(red.j_gens[k]);
    candidates.push_back(std::move(c));
  }
  if (!red.user_supplied) {
    for (int extra = 1; extra <= 2; ++extra) {
      ReductionData fresh =
          find_reduction(pc, pc.ideal().gens(), s,
                         0x9e3779b97f4a7c15ULL * extra, 30);
      if (!fresh.verified) continue;
      if (fresh.r_j != red.r_j) {
        out.trace.push_back("fresh draw found a different reduction number");
        continue;
      }
      BasisCandidate c;
      c.draw = extra;
      for (int k = 0; k < s; ++k) c.order.push_back(k);
      c.gens = fresh.j_gens;
      candidates.push_back(std::move(c));
    }
  }

  for (const auto& cand : candidates) {
    // graded-side initial forms of this basis
    std::vector<std::optional<Polynomial>> stars(s);
    for (int k = 0; k < s; ++k)
      stars[k] = initial_form_in_A(cand.gens[k], b, pc);
    std::vector<int> perm(s);
    for (int k = 0; k < s; ++k) perm[k] = k;
    const std::vector<Polynomial>& basis_gens = cand.gens;
    bool cond1 = true;
    std::vector<std::string> local;
    for (int i = 0; i < s && cond1; ++i) {
      std::vector<Polynomial> head;
      for (int k = 0; k < i; ++k) head.push_back(basis_gens[perm[k]]);
      Ideal frak_a(ring, head);
      Ideal lifted_a = pc.base().lift(frak_a);
      Ideal colon = ideal_colon(lifted_a, basis_gens[perm[i]]);
      for (int j = out.window_lo; j <= out.window_hi; ++j) {
        Ideal lhs = ideal_intersect(colon, pc.lifted(j));
        Ideal rhs = pc.base().lift(ideal_product(frak_a, pc.raw(j - 1)));
        if (i == 0) rhs = pc.base().lift(Ideal::zero(ring));
        if (!ideal_equal(lhs, rhs)) {
          std::ostringstream os;
          os << "intersection condition fails at i=" << i << " j=" << j;
          local.push_back(os.str());
          cond1 = false;
          break;
        }
      }
    }
    if (!cond1) {
      out.trace.insert(out.trace.end(), local.begin(), local.end());
      continue;
    }

    bool cond2 = true;
    bool cond2_checked = true;
    for (int i = 0; i < s && cond2; ++i) {
      if (!stars[perm[i]]) {
        cond2_checked = false;
        out.trace.push_back("initial form unavailable for a basis element");
        break;
      }
      if (stars[perm[i]]->is_zero()) {
        cond2_checked = false;
        out.trace.push_back("initial form of a basis element vanishes in G");
        break;
      }
      std::vector<Polynomial> wgens = b.g_ideal.gens();
      for (int k = 0; k < i; ++k) wgens.push_back(*stars[perm[k]]);
      Ideal W(b.A, wgens);
      Ideal colon = ideal_colon(W, *stars[perm[i]]);
      for (const auto& g : colon.groebner()) {
        // the colon is graded for the second grading even when weights mix
        int gy = b.A->deg2(g.lm());
        bool y_homog = true;
        for (const auto& t : g.terms()) {
          if (b.A->deg2(t.m) != gy) y_homog = false;
        }
        if (!y_homog) {
          cond2_checked = false;
          out.trace.push_back("colon generator not graded in the @y-degree");
          break;
        }
        for (int j = std::max(out.window_lo, gy); j <= out.window_hi; ++j) {
          // multiply by @y-monomials to reach second-degree j
          int need = j - gy;
          std::function<void(int, int, std::vector<uint16_t>&)> rec =
              [&](int idx, int left, std::vector<uint16_t>& cur) {
                if (!cond2) return;
                if (idx == b.n_y) {
                  if (left) return;
                  Monomial mu = b.A->mono(cur);
                  if (!W.contains(g.times_term(mu, 1))) {
                    std::ostringstream os;
                    os << "graded condition fails at i=" << i << " j=" << j;
                    out.trace.push_back(os.str());
                    cond2 = false;
                  }
                  return;
                }
                for (int e = 0; e <= left && cond2; ++e) {
                  cur[b.yvar(idx)] = static_cast<uint16_t>(e);
                  rec(idx + 1, left - e, cur);
                }
                cur[b.yvar(idx)] = 0;
              };
          std::vector<uint16_t> cur(b.A->nvars(), 0);
          rec(0, need, cur);
          if (!cond2) break;
        }
        if (!cond2) break;
      }
    }

    if (cond1 && (cond2 || !cond2_checked)) {
      out.found_basis = true;
      out.order = cand.order;
      out.basis = cand.gens;
      out.fresh_draws = cand.draw;
      out.cond_intersection = cond1;
      out.cond_graded = cond2 && cond2_checked;
      out.cond_graded_checked = cond2_checked;
      return out;
    }
  }
  out.trace.push_back(
      "no basis ordering or fresh draw satisfied the conditions");
  return out;
}

int height_of(const QuotientRing& base, const Ideal& ideal) {
  int d = base.dim();
  Ideal k_lift = base.lift(Ideal::zero(ideal.ring()));
  int depth_r = depth_of(ModuleMap::cyclic(ideal.ring(),
                                           base.defining().gens()));
  if (depth_r != d)
    throw kernel_error(
        "height formula needs a Cohen-Macaulay base ring (depth " +
        std::to_string(depth_r) + " != dim " + std::to_string(d) + ")");
  Ideal lifted = base.lift(ideal);
  if (lifted.is_unit_ideal())
    throw kernel_error("height of the unit ideal");
  bool any_nonzero = false;
  for (const auto& g : ideal.gens()) {
    if (!base.is_zero_in_R(g)) any_nonzero = true;
  }
  if (!any_nonzero) throw kernel_error("height of the zero ideal");
  return d - krull_dimension(lifted);
}

AnalyzedInstance analyze_instance(QuotientRing base, Ideal ideal,
                                  InstanceOptions opt) {
  const RingPtr S = base.ambient();
  InvariantReport rep;

  // keep only generators that survive in R
  std::vector<Polynomial> live;
  for (const auto& g : ideal.gens()) {
    if (base.is_zero_in_R(g)) {
      rep.notes.push_back("dropped generator vanishing in R: " +
                          g.to_string());
    } else {
      live.push_back(base.reduce(g));
    }
  }
  if (live.empty()) throw kernel_error("the ideal is zero in R");
  Ideal I(S, live);
  if (base.lift(I).is_unit_ideal())
    throw kernel_error("the ideal is the unit ideal in R");
  for (const auto& g : live) {
    if (!g.weighted_degree().homogeneous)
      throw kernel_error("ideal generators must be homogeneous");
  }

  rep.ring_desc = "[" + poly_list_str(base.defining().gens()) + "]";
  rep.ideal_desc = "[" + poly_list_str(live) + "]";

  rep.dim_R = base.dim();
  rep.depth_R = depth_of(ModuleMap::cyclic(S, base.defining().gens()));
  rep.is_CM = (rep.dim_R == rep.depth_R);

  AnalyzedInstance out{.report = {},
                       .base = base,
                       .ideal = I,
                       .blowup = make_blowup(base, live),
                       .powers = std::make_shared<PowersCache>(base, I),
                       .options = opt};
  const BlowupPresentation& b = out.blowup;
  PowersCache& pc = *out.powers;

  rep.spread = fiber_dim(b);
  if (rep.is_CM) {
    rep.height = height_of(base, I);
    rep.deviation = rep.spread - *rep.height;
    rep.is_equimultiple = (rep.deviation == 0);
  } else {
    rep.notes.push_back(
        "base ring is not Cohen-Macaulay: height and deviation omitted");
  }

  // G-side invariants from one resolution
  ModuleMap g_pres = b.g_presentation();
  FreeResolution g_res = free_resolution(g_pres);
  if (g_res.zero_module) throw kernel_error("associated graded ring is zero");
  rep.depth_G = b.A->nvars() - g_res.pd();
  rep.twist_bound = 0;
  for (int k = 0; k <= g_res.pd(); ++k) {
    for (const auto& tw : g_res.module(k).twists)
      rep.twist_bound = std::max(rep.twist_bound, tw.y - k);
  }
  {
    std::vector<Polynomial> ys;
    for (int k = 0; k < b.n_y; ++k) ys.push_back(b.y_poly(k));
    KoszulCohomology kc(ys, g_pres);
    rep.grade_Gplus = kc.grade();
  }

  int s = opt.s_override.value_or(
      opt.user_j ? static_cast<int>(opt.user_j->size()) : rep.spread);
  if (!opt.user_j && s < rep.spread) {
    rep.notes.push_back(
        "requested reduction size below the analytic spread; using the "
        "spread");
    s = rep.spread;
  }
  rep.reduction = find_reduction(pc, live, s, opt.seed, opt.rmax, opt.user_j);

  int r_ref = rep.reduction.verified ? rep.reduction.r_j : 0;
  rep.regularity = regularity_of(b, g_pres, r_ref, rep.twist_bound,
                                 opt.reg_tmax);

  int reg_ref = rep.regularity.value;
  int desired = std::max(reg_ref + rep.reduction.s(), r_ref);
  desired = std::max(desired, 1);
  rep.depth_window =
      opt.max_power ? std::min(desired, *opt.max_power) : desired;
  if (opt.max_power && *opt.max_power < desired) {
    rep.notes.push_back("depth window truncated by max-power to " +
                        std::to_string(rep.depth_window));
  }
  for (int j = 1; j <= rep.depth_window; ++j) {
    rep.depths[j] =
        depth_of(ModuleMap::cyclic(S, pc.lifted(j).groebner()));
  }

  if (opt.run_filter_regular && rep.reduction.verified) {
    int standin = rep.regularity.status == RegStatus::exact
                      ? rep.regularity.value
                      : std::min(rep.twist_bound, r_ref + 3);
    if (opt.max_power && standin + rep.reduction.s() + 2 > *opt.max_power) {
      rep.notes.push_back(
          "filter-regular window exceeds the max-power cap; skipped");
    } else {
      rep.filter_regular = filter_regular_check(pc, b, rep.reduction, standin);
    }
  }

  // report invariants
  if (rep.height && !(*rep.height <= rep.spread && rep.spread <= rep.dim_R))
    throw kernel_error("height/spread/dimension sandwich violated");
  if (rep.regularity.status == RegStatus::exact && rep.reduction.verified &&
      rep.regularity.value < rep.reduction.r_j)
    throw kernel_error("regularity below the reduction number");
  if (!(rep.grade_Gplus <= rep.depth_G && rep.depth_G <= rep.dim_R))
    throw kernel_error("grade/depth/dimension sandwich violated");

  out.report = std::move(rep);
  out.depth_cache = std::make_shared<std::map<int, int>>(out.report.depths);
  return out;
}

int depth_of_power(const AnalyzedInstance& a, int j) {
  auto it = a.depth_cache->find(j);
  if (it != a.depth_cache->end()) return it->second;
  int d = depth_of(ModuleMap::cyclic(a.ideal.ring(),
                                     a.powers->lifted(j).groebner()));
  (*a.depth_cache)[j] = d;
  return d;
}

}  // namespace blowup

#include "blowup/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <tuple>

#include "blowup/errors.hpp"

namespace blowup {

namespace {

// divisor lookup per leading component
struct BasisIndex {
  std::vector<std::vector<int>> by_comp;

  void ensure(int comp) {
    if (comp >= static_cast<int>(by_comp.size())) by_comp.resize(comp + 1);
  }
  void add(const std::vector<MVec>& basis, int idx) {
    int c = basis[idx].lt().comp;
    ensure(c);
    by_comp[c].push_back(idx);
  }
  int find_reducer(const std::vector<MVec>& basis, const MTerm& t,
                   int skip = -1) const {
    if (t.comp >= static_cast<int>(by_comp.size())) return -1;
    for (int idx : by_comp[t.comp]) {
      if (idx == skip || basis[idx].is_zero()) continue;
      if (basis[idx].lt().comp != t.comp) continue;
      if (PolyRing::divides(basis[idx].lt().m, t.m)) return idx;
    }
    return -1;
  }
};

// Geobucket accumulator: terms live in sorted buckets of geometrically
// growing capacity, so long division chains cost amortized log instead of a
// full-vector rebuild per step.
class Geobucket {
 public:
  explicit Geobucket(const PolyRing& R) : R_(R) {}

  void add(uint32_t c, const Monomial* shift, std::span<const MTerm> terms) {
    if (terms.empty() || c == 0) return;
    size_t k = 0;
    while (cap(k) < terms.size()) ++k;
    if (k >= buckets_.size()) buckets_.resize(k + 1);
    auto merged = detail::axpy_terms(R_, live(k), c, shift, terms);
    heads_[k] = 0;
    buckets_[k] = std::move(merged);
    while (buckets_[k].size() - heads_[k] > cap(k)) {
      if (k + 1 >= buckets_.size()) buckets_.resize(k + 2);
      auto up = detail::axpy_terms(R_, live(k + 1), 1, nullptr, live(k));
      buckets_[k].clear();
      heads_[k] = 0;
      heads_[k + 1] = 0;
      buckets_[k + 1] = std::move(up);
      ++k;
    }
  }

  // largest remaining term with coefficients combined across buckets;
  // nullopt when exhausted
  std::optional<MTerm> extract_lead() {
    const auto& F = R_.field();
    while (true) {
      int best = -1;
      for (size_t k = 0; k < buckets_.size(); ++k) {
        if (heads_[k] >= buckets_[k].size()) continue;
        if (best < 0 ||
            mterm_cmp(R_, buckets_[k][heads_[k]],
                      buckets_[best][heads_[best]]) > 0) {
          best = static_cast<int>(k);
        }
      }
      if (best < 0) return std::nullopt;
      MTerm lead = buckets_[best][heads_[best]++];
      for (size_t k = 0; k < buckets_.size(); ++k) {
        if (static_cast<int>(k) == best) continue;
        while (heads_[k] < buckets_[k].size()) {
          const MTerm& t = buckets_[k][heads_[k]];
          if (t.comp == lead.comp && t.m == lead.m) {
            lead.c = F.add(lead.c, t.c);
            ++heads_[k];
          } else {
            break;
          }
        }
      }
      if (lead.c != 0) return lead;
    }
  }

 private:
  static size_t cap(size_t k) { return size_t(4) << (2 * k); }
  std::span<const MTerm> live(size_t k) {
    if (k >= buckets_.size()) return {};
    return std::span<const MTerm>(buckets_[k].data() + heads_[k],
                                  buckets_[k].size() - heads_[k]);
  }
  const PolyRing& R_;
  std::vector<std::vector<MTerm>> buckets_;
  size_t heads_[64] = {};
};

std::vector<MTerm> nf_terms(const PolyRing& R, std::vector<MTerm> cur,
                            const std::vector<MVec>& basis,
                            const BasisIndex& index, int skip = -1) {
  std::vector<MTerm> out;
  const auto& F = R.field();
  Geobucket g(R);
  g.add(1, nullptr, cur);
  while (auto t = g.extract_lead()) {
    int k = index.find_reducer(basis, *t, skip);
    if (k < 0) {
      out.push_back(*t);
      continue;
    }
    const MVec& red = basis[k];
    // the reducer's lead cancels the extracted term exactly
    Monomial shift = R.div(t->m, red.lt().m);
    uint32_t c = F.neg(F.mul(t->c, F.inv(red.lt().c)));
    g.add(c, &shift,
          std::span<const MTerm>(red.terms().data() + 1,
                                 red.terms().size() - 1));
  }
  return out;
}

struct SPair {
  int i, j;
  Monomial lcm;
  bool alive = true;
};

// selection key: (lcm degree, lead component, lcm exponents, i, j) -- a
// deterministic normal-strategy ordering with cheap erase
using PairKey =
    std::tuple<int, int, std::array<uint16_t, Monomial::kMaxVars>, int, int>;

PairKey key_of(const std::vector<MVec>& basis, const SPair& p) {
  return {p.lcm.deg, basis[p.i].lt().comp, p.lcm.e, p.i, p.j};
}

MVec s_vector(const MVec& f, const MVec& g, const Monomial& lcm) {
  const PolyRing& R = *f.ring();
  const auto& F = R.field();
  Monomial mf = R.div(lcm, f.lt().m);
  Monomial mg = R.div(lcm, g.lt().m);
  MVec a = f.times_term(mf, F.inv(f.lt().c));
  return MVec::axpy(a, F.neg(F.inv(g.lt().c)), mg, g);
}

bool pure_component(const MVec& v) {
  int c = v.lt().comp;
  for (const auto& t : v.terms()) {
    if (t.comp != c) return false;
  }
  return true;
}

// Gebauer-Moeller update: prune the queue against the new element t and add
// the surviving new pairs. When building a syzygy pair set, the coprime
// classes dropped by the product criterion are recorded: their syzygy is
// the exact two-term relation and must still be emitted.
void gm_update(const std::vector<MVec>& basis, std::vector<SPair>& pairs,
               std::map<PairKey, size_t>& queue, int t,
               std::vector<SPair>* koszul_out = nullptr) {
  const PolyRing& R = *basis[t].ring();
  const MTerm& lt_t = basis[t].lt();

  struct Cand {
    int i;
    Monomial lcm;
    bool coprime;
    bool alive = true;
  };
  std::vector<Cand> cand;
  for (int i = 0; i < t; ++i) {
    if (basis[i].is_zero()) continue;
    const MTerm& lt_i = basis[i].lt();
    if (lt_i.comp != lt_t.comp) continue;
    Monomial l = R.lcm(lt_i.m, lt_t.m);
    bool cop = PolyRing::coprime(lt_i.m, lt_t.m) && pure_component(basis[i]) &&
               pure_component(basis[t]);
    cand.push_back({i, std::move(l), cop});
  }

  // old-pair (chain) criterion
  for (auto& p : pairs) {
    if (!p.alive) continue;
    if (basis[p.i].lt().comp != lt_t.comp) continue;
    if (!PolyRing::divides(lt_t.m, p.lcm)) continue;
    Monomial li = R.lcm(basis[p.i].lt().m, lt_t.m);
    if (li == p.lcm) continue;
    Monomial lj = R.lcm(basis[p.j].lt().m, lt_t.m);
    if (lj == p.lcm) continue;
    p.alive = false;
    queue.erase(key_of(basis, p));
  }

  // keep only divisibility-minimal lcms among the candidates
  for (size_t a = 0; a < cand.size(); ++a) {
    if (!cand[a].alive) continue;
    for (size_t b = 0; b < cand.size(); ++b) {
      if (a == b || !cand[b].alive) continue;
      if (cand[b].lcm == cand[a].lcm) {
        if (b < a) {
          cand[a].alive = false;  // equal class: smaller index is keeper
          break;
        }
        continue;
      }
      if (PolyRing::divides(cand[b].lcm, cand[a].lcm)) {
        cand[a].alive = false;
        break;
      }
    }
  }
  // product criterion kills the whole equal-lcm class
  std::vector<Monomial> recorded;
  for (auto& a : cand) {
    if (!a.alive) continue;
    for (const auto& b : cand) {
      if (b.coprime && b.lcm == a.lcm) {
        a.alive = false;
        if (koszul_out) {
          bool seen = false;
          for (const auto& m : recorded) {
            if (m == b.lcm) seen = true;
          }
          if (!seen) {
            recorded.push_back(b.lcm);
            koszul_out->push_back({b.i, t, b.lcm, true});
          }
        }
        break;
      }
    }
  }
  for (auto& c : cand) {
    if (!c.alive) continue;
    pairs.push_back({c.i, t, std::move(c.lcm), true});
    queue.emplace(key_of(basis, pairs.back()), pairs.size() - 1);
  }
}

// full reduction that also records the quotient against every basis element
struct DivisionTrace {
  std::vector<MTerm> remainder;
  std::vector<std::vector<Term>> quotients;  // per basis element
};

DivisionTrace nf_with_quotients(const PolyRing& R, std::vector<MTerm> cur,
                                const std::vector<MVec>& basis,
                                const BasisIndex& index) {
  DivisionTrace out;
  out.quotients.assign(basis.size(), {});
  const auto& F = R.field();
  Geobucket g(R);
  g.add(1, nullptr, cur);
  while (auto t = g.extract_lead()) {
    int k = index.find_reducer(basis, *t);
    if (k < 0) {
      out.remainder.push_back(*t);
      continue;
    }
    const MVec& red = basis[k];
    Monomial shift = R.div(t->m, red.lt().m);
    uint32_t q = F.mul(t->c, F.inv(red.lt().c));
    out.quotients[k].push_back({shift, q});
    g.add(F.neg(q), &shift,
          std::span<const MTerm>(red.terms().data() + 1,
                                 red.terms().size() - 1));
  }
  return out;
}

std::vector<MVec> autoreduce(std::vector<MVec> basis) {
  if (basis.empty()) return basis;
  const PolyRing& R = *basis.front().ring();
  bool changed = true;
  while (changed) {
    changed = false;
    BasisIndex idx;
    for (size_t j = 0; j < basis.size(); ++j) {
      if (!basis[j].is_zero()) idx.add(basis, static_cast<int>(j));
    }
    for (size_t i = 0; i < basis.size(); ++i) {
      if (basis[i].is_zero()) continue;
      MVec r = MVec::from_sorted(
          basis[i].ring(), basis[i].rank(),
          nf_terms(R, basis[i].terms(), basis, idx, static_cast<int>(i)));
      if (!(r == basis[i])) {
        changed = true;
        basis[i] = r.monic();  // possibly zero
      }
    }
  }
  std::vector<MVec> out;
  for (auto& g : basis) {
    if (!g.is_zero()) out.push_back(g.monic());
  }
  std::sort(out.begin(), out.end(), [&R](const MVec& a, const MVec& b) {
    return mterm_cmp(R, a.lt(), b.lt()) < 0;
  });
  return out;
}

}  // namespace

// Generators of the syzygy module of a Groebner basis: one division
// syzygy per leading-component pair, with the exact two-term form for
// coprime pairs of single-component elements.
std::vector<MVec> generating_syzygies(const std::vector<MVec>& basis) {
  std::vector<MVec> out;
  if (basis.empty()) return out;
  const RingPtr ring = basis.front().ring();
  const PolyRing& R = *ring;
  const auto& F = R.field();
  const int m = static_cast<int>(basis.size());
  BasisIndex index;
  for (int k = 0; k < m; ++k) index.add(basis, k);

  // pruned pair set: chain-dropped pairs contribute combinations of the
  // kept syzygies, coprime classes contribute their exact two-term relation
  std::vector<SPair> pairs;
  std::vector<SPair> koszul;
  std::map<PairKey, size_t> queue;
  for (int t = 0; t < m; ++t) gm_update(basis, pairs, queue, t, &koszul);

  for (const auto& p : koszul) {
    int comp = basis[p.i].lt().comp;
    Polynomial pi = basis[p.i].component(comp).monic();
    Polynomial pj = basis[p.j].component(comp).monic();
    std::vector<MTerm> ts;
    for (const auto& t : pj.terms()) ts.push_back({p.i, t.m, t.c});
    for (const auto& t : pi.terms()) ts.push_back({p.j, t.m, F.neg(t.c)});
    out.push_back(MVec::from_terms(ring, m, std::move(ts)));
  }
  for (const auto& p : pairs) {
    if (!p.alive) continue;
    const Monomial& mi = basis[p.i].lt().m;
    const Monomial& mj = basis[p.j].lt().m;
    const Monomial& u = p.lcm;
    MVec s = s_vector(basis[p.i], basis[p.j], u);
    DivisionTrace tr = nf_with_quotients(R, s.terms(), basis, index);
    assert(tr.remainder.empty() && "s-vector of a basis must reduce to 0");
    std::vector<MTerm> ts;
    ts.push_back({p.i, R.div(u, mi), F.inv(basis[p.i].lt().c)});
    ts.push_back({p.j, R.div(u, mj), F.neg(F.inv(basis[p.j].lt().c))});
    for (int k = 0; k < m; ++k) {
      for (const auto& q : tr.quotients[k])
        ts.push_back({k, q.m, F.neg(q.c)});
    }
    out.push_back(MVec::from_terms(ring, m, std::move(ts)));
  }
  return out;
}

std::vector<MVec> module_groebner(std::vector<MVec> gens) {
  std::vector<MVec> basis;
  for (auto& g : gens) {
    if (!g.is_zero()) basis.push_back(g.monic());
  }
  if (basis.empty()) return basis;
  const PolyRing& R = *basis.front().ring();

  std::vector<SPair> pairs;
  std::map<PairKey, size_t> queue;
  BasisIndex index;
  // seed pairs one element at a time through the same update
  std::vector<MVec> cur;
  for (auto& g : basis) {
    cur.push_back(g);
    gm_update(cur, pairs, queue, static_cast<int>(cur.size()) - 1);
    index.add(cur, static_cast<int>(cur.size()) - 1);
  }
  basis = std::move(cur);

  while (!queue.empty()) {
    size_t k = queue.begin()->second;
    queue.erase(queue.begin());
    if (!pairs[k].alive) continue;
    SPair p = pairs[k];
    pairs[k].alive = false;
    MVec s = s_vector(basis[p.i], basis[p.j], p.lcm);
    MVec h = MVec::from_sorted(s.ring(), s.rank(),
                               nf_terms(R, s.terms(), basis, index));
    if (h.is_zero()) continue;
    basis.push_back(h.monic());
    gm_update(basis, pairs, queue, static_cast<int>(basis.size()) - 1);
    index.add(basis, static_cast<int>(basis.size()) - 1);
  }
  return autoreduce(std::move(basis));
}

MVec module_nf(const MVec& f, std::span<const MVec> basis) {
  if (f.is_zero() || basis.empty()) return f;
  const PolyRing& R = *f.ring();
  std::vector<MVec> b(basis.begin(), basis.end());
  BasisIndex idx;
  for (size_t j = 0; j < b.size(); ++j) {
    if (!b[j].is_zero()) idx.add(b, static_cast<int>(j));
  }
  return MVec::from_sorted(f.ring(), f.rank(),
                           nf_terms(R, f.terms(), b, idx));
}

std::vector<MVec> kernel_mod(const std::vector<std::vector<Polynomial>>& cols,
                             std::span<const MVec> relations, RingPtr ring,
                             int target_rank) {
  const int a = static_cast<int>(cols.size());
  const int rank = target_rank + a;
  std::vector<MVec> gens;
  gens.reserve(cols.size() + relations.size());
  for (int j = 0; j < a; ++j) {
    assert(static_cast<int>(cols[j].size()) == target_rank);
    std::vector<MTerm> ts;
    for (int i = 0; i < target_rank; ++i) {
      for (const auto& t : cols[j][i].terms()) ts.push_back({i, t.m, t.c});
    }
    ts.push_back({target_rank + j, ring->one(), 1});
    gens.push_back(MVec::from_terms(ring, rank, std::move(ts)));
  }
  for (const auto& w : relations) {
    assert(w.rank() == target_rank);
    std::vector<MTerm> ts(w.terms().begin(), w.terms().end());
    gens.push_back(MVec::from_terms(ring, rank, std::move(ts)));
  }
  auto gb = module_groebner(std::move(gens));
  std::vector<MVec> kernel;
  for (const auto& g : gb) {
    if (g.is_zero()) continue;
    if (g.lt().comp >= target_rank) kernel.push_back(g.slice_tail(target_rank));
  }
  return kernel;
}

std::vector<Polynomial> poly_groebner(const std::vector<Polynomial>& gens) {
  std::vector<MVec> m;
  RingPtr ring;
  for (const auto& g : gens) {
    if (!ring) ring = g.ring();
    if (!g.is_zero()) m.push_back(MVec::embed(g, 1, 0));
  }
  auto gb = module_groebner(std::move(m));
  std::vector<Polynomial> out;
  out.reserve(gb.size());
  for (const auto& v : gb) out.push_back(v.component(0));
  return out;
}

Polynomial poly_nf(const Polynomial& f, std::span<const Polynomial> basis) {
  if (f.is_zero()) return f;
  std::vector<MVec> b;
  b.reserve(basis.size());
  for (const auto& g : basis) {
    check_same_ring(f, g);
    if (!g.is_zero()) b.push_back(MVec::embed(g, 1, 0));
  }
  MVec r = module_nf(MVec::embed(f, 1, 0), b);
  return r.component(0);
}

DivisionResult divide_single(const Polynomial& f, const Polynomial& g) {
  check_same_ring(f, g);
  if (g.is_zero()) throw kernel_error("division by the zero polynomial");
  const PolyRing& R = *f.ring();
  const auto& F = R.field();
  Polynomial q = Polynomial::zero(f.ring());
  Polynomial r = Polynomial::zero(f.ring());
  Polynomial h = f;
  uint32_t gc_inv = F.inv(g.lc());
  while (!h.is_zero()) {
    if (PolyRing::divides(g.lm(), h.lm())) {
      Monomial m = R.div(h.lm(), g.lm());
      uint32_t c = F.mul(h.lc(), gc_inv);
      q = q + Polynomial::term(f.ring(), m, c);
      h = h - g.times_term(m, c);
    } else {
      Polynomial head = Polynomial::term(f.ring(), h.lm(), h.lc());
      r = r + head;
      h = h - head;
    }
  }
  return {std::move(q), std::move(r)};
}

}  // namespace blowup

#include "blowup/ideal.hpp"

#include <algorithm>
#include <cassert>

#include "blowup/errors.hpp"

namespace blowup {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)),
      cache_(std::make_shared<std::optional<std::vector<Polynomial>>>()) {
  gens_.reserve(gens.size());
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (!same_ring(g.ring(), ring_))
      throw ring_mismatch_error("ideal generator from a different ring");
    gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  std::vector<Polynomial> g{Polynomial::constant(ring, 1)};
  return Ideal(std::move(ring), std::move(g));
}

const std::vector<Polynomial>& Ideal::groebner() const {
  if (!cache_) throw kernel_error("ideal has no ring");
  if (!cache_->has_value()) *cache_ = poly_groebner(gens_);
  return **cache_;
}

Polynomial Ideal::normal_form(const Polynomial& f) const {
  if (!same_ring(f.ring(), ring_))
    throw ring_mismatch_error("normal form of a polynomial from another ring");
  return poly_nf(f, groebner());
}

bool Ideal::contains(const Polynomial& f) const {
  return normal_form(f).is_zero();
}

bool Ideal::is_zero_ideal() const { return groebner().empty(); }

bool Ideal::is_unit_ideal() const {
  const auto& gb = groebner();
  return gb.size() == 1 && gb.front().is_unit_constant();
}

bool Ideal::is_homogeneous() const {
  for (const auto& g : gens_) {
    if (!g.weighted_degree().homogeneous) return false;
  }
  return true;
}

std::vector<Monomial> Ideal::initial_gens() const {
  std::vector<Monomial> out;
  for (const auto& g : groebner()) out.push_back(g.lm());
  return out;
}

bool ideal_contains(const Ideal& outer, const Ideal& inner) {
  for (const auto& g : inner.gens()) {
    if (!outer.contains(g)) return false;
  }
  return true;
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  const auto& ga = a.groebner();
  const auto& gb = b.groebner();
  if (ga.size() != gb.size()) return false;
  for (size_t i = 0; i < ga.size(); ++i) {
    if (!(ga[i] == gb[i])) return false;
  }
  return true;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  std::vector<Polynomial> g = a.gens();
  g.insert(g.end(), b.gens().begin(), b.gens().end());
  return Ideal(a.ring(), std::move(g));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  std::vector<Polynomial> g;
  g.reserve(a.gens().size() * b.gens().size());
  for (const auto& f : a.gens()) {
    for (const auto& h : b.gens()) g.push_back(f * h);
  }
  // products repeat combinatorially (powers especially); keep one copy
  std::sort(g.begin(), g.end(), [](const Polynomial& x, const Polynomial& y) {
    return poly_cmp(x, y) < 0;
  });
  g.erase(std::unique(g.begin(), g.end(),
                      [](const Polynomial& x, const Polynomial& y) {
                        return poly_cmp(x, y) == 0;
                      }),
          g.end());
  return Ideal(a.ring(), std::move(g));
}

Ideal ideal_power(const Ideal& a, int j) {
  if (j < 0) throw kernel_error("negative ideal power");
  if (j == 0) return Ideal::unit(a.ring());
  Ideal acc = a;
  for (int k = 1; k < j; ++k) acc = ideal_product(acc, a);
  return acc;
}

namespace {

// ring extended by a fresh elimination tag in front, with a block order that
// makes the tag dominate
struct TagRing {
  RingPtr ring;
  std::vector<int> fwd;  // base var i -> i+1
};

TagRing tag_extension(const RingPtr& base) {
  std::vector<std::string> vars;
  vars.reserve(base->nvars() + 1);
  vars.push_back("@t");
  for (const auto& v : base->vars()) vars.push_back(v);
  std::vector<int> weights;
  weights.push_back(1);
  for (int w : base->weights()) weights.push_back(w);

  OrderBlock first{{0}, OrderKind::grevlex};
  OrderBlock rest;
  rest.kind = OrderKind::grevlex;
  for (int i = 0; i < base->nvars(); ++i) rest.vars.push_back(i + 1);
  MonomialOrder ord = MonomialOrder::block({first, rest});

  TagRing t;
  t.ring = PolyRing::make(base->field(), std::move(vars), std::move(ord),
                          std::move(weights));
  t.fwd.resize(base->nvars());
  for (int i = 0; i < base->nvars(); ++i) t.fwd[i] = i + 1;
  return t;
}

}  // namespace

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring()))
    throw ring_mismatch_error("intersecting ideals from different rings");
  TagRing ext = tag_extension(a.ring());
  Polynomial t = Polynomial::variable(ext.ring, 0);
  Polynomial one_minus_t = Polynomial::constant(ext.ring, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.best_gens())
    gens.push_back(t * map_vars(f, ext.ring, ext.fwd));
  for (const auto& g : b.best_gens())
    gens.push_back(one_minus_t * map_vars(g, ext.ring, ext.fwd));
  Ideal J(ext.ring, std::move(gens));

  std::vector<int> back(ext.ring->nvars());
  back[0] = -1;
  for (int i = 0; i < a.ring()->nvars(); ++i) back[i + 1] = i;
  std::vector<Polynomial> out;
  for (const auto& g : J.groebner()) {
    if ((g.lm().mask & 1u) == 0) out.push_back(map_vars(g, a.ring(), back));
  }
  return Ideal(a.ring(), std::move(out));
}

Ideal ideal_colon(const Ideal& a, const Polynomial& g) {
  if (g.is_zero()) throw kernel_error("colon by the zero polynomial");
  Ideal ig(a.ring(), {g});
  Ideal inter = ideal_intersect(a, ig);
  std::vector<Polynomial> out;
  for (const auto& h : inter.groebner()) {
    auto d = divide_single(h, g);
    assert(d.remainder.is_zero() && "element of I cap (g) not divisible by g");
    out.push_back(std::move(d.quotient));
  }
  return Ideal(a.ring(), std::move(out));
}

Ideal ideal_colon(const Ideal& a, const Ideal& b) {
  if (b.gens().empty()) return Ideal::unit(a.ring());
  bool first = true;
  Ideal acc;
  for (const auto& g : b.gens()) {
    Ideal c = ideal_colon(a, g);
    if (first) {
      acc = std::move(c);
      first = false;
    } else {
      acc = ideal_intersect(acc, c);
    }
  }
  return acc;
}

Ideal ideal_saturate(const Ideal& a, const Polynomial& f, int cap) {
  Ideal cur = a;
  for (int k = 0; k < cap; ++k) {
    Ideal next = ideal_colon(cur, f);
    if (ideal_equal(cur, next)) return cur;
    cur = std::move(next);
  }
  throw saturation_limit_error(
      "saturation did not stabilize within " + std::to_string(cap) +
      " colon steps");
}

int krull_dimension(const Ideal& I) {
  if (I.is_unit_ideal()) return -1;
  const int n = I.ring()->nvars();
  assert(n < 25 && "dimension by subset search needs small rings");
  std::vector<uint32_t> lead_masks;
  for (const auto& g : I.groebner()) lead_masks.push_back(g.lm().mask);
  int best = 0;
  // A variable subset U is independent iff no initial generator is
  // supported entirely inside U.
  for (uint32_t u = 0; u < (1u << n); ++u) {
    int sz = __builtin_popcount(u);
    if (sz <= best) continue;
    bool ok = true;
    for (uint32_t m : lead_masks) {
      if ((m & ~u) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) best = sz;
  }
  return best;
}

namespace {
// count monomials of the given (bi)degree with no initial generator
// dividing them
void count_standard(const PolyRing& R, const std::vector<Monomial>& lead,
                    int i, int wleft, std::optional<int> yleft,
                    std::vector<uint16_t>& cur, long& acc) {
  // prune: if some lead divides the partial vector already, no completion
  // escapes it only if lead uses variables >= i... conservative check below
  for (const auto& l : lead) {
    bool div = true;
    for (int v = 0; v < i; ++v) {
      if (l.e[v] > cur[v]) {
        div = false;
        break;
      }
    }
    if (div) {
      // all remaining exponents of l must be zero for guaranteed division
      bool tail_zero = true;
      for (int v = i; v < R.nvars(); ++v) {
        if (l.e[v]) {
          tail_zero = false;
          break;
        }
      }
      if (tail_zero) return;  // whole subtree divisible
    }
  }
  const int n = R.nvars();
  if (i == n) {
    if (wleft != 0 || (yleft && *yleft != 0)) return;
    // final divisibility check
    for (const auto& l : lead) {
      bool div = true;
      for (int v = 0; v < n; ++v) {
        if (l.e[v] > cur[v]) {
          div = false;
          break;
        }
      }
      if (div) return;
    }
    ++acc;
    return;
  }
  const int w = R.weights()[i];
  const int g = R.grading2().empty() ? 0 : R.grading2()[i];
  int emax = wleft / w;
  if (yleft && g > 0) emax = std::min(emax, *yleft / g);
  for (int e = 0; e <= emax; ++e) {
    cur[i] = static_cast<uint16_t>(e);
    count_standard(R, lead, i + 1, wleft - e * w,
                   yleft ? std::optional<int>(*yleft - e * g) : yleft, cur,
                   acc);
  }
  cur[i] = 0;
}
}  // namespace

long quotient_piece_dim(const Ideal& I, int w, std::optional<int> y) {
  const PolyRing& R = *I.ring();
  if (w < 0 || (y && *y < 0)) return 0;
  if (!R.has_grading2() && y && *y != 0) return 0;
  auto lead = I.initial_gens();
  std::vector<uint16_t> cur(R.nvars(), 0);
  long acc = 0;
  count_standard(R, lead, 0, w, R.has_grading2() ? y : std::nullopt, cur,
                 acc);
  return acc;
}

QuotientRing::QuotientRing(RingPtr ambient, Ideal defining)
    : ambient_(std::move(ambient)), defining_(std::move(defining)) {
  if (!same_ring(defining_.ring(), ambient_))
    throw ring_mismatch_error("defining ideal lives in a different ring");
  if (!defining_.is_homogeneous())
    throw kernel_error("defining ideal must be homogeneous");
  if (defining_.is_unit_ideal())
    throw kernel_error("defining ideal is the unit ideal (zero ring)");
}

QuotientRing QuotientRing::whole(RingPtr ambient) {
  Ideal z = Ideal::zero(ambient);
  return QuotientRing(std::move(ambient), std::move(z));
}

Ideal QuotientRing::lift(const Ideal& I) const {
  return ideal_sum(I, defining_);
}

Ideal QuotientRing::lift(const std::vector<Polynomial>& gens) const {
  return lift(Ideal(ambient_, gens));
}

Polynomial QuotientRing::reduce(const Polynomial& f) const {
  return defining_.normal_form(f);
}

bool QuotientRing::is_zero_in_R(const Polynomial& f) const {
  return reduce(f).is_zero();
}

bool QuotientRing::equal_in_R(const Ideal& I, const Ideal& J) const {
  return ideal_equal(lift(I), lift(J));
}

int QuotientRing::dim() const { return krull_dimension(defining_); }

}  // namespace blowup

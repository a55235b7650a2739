#include "blowup/poly.hpp"

#include <algorithm>
#include <cassert>

#include "blowup/errors.hpp"

namespace blowup {

void check_same_ring(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring(), b.ring()))
    throw ring_mismatch_error("polynomials live in different rings");
}

Polynomial Polynomial::constant(RingPtr ring, uint32_t c) {
  Polynomial f(ring);
  c %= ring->field().p();
  if (c) f.t_.push_back({ring->one(), c});
  return f;
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, uint32_t c) {
  Polynomial f(ring);
  c %= ring->field().p();
  if (c) f.t_.push_back({std::move(m), c});
  return f;
}

Polynomial Polynomial::variable(RingPtr ring, int i) {
  Monomial m = ring->var(i);
  return term(std::move(ring), std::move(m), 1);
}

Polynomial Polynomial::from_sorted(RingPtr ring, std::vector<Term> terms) {
  Polynomial f(std::move(ring));
  f.t_ = std::move(terms);
  return f;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const PolyRing& R = *ring;
  std::sort(terms.begin(), terms.end(), [&R](const Term& a, const Term& b) {
    return R.cmp(a.m, b.m) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    uint32_t c = t.c % R.field().p();
    if (!c) continue;
    if (!out.empty() && out.back().m == t.m) {
      out.back().c = R.field().add(out.back().c, c);
      if (out.back().c == 0) out.pop_back();
    } else {
      out.push_back({std::move(t.m), c});
    }
  }
  return from_sorted(std::move(ring), std::move(out));
}

namespace {
// merged sum a + c*b for a scalar c
std::vector<Term> merge_axpy(const PolyRing& R, const std::vector<Term>& a,
                             const std::vector<Term>& b, uint32_t c) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  const auto& F = R.field();
  while (i < a.size() && j < b.size()) {
    int r = R.cmp(a[i].m, b[j].m);
    if (r > 0) {
      out.push_back(a[i++]);
    } else if (r < 0) {
      uint32_t v = F.mul(c, b[j].c);
      if (v) out.push_back({b[j].m, v});
      ++j;
    } else {
      uint32_t v = F.add(a[i].c, F.mul(c, b[j].c));
      if (v) out.push_back({a[i].m, v});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    uint32_t v = F.mul(c, b[j].c);
    if (v) out.push_back({b[j].m, v});
  }
  return out;
}
}  // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_ring(*this, o);
  return from_sorted(ring_, merge_axpy(*ring_, t_, o.t_, 1));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_same_ring(*this, o);
  return from_sorted(ring_, merge_axpy(*ring_, t_, o.t_,
                                       ring_->field().p() - 1));
}

Polynomial Polynomial::operator-() const { return scaled(ring_->field().p() - 1); }

Polynomial Polynomial::scaled(uint32_t c) const {
  const auto& F = ring_->field();
  c %= F.p();
  if (c == 0) return zero(ring_);
  std::vector<Term> out;
  out.reserve(t_.size());
  for (const auto& t : t_) out.push_back({t.m, F.mul(t.c, c)});
  return from_sorted(ring_, std::move(out));
}

Polynomial Polynomial::times_term(const Monomial& m, uint32_t c) const {
  const auto& F = ring_->field();
  c %= F.p();
  if (c == 0) return zero(ring_);
  std::vector<Term> out;
  out.reserve(t_.size());
  for (const auto& t : t_)
    out.push_back({ring_->mul(t.m, m), F.mul(t.c, c)});
  return from_sorted(ring_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_ring(*this, o);
  if (is_zero() || o.is_zero()) return zero(ring_);
  std::vector<Term> out;
  out.reserve(t_.size() * o.t_.size());
  const auto& F = ring_->field();
  for (const auto& a : t_) {
    for (const auto& b : o.t_) {
      out.push_back({ring_->mul(a.m, b.m), F.mul(a.c, b.c)});
    }
  }
  return from_terms(ring_, std::move(out));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_)) return false;
  if (t_.size() != o.t_.size()) return false;
  for (size_t i = 0; i < t_.size(); ++i) {
    if (t_[i].c != o.t_[i].c || !(t_[i].m == o.t_[i].m)) return false;
  }
  return true;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  if (lc() == 1) return *this;
  return scaled(ring_->field().inv(lc()));
}

DegreeInfo Polynomial::weighted_degree() const {
  DegreeInfo d;
  if (is_zero()) {
    d.is_zero = true;
    return d;
  }
  d.homogeneous = true;
  d.degree = t_.front().m.deg;
  for (const auto& t : t_) {
    if (t.m.deg != d.degree) {
      d.homogeneous = false;
      d.degree = std::max(d.degree, static_cast<int>(t.m.deg));
    }
  }
  return d;
}

bool Polynomial::bidegree(int* w, int* y) const {
  if (is_zero()) return false;
  int w0 = t_.front().m.deg;
  int y0 = ring_->deg2(t_.front().m);
  for (const auto& t : t_) {
    if (t.m.deg != w0 || ring_->deg2(t.m) != y0) return false;
  }
  if (w) *w = w0;
  if (y) *y = y0;
  return true;
}

bool Polynomial::is_unit_constant() const {
  return t_.size() == 1 && t_.front().m.is_one();
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (const auto& t : t_) {
    if (!s.empty()) s += " + ";
    if (t.m.is_one()) {
      s += std::to_string(t.c);
    } else if (t.c == 1) {
      s += ring_->to_string(t.m);
    } else {
      s += std::to_string(t.c) + "*" + ring_->to_string(t.m);
    }
  }
  return s;
}

int poly_cmp(const Polynomial& a, const Polynomial& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  const PolyRing& R = *a.ring();
  for (size_t i = 0; i < a.size(); ++i) {
    int r = R.cmp(a.terms()[i].m, b.terms()[i].m);
    if (r != 0) return r;
    if (a.terms()[i].c != b.terms()[i].c)
      return a.terms()[i].c < b.terms()[i].c ? -1 : 1;
  }
  return 0;
}

Polynomial map_vars(const Polynomial& f, const RingPtr& target,
                    std::span<const int> var_map) {
  assert(var_map.size() == static_cast<size_t>(f.ring()->nvars()));
  if (!(f.ring()->field() == target->field()))
    throw ring_mismatch_error("variable map across different fields");
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<uint16_t> e(target->nvars(), 0);
    for (size_t i = 0; i < var_map.size(); ++i) {
      if (t.m.e[i] == 0) continue;
      assert(var_map[i] >= 0 && "mapped variable must exist in target");
      e[var_map[i]] = static_cast<uint16_t>(e[var_map[i]] + t.m.e[i]);
    }
    out.push_back({target->mono(std::move(e)), t.c});
  }
  return Polynomial::from_terms(target, std::move(out));
}

Polynomial substitute(const Polynomial& f, const RingPtr& target,
                      std::span<const Polynomial> images) {
  assert(images.size() == static_cast<size_t>(f.ring()->nvars()));
  Polynomial acc = Polynomial::zero(target);
  for (const auto& t : f.terms()) {
    Polynomial prod = Polynomial::constant(target, t.c);
    for (size_t i = 0; i < images.size(); ++i) {
      if (t.m.e[i] == 0) continue;
      prod = prod * poly_pow(images[i], t.m.e[i]);
      if (prod.is_zero()) break;
    }
    acc = acc + prod;
  }
  return acc;
}

Polynomial poly_pow(const Polynomial& f, int e) {
  assert(e >= 0);
  Polynomial acc = Polynomial::constant(f.ring(), 1);
  Polynomial base = f;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

}  // namespace blowup

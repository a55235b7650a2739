#include "blowup/module.hpp"

#include <algorithm>
#include <cassert>

#include "blowup/errors.hpp"

namespace blowup {

MVec MVec::from_sorted(RingPtr ring, int rank, std::vector<MTerm> terms) {
  MVec v(std::move(ring), rank);
  v.t_ = std::move(terms);
  return v;
}

MVec MVec::from_terms(RingPtr ring, int rank, std::vector<MTerm> terms) {
  const PolyRing& R = *ring;
  std::sort(terms.begin(), terms.end(), [&R](const MTerm& a, const MTerm& b) {
    return mterm_cmp(R, a, b) > 0;
  });
  std::vector<MTerm> out;
  out.reserve(terms.size());
  const auto& F = R.field();
  for (auto& t : terms) {
    uint32_t c = t.c % F.p();
    if (!c) continue;
    if (!out.empty() && out.back().comp == t.comp && out.back().m == t.m) {
      out.back().c = F.add(out.back().c, c);
      if (out.back().c == 0) out.pop_back();
    } else {
      out.push_back({t.comp, std::move(t.m), c});
    }
  }
  return from_sorted(std::move(ring), rank, std::move(out));
}

MVec MVec::unit(RingPtr ring, int rank, int comp) {
  MVec v(ring, rank);
  v.t_.push_back({comp, ring->one(), 1});
  return v;
}

MVec MVec::embed(const Polynomial& f, int rank, int comp) {
  MVec v(f.ring(), rank);
  v.t_.reserve(f.size());
  for (const auto& t : f.terms()) v.t_.push_back({comp, t.m, t.c});
  return v;
}

namespace detail {
std::vector<MTerm> axpy_terms(const PolyRing& R, std::span<const MTerm> a,
                              uint32_t c, const Monomial* shift,
                              std::span<const MTerm> b) {
  std::vector<MTerm> out;
  out.reserve(a.size() + b.size());
  const auto& F = R.field();
  size_t i = 0, j = 0;
  auto bterm = [&](size_t k) -> MTerm {
    const MTerm& t = b[k];
    return {t.comp, shift ? R.mul(*shift, t.m) : t.m, F.mul(c, t.c)};
  };
  while (i < a.size() && j < b.size()) {
    MTerm tb = bterm(j);
    int r = mterm_cmp(R, a[i], tb);
    if (r > 0) {
      out.push_back(a[i++]);
    } else if (r < 0) {
      if (tb.c) out.push_back(std::move(tb));
      ++j;
    } else {
      uint32_t v = F.add(a[i].c, tb.c);
      if (v) out.push_back({a[i].comp, a[i].m, v});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    MTerm tb = bterm(j);
    if (tb.c) out.push_back(std::move(tb));
  }
  return out;
}
}  // namespace detail

MVec MVec::operator+(const MVec& o) const {
  assert(rank_ == o.rank_);
  return from_sorted(ring_, rank_,
                     detail::axpy_terms(*ring_, t_, 1, nullptr, o.t_));
}

MVec MVec::operator-(const MVec& o) const {
  assert(rank_ == o.rank_);
  return from_sorted(ring_, rank_,
                     detail::axpy_terms(*ring_, t_, ring_->field().p() - 1,
                                        nullptr, o.t_));
}

MVec MVec::axpy(const MVec& a, uint32_t c, const Monomial& m, const MVec& b) {
  assert(a.rank_ == b.rank_);
  return from_sorted(a.ring_, a.rank_,
                     detail::axpy_terms(*a.ring_, a.t_, c, &m, b.t_));
}

bool MVec::operator==(const MVec& o) const {
  if (rank_ != o.rank_ || t_.size() != o.t_.size()) return false;
  for (size_t i = 0; i < t_.size(); ++i) {
    if (t_[i].comp != o.t_[i].comp || t_[i].c != o.t_[i].c ||
        !(t_[i].m == o.t_[i].m))
      return false;
  }
  return true;
}

MVec MVec::scaled(uint32_t c) const {
  const auto& F = ring_->field();
  c %= F.p();
  if (!c) return MVec(ring_, rank_);
  std::vector<MTerm> out;
  out.reserve(t_.size());
  for (const auto& t : t_) out.push_back({t.comp, t.m, F.mul(t.c, c)});
  return from_sorted(ring_, rank_, std::move(out));
}

MVec MVec::times_term(const Monomial& m, uint32_t c) const {
  const auto& F = ring_->field();
  c %= F.p();
  if (!c) return MVec(ring_, rank_);
  std::vector<MTerm> out;
  out.reserve(t_.size());
  for (const auto& t : t_)
    out.push_back({t.comp, ring_->mul(t.m, m), F.mul(t.c, c)});
  return from_sorted(ring_, rank_, std::move(out));
}

MVec MVec::monic() const {
  if (is_zero() || lt().c == 1) return *this;
  return scaled(ring_->field().inv(lt().c));
}

Polynomial MVec::component(int comp) const {
  std::vector<Term> out;
  for (const auto& t : t_) {
    if (t.comp == comp) out.push_back({t.m, t.c});
  }
  return Polynomial::from_sorted(ring_, std::move(out));
}

MVec MVec::slice_tail(int lo) const {
  std::vector<MTerm> out;
  for (const auto& t : t_) {
    if (t.comp >= lo) out.push_back({t.comp - lo, t.m, t.c});
  }
  return from_sorted(ring_, rank_ - lo, std::move(out));
}

bool MVec::supported_below(int comp) const {
  for (const auto& t : t_) {
    if (t.comp >= comp) return false;
  }
  return true;
}

std::string MVec::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (const auto& t : t_) {
    if (!s.empty()) s += " + ";
    std::string mono = ring_->to_string(t.m);
    if (t.c != 1) mono = std::to_string(t.c) + "*" + mono;
    s += mono + "*e" + std::to_string(t.comp);
  }
  return s;
}

}  // namespace blowup

#include "blowup/ring.hpp"

#include <algorithm>
#include <cassert>

#include "blowup/errors.hpp"

namespace blowup {

bool MonomialOrder::operator==(const MonomialOrder& o) const {
  if (kind != o.kind) return false;
  if (kind != OrderKind::block) return true;
  if (blocks.size() != o.blocks.size()) return false;
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].kind != o.blocks[i].kind ||
        blocks[i].vars != o.blocks[i].vars)
      return false;
  }
  return true;
}

RingPtr PolyRing::make(PrimeField field, std::vector<std::string> vars,
                       MonomialOrder order, std::vector<int> weights,
                       std::vector<int> grading2) {
  auto r = std::shared_ptr<PolyRing>(new PolyRing());
  const int n = static_cast<int>(vars.size());
  if (n == 0 || n > kMaxVars) {
    throw kernel_error("ring must have between 1 and " +
                       std::to_string(kMaxVars) + " variables");
  }
  if (weights.empty()) weights.assign(n, 1);
  if (static_cast<int>(weights.size()) != n)
    throw kernel_error("weight count does not match variable count");
  for (int w : weights) {
    if (w <= 0) throw kernel_error("weights must be strictly positive");
  }
  if (grading2.empty()) {
    grading2.assign(n, 0);
    r->has_g2_ = false;
  } else {
    if (static_cast<int>(grading2.size()) != n)
      throw kernel_error("second grading size does not match variable count");
    for (int g : grading2) {
      if (g < 0) throw kernel_error("second grading must be non-negative");
    }
    r->has_g2_ = true;
  }
  if (order.kind == OrderKind::block) {
    std::vector<bool> seen(n, false);
    for (const auto& b : order.blocks) {
      if (b.kind == OrderKind::block)
        throw kernel_error("block sub-orders cannot be nested");
      for (int v : b.vars) {
        if (v < 0 || v >= n || seen[v])
          throw kernel_error("block order must partition the variables");
        seen[v] = true;
      }
    }
    for (bool s : seen) {
      if (!s) throw kernel_error("block order must cover all variables");
    }
  }
  r->field_ = field;
  r->vars_ = std::move(vars);
  r->weights_ = std::move(weights);
  r->grading2_ = std::move(grading2);
  r->order_ = std::move(order);
  return r;
}

Monomial PolyRing::one() const { return Monomial{}; }

Monomial PolyRing::mono(std::vector<uint16_t> exps) const {
  assert(static_cast<int>(exps.size()) == nvars());
  Monomial m;
  for (int i = 0; i < nvars(); ++i) {
    m.e[i] = exps[i];
    if (m.e[i]) {
      m.deg += weights_[i] * m.e[i];
      m.mask |= (1u << i);
    }
  }
  return m;
}

Monomial PolyRing::var(int i, uint16_t e) const {
  std::vector<uint16_t> exps(nvars(), 0);
  exps[i] = e;
  return mono(std::move(exps));
}

Monomial PolyRing::mul(const Monomial& a, const Monomial& b) const {
  Monomial m;
  const int n = nvars();
  for (int i = 0; i < n; ++i) m.e[i] = static_cast<uint16_t>(a.e[i] + b.e[i]);
  m.deg = a.deg + b.deg;
  m.mask = a.mask | b.mask;
  return m;
}

Monomial PolyRing::div(const Monomial& a, const Monomial& b) const {
  Monomial m;
  const int n = nvars();
  m.deg = a.deg - b.deg;
  for (int i = 0; i < n; ++i) {
    assert(a.e[i] >= b.e[i]);
    m.e[i] = static_cast<uint16_t>(a.e[i] - b.e[i]);
    if (m.e[i]) m.mask |= (1u << i);
  }
  return m;
}

Monomial PolyRing::lcm(const Monomial& a, const Monomial& b) const {
  Monomial m;
  const int n = nvars();
  for (int i = 0; i < n; ++i) {
    m.e[i] = std::max(a.e[i], b.e[i]);
    if (m.e[i]) {
      m.deg += weights_[i] * m.e[i];
      m.mask |= (1u << i);
    }
  }
  return m;
}

bool PolyRing::divides(const Monomial& a, const Monomial& b) {
  if ((a.mask & ~b.mask) != 0) return false;
  if (a.deg > b.deg) return false;
  for (int i = 0; i < Monomial::kMaxVars; ++i) {
    if (a.e[i] > b.e[i]) return false;
  }
  return true;
}

int PolyRing::deg2(const Monomial& m) const {
  if (!has_g2_) return 0;
  int d = 0;
  for (int i = 0; i < nvars(); ++i) d += grading2_[i] * m.e[i];
  return d;
}

int PolyRing::cmp_grevlex_all(const Monomial& a, const Monomial& b) const {
  if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
  for (int i = nvars() - 1; i >= 0; --i) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  }
  return 0;
}

int PolyRing::cmp_in_block(const Monomial& a, const Monomial& b,
                           const OrderBlock& blk) const {
  if (blk.kind == OrderKind::lex) {
    for (int v : blk.vars) {
      if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? -1 : 1;
    }
    return 0;
  }
  int da = 0, db = 0;
  for (int v : blk.vars) {
    da += weights_[v] * a.e[v];
    db += weights_[v] * b.e[v];
  }
  if (da != db) return da < db ? -1 : 1;
  for (size_t i = blk.vars.size(); i-- > 0;) {
    int v = blk.vars[i];
    if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? -1 : 1;
  }
  return 0;
}

int PolyRing::cmp(const Monomial& a, const Monomial& b) const {
  switch (order_.kind) {
    case OrderKind::grevlex:
      return cmp_grevlex_all(a, b);
    case OrderKind::lex:
      for (int i = 0; i < nvars(); ++i) {
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
      }
      return 0;
    case OrderKind::block:
      for (const auto& blk : order_.blocks) {
        int r = cmp_in_block(a, b, blk);
        if (r != 0) return r;
      }
      return 0;
  }
  return 0;
}

std::string PolyRing::to_string(const Monomial& m) const {
  if (m.is_one()) return "1";
  std::string s;
  for (int i = 0; i < nvars(); ++i) {
    if (!m.e[i]) continue;
    if (!s.empty()) s += "*";
    s += vars_[i];
    if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
  }
  return s;
}

bool PolyRing::same_structure(const PolyRing& o) const {
  return field_ == o.field_ && vars_ == o.vars_ && weights_ == o.weights_ &&
         grading2_ == o.grading2_ && order_ == o.order_;
}

namespace {
void enumerate_rec(const PolyRing& r, int i, int wleft,
                   std::optional<int> yleft, std::vector<uint16_t>& cur,
                   std::vector<Monomial>& out) {
  const int n = r.nvars();
  if (i == n) {
    if (wleft == 0 && (!yleft || *yleft == 0))
      out.push_back(r.mono(cur));
    return;
  }
  const int w = r.weights()[i];
  const int g = r.grading2().empty() ? 0 : r.grading2()[i];
  int emax = wleft / w;
  if (yleft && g > 0) emax = std::min(emax, *yleft / g);
  for (int e = 0; e <= emax; ++e) {
    cur[i] = static_cast<uint16_t>(e);
    enumerate_rec(r, i + 1, wleft - e * w,
                  yleft ? std::optional<int>(*yleft - e * g) : yleft, cur,
                  out);
  }
  cur[i] = 0;
}
}  // namespace

std::vector<Monomial> PolyRing::monomials_of_degree(
    int w, std::optional<int> y) const {
  std::vector<Monomial> out;
  if (w < 0 || (y && *y < 0)) return out;
  if (!has_g2_ && y && *y != 0) return out;
  std::vector<uint16_t> cur(nvars(), 0);
  enumerate_rec(*this, 0, w, has_g2_ ? y : std::nullopt, cur, out);
  return out;
}

}  // namespace blowup

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "blowup/poly.hpp"

namespace blowup {

// Term of a free-module element: component index plus a ring term. Ordered
// position-over-term: lower component dominates, ties broken by the ring
// order.
struct MTerm {
  int comp = 0;
  Monomial m;
  uint32_t c = 0;
};

class MVec {
 public:
  MVec() = default;
  MVec(RingPtr ring, int rank) : ring_(std::move(ring)), rank_(rank) {}

  static MVec from_terms(RingPtr ring, int rank, std::vector<MTerm> terms);
  static MVec from_sorted(RingPtr ring, int rank, std::vector<MTerm> terms);
  static MVec unit(RingPtr ring, int rank, int comp);  // e_comp
  static MVec embed(const Polynomial& f, int rank, int comp);

  const RingPtr& ring() const { return ring_; }
  int rank() const { return rank_; }
  const std::vector<MTerm>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  const MTerm& lt() const { return t_.front(); }

  MVec operator+(const MVec& o) const;
  MVec operator-(const MVec& o) const;
  bool operator==(const MVec& o) const;
  MVec scaled(uint32_t c) const;
  MVec times_term(const Monomial& m, uint32_t c) const;
  MVec monic() const;

  // a + c * (m * b), the reduction step workhorse
  static MVec axpy(const MVec& a, uint32_t c, const Monomial& m,
                   const MVec& b);

  Polynomial component(int comp) const;
  // keep components in [lo, rank) and shift them down by lo
  MVec slice_tail(int lo) const;
  bool supported_below(int comp) const;  // all terms have comp < given

  std::string to_string() const;

 private:
  RingPtr ring_;
  int rank_ = 0;
  std::vector<MTerm> t_;
};

// POT comparison of module terms: +1 when a > b.
inline int mterm_cmp(const PolyRing& R, const MTerm& a, const MTerm& b) {
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return R.cmp(a.m, b.m);
}

namespace detail {
// merged a + c * (shift * b); shift may be null
std::vector<MTerm> axpy_terms(const PolyRing& R, std::span<const MTerm> a,
                              uint32_t c, const Monomial* shift,
                              std::span<const MTerm> b);
}

}  // namespace blowup

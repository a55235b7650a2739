#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "blowup/groebner.hpp"
#include "blowup/poly.hpp"

namespace blowup {

// Ideal with a lazily computed, write-once reduced Groebner basis cache.
// Values are immutable after construction; the cache is shared so copies
// reuse one basis computation.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> gens);
  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }

  const std::vector<Polynomial>& groebner() const;
  bool gb_cached() const { return cache_ && cache_->has_value(); }
  // cached basis when available, raw generators otherwise; the cheapest
  // correct generating set for feeding other operations
  const std::vector<Polynomial>& best_gens() const {
    return gb_cached() ? groebner() : gens_;
  }

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const;
  bool is_zero_ideal() const;
  bool is_unit_ideal() const;
  bool is_homogeneous() const;  // every generator weight-homogeneous

  // leading monomials of the reduced basis (minimal generators of the
  // initial ideal)
  std::vector<Monomial> initial_gens() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  // shared write-once cache: optional engaged after first computation
  std::shared_ptr<std::optional<std::vector<Polynomial>>> cache_;
};

bool ideal_equal(const Ideal& a, const Ideal& b);
bool ideal_contains(const Ideal& outer, const Ideal& inner);  // inner subset

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, int j);  // j == 0 gives the unit ideal
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
Ideal ideal_colon(const Ideal& a, const Polynomial& g);
Ideal ideal_colon(const Ideal& a, const Ideal& b);
// (a : f^infinity); stabilization detected by basis equality, capped.
Ideal ideal_saturate(const Ideal& a, const Polynomial& f, int cap = 50);

// Krull dimension of ring/I via independent variable subsets modulo the
// initial ideal; -1 for the unit ideal.
int krull_dimension(const Ideal& I);

// Number of standard monomials of the quotient by I in weighted degree w
// (and second-grading degree y when given): the Hilbert function of ring/I.
long quotient_piece_dim(const Ideal& I, int w, std::optional<int> y = {});

// Ambient graded quotient ring R = ambient / defining. All ideals of R are
// represented by generators in the ambient ring; operations lift by adding
// the defining generators.
class QuotientRing {
 public:
  QuotientRing() = default;
  QuotientRing(RingPtr ambient, Ideal defining);
  static QuotientRing whole(RingPtr ambient);

  const RingPtr& ambient() const { return ambient_; }
  const Ideal& defining() const { return defining_; }
  bool is_polynomial_ring() const { return defining_.gens().empty(); }

  Ideal lift(const Ideal& I) const;  // I + defining
  Ideal lift(const std::vector<Polynomial>& gens) const;
  Polynomial reduce(const Polynomial& f) const;  // normal form mod defining
  bool is_zero_in_R(const Polynomial& f) const;
  bool equal_in_R(const Ideal& I, const Ideal& J) const;
  int dim() const;  // Krull dimension of R

 private:
  RingPtr ambient_;
  Ideal defining_;
};

}  // namespace blowup

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "blowup/ring.hpp"

namespace blowup {

struct Term {
  Monomial m;
  uint32_t c = 0;  // in [1, p)
};

struct DegreeInfo {
  bool is_zero = false;
  bool homogeneous = false;
  int degree = 0;  // max term degree when not homogeneous
};

// Sparse polynomial: terms strictly descending in the ring order, no zero
// coefficients stored.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, uint32_t c);
  static Polynomial term(RingPtr ring, Monomial m, uint32_t c);
  static Polynomial variable(RingPtr ring, int i);
  // Sorts, merges equal monomials, drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }

  const Monomial& lm() const { return t_.front().m; }
  uint32_t lc() const { return t_.front().c; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  bool operator==(const Polynomial& o) const;

  Polynomial scaled(uint32_t c) const;
  Polynomial times_term(const Monomial& m, uint32_t c) const;
  Polynomial monic() const;

  DegreeInfo weighted_degree() const;
  bool is_homogeneous() const { return weighted_degree().homogeneous; }
  // Homogeneous in both gradings; fills the bidegree when so.
  bool bidegree(int* w, int* y) const;
  // Nonzero scalar (degree-0 unit) test.
  bool is_unit_constant() const;

  std::string to_string() const;

  // internal: terms already strictly descending, no zeros
  static Polynomial from_sorted(RingPtr ring, std::vector<Term> terms);

 private:
  RingPtr ring_;
  std::vector<Term> t_;
};

void check_same_ring(const Polynomial& a, const Polynomial& b);

// Deterministic total order on polynomials of one ring (term count, then
// termwise monomial/coefficient comparison). Used for canonical generator
// lists, not for any mathematical meaning.
int poly_cmp(const Polynomial& a, const Polynomial& b);

// Reinterpret f in `target`, sending variable i to variable var_map[i].
// var_map[i] == -1 asserts the variable does not occur.
Polynomial map_vars(const Polynomial& f, const RingPtr& target,
                    std::span<const int> var_map);

// Substitute images[i] for variable i (general ring map over the same
// prime field).
Polynomial substitute(const Polynomial& f, const RingPtr& target,
                      std::span<const Polynomial> images);

Polynomial poly_pow(const Polynomial& f, int e);

}  // namespace blowup

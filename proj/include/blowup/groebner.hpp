#pragma once

#include <span>
#include <vector>

#include "blowup/module.hpp"

namespace blowup {

// Buchberger engine over free modules with the position-over-term order.
// Ideals are the rank-1 case. Pair management uses the Gebauer-Moeller
// criteria with normal (smallest-lcm) selection; the product criterion is
// applied only to pairs of single-component elements, where it is valid.

// Reduced, auto-reduced, monic basis sorted ascending by leading term.
std::vector<MVec> module_groebner(std::vector<MVec> gens);

// Full normal form against an arbitrary basis (unique remainder when the
// basis is a reduced Groebner basis).
MVec module_nf(const MVec& f, std::span<const MVec> basis);

// Generators of { v in R^a : M v lies in the module spanned by relations },
// where cols[j] (each of length target_rank) is the j-th column of M and
// relations live in R^target_rank. The result is a Groebner basis of the
// kernel in R^a. Computed by a position-over-term elimination basis on
// R^(target_rank + a).
std::vector<MVec> kernel_mod(const std::vector<std::vector<Polynomial>>& cols,
                             std::span<const MVec> relations, RingPtr ring,
                             int target_rank);

// Generators of the syzygy module of a module Groebner basis, one per
// leading-component pair (division syzygies; exact two-term relations for
// coprime single-component pairs).
std::vector<MVec> generating_syzygies(const std::vector<MVec>& basis);

// Polynomial-level conveniences (rank-1 wrappers).
std::vector<Polynomial> poly_groebner(const std::vector<Polynomial>& gens);
Polynomial poly_nf(const Polynomial& f, std::span<const Polynomial> basis);

// Quotient and remainder of f on division by a single g: f = q*g + r with no
// term of r divisible by lm(g). Used for exact division (r must vanish).
struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};
DivisionResult divide_single(const Polynomial& f, const Polynomial& g);

}  // namespace blowup

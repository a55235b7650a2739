#pragma once

#include "blowup/homology.hpp"
#include "blowup/ideal.hpp"

namespace blowup {

// Presentations of the blow-up algebras of (R, I): the extended polynomial
// ring A = ambient(S)[@y1..@yn] carries weight(@yi) = deg f_i and a second
// grading counting @y-degree. rees_full is the kernel of A -> R[t] sending
// @yi to f_i t; the associated graded ring and the fiber cone are the
// quotients by I and by the irrelevant maximal ideal of S.
struct BlowupPresentation {
  QuotientRing base;
  std::vector<Polynomial> ideal_gens;  // f_1..f_n in the ambient of base
  RingPtr A;
  std::vector<int> s_to_a;  // ambient variable i -> i in A
  int n_y = 0;

  Ideal rees_full;    // defining ideal of the Rees algebra R[It] in A
  Ideal g_ideal;      // defining ideal of G = gr_I(R) in A
  Ideal fiber_ideal;  // defining ideal of the fiber cone G (x) k in A

  int yvar(int k) const { return base.ambient()->nvars() + k; }
  Polynomial y_poly(int k) const { return Polynomial::variable(A, yvar(k)); }
  std::vector<int> yvar_indices() const;

  ModuleMap g_presentation() const;     // cyclic A-module presentation of G
  ModuleMap rees_presentation() const;  // cyclic presentation of R[It]
  ModuleMap fiber_presentation() const;
};

// Constructs all three presentations. Generators must be weight-homogeneous
// and nonzero in R. Every Rees generator is verified bihomogeneous and to
// vanish under the substitution @yi -> f_i t in R[t] (exact check).
BlowupPresentation make_blowup(QuotientRing base,
                               std::vector<Polynomial> ideal_gens);

int fiber_dim(const BlowupPresentation& b);

// Hilbert function of the @y-degree-j piece of G in weighted degrees
// 0..wmax.
std::vector<long> g_piece_hilbert(const BlowupPresentation& b, int j,
                                  int wmax);
// Hilbert function of I^j/I^{j+1} over R in the same window, computed on
// the base side (independently of the Rees presentation).
std::vector<long> power_piece_hilbert(const QuotientRing& base,
                                      const Ideal& power_j,
                                      const Ideal& power_j1, int wmax);

}  // namespace blowup

#include "blowup/blowup_algebra.hpp"

#include <cassert>

#include "blowup/errors.hpp"

namespace blowup {

std::vector<int> BlowupPresentation::yvar_indices() const {
  std::vector<int> out;
  for (int k = 0; k < n_y; ++k) out.push_back(yvar(k));
  return out;
}

ModuleMap BlowupPresentation::g_presentation() const {
  return ModuleMap::cyclic(A, g_ideal.groebner());
}

ModuleMap BlowupPresentation::rees_presentation() const {
  return ModuleMap::cyclic(A, rees_full.groebner());
}

ModuleMap BlowupPresentation::fiber_presentation() const {
  return ModuleMap::cyclic(A, fiber_ideal.groebner());
}

BlowupPresentation make_blowup(QuotientRing base,
                               std::vector<Polynomial> ideal_gens) {
  const RingPtr S = base.ambient();
  const int ns = S->nvars();
  const int n = static_cast<int>(ideal_gens.size());
  if (n == 0) throw kernel_error("blow-up of the zero ideal");

  std::vector<int> gen_degs;
  for (const auto& f : ideal_gens) {
    auto d = f.weighted_degree();
    if (d.is_zero || !d.homogeneous)
      throw kernel_error("blow-up generators must be homogeneous and nonzero");
    if (base.is_zero_in_R(f))
      throw kernel_error("blow-up generator vanishes in the quotient ring");
    gen_degs.push_back(d.degree);
  }

  BlowupPresentation b;
  b.base = base;
  b.ideal_gens = ideal_gens;
  b.n_y = n;

  // A = S[@y1..@yn], weight(@yk) = deg f_k, second grading = @y-degree
  {
    std::vector<std::string> vars = S->vars();
    std::vector<int> weights = S->weights();
    std::vector<int> g2(ns, 0);
    for (int k = 0; k < n; ++k) {
      vars.push_back("@y" + std::to_string(k + 1));
      weights.push_back(gen_degs[k]);
      g2.push_back(1);
    }
    b.A = PolyRing::make(S->field(), std::move(vars),
                         MonomialOrder::grevlex(), std::move(weights),
                         std::move(g2));
  }
  b.s_to_a.resize(ns);
  for (int i = 0; i < ns; ++i) b.s_to_a[i] = i;

  // elimination ring E = A[@t] with @t dominating
  RingPtr E;
  {
    std::vector<std::string> vars{"@t"};
    std::vector<int> weights{1};
    for (const auto& v : b.A->vars()) vars.push_back(v);
    for (int w : b.A->weights()) weights.push_back(w);
    OrderBlock first{{0}, OrderKind::grevlex};
    OrderBlock rest;
    rest.kind = OrderKind::grevlex;
    for (int i = 0; i < b.A->nvars(); ++i) rest.vars.push_back(i + 1);
    E = PolyRing::make(S->field(), std::move(vars),
                       MonomialOrder::block({first, rest}),
                       std::move(weights));
  }
  std::vector<int> s_to_e(ns);
  for (int i = 0; i < ns; ++i) s_to_e[i] = i + 1;

  std::vector<Polynomial> egens;
  Polynomial t = Polynomial::variable(E, 0);
  for (int k = 0; k < n; ++k) {
    Polynomial yk = Polynomial::variable(E, 1 + ns + k);
    egens.push_back(yk - map_vars(ideal_gens[k], E, s_to_e) * t);
  }
  for (const auto& kgen : base.defining().gens())
    egens.push_back(map_vars(kgen, E, s_to_e));

  Ideal elim(E, std::move(egens));
  std::vector<int> e_to_a(E->nvars());
  e_to_a[0] = -1;
  for (int i = 0; i < b.A->nvars(); ++i) e_to_a[i + 1] = i;
  std::vector<Polynomial> rees_gens;
  for (const auto& g : elim.groebner()) {
    if ((g.lm().mask & 1u) == 0) rees_gens.push_back(map_vars(g, b.A, e_to_a));
  }
  b.rees_full = Ideal(b.A, std::move(rees_gens));

  // bihomogeneity of every Rees generator
  for (const auto& g : b.rees_full.gens()) {
    int w = 0, y = 0;
    if (!g.bidegree(&w, &y))
      throw kernel_error("Rees generator is not bihomogeneous");
  }

  // substitution check: every generator vanishes under @yk -> f_k t in R[t]
  {
    std::vector<std::string> vars = S->vars();
    vars.push_back("@t");
    std::vector<int> weights = S->weights();
    weights.push_back(1);
    RingPtr St = PolyRing::make(S->field(), std::move(vars),
                                MonomialOrder::grevlex(), std::move(weights));
    std::vector<int> s_to_st(ns);
    for (int i = 0; i < ns; ++i) s_to_st[i] = i;
    Polynomial tt = Polynomial::variable(St, ns);
    std::vector<Polynomial> images;
    for (int i = 0; i < ns; ++i)
      images.push_back(Polynomial::variable(St, i));
    for (int k = 0; k < n; ++k)
      images.push_back(map_vars(ideal_gens[k], St, s_to_st) * tt);
    std::vector<Polynomial> k_in_st;
    for (const auto& kgen : base.defining().gens())
      k_in_st.push_back(map_vars(kgen, St, s_to_st));
    Ideal KSt(St, std::move(k_in_st));
    for (const auto& g : b.rees_full.gens()) {
      Polynomial img = substitute(g, St, images);
      if (!KSt.normal_form(img).is_zero())
        throw kernel_error("Rees generator fails the substitution check");
    }
  }

  std::vector<Polynomial> g_gens = b.rees_full.gens();
  for (const auto& f : ideal_gens) g_gens.push_back(map_vars(f, b.A, b.s_to_a));
  b.g_ideal = Ideal(b.A, std::move(g_gens));

  std::vector<Polynomial> f_gens = b.rees_full.gens();
  for (int i = 0; i < ns; ++i)
    f_gens.push_back(Polynomial::variable(b.A, i));
  b.fiber_ideal = Ideal(b.A, std::move(f_gens));

  return b;
}

int fiber_dim(const BlowupPresentation& b) {
  return krull_dimension(b.fiber_ideal);
}

std::vector<long> g_piece_hilbert(const BlowupPresentation& b, int j,
                                  int wmax) {
  std::vector<long> out;
  for (int w = 0; w <= wmax; ++w)
    out.push_back(quotient_piece_dim(b.g_ideal, w, j));
  return out;
}

std::vector<long> power_piece_hilbert(const QuotientRing& base,
                                      const Ideal& power_j,
                                      const Ideal& power_j1, int wmax) {
  Ideal lj = base.lift(power_j);
  Ideal lj1 = base.lift(power_j1);
  std::vector<long> out;
  for (int w = 0; w <= wmax; ++w)
    out.push_back(quotient_piece_dim(lj1, w) - quotient_piece_dim(lj, w));
  return out;
}

}  // namespace blowup

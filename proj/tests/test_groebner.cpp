#include <random>
#include <set>

#include "blowup/ideal.hpp"
#include "doctest.h"
#include "blowup/errors.hpp"
#include "oracle.hpp"

using namespace blowup;
using namespace blowup::testing;

namespace {

RingPtr ring_xy() { return PolyRing::make(PrimeField(32003), {"x", "y"}); }

// k[x, y, t1, t2] with the hypersurface relation x^3 y, the running
// quotient-ring instance used across the suites
struct HyperInstance {
  RingPtr S = PolyRing::make(PrimeField(32003), {"x", "y", "t1", "t2"});
  Polynomial x = Polynomial::variable(S, 0);
  Polynomial y = Polynomial::variable(S, 1);
  Polynomial t1 = Polynomial::variable(S, 2);
  Ideal K{S, {poly_pow(x, 3) * y}};
  QuotientRing R{S, K};
  Ideal I{S, {x * y, t1}};
  Ideal J{S, {t1}};
};

std::multiset<std::string> lead_strings(const Ideal& I) {
  std::multiset<std::string> out;
  for (const auto& m : I.initial_gens()) out.insert(I.ring()->to_string(m));
  return out;
}

}  // namespace

TEST_CASE("principal ideals are their own reduced basis") {
  auto r = ring_xy();
  Ideal I(r, {Polynomial::variable(r, 0)});
  CHECK(I.groebner().size() == 1);
  CHECK(I.groebner()[0] == Polynomial::variable(r, 0));

  HyperInstance H;
  CHECK(H.K.groebner().size() == 1);
  CHECK(H.K.groebner()[0] == poly_pow(H.x, 3) * H.y);
}

TEST_CASE("grevlex basis of (x^2+y^2, xy)") {
  auto r = ring_xy();
  Polynomial x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1);
  Ideal I(r, {x * x + y * y, x * y});
  auto leads = lead_strings(I);
  CHECK(leads == std::multiset<std::string>{"x^2", "x*y", "y^3"});

  // degree-by-degree cross-check against the linear-algebra oracle: the
  // quotient dimension from standard monomials must match the rank route
  for (int d = 0; d <= 6; ++d) {
    long std_count = quotient_piece_dim(I, d);
    long all = static_cast<long>(r->monomials_of_degree(d).size());
    long rank = static_cast<long>(macaulay_piece_dim(r, I.gens(), d));
    CHECK(std_count == all - rank);
  }
}

TEST_CASE("normal forms decide membership") {
  HyperInstance H;
  SUBCASE("generators reduce to zero") {
    CHECK(H.I.normal_form(H.I.gens()[0]).is_zero());
    CHECK(H.I.normal_form(H.I.gens()[1]).is_zero());
  }
  SUBCASE("1 mod the unit ideal") {
    Ideal unit = Ideal::unit(H.S);
    CHECK(unit.normal_form(Polynomial::constant(H.S, 1)).is_zero());
  }
  SUBCASE("x^2 y^2 does not lie in J*I in the quotient") {
    Ideal JI = H.R.lift(ideal_product(H.J, H.I));
    Polynomial f = poly_pow(H.x, 2) * poly_pow(H.y, 2);
    CHECK_FALSE(JI.contains(f));
    CHECK_FALSE(macaulay_member(f, JI.gens()));
    // but it does lie in I^2
    CHECK(H.R.lift(ideal_power(H.I, 2)).contains(f));
  }
}

TEST_CASE("ideal sum, product, power") {
  HyperInstance H;
  SUBCASE("I * (1) = I") {
    CHECK(ideal_equal(ideal_product(H.I, Ideal::unit(H.S)), H.I));
  }
  SUBCASE("I^1 = I") { CHECK(ideal_equal(ideal_power(H.I, 1), H.I)); }
  SUBCASE("I^0 is the unit ideal") {
    CHECK(ideal_power(H.I, 0).is_unit_ideal());
  }
  SUBCASE("I^2 generators are the pairwise products") {
    Ideal expect(H.S, {poly_pow(H.x, 2) * poly_pow(H.y, 2),
                       H.x * H.y * H.t1, H.t1 * H.t1});
    CHECK(ideal_equal(ideal_power(H.I, 2), expect));
    // every generator confirmed by the oracle as well
    for (const auto& g : expect.gens()) {
      CHECK(macaulay_member(g, ideal_power(H.I, 2).gens()));
    }
  }
}

TEST_CASE("intersections") {
  auto r = ring_xy();
  Polynomial x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1);
  SUBCASE("I cap I = I") {
    Ideal I(r, {x * x + y, x * y});
    CHECK(ideal_equal(ideal_intersect(I, I), I));
  }
  SUBCASE("(x) cap (y) = (xy)") {
    Ideal a(r, {x}), b(r, {y});
    CHECK(ideal_equal(ideal_intersect(a, b), Ideal(r, {x * y})));
  }
  SUBCASE("I^2 cap J = J*I in the hypersurface quotient") {
    HyperInstance H;
    Ideal lhs = ideal_intersect(H.R.lift(ideal_power(H.I, 2)), H.R.lift(H.J));
    Ideal rhs = H.R.lift(ideal_product(H.J, H.I));
    CHECK(ideal_equal(lhs, rhs));
  }
}

TEST_CASE("colon and saturation") {
  auto r = ring_xy();
  Polynomial x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1);
  SUBCASE("(I : 1) = I") {
    Ideal I(r, {x * x, y});
    CHECK(ideal_equal(ideal_colon(I, Polynomial::constant(r, 1)), I));
  }
  SUBCASE("(xy) : x = (y)") {
    Ideal I(r, {x * y});
    CHECK(ideal_equal(ideal_colon(I, x), Ideal(r, {y})));
  }
  SUBCASE("annihilator of x in the hypersurface quotient") {
    HyperInstance H;
    Ideal zero = H.R.lift(Ideal::zero(H.S));
    Ideal ann = ideal_colon(zero, H.x);
    Ideal expect(H.S, {poly_pow(H.x, 2) * H.y});
    CHECK(ideal_equal(ann, expect));
    CHECK(ann.contains(poly_pow(H.x, 2) * H.y));
  }
  SUBCASE("saturation cap raises a diagnostic") {
    Ideal I(r, {x * poly_pow(y, 3)});
    CHECK_THROWS_AS(ideal_saturate(I, y, 1), saturation_limit_error);
  }
  SUBCASE("saturation stabilizes") {
    Ideal I(r, {x * poly_pow(y, 3)});
    Ideal sat = ideal_saturate(I, y);
    CHECK(ideal_equal(sat, Ideal(r, {x})));
  }
}

TEST_CASE("krull dimension") {
  HyperInstance H;
  CHECK(krull_dimension(Ideal::zero(H.S)) == 4);
  CHECK(H.R.dim() == 3);
  CHECK(krull_dimension(Ideal::unit(H.S)) == -1);

  auto s6 = PolyRing::make(PrimeField(32003), {"x", "y", "z", "w", "t1", "t2"});
  Polynomial x = Polynomial::variable(s6, 0), y = Polynomial::variable(s6, 1);
  Polynomial z = Polynomial::variable(s6, 2), w = Polynomial::variable(s6, 3);
  QuotientRing R7(s6, Ideal(s6, {poly_pow(x, 4) * y, z * w}));
  CHECK(R7.dim() == 4);
}

TEST_CASE("reduced basis is idempotent") {
  HyperInstance H;
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    Ideal I = random_homogeneous_ideal(H.S, rng, 3, 3);
    Ideal again(H.S, I.groebner());
    CHECK(ideal_equal(I, again));
    const auto& g1 = I.groebner();
    const auto& g2 = again.groebner();
    REQUIRE(g1.size() == g2.size());
    for (size_t i = 0; i < g1.size(); ++i) CHECK(g1[i] == g2[i]);
  }
}

TEST_CASE("dimension is order independent") {
  std::mt19937_64 rng(23);
  auto grev = PolyRing::make(PrimeField(32003), {"x", "y", "z"});
  auto lex = PolyRing::make(PrimeField(32003), {"x", "y", "z"},
                            MonomialOrder::lex());
  std::vector<int> ident{0, 1, 2};
  for (int trial = 0; trial < 25; ++trial) {
    Ideal I = random_homogeneous_ideal(grev, rng, 3, 2);
    std::vector<Polynomial> lgens;
    for (const auto& g : I.gens()) lgens.push_back(map_vars(g, lex, ident));
    Ideal J(lex, std::move(lgens));
    CHECK(krull_dimension(I) == krull_dimension(J));
  }
}

TEST_CASE("colon and intersection interplay on random ideals") {
  std::mt19937_64 rng(31);
  auto r = PolyRing::make(PrimeField(32003), {"x", "y", "z"});
  for (int trial = 0; trial < 10; ++trial) {
    Ideal I = random_monomial_ideal(r, rng, 3, 2);
    Ideal J = random_monomial_ideal(r, rng, 3, 2);
    Ideal meet = ideal_intersect(I, J);
    CHECK(ideal_contains(I, meet));
    CHECK(ideal_contains(J, meet));
    CHECK(ideal_contains(meet, ideal_product(I, J)));
    Ideal q = ideal_colon(I, J);
    CHECK(ideal_contains(I, ideal_product(q, J)));
  }
}

TEST_CASE("normal form against the oracle on random homogeneous pairs") {
  std::mt19937_64 rng(47);
  auto r = PolyRing::make(PrimeField(101), {"x", "y", "z"});
  int agree = 0, total = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Ideal I = random_homogeneous_ideal(r, rng, 3, 2);
    int d = 1 + static_cast<int>(rng() % 5);
    Polynomial f = random_homogeneous(r, rng, d);
    if (f.is_zero()) continue;
    bool nf_says = I.contains(f);
    bool oracle_says = macaulay_member(f, I.gens());
    ++total;
    if (nf_says == oracle_says) ++agree;
  }
  CHECK(agree == total);
}

#include <random>

#include "blowup/matrix.hpp"
#include "blowup/modp.hpp"
#include "doctest.h"

using namespace blowup;

TEST_CASE("field axioms on random triples") {
  for (uint32_t p : {5u, 101u, 32003u}) {
    PrimeField F(p);
    std::mt19937_64 rng(42);
    for (int k = 0; k < 1000; ++k) {
      uint32_t a = rng() % p, b = rng() % p, c = rng() % p;
      CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
      CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      CHECK(F.add(a, F.neg(a)) == 0);
      if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
    }
  }
}

TEST_CASE("prime validation") {
  CHECK_THROWS(PrimeField(1));
  CHECK_THROWS(PrimeField(32004));
  CHECK_THROWS(PrimeField(60013));  // prime but above the kernel bound
  CHECK(PrimeField(2).p() == 2);
  CHECK(PrimeField().p() == 32003);
  CHECK(PrimeField::is_prime(46337));
}

TEST_CASE("pow matches repeated multiplication") {
  PrimeField F(101);
  for (uint32_t a = 0; a < 101; a += 7) {
    uint32_t acc = 1;
    for (int e = 0; e < 12; ++e) {
      CHECK(F.pow(a, e) == acc);
      acc = F.mul(acc, a);
    }
  }
}

TEST_CASE("kernel backends agree on axpy and scale") {
  std::mt19937_64 rng(7);
  const auto& sc = kernels::scalar();
  const auto& act = kernels::active();
  INFO("active backend: " << act.name);
  for (uint32_t p : {5u, 2u, 32003u, 46337u}) {
    PrimeField F(p);
    for (size_t n : {0u, 1u, 7u, 8u, 9u, 64u, 1000u}) {
      std::vector<uint32_t> a(n), b(n);
      for (auto& x : a) x = rng() % p;
      for (auto& x : b) x = rng() % p;
      uint32_t c = rng() % p;
      auto a1 = a, a2 = a;
      sc.axpy(a1.data(), b.data(), n, c, p, F.barrett_mu());
      act.axpy(a2.data(), b.data(), n, c, p, F.barrett_mu());
      CHECK(a1 == a2);
      auto s1 = a, s2 = a;
      sc.scale(s1.data(), n, c, p, F.barrett_mu());
      act.scale(s2.data(), n, c, p, F.barrett_mu());
      CHECK(s1 == s2);
    }
  }
}

TEST_CASE("kernel boundary values") {
  // largest inputs the Barrett path must handle: c = s = p-1, dst = p-1
  for (uint32_t p : {2u, 3u, 32003u, 46337u}) {
    PrimeField F(p);
    std::vector<uint32_t> dst(16, p - 1), src(16, p - 1);
    kernels::active().axpy(dst.data(), src.data(), dst.size(), p - 1, p,
                           F.barrett_mu());
    uint32_t want = F.add(p - 1, F.mul(p - 1, p - 1));
    for (uint32_t v : dst) CHECK(v == want);
  }
}

TEST_CASE("forcing the scalar backend keeps results identical") {
  PrimeField F(32003);
  std::mt19937_64 rng(3);
  std::vector<uint32_t> base(37);
  for (auto& x : base) x = rng() % F.p();
  auto run = [&]() {
    ModpMatrix m(F, 0, 37);
    for (int r = 0; r < 9; ++r) {
      std::vector<uint32_t> row(37);
      for (auto& x : row) x = rng() % F.p();
      m.add_row(row);
    }
    m.add_row(base);
    m.rref();
    return m.reduce(base);
  };
  std::mt19937_64 save = rng;
  kernels::force("scalar");
  auto a = run();
  rng = save;
  kernels::force("auto");
  auto b = run();
  CHECK(a == b);
}

TEST_CASE("rref ranks and membership") {
  PrimeField F(32003);
  // rows: (1,2,3), (2,4,6), (0,1,1) -> rank 2
  ModpMatrix m(F, 0, 3);
  m.add_row({1, 2, 3});
  m.add_row({2, 4, 6});
  m.add_row({0, 1, 1});
  CHECK(m.rref() == 2);
  CHECK(m.in_row_span({1, 2, 3}));
  CHECK(m.in_row_span({1, 3, 4}));
  CHECK_FALSE(m.in_row_span({0, 0, 1}));
}

TEST_CASE("rref random rank sanity against duplicate rows") {
  PrimeField F(101);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    size_t r = 3 + rng() % 4, c = 4 + rng() % 4;
    ModpMatrix m(F, 0, c);
    std::vector<std::vector<uint32_t>> rows;
    for (size_t i = 0; i < r; ++i) {
      std::vector<uint32_t> row(c);
      for (auto& x : row) x = rng() % 101;
      rows.push_back(row);
      m.add_row(row);
    }
    // duplicating rows must not change the rank
    ModpMatrix m2(F, 0, c);
    for (auto& row : rows) m2.add_row(row);
    for (auto& row : rows) m2.add_row(row);
    CHECK(m.rref() == m2.rref());
  }
}

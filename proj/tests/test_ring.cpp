#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qinv/errors.hpp"
#include "qinv/ring.hpp"

using namespace qinv;

TEST_CASE("cyclotomic polynomials match the root products") {
  for (int m = 1; m <= 40; ++m) {
    const IntPoly p = cyclotomic_polynomial(m);
    const auto expect = oracle::cyclotomic(m);
    REQUIRE(p.size() == expect.size());
    for (std::size_t i = 0; i < p.size(); ++i) CHECK(p[i] == expect[i]);
    CHECK(static_cast<int>(p.size()) - 1 == euler_phi(m));
  }
  // Phi_12 = x^4 - x^2 + 1
  const IntPoly phi12 = cyclotomic_polynomial(12);
  CHECK(phi12 == IntPoly{1, 0, -1, 0, 1});
}

TEST_CASE("laurent polynomial arithmetic") {
  const LaurentPoly a = LaurentPoly::monomial(2) + LaurentPoly::monomial(-3, 5);
  const LaurentPoly b = LaurentPoly::monomial(1, -1) + 7;
  CHECK((a * b).coeff(-2) == -5);
  CHECK((a * b).coeff(3) == -1);
  CHECK((a - a).is_zero());
  CHECK(a.conj().coeff(3) == 5);
  CHECK(a.shifted(3).coeff(5) == 1);
  CHECK(a.pow(3) == a * a * a);
  CHECK(loop_value() == LaurentPoly::monomial(2, -1) + LaurentPoly::monomial(-2, -1));
  CHECK(LaurentPoly().to_string() == "0");
}

TEST_CASE("level rejects k < 2") {
  CHECK_THROWS_AS(Level(1), UsageError);
  CHECK(Level(3).order() == 12);
  CHECK(Level(3).degree() == 4);
}

TEST_CASE("cyclotomic numbers agree with floating point") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-5, 5), expo(-30, 30);
  for (int k = 2; k <= 9; ++k) {
    const Level level(k);
    const auto z = root_of_unity(level);
    for (int trial = 0; trial < 30; ++trial) {
      LaurentPoly p, q;
      for (int t = 0; t < 5; ++t) {
        p += LaurentPoly::monomial(expo(rng), coef(rng));
        q += LaurentPoly::monomial(expo(rng), coef(rng));
      }
      const CyclotomicNumber a = specialize(p, level), b = specialize(q, level);
      CHECK(std::abs((a * b).complex_approx() - p.evaluate(z) * q.evaluate(z)) < 1e-9);
      CHECK(std::abs((a + b).complex_approx() - (p + q).evaluate(z)) < 1e-9);
      CHECK(std::abs(a.conj().complex_approx() - std::conj(p.evaluate(z))) < 1e-9);
      CHECK(a * b == specialize(p * q, level));
    }
  }
}

TEST_CASE("zeta powers wrap around the order") {
  const Level level(5);
  CHECK(CyclotomicNumber::zeta_power(level, 20) == CyclotomicNumber(level, 1));
  CHECK(CyclotomicNumber::zeta_power(level, 10) == CyclotomicNumber(level, -1));
  CHECK(CyclotomicNumber::zeta_power(level, -3) * CyclotomicNumber::zeta_power(level, 3) == CyclotomicNumber(level, 1));
  // 1 + q + ... + q^{k-1} = 0 with q = zeta^4
  CyclotomicNumber s(level);
  for (int j = 0; j < 5; ++j) s += CyclotomicNumber::zeta_power(level, 4 * j);
  CHECK(s.is_zero());
}

TEST_CASE("mixing levels is an error") {
  CHECK_THROWS_AS(CyclotomicNumber(Level(3), 1) + CyclotomicNumber(Level(4), 1), UsageError);
}

TEST_CASE("cyclic accumulator reduces to the same value") {
  const Level level(6);
  CyclicPoly acc(level);
  LaurentPoly p;
  for (int j = -40; j <= 40; j += 7) {
    acc += CyclicPoly::monomial(level, j, j);
    p += LaurentPoly::monomial(j, j);
  }
  CHECK(acc.reduce() == specialize(p, level));
  CHECK(acc.shifted(5).reduce() == specialize(p.shifted(5), level));
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(123);
  std::uniform_int_distribution<int> coef(-9, 9), expo(-12, 12), level_pick(2, 7);
  auto random_poly = [&] {
    LaurentPoly p;
    for (int t = 0; t < 4; ++t) p += LaurentPoly::monomial(expo(rng), coef(rng));
    return p;
  };
  for (int trial = 0; trial < 1000; ++trial) {
    const LaurentPoly a = random_poly(), b = random_poly(), c = random_poly();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + LaurentPoly() == a);
    CHECK(a * LaurentPoly(1) == a);
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());

    const Level level(level_pick(rng));
    const CyclotomicNumber x = specialize(a, level), y = specialize(b, level), z = specialize(c, level);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + (-x) == CyclotomicNumber(level));
    CHECK(x.conj().conj() == x);
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK(specialize(a * b, level) == x * y);
    CHECK(std::abs(x.conj().complex_approx() - std::conj(x.complex_approx())) <=
          1e-12 * std::max(1.0, std::abs(x.complex_approx())));
  }
}

TEST_CASE("spec examples for the ring") {
  const Level k3(3);
  CHECK(specialize(LaurentPoly::monomial(12), k3) == CyclotomicNumber(k3, 1));
  CHECK(specialize(LaurentPoly::monomial(4) + LaurentPoly::monomial(-4), k3) == CyclotomicNumber(k3, -1));
  CHECK(specialize(LaurentPoly(), k3).is_zero());
  CHECK(CyclotomicNumber::zeta_power(k3, 1).conj() == CyclotomicNumber::zeta_power(k3, 11));
  CHECK(std::abs(CyclotomicNumber::zeta_power(k3, 1).complex_approx() - std::polar(1.0, M_PI / 6)) < 1e-12);
  const LaurentPoly a = LaurentPoly::monomial(1), ai = LaurentPoly::monomial(-1);
  CHECK((a + ai) * (a - ai) == LaurentPoly::monomial(2) - LaurentPoly::monomial(-2));
  CHECK(cyclotomic_polynomial(1) == IntPoly{-1, 1});
  CHECK(cyclotomic_polynomial(4) == IntPoly{1, 0, 1});
}

#include <doctest.h>

#include "oracles.hpp"
#include "qinv/colored.hpp"
#include "qinv/errors.hpp"
#include "qinv/moves.hpp"

using namespace qinv;

TEST_CASE("Chebyshev rows") {
  const ChebyshevTable t = chebyshev_table(5);
  CHECK(t.row(0) == std::vector<Integer>{1});
  CHECK(t.row(2) == std::vector<Integer>{-1, 0, 1});
  CHECK(t.row(5) == std::vector<Integer>{0, 3, 0, -4, 0, 1});
}

TEST_CASE("colored unknot equals the quantum dimension") {
  for (int k = 2; k <= 6; ++k) {
    const Level level(k);
    for (int n = 0; n < k; ++n) {
      const CyclotomicNumber v = evaluate_labeled_link(unknot(0), {ColorLabel{n}}, level);
      CHECK(v == quantum_dim(n, level));
      CHECK(std::abs(v.complex_approx() - oracle::quantum_dim(n, k)) < 1e-9);
    }
    CHECK(quantum_dim(k - 1, level).is_zero());
  }
  CHECK_THROWS_AS(quantum_dim(3, Level(3)), UsageError);
}

TEST_CASE("generic colored unknot") {
  for (int n = 0; n <= 4; ++n) CHECK(evaluate_colored_generic(unknot(0), {n}) == quantum_dim_generic(n));
  // framing does not matter for color 0
  CHECK(evaluate_colored_generic(unknot(5), {0}) == LaurentPoly(1));
}

TEST_CASE("twist eigenvalues") {
  for (int k = 3; k <= 6; ++k)
    for (int n = 0; n <= k - 2; ++n) {
      const TwistCheck t = twist_eigen_check(n, Level(k));
      CHECK(t.generic_holds);
      CHECK(t.specialized_holds);
    }
}

TEST_CASE("Hopf link with colors 1,1 is the bracket up to framing") {
  const LaurentPoly v = evaluate_colored_generic(hopf_link(0, 0), {1, 1});
  // blackboard writhe of each component is already 0
  CHECK(v == oracle::bracket(hopf_link().word()));
}

TEST_CASE("omega parities") {
  const Level level(4);
  const OmegaElement all = omega(level, Parity::All);
  const OmegaElement even = omega(level, Parity::Even);
  const OmegaElement odd = omega(level, Parity::Odd);
  REQUIRE(all.coefficients.size() == 3);
  for (int n = 0; n < 3; ++n) CHECK(all.coefficients[n] == even.coefficients[n] + odd.coefficients[n]);
  CHECK(even.coefficients[1].is_zero());
  CHECK(odd.coefficients[0].is_zero());
}

TEST_CASE("exact and float labeled evaluation agree") {
  const Level level(5);
  const std::vector<SkeinLabel> labels{OmegaLabel{Parity::Even}, ColorLabel{2}};
  const FramedLinkDiagram h = hopf_link(1, -1);
  CHECK(std::abs(evaluate_labeled_link(h, labels, level).complex_approx() -
                 evaluate_labeled_link_approx(h, labels, level)) < 1e-9);
}

TEST_CASE("combination labels are linear") {
  const Level level(4);
  const CyclotomicNumber two(level, 2), three(level, 3);
  const FramedLinkDiagram t = trefoil(true, 0);
  const CyclotomicNumber combo =
      evaluate_labeled_link(t, {CombinationLabel{{CyclotomicNumber(level), two, three}}}, level);
  const CyclotomicNumber direct = two * evaluate_labeled_link(t, {ColorLabel{1}}, level) +
                                  three * evaluate_labeled_link(t, {ColorLabel{2}}, level);
  CHECK(combo == direct);
}

#include <doctest.h>

#include <random>

#include "qinv/errors.hpp"
#include "qinv/moves.hpp"
#include "qinv/quadform.hpp"

using namespace qinv;

TEST_CASE("move constructors") {
  const FramedLinkDiagram u = k1_add(empty_link(), 1);
  CHECK(u.component_count() == 1);
  CHECK(u.framings() == std::vector<int>{1});
  CHECK_THROWS_AS(k1_add(empty_link(), 2), UsageError);

  const SpecialFramedLink d = gamma_d_add(SpecialFramedLink(empty_link()));
  CHECK(d.ordinary_count() == 1);
  CHECK(d.special_count() == 1);
  CHECK_NOTHROW(d.validate());

  const SpecialFramedLink base(hopf_link(0, 0));
  const SpecialFramedLink e = gamma_e_add(base);
  CHECK(e.ordinary_count() == 3);
  CHECK(inertia(linking_matrix(e.diagram)).nullity == inertia(linking_matrix(base.diagram)).nullity + 1);
}

TEST_CASE("slides preserve the linking form up to congruence") {
  const std::vector<SpecialFramedLink> links = {
      SpecialFramedLink(unknot(0)), SpecialFramedLink(unknot(3)), SpecialFramedLink(hopf_link(1, -2)),
      SpecialFramedLink(trefoil(false, -1)), SpecialFramedLink(hopf_link(0, 0), {true, false})};
  for (const auto& link : links)
    for (int b = -2; b <= 2; ++b) {
      const bool special = link.special[0] && b == 0;
      const SlidePair s = slide_over_split_unknot(link, b, special);
      const int n = s.after.diagram.component_count();
      REQUIRE(n == s.before.diagram.component_count());
      CHECK(inertia(linking_matrix(s.before.diagram)) == inertia(linking_matrix(s.after.diagram)));
      CHECK(std::abs(s.after.diagram.linking_number(0, 1)) == std::abs(b));
      CHECK(s.after.diagram.framings()[0] == link.diagram.framings()[0] + b);
      if (special) CHECK_NOTHROW(s.after.validate());
    }
  CHECK_THROWS_AS(slide_over_split_unknot(SpecialFramedLink(unknot(0)), 1, true), UsageError);
}

TEST_CASE("corpus shape") {
  const auto& corpus = fixture_corpus();
  auto has = [&](MoveKind k) {
    return std::any_of(corpus.begin(), corpus.end(), [&](const MoveFixture& f) { return f.kind == k; });
  };
  for (MoveKind k : {MoveKind::K1Plus, MoveKind::K1Minus, MoveKind::K2Slide, MoveKind::GammaA, MoveKind::GammaB,
                     MoveKind::GammaC, MoveKind::GammaD, MoveKind::GammaE, MoveKind::GammaF})
    CHECK(has(k));
  CHECK(std::count_if(corpus.begin(), corpus.end(), [](const MoveFixture& f) { return !f.expect_equal; }) == 1);
  for (const auto& f : corpus) {
    CHECK_FALSE(f.provenance.empty());
    if (f.invariant == Designation::Broda) {
      CHECK_NOTHROW(f.before.validate());
      CHECK_NOTHROW(f.after.validate());
    }
  }
}

TEST_CASE("every fixture behaves as documented at k = 3 and 4") {
  for (int k : {3, 4})
    for (const auto& f : fixture_corpus()) {
      CAPTURE(f.name);
      CAPTURE(k);
      CHECK(run_fixture(f, Level(k)).passed);
    }
}

TEST_CASE("random words are closed and sized") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    const int c = static_cast<int>(rng() % 15);
    const MorseWord w = random_morse_word(rng, c, 8);
    CHECK(w.crossing_count() == c);
    CHECK(w.max_width() <= 8);
  }
}

#include <doctest.h>

#include <cstdlib>
#include <random>

#include "qinv/diagram.hpp"
#include "qinv/errors.hpp"
#include "qinv/moves.hpp"

using namespace qinv;
using K = EventKind;

TEST_CASE("word validation reports the defect") {
  std::size_t bad = 99;
  CHECK(check_word({{K::Cup, 0}, {K::Cap, 0}}) == WordDefect::None);
  CHECK(check_word({{K::Cup, 1}}, &bad) == WordDefect::PositionOutOfRange);
  CHECK(bad == 0);
  CHECK(check_word({{K::Cup, 0}, {K::Cap, 0}, {K::Cap, 0}}, &bad) == WordDefect::Unbalanced);
  CHECK(bad == 2);
  CHECK(check_word({{K::Cup, 0}}) == WordDefect::NotClosed);
  CHECK(check_word({{K::Cup, 0}, {K::CrossPos, 1}, {K::Cap, 0}}) == WordDefect::PositionOutOfRange);
  CHECK_THROWS_AS(MorseWord({{K::Cup, 0}}), UsageError);
}

TEST_CASE("widths and crossing counts") {
  const MorseWord w = hopf_link().word();
  CHECK(w.crossing_count() == 2);
  CHECK(w.max_width() == 4);
  CHECK(w.widths().front() == 0);
}

TEST_CASE("components, writhe and linking") {
  const FramedLinkDiagram h = hopf_link(3, -2);
  CHECK(h.component_count() == 2);
  CHECK(h.linking_number(0, 1) == 1);
  CHECK(h.linking_number(1, 0) == 1);
  CHECK(h.writhe(0) == 0);
  CHECK(h.framings() == std::vector<int>{3, -2});

  const FramedLinkDiagram neg = braid_closure(BraidWord{2, {-1, -1}});
  CHECK(neg.linking_number(0, 1) == -1);

  const FramedLinkDiagram t = trefoil(true, 0);
  CHECK(t.component_count() == 1);
  CHECK(t.writhe(0) == 3);
  CHECK(trefoil(false, 0).writhe(0) == -3);
  // framings default to writhe
  CHECK(FramedLinkDiagram(t.word()).framings() == std::vector<int>{3});
}

TEST_CASE("braid closure rejects bad generators") {
  CHECK_THROWS_AS(braid_closure(BraidWord{2, {2}}), UsageError);
  CHECK_THROWS_AS(braid_closure(BraidWord{2, {0}}), UsageError);
  CHECK(braid_closure(BraidWord{3, {}}).component_count() == 3);
}

TEST_CASE("kinks change writhe but keep framing") {
  const FramedLinkDiagram h = hopf_link(2, -1);
  const FramedLinkDiagram k = insert_kinks(h, 1, -3);
  CHECK(k.writhe(1) == -3);
  CHECK(k.writhe(0) == 0);
  CHECK(k.framings() == h.framings());
  CHECK(k.linking_number(0, 1) == 1);
  const FramedLinkDiagram b = blackboard_framed(h);
  CHECK(b.writhe(0) == 2);
  CHECK(b.writhe(1) == -1);
}

TEST_CASE("mirror and union") {
  const FramedLinkDiagram h = hopf_link(1, 2);
  const FramedLinkDiagram m = mirror(h);
  CHECK(m.linking_number(0, 1) == -1);
  CHECK(m.framings() == std::vector<int>{-1, -2});
  const FramedLinkDiagram u = distant_union(h, unknot(5));
  CHECK(u.component_count() == 3);
  CHECK(u.framings() == std::vector<int>{1, 2, 5});
  CHECK(u.linking_number(0, 2) == 0);
  CHECK(distant_union(empty_link(), empty_link()).component_count() == 0);
}

TEST_CASE("cables multiply linking numbers") {
  const FramedLinkDiagram h = blackboard_framed(hopf_link(1, 0));
  const FramedLinkDiagram c = cable(h, {2, 3});
  CHECK(c.component_count() == 5);
  // parallel copies of one component link like its framing
  CHECK(c.linking_number(0, 1) == 1);
  int cross = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 2; b < 5; ++b) cross += c.linking_number(a, b);
  CHECK(cross == 6);
  CHECK(cable(h, {0, 1}).component_count() == 1);
  CHECK(cable(h, {0, 0}).component_count() == 0);
}

TEST_CASE("cabled kink") {
  const FramedLinkDiagram c = cable(insert_kinks(unknot(0), 0, 1), {2});
  CHECK(c.word().crossing_count() == 4);
  CHECK(c.component_count() == 2);
  CHECK(c.linking_number(0, 1) == 1);
  const FramedLinkDiagram c3 = cable(insert_kinks(unknot(0), 0, -2), {3});
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) CHECK(c3.linking_number(a, b) == -2);
  CHECK(cable(hopf_link(), {1, 1}) == hopf_link());
}

TEST_CASE("nested cups joined crosswise form one loop") {
  // cup 0 / cup 0 / cap 1 / cap 0: the inner cup's right leg meets the outer
  // cup's left leg, so traversal visits all four segments.
  const FramedLinkDiagram d(MorseWord({{K::Cup, 0}, {K::Cup, 0}, {K::Cap, 1}, {K::Cap, 0}}));
  CHECK(d.component_count() == 1);
}

TEST_CASE("kinks never widen the diagram") {
  const FramedLinkDiagram h = hopf_link(0, 0);
  CHECK(insert_kinks(h, 1, 5).word().max_width() == h.word().max_width());
  CHECK(insert_kinks(unknot(0), 0, -3).word().max_width() == 2);
}

TEST_CASE("diagram operator properties on random words") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const FramedLinkDiagram d(random_morse_word(rng, static_cast<int>(rng() % 10), 8));
    const int n = d.component_count();
    CHECK(mirror(mirror(d)) == d);
    CHECK(distant_union(d, empty_link()) == d);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) CHECK(d.linking_number(a, b) == d.linking_number(b, a));
    std::vector<int> m(n);
    int total = 0;
    for (auto& x : m) total += (x = static_cast<int>(rng() % 3));
    const FramedLinkDiagram c = cable(d, m);
    CHECK(c.component_count() == total);
    int expected_crossings = 0;
    const ArcTable arcs = build_arcs(d.word());
    for (std::size_t i = 0; i < d.word().size(); ++i)
      if (d.word().events()[i].is_crossing())
        expected_crossings += m[d.info().segment_component[arcs.slots[i].below[0]]] *
                              m[d.info().segment_component[arcs.slots[i].below[1]]];
    CHECK(c.word().crossing_count() == expected_crossings);
    if (n > 0) {
      const int comp = static_cast<int>(rng() % n);
      const int t = static_cast<int>(rng() % 7) - 3;
      const FramedLinkDiagram k = insert_kinks(d, comp, t);
      CHECK(k.writhe(comp) == d.writhe(comp) + t);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (a != b) CHECK(k.linking_number(a, b) == d.linking_number(a, b));
    }
  }
}

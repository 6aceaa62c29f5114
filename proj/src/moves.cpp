#include "qinv/moves.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "qinv/errors.hpp"

namespace qinv {

FramedLinkDiagram k1_add(const FramedLinkDiagram& d, int sign) {
  if (sign != 1 && sign != -1) throw UsageError("k1_add: sign must be +1 or -1");
  return distant_union(d, unknot(sign));
}

namespace {

SpecialFramedLink union_with(const SpecialFramedLink& link, const FramedLinkDiagram& d, std::vector<bool> special) {
  std::vector<bool> flags = link.special;
  flags.insert(flags.end(), special.begin(), special.end());
  return {distant_union(link.diagram, d), std::move(flags)};
}

}  // namespace

SpecialFramedLink gamma_d_add(const SpecialFramedLink& link) { return union_with(link, hopf_link(0, 0), {false, true}); }

SpecialFramedLink gamma_e_add(const SpecialFramedLink& link) { return union_with(link, unknot(0), {false}); }

MorseWord insert_braid(const MorseWord& word, std::size_t index, const std::vector<int>& letters) {
  if (index > word.size()) throw UsageError("insert_braid: index past the end of the word");
  const int width = index < word.size() ? word.widths()[index] : 0;
  std::vector<MorseEvent> inserted;
  for (int letter : letters) {
    const int g = std::abs(letter);
    if (letter == 0 || g + 1 > width)
      throw UsageError("insert_braid: generator " + std::to_string(letter) + " needs " + std::to_string(g + 1) +
                       " strands, have " + std::to_string(width));
    inserted.push_back({letter > 0 ? EventKind::CrossPos : EventKind::CrossNeg, g - 1});
  }
  std::vector<MorseEvent> events = word.events();
  events.insert(events.begin() + static_cast<std::ptrdiff_t>(index), inserted.begin(), inserted.end());
  return MorseWord(std::move(events));
}

MorseWord insert_r2(const MorseWord& word, std::size_t index, int position, bool positive_first) {
  const int g = position + 1;
  return insert_braid(word, index, positive_first ? std::vector<int>{g, -g} : std::vector<int>{-g, g});
}

SlidePair slide_over_split_unknot(const SpecialFramedLink& link, int framing, bool onto_special) {
  const FramedLinkDiagram& d = link.diagram;
  if (d.component_count() == 0) throw UsageError("slide: the link has no component to slide");
  if (onto_special && framing != 0) throw UsageError("slide: a special unknot must have framing 0");
  const int n = d.component_count();

  SlidePair out;
  out.before = union_with(link, unknot(framing), {onto_special});

  // Right after component 0's first cup (strands 0,1): open a nested pair
  // of circles at 2..5, band strand 1 to the outer circle, twist the two
  // circles |b| full times and close them.
  const auto& ev = d.word().events();
  std::vector<MorseEvent> events{ev.front()};
  events.push_back({EventKind::Cup, 2});
  events.push_back({EventKind::Cup, 3});
  events.push_back({EventKind::Cap, 1});
  events.push_back({EventKind::Cup, 1});
  const EventKind twist = framing > 0 ? EventKind::CrossPos : EventKind::CrossNeg;
  for (int i = 0; i < 2 * std::abs(framing); ++i) events.push_back({twist, 2});
  events.push_back({EventKind::Cap, 3});
  events.push_back({EventKind::Cap, 2});
  events.insert(events.end(), ev.begin() + 1, ev.end());

  FramedLinkDiagram after(MorseWord(std::move(events)));
  if (after.component_count() != n + 1) throw Error("slide: band sum produced the wrong component count");
  std::vector<int> framings{d.framings()[0] + framing, framing};
  std::vector<bool> special{link.special.at(0), onto_special};
  out.image = {0, n};
  for (int c = 1; c < n; ++c) {
    framings.push_back(d.framings()[c]);
    special.push_back(link.special.at(c));
    out.image.push_back(c);
  }
  out.after = {after.with_framings(std::move(framings)), std::move(special)};
  return out;
}

const char* to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::K1Plus:
      return "K1+";
    case MoveKind::K1Minus:
      return "K1-";
    case MoveKind::K2Slide:
      return "K2-slide";
    case MoveKind::GammaA:
      return "Gamma-a";
    case MoveKind::GammaB:
      return "Gamma-b";
    case MoveKind::GammaC:
      return "Gamma-c";
    case MoveKind::GammaD:
      return "Gamma-d";
    case MoveKind::GammaE:
      return "Gamma-e";
    case MoveKind::GammaF:
      return "Gamma-f-isotopy";
  }
  return "?";
}

const char* to_string(Designation d) {
  switch (d) {
    case Designation::Rtw:
      return "rtw";
    case Designation::Broda:
      return "broda";
    case Designation::Labeled:
      return "labeled";
  }
  return "?";
}

FramedLinkDiagram trefoil(bool right_handed, int framing) {
  const int s = right_handed ? 1 : -1;
  return braid_closure(BraidWord{2, {s, s, s}}).with_framings({framing});
}

namespace {

SpecialFramedLink ordinary(FramedLinkDiagram d) { return SpecialFramedLink(std::move(d)); }

MoveFixture slide_fixture(std::string name, MoveKind kind, Designation inv, const SpecialFramedLink& link, int b,
                          bool onto_special, std::string provenance) {
  SlidePair s = slide_over_split_unknot(link, b, onto_special);
  return MoveFixture{std::move(name), kind, s.before, s.after, inv, {}, {}, true, std::move(provenance)};
}

// Labels on a slide: `slid` on component 0, `over` on the unknot.
MoveFixture labeled_slide(std::string name, MoveKind kind, const FramedLinkDiagram& k1, int b, Parity slid,
                          Parity over, bool expect_equal, std::string provenance) {
  SlidePair s = slide_over_split_unknot(ordinary(k1), b, false);
  MoveFixture f{std::move(name), kind, s.before, s.after, Designation::Labeled, {}, {}, expect_equal,
                std::move(provenance)};
  f.before_labels = {OmegaLabel{slid}, OmegaLabel{over}};
  f.after_labels = {OmegaLabel{slid}, OmegaLabel{over}};
  return f;
}

std::vector<MoveFixture> build_corpus() {
  std::vector<MoveFixture> c;
  const FramedLinkDiagram hopf = hopf_link(0, 0);
  const FramedLinkDiagram left_trefoil = trefoil(false, -1);

  c.push_back({"k1+ hopf", MoveKind::K1Plus, ordinary(hopf), ordinary(k1_add(hopf, 1)), Designation::Rtw, {}, {}, true,
               "blow up: add a distant +1 unknot"});
  c.push_back({"k1- trefoil", MoveKind::K1Minus, ordinary(left_trefoil), ordinary(k1_add(left_trefoil, -1)),
               Designation::Rtw, {}, {}, true, "blow up: add a distant -1 unknot"});

  c.push_back(slide_fixture("k2 U0 over U0", MoveKind::K2Slide, Designation::Rtw, ordinary(unknot(0)), 0, false,
                            "handle slide of U0 over a split U0; both sides are S1xS2 # S1xS2"));
  c.push_back(slide_fixture("k2 U0 over U1", MoveKind::K2Slide, Designation::Rtw, ordinary(unknot(0)), 1, false,
                            "handle slide of U0 over a split U+1; after is a Hopf pair framed (1,1)"));
  c.push_back(slide_fixture("k2 U2 over U-1", MoveKind::K2Slide, Designation::Rtw, ordinary(unknot(2)), -1, false,
                            "handle slide of U+2 over a split U-1"));
  c.push_back(slide_fixture("k2 trefoil over U1", MoveKind::K2Slide, Designation::Rtw, ordinary(left_trefoil), 1,
                            false, "handle slide of the -1 framed left trefoil over a split U+1"));

  c.push_back(slide_fixture("gamma-a special hopf", MoveKind::GammaA, Designation::Broda,
                            SpecialFramedLink(hopf, {true, false}), 0, true,
                            "special component of a special Hopf link slid over a split special unknot"));
  c.push_back(slide_fixture("gamma-a special unknot", MoveKind::GammaA, Designation::Broda,
                            SpecialFramedLink(unknot(0), {true}), 0, true,
                            "special unknot slid over a split special unknot"));
  c.push_back(slide_fixture("gamma-b hopf", MoveKind::GammaB, Designation::Broda,
                            SpecialFramedLink(hopf, {false, true}), 0, true,
                            "ordinary component of a special Hopf link slid over a split special unknot"));
  c.push_back(slide_fixture("gamma-b trefoil", MoveKind::GammaB, Designation::Broda, ordinary(left_trefoil), 0, true,
                            "ordinary -1 framed left trefoil slid over a split special unknot"));
  c.push_back(slide_fixture("gamma-c U1 over U1", MoveKind::GammaC, Designation::Broda, ordinary(unknot(1)), 1, false,
                            "ordinary U+1 slid over a split ordinary U+1; after is a Hopf pair framed (2,1)"));
  c.push_back(slide_fixture("gamma-c hopf over U-1", MoveKind::GammaC, Designation::Broda,
                            SpecialFramedLink(hopf, {false, true}), -1, false,
                            "ordinary component of a special Hopf link slid over a split U-1"));

  c.push_back({"gamma-d trefoil", MoveKind::GammaD, ordinary(left_trefoil), gamma_d_add(ordinary(left_trefoil)),
               Designation::Broda, {}, {}, true, "add a distant special Hopf link"});
  c.push_back({"gamma-e hopf", MoveKind::GammaE, ordinary(hopf), gamma_e_add(ordinary(hopf)), Designation::Broda, {},
               {}, true, "add a distant 0-framed ordinary unknot"});

  {
    // sigma_1^3 closure vs the Markov-stabilized sigma_1^3 sigma_2 closure
    // with an R2 pair and an R3 triple inserted.
    const FramedLinkDiagram plain = trefoil(true, -1);
    MorseWord w = braid_closure(BraidWord{3, {1, 1, 1, 2}}).word();
    w = insert_r2(w, 4, 1, false);
    w = insert_braid(w, 3, {1, 2, 1, -2, -1, -2});
    const FramedLinkDiagram padded = FramedLinkDiagram(w).with_framings({-1});
    c.push_back({"gamma-f trefoil broda", MoveKind::GammaF, ordinary(plain), ordinary(padded), Designation::Broda, {},
                 {}, true, "isotopy: stabilization plus Reidemeister II/III padding"});
    c.push_back({"gamma-f trefoil rtw", MoveKind::GammaF, ordinary(plain), ordinary(padded), Designation::Rtw, {}, {},
                 true, "isotopy: stabilization plus Reidemeister II/III padding"});
  }

  c.push_back(labeled_slide("slide omega over omega", MoveKind::GammaA, unknot(0), 1, Parity::All, Parity::All, true,
                            "omega slides over omega"));
  c.push_back(labeled_slide("slide omega+ over omega", MoveKind::GammaB, left_trefoil, 0, Parity::Even, Parity::All,
                            true, "omega+ slides over omega"));
  c.push_back(labeled_slide("slide omega+ over omega+", MoveKind::GammaC, unknot(0), 1, Parity::Even, Parity::Even,
                            true, "omega+ slides over omega+"));
  c.push_back(labeled_slide("negative: omega over omega+", MoveKind::K2Slide, unknot(0), 1, Parity::All, Parity::Even,
                            false, "omega does not slide over omega+; values must differ"));
  return c;
}

}  // namespace

const std::vector<MoveFixture>& fixture_corpus() {
  static const std::vector<MoveFixture> corpus = build_corpus();
  return corpus;
}

FixtureOutcome run_fixture(const MoveFixture& f, Level level, const ColoredOptions& options) {
  FixtureOutcome out;
  std::ostringstream detail;
  switch (f.invariant) {
    case Designation::Rtw:
    case Designation::Broda: {
      const bool r = f.invariant == Designation::Rtw;
      const InvariantValue a = r ? rtw(f.before.diagram, level, options) : broda(f.before, level, options);
      const InvariantValue b = r ? rtw(f.after.diagram, level, options) : broda(f.after, level, options);
      const Comparison cmp = compare(a, b);
      out.equal = cmp.equal;
      out.sign_ambiguous = cmp.sign_ambiguous;
      detail << a.approx << " vs " << b.approx;
      break;
    }
    case Designation::Labeled: {
      const CyclotomicNumber a = evaluate_labeled_link(f.before.diagram, f.before_labels, level, options);
      const CyclotomicNumber b = evaluate_labeled_link(f.after.diagram, f.after_labels, level, options);
      out.equal = a == b;
      detail << a.complex_approx() << " vs " << b.complex_approx();
      break;
    }
  }
  out.passed = out.equal == f.expect_equal;
  out.detail = detail.str();
  return out;
}

MorseWord random_morse_word(std::mt19937_64& rng, int crossings, int max_width) {
  if (max_width < 2) throw UsageError("random_morse_word: max_width must be at least 2");
  max_width -= max_width % 2;
  std::vector<MorseEvent> events;
  int width = 0, placed = 0;
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  while (true) {
    if (width == 0) {
      if (placed >= crossings && !events.empty()) break;
      events.push_back({EventKind::Cup, 0});
      width = 2;
      continue;
    }
    const bool can_cup = width + 2 <= max_width && placed < crossings;
    const bool can_cross = placed < crossings;
    const int roll = pick(0, 9);
    if (can_cross && (roll < 5 || (!can_cup && roll < 8))) {
      events.push_back({pick(0, 1) ? EventKind::CrossPos : EventKind::CrossNeg, pick(0, width - 2)});
      ++placed;
    } else if (can_cup && roll < 8) {
      events.push_back({EventKind::Cup, pick(0, width)});
      width += 2;
    } else {
      events.push_back({EventKind::Cap, pick(0, width - 2)});
      width -= 2;
    }
  }
  return MorseWord(std::move(events));
}

}  // namespace qinv

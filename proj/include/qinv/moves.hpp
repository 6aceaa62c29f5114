#pragma once

// Kirby and Gamma move constructors, Reidemeister rewrites, random diagrams
// and the curated fixture corpus used by the invariance suites.

#include <random>
#include <string>
#include <vector>

#include "qinv/colored.hpp"
#include "qinv/diagram.hpp"
#include "qinv/invariants.hpp"

namespace qinv {

/// Distant union with the unknot of framing sign (+1 or -1).
FramedLinkDiagram k1_add(const FramedLinkDiagram& d, int sign);
/// Distant union with a Hopf link whose second component is special.
SpecialFramedLink gamma_d_add(const SpecialFramedLink& link);
/// Distant union with an ordinary 0-framed unknot.
SpecialFramedLink gamma_e_add(const SpecialFramedLink& link);

/// Inserts the generators at event `index` (before that event): letter +i
/// is a positive crossing at position i-1, -i a negative one.  Throws
/// UsageError when the strands are not there.
MorseWord insert_braid(const MorseWord& word, std::size_t index, const std::vector<int>& letters);
/// An R2 pair x(type) p, x(opposite) p at `index`.
MorseWord insert_r2(const MorseWord& word, std::size_t index, int position, bool positive_first = true);

/// Result of sliding component 0 of a link over a distant unknot U_b.
///
/// before = link with U_b appended.  after has components
/// [K1', U_b, the remaining components of link], where K1' is the band sum
/// of component 0 with a b-framed pushoff of U_b.
struct SlidePair {
  SpecialFramedLink before;
  SpecialFramedLink after;
  /// after component i corresponds to before component image[i]
  std::vector<int> image;
};
SlidePair slide_over_split_unknot(const SpecialFramedLink& link, int framing, bool onto_special);

enum class MoveKind { K1Plus, K1Minus, K2Slide, GammaA, GammaB, GammaC, GammaD, GammaE, GammaF };
const char* to_string(MoveKind kind);

enum class Designation { Rtw, Broda, Labeled };
const char* to_string(Designation d);

struct MoveFixture {
  std::string name;
  MoveKind kind;
  SpecialFramedLink before;
  SpecialFramedLink after;
  Designation invariant = Designation::Broda;
  /// Used with Designation::Labeled only.
  std::vector<SkeinLabel> before_labels, after_labels;
  bool expect_equal = true;
  std::string provenance;
};

/// Immutable corpus; see the provenance field of each entry.
const std::vector<MoveFixture>& fixture_corpus();

struct FixtureOutcome {
  bool equal = false;
  bool sign_ambiguous = false;
  bool passed = false;  // equal == expect_equal
  std::string detail;
};
FixtureOutcome run_fixture(const MoveFixture& f, Level level, const ColoredOptions& options = {});

/// Random closed Morse word: exactly `crossings` crossings, width <= max_width.
MorseWord random_morse_word(std::mt19937_64& rng, int crossings, int max_width);

/// Trefoil as the closure of sigma_1^3 (right-handed) or its inverse.
FramedLinkDiagram trefoil(bool right_handed, int framing);

}  // namespace qinv

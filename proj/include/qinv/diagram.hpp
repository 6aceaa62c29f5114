#pragma once

// Framed link diagrams as Morse words.
//
// A Morse word is read bottom to top.  Strands are numbered left to right at
// every height.  Cup p creates strands p, p+1 joined below; Cap p joins
// strands p, p+1 above; a crossing acts on strands p, p+1 and swaps them.
//
// Crossing convention: in CrossPos the strand moving from p to p+1 passes
// over.  With both strands oriented upward this is a positive crossing, so
// the closure of a positive braid generator contributes writhe +1.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qinv {

enum class EventKind : std::uint8_t { Cup, Cap, CrossPos, CrossNeg };

struct MorseEvent {
  EventKind kind;
  int position;

  bool is_crossing() const { return kind == EventKind::CrossPos || kind == EventKind::CrossNeg; }
  friend bool operator==(const MorseEvent&, const MorseEvent&) = default;
};

class MorseWord {
 public:
  MorseWord() = default;
  /// Throws UsageError if the word is not a closed diagram.
  explicit MorseWord(std::vector<MorseEvent> events);

  const std::vector<MorseEvent>& events() const { return events_; }
  std::size_t size() const { return events_.size(); }
  bool empty() const { return events_.empty(); }
  int crossing_count() const;
  int max_width() const;
  /// widths()[i] is the strand count just below event i; widths().back() == 0.
  std::vector<int> widths() const;
  friend bool operator==(const MorseWord&, const MorseWord&) = default;

 private:
  std::vector<MorseEvent> events_;
};

/// Why a word fails closure validation; None for a valid closed word.
enum class WordDefect { None, PositionOutOfRange, Unbalanced, NotClosed };
WordDefect check_word(const std::vector<MorseEvent>& events, std::size_t* bad_event = nullptr);

/// Strand segments between events.  Every event joins segment ends: a cup
/// joins two bottom ends, a cap two top ends, a crossing carries each
/// incoming segment to the outgoing one on the other side.
struct ArcTable {
  struct Slot {
    int below[2] = {-1, -1};  // segments at p, p+1 entering the event
    int above[2] = {-1, -1};  // segments at p, p+1 leaving the event
  };
  std::vector<Slot> slots;  // one per event
  int segment_count = 0;
};
ArcTable build_arcs(const MorseWord& word);

struct BraidWord {
  int strands = 1;
  /// Signed generator indices: +i is sigma_i, -i its inverse (1 <= i < strands).
  std::vector<int> letters;
};

/// Per-component orientation data.  Components are numbered in the order of
/// their first cup; each is oriented upward along the left leg of that cup.
struct ComponentInfo {
  int count = 0;
  std::vector<int> segment_component;
  std::vector<int> segment_direction;  // +1 upward, -1 downward
  std::vector<int> writhe;             // per component
  std::vector<std::vector<int>> linking;
  /// crossing_sign[i] for event i (0 for cups and caps).
  std::vector<int> crossing_sign;
  /// first_cup[c] is the event index of component c's first cup.
  std::vector<int> first_cup;
};
ComponentInfo analyze(const MorseWord& word);

class FramedLinkDiagram {
 public:
  FramedLinkDiagram() = default;
  /// Framings default to the blackboard writhe of each component.
  explicit FramedLinkDiagram(MorseWord word);
  FramedLinkDiagram(MorseWord word, std::vector<int> framings);

  const MorseWord& word() const { return word_; }
  const std::vector<int>& framings() const { return framings_; }
  int component_count() const { return info_.count; }
  const ComponentInfo& info() const { return info_; }
  int writhe(int component) const { return info_.writhe.at(component); }
  int linking_number(int a, int b) const { return info_.linking.at(a).at(b); }

  FramedLinkDiagram with_framings(std::vector<int> framings) const;
  friend bool operator==(const FramedLinkDiagram& a, const FramedLinkDiagram& b) {
    return a.word_ == b.word_ && a.framings_ == b.framings_;
  }

 private:
  MorseWord word_;
  std::vector<int> framings_;
  ComponentInfo info_;
};

/// Trace closure: n nested cups, the braid acting on the left legs, n caps.
FramedLinkDiagram braid_closure(const BraidWord& braid);

/// Swaps every crossing type and negates every framing.
FramedLinkDiagram mirror(const FramedLinkDiagram& d);

/// d2 placed after d1 (positions unchanged, width is 0 between them).
FramedLinkDiagram distant_union(const FramedLinkDiagram& d1, const FramedLinkDiagram& d2);

/// Inserts |t| curls of sign(t) just below the last cap of `component`.
/// Framings are kept; blackboard writhe of the component changes by t.
FramedLinkDiagram insert_kinks(const FramedLinkDiagram& d, int component, int t);

/// Adds kinks until every component's blackboard writhe equals its framing.
FramedLinkDiagram blackboard_framed(const FramedLinkDiagram& d);

/// Blackboard-parallel satellite with multiplicities[c] copies of component c.
/// Components with multiplicity 0 are deleted.  The result keeps blackboard
/// framings; copies get their orientation from the usual convention, so
/// parallel copies need not be co-oriented.
FramedLinkDiagram cable(const FramedLinkDiagram& d, const std::vector<int>& multiplicities);

/// Standard small diagrams.
FramedLinkDiagram unknot(int framing = 0);
FramedLinkDiagram hopf_link(int framing_a = 0, int framing_b = 0);
FramedLinkDiagram empty_link();

std::string to_string(EventKind kind);

}  // namespace qinv

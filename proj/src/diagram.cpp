#include "qinv/diagram.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "qinv/errors.hpp"

namespace qinv {

WordDefect check_word(const std::vector<MorseEvent>& events, std::size_t* bad_event) {
  int width = 0;
  for (std::size_t i = 0; i < events.size(); ++i) {
    const auto& e = events[i];
    if (bad_event) *bad_event = i;
    if (e.position < 0) return WordDefect::PositionOutOfRange;
    switch (e.kind) {
      case EventKind::Cup:
        if (e.position > width) return WordDefect::PositionOutOfRange;
        width += 2;
        break;
      case EventKind::Cap:
        if (width < 2) return WordDefect::Unbalanced;
        if (e.position + 1 >= width) return WordDefect::PositionOutOfRange;
        width -= 2;
        break;
      case EventKind::CrossPos:
      case EventKind::CrossNeg:
        if (e.position + 1 >= width) return WordDefect::PositionOutOfRange;
        break;
    }
  }
  if (bad_event) *bad_event = events.size();
  return width == 0 ? WordDefect::None : WordDefect::NotClosed;
}

MorseWord::MorseWord(std::vector<MorseEvent> events) : events_(std::move(events)) {
  std::size_t bad = 0;
  switch (check_word(events_, &bad)) {
    case WordDefect::None:
      return;
    case WordDefect::PositionOutOfRange:
      throw UsageError("Morse event " + std::to_string(bad) + ": position out of range");
    case WordDefect::Unbalanced:
      throw UsageError("Morse event " + std::to_string(bad) + ": cap with fewer than two strands");
    case WordDefect::NotClosed:
      throw UsageError("Morse word does not close: final strand count is nonzero");
  }
}

int MorseWord::crossing_count() const {
  return static_cast<int>(
      std::count_if(events_.begin(), events_.end(), [](const MorseEvent& e) { return e.is_crossing(); }));
}

std::vector<int> MorseWord::widths() const {
  std::vector<int> out;
  out.reserve(events_.size() + 1);
  int w = 0;
  for (const auto& e : events_) {
    out.push_back(w);
    if (e.kind == EventKind::Cup) w += 2;
    if (e.kind == EventKind::Cap) w -= 2;
  }
  out.push_back(w);
  return out;
}

int MorseWord::max_width() const {
  const auto w = widths();
  return *std::max_element(w.begin(), w.end());
}

ArcTable build_arcs(const MorseWord& word) {
  ArcTable table;
  table.slots.resize(word.size());
  std::vector<int> current;  // segment id at each position
  int next = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const auto& e = word.events()[i];
    auto& slot = table.slots[i];
    const auto at = current.begin() + e.position;
    switch (e.kind) {
      case EventKind::Cup:
        slot.above[0] = next++;
        slot.above[1] = next++;
        current.insert(at, {slot.above[0], slot.above[1]});
        break;
      case EventKind::Cap:
        slot.below[0] = current[e.position];
        slot.below[1] = current[e.position + 1];
        current.erase(at, at + 2);
        break;
      case EventKind::CrossPos:
      case EventKind::CrossNeg:
        slot.below[0] = current[e.position];
        slot.below[1] = current[e.position + 1];
        slot.above[0] = next++;
        slot.above[1] = next++;
        current[e.position] = slot.above[0];
        current[e.position + 1] = slot.above[1];
        break;
    }
  }
  table.segment_count = next;
  return table;
}

ComponentInfo analyze(const MorseWord& word) {
  const ArcTable arcs = build_arcs(word);
  const int segs = arcs.segment_count;
  // End 2s is the bottom of segment s, 2s+1 its top.
  std::vector<int> partner(2 * segs, -1);
  auto join = [&](int a, int b) {
    partner[a] = b;
    partner[b] = a;
  };
  for (std::size_t i = 0; i < word.size(); ++i) {
    const auto& s = arcs.slots[i];
    switch (word.events()[i].kind) {
      case EventKind::Cup:
        join(2 * s.above[0], 2 * s.above[1]);
        break;
      case EventKind::Cap:
        join(2 * s.below[0] + 1, 2 * s.below[1] + 1);
        break;
      default:
        join(2 * s.below[0] + 1, 2 * s.above[1]);
        join(2 * s.below[1] + 1, 2 * s.above[0]);
        break;
    }
  }

  ComponentInfo info;
  info.segment_component.assign(segs, -1);
  info.segment_direction.assign(segs, 0);
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word.events()[i].kind != EventKind::Cup) continue;
    const int start = arcs.slots[i].above[0];
    if (info.segment_component[start] >= 0) continue;
    const int c = info.count++;
    info.first_cup.push_back(static_cast<int>(i));
    int seg = start, dir = 1;
    while (true) {
      info.segment_component[seg] = c;
      info.segment_direction[seg] = dir;
      const int next = partner[2 * seg + (dir > 0 ? 1 : 0)];
      seg = next / 2;
      dir = (next % 2 == 0) ? 1 : -1;
      if (seg == start && dir == 1) break;
    }
  }

  info.writhe.assign(info.count, 0);
  info.linking.assign(info.count, std::vector<int>(info.count, 0));
  info.crossing_sign.assign(word.size(), 0);
  for (std::size_t i = 0; i < word.size(); ++i) {
    const auto& e = word.events()[i];
    if (!e.is_crossing()) continue;
    const auto& s = arcs.slots[i];
    const int type = e.kind == EventKind::CrossPos ? 1 : -1;
    const int sign = type * info.segment_direction[s.below[0]] * info.segment_direction[s.below[1]];
    info.crossing_sign[i] = sign;
    const int a = info.segment_component[s.below[0]];
    const int b = info.segment_component[s.below[1]];
    if (a == b) {
      info.writhe[a] += sign;
    } else {
      info.linking[a][b] += sign;
      info.linking[b][a] += sign;
    }
  }
  for (auto& row : info.linking)
    for (auto& v : row) v /= 2;
  return info;
}

// ---------------------------------------------------------------- FramedLinkDiagram

FramedLinkDiagram::FramedLinkDiagram(MorseWord word) : word_(std::move(word)), info_(analyze(word_)) {
  framings_ = info_.writhe;
}

FramedLinkDiagram::FramedLinkDiagram(MorseWord word, std::vector<int> framings)
    : word_(std::move(word)), framings_(std::move(framings)), info_(analyze(word_)) {
  if (static_cast<int>(framings_.size()) != info_.count)
    throw UsageError("framing vector has " + std::to_string(framings_.size()) + " entries for " +
                     std::to_string(info_.count) + " components");
}

FramedLinkDiagram FramedLinkDiagram::with_framings(std::vector<int> framings) const {
  return FramedLinkDiagram(word_, std::move(framings));
}

FramedLinkDiagram braid_closure(const BraidWord& braid) {
  const int n = braid.strands;
  if (n < 1) throw UsageError("braid needs at least one strand");
  std::vector<MorseEvent> events;
  for (int i = 0; i < n; ++i) events.push_back({EventKind::Cup, i});
  for (int letter : braid.letters) {
    const int g = std::abs(letter);
    if (letter == 0 || g >= n)
      throw UsageError("braid generator " + std::to_string(g) + " out of range for " + std::to_string(n) +
                       " strands");
    events.push_back({letter > 0 ? EventKind::CrossPos : EventKind::CrossNeg, g - 1});
  }
  for (int i = n; i-- > 0;) events.push_back({EventKind::Cap, i});
  return FramedLinkDiagram(MorseWord(std::move(events)));
}

FramedLinkDiagram mirror(const FramedLinkDiagram& d) {
  std::vector<MorseEvent> events = d.word().events();
  for (auto& e : events) {
    if (e.kind == EventKind::CrossPos)
      e.kind = EventKind::CrossNeg;
    else if (e.kind == EventKind::CrossNeg)
      e.kind = EventKind::CrossPos;
  }
  std::vector<int> framings = d.framings();
  for (auto& f : framings) f = -f;
  return FramedLinkDiagram(MorseWord(std::move(events)), std::move(framings));
}

FramedLinkDiagram distant_union(const FramedLinkDiagram& d1, const FramedLinkDiagram& d2) {
  std::vector<MorseEvent> events = d1.word().events();
  events.insert(events.end(), d2.word().events().begin(), d2.word().events().end());
  std::vector<int> framings = d1.framings();
  framings.insert(framings.end(), d2.framings().begin(), d2.framings().end());
  return FramedLinkDiagram(MorseWord(std::move(events)), std::move(framings));
}

FramedLinkDiagram insert_kinks(const FramedLinkDiagram& d, int component, int t) {
  if (component < 0 || component >= d.component_count())
    throw UsageError("insert_kinks: no component " + std::to_string(component));
  if (t == 0) return d;
  // Twist the component's last cap: its legs are antiparallel, so a
  // crossing of type x+ right below it is a curl of writhe -1.  This needs no
  // extra width and leaves the orientation (fixed at the first cup) alone.
  const auto& events_in = d.word().events();
  const ArcTable arcs = build_arcs(d.word());
  std::size_t at = events_in.size();
  for (std::size_t i = events_in.size(); i-- > 0;)
    if (events_in[i].kind == EventKind::Cap && d.info().segment_component[arcs.slots[i].below[0]] == component) {
      at = i;
      break;
    }
  const int p = events_in[at].position;
  const EventKind kind = t > 0 ? EventKind::CrossNeg : EventKind::CrossPos;
  std::vector<MorseEvent> events = events_in;
  events.insert(events.begin() + static_cast<std::ptrdiff_t>(at), std::abs(t), MorseEvent{kind, p});
  return FramedLinkDiagram(MorseWord(std::move(events)), d.framings());
}

FramedLinkDiagram blackboard_framed(const FramedLinkDiagram& d) {
  FramedLinkDiagram out = d;
  for (int c = 0; c < d.component_count(); ++c) out = insert_kinks(out, c, d.framings()[c] - out.writhe(c));
  return out;
}

FramedLinkDiagram cable(const FramedLinkDiagram& d, const std::vector<int>& multiplicities) {
  const int n = d.component_count();
  if (static_cast<int>(multiplicities.size()) != n)
    throw UsageError("cable: " + std::to_string(multiplicities.size()) + " multiplicities for " +
                     std::to_string(n) + " components");
  for (int m : multiplicities)
    if (m < 0) throw UsageError("cable: negative multiplicity");

  const ArcTable arcs = build_arcs(d.word());
  const auto& comp_of = d.info().segment_component;
  std::vector<int> comp_at;  // component of the strand at each position
  std::vector<MorseEvent> out;
  for (std::size_t i = 0; i < d.word().size(); ++i) {
    const auto& e = d.word().events()[i];
    int base = 0;
    for (int j = 0; j < e.position; ++j) base += multiplicities[comp_at[j]];
    switch (e.kind) {
      case EventKind::Cup: {
        const int c = comp_of[arcs.slots[i].above[0]];
        const int m = multiplicities[c];
        for (int j = 0; j < m; ++j) out.push_back({EventKind::Cup, base + j});
        comp_at.insert(comp_at.begin() + e.position, {c, c});
        break;
      }
      case EventKind::Cap: {
        const int m = multiplicities[comp_at[e.position]];
        for (int j = m; j-- > 0;) out.push_back({EventKind::Cap, base + j});
        comp_at.erase(comp_at.begin() + e.position, comp_at.begin() + e.position + 2);
        break;
      }
      default: {
        const int ma = multiplicities[comp_at[e.position]];
        const int mb = multiplicities[comp_at[e.position + 1]];
        for (int a = ma; a-- > 0;)
          for (int b = 0; b < mb; ++b) out.push_back({e.kind, base + a + b});
        std::swap(comp_at[e.position], comp_at[e.position + 1]);
        break;
      }
    }
  }
  return FramedLinkDiagram(MorseWord(std::move(out)));
}

FramedLinkDiagram unknot(int framing) {
  return FramedLinkDiagram(MorseWord({{EventKind::Cup, 0}, {EventKind::Cap, 0}}), {framing});
}

FramedLinkDiagram hopf_link(int framing_a, int framing_b) {
  return braid_closure(BraidWord{2, {1, 1}}).with_framings({framing_a, framing_b});
}

FramedLinkDiagram empty_link() { return FramedLinkDiagram(MorseWord()); }

std::string to_string(EventKind kind) {
  switch (kind) {
    case EventKind::Cup:
      return "cup";
    case EventKind::Cap:
      return "cap";
    case EventKind::CrossPos:
      return "x+";
    case EventKind::CrossNeg:
      return "x-";
  }
  return "?";
}

}  // namespace qinv

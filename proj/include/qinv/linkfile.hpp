#pragma once

// Link file text format.
//
//   # comment
//   link <name>                 starts a named block (optional for one block)
//   braid <n> : s1 S2 s1        trace closure; S<i> is the inverse generator
//   cup <p> | cap <p> | x+ <p> | x- <p>     Morse events, bottom to top
//   framing <c>=<int>           target framing of component c (0-based)
//   special <c> [<c> ...]       marks components as 1-handles
//
// A '/' separates statements on one line.  A block holds either one braid
// line or Morse events.  Components are numbered by first cup.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qinv/diagram.hpp"
#include "qinv/invariants.hpp"

namespace qinv {

struct LinkBlock {
  std::string name;
  int line = 0;
  FramedLinkDiagram diagram;
  std::vector<bool> special;

  SpecialFramedLink special_link() const { return {diagram, special}; }
};

std::vector<LinkBlock> parse_link_file(std::string_view text);

/// The braid grammar alone: "braid <n> : s<i> ...".
BraidWord parse_braid(std::string_view text);
/// A single block of Morse events and framing lines.
FramedLinkDiagram parse_morse(std::string_view text);

/// Serializes a block as Morse events with explicit framings.
std::string write_link(const LinkBlock& block);

/// Bundled manifold presentations: s3, s3-u+1, s1xs2, lens-<p>, poincare,
/// s4, s4-hopf, cp2, cp2bar, s2xs2, s1xs3.
std::optional<LinkBlock> preset(std::string_view name);
std::vector<std::string> preset_names();

}  // namespace qinv

#include "qinv/linkfile.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "qinv/errors.hpp"

namespace qinv {

namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

struct Statement {
  int line;
  std::vector<Token> tokens;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Splits text into statements: '#' starts a comment, '\n' and '/' end a
// statement, whitespace separates tokens.
std::vector<Statement> tokenize(std::string_view text) {
  std::vector<Statement> out;
  int line = 1;
  std::size_t line_start = 0;
  Statement current{1, {}};
  auto flush = [&] {
    if (!current.tokens.empty()) out.push_back(std::move(current));
    current = Statement{line, {}};
  };
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      line_start = i + 1;
      flush();
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (c == '/') {
      flush();
      ++i;
    } else if (is_space(c)) {
      ++i;
    } else {
      const std::size_t start = i;
      while (i < text.size() && !is_space(text[i]) && text[i] != '\n' && text[i] != '#' && text[i] != '/') ++i;
      current.tokens.push_back({text.substr(start, i - start), static_cast<int>(start - line_start) + 1});
    }
  }
  flush();
  return out;
}

long parse_int(const Token& t, int line, const char* what) {
  long v = 0;
  std::string_view s = t.text;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ParseError(line, t.column, std::string("expected ") + what + ", got '" + std::string(t.text) + "'");
  return v;
}

int parse_count(const Token& t, int line, const char* what) {
  const long v = parse_int(t, line, what);
  if (v < 0 || v > 1'000'000) throw ParseError(line, t.column, std::string(what) + " out of range");
  return static_cast<int>(v);
}

struct PendingBlock {
  std::string name;
  int line = 0;
  int name_column = 0;
  std::vector<MorseEvent> events;
  std::vector<int> event_lines, event_columns;
  int braid_line = 0;
  BraidWord braid;
  std::map<int, std::pair<long, Statement>> framings;  // component -> value, source
  std::vector<std::pair<int, Token>> special;          // component, source token
  std::vector<int> special_lines;
  int last_line = 0;
};

BraidWord parse_braid_statement(const Statement& s) {
  // braid <n> : letters...   (the colon may be attached to n)
  const auto& t = s.tokens;
  if (t.size() < 2) throw ParseError(s.line, t[0].column, "braid needs a strand count");
  std::string_view count = t[1].text;
  bool colon = false;
  if (!count.empty() && count.back() == ':') {
    count.remove_suffix(1);
    colon = true;
  }
  BraidWord b;
  b.strands = parse_count(Token{count, t[1].column}, s.line, "strand count");
  if (b.strands < 1) throw ParseError(s.line, t[1].column, "braid needs at least one strand");
  std::size_t i = 2;
  if (!colon) {
    if (i >= t.size() || t[i].text != ":") throw ParseError(s.line, i < t.size() ? t[i].column : 0, "expected ':'");
    ++i;
  }
  for (; i < t.size(); ++i) {
    const Token& tok = t[i];
    if (tok.text.size() < 2 || (tok.text[0] != 's' && tok.text[0] != 'S'))
      throw ParseError(s.line, tok.column, "expected a generator s<i> or S<i>, got '" + std::string(tok.text) + "'");
    const int g = parse_count(Token{tok.text.substr(1), tok.column + 1}, s.line, "generator index");
    if (g < 1 || g >= b.strands)
      throw ParseError(s.line, tok.column,
                       "generator " + std::string(tok.text) + " out of range for " + std::to_string(b.strands) +
                           " strands");
    b.letters.push_back(tok.text[0] == 's' ? g : -g);
  }
  return b;
}

LinkBlock finish(PendingBlock& p) {
  LinkBlock out;
  out.name = p.name;
  out.line = p.line;
  MorseWord word;
  if (p.braid_line != 0) {
    word = braid_closure(p.braid).word();
  } else {
    std::size_t bad = 0;
    switch (check_word(p.events, &bad)) {
      case WordDefect::None:
        break;
      case WordDefect::PositionOutOfRange:
        throw ParseError(p.event_lines[bad], p.event_columns[bad],
                         "event position " + std::to_string(p.events[bad].position) + " out of range");
      case WordDefect::Unbalanced:
        throw ParseError(p.event_lines[bad], p.event_columns[bad], "unbalanced word: cap with too few strands");
      case WordDefect::NotClosed:
        throw ParseError(p.event_lines.empty() ? p.last_line : p.event_lines.back(), 0,
                         "word does not close: nonzero strand count at the top");
    }
    word = MorseWord(p.events);
  }
  FramedLinkDiagram d(std::move(word));
  std::vector<int> framings = d.framings();
  for (const auto& [c, entry] : p.framings) {
    if (c >= d.component_count())
      throw ParseError(entry.second.line, entry.second.tokens[0].column,
                       "framing for component " + std::to_string(c) + " but the link has " +
                           std::to_string(d.component_count()) + " components");
    framings[c] = static_cast<int>(entry.first);
  }
  out.diagram = d.with_framings(std::move(framings));
  out.special.assign(d.component_count(), false);
  for (std::size_t i = 0; i < p.special.size(); ++i) {
    const auto& [c, tok] = p.special[i];
    if (c >= d.component_count())
      throw ParseError(p.special_lines[i], tok.column,
                       "special component " + std::to_string(c) + " but the link has " +
                           std::to_string(d.component_count()) + " components");
    out.special[c] = true;
  }
  return out;
}

std::vector<LinkBlock> parse_statements(const std::vector<Statement>& statements) {
  std::vector<LinkBlock> blocks;
  PendingBlock current;
  bool open = false, touched = false;
  auto close = [&] {
    if (open || touched) blocks.push_back(finish(current));
    current = PendingBlock{};
    open = touched = false;
  };
  for (const auto& s : statements) {
    const Token& head = s.tokens[0];
    const std::string_view kw = head.text;
    auto arg = [&](std::size_t i, const char* what) -> const Token& {
      if (s.tokens.size() <= i) throw ParseError(s.line, 0, std::string("missing ") + what);
      return s.tokens[i];
    };
    auto no_extra = [&](std::size_t n) {
      if (s.tokens.size() > n) throw ParseError(s.line, s.tokens[n].column, "unexpected '" + std::string(s.tokens[n].text) + "'");
    };
    if (kw == "link") {
      close();
      const Token& name = arg(1, "link name");
      no_extra(2);
      current.name = std::string(name.text);
      current.line = s.line;
      open = true;
      continue;
    }
    if (!open && !touched) current.line = s.line;
    touched = true;
    current.last_line = s.line;
    if (kw == "cup" || kw == "cap" || kw == "x+" || kw == "x-") {
      if (current.braid_line != 0) throw ParseError(s.line, head.column, "Morse event in a block that already has a braid");
      const EventKind kind = kw == "cup"  ? EventKind::Cup
                             : kw == "cap" ? EventKind::Cap
                             : kw == "x+"  ? EventKind::CrossPos
                                           : EventKind::CrossNeg;
      const int p = parse_count(arg(1, "position"), s.line, "position");
      no_extra(2);
      current.events.push_back({kind, p});
      current.event_lines.push_back(s.line);
      current.event_columns.push_back(head.column);
    } else if (kw == "braid") {
      if (current.braid_line != 0) throw ParseError(s.line, head.column, "second braid line in one block");
      if (!current.events.empty()) throw ParseError(s.line, head.column, "braid in a block that already has Morse events");
      current.braid = parse_braid_statement(s);
      current.braid_line = s.line;
    } else if (kw == "framing") {
      // framing c=v, framing c = v, framing c v
      std::string joined;
      for (std::size_t i = 1; i < s.tokens.size(); ++i) joined += std::string(s.tokens[i].text) + (i + 1 < s.tokens.size() ? " " : "");
      std::replace(joined.begin(), joined.end(), '=', ' ');
      std::istringstream in(joined);
      std::string a, b, extra;
      in >> a >> b;
      if (a.empty() || b.empty() || (in >> extra))
        throw ParseError(s.line, arg(1, "framing").column, "expected framing <component>=<integer>");
      const int col = s.tokens[1].column;
      const int c = parse_count(Token{a, col}, s.line, "component index");
      const long v = parse_int(Token{b, col}, s.line, "framing integer");
      current.framings[c] = {v, s};
    } else if (kw == "special") {
      arg(1, "component index");
      for (std::size_t i = 1; i < s.tokens.size(); ++i) {
        current.special.emplace_back(parse_count(s.tokens[i], s.line, "component index"), s.tokens[i]);
        current.special_lines.push_back(s.line);
      }
    } else {
      throw ParseError(s.line, head.column, "unknown statement '" + std::string(kw) + "'");
    }
  }
  close();
  return blocks;
}

}  // namespace

std::vector<LinkBlock> parse_link_file(std::string_view text) {
  auto blocks = parse_statements(tokenize(text));
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!blocks[i].name.empty() && blocks[i].name == blocks[j].name)
        throw ParseError(blocks[i].line, 0, "duplicate link name '" + blocks[i].name + "'");
  return blocks;
}

BraidWord parse_braid(std::string_view text) {
  const auto statements = tokenize(text);
  if (statements.size() != 1 || statements[0].tokens[0].text != "braid")
    throw ParseError(statements.empty() ? 1 : statements[0].line, 0, "expected a single braid line");
  return parse_braid_statement(statements[0]);
}

FramedLinkDiagram parse_morse(std::string_view text) {
  auto blocks = parse_link_file(text);
  if (blocks.size() > 1) throw ParseError(blocks[1].line, 0, "expected a single link block");
  return blocks.empty() ? empty_link() : blocks[0].diagram;
}

std::string write_link(const LinkBlock& block) {
  std::ostringstream out;
  if (!block.name.empty()) out << "link " << block.name << "\n";
  for (const auto& e : block.diagram.word().events()) out << to_string(e.kind) << " " << e.position << "\n";
  for (int c = 0; c < block.diagram.component_count(); ++c) out << "framing " << c << "=" << block.diagram.framings()[c] << "\n";
  for (std::size_t c = 0; c < block.special.size(); ++c)
    if (block.special[c]) out << "special " << c << "\n";
  return out.str();
}

namespace {

const std::vector<std::pair<std::string, std::string>>& preset_table() {
  static const std::vector<std::pair<std::string, std::string>> table = {
      {"s3", ""},
      {"s3-u+1", "cup 0 / cap 0 / framing 0=1"},
      {"s1xs2", "cup 0 / cap 0 / framing 0=0"},
      {"poincare", "braid 2 : S1 S1 S1 / framing 0=-1"},
      {"s4", ""},
      {"s4-hopf", "braid 2 : s1 s1 / framing 0=0 / framing 1=0 / special 1"},
      {"cp2", "cup 0 / cap 0 / framing 0=1"},
      {"cp2bar", "cup 0 / cap 0 / framing 0=-1"},
      {"s2xs2", "braid 2 : s1 s1 / framing 0=0 / framing 1=0"},
      {"s1xs3", "cup 0 / cap 0 / special 0"},
  };
  return table;
}

}  // namespace

std::optional<LinkBlock> preset(std::string_view name) {
  for (const auto& [n, text] : preset_table()) {
    if (n != name) continue;
    auto blocks = parse_link_file(text);
    LinkBlock b = blocks.empty() ? LinkBlock{std::string(name), 0, empty_link(), {}} : blocks[0];
    b.name = n;
    return b;
  }
  constexpr std::string_view lens = "lens-";
  if (name.substr(0, lens.size()) == lens) {
    long p = 0;
    const std::string_view rest = name.substr(lens.size());
    const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), p);
    if (ec != std::errc() || ptr != rest.data() + rest.size() || rest.empty()) return std::nullopt;
    LinkBlock b{std::string(name), 0, unknot(static_cast<int>(p)), {false}};
    return b;
  }
  return std::nullopt;
}

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const auto& [n, text] : preset_table()) out.push_back(n);
  out.push_back("lens-<p>");
  return out;
}

}  // namespace qinv

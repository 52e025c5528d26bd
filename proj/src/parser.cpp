#include "diagc/parser.hpp"

#include <array>
#include <charconv>
#include <map>
#include <utility>

namespace diagc {

namespace {

// Replaces `%` comments with spaces so that line/column positions survive.
std::string strip_comments(std::string_view text) {
  std::string out(text);
  bool escaped = false;
  for (std::size_t i = 0; i < out.size(); ++i) {
    char c = out[i];
    if (escaped) {
      escaped = false;
      continue;
    }
    if (c == '\\') {
      escaped = true;
    } else if (c == '%') {
      while (i < out.size() && out[i] != '\n') out[i++] = ' ';
    }
  }
  return out;
}

bool is_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

std::size_t utf8_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead >> 5) == 0x6) return 2;
  if ((lead >> 4) == 0xe) return 3;
  if ((lead >> 3) == 0x1e) return 4;
  return 1;
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return eof() ? '\0' : text_[pos_]; }
  SourceLocation loc() const { return {line_, col_}; }
  std::size_t pos() const { return pos_; }

  char get() {
    if (eof()) fail("unexpected end of input");
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else if ((static_cast<unsigned char>(c) & 0xc0) != 0x80) {
      ++col_;
    }
    return c;
  }

  void skip_space() {
    while (!eof() && is_space(peek())) get();
  }

  void expect(char c, std::string_view what) {
    skip_space();
    if (eof()) fail("unexpected end of input, expected '" + std::string(1, c) + "' " + std::string(what));
    if (peek() != c)
      fail("expected '" + std::string(1, c) + "' " + std::string(what) + ", found '" + std::string(1, peek()) + "'");
    get();
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, loc()); }
  [[noreturn]] void fail_at(SourceLocation at, const std::string& msg) const { throw ParseError(msg, at); }

  // Raw text up to `close` at brace depth 0; the delimiter is consumed.
  std::string read_delimited(char close, std::string_view what) {
    SourceLocation start = loc();
    std::string out;
    int depth = 0;
    while (true) {
      if (eof()) fail_at(start, "unterminated " + std::string(what) + ": missing '" + std::string(1, close) + "'");
      char c = peek();
      if (c == '\\') {
        out += get();
        if (!eof()) out += get();
        continue;
      }
      if (depth == 0 && c == close) {
        get();
        return out;
      }
      if (c == '{') ++depth;
      if (c == '}') {
        if (depth == 0) fail("unbalanced '}' in " + std::string(what));
        --depth;
      }
      out += get();
    }
  }

  // At '{': returns the group's inner text.
  std::string read_group(std::string_view what) {
    expect('{', what);
    SourceLocation start = loc();
    std::string out;
    int depth = 0;
    while (true) {
      if (eof()) fail_at(start, "unbalanced braces in " + std::string(what));
      char c = peek();
      if (c == '\\') {
        out += get();
        if (!eof()) out += get();
        continue;
      }
      if (c == '}' && depth == 0) {
        get();
        return out;
      }
      if (c == '{') ++depth;
      if (c == '}') --depth;
      out += get();
    }
  }

  std::string read_name() {
    std::string name;
    while (!eof() && is_letter(peek())) name += get();
    return name;
  }

  // One TeX argument token: a group, a control sequence, or a character.
  std::string read_argument(std::string_view what) {
    skip_space();
    if (eof()) fail("unexpected end of input, expected " + std::string(what));
    char c = peek();
    if (c == '{') return read_group(what);
    if (c == '}') fail("unbalanced '}' in " + std::string(what));
    std::string out(1, get());
    if (c == '\\') {
      if (eof()) fail("unexpected end of input in " + std::string(what));
      if (is_letter(peek())) {
        out += read_name();
      } else {
        std::size_t n = utf8_length(static_cast<unsigned char>(peek()));
        for (std::size_t i = 0; i < n && !eof(); ++i) out += get();
      }
      return out;
    }
    std::size_t n = utf8_length(static_cast<unsigned char>(c));
    for (std::size_t i = 1; i < n && !eof(); ++i) out += get();
    return out;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Removes one enclosing group when the whole text is a single {...}.
std::string strip_group(std::string_view s) {
  if (s.size() < 2 || s.front() != '{' || s.back() != '}') return std::string(s);
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '\\') {
      ++i;
      continue;
    }
    if (c == '{') ++depth;
    if (c == '}' && --depth == 0 && i + 1 != s.size()) return std::string(s);
  }
  return std::string(s.substr(1, s.size() - 2));
}

// Splits on `sep` at brace depth 0. Throws std::invalid_argument on bad nesting.
std::vector<std::string> split_top(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '\\') {
      cur += c;
      if (i + 1 < s.size()) cur += s[++i];
      continue;
    }
    if (c == '{') ++depth;
    if (c == '}' && --depth < 0) throw std::invalid_argument("unbalanced braces");
    if (c == sep && depth == 0) {
      parts.push_back(std::move(cur));
      cur.clear();
      continue;
    }
    cur += c;
  }
  if (depth != 0) throw std::invalid_argument("unbalanced braces");
  parts.push_back(std::move(cur));
  return parts;
}

std::size_t find_top(std::string_view s, char sep) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '\\') {
      ++i;
      continue;
    }
    if (c == '{') ++depth;
    if (c == '}') --depth;
    if (c == sep && depth == 0) return i;
  }
  return std::string_view::npos;
}

PayloadFields split_payload(std::string_view inner) {
  PayloadFields out;
  std::size_t semi = find_top(inner, ';');
  auto fields = [](std::string_view part) {
    std::vector<std::string> v;
    for (auto& f : split_top(part, '`')) v.push_back(strip_group(trim(f)));
    return v;
  };
  if (semi == std::string_view::npos) {
    out.nodes = fields(inner);
  } else {
    out.has_semicolon = true;
    out.nodes = fields(inner.substr(0, semi));
    out.labels = fields(inner.substr(semi + 1));
  }
  return out;
}

enum class MaskKind { None, Grid3x3, Grid3x2 };

struct ClauseShape {
  bool has_origin = true;
  Point origin{0, 0};
  bool has_align = false;
  std::size_t placements = 0;
  std::string_view default_placements;
  bool placements_may_be_empty = false;
  std::size_t styles = 0;
  std::vector<std::string> default_styles;  // empty: all ">"
  std::size_t extent = 0;
  std::array<Length, 2> default_extent{kDefaultLength, kDefaultLength};
  MaskKind mask = MaskKind::None;
  bool has_payload = true;
  std::size_t nodes = 0;
  std::size_t labels = 0;
  bool semicolon = true;
};

struct CommandInfo {
  CommandKind kind;
  char variant;
};

const std::map<std::string, CommandInfo, std::less<>>& command_table() {
  static const std::map<std::string, CommandInfo, std::less<>> table = {
      {"morphism", {CommandKind::Morphism, 0}},
      {"vector", {CommandKind::Vector, 0}},
      {"place", {CommandKind::Place, 0}},
      {"square", {CommandKind::Square, 0}},
      {"Square", {CommandKind::AutoSquare, 0}},
      {"ptriangle", {CommandKind::Triangle, 'p'}},
      {"qtriangle", {CommandKind::Triangle, 'q'}},
      {"dtriangle", {CommandKind::Triangle, 'd'}},
      {"btriangle", {CommandKind::Triangle, 'b'}},
      {"Atriangle", {CommandKind::Triangle, 'A'}},
      {"Vtriangle", {CommandKind::Triangle, 'V'}},
      {"Ctriangle", {CommandKind::Triangle, 'C'}},
      {"Dtriangle", {CommandKind::Triangle, 'D'}},
      {"Atrianglepair", {CommandKind::TrianglePair, 'A'}},
      {"Vtrianglepair", {CommandKind::TrianglePair, 'V'}},
      {"Ctrianglepair", {CommandKind::TrianglePair, 'C'}},
      {"Dtrianglepair", {CommandKind::TrianglePair, 'D'}},
      {"hSquares", {CommandKind::HSquares, 0}},
      {"vSquares", {CommandKind::VSquares, 0}},
      {"cube", {CommandKind::Cube, 0}},
      {"pullback", {CommandKind::Pullback, 0}},
      {"iiixiii", {CommandKind::Grid3x3, 0}},
      {"iiixii", {CommandKind::Grid3x2, 0}},
      {"to", {CommandKind::InlineTo, 0}},
      {"two", {CommandKind::Two, 0}},
      {"three", {CommandKind::Three, 0}},
      {"twoar", {CommandKind::TwoAr, 0}},
      {"scalefactor", {CommandKind::ScaleFactor, 0}},
  };
  return table;
}

std::string_view triangle_placements(char v) {
  switch (v) {
    case 'p':
    case 'q': return "alr";
    case 'V':
    case 'D': return "alb";
    case 'C': return "arb";
    default: return "lrb";
  }
}

std::string_view pair_placements(char v) {
  switch (v) {
    case 'A': return "lmrbb";
    case 'V': return "aalmr";
    default: return "lrmlr";
  }
}

ClauseShape square_shape() {
  ClauseShape s;
  s.placements = 4;
  s.default_placements = "alrb";
  s.styles = 4;
  s.extent = 2;
  s.nodes = 4;
  s.labels = 4;
  return s;
}

// Shapes of the clauses that make up a command, in source order.
std::vector<ClauseShape> clause_shapes(CommandKind kind, char variant) {
  ClauseShape s;
  switch (kind) {
    case CommandKind::Morphism:
      s.placements = 1;
      s.default_placements = "a";
      s.placements_may_be_empty = true;
      s.styles = 1;
      s.extent = 2;
      s.default_extent = {kDefaultLength, 0};
      s.nodes = 2;
      s.labels = 1;
      return {s};
    case CommandKind::Vector:
      s.styles = 1;
      s.extent = 2;
      s.default_extent = {kDefaultLength, 0};
      s.has_payload = false;
      return {s};
    case CommandKind::Place:
      s.has_align = true;
      s.nodes = 1;
      s.semicolon = false;
      return {s};
    case CommandKind::Square: return {square_shape()};
    case CommandKind::AutoSquare: {
      ClauseShape a = square_shape();
      a.extent = 1;
      return {a};
    }
    case CommandKind::Triangle:
      s.placements = 3;
      s.default_placements = triangle_placements(variant);
      s.styles = 3;
      s.extent = 2;
      s.nodes = 3;
      s.labels = 3;
      return {s};
    case CommandKind::TrianglePair:
      s.placements = 5;
      s.default_placements = pair_placements(variant);
      s.styles = 5;
      s.extent = 2;
      s.nodes = 4;
      s.labels = 5;
      return {s};
    case CommandKind::HSquares:
      s.placements = 7;
      s.default_placements = "aalmrbb";
      s.styles = 7;
      s.extent = 1;
      s.nodes = 6;
      s.labels = 7;
      return {s};
    case CommandKind::VSquares:
      s.placements = 7;
      s.default_placements = "alrmlrb";
      s.styles = 7;
      s.extent = 2;
      s.nodes = 6;
      s.labels = 7;
      return {s};
    case CommandKind::Cube: {
      ClauseShape outer = square_shape();
      outer.default_extent = {1500, 1500};
      ClauseShape inner = square_shape();
      inner.origin = {kDefaultLength, kDefaultLength};
      ClauseShape conn;
      conn.has_origin = false;
      conn.placements = 4;
      conn.default_placements = "mmmm";
      conn.styles = 4;
      conn.nodes = 0;
      conn.labels = 4;
      conn.semicolon = false;
      return {outer, inner, conn};
    }
    case CommandKind::Pullback: {
      ClauseShape trident;
      trident.has_origin = false;
      trident.placements = 3;
      trident.default_placements = "amb";
      trident.styles = 3;
      trident.extent = 2;
      trident.nodes = 1;
      trident.labels = 3;
      return {square_shape(), trident};
    }
    case CommandKind::Grid3x3:
      s.placements = 12;
      s.default_placements = "aammbblmrlmr";
      s.styles = 12;
      s.extent = 2;
      s.mask = MaskKind::Grid3x3;
      s.nodes = 9;
      s.labels = 12;
      return {s};
    case CommandKind::Grid3x2:
      s.placements = 7;
      s.default_placements = "aabblmr";
      s.styles = 7;
      s.extent = 2;
      s.mask = MaskKind::Grid3x2;
      s.nodes = 6;
      s.labels = 7;
      return {s};
    default: return {};
  }
}

Length parse_length(std::string_view piece, Cursor& c, SourceLocation at) {
  std::string_view t = trim(piece);
  if (!t.empty() && t.front() == '+') t.remove_prefix(1);
  Length v = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || p != t.data() + t.size())
    c.fail_at(at, "expected an integer, found '" + std::string(trim(piece)) + "'");
  return v;
}

std::vector<Length> read_numbers(Cursor& c, char open, char close, std::size_t count, std::string_view what) {
  SourceLocation at = c.loc();
  c.expect(open, what);
  std::string body = c.read_delimited(close, what);
  std::vector<std::string> parts;
  try {
    parts = split_top(body, ',');
  } catch (const std::invalid_argument&) {
    c.fail_at(at, "malformed " + std::string(what));
  }
  if (parts.size() != count)
    c.fail_at(at, "malformed " + std::string(what) + ": expected " + std::to_string(count) + " integer" +
                      (count == 1 ? "" : "s"));
  std::vector<Length> out;
  for (auto& p : parts) out.push_back(parse_length(p, c, at));
  return out;
}

std::int64_t read_mask(Cursor& c) {
  c.skip_space();
  SourceLocation at = c.loc();
  std::string digits;
  if (c.peek() == '{') {
    digits = c.read_group("mask");
  } else {
    while (!c.eof() && c.peek() >= '0' && c.peek() <= '9') digits += c.get();
  }
  if (trim(digits).empty()) c.fail_at(at, "expected a bit mask");
  return parse_length(digits, c, at);
}

Clause parse_clause(Cursor& c, const ClauseShape& s, std::string_view cmd) {
  Clause cl;
  cl.origin = s.origin;
  c.skip_space();

  bool payload_read = false;
  if (s.has_align && c.peek() == '[') {
    SourceLocation at = c.loc();
    c.get();
    std::string first = c.read_delimited(']', "placement");
    c.skip_space();
    if (c.peek() == '(') {
      std::string_view a = trim(first);
      if (a.size() != 1 || std::string_view("lrud").find(a.front()) == std::string_view::npos)
        c.fail_at(at, "unsupported alignment '" + std::string(a) + "' (expected l, r, u or d)");
      cl.align = a.front();
    } else {
      cl.nodes = {strip_group(trim(first))};
      payload_read = true;
    }
  }

  c.skip_space();
  if (s.has_origin && !payload_read && c.peek() == '(') {
    auto v = read_numbers(c, '(', ')', 2, "position");
    cl.origin = {v[0], v[1]};
  }

  c.skip_space();
  cl.placements = std::string(s.default_placements);
  if (s.placements > 0 && c.peek() == '|') {
    SourceLocation at = c.loc();
    c.get();
    std::string raw = c.read_delimited('|', "placement section");
    std::string p;
    for (char ch : raw)
      if (!is_space(ch)) p += ch;
    bool ok = p.size() == s.placements || (s.placements_may_be_empty && p.empty());
    if (!ok)
      c.fail_at(at, "\\" + std::string(cmd) + " expects " + std::to_string(s.placements) +
                        " placement character" + (s.placements == 1 ? "" : "s") + ", got '" + p + "'");
    cl.placements = p;
  }

  c.skip_space();
  if (s.styles > 0) {
    if (c.peek() == '/') {
      SourceLocation at = c.loc();
      c.get();
      std::string raw = c.read_delimited('/', "style section");
      std::vector<std::string> parts;
      try {
        parts = split_top(raw, '`');
      } catch (const std::invalid_argument&) {
        c.fail_at(at, "malformed style section");
      }
      if (parts.size() != s.styles)
        c.fail_at(at, "\\" + std::string(cmd) + " expects " + std::to_string(s.styles) + " style" +
                          (s.styles == 1 ? "" : "s") + ", got " + std::to_string(parts.size()));
      for (auto& p : parts) cl.styles.push_back(strip_group(p));
    } else if (!s.default_styles.empty()) {
      cl.styles = s.default_styles;
    } else {
      cl.styles.assign(s.styles, ">");
    }
  }

  c.skip_space();
  if (s.extent > 0) {
    if (c.peek() == '<') {
      cl.extent = read_numbers(c, '<', '>', s.extent, "extent");
    } else {
      cl.extent.assign(s.default_extent.begin(), s.default_extent.begin() + s.extent);
    }
  }

  c.skip_space();
  if (s.mask == MaskKind::Grid3x3) {
    if (c.peek() != '[') {
      cl.mask = read_mask(c);
      c.skip_space();
      cl.stub = c.peek() == '<' ? read_numbers(c, '<', '>', 2, "stub extent") : std::vector<Length>{400, 400};
    } else {
      cl.mask = 0;
      cl.stub = {0, 0};
    }
  } else if (s.mask == MaskKind::Grid3x2) {
    if (c.peek() != '[') {
      cl.mask = read_mask(c);
      c.skip_space();
      cl.stub = c.peek() == '<' ? read_numbers(c, '<', '>', 1, "stub length") : std::vector<Length>{0};
    } else {
      cl.mask = 0;
      cl.stub = {0};
    }
  }

  if (s.has_payload && !payload_read) {
    c.skip_space();
    SourceLocation at = c.loc();
    c.expect('[', "to open the payload of \\" + std::string(cmd));
    std::string body = c.read_delimited(']', "payload");
    PayloadFields f;
    try {
      f = split_payload(body);
    } catch (const std::invalid_argument&) {
      c.fail_at(at, "unbalanced braces in payload of \\" + std::string(cmd));
    }
    if (!s.semicolon) {
      if (f.has_semicolon)
        c.fail_at(at, "payload of \\" + std::string(cmd) + " takes no ';' section");
      if (s.nodes == 0) f.labels = std::move(f.nodes), f.nodes.clear();
    }
    bool arity_ok = f.nodes.size() == s.nodes && f.labels.size() == s.labels && f.has_semicolon == s.semicolon;
    if (!arity_ok) {
      std::string expected = std::to_string(s.nodes) + " node" + (s.nodes == 1 ? "" : "s");
      std::string got = std::to_string(f.nodes.size()) + " node" + (f.nodes.size() == 1 ? "" : "s");
      if (s.semicolon || s.nodes == 0) {
        expected += " and " + std::to_string(s.labels) + " label" + (s.labels == 1 ? "" : "s");
        got += " and " + std::to_string(f.labels.size()) + " label" + (f.labels.size() == 1 ? "" : "s");
      }
      if (s.semicolon && !f.has_semicolon) got += " (missing ';')";
      c.fail_at(at, "payload arity mismatch: \\" + std::string(cmd) + " expects " + expected + ", got " + got);
    }
    cl.nodes = std::move(f.nodes);
    cl.labels = std::move(f.labels);
  }
  return cl;
}

void parse_inline_sections(Cursor& c, Command& cmd, std::string_view name) {
  std::size_t styles = cmd.kind == CommandKind::InlineTo ? 1 : cmd.kind == CommandKind::Two ? 2 : 3;
  c.skip_space();
  if (c.peek() == '/') {
    SourceLocation at = c.loc();
    c.get();
    std::string raw = c.read_delimited('/', "style section");
    std::vector<std::string> parts;
    try {
      parts = split_top(raw, '`');
    } catch (const std::invalid_argument&) {
      c.fail_at(at, "malformed style section");
    }
    if (parts.size() != styles)
      c.fail_at(at, "\\" + std::string(name) + " expects " + std::to_string(styles) + " style" +
                        (styles == 1 ? "" : "s") + ", got " + std::to_string(parts.size()));
    for (auto& p : parts) cmd.main.styles.push_back(strip_group(p));
  } else {
    cmd.main.styles.assign(styles, ">");
  }

  c.skip_space();
  cmd.length = 0;
  if (c.peek() == '<') cmd.length = read_numbers(c, '<', '>', 1, "arrow length")[0];

  std::string sup, mid, sub;
  c.skip_space();
  if (c.peek() == '^') {
    c.get();
    sup = c.read_argument("superscript label");
  }
  if (cmd.kind == CommandKind::Three) {
    c.skip_space();
    if (c.peek() == '|') {
      c.get();
      mid = c.read_argument("middle label");
    }
  }
  c.skip_space();
  if (c.peek() == '_') {
    c.get();
    sub = c.read_argument("subscript label");
  }
  if (cmd.kind == CommandKind::Three)
    cmd.main.labels = {sup, mid, sub};
  else
    cmd.main.labels = {sup, sub};
}

Command parse_command_at(Cursor& c) {
  c.skip_space();
  SourceLocation at = c.loc();
  if (c.peek() != '\\') c.fail("expected a command");
  c.get();
  std::string name = c.read_name();
  if (name.empty()) c.fail_at(at, "expected a command name after '\\'");
  auto& table = command_table();
  auto it = table.find(name);
  if (it == table.end()) c.fail_at(at, "unknown command '\\" + name + "'");

  Command cmd;
  cmd.kind = it->second.kind;
  cmd.variant = it->second.variant;
  cmd.loc = at;

  switch (cmd.kind) {
    case CommandKind::InlineTo:
    case CommandKind::Two:
    case CommandKind::Three: parse_inline_sections(c, cmd, name); break;
    case CommandKind::TwoAr: {
      auto v = read_numbers(c, '(', ')', 2, "direction");
      cmd.direction = {v[0], v[1]};
      break;
    }
    case CommandKind::ScaleFactor: {
      c.skip_space();
      SourceLocation fat = c.loc();
      std::string text;
      if (c.peek() == '{') {
        text = c.read_group("scale factor");
      } else {
        while (!c.eof() && ((c.peek() >= '0' && c.peek() <= '9') || c.peek() == '.')) text += c.get();
      }
      try {
        cmd.factor = Ratio::parse(text);
      } catch (const std::invalid_argument&) {
        c.fail_at(fat, "malformed scale factor '" + text + "'");
      }
      if (cmd.factor.num() <= 0) c.fail_at(fat, "scale factor must be positive");
      break;
    }
    default: {
      auto shapes = clause_shapes(cmd.kind, cmd.variant);
      cmd.main = parse_clause(c, shapes.front(), name);
      for (std::size_t i = 1; i < shapes.size(); ++i) cmd.extra.push_back(parse_clause(c, shapes[i], name));
    }
  }
  return cmd;
}

std::string brace(std::string_view s) { return "{" + std::string(s) + "}"; }

void print_clause(std::string& out, const Clause& cl, const ClauseShape& s) {
  if (s.has_align && cl.align) out += "[" + std::string(1, cl.align) + "]";
  if (s.has_origin) out += "(" + std::to_string(cl.origin.x) + "," + std::to_string(cl.origin.y) + ")";
  if (s.placements > 0) out += "|" + cl.placements + "|";
  if (s.styles > 0) {
    out += "/";
    for (std::size_t i = 0; i < cl.styles.size(); ++i) out += (i ? "`" : "") + brace(cl.styles[i]);
    out += "/";
  }
  if (s.extent > 0) {
    out += "<";
    for (std::size_t i = 0; i < cl.extent.size(); ++i) out += (i ? "," : "") + std::to_string(cl.extent[i]);
    out += ">";
  }
  if (s.mask != MaskKind::None) {
    out += "{" + std::to_string(cl.mask.value_or(0)) + "}<";
    for (std::size_t i = 0; i < cl.stub.size(); ++i) out += (i ? "," : "") + std::to_string(cl.stub[i]);
    out += ">";
  }
  if (s.has_payload) {
    out += "[";
    if (s.nodes == 0 && !s.semicolon) {
      for (std::size_t i = 0; i < cl.labels.size(); ++i) out += (i ? "`" : "") + brace(cl.labels[i]);
    } else {
      for (std::size_t i = 0; i < cl.nodes.size(); ++i) out += (i ? "`" : "") + brace(cl.nodes[i]);
      if (s.semicolon) {
        out += ";";
        for (std::size_t i = 0; i < cl.labels.size(); ++i) out += (i ? "`" : "") + brace(cl.labels[i]);
      }
    }
    out += "]";
  }
}

}  // namespace

std::string command_name(const Command& c) {
  for (const auto& [name, info] : command_table())
    if (info.kind == c.kind && info.variant == c.variant) return name;
  return "?";
}

PayloadFields parse_payload(std::string_view text) {
  std::string cleaned = strip_comments(text);
  Cursor c(cleaned);
  SourceLocation at = c.loc();
  c.expect('[', "to open the payload");
  std::string body = c.read_delimited(']', "payload");
  c.skip_space();
  if (!c.eof()) c.fail("unexpected text after payload");
  try {
    return split_payload(body);
  } catch (const std::invalid_argument&) {
    throw ParseError("unbalanced braces in payload", at);
  }
}

Command parse_command(std::string_view text) {
  std::string cleaned = strip_comments(text);
  Cursor c(cleaned);
  Command cmd = parse_command_at(c);
  c.skip_space();
  if (!c.eof()) c.fail("unexpected text after \\" + command_name(cmd));
  return cmd;
}

Command parse_inline_arrow(std::string_view text) {
  Command cmd = parse_command(text);
  if (cmd.kind != CommandKind::InlineTo && cmd.kind != CommandKind::Two && cmd.kind != CommandKind::Three)
    throw ParseError("expected \\to, \\two or \\three", cmd.loc);
  return cmd;
}

std::vector<DiagramSource> parse_source(std::string_view text) {
  std::string cleaned = strip_comments(text);
  Cursor c(cleaned);
  std::vector<DiagramSource> diagrams;
  std::optional<std::size_t> open_block;
  std::optional<std::size_t> implicit;

  while (true) {
    c.skip_space();
    if (c.eof()) break;
    SourceLocation at = c.loc();
    if (c.peek() != '\\') c.fail("unexpected text '" + std::string(1, c.peek()) + "' outside a command");

    // Look ahead for the block markers without consuming a command.
    Cursor probe = c;
    probe.get();
    std::string name = probe.read_name();
    if (name == "bfig") {
      if (open_block) c.fail_at(at, "nested \\bfig");
      c = probe;
      diagrams.push_back({at, false, {}});
      open_block = diagrams.size() - 1;
      continue;
    }
    if (name == "efig") {
      if (!open_block) c.fail_at(at, "\\efig without matching \\bfig");
      c = probe;
      open_block.reset();
      continue;
    }

    Command cmd = parse_command_at(c);
    if (open_block) {
      diagrams[*open_block].commands.push_back(std::move(cmd));
    } else {
      if (!implicit) {
        diagrams.push_back({at, true, {}});
        implicit = diagrams.size() - 1;
      }
      diagrams[*implicit].commands.push_back(std::move(cmd));
    }
  }
  if (open_block) throw ParseError("missing \\efig for \\bfig", diagrams[*open_block].loc);
  return diagrams;
}

std::string pretty_print(const Command& c) {
  std::string out = "\\" + command_name(c);
  switch (c.kind) {
    case CommandKind::InlineTo:
    case CommandKind::Two:
    case CommandKind::Three: {
      out += "/";
      for (std::size_t i = 0; i < c.main.styles.size(); ++i) out += (i ? "`" : "") + brace(c.main.styles[i]);
      out += "/<" + std::to_string(c.length) + ">";
      const auto& l = c.main.labels;
      if (c.kind == CommandKind::Three)
        out += "^" + brace(l.at(0)) + "|" + brace(l.at(1)) + "_" + brace(l.at(2));
      else
        out += "^" + brace(l.at(0)) + "_" + brace(l.at(1));
      return out;
    }
    case CommandKind::TwoAr:
      return out + "(" + std::to_string(c.direction.x) + "," + std::to_string(c.direction.y) + ")";
    case CommandKind::ScaleFactor: {
      // decimal when exact, so the output stays valid source
      Ratio f = c.factor;
      std::int64_t den = f.den(), twos = 0, fives = 0;
      while (den % 2 == 0) den /= 2, ++twos;
      while (den % 5 == 0) den /= 5, ++fives;
      if (den != 1) return out + "{" + f.str() + "}";
      std::int64_t places = std::max(twos, fives), scale = 1;
      for (std::int64_t i = 0; i < places; ++i) scale *= 10;
      std::int64_t scaled = f.num() * (scale / f.den());
      std::string digits = std::to_string(scaled);
      if (places > 0) {
        while (static_cast<std::int64_t>(digits.size()) <= places) digits.insert(0, "0");
        digits.insert(digits.size() - places, ".");
      }
      return out + "{" + digits + "}";
    }
    default: {
      auto shapes = clause_shapes(c.kind, c.variant);
      print_clause(out, c.main, shapes.front());
      for (std::size_t i = 1; i < shapes.size() && i - 1 < c.extra.size(); ++i) print_clause(out, c.extra[i - 1], shapes[i]);
      return out;
    }
  }
}

}  // namespace diagc

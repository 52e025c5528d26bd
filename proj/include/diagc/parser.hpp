#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diagc/core.hpp"

namespace diagc {

enum class CommandKind {
  Morphism,
  Vector,
  Place,
  Square,
  AutoSquare,
  Triangle,
  TrianglePair,
  HSquares,
  VSquares,
  Cube,
  Pullback,
  Grid3x3,
  Grid3x2,
  InlineTo,
  Two,
  Three,
  TwoAr,
  ScaleFactor,
};

// One run of optional sections `(x,y) |p| /s/ <a,b> mask <stub> [payload]`.
// After parsing, every absent section holds the command's default.
struct Clause {
  Point origin;
  char align = 0;  // \place[l|r|u|d]
  std::string placements;
  std::vector<std::string> styles;
  std::vector<Length> extent;
  std::optional<std::int64_t> mask;
  std::vector<Length> stub;
  std::vector<std::string> nodes;
  std::vector<std::string> labels;

  friend bool operator==(const Clause&, const Clause&) = default;
};

struct Command {
  CommandKind kind = CommandKind::Morphism;
  char variant = 0;  // triangle / triangle-pair letter: p q d b A V C D
  SourceLocation loc;
  Clause main;
  // \cube: inner square then connectors. \pullback: the trident.
  std::vector<Clause> extra;
  Length length = 0;  // inline arrows; 0 selects automatic length
  Point direction;    // \twoar
  Ratio factor{1};    // \scalefactor

  friend bool operator==(const Command& a, const Command& b) {
    return a.kind == b.kind && a.variant == b.variant && a.main == b.main && a.extra == b.extra &&
           a.length == b.length && a.direction == b.direction && a.factor == b.factor;
  }
};

/// Name as written in source, without the backslash ("Atrianglepair").
std::string command_name(const Command& c);

struct PayloadFields {
  std::vector<std::string> nodes;
  std::vector<std::string> labels;
  bool has_semicolon = false;
};

/// Splits `[A`B;f]` on top-level backticks and the first top-level `;`.
/// Each field is trimmed and loses one enclosing brace group.
PayloadFields parse_payload(std::string_view text);

struct DiagramSource {
  SourceLocation loc;
  bool implicit = false;  // top-level commands outside \bfig ... \efig
  std::vector<Command> commands;
};

/// Parses a whole input. Throws ParseError with line/column.
std::vector<DiagramSource> parse_source(std::string_view text);

/// Parses exactly one command (plus trailing whitespace).
Command parse_command(std::string_view text);

/// Parses one of \to, \two, \three.
Command parse_inline_arrow(std::string_view text);

/// Canonical source form with every section explicit; reparses to an equal Command.
std::string pretty_print(const Command& c);

}  // namespace diagc

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace diagc {

// All diagram geometry is integer centi-em (1 unit = 0.01 em).
using Length = std::int64_t;

inline constexpr Length kDefaultLength = 500;
inline constexpr Length kDefaultMargin = 150;

struct Point {
  Length x = 0;
  Length y = 0;  // grows upward

  friend bool operator==(const Point&, const Point&) = default;
  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
};

/// Exact rational number with a positive denominator, always reduced.
class Ratio {
 public:
  constexpr Ratio() = default;
  Ratio(std::int64_t num, std::int64_t den = 1);

  /// Parses "2", "-0.75", "7/10". Throws std::invalid_argument.
  static Ratio parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;  // "n" or "n/d"

  friend Ratio operator*(Ratio a, Ratio b);
  friend bool operator==(const Ratio&, const Ratio&) = default;

 private:
  std::int64_t num_ = 1;
  std::int64_t den_ = 1;
};

/// Rounds num/den to the nearest integer, ties away from zero.
std::int64_t round_half_away(std::int64_t num, std::int64_t den);

/// Integer times ratio, rounded half away from zero.
Length scale_round(Length value, Ratio r);

struct ScaleConfig {
  Ratio scale{1};
  Ratio em_size{10};        // points per em
  Ratio ex_ratio{43, 100};  // ex / em
  Ratio label_scale{7, 10};
  Length object_margin = 30;
  Length canvas_margin = 20;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;

  friend bool operator==(const ScaleConfig&, const ScaleConfig&) = default;
};

/// TeX \ratchet: raise `a` to at least `b`.
constexpr std::int64_t ratchet(std::int64_t a, std::int64_t b) { return a < b ? b : a; }

/// TeX \divide: quotient truncated toward zero. Throws ExpansionError on b == 0.
std::int64_t tex_div(std::int64_t a, std::int64_t b);

/// Physical length in em for a centi-em length under `cfg.scale`.
Ratio to_em(Length l, const ScaleConfig& cfg);

struct SourceLocation {
  int line = 0;
  int column = 0;

  friend bool operator==(const SourceLocation&, const SourceLocation&) = default;
};

enum class Severity { Warning, Error };

struct Diagnostic {
  Severity severity = Severity::Warning;
  SourceLocation loc;
  std::string message;
};

std::string format_diagnostic(std::string_view file, const Diagnostic& d);

class Error : public std::runtime_error {
 public:
  Error(const std::string& what, SourceLocation loc = {}) : std::runtime_error(what), loc_(loc) {}
  SourceLocation location() const { return loc_; }

 private:
  SourceLocation loc_;
};

class ParseError : public Error {
  using Error::Error;
};

class ExpansionError : public Error {
  using Error::Error;
};

class LayoutError : public Error {
  using Error::Error;
};

enum class LabelSide { Above, Below, OnLine, None };

std::string_view to_string(LabelSide side);
std::optional<LabelSide> label_side_from_string(std::string_view s);

struct ArrowLabel {
  std::string text;
  LabelSide side = LabelSide::None;

  friend bool operator==(const ArrowLabel&, const ArrowLabel&) = default;
};

// Which macro produced an arrow; the xy token stream is shaped by it.
enum class ArrowKind { Morphism, Vector, Stub, Inline, TwoCell };

std::string_view to_string(ArrowKind kind);
std::optional<ArrowKind> arrow_kind_from_string(std::string_view s);

struct Node {
  int id = 0;
  Point anchor;
  std::string text;
  char align = 0;  // 0, or one of l r u d for aligned placements
  int group = 0;   // index of the source command
  bool placed = false;

  friend bool operator==(const Node&, const Node&) = default;
};

struct Arrow {
  ArrowKind kind = ArrowKind::Morphism;
  Point from;
  Point to;
  std::string style;  // style token exactly as written
  // Text of the object drawn at each end; nullopt marks a free endpoint.
  std::optional<std::string> from_object;
  std::optional<std::string> to_object;
  std::vector<ArrowLabel> labels;
  int offset_tenths_pt = 0;  // parallel shift, positive toward the Above side
  Ratio local_scale{1};
  int group = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct DiagramIR {
  std::vector<Node> nodes;
  std::vector<Arrow> arrows;
  ScaleConfig scale;

  friend bool operator==(const DiagramIR&, const DiagramIR&) = default;
};

/// Collapses nodes with identical (anchor, text), keeping the first.
/// Same anchor with different text produces a warning and keeps both.
DiagramIR merge_duplicate_nodes(const DiagramIR& d, std::vector<Diagnostic>* warnings = nullptr);

}  // namespace diagc

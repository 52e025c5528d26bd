#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diagc/core.hpp"
#include "diagc/layout.hpp"
#include "diagc/metrics.hpp"

namespace diagc {

enum class Tail { None, Hook, DoubleHeadAtTail, HeadAtTail };
enum class Body { Solid, Double, Dashed, Dotted, Equals };
// Hook at the head end is the mirrored tail of `<-<`.
enum class Head { None, Normal, Double, Hook };

struct ArrowStyle {
  Tail tail = Tail::None;
  Body body = Body::Solid;
  Head head = Head::Normal;
  std::optional<std::string> raw;  // `@...` passthrough
  bool known = true;               // false for tokens outside the table

  friend bool operator==(const ArrowStyle&, const ArrowStyle&) = default;
};

/// Decodes a direction token; spaces are ignored. Unknown tokens decode as a solid
/// arrow with known == false.
ArrowStyle decode_style(std::string_view token);

/// decode_style, reporting raw and unknown tokens as warnings for the named backend.
ArrowStyle decode_style_for(const std::string& token, std::string_view backend, std::vector<Diagnostic>* warnings);

/// Exact decimal when the denominator has only factors 2 and 5, else rounded to 6 places.
std::string format_decimal(Ratio r);

/// Deterministic SVG 1.1 document. Raw and unknown styles are drawn solid and reported.
std::string render_svg(const Layout& layout, const FontMetrics& m, std::vector<Diagnostic>* warnings = nullptr);

/// TikZ picture, coordinates in em.
std::string render_tikz(const Layout& layout, std::vector<Diagnostic>* warnings = nullptr);

/// The \POS ... \ar ... text the macros hand to Xy-pic, one line per drawing step.
/// Expects the unmerged IR so overprinted corners appear as the macros print them.
std::string render_xypic(const DiagramIR& ir);

/// Canonical line-oriented JSON dump.
std::string emit_ir(const DiagramIR& ir);

/// Inverse of emit_ir. Throws std::runtime_error on malformed text.
DiagramIR parse_ir(std::string_view text);

}  // namespace diagc

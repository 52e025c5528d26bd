#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "diagc/core.hpp"

namespace diagc {

// Advance widths in centi-em at scale 1. Stands in for TeX box measurement.
struct FontMetrics {
  // Keys are single UTF-8 code points or control sequences such as "\alpha".
  std::map<std::string, Length, std::less<>> widths;
  Length default_width = 50;

  /// Every printable ASCII character at 0.5 em.
  static FontMetrics default_table();

  Length width_of(std::string_view glyph) const;
};

/// Width of math text at `scale`, rounded to whole centi-em (ties away from zero).
/// Control sequences count as one glyph; braces and spaces count for nothing.
Length text_width(std::string_view text, Ratio scale, const FontMetrics& m);

class MetricsError : public Error {
  using Error::Error;
};

/// Reads `glyph<TAB>centi-em` lines on top of the default table.
FontMetrics load_metrics(const std::filesystem::path& file);
FontMetrics parse_metrics(std::string_view contents, FontMetrics base = FontMetrics::default_table());

}  // namespace diagc

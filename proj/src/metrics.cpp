#include "diagc/metrics.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace diagc {

FontMetrics FontMetrics::default_table() {
  FontMetrics m;
  for (char c = 0x21; c < 0x7f; ++c) m.widths.emplace(std::string(1, c), 50);
  return m;
}

Length FontMetrics::width_of(std::string_view glyph) const {
  if (auto it = widths.find(glyph); it != widths.end()) return it->second;
  return default_width;
}

namespace {

bool is_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

std::size_t utf8_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead >> 5) == 0x6) return 2;
  if ((lead >> 4) == 0xe) return 3;
  if ((lead >> 3) == 0x1e) return 4;
  return 1;
}

}  // namespace

Length text_width(std::string_view text, Ratio scale, const FontMetrics& m) {
  Length sum = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '{' || c == '}' || c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    std::size_t len;
    if (c == '\\') {
      len = 1;
      while (i + len < text.size() && is_letter(text[i + len])) ++len;
      if (len == 1 && i + 1 < text.size()) len = 1 + utf8_length(static_cast<unsigned char>(text[i + 1]));
    } else {
      len = utf8_length(static_cast<unsigned char>(c));
    }
    len = std::min(len, text.size() - i);
    sum += m.width_of(text.substr(i, len));
    i += len;
  }
  return scale_round(sum, scale);
}

FontMetrics parse_metrics(std::string_view contents, FontMetrics base) {
  std::istringstream in{std::string(contents)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0)
      throw MetricsError("line " + std::to_string(line_no) + ": expected glyph<TAB>width", {line_no, 1});
    std::string glyph = line.substr(0, tab);
    std::string_view num = std::string_view(line).substr(tab + 1);
    Length w = 0;
    auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), w);
    if (ec != std::errc() || p != num.data() + num.size() || num.empty())
      throw MetricsError("line " + std::to_string(line_no) + ": width '" + std::string(num) + "' is not an integer",
                         {line_no, static_cast<int>(tab) + 2});
    if (w < 0)
      throw MetricsError("line " + std::to_string(line_no) + ": width must not be negative",
                         {line_no, static_cast<int>(tab) + 2});
    base.widths[glyph] = w;
  }
  return base;
}

FontMetrics load_metrics(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw MetricsError("cannot read metrics file '" + file.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_metrics(buf.str());
  } catch (const MetricsError& e) {
    throw MetricsError(file.string() + ": " + e.what(), e.location());
  }
}

}  // namespace diagc

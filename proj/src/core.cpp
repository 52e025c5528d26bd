#include "diagc/core.hpp"

#include <charconv>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

namespace diagc {

Ratio::Ratio(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("ratio with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g == 0) g = 1;
  num_ = num / g;
  den_ = den / g;
}

namespace {

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw std::invalid_argument("not a number: '" + std::string(s) + "'");
  return v;
}

}  // namespace

Ratio Ratio::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty number");

  if (auto slash = text.find('/'); slash != std::string_view::npos)
    return Ratio(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));

  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::string_view whole = text, frac;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    whole = text.substr(0, dot);
    frac = text.substr(dot + 1);
  }
  if (whole.empty() && frac.empty()) throw std::invalid_argument("not a number");
  if (frac.size() > 12) throw std::invalid_argument("too many decimal places");
  for (char c : whole)
    if (c < '0' || c > '9') throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  for (char c : frac)
    if (c < '0' || c > '9') throw std::invalid_argument("not a number: '" + std::string(text) + "'");

  std::int64_t den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  std::int64_t num = (whole.empty() ? 0 : parse_int(whole)) * den + (frac.empty() ? 0 : parse_int(frac));
  return Ratio(negative ? -num : num, den);
}

std::string Ratio::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Ratio operator*(Ratio a, Ratio b) {
  // cross-reduce first to keep the products small
  std::int64_t g1 = std::gcd(a.num_ < 0 ? -a.num_ : a.num_, b.den_);
  std::int64_t g2 = std::gcd(b.num_ < 0 ? -b.num_ : b.num_, a.den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  return Ratio((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1));
}

std::int64_t round_half_away(std::int64_t num, std::int64_t den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t q = num / den;
  std::int64_t r = num % den;
  if (r < 0) r = -r;
  if (2 * r >= den) q += num < 0 ? -1 : 1;
  return q;
}

Length scale_round(Length value, Ratio r) {
  return round_half_away(value * r.num(), r.den());
}

void ScaleConfig::validate() const {
  if (scale.num() <= 0) throw std::invalid_argument("scale must be positive");
  if (em_size.num() <= 0) throw std::invalid_argument("em size must be positive");
  if (label_scale.num() <= 0 || label_scale.num() > label_scale.den())
    throw std::invalid_argument("label scale must lie in (0, 1]");
  if (ex_ratio.num() < 0) throw std::invalid_argument("ex ratio must not be negative");
  if (object_margin < 0) throw std::invalid_argument("object margin must not be negative");
  if (canvas_margin < 0) throw std::invalid_argument("canvas margin must not be negative");
}

std::int64_t tex_div(std::int64_t a, std::int64_t b) {
  if (b == 0) throw ExpansionError("arithmetic overflow: division by zero");
  return a / b;  // C++ integer division truncates toward zero
}

Ratio to_em(Length l, const ScaleConfig& cfg) { return Ratio(l, 100) * cfg.scale; }

std::string format_diagnostic(std::string_view file, const Diagnostic& d) {
  std::ostringstream out;
  out << file << ':' << d.loc.line << ':' << d.loc.column << ": "
      << (d.severity == Severity::Error ? "error" : "warning") << ": " << d.message;
  return out.str();
}

std::string_view to_string(LabelSide side) {
  switch (side) {
    case LabelSide::Above: return "above";
    case LabelSide::Below: return "below";
    case LabelSide::OnLine: return "online";
    case LabelSide::None: return "none";
  }
  return "none";
}

std::optional<LabelSide> label_side_from_string(std::string_view s) {
  if (s == "above") return LabelSide::Above;
  if (s == "below") return LabelSide::Below;
  if (s == "online") return LabelSide::OnLine;
  if (s == "none") return LabelSide::None;
  return std::nullopt;
}

std::string_view to_string(ArrowKind kind) {
  switch (kind) {
    case ArrowKind::Morphism: return "morphism";
    case ArrowKind::Vector: return "vector";
    case ArrowKind::Stub: return "stub";
    case ArrowKind::Inline: return "inline";
    case ArrowKind::TwoCell: return "twocell";
  }
  return "morphism";
}

std::optional<ArrowKind> arrow_kind_from_string(std::string_view s) {
  if (s == "morphism") return ArrowKind::Morphism;
  if (s == "vector") return ArrowKind::Vector;
  if (s == "stub") return ArrowKind::Stub;
  if (s == "inline") return ArrowKind::Inline;
  if (s == "twocell") return ArrowKind::TwoCell;
  return std::nullopt;
}

DiagramIR merge_duplicate_nodes(const DiagramIR& d, std::vector<Diagnostic>* warnings) {
  DiagramIR out;
  out.arrows = d.arrows;
  out.scale = d.scale;

  std::map<std::pair<Length, Length>, std::vector<std::size_t>> at;  // anchor -> kept node indices
  for (const Node& n : d.nodes) {
    auto& kept = at[{n.anchor.x, n.anchor.y}];
    bool duplicate = false;
    for (std::size_t k : kept) {
      if (out.nodes[k].text == n.text) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;
    if (!kept.empty() && warnings) {
      const Node& other = out.nodes[kept.front()];
      warnings->push_back({Severity::Warning, {},
                           "objects '" + other.text + "' and '" + n.text + "' overprint at (" +
                               std::to_string(n.anchor.x) + "," + std::to_string(n.anchor.y) + ")"});
    }
    kept.push_back(out.nodes.size());
    out.nodes.push_back(n);
  }
  return out;
}

}  // namespace diagc

#include <set>
#include <sstream>

#include "diagc/render.hpp"

namespace diagc {

namespace {

// Marker geometry, centi-em.
constexpr Length kHeadLength = 35;
constexpr Length kHeadHalfWidth = 15;
constexpr Length kStroke = 4;
constexpr Length kDoubleGap = 10;  // 1 pt at the default em, each side of the center

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

class Canvas {
 public:
  explicit Canvas(const Layout& l) : bbox_(l.bbox), k_(l.scale.em_size * l.scale.scale * Ratio(1, 100)) {}

  std::string len(Ratio ce) const { return format_decimal(ce * k_); }
  std::string len(Length ce) const { return len(Ratio(ce)); }
  std::string x(Length v) const { return len(v - bbox_.min_x); }
  std::string y(Length v) const { return len(bbox_.max_y - v); }

 private:
  Rect bbox_;
  Ratio k_;
};

struct MarkerDef {
  const char* id;
  // chevrons as (apex offset, tips offset) along the marker axis
  std::vector<std::pair<Length, Length>> chevrons;
};

const MarkerDef& marker(std::string_view id) {
  static const std::vector<MarkerDef> defs = {
      {"head", {{0, -kHeadLength}}},
      {"head2", {{0, -kHeadLength}, {-kHeadLength / 2, -kHeadLength - kHeadLength / 2}}},
      {"head-in", {{-kHeadLength, 0}}},
      {"tail-rev", {{0, kHeadLength}}},
      {"tail-rev2", {{0, kHeadLength}, {kHeadLength / 2, kHeadLength + kHeadLength / 2}}},
      {"tail-hook", {{kHeadLength, 0}}},
  };
  for (const auto& d : defs)
    if (d.id == id) return d;
  return defs.front();
}

const char* head_marker(Head h) {
  switch (h) {
    case Head::Normal: return "head";
    case Head::Double: return "head2";
    case Head::Hook: return "head-in";
    case Head::None: break;
  }
  return nullptr;
}

const char* tail_marker(Tail t) {
  switch (t) {
    case Tail::HeadAtTail: return "tail-rev";
    case Tail::DoubleHeadAtTail: return "tail-rev2";
    case Tail::Hook: return "tail-hook";
    case Tail::None: break;
  }
  return nullptr;
}

void write_line(std::ostringstream& out, const Canvas& cv, Point a, Point b, const char* start, const char* end,
                const char* extra = "") {
  out << "<line x1=\"" << cv.x(a.x) << "\" y1=\"" << cv.y(a.y) << "\" x2=\"" << cv.x(b.x) << "\" y2=\""
      << cv.y(b.y) << '"';
  if (start) out << " marker-start=\"url(#" << start << ")\"";
  if (end) out << " marker-end=\"url(#" << end << ")\"";
  out << extra << "/>\n";
}

}  // namespace

std::string render_svg(const Layout& layout, const FontMetrics&, std::vector<Diagnostic>* warnings) {
  const Canvas cv(layout);
  const ScaleConfig& cfg = layout.scale;
  std::ostringstream out;

  std::vector<ArrowStyle> styles;
  std::set<std::string> used;
  for (const auto& p : layout.paths) {
    styles.push_back(decode_style_for(p.style, "SVG", warnings));
    if (auto m = tail_marker(styles.back().tail)) used.insert(m);
    if (auto m = head_marker(styles.back().head)) used.insert(m);
  }

  std::string w = cv.len(layout.bbox.width());
  std::string h = cv.len(layout.bbox.height());
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w << "\" height=\"" << h
      << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";

  if (!used.empty()) {
    out << "<defs>\n";
    for (const auto& id : used) {
      const MarkerDef& d = marker(id);
      out << "<marker id=\"" << d.id << "\" markerUnits=\"userSpaceOnUse\" orient=\"auto\" overflow=\"visible\""
          << " markerWidth=\"" << cv.len(kHeadLength) << "\" markerHeight=\"" << cv.len(2 * kHeadHalfWidth)
          << "\">\n<path d=\"";
      bool first = true;
      for (auto [apex, tips] : d.chevrons) {
        if (!first) out << ' ';
        first = false;
        out << 'M' << cv.len(tips) << ',' << cv.len(-kHeadHalfWidth) << " L" << cv.len(apex) << ",0 L"
            << cv.len(tips) << ',' << cv.len(kHeadHalfWidth);
      }
      out << "\" fill=\"none\" stroke=\"black\" stroke-width=\"" << cv.len(kStroke) << "\"/>\n</marker>\n";
    }
    out << "</defs>\n";
  }

  out << "<g class=\"nodes\" font-family=\"serif\" font-style=\"italic\" text-anchor=\"middle\" font-size=\""
      << cv.len(100) << "\">\n";
  for (const auto& n : layout.nodes) {
    out << "<text class=\"node\" x=\"" << cv.x(n.baseline.x) << "\" y=\"" << cv.y(n.baseline.y) << "\">"
        << escape(n.node.text) << "</text>\n";
  }
  out << "</g>\n";

  const Length label_drop = scale_round(75, cfg.ex_ratio * cfg.label_scale);
  const std::string dash = " stroke-dasharray=\"" + cv.len(20) + ' ' + cv.len(10) + '"';
  const std::string dot = " stroke-dasharray=\"" + cv.len(3) + ' ' + cv.len(9) + "\" stroke-linecap=\"round\"";

  for (std::size_t i = 0; i < layout.paths.size(); ++i) {
    const DrawablePath& p = layout.paths[i];
    const ArrowStyle& s = styles[i];
    const char* tail = tail_marker(s.tail);
    const char* head = head_marker(s.head);
    out << "<g class=\"arrow\" data-kind=\"" << to_string(p.kind) << "\" fill=\"none\" stroke=\"black\""
        << " stroke-width=\"" << cv.len(kStroke) << "\">\n";
    const std::size_t last = p.segments.size() - 1;
    if (s.body == Body::Double || s.body == Body::Equals) {
      // two shafts; heads ride on an unstroked center line
      for (int side : {1, -1}) {
        DrawablePath shaft = offset_parallel(p, Ratio(side * kDoubleGap, 10), cfg);
        for (const auto& seg : shaft.segments) write_line(out, cv, seg.start, seg.end, nullptr, nullptr);
      }
      if (tail || head) {
        out << "<line class=\"tip\" x1=\"" << cv.x(p.start.x) << "\" y1=\"" << cv.y(p.start.y) << "\" x2=\""
            << cv.x(p.end.x) << "\" y2=\"" << cv.y(p.end.y) << "\" stroke=\"none\"";
        if (tail) out << " marker-start=\"url(#" << tail << ")\"";
        if (head) out << " marker-end=\"url(#" << head << ")\"";
        out << "/>\n";
      }
    } else {
      const std::string& extra = s.body == Body::Dashed ? dash : s.body == Body::Dotted ? dot : std::string();
      for (std::size_t k = 0; k < p.segments.size(); ++k) {
        write_line(out, cv, p.segments[k].start, p.segments[k].end, k == 0 ? tail : nullptr,
                   k == last ? head : nullptr, extra.c_str());
      }
    }
    for (const auto& l : p.labels) {
      out << "<text class=\"label\" x=\"" << cv.x(l.box.center.x) << "\" y=\"" << cv.y(l.box.center.y - label_drop)
          << "\" stroke=\"none\" fill=\"black\" font-family=\"serif\" font-style=\"italic\" text-anchor=\"middle\""
          << " font-size=\"" << cv.len(Ratio(100) * cfg.label_scale) << "\">" << escape(l.text) << "</text>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace diagc

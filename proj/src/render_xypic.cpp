#include <map>
#include <sstream>

#include "diagc/render.hpp"

namespace diagc {

namespace {

const char* const kObject = "*+!!<0ex,.75ex>";

std::string at(Point p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; }

std::string object(const std::optional<std::string>& text) {
  // free ends are the macros' literal object 0
  return std::string(kObject) + "{" + (text ? *text : std::string("0")) + "}";
}

std::string ar(const std::string& style) { return !style.empty() && style[0] == '@' ? "\\ar" + style : "\\ar@{" + style + "}"; }

std::string morphism_label(const Arrow& a) {
  std::string out;
  for (const auto& l : a.labels) {
    switch (l.side) {
      case LabelSide::Above: out += "^-{" + l.text + "}"; break;
      case LabelSide::Below: out += "_-{" + l.text + "}"; break;
      case LabelSide::OnLine: out += "|-*+<1pt,4pt>{\\labelstyle " + l.text + "}"; break;
      case LabelSide::None: break;
    }
  }
  return out;
}

std::string inline_arrow(const Arrow& a) {
  std::string out = "\\ar@{" + a.style + "}";
  if (a.offset_tenths_pt != 0) out += "@<" + format_decimal(Ratio(a.offset_tenths_pt, 10)) + "pt>";
  for (const auto& l : a.labels) {
    switch (l.side) {
      case LabelSide::Above: out += "^{" + l.text + "}"; break;
      case LabelSide::Below: out += "_{" + l.text + "}"; break;
      case LabelSide::OnLine: out += "|{" + l.text + "}"; break;
      case LabelSide::None: break;
    }
  }
  return out + at(a.to - a.from);
}

}  // namespace

std::string render_xypic(const DiagramIR& ir) {
  std::map<int, std::vector<const Node*>> placed;
  std::map<int, std::vector<const Arrow*>> arrows;
  for (const auto& n : ir.nodes)
    if (n.placed) placed[n.group].push_back(&n);
  for (const auto& a : ir.arrows) arrows[a.group].push_back(&a);
  std::map<int, bool> groups;
  for (auto& [g, _] : placed) groups[g] = true;
  for (auto& [g, _] : arrows) groups[g] = true;

  std::ostringstream out;
  for (auto& [g, _] : groups) {
    for (const Node* n : placed[g]) {
      out << "\\POS" << at(n->anchor) << kObject;
      if (n->align) out << '!' << n->align;
      out << '{' << n->text << "}\n";
    }
    std::string xy;  // \to, \two, \three, \twoar share one \xy group per command
    for (const Arrow* a : arrows[g]) {
      switch (a->kind) {
        case ArrowKind::Morphism:
        case ArrowKind::Stub:
          out << "\\POS" << at(a->from) << object(a->from_object) << ar(a->style) << morphism_label(*a) << ' '
              << at(a->to) << object(a->to_object) << '\n';
          break;
        case ArrowKind::Vector: out << "\\POS" << at(a->from) << "\\ar" << a->style << ' ' << at(a->to) << '\n'; break;
        case ArrowKind::Inline:
        case ArrowKind::TwoCell: xy += inline_arrow(*a); break;
      }
    }
    if (!xy.empty()) out << "\\xy" << xy << "\\endxy\n";
  }
  return out.str();
}

}  // namespace diagc

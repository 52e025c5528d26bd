#include <sstream>

#include "diagc/render.hpp"

namespace diagc {

std::string render_tikz(const Layout& layout, std::vector<Diagnostic>* warnings) {
  const Ratio k = layout.scale.scale * Ratio(1, 100);
  auto em = [&](Length v) { return format_decimal(Ratio(v) * k); };
  auto pt = [&](Point p) { return "(" + em(p.x) + "," + em(p.y) + ")"; };
  std::ostringstream out;
  out << "\\begin{tikzpicture}[x=1em,y=1em]\n";
  for (std::size_t i = 0; i < layout.nodes.size(); ++i) {
    const PlacedNode& n = layout.nodes[i];
    out << "\\node (n" << i << ") at " << pt(n.box.center) << " {$" << n.node.text << "$};\n";
  }
  for (const auto& p : layout.paths) {
    ArrowStyle s = decode_style_for(p.style, "TikZ", warnings);
    std::string opt;
    if (s.raw || !s.known) {
      opt = "->";
    } else {
      std::string t = p.style;
      std::erase(t, ' ');
      switch (s.body) {
        case Body::Equals: opt = "double,-"; break;
        case Body::Double: opt = "double,-implies"; break;
        case Body::Dashed: opt = "dashed,->"; break;
        case Body::Dotted: opt = "dotted,->"; break;
        case Body::Solid: opt = t == ">" ? "->" : t; break;
      }
    }
    out << "\\draw[" << opt << "] " << pt(p.start) << " -- ";
    for (const auto& l : p.labels) {
      switch (l.side) {
        case LabelSide::Above: out << "node[midway,auto] "; break;
        case LabelSide::Below: out << "node[midway,auto,swap] "; break;
        case LabelSide::OnLine: out << "node[midway,fill=white] "; break;
        case LabelSide::None: continue;
      }
      out << "{$\\scriptstyle " << l.text << "$} ";
    }
    out << pt(p.end) << ";\n";
  }
  out << "\\end{tikzpicture}\n";
  return out.str();
}

}  // namespace diagc

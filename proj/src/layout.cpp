#include "diagc/layout.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <tuple>

namespace diagc {

LabelSide resolve_label_side(char placement, Length dx, Length dy, bool label_empty) {
  switch (placement) {
    case 'l': return dy > 0 ? LabelSide::Above : LabelSide::Below;
    case 'r': return dy < 0 ? LabelSide::Above : LabelSide::Below;
    case 'a': return dx > 0 ? LabelSide::Above : LabelSide::Below;
    case 'b': return dx < 0 ? LabelSide::Above : LabelSide::Below;
    case 'm': return label_empty ? LabelSide::None : LabelSide::OnLine;
    default: return LabelSide::None;
  }
}

void Rect::include(Point p) {
  if (empty) {
    min_x = max_x = p.x;
    min_y = max_y = p.y;
    empty = false;
    return;
  }
  min_x = std::min(min_x, p.x);
  max_x = std::max(max_x, p.x);
  min_y = std::min(min_y, p.y);
  max_y = std::max(max_y, p.y);
}

void Rect::include(const Box& b) {
  include(Point{b.left(), b.bottom()});
  include(Point{b.right(), b.top()});
}

Box node_box(const Node& n, const FontMetrics& m) {
  Length w = text_width(n.text, Ratio(1), m);
  Length h = n.text.empty() ? 0 : 100;
  Box b{n.anchor, (w + 1) / 2, h / 2};
  switch (n.align) {
    case 'l': b.center.x += b.half_w; break;
    case 'r': b.center.x -= b.half_w; break;
    case 'u': b.center.y -= b.half_h; break;
    case 'd': b.center.y += b.half_h; break;
    default: break;
  }
  return b;
}

Length pt_to_centi_em(Ratio pt, Ratio em_size) {
  // centi-em = pt / em_size * 100
  Ratio r = pt * Ratio(100) * Ratio(em_size.den(), em_size.num());
  return round_half_away(r.num(), r.den());
}

namespace {

// Non-negative fraction num/den, den > 0; den == 0 stands for +infinity.
struct Frac {
  std::int64_t num = 0;
  std::int64_t den = 0;

  bool infinite() const { return den == 0; }
};

bool less(const Frac& a, const Frac& b) {
  if (a.infinite()) return false;
  if (b.infinite()) return true;
  return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

Frac axis_exit(Length p, Length d, Length lo, Length hi) {
  if (d > 0) return {std::max<Length>(hi - p, 0), d};
  if (d < 0) return {std::max<Length>(p - lo, 0), -d};
  return {0, 0};
}

// Smallest t >= 0 at which p + t*d leaves the box.
Frac exit_param(Point p, Point d, const Box& b) {
  Frac tx = axis_exit(p.x, d.x, b.left(), b.right());
  Frac ty = axis_exit(p.y, d.y, b.bottom(), b.top());
  return less(tx, ty) ? tx : ty;
}

Point advance(Point p, Point d, const Frac& t) {
  return {p.x + round_half_away(d.x * t.num, t.den), p.y + round_half_away(d.y * t.num, t.den)};
}

Box inflate(Box b, Length by) {
  b.half_w += by;
  b.half_h += by;
  return b;
}

using NodeKey = std::tuple<Length, Length, std::string>;
using NodeIndex = std::map<NodeKey, const Node*>;

NodeIndex index_nodes(const std::vector<Node>& nodes) {
  NodeIndex idx;
  for (const Node& n : nodes) idx.emplace(NodeKey{n.anchor.x, n.anchor.y, n.text}, &n);
  return idx;
}

Box endpoint_box(Point at, const std::string& text, const NodeIndex& idx, const FontMetrics& m) {
  if (auto it = idx.find(NodeKey{at.x, at.y, text}); it != idx.end()) return node_box(*it->second, m);
  Node synthetic;
  synthetic.anchor = at;
  synthetic.text = text;
  return node_box(synthetic, m);
}

// Pieces of [start, end] outside the knockout box around the midpoint.
std::vector<Segment> knock_out(Point start, Point end, const Box& hole) {
  std::vector<Segment> out;
  Point mid = hole.center;
  Frac ts = exit_param(mid, start - mid, hole);
  if (less(ts, Frac{1, 1})) {
    Point p = advance(mid, start - mid, ts);
    if (!(p == start)) out.push_back({start, p});
  }
  Frac te = exit_param(mid, end - mid, hole);
  if (less(te, Frac{1, 1})) {
    Point p = advance(mid, end - mid, te);
    if (!(p == end)) out.push_back({p, end});
  }
  return out;
}

Point unit_normal_scaled(Point d, Length dist) {
  // left normal of d, scaled to `dist`
  if (d.y == 0) return {0, d.x > 0 ? dist : -dist};
  if (d.x == 0) return {d.y > 0 ? -dist : dist, 0};
  double len = std::hypot(static_cast<double>(d.x), static_cast<double>(d.y));
  double nx = -static_cast<double>(d.y) / len, ny = static_cast<double>(d.x) / len;
  Length mag = dist < 0 ? -dist : dist;
  Point v{std::llround(nx * static_cast<double>(mag)), std::llround(ny * static_cast<double>(mag))};
  return dist < 0 ? Point{-v.x, -v.y} : v;
}

Length label_distance(Point d, Length half_w, Length half_h, Length gap) {
  if (d.y == 0) return gap + half_h;
  if (d.x == 0) return gap + half_w;
  double len = std::hypot(static_cast<double>(d.x), static_cast<double>(d.y));
  double nx = std::abs(static_cast<double>(d.y)) / len, ny = std::abs(static_cast<double>(d.x)) / len;
  return gap + std::llround(nx * static_cast<double>(half_w) + ny * static_cast<double>(half_h));
}

Point scaled(Point p, Ratio r) {
  if (r == Ratio(1)) return p;
  return {scale_round(p.x, r), scale_round(p.y, r)};
}

DrawablePath clip_indexed(const Arrow& a, const NodeIndex& nodes, const ScaleConfig& cfg, const FontMetrics& m) {
  DrawablePath path;
  path.style = a.style;
  path.kind = a.kind;

  Point p0 = scaled(a.from, a.local_scale);
  Point p1 = scaled(a.to, a.local_scale);
  Point d = p1 - p0;
  if (d == Point{}) throw LayoutError("zero-length arrow");

  Frac t0{0, 1};
  Frac back{0, 1};
  if (a.from_object) t0 = exit_param(p0, d, inflate(endpoint_box(a.from, *a.from_object, nodes, m), cfg.object_margin));
  if (a.to_object)
    back = exit_param(p1, Point{-d.x, -d.y}, inflate(endpoint_box(a.to, *a.to_object, nodes, m), cfg.object_margin));

  // t_end = 1 - back must exceed t0
  bool overlap = back.infinite() || t0.infinite() ||
                 !(static_cast<__int128>(t0.num) * back.den + static_cast<__int128>(back.num) * t0.den <
                   static_cast<__int128>(t0.den) * back.den);
  if (overlap) throw LayoutError("overlapping objects: no room for the arrow between its endpoints");

  path.start = advance(p0, d, t0);
  path.end = advance(p1, Point{-d.x, -d.y}, back);
  if (path.start == path.end) throw LayoutError("overlapping objects: no room for the arrow between its endpoints");
  path.segments = {{path.start, path.end}};

  Point dir = path.end - path.start;
  Point mid{round_half_away(path.start.x + path.end.x, 2), round_half_away(path.start.y + path.end.y, 2)};
  Length label_h = scale_round(100, cfg.label_scale);
  Length gap = pt_to_centi_em(Ratio(1), cfg.em_size);

  for (const ArrowLabel& l : a.labels) {
    if (l.side == LabelSide::None || l.text.empty()) continue;
    Length w = text_width(l.text, cfg.label_scale, m);
    PlacedLabel pl{l.text, l.side, mid, Box{mid, (w + 1) / 2, label_h / 2}};
    if (l.side == LabelSide::OnLine) {
      Box hole{mid, pl.box.half_w + pt_to_centi_em(Ratio(1, 2), cfg.em_size),
               pl.box.half_h + pt_to_centi_em(Ratio(2), cfg.em_size)};
      path.segments = knock_out(path.start, path.end, hole);
    } else {
      Length dist = label_distance(dir, pl.box.half_w, pl.box.half_h, gap);
      pl.box.center = mid + unit_normal_scaled(dir, l.side == LabelSide::Above ? dist : -dist);
    }
    path.labels.push_back(std::move(pl));
  }
  return path;
}

}  // namespace

DrawablePath clip_arrow(const Arrow& a, const std::vector<Node>& nodes, const ScaleConfig& cfg,
                        const FontMetrics& m) {
  return clip_indexed(a, index_nodes(nodes), cfg, m);
}

Point baseline_offset(const Node&, const ScaleConfig& cfg) { return {0, -scale_round(75, cfg.ex_ratio)}; }

DrawablePath offset_parallel(const DrawablePath& path, Ratio offset_pt, const ScaleConfig& cfg) {
  if (offset_pt.num() == 0) return path;
  Length off = pt_to_centi_em(offset_pt, cfg.em_size);
  Point v = unit_normal_scaled(path.end - path.start, off);
  DrawablePath out = path;
  out.start = out.start + v;
  out.end = out.end + v;
  for (auto& s : out.segments) {
    s.start = s.start + v;
    s.end = s.end + v;
  }
  for (auto& l : out.labels) {
    l.anchor = l.anchor + v;
    l.box.center = l.box.center + v;
  }
  return out;
}

Rect bounding_box(const std::vector<PlacedNode>& nodes, const std::vector<DrawablePath>& paths,
                  const ScaleConfig& cfg) {
  if (nodes.empty() && paths.empty()) throw LayoutError("empty diagram: nothing to draw");
  Rect r;
  for (const auto& n : nodes) r.include(n.box);
  for (const auto& p : paths) {
    r.include(p.start);
    r.include(p.end);
    for (const auto& l : p.labels) r.include(l.box);
  }
  r.min_x -= cfg.canvas_margin;
  r.min_y -= cfg.canvas_margin;
  r.max_x += cfg.canvas_margin;
  r.max_y += cfg.canvas_margin;
  return r;
}

namespace {

PlacedNode place_node(const Node& n, const ScaleConfig& cfg, const FontMetrics& m) {
  PlacedNode p{n, node_box(n, m), {}};
  p.baseline = p.box.center + baseline_offset(n, cfg);
  return p;
}

DrawablePath lay_out_arrow(const Arrow& a, const DiagramIR& ir, const NodeIndex& idx, const FontMetrics& m) {
  DrawablePath p = clip_indexed(a, idx, ir.scale, m);
  return offset_parallel(p, Ratio(a.offset_tenths_pt, 10), ir.scale);
}

}  // namespace

Layout layout_diagram_serial(const DiagramIR& ir, const FontMetrics& m) {
  Layout out;
  out.scale = ir.scale;
  for (const Node& n : ir.nodes) out.nodes.push_back(place_node(n, ir.scale, m));
  NodeIndex idx = index_nodes(ir.nodes);
  for (const Arrow& a : ir.arrows) out.paths.push_back(lay_out_arrow(a, ir, idx, m));
  out.bbox = bounding_box(out.nodes, out.paths, ir.scale);
  return out;
}

Layout layout_diagram(const DiagramIR& ir, const FontMetrics& m) {
  Layout out;
  out.scale = ir.scale;
  const auto n_nodes = static_cast<std::ptrdiff_t>(ir.nodes.size());
  const auto n_arrows = static_cast<std::ptrdiff_t>(ir.arrows.size());
  out.nodes.resize(ir.nodes.size());
  out.paths.resize(ir.arrows.size());
  std::vector<std::exception_ptr> errors(ir.arrows.size());
  const NodeIndex idx = index_nodes(ir.nodes);

#pragma omp parallel
  {
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t i = 0; i < n_nodes; ++i) out.nodes[i] = place_node(ir.nodes[i], ir.scale, m);

#pragma omp for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < n_arrows; ++i) {
      try {
        out.paths[i] = lay_out_arrow(ir.arrows[i], ir, idx, m);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  out.bbox = bounding_box(out.nodes, out.paths, ir.scale);
  return out;
}

}  // namespace diagc

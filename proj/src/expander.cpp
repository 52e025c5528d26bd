#include "diagc/expander.hpp"

#include <algorithm>
#include <exception>
#include <optional>

#include "diagc/layout.hpp"

namespace diagc {

namespace {

constexpr std::string_view kPlacements = "lmrab";

// Replays \morphism / \domorphism emission into a fragment.
class Emitter {
 public:
  explicit Emitter(std::string_view cmd) : cmd_(cmd) {}

  Fragment& out() { return out_; }
  Fragment take() { return std::move(out_); }

  [[noreturn]] void fail(const std::string& msg) const { throw ExpansionError(msg + " in \\" + cmd_); }

  void morphism(Point at, char placement, const std::string& style, Point disp, const std::string& a,
                const std::string& b, const std::string& label) {
    arrow(ArrowKind::Morphism, at, placement, style, disp, a, b, label);
  }

  // `from` / `to` of nullopt leave a free endpoint.
  void arrow(ArrowKind kind, Point at, char placement, const std::string& style, Point disp,
             std::optional<std::string> from, std::optional<std::string> to, const std::string& label) {
    if (disp == Point{}) fail("degenerate arrow: zero displacement");
    Point end = at + disp;
    if (from) add_node(at, *from);
    if (to) add_node(end, *to);
    if (style.empty()) {
      // an empty direction draws nothing; the shared edges of \hSquares/\vSquares use this
      if (!label.empty()) warn("label '" + label + "' dropped on an arrow with an empty style");
      return;
    }
    Arrow a;
    a.kind = kind;
    a.from = at;
    a.to = end;
    a.style = style;
    a.from_object = std::move(from);
    a.to_object = std::move(to);
    LabelSide side = resolve_label_side(placement, disp.x, disp.y, label.empty());
    if (side != LabelSide::None) {
      a.labels.push_back({label, side});
    } else if (placement != 0 && kPlacements.find(placement) == std::string_view::npos && !label.empty()) {
      warn("unknown placement '" + std::string(1, placement) + "': label '" + label + "' dropped");
    }
    out_.arrows.push_back(std::move(a));
  }

  void add_node(Point at, const std::string& text, char align = 0, bool placed = false) {
    Node n;
    n.anchor = at;
    n.text = text;
    n.align = align;
    n.placed = placed;
    out_.nodes.push_back(std::move(n));
  }

  void warn(const std::string& msg) { out_.warnings.push_back({Severity::Warning, {}, msg + " in \\" + cmd_}); }

 private:
  std::string cmd_;
  Fragment out_;
};

char at_or(const std::string& s, std::size_t i) { return i < s.size() ? s[i] : 0; }

// Register state of the macros after a shape is drawn.
struct Registers {
  Length xpos = 0, ypos = 0, deltax = 0, deltay = 0;
};

void require_extent(const Emitter& e, Length dx, Length dy) {
  if (dx == 0 || dy == 0) e.fail("degenerate edge: extent <" + std::to_string(dx) + "," + std::to_string(dy) + ">");
}

void check_arity(const Emitter& e, const Clause& c, std::size_t placements, std::size_t styles, std::size_t nodes,
                 std::size_t labels) {
  if (c.placements.size() != placements || c.styles.size() != styles || c.nodes.size() != nodes ||
      c.labels.size() != labels)
    e.fail("argument arity mismatch");
}

struct SquareArgs {
  Point origin;
  std::string placements;  // top, left, right, bottom
  std::vector<std::string> styles;
  Length dx = 0, dy = 0;
  std::vector<std::string> nodes;  // A B C D
  std::vector<std::string> labels;
};

// \squarepppp: bottom, left, top, right.
Registers square_into(Emitter& e, const SquareArgs& s) {
  require_extent(e, s.dx, s.dy);
  const auto& p = s.placements;
  const auto& st = s.styles;
  const auto& n = s.nodes;
  const auto& l = s.labels;
  Registers r{s.origin.x, s.origin.y, s.dx, s.dy};
  e.morphism({r.xpos, r.ypos}, at_or(p, 3), st[3], {r.deltax, 0}, n[2], n[3], l[3]);
  r.ypos += r.deltay;
  e.morphism({r.xpos, r.ypos}, at_or(p, 1), st[1], {0, -r.deltay}, n[0], n[2], l[1]);
  e.morphism({r.xpos, r.ypos}, at_or(p, 0), st[0], {r.deltax, 0}, n[0], n[1], l[0]);
  r.xpos += r.deltax;
  e.morphism({r.xpos, r.ypos}, at_or(p, 2), st[2], {0, -r.deltay}, n[1], n[3], l[2]);
  return r;
}

SquareArgs square_args(const Clause& c) {
  return {c.origin, c.placements, c.styles, c.extent.at(0), c.extent.at(1), c.nodes, c.labels};
}

Length measure(const std::string& a, const std::string& b, const std::string& label, const ExpandContext& ctx) {
  return measure_morphism_width(a, b, label, ctx);
}

Length auto_square_width(const std::vector<std::string>& n, const std::vector<std::string>& l,
                         const ExpandContext& ctx) {
  return ratchet(measure(n[0], n[1], l[0], ctx), measure(n[2], n[3], l[3], ctx));
}

void triangle_into(Emitter& e, char kind, const Clause& c) {
  check_arity(e, c, 3, 3, 3, 3);
  Length dx = c.extent.at(0), dy = c.extent.at(1);
  require_extent(e, dx, dy);
  const auto& p = c.placements;
  const auto& s = c.styles;
  const auto& n = c.nodes;  // A B C
  const auto& l = c.labels;
  Length x = c.origin.x, y = c.origin.y;
  switch (kind) {
    case 'p':
      y += dy;
      e.morphism({x, y}, p[0], s[0], {dx, 0}, n[0], n[1], l[0]);
      e.morphism({x, y}, p[1], s[1], {0, -dy}, n[0], n[2], l[1]);
      x += dx;
      e.morphism({x, y}, p[2], s[2], {-dx, -dy}, n[1], n[2], l[2]);
      break;
    case 'q':
      y += dy;
      e.morphism({x, y}, p[0], s[0], {dx, 0}, n[0], n[1], l[0]);
      e.morphism({x, y}, p[1], s[1], {dx, -dy}, n[0], n[2], l[1]);
      x += dx;
      e.morphism({x, y}, p[2], s[2], {0, -dy}, n[1], n[2], l[2]);
      break;
    case 'd':
      e.morphism({x, y}, p[2], s[2], {dx, 0}, n[1], n[2], l[2]);
      y += dy;
      x += dx;
      e.morphism({x, y}, p[0], s[0], {-dx, -dy}, n[0], n[1], l[0]);
      e.morphism({x, y}, p[1], s[1], {0, -dy}, n[0], n[2], l[1]);
      break;
    case 'b':
      e.morphism({x, y}, p[2], s[2], {dx, 0}, n[1], n[2], l[2]);
      y += dy;
      e.morphism({x, y}, p[0], s[0], {0, -dy}, n[0], n[1], l[0]);
      e.morphism({x, y}, p[1], s[1], {dx, -dy}, n[0], n[2], l[1]);
      break;
    case 'A': {
      Length deltax = dx * 2;
      e.morphism({x, y}, p[2], s[2], {deltax, 0}, n[1], n[2], l[2]);
      deltax = tex_div(deltax, 2);
      y += dy;
      x += deltax;
      e.morphism({x, y}, p[0], s[0], {-deltax, -dy}, n[0], n[1], l[0]);
      e.morphism({x, y}, p[1], s[1], {deltax, -dy}, n[0], n[2], l[1]);
      break;
    }
    case 'V': {
      Length deltax = dx;
      y += dy;
      e.morphism({x, y}, p[1], s[1], {deltax, -dy}, n[0], n[2], l[1]);
      deltax *= 2;
      e.morphism({x, y}, p[0], s[0], {deltax, 0}, n[0], n[1], l[0]);
      x += deltax;
      deltax = tex_div(deltax, 2);
      e.morphism({x, y}, p[2], s[2], {-deltax, -dy}, n[1], n[2], l[2]);
      break;
    }
    case 'C': {
      Length deltay = dy;
      y += deltay;
      e.morphism({x, y}, p[2], s[2], {dx, -deltay}, n[1], n[2], l[2]);
      y += deltay;
      x += dx;
      e.morphism({x, y}, p[0], s[0], {-dx, -deltay}, n[0], n[1], l[0]);
      deltay *= 2;
      e.morphism({x, y}, p[1], s[1], {0, -deltay}, n[0], n[2], l[1]);
      break;
    }
    case 'D': {
      Length deltay = dy;
      x += dx;
      y += deltay;
      e.morphism({x, y}, p[2], s[2], {-dx, -deltay}, n[1], n[2], l[2]);
      x -= dx;
      y += deltay;
      // this macro draws A->B with the second slot and A->C with the first
      e.morphism({x, y}, p[1], s[1], {dx, -deltay}, n[0], n[1], l[1]);
      deltay *= 2;
      e.morphism({x, y}, p[0], s[0], {0, -deltay}, n[0], n[2], l[0]);
      break;
    }
    default: e.fail("unknown triangle kind '" + std::string(1, kind) + "'");
  }
}

void triangle_pair_into(Emitter& e, char kind, const Clause& c) {
  check_arity(e, c, 5, 5, 4, 5);
  Length dx = c.extent.at(0), dy = c.extent.at(1);
  require_extent(e, dx, dy);
  const auto& p = c.placements;
  const auto& s = c.styles;
  const auto& n = c.nodes;  // A B C D
  const auto& l = c.labels;
  Length x = c.origin.x, y = c.origin.y;
  switch (kind) {
    case 'A':
      e.morphism({x, y}, p[3], s[3], {dx, 0}, n[1], n[2], l[3]);
      x += dx;
      e.morphism({x, y}, p[4], s[4], {dx, 0}, n[2], n[3], l[4]);
      y += dy;
      e.morphism({x, y}, p[0], s[0], {-dx, -dy}, n[0], n[1], l[0]);
      e.morphism({x, y}, p[1], s[1], {0, -dy}, n[0], n[2], l[1]);
      e.morphism({x, y}, p[2], s[2], {dx, -dy}, n[0], n[3], l[2]);
      break;
    case 'V':
      y += dy;
      e.morphism({x, y}, p[0], s[0], {dx, 0}, n[0], n[1], l[0]);
      e.morphism({x, y}, p[2], s[2], {dx, -dy}, n[0], n[3], l[2]);
      x += dx;
      e.morphism({x, y}, p[1], s[1], {dx, 0}, n[1], n[2], l[1]);
      e.morphism({x, y}, p[3], s[3], {0, -dy}, n[1], n[3], l[3]);
      x += dx;
      e.morphism({x, y}, p[4], s[4], {-dx, -dy}, n[2], n[3], l[4]);
      break;
    case 'C':
      y += dy;
      e.morphism({x, y}, p[4], s[4], {0, -dy}, n[2], n[3], l[4]);
      x -= dx;
      e.morphism({x, y}, p[2], s[2], {dx, 0}, n[1], n[2], l[2]);
      e.morphism({x, y}, p[3], s[3], {dx, -dy}, n[1], n[3], l[3]);
      y += dy;
      x += dx;
      e.morphism({x, y}, p[0], s[0], {-dx, -dy}, n[0], n[1], l[0]);
      e.morphism({x, y}, p[1], s[1], {0, -dy}, n[0], n[2], l[1]);
      break;
    case 'D':
      y += dy;
      e.morphism({x, y}, p[2], s[2], {dx, 0}, n[1], n[2], l[2]);
      e.morphism({x, y}, p[3], s[3], {0, -dy}, n[1], n[3], l[3]);
      y += dy;
      e.morphism({x, y}, p[0], s[0], {0, -dy}, n[0], n[1], l[0]);
      e.morphism({x, y}, p[1], s[1], {dx, -dy}, n[0], n[2], l[1]);
      y -= dy;
      x += dx;
      e.morphism({x, y}, p[4], s[4], {-dx, -dy}, n[2], n[3], l[4]);
      break;
    default: e.fail("unknown triangle pair kind '" + std::string(1, kind) + "'");
  }
}

void grid3x3_into(Emitter& e, const Clause& c) {
  check_arity(e, c, 12, 12, 9, 12);
  std::int64_t mask = c.mask.value_or(0);
  if (mask < 0 || mask >= 4096) e.fail("mask " + std::to_string(mask) + " out of range (0..4095)");
  Length dx = c.extent.at(0), dy = c.extent.at(1);
  require_extent(e, dx, dy);
  Length sx = c.stub.at(0), sy = c.stub.at(1);
  const auto& p = c.placements;
  const auto& s = c.styles;
  const auto& n = c.nodes;  // a..i, rows top to bottom
  const auto& l = c.labels;
  // bit 0 is zl, bit 11 is za
  auto bit = [mask](char z) { return ((mask >> ('l' - z)) & 1) != 0; };
  auto in = [&](Point at, Point disp, const std::string& node) {
    e.arrow(ArrowKind::Stub, at, 0, "<-", disp, node, std::nullopt, "");
  };
  auto out = [&](Point at, Point disp, const std::string& node) {
    e.arrow(ArrowKind::Stub, at, 0, ">", disp, node, std::nullopt, "");
  };
  Length x = c.origin.x, y = c.origin.y;
  e.morphism({x, y}, p[4], s[4], {dx, 0}, n[6], n[7], l[4]);
  if (bit('i')) in({x, y}, {-sx, 0}, n[6]);
  if (bit('d')) out({x, y}, {0, -sy}, n[6]);
  x += dx;
  e.morphism({x, y}, p[5], s[5], {dx, 0}, n[7], n[8], l[5]);
  if (bit('e')) out({x, y}, {0, -sy}, n[7]);
  x += dx;
  if (bit('f')) out({x, y}, {0, -sy}, n[8]);
  if (bit('l')) out({x, y}, {sx, 0}, n[8]);
  y += dy;
  if (bit('k')) out({x, y}, {sx, 0}, n[5]);
  x -= dx;
  e.morphism({x, y}, p[3], s[3], {dx, 0}, n[4], n[5], l[3]);
  x -= dx;
  e.morphism({x, y}, p[2], s[2], {dx, 0}, n[3], n[4], l[2]);
  if (bit('h')) in({x, y}, {-sx, 0}, n[3]);
  y += dy;
  e.morphism({x, y}, p[0], s[0], {dx, 0}, n[0], n[1], l[0]);
  if (bit('g')) in({x, y}, {-sx, 0}, n[0]);
  if (bit('a')) in({x, y}, {0, sy}, n[0]);
  x += dx;
  e.morphism({x, y}, p[1], s[1], {dx, 0}, n[1], n[2], l[1]);
  if (bit('b')) in({x, y}, {0, sy}, n[1]);
  x += dx;
  if (bit('c')) in({x, y}, {0, sy}, n[2]);
  if (bit('j')) out({x, y}, {sx, 0}, n[2]);
  e.morphism({x, y}, p[8], s[8], {0, -dy}, n[2], n[5], l[8]);
  x -= dx;
  e.morphism({x, y}, p[7], s[7], {0, -dy}, n[1], n[4], l[7]);
  x -= dx;
  e.morphism({x, y}, p[6], s[6], {0, -dy}, n[0], n[3], l[6]);
  y -= dy;
  e.morphism({x, y}, p[9], s[9], {0, -dy}, n[3], n[6], l[9]);
  x += dx;
  e.morphism({x, y}, p[10], s[10], {0, -dy}, n[4], n[7], l[10]);
  x += dx;
  e.morphism({x, y}, p[11], s[11], {0, -dy}, n[5], n[8], l[11]);
}

void grid3x2_into(Emitter& e, const Clause& c) {
  check_arity(e, c, 7, 7, 6, 7);
  std::int64_t mask = c.mask.value_or(0);
  if (mask < 0 || mask >= 16) e.fail("mask " + std::to_string(mask) + " out of range (0..15)");
  Length dx = c.extent.at(0), dy = c.extent.at(1);
  require_extent(e, dx, dy);
  Length stub = c.stub.at(0);
  const auto& p = c.placements;
  const auto& s = c.styles;
  const auto& n = c.nodes;  // a b c over d e f
  const auto& l = c.labels;
  // bit 0 is za, bit 3 is zd; stubs use the default placement 'a' and style '>'
  auto bit = [mask](int i) { return ((mask >> i) & 1) != 0; };
  auto in = [&](Point at, const std::string& node) {
    e.arrow(ArrowKind::Stub, at, 'a', ">", {stub, 0}, std::nullopt, node, "");
  };
  auto out = [&](Point at, const std::string& node) {
    e.arrow(ArrowKind::Stub, at, 'a', ">", {stub, 0}, node, std::nullopt, "");
  };
  Length x = c.origin.x, y = c.origin.y;
  if (bit(2)) in({x, y}, n[3]);
  x += stub;
  e.morphism({x, y}, p[2], s[2], {dx, 0}, n[3], n[4], l[2]);
  x += dx;
  e.morphism({x, y}, p[3], s[3], {dx, 0}, n[4], n[5], l[3]);
  x += dx;
  if (bit(3)) out({x, y}, n[5]);
  x -= stub;
  x -= dx;
  x -= dx;
  y += dy;
  if (bit(0)) in({x, y}, n[0]);
  x += stub;
  e.morphism({x, y}, p[0], s[0], {dx, 0}, n[0], n[1], l[0]);
  e.morphism({x, y}, p[4], s[4], {0, -dy}, n[0], n[3], l[4]);
  x += dx;
  e.morphism({x, y}, p[1], s[1], {dx, 0}, n[1], n[2], l[1]);
  e.morphism({x, y}, p[5], s[5], {0, -dy}, n[1], n[4], l[5]);
  x += dx;
  e.morphism({x, y}, p[6], s[6], {0, -dy}, n[2], n[5], l[6]);
  if (bit(1)) out({x, y}, n[2]);
}

Fragment with_location(Fragment f, SourceLocation loc) {
  for (auto& w : f.warnings) w.loc = loc;
  return f;
}

}  // namespace

Length measure_morphism_width(const std::string& node_a, const std::string& node_b, const std::string& label,
                              const ExpandContext& ctx) {
  static const FontMetrics fallback = FontMetrics::default_table();
  const FontMetrics& m = ctx.metrics ? *ctx.metrics : fallback;
  Length w = text_width(node_a, Ratio(1), m) + 2 * text_width(label, ctx.label_scale, m) +
             text_width(node_b, Ratio(1), m);
  w = tex_div(w, 2) + 350;
  return ratchet(w, 500);
}

Fragment expand_morphism(Point origin, char placement, const std::string& style, Point disp,
                         const std::string& node_a, const std::string& node_b, const std::string& label) {
  Emitter e("morphism");
  e.morphism(origin, placement, style, disp, node_a, node_b, label);
  return e.take();
}

Fragment expand_vector(Point origin, const std::string& style, Point disp) {
  Emitter e("vector");
  e.arrow(ArrowKind::Vector, origin, 0, style.empty() ? ">" : style, disp, std::nullopt, std::nullopt, "");
  return e.take();
}

Fragment expand_place(Point pos, char align, const std::string& text) {
  Emitter e("place");
  e.add_node(pos, text, align, true);
  return e.take();
}

Fragment expand_square(const Clause& c) {
  Emitter e("square");
  check_arity(e, c, 4, 4, 4, 4);
  square_into(e, square_args(c));
  return e.take();
}

Fragment expand_auto_square(const Clause& c, const ExpandContext& ctx) {
  Emitter e("Square");
  check_arity(e, c, 4, 4, 4, 4);
  SquareArgs s{c.origin, c.placements, c.styles, auto_square_width(c.nodes, c.labels, ctx), c.extent.at(0),
               c.nodes, c.labels};
  square_into(e, s);
  return e.take();
}

Fragment expand_triangle(char kind, const Clause& c) {
  Emitter e(std::string(1, kind) + "triangle");
  triangle_into(e, kind, c);
  return e.take();
}

Fragment expand_triangle_pair(char kind, const Clause& c) {
  Emitter e(std::string(1, kind) + "trianglepair");
  triangle_pair_into(e, kind, c);
  return e.take();
}

Fragment expand_hsquares(const Clause& c, const ExpandContext& ctx) {
  Emitter e("hSquares");
  check_arity(e, c, 7, 7, 6, 7);
  const auto& X = c.placements;
  const auto& S = c.styles;
  const auto& N = c.nodes;
  const auto& L = c.labels;
  Length height = c.extent.at(0);

  SquareArgs left{c.origin, {X[0], X[2], X[3], X[5]}, {S[0], S[2], S[3], S[5]}, 0, height,
                  {N[0], N[1], N[3], N[4]}, {L[0], L[2], L[3], L[5]}};
  left.dx = auto_square_width(left.nodes, left.labels, ctx);
  Registers r = square_into(e, left);

  // the shared middle edge is drawn once, by the left square
  SquareArgs right{{c.origin.x + left.dx, c.origin.y}, {X[1], X[3], X[4], X[6]}, {S[1], "", S[4], S[6]}, 0, height,
                   {N[1], N[2], N[4], N[5]}, {L[1], "", L[4], L[6]}};
  right.dx = auto_square_width(right.nodes, right.labels, ctx);
  (void)r;
  square_into(e, right);
  return e.take();
}

Fragment expand_vsquares(const Clause& c, const ExpandContext& ctx) {
  Emitter e("vSquares");
  check_arity(e, c, 7, 7, 6, 7);
  const auto& X = c.placements;
  const auto& S = c.styles;
  const auto& N = c.nodes;
  const auto& L = c.labels;
  // first extent parameter is the bottom height
  Length bottom_h = c.extent.at(0), top_h = c.extent.at(1);

  Length topw = measure(N[0], N[1], L[0], ctx);
  Length botw = measure(N[2], N[3], L[3], ctx);
  topw = ratchet(topw, botw);
  botw = measure(N[4], N[5], L[6], ctx);
  topw = ratchet(topw, botw);

  SquareArgs bottom{c.origin, {X[3], X[4], X[5], X[6]}, {"", S[4], S[5], S[6]}, topw, bottom_h,
                    {N[2], N[3], N[4], N[5]}, {"", L[4], L[5], L[6]}};
  square_into(e, bottom);
  SquareArgs top{{c.origin.x, c.origin.y + bottom_h}, {X[0], X[1], X[2], X[3]}, {S[0], S[1], S[2], S[3]}, topw, top_h,
                 {N[0], N[1], N[2], N[3]}, {L[0], L[1], L[2], L[3]}};
  square_into(e, top);
  return e.take();
}

Fragment expand_cube(const Clause& outer, const Clause& inner, const Clause& connectors) {
  Emitter e("cube");
  check_arity(e, outer, 4, 4, 4, 4);
  check_arity(e, inner, 4, 4, 4, 4);
  if (connectors.placements.size() != 4 || connectors.styles.size() != 4 || connectors.labels.size() != 4)
    e.fail("argument arity mismatch");

  Registers o = square_into(e, square_args(outer));
  Registers i = square_into(e, square_args(inner));

  auto span = [](Length a, Length d) { return std::pair{std::min(a, a + d), std::max(a, a + d)}; };
  auto [oxl, oxh] = span(outer.origin.x, o.deltax);
  auto [oyl, oyh] = span(outer.origin.y, o.deltay);
  auto [ixl, ixh] = span(inner.origin.x, i.deltax);
  auto [iyl, iyh] = span(inner.origin.y, i.deltay);
  if (ixl < oxl || ixh > oxh || iyl < oyl || iyh > oyh) e.warn("inner square does not lie inside the outer square");

  const auto& p = connectors.placements;
  const auto& s = connectors.styles;
  const auto& l = connectors.labels;
  const auto& on = outer.nodes;
  const auto& in = inner.nodes;
  Length X = o.xpos, Y = o.ypos, xend = i.xpos, yend = i.ypos;
  e.morphism({X, Y}, p[1], s[1], {xend - X, yend - Y}, on[1], in[1], l[1]);
  X -= o.deltax;
  xend -= i.deltax;
  e.morphism({X, Y}, p[0], s[0], {xend - X, yend - Y}, on[0], in[0], l[0]);
  Y -= o.deltay;
  yend -= i.deltay;
  e.morphism({X, Y}, p[2], s[2], {xend - X, yend - Y}, on[2], in[2], l[2]);
  X += o.deltax;
  xend += i.deltax;
  e.morphism({X, Y}, p[3], s[3], {xend - X, yend - Y}, on[3], in[3], l[3]);
  return e.take();
}

Fragment expand_pullback(const Clause& square, const Clause& trident) {
  Emitter e("pullback");
  check_arity(e, square, 4, 4, 4, 4);
  check_arity(e, trident, 3, 3, 1, 3);
  Registers r = square_into(e, square_args(square));
  Length p7 = trident.extent.at(0), p8 = trident.extent.at(1);
  const auto& p = trident.placements;
  const auto& s = trident.styles;
  const auto& l = trident.labels;
  const std::string& node_e = trident.nodes[0];
  const auto& n = square.nodes;

  r.xpos -= r.deltax;
  r.xpos -= p7;
  r.ypos += p8;
  Point at{r.xpos, r.ypos};
  r.deltax += p7;
  e.morphism(at, p[0], s[0], {r.deltax, -p8}, node_e, n[1], l[0]);
  r.deltax -= p7;
  e.morphism(at, p[1], s[1], {p7, -p8}, node_e, n[0], l[1]);
  r.deltay += p8;
  e.morphism(at, p[2], s[2], {p7, -r.deltay}, node_e, n[2], l[2]);
  return e.take();
}

Fragment expand_grid3x3(const Clause& c) {
  Emitter e("iiixiii");
  grid3x3_into(e, c);
  return e.take();
}

Fragment expand_grid3x2(const Clause& c) {
  Emitter e("iiixii");
  grid3x2_into(e, c);
  return e.take();
}

Fragment expand_inline_arrow(const Command& c, const ExpandContext& ctx) {
  static const FontMetrics fallback = FontMetrics::default_table();
  const FontMetrics& m = ctx.metrics ? *ctx.metrics : fallback;
  std::string name = command_name(c);
  Emitter e(name);
  if (c.length < 0) e.fail("negative arrow length " + std::to_string(c.length));

  const auto& labels = c.main.labels;
  const auto& styles = c.main.styles;
  Length floor = c.kind == CommandKind::Three ? 300 : 200;
  Length len = c.length;
  if (len == 0) {
    Length widest = 0;
    for (const auto& l : labels) widest = std::max(widest, text_width(l, ctx.label_scale, m));
    len = ratchet(widest + kDefaultMargin, floor);
  }

  auto add = [&](const std::string& style, int offset, std::vector<ArrowLabel> ls) {
    if (style.empty()) return;
    Arrow a;
    a.kind = ArrowKind::Inline;
    a.from = {0, 0};
    a.to = {len, 0};
    a.style = style;
    a.offset_tenths_pt = offset;
    a.labels = std::move(ls);
    e.out().arrows.push_back(std::move(a));
  };

  switch (c.kind) {
    case CommandKind::InlineTo:
      add(styles.at(0), 0, {{labels.at(0), LabelSide::Above}, {labels.at(1), LabelSide::Below}});
      break;
    case CommandKind::Two:
      add(styles.at(0), 25, {{labels.at(0), LabelSide::Above}});
      add(styles.at(1), -25, {{labels.at(1), LabelSide::Below}});
      break;
    case CommandKind::Three: {
      std::vector<ArrowLabel> middle;
      if (!labels.at(1).empty()) middle.push_back({labels.at(1), LabelSide::OnLine});
      add(styles.at(1), 0, std::move(middle));
      add(styles.at(0), 45, {{labels.at(0), LabelSide::Above}});
      add(styles.at(2), -45, {{labels.at(2), LabelSide::Below}});
      break;
    }
    default: e.fail("not an inline arrow");
  }
  return e.take();
}

Point two_cell_endpoint(Point direction) {
  Length i = direction.x, j = direction.y;
  if (i == 0 && j == 0) throw ExpansionError("degenerate arrow: \\twoar direction (0,0)");
  Length ai = i < 0 ? -i : i;
  Length aj = j < 0 ? -j : j;
  Length sum_sq = 3 * (i * i + j * j);
  Length mix = ai > aj ? 3 * ai + aj : ai + 3 * aj;
  Length di = i * 500, dj = j * 500;
  Length x = tex_div(di * 3, mix) + tex_div(di * mix, sum_sq);
  Length y = tex_div(dj * 3, mix) + tex_div(dj * mix, sum_sq);
  return {x, y};
}

Fragment expand_two_cell(Point direction) {
  Fragment f;
  Arrow a;
  a.kind = ArrowKind::TwoCell;
  a.from = {0, 0};
  a.to = two_cell_endpoint(direction);
  a.style = "=>";
  a.local_scale = Ratio(1, 10);
  f.arrows.push_back(std::move(a));
  return f;
}

Fragment expand_command(const Command& c, const ExpandContext& ctx) {
  try {
    Fragment f;
    switch (c.kind) {
      case CommandKind::Morphism: {
        const Clause& m = c.main;
        f = expand_morphism(m.origin, at_or(m.placements, 0), m.styles.at(0), {m.extent.at(0), m.extent.at(1)},
                            m.nodes.at(0), m.nodes.at(1), m.labels.at(0));
        break;
      }
      case CommandKind::Vector:
        f = expand_vector(c.main.origin, c.main.styles.at(0), {c.main.extent.at(0), c.main.extent.at(1)});
        break;
      case CommandKind::Place: f = expand_place(c.main.origin, c.main.align, c.main.nodes.at(0)); break;
      case CommandKind::Square: f = expand_square(c.main); break;
      case CommandKind::AutoSquare: f = expand_auto_square(c.main, ctx); break;
      case CommandKind::Triangle: f = expand_triangle(c.variant, c.main); break;
      case CommandKind::TrianglePair: f = expand_triangle_pair(c.variant, c.main); break;
      case CommandKind::HSquares: f = expand_hsquares(c.main, ctx); break;
      case CommandKind::VSquares: f = expand_vsquares(c.main, ctx); break;
      case CommandKind::Cube: f = expand_cube(c.main, c.extra.at(0), c.extra.at(1)); break;
      case CommandKind::Pullback: f = expand_pullback(c.main, c.extra.at(0)); break;
      case CommandKind::Grid3x3: f = expand_grid3x3(c.main); break;
      case CommandKind::Grid3x2: f = expand_grid3x2(c.main); break;
      case CommandKind::InlineTo:
      case CommandKind::Two:
      case CommandKind::Three: f = expand_inline_arrow(c, ctx); break;
      case CommandKind::TwoAr: f = expand_two_cell(c.direction); break;
      case CommandKind::ScaleFactor: break;
    }
    return with_location(std::move(f), c.loc);
  } catch (const ExpansionError& e) {
    throw ExpansionError(e.what(), c.loc);
  } catch (const std::out_of_range&) {
    throw ExpansionError("argument arity mismatch in \\" + command_name(c), c.loc);
  }
}

namespace {

Expansion assemble(const DiagramSource& src, std::vector<Fragment>& fragments, const ScaleConfig& base) {
  Expansion out;
  out.ir.scale = base;
  for (std::size_t i = 0; i < fragments.size(); ++i) {
    const Command& c = src.commands[i];
    if (c.kind == CommandKind::ScaleFactor) out.ir.scale.scale = out.ir.scale.scale * c.factor;
    Fragment& f = fragments[i];
    for (Node& n : f.nodes) {
      n.id = static_cast<int>(out.ir.nodes.size());
      n.group = static_cast<int>(i);
      out.ir.nodes.push_back(std::move(n));
    }
    for (Arrow& a : f.arrows) {
      a.group = static_cast<int>(i);
      out.ir.arrows.push_back(std::move(a));
    }
    for (Diagnostic& d : f.warnings) out.warnings.push_back(std::move(d));
  }
  return out;
}

}  // namespace

Expansion expand_diagram_serial(const DiagramSource& src, const ExpandContext& ctx, const ScaleConfig& base) {
  std::vector<Fragment> fragments;
  fragments.reserve(src.commands.size());
  for (const Command& c : src.commands) fragments.push_back(expand_command(c, ctx));
  return assemble(src, fragments, base);
}

Expansion expand_diagram(const DiagramSource& src, const ExpandContext& ctx, const ScaleConfig& base) {
  const auto n = static_cast<std::ptrdiff_t>(src.commands.size());
  std::vector<Fragment> fragments(src.commands.size());
  std::vector<std::exception_ptr> errors(src.commands.size());

#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      fragments[i] = expand_command(src.commands[i], ctx);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return assemble(src, fragments, base);
}

}  // namespace diagc

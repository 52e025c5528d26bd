#pragma once

#include <string>
#include <vector>

#include "diagc/core.hpp"
#include "diagc/metrics.hpp"

namespace diagc {

/// Side of a morphism label given its placement character and displacement.
/// Strict comparisons: at dy == 0, 'l' gives Below and 'r' gives Above.
/// 'm' yields OnLine, or None when the label is empty; unknown characters give None.
LabelSide resolve_label_side(char placement, Length dx, Length dy, bool label_empty = false);

// Axis-aligned box by center and half extents, centi-em.
struct Box {
  Point center;
  Length half_w = 0;
  Length half_h = 0;

  Length left() const { return center.x - half_w; }
  Length right() const { return center.x + half_w; }
  Length bottom() const { return center.y - half_h; }
  Length top() const { return center.y + half_h; }

  friend bool operator==(const Box&, const Box&) = default;
};

struct Rect {
  Length min_x = 0, min_y = 0, max_x = 0, max_y = 0;
  bool empty = true;

  void include(Point p);
  void include(const Box& b);
  Length width() const { return max_x - min_x; }
  Length height() const { return max_y - min_y; }

  friend bool operator==(const Rect&, const Rect&) = default;
};

struct Segment {
  Point start;
  Point end;

  friend bool operator==(const Segment&, const Segment&) = default;
};

struct PlacedLabel {
  std::string text;
  LabelSide side = LabelSide::None;
  Point anchor;  // midpoint of the clipped path
  Box box;       // where the text goes

  friend bool operator==(const PlacedLabel&, const PlacedLabel&) = default;
};

struct DrawablePath {
  Point start;
  Point end;
  std::string style;
  ArrowKind kind = ArrowKind::Morphism;
  std::vector<PlacedLabel> labels;
  // Visible pieces: one segment, or two when an on-line label knocks out the middle.
  std::vector<Segment> segments;

  friend bool operator==(const DrawablePath&, const DrawablePath&) = default;
};

struct PlacedNode {
  Node node;
  Box box;
  Point baseline;  // text reference point

  friend bool operator==(const PlacedNode&, const PlacedNode&) = default;
};

struct Layout {
  std::vector<PlacedNode> nodes;
  std::vector<DrawablePath> paths;
  Rect bbox;
  ScaleConfig scale;

  friend bool operator==(const Layout&, const Layout&) = default;
};

/// Text box of a node: width from metrics, height 1 em (0 for empty text), shifted by alignment.
Box node_box(const Node& n, const FontMetrics& m);

/// pt to centi-em at the given em size, rounded half away from zero.
Length pt_to_centi_em(Ratio pt, Ratio em_size);

/// Retracts attached endpoints to the margin-inflated text box of their node.
/// Throws LayoutError when nothing of the arrow would remain.
DrawablePath clip_arrow(const Arrow& a, const std::vector<Node>& nodes, const ScaleConfig& cfg,
                        const FontMetrics& m);

/// Shift from a node anchor to its text reference point: 0.75 ex downward.
Point baseline_offset(const Node& n, const ScaleConfig& cfg);

/// Translates the path perpendicular to its direction; positive moves toward the Above side.
DrawablePath offset_parallel(const DrawablePath& path, Ratio offset_pt, const ScaleConfig& cfg);

/// Tight box over node boxes, path segments and labels, plus the canvas margin.
/// Throws LayoutError for an empty diagram.
Rect bounding_box(const std::vector<PlacedNode>& nodes, const std::vector<DrawablePath>& paths,
                  const ScaleConfig& cfg);

/// Full layout; arrows are laid out in parallel.
Layout layout_diagram(const DiagramIR& ir, const FontMetrics& m);

/// Single-threaded reference for layout_diagram.
Layout layout_diagram_serial(const DiagramIR& ir, const FontMetrics& m);

}  // namespace diagc

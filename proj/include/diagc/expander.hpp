#pragma once

#include <string>
#include <vector>

#include "diagc/core.hpp"
#include "diagc/metrics.hpp"
#include "diagc/parser.hpp"

namespace diagc {

struct ExpandContext {
  const FontMetrics* metrics = nullptr;  // default table when null
  Ratio label_scale{7, 10};
};

// Nodes and arrows produced by one command, in macro drawing order.
struct Fragment {
  std::vector<Node> nodes;
  std::vector<Arrow> arrows;
  std::vector<Diagnostic> warnings;
};

Fragment expand_morphism(Point origin, char placement, const std::string& style, Point disp, const std::string& node_a,
                         const std::string& node_b, const std::string& label);
Fragment expand_vector(Point origin, const std::string& style, Point disp);
Fragment expand_place(Point pos, char align, const std::string& text);
Fragment expand_square(const Clause& c);
Fragment expand_auto_square(const Clause& c, const ExpandContext& ctx);
Fragment expand_triangle(char kind, const Clause& c);
Fragment expand_triangle_pair(char kind, const Clause& c);
Fragment expand_hsquares(const Clause& c, const ExpandContext& ctx);
Fragment expand_vsquares(const Clause& c, const ExpandContext& ctx);
Fragment expand_cube(const Clause& outer, const Clause& inner, const Clause& connectors);
Fragment expand_pullback(const Clause& square, const Clause& trident);
Fragment expand_grid3x3(const Clause& c);
Fragment expand_grid3x2(const Clause& c);
Fragment expand_inline_arrow(const Command& c, const ExpandContext& ctx);
Fragment expand_two_cell(Point direction);

/// End point of a \twoar(i,j) arrow, in units of 0.1 centi-em.
Point two_cell_endpoint(Point direction);

/// Auto width of a morphism: half the width of "A{label label}B", plus 350, at least 500.
Length measure_morphism_width(const std::string& node_a, const std::string& node_b, const std::string& label,
                              const ExpandContext& ctx);

/// Expands any command. Throws ExpansionError located at the command.
Fragment expand_command(const Command& c, const ExpandContext& ctx);

struct Expansion {
  DiagramIR ir;  // not yet merged: shared corners appear once per drawing
  std::vector<Diagnostic> warnings;
};

/// Expands every command of a diagram, in parallel, concatenating in source order.
Expansion expand_diagram(const DiagramSource& src, const ExpandContext& ctx, const ScaleConfig& base = {});

/// Single-threaded reference for expand_diagram.
Expansion expand_diagram_serial(const DiagramSource& src, const ExpandContext& ctx, const ScaleConfig& base = {});

}  // namespace diagc

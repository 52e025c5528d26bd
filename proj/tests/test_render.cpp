#include <gtest/gtest.h>

#include <regex>

#include "diagc/layout.hpp"
#include "diagc/render.hpp"
#include "helpers.hpp"

using namespace diagc;
using testing_support::default_metrics;
using testing_support::expand_source;
using testing_support::merged;

namespace {

std::string svg(const std::string& src, std::vector<Diagnostic>* w = nullptr) {
  return render_svg(layout_diagram(merged(src), default_metrics()), default_metrics(), w);
}

std::string tikz(const std::string& src) { return render_tikz(layout_diagram(merged(src), default_metrics())); }

std::string xy(const std::string& src) { return render_xypic(expand_source(src).ir); }

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST(Svg, SquareStructure) {
  std::string s = svg("\\square[A`B`C`D;f`g`h`k]");
  EXPECT_EQ(s.rfind("<?xml", 0), 0u);
  EXPECT_EQ(count(s, "<text class=\"node\""), 4u);
  EXPECT_EQ(count(s, "<text class=\"label\""), 4u);
  EXPECT_EQ(count(s, "<g class=\"arrow\""), 4u);
  EXPECT_EQ(count(s, "<line "), 4u);
  EXPECT_EQ(count(s, "marker-end=\"url(#head)\""), 4u);
  EXPECT_EQ(count(s, "<marker id=\"head\""), 1u);
  EXPECT_NE(s.find("markerUnits=\"userSpaceOnUse\""), std::string::npos);
}

TEST(Svg, TwoArrowsAreFiftyApart) {
  std::string s = svg("\\two");
  std::regex line("<line x1=\"[^\"]*\" y1=\"([^\"]*)\"");
  std::vector<double> ys;
  for (auto it = std::sregex_iterator(s.begin(), s.end(), line); it != std::sregex_iterator(); ++it)
    ys.push_back(std::stod((*it)[1]));
  ASSERT_EQ(ys.size(), 2u);
  EXPECT_DOUBLE_EQ(std::abs(ys[0] - ys[1]), 5.0);  // 50 centi-em at 10 pt
}

TEST(Svg, BodiesAndMarkers) {
  std::string dashed = svg("\\morphism/-->/[A`B;f]");
  EXPECT_NE(dashed.find("stroke-dasharray=\"2 1\""), std::string::npos);
  std::string dotted = svg("\\morphism/.>/[A`B;f]");
  EXPECT_NE(dotted.find("stroke-linecap=\"round\""), std::string::npos);
  std::string eq = svg("\\morphism/=/[A`B;f]");
  EXPECT_EQ(count(eq, "<line "), 2u);
  EXPECT_EQ(count(eq, "marker-"), 0u);
  std::string two = svg("\\twoar(1,0)");
  EXPECT_EQ(count(two, "<line "), 3u);
  EXPECT_EQ(count(two, "class=\"tip\""), 1u);
  std::string hook = svg("\\morphism/>->/[A`B;f]");
  EXPECT_NE(hook.find("marker-start=\"url(#tail-hook)\""), std::string::npos);
  std::string epi = svg("\\morphism/->>/[A`B;f]");
  EXPECT_NE(epi.find("url(#head2)"), std::string::npos);
}

TEST(Svg, OnLineLabelSplitsLine) {
  std::string s = svg("\\morphism|m|<1000,0>[A`B;f]");
  EXPECT_EQ(count(s, "<line "), 2u);
  EXPECT_EQ(count(s, "marker-end"), 1u);
}

TEST(Svg, RawAndUnknownStylesWarn) {
  std::vector<Diagnostic> w;
  std::string s = svg("\\bfig \\morphism/@{-->}/[A`B;f] \\morphism(0,500)/~~>/[C`D;g] \\efig", &w);
  EXPECT_EQ(w.size(), 2u);
  EXPECT_EQ(count(s, "<line "), 2u);
}

TEST(Svg, EscapesText) {
  std::string s = svg("\\morphism[A<B`C&D;f]");
  EXPECT_NE(s.find("A&lt;B"), std::string::npos);
  EXPECT_NE(s.find("C&amp;D"), std::string::npos);
}

TEST(Svg, Deterministic) {
  const std::string src = "\\cube[A`B`C`D;a`b`c`d][E`F`G`H;e`f`g`h][p`q`r`s]";
  EXPECT_EQ(svg(src), svg(src));
}

TEST(Xypic, Morphism) {
  EXPECT_EQ(xy("\\morphism[A`B;f]"), "\\POS(0,0)*+!!<0ex,.75ex>{A}\\ar@{>}^-{f} (500,0)*+!!<0ex,.75ex>{B}\n");
  EXPECT_EQ(xy("\\morphism|b|[A`B;f]"), "\\POS(0,0)*+!!<0ex,.75ex>{A}\\ar@{>}_-{f} (500,0)*+!!<0ex,.75ex>{B}\n");
  EXPECT_EQ(xy("\\morphism|m|[A`B;f]"),
            "\\POS(0,0)*+!!<0ex,.75ex>{A}\\ar@{>}|-*+<1pt,4pt>{\\labelstyle f} (500,0)*+!!<0ex,.75ex>{B}\n");
  EXPECT_EQ(xy("\\morphism[A`B;]"), "\\POS(0,0)*+!!<0ex,.75ex>{A}\\ar@{>}^-{} (500,0)*+!!<0ex,.75ex>{B}\n");
}

TEST(Xypic, RawPassthrough) {
  EXPECT_EQ(xy("\\morphism/{@{>}@/^1em/}/[A`B;f]"),
            "\\POS(0,0)*+!!<0ex,.75ex>{A}\\ar@{>}@/^1em/^-{f} (500,0)*+!!<0ex,.75ex>{B}\n");
}

TEST(Xypic, VectorAndPlace) {
  EXPECT_EQ(xy("\\vector(10,20)/<-/<300,0>"), "\\POS(10,20)\\ar<- (310,20)\n");
  EXPECT_EQ(xy("\\place(250,250)[X]"), "\\POS(250,250)*+!!<0ex,.75ex>{X}\n");
}

TEST(Xypic, InlineArrows) {
  EXPECT_EQ(xy("\\to^{f}_{g}"), "\\xy\\ar@{>}^{f}_{g}(200,0)\\endxy\n");
  std::string two = xy("\\two^{f}_{g}");
  EXPECT_NE(two.find("@<2.5pt>"), std::string::npos);
  EXPECT_NE(two.find("@<-2.5pt>"), std::string::npos);
  EXPECT_NE(xy("\\three|b").find("|{b}"), std::string::npos);
  EXPECT_EQ(xy("\\twoar(1,1)"), "\\xy\\ar@{=>}(708,708)\\endxy\n");
}

TEST(Xypic, SquareOverprintsCorners) {
  std::string s = xy("\\square[A`B`C`D;f`g`h`k]");
  EXPECT_EQ(count(s, "\\POS"), 4u);
  EXPECT_EQ(count(s, "{A}"), 2u);
}

TEST(Tikz, Structure) {
  std::string t = tikz("\\square[A`B`C`D;f`g`h`k]");
  EXPECT_EQ(t.rfind("\\begin{tikzpicture}", 0), 0u);
  EXPECT_EQ(count(t, "\\node "), 4u);
  EXPECT_EQ(count(t, "\\draw"), 4u);
  EXPECT_NE(t.find("\\end{tikzpicture}"), std::string::npos);
  EXPECT_NE(tikz("\\morphism/-->/[A`B;f]").find("dashed,->"), std::string::npos);
  EXPECT_NE(tikz("\\twoar(1,0)").find("double,-implies"), std::string::npos);
  EXPECT_NE(tikz("\\morphism|b|[A`B;f]").find("swap"), std::string::npos);
}

TEST(Ir, RoundTripFixpoint) {
  for (const char* src : {"\\square[A`B`C`D;f`g`h`k]", "\\iiixii{15}<400>[a`b`c`d`e`f;1`2`3`4`5`6`7]",
                          "\\three|b", "\\twoar(1,1)", "\\morphism/{@{>}@/^1em/}/[{A\"q}`B;f]"}) {
    DiagramIR ir = merged(src);
    std::string once = emit_ir(ir);
    DiagramIR back = parse_ir(once);
    EXPECT_EQ(back, ir) << src;
    EXPECT_EQ(emit_ir(back), once) << src;
  }
}

TEST(Ir, MalformedInput) {
  EXPECT_THROW(parse_ir(""), std::runtime_error);
  EXPECT_THROW(parse_ir("{\"node\":0}"), std::runtime_error);
  std::string good = emit_ir(merged("\\morphism[A`B;f]"));
  EXPECT_THROW(parse_ir(good.substr(0, good.rfind('{'))), std::runtime_error);
}

TEST(Style, DecodeTable) {
  struct Case {
    const char* token;
    Tail tail;
    Body body;
    Head head;
  };
  const Case cases[] = {
      {">", Tail::None, Body::Solid, Head::Normal},
      {"->", Tail::None, Body::Solid, Head::Normal},
      {">->", Tail::Hook, Body::Solid, Head::Normal},
      {"->>", Tail::None, Body::Solid, Head::Double},
      {"<-", Tail::HeadAtTail, Body::Solid, Head::None},
      {"<-<", Tail::HeadAtTail, Body::Solid, Head::Hook},
      {"<<-", Tail::DoubleHeadAtTail, Body::Solid, Head::None},
      {"=", Tail::None, Body::Equals, Head::None},
      {"=>", Tail::None, Body::Double, Head::Normal},
      {"-->", Tail::None, Body::Dashed, Head::Normal},
      {".>", Tail::None, Body::Dotted, Head::Normal},
      {" - > ", Tail::None, Body::Solid, Head::Normal},
  };
  for (const auto& c : cases) {
    ArrowStyle s = decode_style(c.token);
    EXPECT_EQ(s.tail, c.tail) << c.token;
    EXPECT_EQ(s.body, c.body) << c.token;
    EXPECT_EQ(s.head, c.head) << c.token;
    EXPECT_TRUE(s.known) << c.token;
    EXPECT_FALSE(s.raw) << c.token;
  }
  EXPECT_FALSE(decode_style("~>").known);
  EXPECT_EQ(decode_style("@{=}").raw.value_or(""), "@{=}");
}

TEST(Style, FormatDecimal) {
  EXPECT_EQ(format_decimal(Ratio(5)), "5");
  EXPECT_EQ(format_decimal(Ratio(5, 2)), "2.5");
  EXPECT_EQ(format_decimal(Ratio(-1, 8)), "-0.125");
  EXPECT_EQ(format_decimal(Ratio(1, 3)), "0.333333");
  EXPECT_EQ(format_decimal(Ratio(0)), "0");
  EXPECT_EQ(format_decimal(Ratio(7, 100)), "0.07");
}

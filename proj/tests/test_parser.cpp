#include <gtest/gtest.h>

#include "diagc/parser.hpp"
#include "fixtures.hpp"

using namespace diagc;

TEST(ParseCommand, SquareDefaults) {
  Command c = parse_command("\\square[A`B`C`D;f`g`h`k]");
  EXPECT_EQ(c.kind, CommandKind::Square);
  EXPECT_EQ(c.main.origin, (Point{0, 0}));
  EXPECT_EQ(c.main.placements, "alrb");
  EXPECT_EQ(c.main.styles, (std::vector<std::string>{">", ">", ">", ">"}));
  EXPECT_EQ(c.main.extent, (std::vector<Length>{500, 500}));
  EXPECT_EQ(c.main.nodes, (std::vector<std::string>{"A", "B", "C", "D"}));
  EXPECT_EQ(c.main.labels, (std::vector<std::string>{"f", "g", "h", "k"}));
}

TEST(ParseCommand, RawStyleStaysAtomic) {
  Command c = parse_command("\\morphism(0,0)|a|/{@{>}@/^1em/}/<500,0>[A`B;f]");
  EXPECT_EQ(c.kind, CommandKind::Morphism);
  ASSERT_EQ(c.main.styles.size(), 1u);
  EXPECT_EQ(c.main.styles[0], "@{>}@/^1em/");
}

TEST(ParseCommand, MorphismDefaults) {
  Command c = parse_command("\\morphism[A`B;f]");
  EXPECT_EQ(c.main.placements, "a");
  EXPECT_EQ(c.main.styles, std::vector<std::string>{">"});
  EXPECT_EQ(c.main.extent, (std::vector<Length>{500, 0}));
}

TEST(ParseCommand, TriangleDefaultPlacements) {
  const std::pair<const char*, const char*> cases[] = {
      {"\\ptriangle[A`B`C;f`g`h]", "alr"}, {"\\qtriangle[A`B`C;f`g`h]", "alr"}, {"\\dtriangle[A`B`C;f`g`h]", "lrb"},
      {"\\btriangle[A`B`C;f`g`h]", "lrb"}, {"\\Atriangle[A`B`C;f`g`h]", "lrb"}, {"\\Vtriangle[A`B`C;f`g`h]", "alb"},
      {"\\Ctriangle[A`B`C;f`g`h]", "arb"}, {"\\Dtriangle[A`B`C;f`g`h]", "alb"},
  };
  for (auto [src, p] : cases) EXPECT_EQ(parse_command(src).main.placements, p) << src;
  EXPECT_EQ(parse_command("\\Atrianglepair[A`B`C`D;a`b`c`d`e]").main.placements, "lmrbb");
  EXPECT_EQ(parse_command("\\Vtrianglepair[A`B`C`D;a`b`c`d`e]").main.placements, "aalmr");
  EXPECT_EQ(parse_command("\\Ctrianglepair[A`B`C`D;a`b`c`d`e]").main.placements, "lrmlr");
  EXPECT_EQ(parse_command("\\pullback[A`B`C`D;a`b`c`d][E;e`f`g]").extra.at(0).placements, "amb");
}

TEST(ParseCommand, GridMaskForms) {
  Command bare = parse_command("\\iiixiii[a`b`c`d`e`f`g`h`i;1`2`3`4`5`6`7`8`9`10`11`12]");
  EXPECT_EQ(bare.main.mask.value_or(-1), 0);
  EXPECT_EQ(bare.main.stub, (std::vector<Length>{0, 0}));
  Command masked = parse_command("\\iiixiii{5}[a`b`c`d`e`f`g`h`i;1`2`3`4`5`6`7`8`9`10`11`12]");
  EXPECT_EQ(masked.main.mask.value_or(-1), 5);
  EXPECT_EQ(masked.main.stub, (std::vector<Length>{400, 400}));
  Command small = parse_command("\\iiixii{15}<300>[a`b`c`d`e`f;1`2`3`4`5`6`7]");
  EXPECT_EQ(small.main.mask.value_or(-1), 15);
  EXPECT_EQ(small.main.stub, std::vector<Length>{300});
}

TEST(ParsePayload, Examples) {
  auto p = parse_payload("[A`B;f]");
  EXPECT_EQ(p.nodes, (std::vector<std::string>{"A", "B"}));
  EXPECT_EQ(p.labels, std::vector<std::string>{"f"});
  p = parse_payload("[A`B;{f`g}]");
  EXPECT_EQ(p.labels, std::vector<std::string>{"f`g"});
  p = parse_payload("[``;]");
  EXPECT_EQ(p.nodes, (std::vector<std::string>{"", "", ""}));
  EXPECT_EQ(p.labels, std::vector<std::string>{""});
}

TEST(ParsePayload, TwoFieldsEmpty) {
  auto p = parse_payload("[`;]");
  EXPECT_EQ(p.nodes, (std::vector<std::string>{"", ""}));
  EXPECT_EQ(p.labels, std::vector<std::string>{""});
}

TEST(ParsePayload, UnbalancedBraces) { EXPECT_THROW(parse_payload("[A`{B;f]"), ParseError); }

TEST(ParseInline, Examples) {
  Command t = parse_inline_arrow("\\to^{f}_{g}");
  EXPECT_EQ(t.kind, CommandKind::InlineTo);
  EXPECT_EQ(t.main.styles, std::vector<std::string>{">"});
  EXPECT_EQ(t.length, 0);
  EXPECT_EQ(t.main.labels, (std::vector<std::string>{"f", "g"}));

  Command two = parse_inline_arrow("\\two/->`->/ ");
  EXPECT_EQ(two.main.styles, (std::vector<std::string>{"->", "->"}));

  Command three = parse_inline_arrow("\\three<600>^a|b_c");
  EXPECT_EQ(three.length, 600);
  EXPECT_EQ(three.main.labels, (std::vector<std::string>{"a", "b", "c"}));

  Command bare = parse_command("\\to");
  EXPECT_EQ(bare.main.labels, (std::vector<std::string>{"", ""}));
}

TEST(ParseErrors, LocatedDiagnostics) {
  try {
    parse_source("\\bfig\n  \\squre[A`B`C`D;f`g`h`k]\n\\efig");
    FAIL() << "expected an error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.location().line, 2);
    EXPECT_EQ(e.location().column, 3);
  }
  EXPECT_THROW(parse_source("\\square(0,0[A`B`C`D;f`g`h`k]"), ParseError);
  EXPECT_THROW(parse_source("\\square[A`B`C`D;f`g`h`k"), ParseError);
  EXPECT_THROW(parse_source("\\bfig \\square[A`B`C`D;f`g`h`k]"), ParseError);
  EXPECT_THROW(parse_source("\\efig"), ParseError);
}

TEST(ParseErrors, ArityMismatchMessage) {
  try {
    parse_command("\\square[A`B`C;f`g`h`k]");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("arity"), std::string::npos) << e.what();
  }
}

TEST(ParseSource, BlocksAndImplicitDiagram) {
  auto ds = parse_source("% comment\n\\to\n\\bfig\\square[A`B`C`D;f`g`h`k]\\efig\n\\to");
  ASSERT_EQ(ds.size(), 2u);
  EXPECT_TRUE(ds[0].implicit);
  EXPECT_EQ(ds[0].commands.size(), 2u);
  EXPECT_FALSE(ds[1].implicit);
  EXPECT_EQ(ds[1].commands.size(), 1u);
}

TEST(ParseSource, CommentsAndEscapedPercent) {
  auto ds = parse_source("\\morphism[A`B;50\\%] % trailing\n");
  EXPECT_EQ(ds.at(0).commands.at(0).main.labels.at(0), "50\\%");
}

// Adding or removing a top-level backtick in any fixture breaks its arity.
TEST(Properties, ArityEnforcedUnderMutation) {
  for (const auto& s : fixtures::table()) {
    const std::string& src = s.source;
    std::size_t open = src.find('[');
    if (open == std::string::npos || s.name == "place") continue;
    for (std::size_t i = open; i < src.size(); ++i) {
      if (src[i] == '`') {
        std::string removed = src.substr(0, i) + src.substr(i + 1);
        EXPECT_THROW(parse_command(removed), ParseError) << removed;
      }
    }
    std::size_t close = src.find(']', open);
    std::string added = src.substr(0, close) + "`x" + src.substr(close);
    EXPECT_THROW(parse_command(added), ParseError) << added;
  }
}

TEST(Properties, WhitespaceBetweenSectionsIsIgnored) {
  Command a = parse_command("\\square(10,20)|alrb|/>`>`>`>/<300,400>[A`B`C`D;f`g`h`k]");
  Command b = parse_command("\\square  (10,20)\n |alrb|   />`>`>`>/ \t<300,400>  [A`B`C`D;f`g`h`k]");
  EXPECT_EQ(a, b);
}

TEST(Properties, PrettyPrintRoundTripsFixtures) {
  for (const auto& s : fixtures::table()) {
    Command c = parse_command(s.source);
    std::string printed = pretty_print(c);
    Command again = parse_command(printed);
    EXPECT_EQ(c, again) << s.name << ": " << printed;
    EXPECT_EQ(pretty_print(again), printed);
  }
}

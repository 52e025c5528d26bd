#pragma once
// Hand-traced coordinates for every shape at default arguments, replayed from the
// macro register arithmetic one line at a time. Arrows are listed in drawing order.
// A node text of "~" marks a free endpoint.

#include <string>
#include <vector>

namespace fixtures {

struct TracedNode {
  std::string text;
  long x, y;
};

struct TracedArrow {
  std::string from;
  long fx, fy;
  std::string to;
  long tx, ty;
  std::string label;  // empty when the arrow carries no label
  std::string side;   // above below online none
};

struct TracedShape {
  std::string name;
  std::string source;
  std::vector<TracedNode> nodes;  // distinct nodes, any order
  std::vector<TracedArrow> arrows;
};

inline const std::vector<TracedShape>& table() {
  static const std::vector<TracedShape> t = {
      {"morphism",
       "\\morphism[A`B;f]",
       {{"A", 0, 0}, {"B", 500, 0}},
       {{"A", 0, 0, "B", 500, 0, "f", "above"}}},
      {"vector", "\\vector", {}, {{"~", 0, 0, "~", 500, 0, "", "none"}}},
      {"place", "\\place(250,250)[X]", {{"X", 250, 250}}, {}},
      {"square",
       "\\square[A`B`C`D;f`g`h`k]",
       {{"A", 0, 500}, {"B", 500, 500}, {"C", 0, 0}, {"D", 500, 0}},
       {{"C", 0, 0, "D", 500, 0, "k", "below"},
        {"A", 0, 500, "C", 0, 0, "g", "below"},
        {"A", 0, 500, "B", 500, 500, "f", "above"},
        {"B", 500, 500, "D", 500, 0, "h", "above"}}},
      {"Square",
       "\\Square[A`B`C`D;f`g`h`k]",
       {{"A", 0, 500}, {"B", 500, 500}, {"C", 0, 0}, {"D", 500, 0}},
       {{"C", 0, 0, "D", 500, 0, "k", "below"},
        {"A", 0, 500, "C", 0, 0, "g", "below"},
        {"A", 0, 500, "B", 500, 500, "f", "above"},
        {"B", 500, 500, "D", 500, 0, "h", "above"}}},
      {"ptriangle",
       "\\ptriangle[A`B`C;f`g`h]",
       {{"A", 0, 500}, {"B", 500, 500}, {"C", 0, 0}},
       {{"A", 0, 500, "B", 500, 500, "f", "above"},
        {"A", 0, 500, "C", 0, 0, "g", "below"},
        {"B", 500, 500, "C", 0, 0, "h", "above"}}},
      {"qtriangle",
       "\\qtriangle[A`B`C;f`g`h]",
       {{"A", 0, 500}, {"B", 500, 500}, {"C", 500, 0}},
       {{"A", 0, 500, "B", 500, 500, "f", "above"},
        {"A", 0, 500, "C", 500, 0, "g", "below"},
        {"B", 500, 500, "C", 500, 0, "h", "above"}}},
      {"dtriangle",
       "\\dtriangle[A`B`C;f`g`h]",
       {{"A", 500, 500}, {"B", 0, 0}, {"C", 500, 0}},
       {{"B", 0, 0, "C", 500, 0, "h", "below"},
        {"A", 500, 500, "B", 0, 0, "f", "below"},
        {"A", 500, 500, "C", 500, 0, "g", "above"}}},
      {"btriangle",
       "\\btriangle[A`B`C;f`g`h]",
       {{"A", 0, 500}, {"B", 0, 0}, {"C", 500, 0}},
       {{"B", 0, 0, "C", 500, 0, "h", "below"},
        {"A", 0, 500, "B", 0, 0, "f", "below"},
        {"A", 0, 500, "C", 500, 0, "g", "above"}}},
      {"Atriangle",
       "\\Atriangle[A`B`C;f`g`h]",
       {{"A", 500, 500}, {"B", 0, 0}, {"C", 1000, 0}},
       {{"B", 0, 0, "C", 1000, 0, "h", "below"},
        {"A", 500, 500, "B", 0, 0, "f", "below"},
        {"A", 500, 500, "C", 1000, 0, "g", "above"}}},
      {"Vtriangle",
       "\\Vtriangle[A`B`C;f`g`h]",
       {{"A", 0, 500}, {"B", 1000, 500}, {"C", 500, 0}},
       {{"A", 0, 500, "C", 500, 0, "g", "below"},
        {"A", 0, 500, "B", 1000, 500, "f", "above"},
        {"B", 1000, 500, "C", 500, 0, "h", "above"}}},
      {"Ctriangle",
       "\\Ctriangle[A`B`C;f`g`h]",
       {{"A", 500, 1000}, {"B", 0, 500}, {"C", 500, 0}},
       {{"B", 0, 500, "C", 500, 0, "h", "below"},
        {"A", 500, 1000, "B", 0, 500, "f", "below"},
        {"A", 500, 1000, "C", 500, 0, "g", "above"}}},
      {"Dtriangle",
       "\\Dtriangle[A`B`C;f`g`h]",
       {{"A", 0, 1000}, {"B", 500, 500}, {"C", 0, 0}},
       {{"B", 500, 500, "C", 0, 0, "h", "above"},
        {"A", 0, 1000, "B", 500, 500, "g", "below"},
        {"A", 0, 1000, "C", 0, 0, "f", "below"}}},
      {"Atrianglepair",
       "\\Atrianglepair[A`B`C`D;a`b`c`d`e]",
       {{"A", 500, 500}, {"B", 0, 0}, {"C", 500, 0}, {"D", 1000, 0}},
       {{"B", 0, 0, "C", 500, 0, "d", "below"},
        {"C", 500, 0, "D", 1000, 0, "e", "below"},
        {"A", 500, 500, "B", 0, 0, "a", "below"},
        {"A", 500, 500, "C", 500, 0, "b", "online"},
        {"A", 500, 500, "D", 1000, 0, "c", "above"}}},
      {"Vtrianglepair",
       "\\Vtrianglepair[A`B`C`D;a`b`c`d`e]",
       {{"A", 0, 500}, {"B", 500, 500}, {"C", 1000, 500}, {"D", 500, 0}},
       {{"A", 0, 500, "B", 500, 500, "a", "above"},
        {"A", 0, 500, "D", 500, 0, "c", "below"},
        {"B", 500, 500, "C", 1000, 500, "b", "above"},
        {"B", 500, 500, "D", 500, 0, "d", "online"},
        {"C", 1000, 500, "D", 500, 0, "e", "above"}}},
      {"Ctrianglepair",
       "\\Ctrianglepair[A`B`C`D;a`b`c`d`e]",
       {{"A", 0, 1000}, {"B", -500, 500}, {"C", 0, 500}, {"D", 0, 0}},
       {{"C", 0, 500, "D", 0, 0, "e", "above"},
        {"B", -500, 500, "C", 0, 500, "c", "online"},
        {"B", -500, 500, "D", 0, 0, "d", "below"},
        {"A", 0, 1000, "B", -500, 500, "a", "below"},
        {"A", 0, 1000, "C", 0, 500, "b", "above"}}},
      {"Dtrianglepair",
       "\\Dtrianglepair[A`B`C`D;a`b`c`d`e]",
       {{"A", 0, 1000}, {"B", 0, 500}, {"C", 500, 500}, {"D", 0, 0}},
       {{"B", 0, 500, "C", 500, 500, "c", "online"},
        {"B", 0, 500, "D", 0, 0, "d", "below"},
        {"A", 0, 1000, "B", 0, 500, "a", "below"},
        {"A", 0, 1000, "C", 500, 500, "b", "above"},
        {"C", 500, 500, "D", 0, 0, "e", "above"}}},
      {"hSquares",
       "\\hSquares[A`B`C`D`E`F;a`b`c`d`e`f`g]",
       {{"A", 0, 500}, {"B", 500, 500}, {"C", 1000, 500}, {"D", 0, 0}, {"E", 500, 0}, {"F", 1000, 0}},
       {{"D", 0, 0, "E", 500, 0, "f", "below"},
        {"A", 0, 500, "D", 0, 0, "c", "below"},
        {"A", 0, 500, "B", 500, 500, "a", "above"},
        {"B", 500, 500, "E", 500, 0, "d", "online"},
        {"E", 500, 0, "F", 1000, 0, "g", "below"},
        {"B", 500, 500, "C", 1000, 500, "b", "above"},
        {"C", 1000, 500, "F", 1000, 0, "e", "above"}}},
      {"vSquares",
       "\\vSquares[A`B`C`D`E`F;a`b`c`d`e`f`g]",
       {{"A", 0, 1000}, {"B", 500, 1000}, {"C", 0, 500}, {"D", 500, 500}, {"E", 0, 0}, {"F", 500, 0}},
       {{"E", 0, 0, "F", 500, 0, "g", "below"},
        {"C", 0, 500, "E", 0, 0, "e", "below"},
        {"D", 500, 500, "F", 500, 0, "f", "above"},
        {"C", 0, 500, "D", 500, 500, "d", "online"},
        {"A", 0, 1000, "C", 0, 500, "b", "below"},
        {"A", 0, 1000, "B", 500, 1000, "a", "above"},
        {"B", 500, 1000, "D", 500, 500, "c", "above"}}},
      {"cube",
       "\\cube[A`B`C`D;a`b`c`d][E`F`G`H;e`f`g`h][p`q`r`s]",
       {{"A", 0, 1500},
        {"B", 1500, 1500},
        {"C", 0, 0},
        {"D", 1500, 0},
        {"E", 500, 1000},
        {"F", 1000, 1000},
        {"G", 500, 500},
        {"H", 1000, 500}},
       {{"C", 0, 0, "D", 1500, 0, "d", "below"},
        {"A", 0, 1500, "C", 0, 0, "b", "below"},
        {"A", 0, 1500, "B", 1500, 1500, "a", "above"},
        {"B", 1500, 1500, "D", 1500, 0, "c", "above"},
        {"G", 500, 500, "H", 1000, 500, "h", "below"},
        {"E", 500, 1000, "G", 500, 500, "f", "below"},
        {"E", 500, 1000, "F", 1000, 1000, "e", "above"},
        {"F", 1000, 1000, "H", 1000, 500, "g", "above"},
        {"B", 1500, 1500, "F", 1000, 1000, "q", "online"},
        {"A", 0, 1500, "E", 500, 1000, "p", "online"},
        {"C", 0, 0, "G", 500, 500, "r", "online"},
        {"D", 1500, 0, "H", 1000, 500, "s", "online"}}},
      {"pullback",
       "\\pullback[A`B`C`D;a`b`c`d][E;e`f`g]",
       {{"A", 0, 500}, {"B", 500, 500}, {"C", 0, 0}, {"D", 500, 0}, {"E", -500, 1000}},
       {{"C", 0, 0, "D", 500, 0, "d", "below"},
        {"A", 0, 500, "C", 0, 0, "b", "below"},
        {"A", 0, 500, "B", 500, 500, "a", "above"},
        {"B", 500, 500, "D", 500, 0, "c", "above"},
        {"E", -500, 1000, "B", 500, 500, "e", "above"},
        {"E", -500, 1000, "A", 0, 500, "f", "online"},
        {"E", -500, 1000, "C", 0, 0, "g", "below"}}},
      {"iiixiii",
       "\\iiixiii[a`b`c`d`e`f`g`h`i;1`2`3`4`5`6`7`8`9`10`11`12]",
       {{"a", 0, 1000},
        {"b", 500, 1000},
        {"c", 1000, 1000},
        {"d", 0, 500},
        {"e", 500, 500},
        {"f", 1000, 500},
        {"g", 0, 0},
        {"h", 500, 0},
        {"i", 1000, 0}},
       {{"g", 0, 0, "h", 500, 0, "5", "below"},
        {"h", 500, 0, "i", 1000, 0, "6", "below"},
        {"e", 500, 500, "f", 1000, 500, "4", "online"},
        {"d", 0, 500, "e", 500, 500, "3", "online"},
        {"a", 0, 1000, "b", 500, 1000, "1", "above"},
        {"b", 500, 1000, "c", 1000, 1000, "2", "above"},
        {"c", 1000, 1000, "f", 1000, 500, "9", "above"},
        {"b", 500, 1000, "e", 500, 500, "8", "online"},
        {"a", 0, 1000, "d", 0, 500, "7", "below"},
        {"d", 0, 500, "g", 0, 0, "10", "below"},
        {"e", 500, 500, "h", 500, 0, "11", "online"},
        {"f", 1000, 500, "i", 1000, 0, "12", "above"}}},
      {"iiixii",
       "\\iiixii[a`b`c`d`e`f;1`2`3`4`5`6`7]",
       {{"a", 0, 500}, {"b", 500, 500}, {"c", 1000, 500}, {"d", 0, 0}, {"e", 500, 0}, {"f", 1000, 0}},
       {{"d", 0, 0, "e", 500, 0, "3", "below"},
        {"e", 500, 0, "f", 1000, 0, "4", "below"},
        {"a", 0, 500, "b", 500, 500, "1", "above"},
        {"a", 0, 500, "d", 0, 0, "5", "below"},
        {"b", 500, 500, "c", 1000, 500, "2", "above"},
        {"b", 500, 500, "e", 500, 0, "6", "online"},
        {"c", 1000, 500, "f", 1000, 0, "7", "above"}}},
      {"to", "\\to", {}, {{"~", 0, 0, "~", 200, 0, "", "above"}}},
      {"two", "\\two", {}, {{"~", 0, 0, "~", 200, 0, "", "above"}, {"~", 0, 0, "~", 200, 0, "", "below"}}},
      {"three",
       "\\three",
       {},
       {{"~", 0, 0, "~", 300, 0, "", "none"},
        {"~", 0, 0, "~", 300, 0, "", "above"},
        {"~", 0, 0, "~", 300, 0, "", "below"}}},
      {"twoar", "\\twoar(1,0)", {}, {{"~", 0, 0, "~", 1000, 0, "", "none"}}},
  };
  return t;
}

}  // namespace fixtures

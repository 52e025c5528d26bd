#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "diagc/expander.hpp"
#include "diagc/parser.hpp"

namespace testing_support {

inline const diagc::FontMetrics& default_metrics() {
  static const diagc::FontMetrics m = diagc::FontMetrics::default_table();
  return m;
}

inline diagc::Expansion expand_source(const std::string& src) {
  auto diagrams = diagc::parse_source(src);
  diagc::ExpandContext ctx{&default_metrics()};
  return diagc::expand_diagram(diagrams.at(0), ctx);
}

inline diagc::DiagramIR merged(const std::string& src) {
  return diagc::merge_duplicate_nodes(expand_source(src).ir);
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace testing_support

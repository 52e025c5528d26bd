#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diagc/core.hpp"
#include "diagc/metrics.hpp"

namespace diagc {

enum class Format { Svg, Tikz, Xypic, Ir };

std::string_view extension(Format f);

struct CliConfig {
  std::vector<std::filesystem::path> inputs;
  std::optional<std::filesystem::path> output;
  Format format = Format::Svg;
  Ratio scale{1};
  Ratio em_size{10};
  std::optional<std::filesystem::path> metrics;
  bool strict = false;
  std::optional<std::filesystem::path> check_dir;
};

struct CompiledDiagram {
  SourceLocation loc;
  std::string text;
};

struct CompileResult {
  std::vector<CompiledDiagram> diagrams;
  std::vector<Diagnostic> diagnostics;  // warnings, then at most one error
  bool failed = false;                  // an error stopped compilation
};

/// Compiles one source text to the requested format, one output per diagram.
CompileResult compile_text(std::string_view source, Format format, const ScaleConfig& cfg, const FontMetrics& m);

/// "ex" -> "ex.svg", or "ex-2.svg" when the file holds several diagrams.
std::string output_name(const std::string& stem, std::size_t index, std::size_t count, Format format);

/// Writes through a temporary file in the same directory, then renames.
void write_atomically(const std::filesystem::path& path, std::string_view contents);

/// Exit status: 0 ok, 1 strict-mode diagnostics or golden mismatch, 2 errors.
int run(const CliConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv and runs.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace diagc

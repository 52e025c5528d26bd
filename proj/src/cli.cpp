#include "diagc/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

#include "CLI11.hpp"
#include "diagc/expander.hpp"
#include "diagc/layout.hpp"
#include "diagc/parser.hpp"
#include "diagc/render.hpp"

namespace diagc {

namespace fs = std::filesystem;

std::string_view extension(Format f) {
  switch (f) {
    case Format::Svg: return "svg";
    case Format::Tikz: return "tex";
    case Format::Xypic: return "xy";
    case Format::Ir: return "ir";
  }
  return "out";
}

std::string output_name(const std::string& stem, std::size_t index, std::size_t count, Format format) {
  std::string name = stem;
  if (count > 1) name += "-" + std::to_string(index + 1);
  return name + "." + std::string(extension(format));
}

CompileResult compile_text(std::string_view source, Format format, const ScaleConfig& cfg, const FontMetrics& m) {
  CompileResult res;
  auto fail = [&](const Error& e) {
    res.diagnostics.push_back({Severity::Error, e.location(), e.what()});
    res.failed = true;
  };
  std::vector<DiagramSource> diagrams;
  try {
    diagrams = parse_source(source);
  } catch (const Error& e) {
    fail(e);
    return res;
  }

  ExpandContext ctx{&m, cfg.label_scale};
  for (const DiagramSource& d : diagrams) {
    try {
      Expansion exp = expand_diagram(d, ctx, cfg);
      res.diagnostics.insert(res.diagnostics.end(), exp.warnings.begin(), exp.warnings.end());
      std::vector<Diagnostic> later;
      std::string text;
      if (format == Format::Xypic) {
        text = render_xypic(exp.ir);
      } else {
        DiagramIR merged = merge_duplicate_nodes(exp.ir, &later);
        if (format == Format::Ir) {
          text = emit_ir(merged);
        } else {
          Layout lay = layout_diagram(merged, m);
          text = format == Format::Svg ? render_svg(lay, m, &later) : render_tikz(lay, &later);
        }
      }
      for (auto& w : later) {
        if (w.loc == SourceLocation{}) w.loc = d.loc;
        res.diagnostics.push_back(std::move(w));
      }
      res.diagrams.push_back({d.loc, std::move(text)});
    } catch (const Error& e) {
      Error located(e.what(), e.location() == SourceLocation{} ? d.loc : e.location());
      fail(located);
      return res;
    }
  }
  return res;
}

void write_atomically(const fs::path& path, std::string_view contents) {
  fs::path tmp = path;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f << contents;
    f.close();
    if (!f) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw std::runtime_error("cannot write " + path.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("cannot write " + path.string() + ": " + ec.message());
  }
}

namespace {

struct InputJob {
  std::string source;
  bool readable = false;
  CompileResult result;
};

std::optional<std::string> read_file(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  if (!f) return std::nullopt;
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

int run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  ScaleConfig scale;
  scale.scale = cfg.scale;
  scale.em_size = cfg.em_size;
  try {
    scale.validate();
  } catch (const std::exception& e) {
    err << "diagc: " << e.what() << '\n';
    return 2;
  }

  FontMetrics metrics = FontMetrics::default_table();
  if (cfg.metrics) {
    try {
      metrics = load_metrics(*cfg.metrics);
    } catch (const Error& e) {
      err << cfg.metrics->string() << ": error: " << e.what() << '\n';
      return 2;
    }
  }

  std::vector<InputJob> jobs(cfg.inputs.size());
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (auto text = read_file(cfg.inputs[i])) {
      jobs[i].source = std::move(*text);
      jobs[i].readable = true;
    }
  }

  const auto n = static_cast<std::ptrdiff_t>(jobs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    if (jobs[i].readable) jobs[i].result = compile_text(jobs[i].source, cfg.format, scale, metrics);
  }

  // output directory vs single file
  bool to_dir = false;
  if (cfg.output) {
    std::string o = cfg.output->string();
    to_dir = fs::is_directory(*cfg.output) || (!o.empty() && o.back() == '/');
    std::size_t total = 0;
    for (const auto& j : jobs) total += j.result.diagrams.size();
    if (!to_dir && (cfg.inputs.size() > 1 || total > 1)) to_dir = true;
    if (to_dir) {
      std::error_code ec;
      fs::create_directories(*cfg.output, ec);
      if (ec) {
        err << "diagc: cannot create " << o << ": " << ec.message() << '\n';
        return 2;
      }
    }
  }

  int status = 0;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const fs::path& input = cfg.inputs[i];
    const std::string file = input.string();
    if (!jobs[i].readable) {
      err << file << ": error: cannot read input\n";
      status = 2;
      continue;
    }
    const CompileResult& r = jobs[i].result;
    bool warned = false;
    for (const auto& d : r.diagnostics) {
      err << format_diagnostic(file, d) << '\n';
      warned = warned || d.severity == Severity::Warning;
    }
    if (r.failed) {
      status = 2;
      continue;
    }
    if (cfg.strict && warned) {
      status = std::max(status, 1);
      continue;
    }

    const std::string stem = input.stem().string();
    for (std::size_t k = 0; k < r.diagrams.size(); ++k) {
      const std::string name = output_name(stem, k, r.diagrams.size(), cfg.format);
      const std::string& text = r.diagrams[k].text;
      if (cfg.check_dir) {
        auto golden = read_file(*cfg.check_dir / name);
        if (!golden) {
          err << file << ": golden " << (*cfg.check_dir / name).string() << " is missing\n";
          status = std::max(status, 1);
        } else if (*golden != text) {
          err << file << ": output differs from golden " << (*cfg.check_dir / name).string() << '\n';
          status = std::max(status, 1);
        }
        continue;
      }
      if (!cfg.output) {
        out << text;
        continue;
      }
      fs::path target = to_dir ? *cfg.output / name : *cfg.output;
      try {
        write_atomically(target, text);
      } catch (const std::exception& e) {
        err << "diagc: " << e.what() << '\n';
        status = 2;
      }
    }
  }
  return status;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"diagc - compile commutative-diagram commands to SVG, TikZ or Xy-pic tokens"};
  CliConfig cfg;
  std::string format = "svg", scale = "1", em = "10", metrics, output, check;

  app.add_option("inputs", cfg.inputs, "Input files")->required();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"svg", "tikz", "xypic", "ir"}));
  app.add_option("-o,--output", output, "Output file or directory (default: standard output)");
  app.add_option("--scale", scale, "Scale factor, e.g. 2 or 0.5 or 3/2");
  app.add_option("--em", em, "Points per em");
  app.add_option("--metrics", metrics, "Glyph width table (default: $DIAGC_METRICS)");
  app.add_flag("--strict", cfg.strict, "Treat warnings as errors");
  app.add_option("--check", check, "Compare outputs with the files in a golden directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  cfg.format = format == "tikz" ? Format::Tikz : format == "xypic" ? Format::Xypic : format == "ir" ? Format::Ir
                                                                                                      : Format::Svg;
  try {
    cfg.scale = Ratio::parse(scale);
    cfg.em_size = Ratio::parse(em);
  } catch (const std::exception& e) {
    err << "diagc: bad number: " << e.what() << '\n';
    return 2;
  }
  if (!output.empty()) cfg.output = output;
  if (!check.empty()) cfg.check_dir = check;
  if (!metrics.empty()) {
    cfg.metrics = metrics;
  } else if (const char* env = std::getenv("DIAGC_METRICS"); env && *env) {
    cfg.metrics = env;
  }
  return run(cfg, out, err);
}

}  // namespace diagc

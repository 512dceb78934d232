// Command-line front end: construct, verify, sweep, render.

#include "richardson/error.hpp"
#include "richardson/io.hpp"
#include "richardson/richardson.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

using namespace richardson;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kBadInput = 2;
constexpr int kNotInNilradical = 3;

struct Config {
  std::string algebra;
  std::string blocks;
  std::string format;
  std::string family;
  std::string input;
  int n_max = 0;
  int budget = 3;
  std::uint64_t seed = 0;
  int samples = 100;
};

io::Json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return io::Json::parse(text);
  } catch (const io::Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

ParabolicSpec read_spec(const Config& cfg) {
  return validate_spec(AlgebraKind::parse(cfg.algebra), io::parse_int_list(cfg.blocks));
}

bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::SumMismatch:
    case ErrorCode::NotPalindromic:
    case ErrorCode::NonPositiveBlock:
    case ErrorCode::InvalidSize:
    case ErrorCode::ShapeMismatch:
    case ErrorCode::ColumnMismatch:
      return true;
    default:
      return false;
  }
}

int cmd_construct(const Config& cfg) {
  ParabolicSpec spec = read_spec(cfg);
  Report report = richardson_element(spec, {cfg.budget});
  std::optional<long long> probe;
  if (cfg.samples > 0 && report.dim_nilradical > 0)
    probe = random_centralizer_minimum(spec, cfg.samples, cfg.seed);
  bool probe_ok = !probe || report.dim_centralizer_direct <= *probe;

  if (cfg.format == "json") {
    io::Json out = io::to_json(report);
    if (probe)
      out["minimality_probe"] = {{"samples", cfg.samples},
                                 {"seed", cfg.seed},
                                 {"min_random_centralizer", *probe},
                                 {"holds", probe_ok}};
    std::cout << io::dump(out);
  } else if (cfg.format == "dot") {
    std::cout << io::to_dot(report.diagram, !spec.kind().is_special_linear());
  } else if (cfg.format == "csv") {
    std::cout << io::csv_header() << io::csv_row(report);
  } else {
    std::cout << io::to_text(report);
    if (probe)
      std::cout << "minimality probe (" << cfg.samples << " samples, seed " << cfg.seed
                << "): smallest random centralizer " << *probe << (probe_ok ? ", holds" : ", FAILS")
                << "\n";
  }
  return report.is_richardson ? kOk : kNegative;
}

int cmd_verify(const Config& cfg) {
  ParabolicSpec spec = read_spec(cfg);
  ExactMatrix m = io::matrix_from_json(read_json(cfg.input));
  if (m.rows() != spec.size() || m.cols() != spec.size())
    throw Error(ErrorCode::ShapeMismatch, "matrix does not match " + spec.kind().name());
  if (!in_nilradical(spec, m)) {
    std::cerr << "error: matrix is not in the nilradical of " << spec.key() << "\n";
    return kNotInNilradical;
  }
  bool richardson = is_richardson(m, spec);
  long long direct = centralizer_dimension_direct(m, spec.kind());
  if (cfg.format == "json") {
    std::cout << io::dump({{"is_richardson", richardson},
                           {"dim_centralizer", direct},
                           {"dim_levi", levi_dimension(spec)},
                           {"partition", io::to_json(jordan_partition(m))}});
  } else {
    std::cout << (richardson ? "true" : "false") << ", dim g^X = " << direct
              << ", dim m = " << levi_dimension(spec) << "\n";
  }
  return richardson ? kOk : kNegative;
}

int cmd_sweep(const Config& cfg) {
  if (cfg.family != "sl" && cfg.family != "sp" && cfg.family != "so")
    throw Error(ErrorCode::ParseError, "family must be sl, sp or so");
  std::vector<Report> reports = sweep(cfg.family, cfg.n_max, cfg.budget);
  if (cfg.format == "json")
    std::cout << io::dump(io::to_json(reports));
  else
    std::cout << io::to_csv(reports);
  return kOk;
}

int cmd_render(const Config& cfg) {
  LineDiagram d = io::diagram_from_json(read_json(cfg.input));
  bool mirror = false;
  if (!cfg.algebra.empty()) {
    AlgebraKind kind = AlgebraKind::parse(cfg.algebra);
    if (kind.size() != d.vertex_count())
      throw Error(ErrorCode::ParseError, "diagram size does not match " + kind.name());
    mirror = !kind.is_special_linear();
  }
  std::cout << (cfg.format == "dot" ? io::to_dot(d, mirror) : io::to_ascii(d, mirror));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Richardson elements of parabolic subalgebras via line diagrams"};
  app.require_subcommand(1);
  Config cfg;

  auto* construct = app.add_subcommand("construct", "build and check a Richardson element");
  construct->add_option("--algebra", cfg.algebra, "sl9, sp6, so8, ...")->required();
  construct->add_option("--blocks", cfg.blocks, "comma separated block sizes")->required();
  construct->add_option("--format", cfg.format, "ascii, json, dot or csv")
      ->default_val("ascii")
      ->check(CLI::IsMember({"ascii", "json", "dot", "csv"}));
  construct->add_option("--budget", cfg.budget, "extra line pairs for branch search")->default_val(3);
  construct->add_option("--seed", cfg.seed, "seed of the minimality probe")->default_val(0);
  construct->add_option("--samples", cfg.samples, "random elements in the minimality probe")
      ->default_val(100);

  auto* verify = app.add_subcommand("verify", "test a given matrix for the Richardson property");
  verify->add_option("--algebra", cfg.algebra)->required();
  verify->add_option("--blocks", cfg.blocks)->required();
  verify->add_option("--matrix", cfg.input, "matrix JSON file, - for stdin")->required();
  verify->add_option("--format", cfg.format)
      ->default_val("ascii")
      ->check(CLI::IsMember({"ascii", "json"}));

  auto* sweep_cmd = app.add_subcommand("sweep", "report on every spec of a family");
  sweep_cmd->add_option("--family", cfg.family, "sl, sp or so")->required();
  sweep_cmd->add_option("--max", cfg.n_max, "largest matrix size")->required();
  sweep_cmd->add_option("--format", cfg.format)->default_val("csv")->check(CLI::IsMember({"csv", "json"}));
  sweep_cmd->add_option("--budget", cfg.budget)->default_val(3);

  auto* render = app.add_subcommand("render", "draw a diagram from JSON");
  render->add_option("--diagram", cfg.input, "diagram JSON file, - for stdin")->required();
  render->add_option("--format", cfg.format)->default_val("ascii")->check(CLI::IsMember({"ascii", "dot"}));
  render->add_option("--algebra", cfg.algebra, "sp/so algebra: draw counterpart lines dashed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*construct) return cmd_construct(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*sweep_cmd) return cmd_sweep(cfg);
    return cmd_render(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == ErrorCode::NotInNilradical) return kNotInNilradical;
    return is_input_error(e.code()) ? kBadInput : kNegative;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
}

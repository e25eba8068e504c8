#include "cli.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "lisakit/analysis.hpp"
#include "lisakit/csv.hpp"
#include "lisakit/error.hpp"
#include "lisakit/fixtures.hpp"
#include "lisakit/report.hpp"
#include "lisakit/verification.hpp"

namespace lisakit::cli {
namespace {

struct RunConfig {
  std::string command;
  std::string distances_path;
  std::string values_path;
  std::string column;
  std::string kernel = "inverse";
  std::string variants = "all";
  std::string format = "text";
  std::string out_path;
  std::string plot_path;
  std::string demo;
  std::vector<std::string> random;
};

struct RandomSpec {
  std::size_t n = 0;
  std::uint64_t seed = 0;
};

template <class T>
T parse_integer(std::string_view text, std::string_view what) {
  T value{};
  auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || res.ec != std::errc{} ||
      res.ptr != text.data() + text.size()) {
    throw Error(ErrorCode::InvalidArgument,
                "--random: cannot parse " + std::string(what) + " from '" +
                    std::string(text) + "'");
  }
  return value;
}

// Accepts "n=6 seed=9" as two tokens or "n=6,seed=9" as one.
RandomSpec parse_random(const std::vector<std::string>& tokens) {
  std::vector<std::string> items;
  for (const auto& tok : tokens) {
    std::stringstream ss(tok);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) items.push_back(item);
    }
  }
  std::optional<std::size_t> n;
  std::optional<std::uint64_t> seed;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    const auto key = item.substr(0, eq);
    const auto value = eq == std::string::npos ? std::string() : item.substr(eq + 1);
    if (key == "n") {
      n = parse_integer<std::size_t>(value, "n");
    } else if (key == "seed") {
      seed = parse_integer<std::uint64_t>(value, "seed");
    } else {
      throw Error(ErrorCode::InvalidArgument,
                  "--random expects n=N seed=S, got '" + item + "'");
    }
  }
  if (!n || !seed) {
    throw Error(ErrorCode::InvalidArgument, "--random expects n=N seed=S");
  }
  return {*n, *seed};
}

Dataset load_dataset(const RunConfig& cfg) {
  const auto kernel = parse_kernel(cfg.kernel);
  const int sources = static_cast<int>(!cfg.demo.empty()) +
                      static_cast<int>(!cfg.random.empty()) +
                      static_cast<int>(!cfg.distances_path.empty() ||
                                       !cfg.values_path.empty());
  if (sources != 1) {
    throw Error(ErrorCode::InvalidArgument,
                "choose exactly one input: --demo, --random, or "
                "--distances with --values");
  }
  if (!cfg.demo.empty()) {
    int year = 0;
    if (cfg.demo == "bth2000") {
      year = 2000;
    } else if (cfg.demo == "bth2010") {
      year = 2010;
    } else {
      throw Error(ErrorCode::InvalidArgument,
                  "unknown demo '" + cfg.demo + "' (bth2000 or bth2010)");
    }
    auto data = bth::dataset(year);
    data.kernel = kernel;
    return data;
  }
  if (!cfg.random.empty()) {
    const auto spec = parse_random(cfg.random);
    return random_instance(spec.n, spec.seed, kernel);
  }
  if (cfg.distances_path.empty() || cfg.values_path.empty()) {
    throw Error(ErrorCode::InvalidArgument,
                "--distances and --values must be given together");
  }
  auto distances = csv::read_distances(cfg.distances_path);
  auto values = csv::read_values(cfg.values_path).column(cfg.column);
  return Dataset{std::move(distances), std::move(values), kernel};
}

report::Json config_json(const RunConfig& cfg) {
  report::Json j;
  j["command"] = cfg.command;
  j["distances"] = cfg.distances_path.empty() ? report::Json(nullptr)
                                              : report::Json(cfg.distances_path);
  j["values"] = cfg.values_path.empty() ? report::Json(nullptr)
                                        : report::Json(cfg.values_path);
  j["column"] = cfg.column.empty() ? report::Json(nullptr) : report::Json(cfg.column);
  j["demo"] = cfg.demo.empty() ? report::Json(nullptr) : report::Json(cfg.demo);
  if (cfg.random.empty()) {
    j["random"] = nullptr;
  } else {
    const auto spec = parse_random(cfg.random);
    j["random"] = {{"n", spec.n}, {"seed", spec.seed}};
  }
  j["kernel"] = cfg.kernel;
  j["variants"] = cfg.variants;
  j["format"] = cfg.format;
  return j;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError(path, 0, "cannot open file for writing");
  f << content;
  if (!f) throw ParseError(path, 0, "write failed");
}

void emit(const RunConfig& cfg, const std::string& content, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << content;
  } else {
    write_file(cfg.out_path, content);
  }
}

std::string checks_csv(const VerificationReport& r) {
  std::ostringstream out;
  out << "id,equation,kind,lhs,rhs,abs_gap,rel_gap,tolerance,verdict\n";
  for (const auto& c : r.checks) {
    out << c.id << ',' << csv::escape_field(c.equation) << ','
        << (c.kind == CheckKind::Identity ? "identity" : "refuted-claim") << ','
        << csv::format_double(c.lhs) << ',' << csv::format_double(c.rhs) << ','
        << csv::format_double(c.abs_gap) << ',' << csv::format_double(c.rel_gap)
        << ',' << csv::format_double(c.tolerance) << ',' << to_string(c.verdict)
        << '\n';
  }
  return out.str();
}

int cmd_compute(const RunConfig& cfg, std::ostream& out) {
  const auto format = report::parse_format(cfg.format);
  const auto variants = report::parse_variants(cfg.variants);
  const auto analysis = analyze(load_dataset(cfg));
  switch (format) {
    case report::Format::Csv:
      emit(cfg, report::compute_csv(analysis, variants), out);
      break;
    case report::Format::Json:
      emit(cfg,
           report::compute_json(config_json(cfg), analysis, variants,
                                run_all_checks(analysis))
                   .dump(2) +
               "\n",
           out);
      break;
    case report::Format::Text:
      emit(cfg,
           report::compute_text(analysis, variants, report::text_precision()),
           out);
      break;
  }
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const auto format = report::parse_format(cfg.format);
  const auto analysis = analyze(load_dataset(cfg));
  const auto rep = run_all_checks(analysis);
  switch (format) {
    case report::Format::Csv:
      emit(cfg, checks_csv(rep), out);
      break;
    case report::Format::Json: {
      report::Json j;
      j["config"] = config_json(cfg);
      j["globals"] = report::globals_json(analysis);
      j["report"] = report::report_json(rep);
      emit(cfg, j.dump(2) + "\n", out);
      break;
    }
    case report::Format::Text:
      emit(cfg, report::verify_text(rep, report::text_precision()), out);
      break;
  }
  if (!rep.identities_hold()) return kIdentityFailure;
  if (!rep.claims_refuted()) return kClaimNotRefuted;
  return kOk;
}

int cmd_plot(const RunConfig& cfg, std::ostream& out) {
  const auto format = report::parse_format(cfg.format);
  const auto analysis = analyze(load_dataset(cfg));
  const auto data = report::plot_data(analysis);
  switch (format) {
    case report::Format::Csv:
      emit(cfg, report::plot_csv(data), out);
      break;
    case report::Format::Json:
      emit(cfg, report::plot_json(data).dump(2) + "\n", out);
      break;
    case report::Format::Text:
      emit(cfg, report::plot_text(data, report::text_precision()), out);
      break;
  }
  if (!cfg.plot_path.empty()) write_file(cfg.plot_path, report::plot_svg(data));
  return kOk;
}

int cmd_demo(const RunConfig& cfg, std::ostream& out) {
  namespace fs = std::filesystem;
  const fs::path dir = cfg.out_path.empty() ? fs::path(".") : fs::path(cfg.out_path);
  std::error_code ec;
  fs::create_directories(dir, ec);
  const auto distances = (dir / "bth_distances.csv").string();
  const auto population = (dir / "bth_population.csv").string();
  write_file(distances, bth::distances_csv());
  write_file(population, bth::population_csv());
  out << "wrote " << distances << '\n' << "wrote " << population << '\n';
  return kOk;
}

void add_common_options(CLI::App* sub, RunConfig& cfg, bool data_options) {
  if (data_options) {
    sub->add_option("--distances", cfg.distances_path, "Distance matrix CSV");
    sub->add_option("--values", cfg.values_path, "Attribute values CSV");
    sub->add_option("--column", cfg.column,
                    "Value column to use (default: first)");
    sub->add_option("--kernel", cfg.kernel, "inverse | power:B | threshold:R")
        ->capture_default_str();
    sub->add_option("--variants", cfg.variants, "all | set1,set2,set3")
        ->capture_default_str();
    sub->add_option("--format", cfg.format, "csv | json | text")
        ->capture_default_str();
    sub->add_option("--plot", cfg.plot_path, "Write an SVG scatter plot here");
    sub->add_option("--demo", cfg.demo, "Embedded dataset: bth2000 | bth2010");
    sub->add_option("--random", cfg.random, "Synthetic dataset: n=N seed=S")
        ->expected(1, 2);
  }
  sub->add_option("--out", cfg.out_path,
                  data_options ? "Output file (default: stdout)"
                               : "Output directory (default: .)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Global and local spatial autocorrelation (Moran's I, Geary's C)",
               "lisa-kit"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* compute = app.add_subcommand(
      "compute", "Local Moran and Geary values for all three formulations");
  auto* verify = app.add_subcommand(
      "verify", "Check the sum and ratio identities; audit the refuted claims");
  auto* plot = app.add_subcommand(
      "plot", "Scatter data and fits for MI1 vs MI2 and MI1 vs MI3");
  auto* demo = app.add_subcommand(
      "demo", "Export the embedded Beijing-Tianjin-Hebei data as CSV files");
  for (auto* sub : {compute, verify, plot}) add_common_options(sub, cfg, true);
  add_common_options(demo, cfg, false);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "lisa-kit: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (compute->parsed()) {
      cfg.command = "compute";
      return cmd_compute(cfg, out);
    }
    if (verify->parsed()) {
      cfg.command = "verify";
      return cmd_verify(cfg, out);
    }
    if (plot->parsed()) {
      cfg.command = "plot";
      return cmd_plot(cfg, out);
    }
    cfg.command = "demo";
    return cmd_demo(cfg, out);
  } catch (const ParseError& e) {
    err << "lisa-kit: input error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::InvalidArgument:
      case ErrorCode::InvalidKernel:
        err << "lisa-kit: input error: " << e.what() << '\n';
        return kInputError;
      default:
        err << "lisa-kit: validation error (" << to_string(e.code())
            << "): " << e.what() << '\n';
        return kValidationError;
    }
  }
}

}  // namespace lisakit::cli

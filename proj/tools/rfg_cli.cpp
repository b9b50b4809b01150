// rfg: command-line front end over the C API.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rfg/rfg.h"

namespace {

constexpr int kExitAssertion = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

struct CliError {
  int code;
  std::string message;
};

struct StringDeleter {
  void operator()(char* s) const { rfg_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

int exit_code_for(rfg_status status) {
  switch (status) {
  case RFG_INVALID_ARGUMENT:
  case RFG_UNKNOWN_EXPERIMENT:
  case RFG_PARSE_ERROR:
  case RFG_DOMAIN_ERROR:
  case RFG_NOT_IN_GROUP:
    return kExitUsage;
  default:
    return kExitRuntime;
  }
}

void check(rfg_status status) {
  if (status == RFG_OK) return;
  const std::string message = rfg_last_error_message();
  throw CliError{exit_code_for(status), message.empty() ? rfg_status_name(status) : message};
}

std::string take(char* s) {
  OwnedString owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

std::string fmt(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// Writes to the file, or to stdout when the path is empty or "-".
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError{kExitUsage, "cannot open '" + path + "' for writing"};
  out << text;
  if (!out) throw CliError{kExitRuntime, "write to '" + path + "' failed"};
}

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{kExitUsage, "cannot open '" + path + "'"};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("RFG_SEED")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw CliError{kExitUsage, "RFG_SEED must be a non-negative integer"};
  }
  return 42;
}

struct Options {
  std::string sample_kind;
  std::uint64_t n = 0;
  std::optional<std::uint64_t> seed;
  std::uint64_t stream = 0;
  std::string format = "jsonl";
  std::string support = "half";
  std::string out;

  std::string density;
  double from = 0.0;
  double to = 0.0;
  double step = 0.01;

  std::string experiment;
  std::uint32_t streams = 16;
  std::uint32_t workers = 0;
  std::string histogram_out;

  std::string in;

  std::string level = "quick";
  int criterion = 0;
};

std::string mobius_record(const rfg_mobius& f, const std::string& format) {
  if (format == "csv") return fmt(f.a.re) + "," + fmt(f.a.im) + "," + fmt(f.c.re) + "," + fmt(f.c.im);
  char* s = nullptr;
  check(rfg_mobius_to_json(&f, &s));
  return take(s);
}

std::string arc_record(const rfg_arc& a, const std::string& format) {
  if (format == "csv") return fmt(a.mid_arg) + "," + fmt(a.length);
  char* s = nullptr;
  check(rfg_arc_to_json(&a, &s));
  return take(s);
}

int cmd_sample(const Options& o) {
  rfg_stream* raw = nullptr;
  check(rfg_stream_create(resolve_seed(o.seed), o.stream, &raw));
  std::unique_ptr<rfg_stream, void (*)(rfg_stream*)> stream(raw, rfg_stream_destroy);

  std::vector<std::string> records;
  for (std::uint64_t i = 0; i < o.n; ++i) {
    if (o.sample_kind == "arc") {
      rfg_arc a{};
      check(rfg_sample_arc(stream.get(), o.support == "full", &a));
      records.push_back(arc_record(a, o.format));
    } else {
      rfg_mobius f{};
      if (o.sample_kind == "mobius")
        check(rfg_sample_mobius(stream.get(), &f));
      else if (o.sample_kind == "hyperbolic")
        check(rfg_sample_hyperbolic(stream.get(), &f));
      else
        check(rfg_sample_parabolic(stream.get(), &f));
      records.push_back(mobius_record(f, o.format));
    }
  }

  std::string text;
  if (o.format == "json") {
    text = "[";
    for (std::size_t i = 0; i < records.size(); ++i) text += (i ? "," : "") + records[i];
    text += "]\n";
  } else {
    if (o.format == "csv") text = o.sample_kind == "arc" ? "mid_arg,len\n" : "a_re,a_im,c_re,c_im\n";
    for (const std::string& r : records) text += r + "\n";
  }
  emit(o.out, text);
  return 0;
}

int cmd_pdf(const Options& o) {
  if (!(o.step > 0.0) || !(o.from <= o.to)) throw CliError{kExitUsage, "need --from <= --to and --step > 0"};
  rfg_density* raw = nullptr;
  check(rfg_density_create(o.density.c_str(), &raw));
  std::unique_ptr<rfg_density, void (*)(rfg_density*)> d(raw, rfg_density_destroy);

  std::string text = "x,density\n";
  const auto count = static_cast<std::uint64_t>(std::floor((o.to - o.from) / o.step + 1e-9));
  for (std::uint64_t i = 0; i <= count; ++i) {
    const double x = o.from + static_cast<double>(i) * o.step;
    double y = 0.0;
    // points outside the domain and the integrable singularities are skipped
    if (rfg_density_eval(d.get(), x, &y) != RFG_OK || !std::isfinite(y)) continue;
    text += fmt(x) + "," + fmt(y) + "\n";
  }
  emit(o.out, text);
  return 0;
}

int finish_report(rfg_report* raw, const Options& o) {
  std::unique_ptr<rfg_report, void (*)(rfg_report*)> report(raw, rfg_report_destroy);
  char* s = nullptr;
  check(rfg_report_json(report.get(), &s));
  emit(o.out, take(s) + "\n");
  check(rfg_report_summary(report.get(), &s));
  std::cerr << take(s);
  if (!o.histogram_out.empty()) {
    check(rfg_report_histogram_csv(report.get(), &s));
    emit(o.histogram_out, take(s));
  }
  int passed = 0;
  check(rfg_report_passed(report.get(), &passed));
  return passed ? 0 : kExitAssertion;
}

int cmd_experiment_run(const Options& o) {
  rfg_report* raw = nullptr;
  check(rfg_experiment_run(o.experiment.c_str(), o.n, resolve_seed(o.seed), o.streams, o.workers, &raw));
  return finish_report(raw, o);
}

int cmd_experiment_all(const Options& o) {
  rfg_report* raw = nullptr;
  check(rfg_experiment_run_all(o.n, resolve_seed(o.seed), o.streams, o.workers, &raw));
  return finish_report(raw, o);
}

int cmd_experiment_list() {
  char* s = nullptr;
  check(rfg_experiment_list(&s));
  std::cout << take(s) << "\n";
  return 0;
}

int cmd_verdict(const Options& o) {
  const std::string text = slurp(o.in);
  std::vector<rfg_mobius> gens;
  std::istringstream lines(text);
  std::string line;
  int number = 0;
  while (std::getline(lines, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    rfg_mobius f{};
    const rfg_status st = rfg_mobius_from_json(line.c_str(), &f);
    if (st != RFG_OK)
      throw CliError{kExitUsage, "line " + std::to_string(number) + ": " + rfg_last_error_message()};
    gens.push_back(f);
  }
  if (gens.empty()) throw CliError{kExitUsage, "no generators in input"};
  rfg_verdict_status status{};
  char* s = nullptr;
  check(rfg_verdict(gens.data(), gens.size(), &status, &s));
  emit(o.out, take(s) + "\n");
  return 0;
}

void print_criterion(int, int, const char* text, void*) {
  std::cout << text;
  std::cout.flush();
}

int cmd_verify(const Options& o) {
  const rfg_level level = o.level == "full" ? RFG_LEVEL_FULL : RFG_LEVEL_QUICK;
  int passed = 0;
  check(rfg_verify(level, o.criterion, resolve_seed(o.seed), print_criterion, nullptr, &passed));
  std::cout << (passed ? "all criteria passed" : "some criteria FAILED") << "\n";
  return passed ? 0 : kExitAssertion;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random Moebius transformations, random arcs and discreteness experiments"};
  app.require_subcommand(1);
  Options o;

  auto* sample = app.add_subcommand("sample", "Draw random transforms or arcs");
  sample->add_option("kind", o.sample_kind, "mobius, arc, hyperbolic or parabolic")
      ->required()
      ->check(CLI::IsMember({"mobius", "arc", "hyperbolic", "parabolic"}));
  sample->add_option("--n", o.n, "Number of samples")->required()->check(CLI::PositiveNumber);
  sample->add_option("--seed", o.seed, "Master seed (default: $RFG_SEED or 42)");
  sample->add_option("--stream", o.stream, "Stream index");
  sample->add_option("--format", o.format, "jsonl, json or csv")->check(CLI::IsMember({"jsonl", "json", "csv"}));
  sample->add_option("--support", o.support, "Arc lengths on [0, pi] (half) or [0, 2 pi] (full)")
      ->check(CLI::IsMember({"half", "full"}));
  sample->add_option("--out", o.out, "Output file (default stdout)");

  auto* pdf = app.add_subcommand("pdf", "Tabulate a density as CSV");
  pdf->add_option("name", o.density, "Density name")->required();
  pdf->add_option("--from", o.from, "First abscissa")->required();
  pdf->add_option("--to", o.to, "Last abscissa")->required();
  pdf->add_option("--step", o.step, "Step");
  pdf->add_option("--out", o.out, "Output file (default stdout)");

  auto* experiment = app.add_subcommand("experiment", "Monte Carlo experiments");
  experiment->require_subcommand(1);
  auto add_run_options = [&o](CLI::App* cmd) {
    cmd->add_option("--n", o.n, "Trials")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", o.seed, "Master seed (default: $RFG_SEED or 42)");
    cmd->add_option("--streams", o.streams, "Random streams")->check(CLI::PositiveNumber);
    cmd->add_option("--workers", o.workers, "Worker threads, 0 for one per core; does not change results");
    cmd->add_option("--out", o.out, "JSON report file (default stdout)");
  };
  auto* run = experiment->add_subcommand("run", "Run one experiment");
  run->add_option("name", o.experiment, "Experiment name")->required();
  add_run_options(run);
  run->add_option("--histogram-out", o.histogram_out, "CSV file for the histogram");
  auto* all = experiment->add_subcommand("all", "Run the whole registry");
  add_run_options(all);
  auto* list = experiment->add_subcommand("list", "List experiments as JSON");

  auto* verdict = app.add_subcommand("verdict", "Discreteness verdict for generators in JSON Lines");
  verdict->add_option("--in", o.in, "Generator file, - for stdin")->required();
  verdict->add_option("--out", o.out, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  verify->add_option("--level", o.level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--criterion", o.criterion, "Run a single criterion (1-12)")->check(CLI::Range(0, 12));
  verify->add_option("--seed", o.seed, "Master seed (default: $RFG_SEED or 42)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (sample->parsed()) return cmd_sample(o);
    if (pdf->parsed()) return cmd_pdf(o);
    if (run->parsed()) {
      if (o.n == 0) o.n = 1'000'000;
      return cmd_experiment_run(o);
    }
    if (all->parsed()) {
      if (o.n == 0) o.n = 1'000'000;
      return cmd_experiment_all(o);
    }
    if (list->parsed()) return cmd_experiment_list();
    if (verdict->parsed()) return cmd_verdict(o);
    if (verify->parsed()) return cmd_verify(o);
  } catch (const CliError& e) {
    std::cerr << "rfg: " << e.message << "\n";
    return e.code;
  }
  return kExitUsage;
}

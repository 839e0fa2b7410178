#include "colsel/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "colsel/distributed.hpp"
#include "colsel/error.hpp"
#include "colsel/eval.hpp"
#include "colsel/generalized.hpp"
#include "colsel/greedy.hpp"
#include "colsel/io.hpp"
#include "colsel/linalg.hpp"
#include "colsel/parallel.hpp"
#include "colsel/sketch.hpp"
#include "colsel/summary.hpp"

namespace colsel {

namespace {

using Clock = std::chrono::steady_clock;

struct Options {
  std::string input;
  std::string format;
  std::string target;
  std::string target_format;
  std::string output;
  std::string output_format = "csv";
  std::string summary;
  std::string indices;
  std::string method;
  std::string sketch = "gaussian";
  std::string assignment = "contiguous";
  std::size_t l = 0;
  std::size_t r = 0;
  std::size_t k = 0;
  std::size_t partitions = 1;
  std::size_t trials = 10;
  std::size_t threads = default_threads();
  std::uint64_t seed = 0;
  bool accuracy = false;
  bool timings = false;
};

std::string format_real(double v) {
  std::array<char, 32> buf{};
  const auto res =
      std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

MatrixFormat resolve_format(const std::string& flag, const std::string& path) {
  return flag.empty() ? infer_matrix_format(path) : parse_matrix_format(flag);
}

Matrix load_input(const Options& o) { return load_matrix(o.input, resolve_format(o.format, o.input)); }

Matrix load_target(const Options& o) {
  if (o.target.empty()) throw InvalidArgument("--target is required");
  const std::string& fmt = o.target_format.empty() ? o.format : o.target_format;
  return load_matrix(o.target, resolve_format(fmt, o.target));
}

RunSummary make_summary(std::string method, std::size_t l, std::uint64_t seed) {
  RunSummary s;
  s.method = std::move(method);
  s.l = l;
  s.seed = seed;
  return s;
}

double elapsed(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void fill_selection(RunSummary& s, const SelectionResult& res) {
  s.selected = res.selected.indices();
  s.exhausted = res.exhausted;
  s.target_reconstructed = res.target_reconstructed;
}

void maybe_accuracy(RunSummary& s, const Options& o, const Matrix& a, const ColumnSet& sel) {
  if (!o.accuracy || sel.empty()) return;
  s.trials = o.trials;
  s.relative_accuracy = relative_accuracy(a, sel, o.trials, o.seed);
}

std::size_t sketch_width(const Options& o, SketchKind kind, std::size_t n) {
  if (o.r != 0) return o.r;
  if (kind == SketchKind::identity) return n;
  throw InvalidArgument("--r is required for non-identity sketches");
}

ColumnSet read_indices(std::istream& in) {
  std::vector<std::size_t> out;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    std::size_t value = 0;
    const char* begin = line.data() + first;
    const char* end = line.data() + last + 1;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) throw ParseError(number, "bad column index '" + line + "'");
    out.push_back(value);
  }
  return ColumnSet(std::move(out));
}

void write_indices(const ColumnSet& sel, const Options& o, std::ostream& out) {
  std::string text;
  for (auto i : sel) text += std::to_string(i) + '\n';
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.output, std::ios::binary);
  if (!file) throw DataError("cannot write '" + o.output + "'");
  file << text;
}

void write_summary(const RunSummary& s, const Options& o) {
  if (o.summary.empty()) return;
  std::ofstream file(o.summary, std::ios::binary);
  if (!file) throw DataError("cannot write '" + o.summary + "'");
  file << to_json_text(s);
}

RunSummary run_select(const Options& o) {
  const Matrix a = load_input(o);
  RunSummary s = make_summary("greedy", o.l, o.seed);
  const auto start = Clock::now();
  const SelectionResult res = greedy_select(a, o.l);
  s.timings.emplace_back("select", elapsed(start));
  fill_selection(s, res);
  s.css_error = css_criterion(a, res.selected);
  maybe_accuracy(s, o, a, res.selected);
  return s;
}

RunSummary run_select_gen(const Options& o) {
  const Matrix a = load_input(o);
  const Matrix b = load_target(o);
  RunSummary s = make_summary("generalized", o.l, o.seed);
  const auto start = Clock::now();
  const SelectionResult res = generalized_select(a, b, o.l);
  s.timings.emplace_back("select", elapsed(start));
  fill_selection(s, res);
  s.css_error = css_criterion(a, res.selected);
  s.target_error = target_criterion(a, res.selected, b);
  maybe_accuracy(s, o, a, res.selected);
  return s;
}

RunSummary run_select_dist(const Options& o) {
  const Matrix a = load_input(o);
  DistributedConfig cfg;
  cfg.partitions = o.partitions;
  cfg.l = o.l;
  cfg.assignment = parse_assignment(o.assignment);
  cfg.sketch_kind = parse_sketch_kind(o.sketch);
  cfg.r = sketch_width(o, cfg.sketch_kind, a.cols());
  cfg.seed = o.seed;
  cfg.threads = o.threads;

  const DistributedResult res = distributed_select(a, cfg);
  RunSummary s = make_summary("distributed", o.l, o.seed);
  s.r = cfg.r;
  s.partitions = cfg.partitions;
  s.sketch = std::string(to_string(cfg.sketch_kind));
  s.assignment = std::string(to_string(cfg.assignment));
  s.selected = res.selected.indices();
  s.exhausted = res.exhausted;
  s.target_reconstructed = res.target_reconstructed;
  s.css_error = res.report.css_error;
  s.target_error = res.report.target_error;
  s.columns_moved = res.report.columns_moved;
  s.broadcast_values = res.report.broadcast_values;
  s.picks_per_partition = res.report.picks_per_partition;
  s.timings = {{"sketch", res.report.sketch_seconds},
               {"map", res.report.map_seconds},
               {"reduce", res.report.reduce_seconds}};
  maybe_accuracy(s, o, a, res.selected);
  return s;
}

RunSummary run_baseline(const Options& o) {
  const Matrix a = load_input(o);
  RunSummary s = make_summary(o.method, o.l, o.seed);
  const auto start = Clock::now();
  SelectionResult res;
  if (o.method == "uniform") {
    if (o.l < 1 || o.l > a.cols()) throw InvalidArgument("--l must be in 1..n");
    res.selected = uniform_select(a.cols(), o.l, o.seed);
  } else if (o.method == "hybrid-uni") {
    res = hybrid_select(a, o.l, SamplingMode::uniform, o.seed);
  } else if (o.method == "hybrid-col") {
    res = hybrid_select(a, o.l, SamplingMode::column_norm, o.seed);
  } else if (o.method == "hybrid-svd") {
    res = hybrid_select(a, o.l, SamplingMode::svd_rows, o.seed);
  } else if (o.method == "sketch-svd") {
    const std::size_t k = o.k == 0 ? o.l : o.k;
    s.k = k;
    res = sketch_svd_select(a, o.l, k, o.seed);
  } else if (o.method == "naive-dist") {
    DistributedConfig cfg;
    cfg.partitions = o.partitions;
    cfg.l = o.l;
    cfg.assignment = parse_assignment(o.assignment);
    cfg.threads = o.threads;
    s.partitions = cfg.partitions;
    s.assignment = o.assignment;
    res = naive_distributed_baseline(a, cfg);
  } else {
    throw InvalidArgument("unknown baseline method '" + o.method + "'");
  }
  s.timings.emplace_back("select", elapsed(start));
  fill_selection(s, res);
  s.css_error = span_residual_sq(a, res.selected);
  maybe_accuracy(s, o, a, res.selected);
  return s;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--input", o.input, "Input matrix file")->required();
  sub->add_option("--format", o.format, "csv | coordinate | binary (default: from extension)");
  sub->add_option("--seed", o.seed, "Master seed for every random component");
  sub->add_option("--threads", o.threads, "Worker threads (results do not depend on it)")
      ->check(CLI::PositiveNumber);
  sub->add_option("--output", o.output, "Output file (default: standard output)");
  sub->add_option("--summary", o.summary, "Write a JSON run summary here");
  sub->add_flag("--timings", o.timings, "Include phase timings in the summary");
}

void add_budget(CLI::App* sub, Options& o) {
  sub->add_option("--l", o.l, "Number of columns to select")->required();
  sub->add_flag("--accuracy", o.accuracy, "Report relative accuracy in the summary");
  sub->add_option("--trials", o.trials, "Uniform baseline trials for relative accuracy")
      ->check(CLI::PositiveNumber);
}

void add_sketch(CLI::App* sub, Options& o) {
  sub->add_option("--r", o.r, "Sketch dimension (default for identity: n)");
  sub->add_option("--sketch", o.sketch, "gaussian | sign | sparse-sign | identity")
      ->check(CLI::IsMember({"gaussian", "sign", "sparse-sign", "identity"}));
}

void add_partitions(CLI::App* sub, Options& o) {
  sub->add_option("--partitions", o.partitions, "Partition count c")->check(CLI::PositiveNumber);
  sub->add_option("--assignment", o.assignment, "contiguous | round-robin")
      ->check(CLI::IsMember({"contiguous", "round-robin"}));
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::usage: return kExitUsage;
    case ErrorKind::data: return kExitData;
    case ErrorKind::numerical: return kExitNumerical;
  }
  return kExitData;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Greedy column subset selection (centralized, generalized and distributed)",
               "colsel"};
  app.require_subcommand(1);
  Options o;

  auto* select = app.add_subcommand("select", "Centralized greedy selection");
  add_common(select, o);
  add_budget(select, o);

  auto* select_gen = app.add_subcommand("select-gen", "Select columns of --input reconstructing --target");
  add_common(select_gen, o);
  add_budget(select_gen, o);
  select_gen->add_option("--target", o.target, "Target matrix file")->required();
  select_gen->add_option("--target-format", o.target_format, "Format of the target file");

  auto* sketch = app.add_subcommand("sketch", "Emit the random projection B = A Omega");
  add_common(sketch, o);
  add_sketch(sketch, o);
  sketch->add_option("--output-format", o.output_format, "Format of the emitted sketch")
      ->check(CLI::IsMember({"csv", "coordinate", "binary"}));

  auto* select_dist = app.add_subcommand("select-dist", "Two-phase partitioned selection");
  add_common(select_dist, o);
  add_budget(select_dist, o);
  add_sketch(select_dist, o);
  add_partitions(select_dist, o);

  auto* baseline = app.add_subcommand("baseline", "Baseline selection methods");
  add_common(baseline, o);
  add_budget(baseline, o);
  add_partitions(baseline, o);
  baseline->add_option("--method", o.method, "Baseline to run")
      ->required()
      ->check(CLI::IsMember(
          {"uniform", "hybrid-uni", "hybrid-col", "hybrid-svd", "sketch-svd", "naive-dist"}));
  baseline->add_option("--k", o.k, "Singular vectors for sketch-svd (default: l)");

  auto* eval = app.add_subcommand("eval", "Relative accuracy of a given index list");
  add_common(eval, o);
  eval->add_option("--indices", o.indices, "File with one 0-based index per line (default: stdin)");
  eval->add_option("--l", o.l, "Expected number of indices");
  eval->add_option("--trials", o.trials, "Uniform baseline trials")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    RunSummary summary;
    if (*sketch) {
      const Matrix a = load_input(o);
      SketchSpec spec;
      spec.kind = parse_sketch_kind(o.sketch);
      spec.r = sketch_width(o, spec.kind, a.cols());
      spec.seed = o.seed;
      const auto start = Clock::now();
      const Matrix b(sketch_matrix(a, spec));
      summary = make_summary("sketch", 0, o.seed);
      summary.r = spec.r;
      summary.sketch = o.sketch;
      summary.timings.emplace_back("sketch", elapsed(start));
      const MatrixFormat fmt = parse_matrix_format(o.output_format);
      if (o.output.empty()) {
        write_matrix(out, b, fmt);
      } else {
        save_matrix(b, o.output, fmt);
      }
    } else if (*eval) {
      const Matrix a = load_input(o);
      ColumnSet sel;
      if (o.indices.empty()) {
        sel = read_indices(in);
      } else {
        std::ifstream file(o.indices);
        if (!file) throw DataError("cannot open '" + o.indices + "'");
        sel = read_indices(file);
      }
      if (o.l != 0 && o.l != sel.size()) {
        throw InvalidArgument("--l " + std::to_string(o.l) + " but " +
                              std::to_string(sel.size()) + " indices were given");
      }
      const RelativeAccuracy acc = relative_accuracy_detail(a, sel, o.trials, o.seed);
      summary = make_summary("eval", sel.size(), o.seed);
      summary.trials = o.trials;
      summary.selected = sel.indices();
      summary.css_error = acc.selection_error * acc.selection_error;
      summary.relative_accuracy = acc.percent;
      const std::string text = format_real(acc.percent) + "\n";
      if (o.output.empty()) {
        out << text;
      } else {
        std::ofstream file(o.output, std::ios::binary);
        if (!file) throw DataError("cannot write '" + o.output + "'");
        file << text;
      }
    } else {
      if (*select) summary = run_select(o);
      else if (*select_gen) summary = run_select_gen(o);
      else if (*select_dist) summary = run_select_dist(o);
      else summary = run_baseline(o);
      write_indices(ColumnSet(summary.selected), o, out);
    }
    if (!o.timings) summary.timings.clear();
    write_summary(summary, o);
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (e.kind() == ErrorKind::usage) err << '\n' << app.help();
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
}

}  // namespace colsel

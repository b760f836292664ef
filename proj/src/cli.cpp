#include "maxprim/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "maxprim/counting.hpp"
#include "maxprim/enumeration.hpp"
#include "maxprim/parallel.hpp"
#include "maxprim/report.hpp"
#include "maxprim/wilf.hpp"

namespace maxprim::cli {

namespace {

class Refused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Algorithm { kBrute, kNaive, kTree };

struct RunConfig {
  std::string positional;
  std::string range;
  std::optional<Value> max_primitive;
  std::optional<Value> multiplicity;
  std::string algorithm = "tree";
  std::string mode = "formula-assisted";
  Value len = 0;
  unsigned jobs = 1;
  std::string format = "csv";
  std::string output;
  std::string seed_table;
  bool report_novel = false;
  bool full = false;
  std::size_t novel_limit = 1000;
  Value brute_cap = 26;
  bool progress = false;
};

struct Range {
  Value from;
  Value to;
};

Value parse_int(const std::string& s) {
  std::size_t used = 0;
  Value v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::logic_error&) {
    throw UsageError("not an integer: '" + s + "'");
  }
  if (used != s.size()) throw UsageError("not an integer: '" + s + "'");
  return v;
}

Range parse_range_text(const std::string& text) {
  const auto dots = text.find("..");
  Range r{};
  if (dots == std::string::npos) {
    r.from = r.to = parse_int(text);
  } else {
    r.from = parse_int(text.substr(0, dots));
    r.to = parse_int(text.substr(dots + 2));
  }
  if (r.from < 1 || r.from > r.to) throw UsageError("nonsense range '" + text + "'");
  return r;
}

Range resolve_range(const RunConfig& cfg) {
  const int given = !cfg.positional.empty() + !cfg.range.empty() + cfg.max_primitive.has_value();
  if (given != 1) throw UsageError("give exactly one of RANGE, --range or --max-primitive");
  if (cfg.max_primitive) {
    if (*cfg.max_primitive < 1) throw UsageError("maximum primitive must be positive");
    return {*cfg.max_primitive, *cfg.max_primitive};
  }
  return parse_range_text(cfg.positional.empty() ? cfg.range : cfg.positional);
}

CountMode parse_mode(const std::string& s) {
  if (s == "full") return CountMode::kFull;
  if (s == "formula-assisted") return CountMode::kFormulaAssisted;
  throw UsageError("unknown mode '" + s + "'");
}

Algorithm parse_algorithm(const std::string& s) {
  if (s == "brute") return Algorithm::kBrute;
  if (s == "naive") return Algorithm::kNaive;
  if (s == "tree") return Algorithm::kTree;
  throw UsageError("unknown algorithm '" + s + "'");
}

void check_common(const RunConfig& cfg) {
  if (cfg.jobs < 1) throw UsageError("--jobs must be at least 1");
  if (cfg.len < 0) throw UsageError("--len must be positive");
}

std::map<Value, Count> load_seed(const RunConfig& cfg) {
  if (cfg.seed_table.empty()) return {};
  std::ifstream in(cfg.seed_table);
  if (!in) throw UsageError("cannot read seed table '" + cfg.seed_table + "'");
  return report::read_seed_table(in);
}

CountOptions count_options(const RunConfig& cfg, std::ostream& err) {
  CountOptions opt;
  opt.mode = parse_mode(cfg.mode);
  opt.len = cfg.len;
  opt.jobs = cfg.jobs;
  opt.seeded = load_seed(cfg);
  if (cfg.progress) opt.on_progress = [&err](Value n) { err << "counting n=" << n << '\n'; };
  return opt;
}

int cmd_count(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_common(cfg);
  const Range r = resolve_range(cfg);
  const auto format = report::parse_format(cfg.format);
  const auto rows = count_range(r.from, r.to, count_options(cfg, err));
  report::write_counts(out, rows, format);
  return kExitOk;
}

std::vector<GeneratorSet> enumerate_one(Algorithm algo, Value top, Value m, const TreeOptions& opt) {
  switch (algo) {
    case Algorithm::kBrute:
      return enumerate_brute_force(top, m).semigroups;
    case Algorithm::kNaive:
      return enumerate_naive(top, m).semigroups;
    case Algorithm::kTree:
      return enumerate_tree(top, m, opt).semigroups;
  }
  return {};
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  check_common(cfg);
  const Range r = resolve_range(cfg);
  if (r.from != r.to) throw UsageError("enumerate takes a single maximum primitive");
  const Value top = r.from;
  const auto algo = parse_algorithm(cfg.algorithm);
  const auto format = report::parse_format(cfg.format);
  if (algo == Algorithm::kBrute && top > cfg.brute_cap)
    throw Refused(fmt::format(
        "refusing brute-force enumeration for maximum primitive {} above the cap {} "
        "(it scans 2^(M-m-1) subsets per multiplicity); raise --brute-cap to insist",
        top, cfg.brute_cap));

  TreeOptions opt;
  opt.len = cfg.len;
  opt.jobs = cfg.jobs;
  std::vector<GeneratorSet> sets;
  if (cfg.multiplicity) {
    if (*cfg.multiplicity == top && top == 1) {
      sets.push_back(GeneratorSet{1});
    } else {
      sets = enumerate_one(algo, top, *cfg.multiplicity, opt);
    }
  } else if (algo == Algorithm::kTree || top == 1) {
    sets = enumerate_all(top, opt).semigroups;
  } else {
    for (Value m = 1; m < top; ++m) {
      auto part = enumerate_one(algo, top, m, opt);
      sets.insert(sets.end(), part.begin(), part.end());
    }
  }
  report::write_enumeration(out, sets, format);
  return kExitOk;
}

int cmd_wilf(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_common(cfg);
  const Range r = resolve_range(cfg);
  const auto format = report::parse_format(cfg.format);
  WilfOptions opt;
  opt.multiplicity = cfg.multiplicity;
  opt.full_check = cfg.full;
  opt.novel_sample_limit = cfg.report_novel ? cfg.novel_limit : 0;
  opt.len = cfg.len;
  opt.jobs = cfg.jobs;
  std::vector<WilfReport> reports;
  bool violated = false;
  for (Value n = r.from; n <= r.to; ++n) {
    if (cfg.progress) err << "verifying n=" << n << '\n';
    reports.push_back(verify_wilf(n, opt));
    violated = violated || !reports.back().violations.empty();
  }
  report::write_wilf(out, reports, format, cfg.report_novel);
  if (violated) err << "Wilf's inequality fails for at least one semigroup\n";
  return violated ? kExitViolation : kExitOk;
}

int cmd_plot_data(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_common(cfg);
  const Range r = resolve_range(cfg);
  const auto format = report::parse_format(cfg.format);
  const auto rows = count_range(std::max<Value>(1, r.from - 1), r.to, count_options(cfg, err));
  std::map<Value, Count> values;
  for (const auto& row : rows) values[row.n] = row.maxprim;
  report::write_plot(out, report::plot_rows(values, r.from, r.to), format);
  return kExitOk;
}

void add_range_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("RANGE", cfg.positional, "N or A..B");
  sub->add_option("--range", cfg.range, "A..B");
  sub->add_option("--max-primitive", cfg.max_primitive, "single maximum primitive N");
}

void add_run_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--len", cfg.len, "tree cutoff (default: 14(M-m)/5 rounded up)");
  sub->add_option("--jobs", cfg.jobs, "worker threads (default: $MAXPRIM_JOBS or all cores)");
  sub->add_option("--format", cfg.format, "csv, json or text")->capture_default_str();
  sub->add_option("--output", cfg.output, "write data here instead of standard output");
  sub->add_flag("--progress", cfg.progress, "report progress on standard error");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate and count numerical semigroups by maximum primitive"};
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.jobs = default_jobs();

  auto* count = app.add_subcommand("count", "A_n and N_n for a range of n");
  add_range_options(count, cfg);
  add_run_options(count, cfg);
  count->add_option("--mode", cfg.mode, "full or formula-assisted")->capture_default_str();
  count->add_option("--seed-table", cfg.seed_table, "CSV with columns n,A_n to reuse");

  auto* enumerate = app.add_subcommand("enumerate", "list semigroups with a given maximum primitive");
  add_range_options(enumerate, cfg);
  add_run_options(enumerate, cfg);
  enumerate->add_option("--multiplicity", cfg.multiplicity, "restrict to this multiplicity");
  enumerate->add_option("--algorithm", cfg.algorithm, "brute, naive or tree")->capture_default_str();
  enumerate->add_option("--brute-cap", cfg.brute_cap, "largest M for brute force")->capture_default_str();

  auto* wilf = app.add_subcommand("wilf", "verify Wilf's inequality over T(n)");
  add_range_options(wilf, cfg);
  add_run_options(wilf, cfg);
  wilf->add_option("--multiplicity", cfg.multiplicity, "restrict to this multiplicity");
  wilf->add_flag("--report-novel", cfg.report_novel, "list semigroups outside every known case");
  wilf->add_option("--novel-limit", cfg.novel_limit, "how many novel semigroups to list")
      ->capture_default_str();
  wilf->add_flag("--full", cfg.full, "check the inequality even where a known case applies");

  auto* plot = app.add_subcommand("plot-data", "series behind the growth and ratio plots");
  add_range_options(plot, cfg);
  add_run_options(plot, cfg);
  plot->add_option("--mode", cfg.mode, "full or formula-assisted")->capture_default_str();
  plot->add_option("--seed-table", cfg.seed_table, "CSV with columns n,A_n to reuse");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  try {
    if (!cfg.output.empty()) {
      file.open(cfg.output);
      if (!file) throw UsageError("cannot write '" + cfg.output + "'");
      sink = &file;
    }
    if (count->parsed()) return cmd_count(cfg, *sink, err);
    if (enumerate->parsed()) return cmd_enumerate(cfg, *sink, err);
    if (wilf->parsed()) return cmd_wilf(cfg, *sink, err);
    if (plot->parsed()) return cmd_plot_data(cfg, *sink, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotASemigroupError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Refused& e) {
    err << "refused: " << e.what() << '\n';
    return kExitRefused;
  }
  return kExitUsage;
}

}  // namespace maxprim::cli

#include "maxprim/report.hpp"

#include <fmt/format.h>

#include <cmath>
#include <istream>
#include <json.hpp>
#include <ostream>
#include <sstream>

namespace maxprim::report {

namespace {

using nlohmann::json;

std::string decimal(const std::optional<double>& v) {
  return v ? fmt::format("{:.6f}", *v) : std::string{};
}

json decimal_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json sets_json(std::span<const GeneratorSet> sets) {
  json arr = json::array();
  for (const auto& g : sets) arr.push_back(std::vector<Value>(g.begin(), g.end()));
  return arr;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, sep)) cells.push_back(cell);
  if (!line.empty() && line.back() == sep) cells.emplace_back();
  return cells;
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  const auto last = s.find_last_not_of(" \t\r");
  return first == std::string::npos ? std::string{} : s.substr(first, last - first + 1);
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  if (name == "text") return Format::kText;
  throw UsageError("unknown format '" + name + "'");
}

std::string join_generators(std::span<const Value> gens) {
  return fmt::format("{}", fmt::join(gens, ";"));
}

void write_counts(std::ostream& out, std::span<const CountRecord> rows, Format format) {
  switch (format) {
    case Format::kCsv:
      out << "n,A_n,N_n\n";
      for (const auto& r : rows) out << fmt::format("{},{},{}\n", r.n, r.maxprim, r.frobenius.value_or(0));
      break;
    case Format::kJson: {
      json arr = json::array();
      for (const auto& r : rows) arr.push_back({{"n", r.n}, {"A_n", r.maxprim}, {"N_n", r.frobenius.value_or(0)}});
      out << arr.dump(2) << '\n';
      break;
    }
    case Format::kText:
      out << fmt::format("{:>4} {:>14} {:>14}\n", "n", "A_n", "N_n");
      for (const auto& r : rows)
        out << fmt::format("{:>4} {:>14} {:>14}\n", r.n, r.maxprim, r.frobenius.value_or(0));
      break;
  }
}

void write_enumeration(std::ostream& out, std::span<const GeneratorSet> sets, Format format) {
  switch (format) {
    case Format::kCsv:
      out << "max_primitive,multiplicity,embedding_dimension,generators\n";
      for (const auto& g : sets)
        out << fmt::format("{},{},{},{}\n", g.max(), g.min(), g.size(), join_generators(g.elements()));
      break;
    case Format::kJson: {
      json arr = json::array();
      for (const auto& g : sets)
        arr.push_back({{"max_primitive", g.max()},
                       {"multiplicity", g.min()},
                       {"embedding_dimension", g.size()},
                       {"generators", std::vector<Value>(g.begin(), g.end())}});
      out << arr.dump(2) << '\n';
      break;
    }
    case Format::kText:
      for (const auto& g : sets) out << g.to_string() << '\n';
      break;
  }
}

void write_wilf(std::ostream& out, std::span<const WilfReport> rows, Format format, bool listing) {
  switch (format) {
    case Format::kCsv: {
      out << "n,total,violations,novel\n";
      for (const auto& r : rows)
        out << fmt::format("{},{},{},{}\n", r.max_primitive, r.total_checked, r.violations.size(),
                           r.novel_count);
      bool any_violation = false;
      for (const auto& r : rows) any_violation = any_violation || !r.violations.empty();
      if (!listing && !any_violation) break;
      out << "\nn,kind,generators\n";
      for (const auto& r : rows) {
        for (const auto& g : r.violations)
          out << fmt::format("{},violation,{}\n", r.max_primitive, join_generators(g.elements()));
        if (listing)
          for (const auto& g : r.sample_novel)
            out << fmt::format("{},novel,{}\n", r.max_primitive, join_generators(g.elements()));
      }
      break;
    }
    case Format::kJson: {
      json arr = json::array();
      for (const auto& r : rows) {
        json row = {{"n", r.max_primitive},
                    {"total", r.total_checked},
                    {"violations", r.violations.size()},
                    {"novel", r.novel_count},
                    {"violating", sets_json(r.violations)}};
        if (listing) row["novel_examples"] = sets_json(r.sample_novel);
        arr.push_back(std::move(row));
      }
      out << arr.dump(2) << '\n';
      break;
    }
    case Format::kText:
      for (const auto& r : rows) {
        out << fmt::format("n={} checked={} violations={} novel={}\n", r.max_primitive,
                           r.total_checked, r.violations.size(), r.novel_count);
        for (const auto& g : r.violations) out << "  violation " << g.to_string() << '\n';
        if (listing)
          for (const auto& g : r.sample_novel) out << "  novel " << g.to_string() << '\n';
      }
      break;
  }
}

std::vector<PlotRow> plot_rows(const std::map<Value, Count>& maxprim, Value from, Value to) {
  std::vector<PlotRow> rows;
  for (Value n = from; n <= to; ++n) {
    PlotRow row;
    row.n = n;
    row.maxprim = maxprim.at(n);
    if (row.maxprim > 0) row.log2_maxprim = std::log2(static_cast<double>(row.maxprim));
    if (n > 1) {
      const Count prev = maxprim.at(n - 1);
      if (prev > 0 && row.maxprim > 0) {
        const double ratio = static_cast<double>(row.maxprim) / static_cast<double>(prev);
        (n % 2 == 0 ? row.ratio_even_over_odd : row.ratio_odd_over_even) = ratio;
      }
    }
    rows.push_back(row);
  }
  return rows;
}

void write_plot(std::ostream& out, std::span<const PlotRow> rows, Format format) {
  switch (format) {
    case Format::kCsv:
      out << "n,A_n,log2_A_n,ratio_even_over_odd,ratio_odd_over_even\n";
      for (const auto& r : rows)
        out << fmt::format("{},{},{},{},{}\n", r.n, r.maxprim, decimal(r.log2_maxprim),
                           decimal(r.ratio_even_over_odd), decimal(r.ratio_odd_over_even));
      break;
    case Format::kJson: {
      json arr = json::array();
      for (const auto& r : rows)
        arr.push_back({{"n", r.n},
                       {"A_n", r.maxprim},
                       {"log2_A_n", decimal_json(r.log2_maxprim)},
                       {"ratio_even_over_odd", decimal_json(r.ratio_even_over_odd)},
                       {"ratio_odd_over_even", decimal_json(r.ratio_odd_over_even)}});
      out << arr.dump(2) << '\n';
      break;
    }
    case Format::kText:
      out << fmt::format("{:>4} {:>14} {:>12} {:>12} {:>12}\n", "n", "A_n", "log2", "even/odd",
                         "odd/even");
      for (const auto& r : rows)
        out << fmt::format("{:>4} {:>14} {:>12} {:>12} {:>12}\n", r.n, r.maxprim,
                           decimal(r.log2_maxprim), decimal(r.ratio_even_over_odd),
                           decimal(r.ratio_odd_over_even));
      break;
  }
}

std::map<Value, Count> read_seed_table(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw UsageError("seed table is empty");
  const auto header = split(line, ',');
  int n_col = -1;
  int a_col = -1;
  for (std::size_t i = 0; i < header.size(); ++i) {
    const auto name = trim(header[i]);
    if (name == "n") n_col = static_cast<int>(i);
    if (name == "A_n") a_col = static_cast<int>(i);
  }
  if (n_col < 0 || a_col < 0) throw UsageError("seed table needs columns n and A_n");
  std::map<Value, Count> values;
  while (std::getline(in, line)) {
    if (trim(line).empty()) break;
    const auto cells = split(line, ',');
    const auto need = static_cast<std::size_t>(std::max(n_col, a_col));
    if (cells.size() <= need) throw UsageError("short row in seed table: " + line);
    try {
      values[std::stoll(trim(cells[static_cast<std::size_t>(n_col)]))] =
          std::stoll(trim(cells[static_cast<std::size_t>(a_col)]));
    } catch (const std::logic_error&) {
      throw UsageError("malformed row in seed table: " + line);
    }
  }
  return values;
}

}  // namespace maxprim::report

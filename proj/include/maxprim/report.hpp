#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "maxprim/counting.hpp"
#include "maxprim/wilf.hpp"

namespace maxprim::report {

enum class Format { kCsv, kJson, kText };

Format parse_format(const std::string& name);

/// "4;6;9"
std::string join_generators(std::span<const Value> gens);

void write_counts(std::ostream& out, std::span<const CountRecord> rows, Format format);

void write_enumeration(std::ostream& out, std::span<const GeneratorSet> sets, Format format);

/// With `listing`, violating and sampled novel semigroups are listed too;
/// in CSV they form a second table (n,kind,generators) after a blank line.
void write_wilf(std::ostream& out, std::span<const WilfReport> rows, Format format, bool listing);

struct PlotRow {
  Value n = 0;
  Count maxprim = 0;
  std::optional<double> log2_maxprim;
  /// A_n / A_{n-1} at even n.
  std::optional<double> ratio_even_over_odd;
  /// A_n / A_{n-1} at odd n.
  std::optional<double> ratio_odd_over_even;
};

/// Rows for n in [from, to]; `maxprim` must hold A_n for n in [from-1, to]
/// (n >= 1). Cells involving a zero count stay empty.
std::vector<PlotRow> plot_rows(const std::map<Value, Count>& maxprim, Value from, Value to);

void write_plot(std::ostream& out, std::span<const PlotRow> rows, Format format);

/// Reads n -> A_n from a CSV with at least the columns n and A_n.
std::map<Value, Count> read_seed_table(std::istream& in);

}  // namespace maxprim::report

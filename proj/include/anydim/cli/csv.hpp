#pragma once
#include "anydim/core/rational.hpp"
#include "anydim/optimize/sweep.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace anydim {

// One row of the bound table: setting,n,l_n,l_kind,u_n,u_kind,gap_bound,seed,restarts.
struct CsvRow {
  std::string setting;
  int n = 0;
  double lower = 0;
  std::optional<Rational> lower_exact;
  std::string lower_kind;
  double upper = 0;
  std::optional<Rational> upper_exact;
  std::string upper_kind;
  double gap_bound = 0;  // NaN when not applicable
  std::uint64_t seed = 0;
  int restarts = 0;
};
// NaN fields compare equal to each other.
bool operator==(const CsvRow& a, const CsvRow& b);

inline constexpr std::string_view kBoundCsvHeader = "setting,n,l_n,l_kind,u_n,u_kind,gap_bound,seed,restarts";

std::vector<CsvRow> rows_from_sweep(const SweepResult& r);

// Rows are written in ascending n. With `exact_rational`, exact values print
// as p/q (integers as p/1).
std::string emit_csv(std::vector<CsvRow> rows, bool exact_rational = false);
// Inverse of emit_csv; p/q fields populate the exact values.
std::vector<CsvRow> parse_csv(std::string_view text);

// Generic RFC-4180 table helpers.
std::string csv_field(std::string_view s);
std::string csv_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows);
std::vector<std::vector<std::string>> parse_csv_records(std::string_view text);

// "%.17g"; NaN as "nan", infinities as "inf" / "-inf".
std::string format_double(double v);
double parse_double(const std::string& s);

// Writes text to `path`, or to stdout when path is empty or "-". Throws on I/O failure.
void write_output(const std::string& path, const std::string& text);

}  // namespace anydim

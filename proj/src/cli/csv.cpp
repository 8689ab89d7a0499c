#include "anydim/cli/csv.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <stdexcept>

namespace anydim {

namespace {

bool same_double(double a, double b) { return (std::isnan(a) && std::isnan(b)) || a == b; }

std::string value_field(double v, const std::optional<Rational>& exact, bool exact_rational) {
  if (exact_rational && exact) {
    std::string t = to_string(*exact);
    return t.find('/') == std::string::npos ? t + "/1" : t;
  }
  return format_double(v);
}

void parse_value(const std::string& s, double& v, std::optional<Rational>& exact) {
  if (s.find('/') != std::string::npos) {
    exact = parse_rational(s);
    v = to_double(*exact);
  } else {
    v = parse_double(s);
    exact.reset();
  }
}

}  // namespace

bool operator==(const CsvRow& a, const CsvRow& b) {
  return a.setting == b.setting && a.n == b.n && same_double(a.lower, b.lower) && a.lower_exact == b.lower_exact &&
         a.lower_kind == b.lower_kind && same_double(a.upper, b.upper) && a.upper_exact == b.upper_exact &&
         a.upper_kind == b.upper_kind && same_double(a.gap_bound, b.gap_bound) && a.seed == b.seed &&
         a.restarts == b.restarts;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& s) {
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + s + "'");
  }
  if (used != s.size()) throw std::invalid_argument("not a number: '" + s + "'");
  return v;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  auto line = [](const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out += ',';
      out += csv_field(fields[i]);
    }
    return out + "\r\n";
  };
  std::string out = line(header);
  for (const auto& r : rows) {
    if (r.size() != header.size()) throw std::invalid_argument("csv row width differs from the header");
    out += line(r);
  }
  return out;
}

std::vector<std::vector<std::string>> parse_csv_records(std::string_view text) {
  std::vector<std::vector<std::string>> out;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false, any = false;
  std::size_t i = 0;
  auto end_record = [&] {
    record.push_back(std::move(field));
    field.clear();
    out.push_back(std::move(record));
    record.clear();
    any = false;
  };
  while (i < text.size()) {
    char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      ++i;
      continue;
    }
    if (c == '"') {
      if (!field.empty()) throw std::invalid_argument("quote inside an unquoted csv field");
      quoted = true;
      any = true;
    } else if (c == ',') {
      record.push_back(std::move(field));
      field.clear();
      any = true;
    } else if (c == '\r' || c == '\n') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      end_record();
    } else {
      field += c;
      any = true;
    }
    ++i;
  }
  if (quoted) throw std::invalid_argument("unterminated quoted csv field");
  if (any || !field.empty() || !record.empty()) end_record();
  return out;
}

std::vector<CsvRow> rows_from_sweep(const SweepResult& r) {
  std::vector<CsvRow> out;
  for (const auto& row : r.rows) {
    CsvRow c;
    c.setting = r.setting;
    c.n = row.n;
    c.lower = row.lower.value;
    c.lower_exact = row.lower.exact_value;
    c.lower_kind = kind_name(row.lower.kind);
    c.upper = row.upper.value;
    c.upper_exact = row.upper.exact_value;
    c.upper_kind = kind_name(row.upper.kind);
    c.gap_bound = row.gap_bound;
    c.seed = r.seed;
    c.restarts = r.restarts;
    out.push_back(std::move(c));
  }
  return out;
}

std::string emit_csv(std::vector<CsvRow> rows, bool exact_rational) {
  std::stable_sort(rows.begin(), rows.end(), [](const CsvRow& a, const CsvRow& b) { return a.n < b.n; });
  std::vector<std::string> header;
  {
    std::string h(kBoundCsvHeader);
    std::size_t start = 0;
    for (std::size_t p; (p = h.find(',', start)) != std::string::npos; start = p + 1) header.push_back(h.substr(start, p - start));
    header.push_back(h.substr(start));
  }
  std::vector<std::vector<std::string>> body;
  for (const auto& r : rows)
    body.push_back({r.setting, std::to_string(r.n), value_field(r.lower, r.lower_exact, exact_rational), r.lower_kind,
                    value_field(r.upper, r.upper_exact, exact_rational), r.upper_kind, format_double(r.gap_bound),
                    std::to_string(r.seed), std::to_string(r.restarts)});
  return csv_table(header, body);
}

std::vector<CsvRow> parse_csv(std::string_view text) {
  auto records = parse_csv_records(text);
  if (records.empty()) throw std::invalid_argument("csv is missing the header row");
  std::string header;
  for (std::size_t i = 0; i < records[0].size(); ++i) header += (i ? "," : "") + records[0][i];
  if (header != kBoundCsvHeader) throw std::invalid_argument("unexpected csv header: " + header);
  std::vector<CsvRow> out;
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& f = records[i];
    if (f.size() != 9) throw std::invalid_argument("csv record " + std::to_string(i) + " has the wrong width");
    CsvRow r;
    r.setting = f[0];
    r.n = std::stoi(f[1]);
    parse_value(f[2], r.lower, r.lower_exact);
    r.lower_kind = f[3];
    parse_value(f[4], r.upper, r.upper_exact);
    r.upper_kind = f[5];
    r.gap_bound = parse_double(f[6]);
    r.seed = std::stoull(f[7]);
    r.restarts = std::stoi(f[8]);
    out.push_back(std::move(r));
  }
  return out;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << text;
  f.close();
  if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace anydim

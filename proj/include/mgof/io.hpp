#pragma once

// Plain-text formats: observation files, CSV output, calibration caches.

#include <mgof/error.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace mgof::io {

/// Shortest-safe locale-independent rendering with 17 significant digits.
inline std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

/// Locale-independent strict parse of a decimal number.
inline bool parse_double(std::string_view text, double& out) {
  text = trim(text);
  if (text.empty()) return false;
  if (text.front() == '+') text.remove_prefix(1);
  const auto res = std::from_chars(text.data(), text.data() + text.size(), out);
  return res.ec == std::errc() && res.ptr == text.data() + text.size() && std::isfinite(out);
}

/// Newline-delimited positive decimals; blank lines are skipped.
inline std::vector<double> read_observations(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open data file '" + path + "'");
  std::vector<double> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto body = trim(line);
    if (body.empty()) continue;
    double v = 0.0;
    if (!parse_double(body, v))
      throw DataError(path + ":" + std::to_string(lineno) + ": cannot parse '" +
                      std::string(body) + "' as a number");
    if (!(v > 0.0))
      throw DataError(path + ":" + std::to_string(lineno) + ": observation " +
                      std::string(body) + " is not positive");
    values.push_back(v);
  }
  return values;
}

inline void write_observations(const std::string& path, const std::vector<double>& values) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write '" + path + "'");
  for (double v : values) out << format_double(v) << '\n';
}

/// Minimal CSV writer: header row, then rows of already formatted cells.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& header)
      : out_(path), path_(path) {
    if (!out_) throw DataError("cannot write '" + path + "'");
    row(header);
  }

  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ << ',';
      out_ << cells[i];
    }
    out_ << '\n';
    if (!out_) throw DataError("write failed for '" + path_ + "'");
  }

 private:
  std::ofstream out_;
  std::string path_;
};

inline std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(',', start);
    cells.emplace_back(trim(line.substr(start, pos == std::string_view::npos
                                                   ? std::string_view::npos
                                                   : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return cells;
}

struct CalibrationEntry {
  double k = 0.0;
  std::size_t n = 0;
  double alpha = 0.0;
  std::size_t B = 0;
  unsigned long long seed = 0;
  double quantile = 0.0;
};

inline const std::vector<std::string>& calibration_header() {
  static const std::vector<std::string> h{"k", "n", "alpha", "B", "seed", "quantile"};
  return h;
}

inline void write_calibration(const std::string& path,
                              const std::vector<CalibrationEntry>& entries) {
  CsvWriter csv(path, calibration_header());
  for (const auto& e : entries)
    csv.row({format_double(e.k), std::to_string(e.n), format_double(e.alpha),
             std::to_string(e.B), std::to_string(e.seed), format_double(e.quantile)});
}

inline std::vector<CalibrationEntry> read_calibration(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open calibration file '" + path + "'");
  std::string line;
  std::size_t lineno = 0;
  std::vector<CalibrationEntry> out;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const auto cells = split_csv_line(line);
    if (lineno == 1) {
      if (cells != calibration_header())
        throw DataError(path + ": unexpected calibration header");
      continue;
    }
    if (cells.size() != 6) throw DataError(path + ":" + std::to_string(lineno) + ": expected 6 fields");
    CalibrationEntry e;
    double n = 0.0;
    double B = 0.0;
    double seed = 0.0;
    if (!parse_double(cells[0], e.k) || !parse_double(cells[1], n) ||
        !parse_double(cells[2], e.alpha) || !parse_double(cells[3], B) ||
        !parse_double(cells[4], seed) || !parse_double(cells[5], e.quantile))
      throw DataError(path + ":" + std::to_string(lineno) + ": malformed calibration row");
    e.n = static_cast<std::size_t>(n);
    e.B = static_cast<std::size_t>(B);
    e.seed = std::stoull(cells[4]);
    out.push_back(e);
  }
  if (out.empty()) throw DataError(path + ": no calibration rows");
  return out;
}

}  // namespace mgof::io

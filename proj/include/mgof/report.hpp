#pragma once

// Simulation artifacts: stats/thresholds/summary CSVs and an SVG boxplot.

#include <mgof/io.hpp>
#include <mgof/simulation.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace mgof::report {

inline void write_stats_csv(const std::string& path, const SimResult& res) {
  io::CsvWriter csv(path, {"k", "rep", "statistic"});
  for (const auto& r : res.rows)
    csv.row({io::format_double(r.k), std::to_string(r.rep), io::format_double(r.statistic)});
}

inline void write_thresholds_csv(const std::string& path, const SimResult& res) {
  io::CsvWriter csv(path, {"k", "tau_theoretical", "tau_bonferroni", "q_emp", "q_emp_max"});
  for (const auto& t : res.thresholds)
    csv.row({io::format_double(t.k), io::format_double(t.tau_theoretical),
             io::format_double(t.tau_bonferroni), io::format_double(t.q_empirical),
             io::format_double(t.q_empirical_maxtest)});
}

inline void write_summary_csv(const std::string& path, const SimResult& res) {
  io::CsvWriter csv(path, {"mode", "rejection_rate", "separation_truth"});
  for (const auto& r : res.rejection_rates)
    csv.row({r.mode, io::format_double(r.rate), io::format_double(res.separation_truth)});
}

inline std::vector<io::CalibrationEntry> calibration_entries(const SimResult& res) {
  std::vector<io::CalibrationEntry> out;
  for (const auto& t : res.thresholds)
    out.push_back({t.k, res.config.n, res.config.alpha, res.config.calib_B, res.config.seed,
                   t.q_empirical});
  return out;
}

struct BoxStats {
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double whisker_lo = 0.0;
  double whisker_hi = 0.0;
  std::vector<double> outliers;
};

/// Tukey boxplot summary with linear-interpolated quartiles.
inline BoxStats box_stats(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  auto quant = [&](double q) {
    const double pos = q * static_cast<double>(v.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, v.size() - 1);
    return v[lo] + (pos - static_cast<double>(lo)) * (v[hi] - v[lo]);
  };
  BoxStats b;
  b.q1 = quant(0.25);
  b.median = quant(0.5);
  b.q3 = quant(0.75);
  const double iqr = b.q3 - b.q1;
  const double lo_fence = b.q1 - 1.5 * iqr;
  const double hi_fence = b.q3 + 1.5 * iqr;
  b.whisker_lo = b.q1;
  b.whisker_hi = b.q3;
  for (double x : v) {
    if (x < lo_fence || x > hi_fence) {
      b.outliers.push_back(x);
    } else {
      b.whisker_lo = std::min(b.whisker_lo, x);
      b.whisker_hi = std::max(b.whisker_hi, x);
    }
  }
  return b;
}

/// Per-k boxplots of the statistic with triangle markers for the four
/// threshold flavours and a horizontal line at the true separation.
/// Thresholds above the plotted range are pinned to the top edge and
/// annotated with their value.
inline std::string boxplot_svg(const SimResult& res, const std::string& title) {
  constexpr double W = 900.0;
  constexpr double H = 520.0;
  constexpr double left = 80.0;
  constexpr double right = 180.0;
  constexpr double top = 50.0;
  constexpr double bottom = 60.0;
  const std::size_t K = res.thresholds.size();

  std::vector<BoxStats> boxes;
  double lo = res.separation_truth;
  double hi = res.separation_truth;
  for (std::size_t i = 0; i < K; ++i) {
    boxes.push_back(box_stats(res.statistics_at(i)));
    for (double x : res.statistics_at(i)) {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
    hi = std::max(hi, res.thresholds[i].q_empirical_maxtest);
  }
  const double span0 = hi - lo > 0.0 ? hi - lo : 1.0;
  // theoretical thresholds join the range only when they do not flatten the boxes
  for (const auto& t : res.thresholds)
    for (double v : {t.tau_theoretical, t.tau_bonferroni})
      if (v <= lo + 4.0 * span0) hi = std::max(hi, v);
  const double pad = 0.05 * (hi - lo > 0.0 ? hi - lo : 1.0);
  lo -= pad;
  hi += pad;

  const double plot_w = W - left - right;
  const double plot_h = H - top - bottom;
  auto ypix = [&](double v) { return top + (hi - std::min(v, hi)) / (hi - lo) * plot_h; };
  auto xpix = [&](std::size_t i) {
    return left + (static_cast<double>(i) + 0.5) * plot_w / static_cast<double>(K);
  };
  const double box_w = 0.4 * plot_w / static_cast<double>(K);

  std::ostringstream s;
  s.imbue(std::locale::classic());
  s.precision(6);
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
    << "\" viewBox=\"0 0 " << W << ' ' << H << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s << "<text x=\"" << W / 2 << "\" y=\"28\" text-anchor=\"middle\" font-size=\"15\">" << title
    << "</text>\n";
  s << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << plot_w << "\" height=\""
    << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n";

  for (int j = 0; j <= 5; ++j) {
    const double v = lo + (hi - lo) * j / 5.0;
    const double y = ypix(v);
    s << "<line x1=\"" << left - 5 << "\" y1=\"" << y << "\" x2=\"" << left << "\" y2=\"" << y
      << "\" stroke=\"black\"/>\n";
    s << "<text x=\"" << left - 8 << "\" y=\"" << y + 4 << "\" text-anchor=\"end\">"
      << io::format_double(std::round(v * 1e4) / 1e4) << "</text>\n";
  }

  const double ty = ypix(res.separation_truth);
  s << "<line class=\"truth\" x1=\"" << left << "\" y1=\"" << ty << "\" x2=\"" << left + plot_w
    << "\" y2=\"" << ty << "\" stroke=\"gray\" stroke-dasharray=\"6,4\"/>\n";

  struct Marker {
    const char* name;
    const char* colour;
    double ThresholdRow::*member;
  };
  const Marker markers[] = {{"tau_theoretical", "#d62728", &ThresholdRow::tau_theoretical},
                            {"tau_bonferroni", "#9467bd", &ThresholdRow::tau_bonferroni},
                            {"q_emp", "#1f77b4", &ThresholdRow::q_empirical},
                            {"q_emp_max", "#2ca02c", &ThresholdRow::q_empirical_maxtest}};

  for (std::size_t i = 0; i < K; ++i) {
    const auto& b = boxes[i];
    const double x = xpix(i);
    s << "<g class=\"box\" data-k=\"" << io::format_double(res.thresholds[i].k) << "\">\n";
    s << "<line x1=\"" << x << "\" y1=\"" << ypix(b.whisker_lo) << "\" x2=\"" << x << "\" y2=\""
      << ypix(b.q1) << "\" stroke=\"black\"/>\n";
    s << "<line x1=\"" << x << "\" y1=\"" << ypix(b.q3) << "\" x2=\"" << x << "\" y2=\""
      << ypix(b.whisker_hi) << "\" stroke=\"black\"/>\n";
    s << "<rect x=\"" << x - box_w / 2 << "\" y=\"" << ypix(b.q3) << "\" width=\"" << box_w
      << "\" height=\"" << std::max(ypix(b.q1) - ypix(b.q3), 0.5)
      << "\" fill=\"#dddddd\" stroke=\"black\"/>\n";
    s << "<line x1=\"" << x - box_w / 2 << "\" y1=\"" << ypix(b.median) << "\" x2=\""
      << x + box_w / 2 << "\" y2=\"" << ypix(b.median) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    for (double o : b.outliers)
      s << "<circle cx=\"" << x << "\" cy=\"" << ypix(o) << "\" r=\"2\" fill=\"none\" stroke=\"black\"/>\n";
    int slot = 0;
    for (const auto& m : markers) {
      const double v = res.thresholds[i].*m.member;
      const double mx = x + box_w / 2 + 6 + 8 * slot++;
      const double my = ypix(v);
      s << "<polygon class=\"threshold " << m.name << "\" points=\"" << mx - 4 << ',' << my - 4
        << ' ' << mx + 4 << ',' << my - 4 << ' ' << mx << ',' << my + 3 << "\" fill=\""
        << m.colour << "\"><title>" << m.name << " = " << io::format_double(v)
        << "</title></polygon>\n";
      if (v > hi)
        s << "<text x=\"" << mx << "\" y=\"" << top - 6 - 10 * (slot - 1)
          << "\" font-size=\"9\" text-anchor=\"middle\" fill=\"" << m.colour << "\">"
          << io::format_double(std::round(v * 100) / 100) << "</text>\n";
    }
    s << "</g>\n";
    s << "<text x=\"" << x << "\" y=\"" << top + plot_h + 18 << "\" text-anchor=\"middle\">"
      << detail::k_label(res.thresholds[i].k) << "</text>\n";
  }
  s << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << H - 15
    << "\" text-anchor=\"middle\">k</text>\n";

  const double lx = left + plot_w + 20;
  double ly = top + 10;
  for (const auto& m : markers) {
    s << "<polygon points=\"" << lx - 4 << ',' << ly - 4 << ' ' << lx + 4 << ',' << ly - 4 << ' '
      << lx << ',' << ly + 3 << "\" fill=\"" << m.colour << "\"/>\n";
    s << "<text x=\"" << lx + 10 << "\" y=\"" << ly + 4 << "\">" << m.name << "</text>\n";
    ly += 20;
  }
  s << "<line x1=\"" << lx - 6 << "\" y1=\"" << ly << "\" x2=\"" << lx + 6 << "\" y2=\"" << ly
    << "\" stroke=\"gray\" stroke-dasharray=\"6,4\"/>\n";
  s << "<text x=\"" << lx + 10 << "\" y=\"" << ly + 4 << "\">truth = "
    << io::format_double(std::round(res.separation_truth * 1e4) / 1e4) << "</text>\n";
  s << "</svg>\n";
  return s.str();
}

/// stats.csv, thresholds.csv, summary.csv, calib.csv and optionally boxplot.svg.
inline void write_simulation(const std::filesystem::path& dir, const SimResult& res,
                             bool svg, const std::string& title) {
  std::filesystem::create_directories(dir);
  write_stats_csv((dir / "stats.csv").string(), res);
  write_thresholds_csv((dir / "thresholds.csv").string(), res);
  write_summary_csv((dir / "summary.csv").string(), res);
  io::write_calibration((dir / "calib.csv").string(), calibration_entries(res));
  if (svg) {
    std::ofstream out(dir / "boxplot.svg");
    if (!out) throw DataError("cannot write '" + (dir / "boxplot.svg").string() + "'");
    out << boxplot_svg(res, title);
  }
}

}  // namespace mgof::report

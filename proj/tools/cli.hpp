#pragma once

// Command-line front end. run_cli() is callable in-process so that the test
// suite can drive every subcommand without spawning processes.

#include <mgof/mgof.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace mgof::cli {

enum ExitCode : int { kAccept = 0, kUsage = 1, kData = 2, kReject = 3 };

/// Problem description shared by test, calibrate and constants.
struct ProblemFlags {
  std::string null_spec = "lognormal:0:1";
  std::string error_spec = "pareto:2";
  double c = 0.5;
  std::string weight = "unit";

  void bind(CLI::App& app) {
    app.add_option("--null", null_spec, "null density, e.g. lognormal:0:1")->capture_default_str();
    app.add_option("--error", error_spec, "error density, e.g. pareto:2")->capture_default_str();
    app.add_option("--c", c, "real part of the Mellin line")->capture_default_str();
    app.add_option("--weight", weight, "unit | survival | derivative:<beta>")
        ->capture_default_str();
  }

  TestProblem make() const {
    return TestProblem(c, WeightFunction::parse(weight, c), catalog::parse(null_spec),
                       catalog::parse(error_spec));
  }
};

struct TestFlags {
  ProblemFlags problem;
  std::string data;
  std::optional<double> k;
  std::string collection;
  double alpha = 0.1;
  std::string mode = "theoretical";
  double scale = 1.0;
  double p = 2.0;
  std::string calib;
  std::size_t B = 1000;
  std::uint64_t seed = 0;
  unsigned jobs = default_jobs();
  std::string out = ".";
  std::string log_base = "natural";
};

struct CalibrateFlags {
  ProblemFlags problem;
  std::optional<double> k;
  std::string collection;
  std::size_t n = 100;
  double alpha = 0.1;
  std::size_t B = 1000;
  std::uint64_t seed = 0;
  unsigned jobs = default_jobs();
  std::string out = ".";
  std::string log_base = "natural";
};

struct SimulateFlags {
  std::string preset;
  std::optional<int> example;
  std::vector<std::size_t> n;
  std::optional<std::size_t> reps;
  std::vector<double> k_grid;
  std::optional<double> alpha;
  std::optional<double> scale;
  std::optional<std::size_t> B;
  std::optional<double> p;
  std::optional<double> c;
  std::string null_spec;
  std::string alt_spec;
  std::string error_spec;
  std::string weight;
  std::uint64_t seed = 0;
  unsigned jobs = default_jobs();
  std::string out = "sim";
  bool no_svg = false;
  bool save_samples = false;
};

struct RatesFlags {
  std::string reg = "os";
  double s = 2.0;
  double radius = 1.0;
  std::string err = "os";
  double err_param = 1.0;
  double a = 0.0;
  std::vector<double> n_list{1e3, 1e4, 1e5, 1e6, 1e7, 1e8, 1e9};
  std::string collection = "none";
  std::size_t grid_points = 256;
  std::string out = ".";
};

struct ConstantsFlags {
  ProblemFlags problem;
  std::vector<double> k{1.0};
  std::size_t n = 100;
  double alpha = 0.1;
  double p = 2.0;
  std::size_t collection_size = 1;
  double scale = 1.0;
  std::string out = ".";
};

namespace detail {

inline LogBase parse_log_base(const std::string& s) {
  if (s == "natural") return LogBase::Natural;
  if (s == "two") return LogBase::Two;
  throw PreconditionError("--log-base must be natural or two");
}

inline std::filesystem::path out_file(const std::string& dir, const char* name) {
  std::filesystem::create_directories(dir);
  return std::filesystem::path(dir) / name;
}

inline std::string fmt(double x) { return io::format_double(x); }

/// Seed from --seed, else MELLIN_GOF_SEED, else 0.
inline std::uint64_t resolve_seed(const CLI::Option* opt, std::uint64_t flag_value) {
  if (opt->count() > 0) return flag_value;
  if (const char* env = std::getenv("MELLIN_GOF_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw PreconditionError(std::string("MELLIN_GOF_SEED is not an unsigned integer: ") + env);
  }
  return 0;
}

/// Reads `key = value` lines (with # comments) and turns every key not
/// already given on the command line into `--key value`. Unknown keys are
/// left for the parser to reject.
inline std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::string path;
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw CLI::ArgumentMismatch("--config needs a file name");
      path = args[++i];
    } else if (args[i].starts_with("--config=")) {
      path = args[i].substr(9);
    } else {
      kept.push_back(args[i]);
    }
  }
  if (path.empty()) return kept;
  std::ifstream in(path);
  if (!in) throw DataError("cannot open config file '" + path + "'");
  std::set<std::string> given;
  for (const auto& a : kept)
    if (a.starts_with("--")) given.insert(a.substr(2, a.find('=') == std::string::npos
                                                         ? std::string::npos
                                                         : a.find('=') - 2));
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto body = io::trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string_view::npos)
      throw DataError(path + ":" + std::to_string(lineno) + ": expected key = value");
    const std::string key(io::trim(body.substr(0, eq)));
    const std::string value(io::trim(body.substr(eq + 1)));
    if (key.empty())
      throw DataError(path + ":" + std::to_string(lineno) + ": empty key");
    if (given.contains(key)) continue;
    if (value == "true") {
      kept.push_back("--" + key);
    } else {
      kept.push_back("--" + key);
      kept.push_back(value);
    }
  }
  return kept;
}

}  // namespace detail

inline int cmd_test(const TestFlags& f, std::uint64_t seed, std::ostream& out) {
  const auto values = io::read_observations(f.data);
  const Sample sample(values);
  const TestProblem problem = f.problem.make();
  require(f.k.has_value() != !f.collection.empty(), "give exactly one of --k and --collection");
  require(f.mode == "theoretical" || f.mode == "bonferroni" || f.mode == "empirical",
          "--mode must be theoretical, bonferroni or empirical");
  const std::vector<double> ks =
      f.k ? std::vector<double>{*f.k}
          : parse_collection(f.collection, sample.n(), detail::parse_log_base(f.log_base)).members;

  // empirical quantiles: from a calibration cache when given, else simulated now
  std::vector<double> quantiles;
  std::size_t B = f.B;
  if (f.mode == "empirical") {
    if (!f.calib.empty()) {
      const auto entries = io::read_calibration(f.calib);
      for (double k : ks) {
        const io::CalibrationEntry* hit = nullptr;
        for (const auto& e : entries)
          if (std::abs(e.k - k) <= 1e-12 * std::max(1.0, k) && e.n == sample.n() &&
              std::abs(e.alpha - f.alpha) <= 1e-12)
            hit = &e;
        if (!hit)
          throw DataError("calibration file '" + f.calib + "' has no entry for k = " +
                          detail::fmt(k) + ", n = " + std::to_string(sample.n()) +
                          ", alpha = " + detail::fmt(f.alpha));
        quantiles.push_back(hit->quantile);
        B = hit->B;
      }
    } else {
      quantiles = simulate_null(problem, ks, sample.n(), f.B, seed, f.jobs).quantiles(f.alpha);
    }
  }

  std::vector<TestOutcome> outcomes;
  bool reject = false;
  double dk = 1.0;
  if (f.k) {
    ThresholdMode m = mode::Theoretical{};
    if (f.mode == "bonferroni") m = mode::TheoreticalBonferroni{f.p, 1};
    if (f.mode == "empirical") m = mode::Empirical{quantiles.front(), B};
    const auto o = test_single(sample, problem, model_constants(problem, f.p), *f.k, f.alpha,
                               m, f.scale);
    outcomes.push_back(o);
    reject = o.reject;
  } else {
    const Collection coll = explicit_collection(ks);
    MaxTestMode m = maxmode::Theoretical{};
    if (f.mode == "empirical") m = maxmode::Empirical{quantiles, B};
    const auto o = max_test(sample, problem, coll, f.alpha, f.p, m, f.scale);
    outcomes = o.per_k;
    reject = o.reject;
    dk = o.delta_K;
  }

  io::CsvWriter csv(detail::out_file(f.out, "report.csv").string(),
                    {"k", "statistic", "threshold", "alpha", "mode", "reject"});
  out << "n = " << sample.n() << ", mode = " << f.mode;
  if (!f.k) out << ", |K| = " << ks.size() << ", delta_K = " << detail::fmt(dk);
  out << '\n';
  for (const auto& o : outcomes) {
    csv.row({detail::fmt(o.k), detail::fmt(o.statistic), detail::fmt(o.threshold),
             detail::fmt(o.alpha), mode_name(o.mode), o.reject ? "1" : "0"});
    out << "k = " << detail::fmt(o.k) << "  statistic = " << detail::fmt(o.statistic)
        << "  threshold = " << detail::fmt(o.threshold) << (o.reject ? "  reject" : "  accept")
        << '\n';
  }
  out << "decision: " << (reject ? "reject H0" : "accept H0") << '\n';
  return reject ? kReject : kAccept;
}

inline int cmd_calibrate(const CalibrateFlags& f, std::uint64_t seed, std::ostream& out) {
  const TestProblem problem = f.problem.make();
  require(f.k.has_value() != !f.collection.empty(), "give exactly one of --k and --collection");
  require(f.alpha > 0.0 && f.alpha < 1.0, "--alpha must lie in (0, 1)");
  const std::vector<double> ks =
      f.k ? std::vector<double>{*f.k}
          : parse_collection(f.collection, f.n, detail::parse_log_base(f.log_base)).members;
  const auto dist = simulate_null(problem, ks, f.n, f.B, seed, f.jobs);
  std::vector<io::CalibrationEntry> entries;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    entries.push_back({ks[i], f.n, f.alpha, f.B, seed, dist.quantile(i, f.alpha)});
    out << "k = " << detail::fmt(ks[i]) << "  quantile = " << detail::fmt(entries.back().quantile)
        << '\n';
  }
  io::write_calibration(detail::out_file(f.out, "calib.csv").string(), entries);
  return kAccept;
}

inline int cmd_simulate(const SimulateFlags& f, std::uint64_t seed, std::ostream& out) {
  if (!f.preset.empty() && f.preset != "paper-sec6")
    throw PreconditionError("unknown preset '" + f.preset + "' (known: paper-sec6)");
  const bool preset = !f.preset.empty();
  if (!preset && f.example) throw PreconditionError("--example requires --preset paper-sec6");

  std::vector<int> examples{0};
  if (preset) examples = f.example ? std::vector<int>{*f.example} : std::vector<int>{1, 2};
  std::vector<std::size_t> ns = f.n;
  if (ns.empty()) ns = preset ? std::vector<std::size_t>{100, 500} : std::vector<std::size_t>{100};
  const bool nested = examples.size() * ns.size() > 1;

  for (int ex : examples) {
    for (std::size_t n : ns) {
      SimConfig cfg = preset ? paper_sec6_config(ex, n) : SimConfig{};
      cfg.n = n;
      cfg.seed = seed;
      if (f.reps) cfg.reps = *f.reps;
      if (!f.k_grid.empty()) cfg.k_grid = f.k_grid;
      if (f.alpha) cfg.alpha = *f.alpha;
      if (f.scale) cfg.scale = *f.scale;
      if (f.B) cfg.calib_B = *f.B;
      if (f.p) cfg.p = *f.p;
      if (f.c) cfg.c = *f.c;
      if (!f.null_spec.empty()) cfg.null_name = f.null_spec;
      if (!f.error_spec.empty()) cfg.error_name = f.error_spec;
      if (!f.weight.empty()) cfg.weight = f.weight;
      if (!f.alt_spec.empty()) cfg.alt_name = f.alt_spec;
      else if (!preset) cfg.alt_name = cfg.null_name;
      cfg.validate();

      const auto res = run_simulation(cfg, f.jobs);
      std::filesystem::path dir(f.out);
      std::string title = "alt " + cfg.alt_name + ", null " + cfg.null_name + ", n = " +
                          std::to_string(n);
      if (nested) {
        dir /= (ex ? "example" + std::to_string(ex) + "_" : std::string()) + "n" +
               std::to_string(n);
      }
      if (ex) title = "Example " + std::to_string(ex) + ": " + title;
      report::write_simulation(dir, res, !f.no_svg, title);
      if (f.save_samples) {
        std::filesystem::create_directories(dir / "samples");
        for (std::size_t r = 0; r < cfg.reps; ++r) {
          const auto s = replication_sample(cfg, r);
          io::write_observations((dir / "samples" / ("rep_" + std::to_string(r) + ".txt")).string(),
                                 {s.values().begin(), s.values().end()});
        }
      }
      out << dir.string() << ": separation_truth = " << detail::fmt(res.separation_truth)
          << ", delta_K = " << detail::fmt(res.delta_K) << '\n';
      for (const auto& r : res.rejection_rates)
        out << "  " << r.mode << " " << detail::fmt(r.rate) << '\n';
    }
  }
  return kAccept;
}

inline int cmd_rates(const RatesFlags& f, std::ostream& out) {
  auto kind = [](const std::string& s, const char* what) {
    if (s == "os") return SmoothnessKind::Ordinary;
    if (s == "ss") return SmoothnessKind::Super;
    throw PreconditionError(std::string(what) + " must be os or ss");
  };
  require(!f.n_list.empty(), "--n-list must not be empty");
  const RegularityClass reg{kind(f.reg, "--reg"), f.s, f.radius};
  const ErrorSmoothness err{kind(f.err, "--err"), f.err_param};
  CollectionRegime regime = CollectionRegime::None;
  if (f.collection == "naive") regime = CollectionRegime::Naive;
  else if (f.collection == "geometric") regime = CollectionRegime::Geometric;
  else if (f.collection == "loglog") regime = CollectionRegime::LogLog;
  else require(f.collection == "none", "--collection must be none, naive, geometric or loglog");

  const auto predicted = rate_order(reg, err, f.a, f.n_list, regime);
  const PenaltyModel model = model_penalty(err, f.a);
  const std::string name = regime_name(reg, err) +
                           (regime == CollectionRegime::None ? "" : "/" + f.collection);

  io::CsvWriter csv(detail::out_file(f.out, "rates.csv").string(),
                    {"n", "k_star", "rho2_star", "k_pred", "rho2_pred", "regime"});
  std::vector<double> ln_n, ln_k, ln_r, ln_kp, ln_rp;
  for (std::size_t i = 0; i < f.n_list.size(); ++i) {
    const double n = f.n_list[i];
    KStar ks;
    if (regime == CollectionRegime::None) {
      ks = k_star(reg, model, n, default_k_grid(n, f.grid_points));
    } else {
      const auto nn = static_cast<std::size_t>(n);
      const Collection coll =
          regime == CollectionRegime::Naive ? build_collection(CollectionKind::Naive, nn)
          : regime == CollectionRegime::Geometric
              ? build_collection(CollectionKind::Geometric, nn)
              : build_collection(CollectionKind::LogLog, nn, 1.0);
      const auto ar = adaptive_radius(reg, coll, model, n);
      ks = {ar.k_sel, ar.r2};
    }
    csv.row({detail::fmt(n), detail::fmt(ks.k_star), detail::fmt(ks.rho2_star),
             detail::fmt(predicted[i].k_pred), detail::fmt(predicted[i].rho2_pred), name});
    ln_n.push_back(std::log(n));
    ln_k.push_back(std::log(ks.k_star));
    ln_r.push_back(std::log(ks.rho2_star));
    ln_kp.push_back(std::log(predicted[i].k_pred));
    ln_rp.push_back(std::log(predicted[i].rho2_pred));
  }

  io::CsvWriter slopes(detail::out_file(f.out, "slopes.csv").string(),
                       {"quantity", "fitted_slope", "predicted_slope"});
  auto slope = [&](const std::vector<double>& y) {
    for (double v : y)
      if (!std::isfinite(v)) return std::numeric_limits<double>::quiet_NaN();
    return ln_n.size() >= 2 ? numerics::ls_slope(ln_n, y)
                            : std::numeric_limits<double>::quiet_NaN();
  };
  const double sk = slope(ln_k), skp = slope(ln_kp), sr = slope(ln_r), srp = slope(ln_rp);
  slopes.row({"k_star", detail::fmt(sk), detail::fmt(skp)});
  slopes.row({"rho2_star", detail::fmt(sr), detail::fmt(srp)});
  out << "regime " << name << '\n'
      << "log-log slope of k_star:    fitted " << detail::fmt(sk) << ", predicted "
      << detail::fmt(skp) << '\n'
      << "log-log slope of rho2_star: fitted " << detail::fmt(sr) << ", predicted "
      << detail::fmt(srp) << '\n';
  return kAccept;
}

inline int cmd_constants(const ConstantsFlags& f, std::ostream& out) {
  const TestProblem problem = f.problem.make();
  const auto mc = model_constants(problem, f.p);
  out << "c_U = " << detail::fmt(mc.c_u) << "  v1 = " << detail::fmt(mc.v1)
      << "  v2 = " << detail::fmt(mc.v2) << "  vp = " << detail::fmt(mc.vp)
      << "  p = " << detail::fmt(mc.p) << '\n';
  io::CsvWriter csv(detail::out_file(f.out, "constants.csv").string(),
                    {"k", "delta4", "deltainf", "tau_theoretical", "tau_bonferroni"});
  for (double k : f.k) {
    const double d4 = delta4(problem, k);
    const double di = deltainf(problem, k);
    csv.row({detail::fmt(k), detail::fmt(d4), detail::fmt(di),
             detail::fmt(tau_k(mc, d4, di, k, f.n, f.alpha, f.scale)),
             detail::fmt(tau_k_bonferroni(mc, d4, di, k, f.n, f.alpha, f.collection_size,
                                          f.scale))});
  }
  return kAccept;
}

/// Parses argv and dispatches. Exit codes: 0 accept, 3 reject, 1 usage, 2 data.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mellin-transform goodness-of-fit tests under multiplicative measurement error",
               "mgof"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "mgof 1.0.0");

  TestFlags tf;
  auto* test = app.add_subcommand("test", "test a data file against the null density");
  tf.problem.bind(*test);
  test->add_option("data,--data", tf.data, "newline-delimited positive observations")
      ->required();
  test->add_option("--k", tf.k, "single dimension parameter");
  test->add_option("--collection", tf.collection,
                   "naive | geometric | loglog:<m> | explicit:<k1,k2,...>");
  test->add_option("--alpha", tf.alpha)->capture_default_str();
  test->add_option("--mode", tf.mode, "theoretical | bonferroni | empirical")
      ->capture_default_str();
  test->add_option("--scale", tf.scale, "multiplier for theoretical thresholds")
      ->capture_default_str();
  test->add_option("--p", tf.p, "moment order of the Bonferroni thresholds")
      ->capture_default_str();
  test->add_option("--calib", tf.calib, "calibration cache written by `calibrate`");
  test->add_option("--B", tf.B, "calibration draws when no cache is given")
      ->capture_default_str();
  auto* test_seed = test->add_option("--seed", tf.seed);
  test->add_option("--jobs", tf.jobs);
  test->add_option("--out", tf.out, "directory for report.csv")->capture_default_str();
  test->add_option("--log-base", tf.log_base, "natural | two")->capture_default_str();

  CalibrateFlags cf;
  auto* calibrate = app.add_subcommand("calibrate", "simulate empirical null quantiles");
  cf.problem.bind(*calibrate);
  calibrate->add_option("--k", cf.k);
  calibrate->add_option("--collection", cf.collection);
  calibrate->add_option("--n", cf.n)->capture_default_str();
  calibrate->add_option("--alpha", cf.alpha)->capture_default_str();
  calibrate->add_option("--B", cf.B)->capture_default_str();
  auto* calib_seed = calibrate->add_option("--seed", cf.seed);
  calibrate->add_option("--jobs", cf.jobs);
  calibrate->add_option("--out", cf.out, "directory for calib.csv")->capture_default_str();
  calibrate->add_option("--log-base", cf.log_base)->capture_default_str();

  SimulateFlags sf;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo replication study");
  simulate->add_option("--preset", sf.preset, "paper-sec6");
  simulate->add_option("--example", sf.example, "1 (alt = null) or 2 (alt = 2x on (0,1))");
  simulate->add_option("--n", sf.n, "sample size(s)")->delimiter(',');
  simulate->add_option("--reps", sf.reps);
  simulate->add_option("--k", sf.k_grid, "k grid, comma separated")->delimiter(',');
  simulate->add_option("--alpha", sf.alpha);
  simulate->add_option("--scale", sf.scale);
  simulate->add_option("--B", sf.B, "calibration draws per k");
  simulate->add_option("--p", sf.p);
  simulate->add_option("--c", sf.c);
  simulate->add_option("--null", sf.null_spec);
  simulate->add_option("--alt", sf.alt_spec);
  simulate->add_option("--error", sf.error_spec);
  simulate->add_option("--weight", sf.weight);
  auto* sim_seed = simulate->add_option("--seed", sf.seed);
  simulate->add_option("--jobs", sf.jobs);
  simulate->add_option("--out", sf.out)->capture_default_str();
  simulate->add_flag("--no-svg", sf.no_svg);
  simulate->add_flag("--save-samples", sf.save_samples, "write each replication's sample");

  RatesFlags rf;
  auto* rates = app.add_subcommand("rates", "oracle k* sweep against tabulated orders");
  rates->add_option("--reg", rf.reg, "os | ss")->capture_default_str();
  rates->add_option("--s", rf.s)->capture_default_str();
  rates->add_option("--R", rf.radius)->capture_default_str();
  rates->add_option("--err", rf.err, "os | ss")->capture_default_str();
  rates->add_option("--gamma,--sigma", rf.err_param, "error decay parameter")
      ->capture_default_str();
  rates->add_option("--a", rf.a, "weight exponent")->capture_default_str();
  rates->add_option("--n-list", rf.n_list)->delimiter(',')->expected(0, -1);
  rates->add_option("--collection", rf.collection, "none | naive | geometric | loglog")
      ->capture_default_str();
  rates->add_option("--grid-points", rf.grid_points)->capture_default_str();
  rates->add_option("--out", rf.out)->capture_default_str();

  ConstantsFlags kf;
  auto* constants = app.add_subcommand("constants", "penalties and theoretical thresholds");
  kf.problem.bind(*constants);
  constants->add_option("--k", kf.k)->delimiter(',');
  constants->add_option("--n", kf.n)->capture_default_str();
  constants->add_option("--alpha", kf.alpha)->capture_default_str();
  constants->add_option("--p", kf.p)->capture_default_str();
  constants->add_option("--collection-size", kf.collection_size)->capture_default_str();
  constants->add_option("--scale", kf.scale)->capture_default_str();
  constants->add_option("--out", kf.out)->capture_default_str();

  for (auto* sub : {test, calibrate, simulate, rates, constants})
    sub->add_option("--config", "flat key = value file; command-line flags win");

  try {
    if (!args.empty()) {
      std::vector<std::string> tail(args.begin() + 1, args.end());
      tail = detail::expand_config(std::move(tail));
      args.resize(1);
      args.insert(args.end(), tail.begin(), tail.end());
    }
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kAccept;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kAccept;
  } catch (const CLI::CallForVersion&) {
    out << "mgof 1.0.0\n";
    return kAccept;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << '\n';
    return kData;
  }

  try {
    if (test->parsed()) return cmd_test(tf, detail::resolve_seed(test_seed, tf.seed), out);
    if (calibrate->parsed())
      return cmd_calibrate(cf, detail::resolve_seed(calib_seed, cf.seed), out);
    if (simulate->parsed())
      return cmd_simulate(sf, detail::resolve_seed(sim_seed, sf.seed), out);
    if (rates->parsed()) return cmd_rates(rf, out);
    if (constants->parsed()) return cmd_constants(kf, out);
  } catch (const PreconditionError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kData;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kData;
  }
  return kUsage;
}

inline int run_cli(int argc, char** argv) {
  return run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}

}  // namespace mgof::cli

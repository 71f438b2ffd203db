// Command-line front end: every pipeline as a subcommand with CSV/JSON
// output suitable for external plotting.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zetamap/dcrt.hpp"
#include "zetamap/dynamics.hpp"
#include "zetamap/errors.hpp"
#include "zetamap/reference_data.hpp"
#include "zetamap/zero_finder.hpp"
#include "zetamap/zeros.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace zetamap;

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// 17 significant digits: lossless binary64 round-trip.
std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct OutputOptions {
  std::string path = "-";
  std::string format = "csv";
};

void add_output_options(CLI::App* cmd, OutputOptions* out) {
  cmd->add_option("--out", out->path, "Output file, or - for stdout")
      ->capture_default_str();
  cmd->add_option("--format", out->format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

void write_output(const OutputOptions& opts, const std::string& payload) {
  if (opts.path == "-" || opts.path.empty()) {
    std::cout << payload;
    if (!std::cout) throw IoError("failed to write to stdout");
    return;
  }
  std::ofstream out(opts.path, std::ios::binary);
  if (!out) throw IoError("cannot open output file: " + opts.path);
  out << payload;
  out.flush();
  if (!out) throw IoError("failed to write output file: " + opts.path);
}

std::string method_name(ZeroMethod method) {
  switch (method) {
    case ZeroMethod::closed_form_estimate: return "estimator";
    case ZeroMethod::damped_map: return "map";
    case ZeroMethod::reference_table: return "reference";
  }
  return "unknown";
}

std::string classification_name(const Classification& c) {
  switch (c.kind) {
    case OrbitClass::fixed_point: return "fixed_point";
    case OrbitClass::periodic: return "periodic:" + std::to_string(c.period);
    case OrbitClass::aperiodic: return "aperiodic";
    case OrbitClass::escaped: return "escaped:" + std::to_string(c.escaped_at);
  }
  return "unknown";
}

json classification_json(const Classification& c) {
  json j;
  switch (c.kind) {
    case OrbitClass::fixed_point: j["kind"] = "fixed_point"; break;
    case OrbitClass::periodic: j["kind"] = "periodic"; j["period"] = c.period; break;
    case OrbitClass::aperiodic: j["kind"] = "aperiodic"; break;
    case OrbitClass::escaped: j["kind"] = "escaped"; j["escaped_at"] = c.escaped_at; break;
  }
  return j;
}

double truncate_digits(double t, int digits) {
  const double scale = std::pow(10.0, digits);
  return std::trunc(t * scale) / scale;
}

// --- estimate -------------------------------------------------------------

struct EstimateArgs {
  std::int64_t n_from = 1;
  std::int64_t n_to = 1;
  OutputOptions out;
};

int run_estimate(const EstimateArgs& args) {
  if (args.n_from < 1 || args.n_from > args.n_to) {
    std::cerr << "estimate: need 1 <= --n-from <= --n-to\n";
    return kExitUsage;
  }
  if (args.out.format == "json") {
    json rows = json::array();
    for (std::int64_t n = args.n_from; n <= args.n_to; ++n) {
      rows.push_back({{"n", n}, {"t_hat", estimate_zero_value(n)}});
    }
    write_output(args.out, json{{"rows", rows}}.dump(2) + "\n");
  } else {
    std::string csv = "n,t_hat\n";
    for (std::int64_t n = args.n_from; n <= args.n_to; ++n) {
      csv += std::to_string(n) + "," + fmt_double(estimate_zero_value(n)) + "\n";
    }
    write_output(args.out, csv);
  }
  return 0;
}

// --- solve ----------------------------------------------------------------

struct SolveArgs {
  std::int64_t n = 0;
  std::int64_t n_from = 0;
  std::int64_t n_to = 0;
  double delta = 0.0;
  bool has_delta = false;
  bool auto_delta = false;
  int iters = 20;
  double t0 = 1.0;
  double step_tol = 1e-10;
  int truncate = -1;
  OutputOptions out;
};

int run_solve(const SolveArgs& args) {
  std::int64_t lo = args.n, hi = args.n;
  if (args.n == 0) {
    lo = args.n_from;
    hi = args.n_to;
  }
  if (lo < 1 || lo > hi) {
    std::cerr << "solve: need --n, or 1 <= --n-from <= --n-to\n";
    return kExitUsage;
  }
  if (args.has_delta == args.auto_delta) {
    std::cerr << "solve: need exactly one of --delta / --auto-delta\n";
    return kExitUsage;
  }

  std::vector<ZeroEstimate> rows;
  rows.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t n = lo; n <= hi; ++n) {
    double delta = args.delta;
    if (args.auto_delta) {
      // stay just on the stable side of the boundary: at the boundary itself
      // the fixed point has already collided with the argument jump
      delta = std::max(first_bifurcation_delta(n, 1.0, 50, 1e-6) - 5e-6, 0.0);
    }
    ZeroEstimate z = solve_zero(n, delta, args.iters, args.t0, args.step_tol);
    if (args.truncate >= 0) z.t = truncate_digits(z.t, args.truncate);
    rows.push_back(z);
  }

  if (args.out.format == "json") {
    json jrows = json::array();
    for (const auto& z : rows) {
      jrows.push_back({{"n", z.n},
                       {"t", z.t},
                       {"delta", z.delta},
                       {"iterations", z.iterations},
                       {"converged", z.converged},
                       {"final_step", z.final_step}});
    }
    write_output(args.out, json{{"rows", jrows}}.dump(2) + "\n");
  } else {
    std::string csv = "n,t,delta,iterations,converged,final_step\n";
    for (const auto& z : rows) {
      csv += std::to_string(z.n) + "," + fmt_double(z.t) + "," + fmt_double(z.delta) +
             "," + std::to_string(z.iterations) + "," + (z.converged ? "true" : "false") +
             "," + fmt_double(z.final_step) + "\n";
    }
    write_output(args.out, csv);
  }
  return 0;
}

// --- dcrt -----------------------------------------------------------------

struct DcrtArgs {
  std::int64_t r = 0;
  std::int64_t k_max = 1000;
  std::string zeros_spec;
  std::int64_t n_zeros = 10000;
  double delta = 0.0;
  bool has_delta = false;
  std::optional<double> perturb;
  std::uint64_t seed = 1;
  bool normalize = false;
  double ratio = 5.0;
  int truncate = -1;
  OutputOptions out;
};

std::vector<double> load_dcrt_zeros(const DcrtArgs& args, ZeroSource* source) {
  std::vector<double> zeros;
  if (args.zeros_spec.rfind("file:", 0) == 0) {
    const ZeroTable table = load_zero_table(args.zeros_spec.substr(5));
    if (static_cast<std::int64_t>(table.values.size()) < args.n_zeros) {
      throw IoError("zero table holds fewer than --n-zeros entries");
    }
    zeros.assign(table.values.begin(), table.values.begin() + args.n_zeros);
    *source = ZeroSource::reference_table;
  } else if (args.zeros_spec == "estimate") {
    zeros.reserve(static_cast<std::size_t>(args.n_zeros));
    for (std::int64_t n = 1; n <= args.n_zeros; ++n) zeros.push_back(estimate_zero_value(n));
    *source = ZeroSource::closed_form_estimate;
  } else if (args.zeros_spec == "solve") {
    if (!args.has_delta) throw DomainError("--zeros solve requires --delta");
    zeros.reserve(static_cast<std::size_t>(args.n_zeros));
    for (std::int64_t n = 1; n <= args.n_zeros; ++n) {
      zeros.push_back(solve_zero(n, args.delta).t);
    }
    *source = ZeroSource::damped_map;
  } else {
    throw DomainError("--zeros must be file:PATH, estimate, or solve");
  }
  if (args.truncate >= 0) {
    for (double& t : zeros) t = truncate_digits(t, args.truncate);
  }
  if (args.perturb) {
    zeros = perturb_zeros(zeros, *args.perturb, args.seed);
    *source = ZeroSource::perturbed;
  }
  return zeros;
}

int run_dcrt(const DcrtArgs& args) {
  if (args.r < 2 || args.k_max < 2) {
    std::cerr << "dcrt: need --r >= 2 and --k-max >= 2\n";
    return kExitUsage;
  }
  ZeroSource source = ZeroSource::reference_table;
  const std::vector<double> zeros = load_dcrt_zeros(args, &source);

  std::vector<std::int64_t> ks;
  for (std::int64_t k = 2; k <= std::min(args.k_max, args.r - 1); ++k) ks.push_back(k);
  const Spectrum spectrum = dcrt_spectrum(zeros, args.r, std::move(ks), source);
  // the median threshold needs enough points to mean anything
  std::vector<std::pair<std::int64_t, double>> peaks;
  if (spectrum.k_values.size() >= 20) peaks = detect_peaks(spectrum, args.ratio);
  const auto divisors = factor_via_dcrt(args.r, zeros, args.k_max, args.ratio);
  const double norm = args.normalize ? static_cast<double>(spectrum.n_zeros) : 1.0;

  if (args.out.format == "json") {
    json jrows = json::array();
    for (std::size_t i = 0; i < spectrum.k_values.size(); ++i) {
      jrows.push_back({{"k", spectrum.k_values[i]}, {"x", spectrum.x_values[i] / norm}});
    }
    json jpeaks = json::array();
    for (const auto& [k, x] : peaks) jpeaks.push_back({{"k", k}, {"x", x / norm}});
    write_output(args.out, json{{"r", args.r},
                                {"n_zeros", spectrum.n_zeros},
                                {"normalized", args.normalize},
                                {"rows", jrows},
                                {"peaks", jpeaks},
                                {"divisors", divisors}}
                                   .dump(2) +
                               "\n");
  } else {
    std::string csv = "k,X\n";
    for (std::size_t i = 0; i < spectrum.k_values.size(); ++i) {
      csv += std::to_string(spectrum.k_values[i]) + "," +
             fmt_double(spectrum.x_values[i] / norm) + "\n";
    }
    csv += "# peaks:";
    for (const auto& [k, x] : peaks) {
      csv += " " + std::to_string(k) + ":" + fmt_double(x / norm);
    }
    csv += "\n# divisors:";
    for (std::int64_t d : divisors) csv += " " + std::to_string(d);
    csv += "\n";
    write_output(args.out, csv);
  }
  return 0;
}

// --- orbit / bifurcation ----------------------------------------------------

struct OrbitArgs {
  std::int64_t n = 0;
  double delta = 0.0;
  int iters = 500;
  int transient = 200;
  double t0 = 1.0;
  OutputOptions out;
};

int run_orbit(const OrbitArgs& args) {
  if (args.n < 1 || args.transient < 0 || args.transient >= args.iters) {
    std::cerr << "orbit: need --n >= 1 and 0 <= --transient < --iters\n";
    return kExitUsage;
  }
  const OrbitRecord record = orbit(args.n, args.delta, args.iters, args.transient, args.t0);
  if (args.out.format == "json") {
    json jrows = json::array();
    for (std::size_t i = 0; i < record.iterates.size(); ++i) {
      jrows.push_back({{"iteration", i}, {"t", record.iterates[i]}});
    }
    write_output(args.out,
                 json{{"n", record.n},
                      {"delta", record.delta},
                      {"t0", record.t0},
                      {"transient", record.transient_discarded},
                      {"classification", classification_json(record.classification)},
                      {"rows", jrows}}
                         .dump(2) +
                     "\n");
  } else {
    std::string csv = "iteration,t\n";
    for (std::size_t i = 0; i < record.iterates.size(); ++i) {
      csv += std::to_string(i) + "," + fmt_double(record.iterates[i]) + "\n";
    }
    csv += "# classification: " + classification_name(record.classification) + "\n";
    write_output(args.out, csv);
  }
  return 0;
}

struct BifurcationArgs {
  std::int64_t n = 0;
  double delta_from = 0.0;
  double delta_to = 0.0;
  int steps = 0;
  int iters = 500;
  int transient = 200;
  int samples = 100;
  OutputOptions out;
};

int run_bifurcation(const BifurcationArgs& args) {
  if (args.n < 1 || args.steps < 2 || !(args.delta_from < args.delta_to)) {
    std::cerr << "bifurcation: need --n >= 1, --steps >= 2, --delta-from < --delta-to\n";
    return kExitUsage;
  }
  const BifurcationScan scan = bifurcation_scan(args.n, args.delta_from, args.delta_to,
                                                args.steps, args.iters, args.transient,
                                                args.samples);
  if (args.out.format == "json") {
    json jrows = json::array();
    for (std::size_t i = 0; i < scan.delta_grid.size(); ++i) {
      jrows.push_back({{"delta", scan.delta_grid[i]},
                       {"samples", scan.attractor_samples[i]},
                       {"classification", classification_json(scan.classifications[i])}});
    }
    write_output(args.out, json{{"n", scan.n}, {"rows", jrows}}.dump(2) + "\n");
  } else {
    std::string csv = "delta,sample,classification\n";
    for (std::size_t i = 0; i < scan.delta_grid.size(); ++i) {
      const std::string name = classification_name(scan.classifications[i]);
      const std::string delta = fmt_double(scan.delta_grid[i]);
      if (scan.attractor_samples[i].empty()) {
        csv += delta + ",nan," + name + "\n";
      }
      for (double sample : scan.attractor_samples[i]) {
        csv += delta + "," + fmt_double(sample) + "," + name + "\n";
      }
    }
    write_output(args.out, csv);
  }
  return 0;
}

// --- compare / residual -----------------------------------------------------

struct CompareArgs {
  std::string computed;
  std::string reference;
  OutputOptions out;
};

int run_compare(const CompareArgs& args) {
  const ZeroTable computed = load_zero_table(args.computed);
  const ZeroTable reference = load_zero_table(args.reference);
  std::vector<ZeroEstimate> rows;
  rows.reserve(computed.values.size());
  for (std::size_t i = 0; i < computed.values.size(); ++i) {
    ZeroEstimate z;
    z.n = computed.first_index + static_cast<std::int64_t>(i);
    z.t = computed.values[i];
    z.method = ZeroMethod::reference_table;
    rows.push_back(z);
  }
  const ComparisonStats stats = compare_zeros(rows, reference);

  if (args.out.format == "json") {
    json jrows = json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      jrows.push_back({{"n", rows[i].n},
                       {"computed", rows[i].t},
                       {"reference", rows[i].t - stats.per_n_diff[i]},
                       {"diff", stats.per_n_diff[i]}});
    }
    write_output(args.out, json{{"rows", jrows},
                                {"count", stats.count},
                                {"max_abs_diff", stats.max_abs_diff},
                                {"rms_diff", stats.rms_diff}}
                                   .dump(2) +
                               "\n");
  } else {
    std::string csv = "n,computed,reference,diff\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      csv += std::to_string(rows[i].n) + "," + fmt_double(rows[i].t) + "," +
             fmt_double(rows[i].t - stats.per_n_diff[i]) + "," +
             fmt_double(stats.per_n_diff[i]) + "\n";
    }
    csv += "# count: " + std::to_string(stats.count) +
           " max_abs_diff: " + fmt_double(stats.max_abs_diff) +
           " rms_diff: " + fmt_double(stats.rms_diff) + "\n";
    write_output(args.out, csv);
  }
  return 0;
}

struct ResidualArgs {
  std::string zeros;
  double sigma_offset = 1e-6;
  std::int64_t limit = 0;
  OutputOptions out;
};

int run_residual(const ResidualArgs& args) {
  const ZeroTable table = load_zero_table(args.zeros);
  std::int64_t count = static_cast<std::int64_t>(table.values.size());
  if (args.limit > 0) count = std::min(count, args.limit);

  std::string csv = "n,t,residual\n";
  json jrows = json::array();
  for (std::int64_t i = 0; i < count; ++i) {
    const std::int64_t n = table.first_index + i;
    const double t = table.values[static_cast<std::size_t>(i)];
    const double r = exact_residual(t, n, args.sigma_offset);
    if (args.out.format == "json") {
      jrows.push_back({{"n", n}, {"t", t}, {"residual", r}});
    } else {
      csv += std::to_string(n) + "," + fmt_double(t) + "," + fmt_double(r) + "\n";
    }
  }
  if (args.out.format == "json") {
    write_output(args.out, json{{"sigma_offset", args.sigma_offset}, {"rows", jrows}}.dump(2) + "\n");
  } else {
    write_output(args.out, csv);
  }
  return 0;
}

// --- zerotable ---------------------------------------------------------------

struct ZerotableArgs {
  std::int64_t count = 0;
  OutputOptions out;
};

int run_zerotable(const ZerotableArgs& args) {
  if (args.count < 1) {
    std::cerr << "zerotable: need --count >= 1\n";
    return kExitUsage;
  }
  const std::vector<double> zeros = find_zeros(args.count);
  if (args.out.format == "json") {
    write_output(args.out, json{{"rows", zeros}}.dump(2) + "\n");
  } else {
    std::string text;
    text.reserve(zeros.size() * 24);
    for (std::size_t i = 0; i < zeros.size(); ++i) {
      text += std::to_string(i + 1) + " " + fmt_double(zeros[i]) + "\n";
    }
    write_output(args.out, text);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Riemann zeta zeros on the critical line via a damped Lambert-W map"};
  app.require_subcommand(1);

  EstimateArgs est;
  auto* cmd_est = app.add_subcommand("estimate", "Closed-form zero estimates over an index range");
  cmd_est->add_option("--n-from", est.n_from, "First zero index")->required();
  cmd_est->add_option("--n-to", est.n_to, "Last zero index")->required();
  add_output_options(cmd_est, &est.out);

  SolveArgs solve;
  auto* cmd_solve = app.add_subcommand("solve", "Damped-map zeros for one index or a range");
  cmd_solve->add_option("--n", solve.n, "Zero index");
  cmd_solve->add_option("--n-from", solve.n_from, "First zero index");
  cmd_solve->add_option("--n-to", solve.n_to, "Last zero index");
  auto* delta_opt = cmd_solve->add_option("--delta", solve.delta, "Map damping");
  cmd_solve->add_flag("--auto-delta", solve.auto_delta,
                      "Use the first-bifurcation damping per index");
  cmd_solve->add_option("--iters", solve.iters, "Maximum map iterations")->capture_default_str();
  cmd_solve->add_option("--t0", solve.t0, "Initial iterate")->capture_default_str();
  cmd_solve->add_option("--step-tol", solve.step_tol, "Convergence step tolerance")
      ->capture_default_str();
  cmd_solve->add_option("--truncate-digits", solve.truncate,
                        "Truncate t to this many digits after the decimal point");
  add_output_options(cmd_solve, &solve.out);

  DcrtArgs dcrt;
  auto* cmd_dcrt = app.add_subcommand("dcrt", "Cosine-transform spectrum and divisor peaks");
  cmd_dcrt->add_option("--r", dcrt.r, "Transform parameter R")->required();
  cmd_dcrt->add_option("--k-max", dcrt.k_max, "Largest k scanned")->capture_default_str();
  cmd_dcrt->add_option("--zeros", dcrt.zeros_spec, "file:PATH | estimate | solve")->required();
  cmd_dcrt->add_option("--n-zeros", dcrt.n_zeros, "Partial-sum length")->capture_default_str();
  auto* dcrt_delta = cmd_dcrt->add_option("--delta", dcrt.delta, "Damping for --zeros solve");
  cmd_dcrt->add_option("--perturb", dcrt.perturb, "Uniform noise half-width added to zeros");
  cmd_dcrt->add_option("--seed", dcrt.seed, "Perturbation seed")->capture_default_str();
  cmd_dcrt->add_flag("--normalize", dcrt.normalize, "Divide X(k) by the zero count");
  cmd_dcrt->add_option("--ratio", dcrt.ratio, "Peak threshold over the median |X|")
      ->capture_default_str();
  cmd_dcrt->add_option("--truncate-digits", dcrt.truncate,
                       "Truncate zeros to this many digits before transforming");
  add_output_options(cmd_dcrt, &dcrt.out);

  OrbitArgs orbit_args;
  auto* cmd_orbit = app.add_subcommand("orbit", "Iterate sequence of the map for fixed damping");
  cmd_orbit->add_option("--n", orbit_args.n, "Zero index")->required();
  cmd_orbit->add_option("--delta", orbit_args.delta, "Map damping")->required();
  cmd_orbit->add_option("--iters", orbit_args.iters, "Total iterations")->capture_default_str();
  cmd_orbit->add_option("--transient", orbit_args.transient, "Iterations discarded before classification")
      ->capture_default_str();
  cmd_orbit->add_option("--t0", orbit_args.t0, "Initial iterate")->capture_default_str();
  add_output_options(cmd_orbit, &orbit_args.out);

  BifurcationArgs bif;
  auto* cmd_bif = app.add_subcommand("bifurcation", "Attractor samples over a damping grid");
  cmd_bif->add_option("--n", bif.n, "Zero index")->required();
  cmd_bif->add_option("--delta-from", bif.delta_from, "Grid start")->required();
  cmd_bif->add_option("--delta-to", bif.delta_to, "Grid end")->required();
  cmd_bif->add_option("--steps", bif.steps, "Grid points")->required();
  cmd_bif->add_option("--iters", bif.iters, "Total iterations per point")->capture_default_str();
  cmd_bif->add_option("--transient", bif.transient, "Discarded iterations")->capture_default_str();
  cmd_bif->add_option("--samples", bif.samples, "Attractor samples kept per point")
      ->capture_default_str();
  add_output_options(cmd_bif, &bif.out);

  CompareArgs cmp;
  auto* cmd_cmp = app.add_subcommand("compare", "Per-index differences between two zero tables");
  cmd_cmp->add_option("--computed", cmp.computed, "Computed zeros table")->required();
  cmd_cmp->add_option("--reference", cmp.reference, "Reference zeros table")->required();
  add_output_options(cmd_cmp, &cmp.out);

  ResidualArgs res;
  auto* cmd_res = app.add_subcommand("residual", "Phase-equation residuals for a zero table");
  cmd_res->add_option("--zeros", res.zeros, "Zero table")->required();
  cmd_res->add_option("--sigma-offset", res.sigma_offset, "Offset off the critical line")
      ->capture_default_str();
  cmd_res->add_option("--limit", res.limit, "Only check the first N zeros (0 = all)")
      ->capture_default_str();
  add_output_options(cmd_res, &res.out);

  ZerotableArgs zt;
  auto* cmd_zt = app.add_subcommand("zerotable",
                                    "Generate a reference table by Z sign-change search");
  cmd_zt->add_option("--count", zt.count, "Number of zeros")->required();
  add_output_options(cmd_zt, &zt.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  solve.has_delta = delta_opt->count() > 0;
  dcrt.has_delta = dcrt_delta->count() > 0;

  try {
    if (cmd_est->parsed()) return run_estimate(est);
    if (cmd_solve->parsed()) return run_solve(solve);
    if (cmd_dcrt->parsed()) return run_dcrt(dcrt);
    if (cmd_orbit->parsed()) return run_orbit(orbit_args);
    if (cmd_bif->parsed()) return run_bifurcation(bif);
    if (cmd_cmp->parsed()) return run_compare(cmp);
    if (cmd_res->parsed()) return run_residual(res);
    if (cmd_zt->parsed()) return run_zerotable(zt);
  } catch (const TableParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitIo;
  } catch (const IoError& e) {
    std::cerr << e.what() << "\n";
    return kExitIo;
  } catch (const DomainError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}

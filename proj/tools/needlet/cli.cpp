#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "needlet/coeffs.hpp"
#include "needlet/error.hpp"
#include "needlet/field.hpp"
#include "needlet/frame_check.hpp"
#include "needlet/harness.hpp"
#include "needlet/io.hpp"
#include "needlet/needlet.hpp"
#include "needlet/normality.hpp"
#include "needlet/report.hpp"
#include "needlet/rng.hpp"
#include "needlet/spectrum.hpp"
#include "needlet/window.hpp"

namespace needlet::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct SpectrumOptions {
  std::optional<double> alpha;
  std::string g = "const";
  double b0 = 2.0;
  double b1 = 1.0;
  double omega = 1.0;
};

void add_spectrum_options(CLI::App* app, SpectrumOptions& opts, bool alpha_required) {
  auto* alpha = app->add_option("--alpha", opts.alpha, "decay exponent of C_l = g(l) l^-alpha (> 1)");
  if (alpha_required) alpha->required();
  app->add_option("--g", opts.g, "modulation g: const | cosine | file:<path>");
  app->add_option("--g-b0", opts.b0, "cosine modulation: g(l) = b0 + b1 cos(omega l)");
  app->add_option("--g-b1", opts.b1);
  app->add_option("--g-omega", opts.omega);
}

PowerSpectrum make_spectrum(const SpectrumOptions& opts) {
  if (!opts.alpha) throw std::invalid_argument("--alpha is required");
  const double alpha = *opts.alpha;
  if (!(alpha > 1.0)) throw std::invalid_argument("--alpha must be > 1");
  if (opts.g == "const") return PowerSpectrum::power_law(alpha);
  if (opts.g == "cosine") {
    if (!(opts.b0 > std::abs(opts.b1))) throw std::invalid_argument("--g cosine needs --g-b0 > |--g-b1|");
    return PowerSpectrum::cosine(alpha, opts.b0, opts.b1, opts.omega);
  }
  if (opts.g.rfind("file:", 0) == 0) {
    const std::string path = opts.g.substr(5);
    auto spectrum = PowerSpectrum::tabulated(alpha, read_g_table(path));
    return spectrum;
  }
  throw std::invalid_argument("--g must be const, cosine or file:<path> (got '" + opts.g + "')");
}

/// Checks A1 on the range the computation will touch.
void check_a1(const PowerSpectrum& spectrum, std::size_t l_max) {
  const auto report = validate_a1(spectrum, std::max<std::size_t>(l_max, 8));
  if (!report.ok) {
    std::ostringstream msg;
    msg << "--g: modulation is not bounded away from 0 and infinity";
    if (report.offending_index) msg << " (g(" << *report.offending_index << ") is not positive and finite)";
    throw std::invalid_argument(msg.str());
  }
}

/// Every long option of `app` with its effective value, in declaration order.
std::vector<std::pair<std::string, std::string>> resolved_options(const CLI::App* app) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const CLI::Option* opt : app->get_options()) {
    const std::string name = opt->get_single_name();
    if (name == "help" || name == "config" || name.empty()) continue;
    std::string value;
    if (opt->count() > 0) {
      const auto results = opt->reduced_results();
      for (std::size_t i = 0; i < results.size(); ++i) value += (i ? "," : "") + results[i];
    } else {
      value = opt->get_default_str();
    }
    if (value.empty()) continue;
    out.emplace_back(name, value);
  }
  return out;
}

std::string config_text(const CLI::App* app) {
  std::ostringstream s;
  s << "# needlet " << app->get_name() << '\n';
  for (const auto& [k, v] : resolved_options(app)) s << k << " = " << v << '\n';
  return s.str();
}

json config_json(const CLI::App* app) {
  json j = json::object();
  j["command"] = app->get_name();
  for (const auto& [k, v] : resolved_options(app)) j[k] = v;
  return j;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoError(path.string() + ": cannot write file");
  out << text;
  if (!out) throw IoError(path.string() + ": write failed");
}

void write_json(const fs::path& path, const json& j) {
  write_text(path, j.dump(2) + "\n");
}

fs::path prepare_dir(const std::string& dir, const char* flag) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw IoError(std::string(flag) + ": cannot create output directory " + dir);
  }
  return fs::path(dir);
}

/// Echoes the resolved configuration to `out` and next to the output.
void echo_config(const CLI::App* app, std::ostream& out, const fs::path& sidecar) {
  const auto text = config_text(app);
  out << text;
  write_text(sidecar, text);
}

fs::path sidecar_for(const std::string& out_path) { return fs::path(out_path + ".config"); }

json diagnostics_json(const NormalityDiagnostics& d) {
  json h;
  h["lo"] = d.histogram.lo;
  h["hi"] = d.histogram.hi;
  h["counts"] = d.histogram.counts;
  h["clipped_low"] = d.histogram.clipped_low;
  h["clipped_high"] = d.histogram.clipped_high;
  json j;
  j["n"] = d.n;
  j["mean"] = d.mean;
  j["variance"] = d.variance;
  j["skewness"] = d.skewness;
  j["excess_kurtosis"] = d.excess_kurtosis;
  j["ks_statistic"] = d.ks_statistic;
  j["ks_p"] = d.ks_p;
  j["histogram"] = h;
  return j;
}

json variances_json(const VarianceSet& v) {
  json j;
  j["sigma2"] = v.sigma2;
  j["var_S"] = v.var_S;
  j["var_U1"] = v.var_U1;
  j["var_U2"] = v.var_U2;
  j["var_U"] = v.var_U;
  return j;
}

McMode parse_mode(const std::string& mode) {
  if (mode == "exact") return McMode::Exact;
  if (mode == "studentized") return McMode::Studentized;
  throw std::invalid_argument("--mode must be exact or studentized (got '" + mode + "')");
}

// ---------------------------------------------------------------- frame-check

struct FrameCheckOptions {
  int j = 4;
  int k_decay = 3;
  std::string out;
  std::uint64_t seed = 1;
  std::size_t trials = 10;
  double tol = 1e-10;
};

int cmd_frame_check(const CLI::App* app, const FrameCheckOptions& o, std::ostream& out) {
  if (o.j < 0 || o.j > 16) throw std::invalid_argument("--j must be in [0, 16]");
  if (o.k_decay < 2) throw std::invalid_argument("--k-decay must be >= 2");
  if (!(o.tol > 0.0)) throw std::invalid_argument("--tol must be > 0");
  const auto scale = NeedletScale::from_level(o.j);

  // partition of unity on a deterministic frequency sweep
  double pou = 0.0;
  for (int i = 0; i <= 1000; ++i) {
    const double xi = std::pow(10.0, 6.0 * i / 1000.0);
    double s = 0.0;
    for (int level = 0; level < 64; ++level) s += window_a2(xi / std::ldexp(1.0, level));
    pou = std::max(pou, std::abs(s - 1.0));
  }

  // tight-frame identity on random polynomials of degree 2^j
  RandomStream rng(o.seed);
  const std::size_t degree = std::size_t{1} << o.j;
  double frame = 0.0;
  for (std::size_t t = 0; t < o.trials; ++t) {
    TrigPolynomial f(degree);
    for (long l = -static_cast<long>(degree); l <= static_cast<long>(degree); ++l) {
      f.set_coeff(l, {rng.normal(), rng.normal()});
    }
    frame = std::max(frame, tight_frame_check(f, o.j) / f.energy());
  }

  const auto profile = localization_profile(scale, o.k_decay);
  const double psi0 = psi_eval(scale, 0.0);

  out << std::setprecision(6);
  out << "level j = " << o.j << ", N = " << scale.N << ", k_decay = " << o.k_decay << '\n';
  out << "psi_N(0) = " << psi0 << '\n';
  out << "fitted localization constant c = " << profile.fitted_constant << '\n';
  out << "partition of unity max error = " << pou << '\n';
  out << "tight frame max relative discrepancy = " << frame << " (" << o.trials << " random polynomials)\n";
  if (!o.out.empty()) {
    std::ofstream csv(o.out);
    if (!csv) throw IoError("--out: cannot write " + o.out);
    csv.precision(17);
    csv << "x,abs_psi,bound\n";
    for (const auto& r : profile.rows) csv << r.x << ',' << r.abs_psi << ',' << r.bound << '\n';
    if (!csv) throw IoError("--out: write failed for " + o.out);
    echo_config(app, out, sidecar_for(o.out));
  } else {
    out << config_text(app);
  }
  if (pou > 1e-12) throw ConsistencyError("partition of unity violated: max error " + std::to_string(pou));
  if (frame > o.tol) throw ConsistencyError("tight frame identity violated: relative discrepancy " +
                                            std::to_string(frame));
  return kSuccess;
}

// ---------------------------------------------------------------- simulate

struct SimulateOptions {
  SpectrumOptions spectrum;
  std::size_t lmax = 0;
  std::uint64_t seed = 0;
  std::size_t grid = 0;
  std::string emit = "coeffs";
  std::string out;
};

int cmd_simulate(const CLI::App* app, const SimulateOptions& o, std::ostream& out) {
  if (o.lmax < 1) throw std::invalid_argument("--lmax must be >= 1");
  if (o.emit != "coeffs" && o.emit != "samples") throw std::invalid_argument("--emit must be coeffs or samples");
  if (o.emit == "samples" && o.grid < 1) throw std::invalid_argument("--grid must be >= 1 with --emit samples");
  const auto spectrum = make_spectrum(o.spectrum);
  check_a1(spectrum, o.lmax);

  RandomStream rng(o.seed);
  const auto field = synthesize(spectrum, o.lmax, rng);
  Metadata meta;
  for (const auto& [k, v] : resolved_options(app)) {
    if (k != "out") meta[k] = v;
  }
  if (o.emit == "coeffs") {
    write_coefficients(o.out, field, meta);
  } else {
    write_samples(o.out, evaluate_grid(field, o.grid), meta);
  }
  echo_config(app, out, sidecar_for(o.out));
  return kSuccess;
}

// ---------------------------------------------------------------- coeffs

struct CoeffsOptions {
  std::string in;
  int j = 0;
  std::string mode = "exact";
  std::string out;
};

DataFile read_input(const std::string& path, const char* flag, std::optional<DataKind> headerless = {}) {
  if (!fs::exists(path)) throw IoError(std::string(flag) + ": no such file " + path);
  return read_data_file(path, headerless);
}

int cmd_coeffs(const CLI::App* app, const CoeffsOptions& o, std::ostream& out) {
  const auto scale = NeedletScale::from_level(o.j);
  const auto data = read_input(o.in, "--in");
  WaveletCoefficients coeffs;
  if (o.mode == "exact") {
    if (data.kind != DataKind::Coefficients) {
      throw std::invalid_argument("--mode exact needs spectral coefficients (l,re,im) in --in " + o.in);
    }
    if (data.field.l_max < scale.l_max()) {
      throw std::invalid_argument("--in " + o.in + ": l_max = " + std::to_string(data.field.l_max) +
                                  " but level j needs l_max >= " + std::to_string(scale.l_max()));
    }
    coeffs = beta_exact(data.field, scale);
  } else if (o.mode == "grid") {
    if (data.kind != DataKind::Samples) {
      throw std::invalid_argument("--mode grid needs grid samples (m,value) in --in " + o.in);
    }
    if (data.samples.M < scale.N) {
      throw std::invalid_argument("--in " + o.in + ": M = " + std::to_string(data.samples.M) +
                                  " samples, level j needs M >= N = " + std::to_string(scale.N));
    }
    coeffs = beta_discrete(data.samples, scale);
  } else {
    throw std::invalid_argument("--mode must be exact or grid (got '" + o.mode + "')");
  }
  Metadata meta{{"j", std::to_string(o.j)},
                {"N", std::to_string(scale.N)},
                {"mode", o.mode},
                {"sigma2_hat", [&] {
                   std::ostringstream s;
                   s << std::setprecision(17) << coeffs.sigma2;
                   return s.str();
                 }()}};
  if (auto it = data.metadata.find("seed"); it != data.metadata.end()) meta["seed"] = it->second;
  write_beta(o.out, coeffs.beta, meta);
  echo_config(app, out, sidecar_for(o.out));
  return kSuccess;
}

// ---------------------------------------------------------------- test

struct TestOptions {
  std::string in;
  std::string samples;
  int j = 0;
  std::string mode = "studentized";
  std::string report;
  SpectrumOptions spectrum;
};

int cmd_test(const CLI::App* app, TestOptions o, std::ostream& out) {
  const auto scale = NeedletScale::from_level(o.j);
  const bool from_samples = !o.samples.empty();
  const auto data = from_samples ? read_input(o.samples, "--samples", DataKind::Samples) : read_input(o.in, "--in");
  if (from_samples && data.kind != DataKind::Samples) {
    throw std::invalid_argument("--samples " + o.samples + " must hold m,value rows");
  }
  const char* flag = from_samples ? "--samples" : "--in";
  const std::string& path = from_samples ? o.samples : o.in;

  std::vector<double> beta;
  switch (data.kind) {
    case DataKind::Coefficients:
      if (data.field.l_max < scale.l_max()) {
        throw std::invalid_argument(std::string(flag) + " " + path + ": l_max below N/2 = " +
                                    std::to_string(scale.l_max()));
      }
      beta = beta_from_spectrum(data.field.w, scale);
      break;
    case DataKind::Samples:
      if (data.samples.M < scale.N) {
        throw std::invalid_argument(std::string(flag) + " " + path + ": M = " + std::to_string(data.samples.M) +
                                    " samples, level j needs M >= N = " + std::to_string(scale.N));
      }
      beta = beta_discrete(data.samples, scale).beta;
      break;
    case DataKind::Beta:
      if (data.beta.size() != scale.N) {
        throw std::invalid_argument(std::string(flag) + " " + path + ": " + std::to_string(data.beta.size()) +
                                    " coefficients, level j needs N = " + std::to_string(scale.N));
      }
      beta = data.beta;
      break;
  }

  const McMode mode = parse_mode(o.mode);
  StudentizedReport report;
  if (mode == McMode::Exact) {
    if (!o.spectrum.alpha) {
      if (auto it = data.metadata.find("alpha"); it != data.metadata.end()) {
        o.spectrum.alpha = std::stod(it->second);
        if (auto g = data.metadata.find("g"); g != data.metadata.end()) o.spectrum.g = g->second;
      } else {
        throw std::invalid_argument("--alpha is required in exact mode (the input carries no spectrum)");
      }
    }
    const auto spectrum = make_spectrum(o.spectrum);
    check_a1(spectrum, scale.l_max());
    report = test_exact(beta, scale, spectrum);
  } else {
    report = test_studentized(beta, scale);
  }

  json j;
  j["N"] = report.N;
  j["M_N"] = report.stats.mean;
  j["S_N"] = report.stats.skewness;
  j["U_N"] = report.stats.kurtosis;
  j["var_S"] = report.variances.var_S;
  j["var_U1"] = report.variances.var_U1;
  j["var_U2"] = report.variances.var_U2;
  j["var_z_U"] = report.var_z_U;
  j["z_S"] = report.z_S;
  j["z_U"] = report.z_U;
  j["p_S"] = report.p_S;
  j["p_U"] = report.p_U;
  j["p_joint"] = report.p_joint;
  j["mode"] = o.mode;
  if (auto it = data.metadata.find("seed"); it != data.metadata.end()) {
    j["seed"] = std::stoull(it->second);
  } else {
    j["seed"] = nullptr;
  }
  j["sigma2"] = report.variances.sigma2;
  j["config"] = config_json(app);
  write_json(o.report, j);
  out << std::setprecision(6) << "S_N = " << report.stats.skewness << "  z_S = " << report.z_S
      << "  p_S = " << report.p_S << '\n'
      << "U_N = " << report.stats.kurtosis << "  z_U = " << report.z_U << "  p_U = " << report.p_U << '\n'
      << "joint p = " << report.p_joint << '\n';
  echo_config(app, out, sidecar_for(o.report));
  return kSuccess;
}

// ---------------------------------------------------------------- mc

struct McOptions {
  SpectrumOptions spectrum;
  int j = 0;
  std::size_t reps = 0;
  std::uint64_t seed = 0;
  std::string mode = "exact";
  std::size_t grid = 0;
  std::size_t workers = 1;
  std::optional<double> lambda;
  std::string out;
};

int cmd_mc(const CLI::App* app, const McOptions& o, std::ostream& out) {
  ExperimentConfig config;
  config.replications = o.reps;
  config.j = o.j;
  config.spectrum = make_spectrum(o.spectrum);
  config.mode = parse_mode(o.mode);
  config.grid_M = o.grid;
  config.alternative_lambda = o.lambda;
  config.seed = o.seed;
  config.workers = o.workers;
  validate(config);
  check_a1(config.spectrum, o.grid ? 4 * o.grid : NeedletScale::from_level(o.j).l_max());
  const auto dir = prepare_dir(o.out, "--out");

  const auto result = run_mc(config);

  {
    std::ofstream csv(dir / "zscores.csv");
    if (!csv) throw IoError("--out: cannot write " + (dir / "zscores.csv").string());
    csv.precision(17);
    csv << "index,seed,M_N,S_N,U_N,z_S,z_U,p_S,p_U,p_joint,sigma2,var_S,var_U\n";
    for (const auto& r : result.records) {
      csv << r.index << ',' << r.seed << ',' << r.M_N << ',' << r.S_N << ',' << r.U_N << ',' << r.z_S << ','
          << r.z_U << ',' << r.p_S << ',' << r.p_U << ',' << r.p_joint << ',' << r.sigma2 << ',' << r.var_S
          << ',' << r.var_U << '\n';
    }
  }
  std::vector<double> zs, zu;
  for (const auto& r : result.records) {
    zs.push_back(r.z_S);
    zu.push_back(r.z_U);
  }
  emit_histogram(zs, 30, dir / "hist_s.csv");
  emit_histogram(zu, 30, dir / "hist_u.csv");

  json j;
  j["config"] = config_json(app);
  j["N"] = NeedletScale::from_level(o.j).N;
  j["replications"] = o.reps;
  j["theoretical"] = variances_json(result.theoretical);
  if (o.reps >= 2) {
    j["z_S"] = diagnostics_json(result.z_S);
    j["z_U"] = diagnostics_json(result.z_U);
    j["corr_zs_zu"] = result.corr_zs_zu;
  }
  j["rejection_5pct"] = {{"S", result.reject_S}, {"U", result.reject_U}, {"joint", result.reject_joint}};
  write_json(dir / "diagnostics.json", j);
  echo_config(app, out, dir / "config.txt");

  out << std::setprecision(4);
  if (o.reps >= 2) {
    out << "z_S: mean " << result.z_S.mean << ", variance " << result.z_S.variance << ", KS p " << result.z_S.ks_p
        << '\n';
    out << "z_U: mean " << result.z_U.mean << ", variance " << result.z_U.variance << ", KS p " << result.z_U.ks_p
        << '\n';
    out << "corr(z_S, z_U) = " << result.corr_zs_zu << '\n';
  }
  out << "rejection at 5%: S " << result.reject_S << ", U " << result.reject_U << ", joint " << result.reject_joint
      << '\n';
  return kSuccess;
}

// ---------------------------------------------------------------- alias

struct AliasOptions {
  SpectrumOptions spectrum;
  int j = 0;
  std::vector<std::size_t> grids;
  std::size_t reps = 0;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  std::string out;
};

int cmd_alias(const CLI::App* app, const AliasOptions& o, std::ostream& out) {
  ExperimentConfig config;
  config.replications = o.reps;
  config.j = o.j;
  config.spectrum = make_spectrum(o.spectrum);
  config.seed = o.seed;
  config.workers = o.workers;
  if (o.workers < 1) throw std::invalid_argument("--workers must be >= 1");
  if (o.grids.empty()) throw std::invalid_argument("--grids needs at least one M");
  check_a1(config.spectrum, 4 * *std::max_element(o.grids.begin(), o.grids.end()));
  const auto dir = prepare_dir(o.out, "--out");

  const auto result = run_aliasing(config, o.grids);

  std::ofstream csv(dir / "aliasing.csv");
  if (!csv) throw IoError("--out: cannot write " + (dir / "aliasing.csv").string());
  csv.precision(17);
  csv << "M,ratio,relative_error\n";
  json rows = json::array();
  for (const auto& r : result.rows) {
    csv << r.M << ',' << r.ratio << ',' << r.relative_error << '\n';
    rows.push_back({{"M", r.M}, {"ratio", r.ratio}, {"relative_error", r.relative_error}});
  }
  json j;
  j["config"] = config_json(app);
  j["l_max"] = result.l_max;
  j["fitted_exponent"] = result.fitted_exponent;
  j["rows"] = rows;
  write_json(dir / "aliasing.json", j);
  echo_config(app, out, dir / "config.txt");
  out << std::setprecision(4) << "fitted exponent of error vs M/N: " << result.fitted_exponent << '\n';
  return kSuccess;
}

}  // namespace

std::vector<std::string> merge_config_file(const std::vector<std::string>& args, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("--config: cannot open " + path);
  std::vector<std::string> merged = args;
  std::string line;
  std::size_t line_no = 0;
  auto given = [&](const std::string& key) {
    const std::string flag = "--" + key;
    return std::any_of(args.begin(), args.end(),
                       [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
  };
  while (std::getline(in, line)) {
    ++line_no;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw IoError("--config: " + path + ":" + std::to_string(line_no) + ": expected 'key = value'");
    }
    const auto key = trim(t.substr(0, eq));
    const auto value = trim(t.substr(eq + 1));
    if (key.empty() || key == "config") {
      throw IoError("--config: " + path + ":" + std::to_string(line_no) + ": invalid key");
    }
    if (given(key)) continue;
    merged.push_back("--" + key);
    merged.push_back(value);
  }
  return merged;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Needlet analysis of stationary random fields on the circle", "needlet"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  std::string config_path;

  FrameCheckOptions frame;
  auto* frame_cmd = app.add_subcommand("frame-check", "window, tight-frame and localization checks");
  frame_cmd->add_option("--j", frame.j, "resolution level")->required();
  frame_cmd->add_option("--k-decay", frame.k_decay, "decay order of the localization envelope");
  frame_cmd->add_option("--out", frame.out, "CSV of x,abs_psi,bound");
  frame_cmd->add_option("--seed", frame.seed, "seed of the random test polynomials");
  frame_cmd->add_option("--trials", frame.trials, "random polynomials for the tight-frame check");
  frame_cmd->add_option("--tol", frame.tol, "tolerance of the tight-frame relative discrepancy");

  SimulateOptions sim;
  auto* sim_cmd = app.add_subcommand("simulate", "synthesize one Gaussian field");
  add_spectrum_options(sim_cmd, sim.spectrum, true);
  sim_cmd->add_option("--lmax", sim.lmax, "bandwidth")->required();
  sim_cmd->add_option("--seed", sim.seed)->required();
  sim_cmd->add_option("--grid", sim.grid, "number of grid samples M (--emit samples)");
  sim_cmd->add_option("--emit", sim.emit, "coeffs | samples");
  sim_cmd->add_option("--out", sim.out)->required();

  CoeffsOptions co;
  auto* co_cmd = app.add_subcommand("coeffs", "needlet coefficients of a field file");
  co_cmd->add_option("--in", co.in)->required();
  co_cmd->add_option("--j", co.j)->required();
  co_cmd->add_option("--mode", co.mode, "exact | grid");
  co_cmd->add_option("--out", co.out)->required();

  TestOptions te;
  auto* te_cmd = app.add_subcommand("test", "skewness/kurtosis Gaussianity test");
  auto* te_in = te_cmd->add_option("--in", te.in, "field, samples or k,beta file");
  auto* te_samples = te_cmd->add_option("--samples", te.samples, "CSV of m,value grid samples");
  te_in->excludes(te_samples);
  te_cmd->add_option("--j", te.j)->required();
  te_cmd->add_option("--mode", te.mode, "exact | studentized");
  te_cmd->add_option("--report", te.report, "JSON report path")->required();
  add_spectrum_options(te_cmd, te.spectrum, false);

  McOptions mc;
  auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo replications of the tests");
  add_spectrum_options(mc_cmd, mc.spectrum, true);
  mc_cmd->add_option("--j", mc.j)->required();
  mc_cmd->add_option("--reps", mc.reps)->required();
  mc_cmd->add_option("--seed", mc.seed)->required();
  mc_cmd->add_option("--mode", mc.mode, "exact | studentized");
  mc_cmd->add_option("--grid", mc.grid, "sample on M >= N grid points (0: spectral coefficients)");
  mc_cmd->add_option("--workers", mc.workers);
  mc_cmd->add_option("--lambda", mc.lambda, "chi-squared alternative mixing weight in [0, 1]");
  mc_cmd->add_option("--out", mc.out, "output directory")->required();

  AliasOptions al;
  auto* al_cmd = app.add_subcommand("alias", "aliasing error of grid coefficients vs M/N");
  add_spectrum_options(al_cmd, al.spectrum, true);
  al_cmd->add_option("--j", al.j)->required();
  al_cmd->add_option("--grids", al.grids, "comma-separated grid sizes M")->delimiter(',')->required();
  al_cmd->add_option("--reps", al.reps)->required();
  al_cmd->add_option("--seed", al.seed, "root seed");
  al_cmd->add_option("--workers", al.workers);
  al_cmd->add_option("--out", al.out, "output directory")->required();

  for (auto* sub : app.get_subcommands({})) {
    sub->add_option("--config", config_path, "file of key = value lines; flags take precedence");
  }

  try {
    std::vector<std::string> args = raw_args;
    for (std::size_t i = 0; i < raw_args.size(); ++i) {
      if (raw_args[i] == "--config" && i + 1 < raw_args.size()) {
        args = merge_config_file(raw_args, raw_args[i + 1]);
      } else if (raw_args[i].rfind("--config=", 0) == 0) {
        args = merge_config_file(raw_args, raw_args[i].substr(9));
      }
    }
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "needlet: error: " << e.what() << '\n';
    return kValidationError;
  } catch (const std::exception& e) {
    err << "needlet: error: " << e.what() << '\n';
    return kValidationError;
  }

  try {
    if (*frame_cmd) return cmd_frame_check(frame_cmd, frame, out);
    if (*sim_cmd) return cmd_simulate(sim_cmd, sim, out);
    if (*co_cmd) return cmd_coeffs(co_cmd, co, out);
    if (*te_cmd) {
      if (te.in.empty() && te.samples.empty()) throw std::invalid_argument("test needs --in or --samples");
      return cmd_test(te_cmd, te, out);
    }
    if (*mc_cmd) return cmd_mc(mc_cmd, mc, out);
    if (*al_cmd) return cmd_alias(al_cmd, al, out);
  } catch (const ConsistencyError& e) {
    err << "needlet: numerical consistency failure: " << e.what() << '\n';
    return kConsistencyError;
  } catch (const std::exception& e) {
    err << "needlet: error: " << e.what() << '\n';
    return kValidationError;
  }
  return kValidationError;
}

}  // namespace needlet::cli

// polarfade: construct codes, evaluate capacities and inversion thresholds,
// and run the sweep campaigns, emitting CSV plus a replayable run manifest.
//
// Exit codes: 0 success, 2 usage or configuration error, 3 numeric failure or
// infeasible problem.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polarfade/capacity.hpp"
#include "polarfade/construction.hpp"
#include "polarfade/errors.hpp"
#include "polarfade/harness.hpp"
#include "polarfade/io.hpp"
#include "polarfade/power_control.hpp"
#include "polarfade/version.hpp"

namespace pf = polarfade;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Flag {
  std::string key;
  std::string value;
  bool set = false;
};

// defaults <- config file <- explicitly set flags.
pf::KvMap resolve(const pf::KvMap& defaults, const pf::KvMap& file, const std::vector<Flag>& flags,
                  const std::set<std::string>& known) {
  for (const auto& [key, value] : file) {
    if (!known.count(key)) throw std::invalid_argument("unknown config key '" + key + "'");
  }
  pf::KvMap out = defaults;
  for (const auto& [key, value] : file) out[key] = value;
  for (const Flag& f : flags) {
    if (f.set) out[f.key] = f.value;
  }
  return out;
}

std::uint64_t resolve_seed(pf::KvMap& kv) {
  if (!kv.count("seed")) {
    if (const char* env = std::getenv("POLARFADE_SEED")) {
      kv["seed"] = env;
    } else {
      kv["seed"] = "1";
    }
  }
  return pf::kv_uint64(kv, "seed");
}

pf::QuadratureSpec quad_from(const pf::KvMap& kv) {
  pf::QuadratureSpec quad;
  quad.abs_tol = pf::kv_double(kv, "quad_abs_tol");
  quad.max_subdivisions = static_cast<int>(pf::kv_int(kv, "quad_max_subdiv"));
  quad.range_sigmas = pf::kv_double(kv, "quad_range_sigmas");
  return quad;
}

void put_quad_defaults(pf::KvMap& kv) {
  const pf::QuadratureSpec quad;
  kv["quad_abs_tol"] = pf::fmt_g12(quad.abs_tol);
  kv["quad_max_subdiv"] = std::to_string(quad.max_subdivisions);
  kv["quad_range_sigmas"] = pf::fmt_g12(quad.range_sigmas);
}

std::string join_g12(const std::vector<double>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ',';
    out << pf::fmt_g12(values[i]);
  }
  return out.str();
}

void write_output_manifest(const std::string& command, std::uint64_t seed,
                           const std::vector<std::string>& outputs, double duration_s,
                           pf::KvMap config) {
  pf::RunManifest manifest;
  manifest.command = command;
  manifest.version = pf::kVersion;
  manifest.master_seed = seed;
  manifest.outputs = outputs;
  manifest.duration_s = duration_s;
  manifest.config = std::move(config);
  for (const auto& out : outputs) pf::write_manifest(out + ".manifest", manifest);
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// ---- construct ----

int run_construct(const pf::KvMap& file_kv, std::vector<Flag> flags, const std::string& out_path) {
  static const std::set<std::string> known = {"n", "k", "rate", "sigma2", "design_snr",
                                              "mixture_eps", "seed"};
  pf::KvMap defaults{{"sigma2", "1"}, {"mixture_eps", "0"}};
  pf::KvMap kv = resolve(defaults, file_kv, flags, known);
  const std::uint64_t seed = resolve_seed(kv);
  Timer timer;

  if (!kv.count("n")) throw std::invalid_argument("construct requires --n (log2 block length)");
  const int n = static_cast<int>(pf::kv_int(kv, "n"));
  if (n < 0 || n > 26) throw std::invalid_argument("construct: n out of range");
  const int N = 1 << n;
  if (kv.count("k") && kv.count("rate")) {
    throw std::invalid_argument("construct: give either --k or --rate, not both");
  }
  int K = 0;
  if (kv.count("k")) {
    K = static_cast<int>(pf::kv_int(kv, "k"));
  } else if (kv.count("rate")) {
    K = static_cast<int>(std::llround(pf::kv_double(kv, "rate") * N));
  } else {
    throw std::invalid_argument("construct: one of --k or --rate is required");
  }
  if (K < 0 || K > N) throw std::invalid_argument("construct: dimension out of range");
  const double sigma2 = pf::kv_double(kv, "sigma2");
  const double eps = pf::kv_double(kv, "mixture_eps");
  double design_snr;
  if (kv.count("design_snr")) {
    design_snr = pf::kv_double(kv, "design_snr");
  } else {
    const double rate = static_cast<double>(K) / N;
    if (!(rate > 0.0 && rate < 1.0)) {
      throw std::invalid_argument("construct: cannot solve a design SNR for rate outside (0,1)");
    }
    design_snr = pf::solve_design_power(rate, sigma2) / sigma2;
  }

  const pf::PolarCode code = pf::construct(N, K, design_snr, eps);
  pf::write_code_file(out_path, code);

  pf::KvMap config{{"n", std::to_string(n)},
                   {"k", std::to_string(K)},
                   {"sigma2", pf::fmt_g12(sigma2)},
                   {"design_snr", pf::fmt_g12(design_snr)},
                   {"mixture_eps", pf::fmt_g12(eps)}};
  write_output_manifest("construct", seed, {out_path}, timer.seconds(), config);
  std::cout << "wrote " << out_path << " (N=" << N << ", K=" << K
            << ", design_snr=" << pf::fmt_g12(design_snr) << ")\n";
  return 0;
}

// ---- capacity ----

int run_capacity(const pf::KvMap& file_kv, std::vector<Flag> flags, const std::string& out_path) {
  static const std::set<std::string> known = {"power",  "rate",         "sigma2",
                                              "q",      "qpeak",        "fading",
                                              "seed",   "quad_abs_tol", "quad_max_subdiv",
                                              "quad_range_sigmas"};
  pf::KvMap defaults{{"sigma2", "1"}, {"qpeak", "inf"}, {"fading", "gaussian:1"}};
  put_quad_defaults(defaults);
  pf::KvMap kv = resolve(defaults, file_kv, flags, known);
  const std::uint64_t seed = resolve_seed(kv);
  Timer timer;

  const double sigma2 = pf::kv_double(kv, "sigma2");
  const pf::QuadratureSpec quad = quad_from(kv);
  if (kv.count("power") == kv.count("rate")) {
    throw std::invalid_argument("capacity: exactly one of --power or --rate is required");
  }
  double p, rate;
  if (kv.count("power")) {
    p = pf::kv_double(kv, "power");
    rate = pf::bi_awgn_capacity(p, sigma2, quad);
  } else {
    rate = pf::kv_double(kv, "rate");
    p = pf::solve_design_power(rate, sigma2, quad);
  }

  std::ostringstream report;
  report << "sigma2 = " << pf::fmt_g12(sigma2) << "\n";
  report << "p = " << pf::fmt_g12(p) << "\n";
  report << "snr = " << pf::fmt_g12(p / sigma2) << "\n";
  report << "rate = " << pf::fmt_g12(rate) << "\n";
  if (kv.count("q")) {
    const double q = pf::kv_double(kv, "q");
    const double qpeak = pf::kv_double(kv, "qpeak");
    const auto fading = pf::make_fading(pf::parse_fading(kv.at("fading")));
    const pf::PowerBudget budget{p, q, qpeak, sigma2};
    const pf::InversionPolicy policy = pf::make_policy(budget, *fading, quad);
    const double eps = pf::erasure_prob(policy.delta, *fading);
    report << "q = " << pf::fmt_g12(q) << "\n";
    report << "qpeak = " << pf::fmt_g12(qpeak) << "\n";
    report << "fading = " << fading->describe() << "\n";
    report << "delta_bar = " << pf::fmt_g12(policy.delta_bar) << "\n";
    report << "delta = " << pf::fmt_g12(policy.delta) << "\n";
    report << "epsilon = " << pf::fmt_g12(eps) << "\n";
    report << "c_eq = " << pf::fmt_g12(pf::equivalent_capacity(rate, eps)) << "\n";
  }
  std::cout << report.str();
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open '" + out_path + "' for writing");
    out << report.str();
    out.close();
    pf::KvMap config = kv;
    config.erase("seed");
    write_output_manifest("capacity", seed, {out_path}, timer.seconds(), config);
  }
  return 0;
}

// ---- sweep ----

pf::KvMap sweep_defaults(int figure) {
  pf::KvMap kv{{"sigma2", "1"}, {"qpeak", "inf"}};
  put_quad_defaults(kv);
  switch (figure) {
    case 3:
      kv["rate"] = "0.5";
      kv["q_grid"] = "0.25,0.5,1,2,4,8,16,32,64,128";
      kv["sigma_h2_grid"] = "0.5,1,2";
      break;
    case 5:
      kv["n"] = "10";
      kv["rate"] = "0.5";
      kv["fading"] = "gaussian:1";
      kv["q_grid"] = "1,2,4,8,16";
      kv["schemes"] = "proposed,mixture_design";
      kv["trials"] = "2000";
      kv["target_bit_errors"] = "100";
      kv["batch_size"] = "256";
      kv["design_power"] = "0";
      break;
    case 6:
      kv["fading"] = "gaussian:1";
      kv["q_grid"] = "0.5,1,1.5,2,3,4,6,8,12,16";
      kv["paper_objective"] = "0";
      break;
    default:
      throw std::invalid_argument("sweep: --figure must be 3, 5 or 6");
  }
  kv["figure"] = std::to_string(figure);
  return kv;
}

int run_sweep(const pf::KvMap& file_kv, std::vector<Flag> flags, const std::string& out_dir,
              int threads) {
  static const std::set<std::string> known = {
      "figure",        "n",       "k",     "rate",
      "sigma2",        "qpeak",   "q_grid", "fading",
      "sigma_h2_grid", "schemes", "seed",   "trials",
      "target_bit_errors", "batch_size", "design_power", "paper_objective",
      "quad_abs_tol",  "quad_max_subdiv", "quad_range_sigmas"};
  // figure is resolved first so the remaining defaults can depend on it
  int figure = 0;
  for (const Flag& f : flags) {
    if (f.key == "figure" && f.set) figure = std::stoi(f.value);
  }
  if (figure == 0 && file_kv.count("figure")) {
    figure = static_cast<int>(pf::kv_int(file_kv, "figure"));
  }
  if (figure == 0) throw std::invalid_argument("sweep: --figure (or a config with one) is required");

  pf::KvMap kv = resolve(sweep_defaults(figure), file_kv, flags, known);
  const std::uint64_t seed = resolve_seed(kv);
  const pf::QuadratureSpec quad = quad_from(kv);
  const std::string dir = out_dir.empty() ? "." : out_dir;
  Timer timer;

  if (figure == 3) {
    pf::EpsSweepConfig config;
    config.rate = pf::kv_double(kv, "rate");
    config.sigma2 = pf::kv_double(kv, "sigma2");
    config.qpeak = pf::kv_double(kv, "qpeak");
    config.q_grid = pf::kv_double_list(kv, "q_grid");
    config.sigma_h2_grid = pf::kv_double_list(kv, "sigma_h2_grid");
    config.quad = quad;
    const auto rows = pf::sweep_epsilon_vs_q(config);
    for (const auto& r : rows) {
      std::cerr << "eps(q=" << pf::fmt_g12(r.q) << ", sigma_h2=" << pf::fmt_g12(r.sigma_h2)
                << ") = " << pf::fmt_g12(r.epsilon) << "\n";
    }
    const std::string csv = dir + "/eps_vs_q.csv";
    pf::write_eps_csv(csv, rows);
    kv.erase("seed");
    write_output_manifest("sweep", seed, {csv}, timer.seconds(), kv);
    std::cout << "wrote " << csv << "\n";
    return 0;
  }

  if (figure == 5) {
    pf::CampaignConfig config;
    config.n = static_cast<int>(pf::kv_int(kv, "n"));
    config.k = kv.count("k") ? static_cast<int>(pf::kv_int(kv, "k")) : 0;
    config.rate = pf::kv_double(kv, "rate");
    config.sigma2 = pf::kv_double(kv, "sigma2");
    config.qpeak = pf::kv_double(kv, "qpeak");
    config.q_grid = pf::kv_double_list(kv, "q_grid");
    config.fading = pf::parse_fading(kv.at("fading"));
    config.master_seed = seed;
    config.max_trials = pf::kv_int(kv, "trials");
    config.target_bit_errors = pf::kv_int(kv, "target_bit_errors");
    config.batch_size = static_cast<int>(pf::kv_int(kv, "batch_size"));
    config.design_power = pf::kv_double(kv, "design_power");
    config.threads = threads;
    config.quad = quad;
    config.schemes.clear();
    std::istringstream schemes(kv.at("schemes"));
    std::string item;
    while (std::getline(schemes, item, ',')) config.schemes.push_back(pf::parse_scheme(item));
    auto log_point = [](const pf::BerPoint& p) {
      std::cerr << "ber(q=" << pf::fmt_g12(p.q) << ", " << pf::to_string(p.scheme)
                << ") = " << pf::fmt_g12(p.ber) << " [" << p.bit_errors << " errors / "
                << p.trials << " blocks]\n";
    };
    const auto rows = pf::run_ber_campaign(config, log_point);
    const std::string csv = dir + "/ber_vs_q.csv";
    pf::write_ber_csv(csv, rows);
    write_output_manifest("sweep", seed, {csv}, timer.seconds(), kv);
    std::cout << "wrote " << csv << "\n";
    return 0;
  }

  pf::RateSweepConfig config;
  config.sigma2 = pf::kv_double(kv, "sigma2");
  config.qpeak = pf::kv_double(kv, "qpeak");
  config.q_grid = pf::kv_double_list(kv, "q_grid");
  config.fading = pf::parse_fading(kv.at("fading"));
  config.objective = pf::kv_int(kv, "paper_objective") != 0 ? pf::DesignObjective::output_entropy
                                                            : pf::DesignObjective::throughput;
  config.quad = quad;
  auto log_point = [](const pf::RatePoint& p) {
    std::cerr << "r_star(q=" << pf::fmt_g12(p.q) << ") = " << pf::fmt_g12(p.r_star) << "\n";
  };
  const auto rows = pf::sweep_optimal_rate(config, log_point);
  const std::string csv = dir + "/r_star_vs_q.csv";
  pf::write_rstar_csv(csv, rows);
  kv.erase("seed");
  write_output_manifest("sweep", seed, {csv}, timer.seconds(), kv);
  std::cout << "wrote " << csv << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polar-coded transmission over fading channels via truncated channel inversion"};
  app.set_version_flag("--version", std::string(pf::kVersion));
  app.require_subcommand(1);

  // Each option lands in a Flag so file/flag precedence is explicit.
  auto add_flag = [](CLI::App* cmd, std::vector<Flag>& flags, const std::string& name,
                     const std::string& key, const std::string& help) {
    flags.push_back(Flag{key, "", false});
    Flag* slot = &flags.back();
    cmd->add_option_function<std::string>(
           name, [slot](const std::string& v) { slot->value = v; slot->set = true; }, help)
        ->expected(1);
  };

  std::string construct_out = "code.txt";
  std::string construct_config;
  auto* construct_cmd = app.add_subcommand("construct", "Construct a polar code description file");
  std::vector<Flag> construct_flags;
  construct_flags.reserve(16);
  add_flag(construct_cmd, construct_flags, "--n", "n", "log2 block length");
  add_flag(construct_cmd, construct_flags, "--k", "k", "information bits");
  add_flag(construct_cmd, construct_flags, "--rate", "rate", "target rate K/N");
  add_flag(construct_cmd, construct_flags, "--sigma2", "sigma2", "noise variance");
  add_flag(construct_cmd, construct_flags, "--design-snr", "design_snr",
           "linear design SNR (default: solved from the rate)");
  add_flag(construct_cmd, construct_flags, "--mixture-eps", "mixture_eps",
           "erasure rate for the mixture-channel design (default 0)");
  construct_cmd->add_option("--out", construct_out, "output file");
  construct_cmd->add_option("--config", construct_config, "key = value config file");

  std::string capacity_out;
  std::string capacity_config;
  auto* capacity_cmd = app.add_subcommand("capacity", "Capacity, design power and thresholds");
  std::vector<Flag> capacity_flags;
  capacity_flags.reserve(16);
  add_flag(capacity_cmd, capacity_flags, "--power", "power", "signal power P");
  add_flag(capacity_cmd, capacity_flags, "--rate", "rate", "target rate (inverts the capacity)");
  add_flag(capacity_cmd, capacity_flags, "--sigma2", "sigma2", "noise variance");
  add_flag(capacity_cmd, capacity_flags, "--q", "q", "average power budget");
  add_flag(capacity_cmd, capacity_flags, "--qpeak", "qpeak", "peak power budget (inf allowed)");
  add_flag(capacity_cmd, capacity_flags, "--fading", "fading", "fading spec, e.g. gaussian:1");
  add_flag(capacity_cmd, capacity_flags, "--quad-abs-tol", "quad_abs_tol", "quadrature tolerance");
  add_flag(capacity_cmd, capacity_flags, "--quad-max-subdiv", "quad_max_subdiv",
           "quadrature subdivision budget");
  capacity_cmd->add_option("--out", capacity_out, "also write the report to this file");
  capacity_cmd->add_option("--config", capacity_config, "key = value config file");

  std::string sweep_config;
  std::string sweep_out_dir = ".";
  int sweep_threads = 0;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run a sweep campaign and emit CSV");
  std::vector<Flag> sweep_flags;
  sweep_flags.reserve(24);
  add_flag(sweep_cmd, sweep_flags, "--figure", "figure", "preset: 3, 5 or 6");
  add_flag(sweep_cmd, sweep_flags, "--n", "n", "log2 block length (figure 5)");
  add_flag(sweep_cmd, sweep_flags, "--k", "k", "information bits (figure 5)");
  add_flag(sweep_cmd, sweep_flags, "--rate", "rate", "design rate");
  add_flag(sweep_cmd, sweep_flags, "--sigma2", "sigma2", "noise variance");
  add_flag(sweep_cmd, sweep_flags, "--qpeak", "qpeak", "peak power budget");
  add_flag(sweep_cmd, sweep_flags, "--q-grid", "q_grid", "comma-separated Q grid");
  add_flag(sweep_cmd, sweep_flags, "--fading", "fading", "fading spec");
  add_flag(sweep_cmd, sweep_flags, "--sigma-h2-grid", "sigma_h2_grid",
           "comma-separated Gaussian fading variances (figure 3)");
  add_flag(sweep_cmd, sweep_flags, "--schemes", "schemes",
           "comma-separated subset of proposed,mixture_design (figure 5)");
  add_flag(sweep_cmd, sweep_flags, "--seed", "seed", "master seed (env POLARFADE_SEED fallback)");
  add_flag(sweep_cmd, sweep_flags, "--trials", "trials", "max trials per point (figure 5)");
  add_flag(sweep_cmd, sweep_flags, "--target-bit-errors", "target_bit_errors",
           "early-stop threshold, checked at batch boundaries");
  add_flag(sweep_cmd, sweep_flags, "--batch-size", "batch_size", "trials per stop-check batch");
  add_flag(sweep_cmd, sweep_flags, "--design-power", "design_power",
           "override the design power (0: solve from the rate)");
  add_flag(sweep_cmd, sweep_flags, "--paper-objective", "paper_objective",
           "figure 6: 1 maximizes (1-eps) * output entropy instead of (1-eps) * rate");
  sweep_cmd->add_option("--config", sweep_config, "key = value config file");
  sweep_cmd->add_option("--out-dir", sweep_out_dir, "output directory");
  sweep_cmd->add_option("--threads", sweep_threads, "worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
    const auto load = [](const std::string& path) {
      return path.empty() ? pf::KvMap{} : pf::read_kv_file(path);
    };
    if (construct_cmd->parsed()) {
      return run_construct(load(construct_config), construct_flags, construct_out);
    }
    if (capacity_cmd->parsed()) {
      return run_capacity(load(capacity_config), capacity_flags, capacity_out);
    }
    return run_sweep(load(sweep_config), sweep_flags, sweep_out_dir, sweep_threads);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const pf::InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

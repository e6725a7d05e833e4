#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polarfade/capacity.hpp"
#include "polarfade/channel.hpp"
#include "polarfade/construction.hpp"
#include "polarfade/harness.hpp"
#include "polarfade/polar.hpp"
#include "polarfade/power_control.hpp"
#include "polarfade/version.hpp"

namespace py = pybind11;
using namespace polarfade;

PYBIND11_MODULE(_polarfade, m) {
  m.doc() = "Polar-coded transmission over fading AWGN channels with truncated "
            "channel inversion: code construction, capacity and threshold "
            "solvers, per-symbol channel simulation and Monte Carlo sweeps.";
  m.attr("__version__") = kVersion;

  py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);
  py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_RuntimeError);

  py::class_<Rng>(m, "Rng", "Deterministic random engine (mt19937_64)")
      .def(py::init<std::uint64_t>(), py::arg("seed"));

  // ---- polar_core ----
  py::class_<PolarCode>(m, "PolarCode")
      .def(py::init<int, std::vector<int>, double, double>(), py::arg("n"), py::arg("info_set"),
           py::arg("design_snr"), py::arg("design_eps") = 0.0)
      .def_property_readonly("n", &PolarCode::n)
      .def_property_readonly("block_length", &PolarCode::block_length)
      .def_property_readonly("dimension", &PolarCode::dimension)
      .def_property_readonly("rate", &PolarCode::rate)
      .def_property_readonly("info_set", &PolarCode::info_set, "0-based, ascending")
      .def_property_readonly("design_snr", &PolarCode::design_snr)
      .def_property_readonly("design_eps", &PolarCode::design_eps)
      .def("is_frozen", &PolarCode::is_frozen, py::arg("index"));

  m.def("transform", &transform, py::arg("u"), "x = u F^(n) over GF(2); an involution");
  m.def("encode", &encode, py::arg("message"), py::arg("code"));
  m.def("sc_decode", &sc_decode, py::arg("observation"), py::arg("code"),
        "Successive cancellation decode; entries are LLRs or None for erasures");

  // ---- construction ----
  m.def("initial_z_awgn", &initial_z_awgn, py::arg("snr"));
  m.def("initial_z_mixture", &initial_z_mixture, py::arg("snr"), py::arg("eps"));
  m.def("evolve_z", &evolve_z, py::arg("z0"), py::arg("n"));
  m.def("select_info_set", &select_info_set, py::arg("z"), py::arg("k"));
  m.def("construct", &construct, py::arg("block_length"), py::arg("k"), py::arg("design_snr"),
        py::arg("eps") = 0.0);

  // ---- capacity_engine ----
  py::class_<QuadratureSpec>(m, "QuadratureSpec")
      .def(py::init<>())
      .def_readwrite("abs_tol", &QuadratureSpec::abs_tol)
      .def_readwrite("max_subdivisions", &QuadratureSpec::max_subdivisions)
      .def_readwrite("range_sigmas", &QuadratureSpec::range_sigmas);

  py::enum_<DesignObjective>(m, "DesignObjective")
      .value("throughput", DesignObjective::throughput)
      .value("output_entropy", DesignObjective::output_entropy);

  py::class_<DesignOptimum>(m, "DesignOptimum")
      .def_readonly("p_star", &DesignOptimum::p_star)
      .def_readonly("r_star", &DesignOptimum::r_star)
      .def_readonly("eps_star", &DesignOptimum::eps_star);

  m.def("output_density", &output_density, py::arg("y"), py::arg("p"), py::arg("sigma2"));
  m.def("bi_awgn_capacity", &bi_awgn_capacity, py::arg("p"), py::arg("sigma2"),
        py::arg("quad") = QuadratureSpec{});
  m.def("solve_design_power", &solve_design_power, py::arg("rate"), py::arg("sigma2"),
        py::arg("quad") = QuadratureSpec{});
  m.def("equivalent_capacity", &equivalent_capacity, py::arg("c_awgn"), py::arg("eps"));
  m.def("optimize_design_power", &optimize_design_power, py::arg("q"), py::arg("qpeak"),
        py::arg("sigma2"), py::arg("fading"), py::arg("quad") = QuadratureSpec{},
        py::arg("objective") = DesignObjective::throughput);

  // ---- power_control ----
  py::class_<FadingModel, std::shared_ptr<FadingModel>>(m, "FadingModel")
      .def("sample", &FadingModel::sample, py::arg("rng"))
      .def("cdf", &FadingModel::cdf, py::arg("h"))
      .def("pdf", &FadingModel::pdf, py::arg("h"))
      .def("quantile", &FadingModel::quantile, py::arg("p"))
      .def("outage_mass", &FadingModel::outage_mass, py::arg("delta"))
      .def("describe", &FadingModel::describe);
  py::class_<GaussianReal, FadingModel, std::shared_ptr<GaussianReal>>(m, "GaussianReal")
      .def(py::init<double>(), py::arg("sigma_h2"));
  py::class_<Rayleigh, FadingModel, std::shared_ptr<Rayleigh>>(m, "Rayleigh")
      .def(py::init<double>(), py::arg("scale"));
  py::class_<PointMass, FadingModel, std::shared_ptr<PointMass>>(m, "PointMass")
      .def(py::init<double>(), py::arg("h0"));
  py::class_<UniformAbs, FadingModel, std::shared_ptr<UniformAbs>>(m, "UniformAbs")
      .def(py::init<double, double>(), py::arg("a"), py::arg("b"));

  py::class_<PowerBudget>(m, "PowerBudget")
      .def(py::init<double, double, double, double>(), py::arg("P"), py::arg("Q"),
           py::arg("Qpeak"), py::arg("sigma2"))
      .def_readwrite("P", &PowerBudget::P)
      .def_readwrite("Q", &PowerBudget::Q)
      .def_readwrite("Qpeak", &PowerBudget::Qpeak)
      .def_readwrite("sigma2", &PowerBudget::sigma2);

  py::class_<InversionPolicy>(m, "InversionPolicy")
      .def(py::init<double, double, double>(), py::arg("delta"), py::arg("delta_bar"),
           py::arg("delta_peak"))
      .def_readwrite("delta", &InversionPolicy::delta)
      .def_readwrite("delta_bar", &InversionPolicy::delta_bar)
      .def_readwrite("delta_peak", &InversionPolicy::delta_peak);

  m.def("expended_power", &expended_power, py::arg("p"), py::arg("delta"), py::arg("fading"),
        py::arg("quad") = QuadratureSpec{});
  m.def("solve_delta_bar", &solve_delta_bar, py::arg("budget"), py::arg("fading"),
        py::arg("quad") = QuadratureSpec{});
  m.def("peak_threshold", &peak_threshold, py::arg("p"), py::arg("qpeak"));
  m.def("make_policy", &make_policy, py::arg("budget"), py::arg("fading"),
        py::arg("quad") = QuadratureSpec{});
  m.def("erasure_prob", &erasure_prob, py::arg("delta"), py::arg("fading"));

  // ---- channel_sim ----
  py::class_<TransmitDecision>(m, "TransmitDecision")
      .def_readonly("power_T", &TransmitDecision::power_T)
      .def_readonly("symbol", &TransmitDecision::symbol);
  py::class_<BlockDiagnostics>(m, "BlockDiagnostics")
      .def_readonly("erasures", &BlockDiagnostics::erasures)
      .def_readonly("total_energy", &BlockDiagnostics::total_energy)
      .def_readonly("peak_power", &BlockDiagnostics::peak_power);
  py::class_<BlockResult>(m, "BlockResult")
      .def_readonly("decoded", &BlockResult::decoded)
      .def_readonly("diagnostics", &BlockResult::diagnostics);
  py::class_<DemodResult>(m, "DemodResult")
      .def_readonly("observation", &DemodResult::observation)
      .def_readonly("llr", &DemodResult::llr);

  m.def("transmit_symbol", &transmit_symbol, py::arg("x_bit"), py::arg("h"), py::arg("p"),
        py::arg("policy"));
  m.def("propagate", &propagate, py::arg("decision"), py::arg("h"), py::arg("sigma2"),
        py::arg("rng"));
  m.def("demodulate", &demodulate, py::arg("y"), py::arg("h"), py::arg("p"), py::arg("sigma2"),
        py::arg("policy"));
  m.def("simulate_block", &simulate_block, py::arg("code"), py::arg("message"), py::arg("budget"),
        py::arg("fading"), py::arg("policy"), py::arg("rng"));
  m.def("cascade_channel", &cascade_channel, py::arg("x_bit"), py::arg("eps"), py::arg("p"),
        py::arg("sigma2"), py::arg("rng"),
        "Returns the received sample, or None when the slot is erased");

  // ---- sim_harness ----
  py::enum_<Scheme>(m, "Scheme")
      .value("proposed", Scheme::proposed)
      .value("mixture_design", Scheme::mixture_design);

  py::enum_<FadingKind>(m, "FadingKind")
      .value("gaussian_real", FadingKind::gaussian_real)
      .value("rayleigh", FadingKind::rayleigh)
      .value("point_mass", FadingKind::point_mass)
      .value("uniform_abs", FadingKind::uniform_abs);

  py::class_<FadingSpec>(m, "FadingSpec")
      .def(py::init<>())
      .def(py::init([](FadingKind kind, double a, double b) {
             return FadingSpec{kind, a, b};
           }),
           py::arg("kind"), py::arg("a"), py::arg("b") = 0.0)
      .def_readwrite("kind", &FadingSpec::kind)
      .def_readwrite("a", &FadingSpec::a)
      .def_readwrite("b", &FadingSpec::b);
  m.def("make_fading", &make_fading, py::arg("spec"));
  m.def("parse_fading", &parse_fading, py::arg("text"));

  py::class_<CampaignConfig>(m, "CampaignConfig")
      .def(py::init<>())
      .def_readwrite("n", &CampaignConfig::n)
      .def_readwrite("k", &CampaignConfig::k)
      .def_readwrite("rate", &CampaignConfig::rate)
      .def_readwrite("sigma2", &CampaignConfig::sigma2)
      .def_readwrite("qpeak", &CampaignConfig::qpeak)
      .def_readwrite("q_grid", &CampaignConfig::q_grid)
      .def_readwrite("fading", &CampaignConfig::fading)
      .def_readwrite("schemes", &CampaignConfig::schemes)
      .def_readwrite("master_seed", &CampaignConfig::master_seed)
      .def_readwrite("max_trials", &CampaignConfig::max_trials)
      .def_readwrite("target_bit_errors", &CampaignConfig::target_bit_errors)
      .def_readwrite("batch_size", &CampaignConfig::batch_size)
      .def_readwrite("threads", &CampaignConfig::threads)
      .def_readwrite("design_power", &CampaignConfig::design_power)
      .def_readwrite("quad", &CampaignConfig::quad);

  py::class_<BerPoint>(m, "BerPoint")
      .def_readonly("q", &BerPoint::q)
      .def_readonly("scheme", &BerPoint::scheme)
      .def_readonly("block_length", &BerPoint::block_length)
      .def_readonly("dimension", &BerPoint::dimension)
      .def_readonly("trials", &BerPoint::trials)
      .def_readonly("bit_errors", &BerPoint::bit_errors)
      .def_readonly("block_errors", &BerPoint::block_errors)
      .def_readonly("ber", &BerPoint::ber)
      .def_readonly("bler", &BerPoint::bler)
      .def_readonly("ci95_halfwidth", &BerPoint::ci95_halfwidth);

  py::class_<EpsPoint>(m, "EpsPoint")
      .def_readonly("q", &EpsPoint::q)
      .def_readonly("sigma_h2", &EpsPoint::sigma_h2)
      .def_readonly("p_design", &EpsPoint::p_design)
      .def_readonly("delta", &EpsPoint::delta)
      .def_readonly("epsilon", &EpsPoint::epsilon);

  py::class_<RatePoint>(m, "RatePoint")
      .def_readonly("q", &RatePoint::q)
      .def_readonly("p_star", &RatePoint::p_star)
      .def_readonly("r_star", &RatePoint::r_star)
      .def_readonly("eps_star", &RatePoint::eps_star);

  py::class_<EpsSweepConfig>(m, "EpsSweepConfig")
      .def(py::init<>())
      .def_readwrite("rate", &EpsSweepConfig::rate)
      .def_readwrite("sigma2", &EpsSweepConfig::sigma2)
      .def_readwrite("qpeak", &EpsSweepConfig::qpeak)
      .def_readwrite("q_grid", &EpsSweepConfig::q_grid)
      .def_readwrite("sigma_h2_grid", &EpsSweepConfig::sigma_h2_grid)
      .def_readwrite("quad", &EpsSweepConfig::quad);

  py::class_<RateSweepConfig>(m, "RateSweepConfig")
      .def(py::init<>())
      .def_readwrite("sigma2", &RateSweepConfig::sigma2)
      .def_readwrite("qpeak", &RateSweepConfig::qpeak)
      .def_readwrite("q_grid", &RateSweepConfig::q_grid)
      .def_readwrite("fading", &RateSweepConfig::fading)
      .def_readwrite("objective", &RateSweepConfig::objective)
      .def_readwrite("quad", &RateSweepConfig::quad);

  m.def("sweep_epsilon_vs_q", &sweep_epsilon_vs_q, py::arg("config"));
  m.def(
      "run_ber_campaign",
      [](const CampaignConfig& config) {
        py::gil_scoped_release release;
        return run_ber_campaign(config);
      },
      py::arg("config"));
  m.def("sweep_optimal_rate",
        [](const RateSweepConfig& config) { return sweep_optimal_rate(config); },
        py::arg("config"));
  m.def("binomial_ci95_halfwidth", &binomial_ci95_halfwidth, py::arg("errors"), py::arg("total"));
}

#include "cli_common.hpp"
#include "looplab/affine_weyl.hpp"
#include "looplab/errors.hpp"
#include "looplab/measures.hpp"
#include "looplab/root_coords.hpp"
#include "looplab/transforms.hpp"
#include "looplab/wiener.hpp"

namespace looplab::cli {
namespace {

// diag ----------------------------------------------------------------------------------------

struct DiagOpts {
  Common common;
  std::string level = "0";
  std::vector<double> lambda{1.0};
  std::size_t n = 100000;
  int truncation = 512;
  std::string general;
  double sine_tol = 5e-3;
};

int run_diag_general(const DiagOpts& o, const Rational& level, std::ostream& os) {
  const RootSystem rs = build_root_system(o.general);
  if (static_cast<int>(o.lambda.size()) != rs.rank)
    throw InvalidInput("--lambda needs " + std::to_string(rs.rank) + " simple-root coordinates for " + rs.label);
  const double l = to_double(level);
  const cplx sine = general_sine_formula(rs, l, o.lambda);
  const cplx gamma = hc_gamma_transform(rs, l, o.lambda);
  const nlohmann::json config = {{"level", to_string(level)}, {"lambda", o.lambda}, {"general", rs.label},
                                 {"dual_coxeter", rs.dual_coxeter}, {"format", o.common.format}};
  if (o.common.format == "json") {
    os << nlohmann::json{{"version", kVersion}, {"config", config},
                         {"sine_formula", {sine.real(), sine.imag()}}, {"gamma_transform", {gamma.real(), gamma.imag()}}}
              .dump(2)
       << "\n";
  } else {
    write_header(os, "diag", config);
    os << "label,sine_formula_re,sine_formula_im,gamma_transform_re,gamma_transform_im\n";
    os << rs.label << "," << num(sine) << "," << num(gamma) << "\n";
  }
  return kExitOk;
}

int run_diag(const DiagOpts& o, std::ostream& out) {
  const Rational level = parse_level(o.level);
  Sink sink(o.common.output, out);
  std::ostream& os = sink.out();
  if (!o.general.empty()) return run_diag_general(o, level, os);
  const double l = to_double(level);
  const MeasureSpec spec = su2_measure(level, o.truncation);
  const nlohmann::json config = {{"level", to_string(level)}, {"lambda", o.lambda}, {"n", o.n},
                                 {"truncation", o.truncation}, {"seed", o.common.seed}, {"format", o.common.format}};
  struct Row {
    double lambda;
    TransformResult mc;
    cplx pp, sine;
    bool within_3sigma, close_to_sine;
  };
  std::vector<Row> rows;
  bool pass = true;
  for (double lam : o.lambda) {
    Row r{lam, mc_diagonal_transform(spec, lam, o.n, o.common.seed, o.common.workers), partial_product(l, lam, o.truncation),
          sine_formula_su2(l, lam), false, false};
    r.within_3sigma = std::abs(r.mc.value - r.pp) <= 3.0 * r.mc.std_error;
    r.close_to_sine = std::abs(r.mc.value - r.sine) < o.sine_tol;
    pass = pass && r.within_3sigma && r.close_to_sine;
    rows.push_back(r);
  }
  if (o.common.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows)
      arr.push_back({{"lambda", r.lambda}, {"mc_value", {r.mc.value.real(), r.mc.value.imag()}}, {"stderr", r.mc.std_error},
                     {"partial_product", {r.pp.real(), r.pp.imag()}}, {"sine_formula", {r.sine.real(), r.sine.imag()}},
                     {"within_3sigma", r.within_3sigma}, {"close_to_sine", r.close_to_sine}});
    os << nlohmann::json{{"version", kVersion}, {"config", config}, {"rows", arr}, {"pass", pass}}.dump(2) << "\n";
  } else {
    write_header(os, "diag", config);
    os << "lambda,mc_value_re,mc_value_im,stderr,partial_product_re,partial_product_im,sine_formula_re,sine_formula_im,"
          "within_3sigma,close_to_sine\n";
    for (const auto& r : rows)
      os << num(r.lambda) << "," << num(r.mc.value) << "," << num(r.mc.std_error) << "," << num(r.pp) << "," << num(r.sine)
         << "," << (r.within_3sigma ? "true" : "false") << "," << (r.close_to_sine ? "true" : "false") << "\n";
  }
  return pass ? kExitOk : kExitGate;
}

// wiener --------------------------------------------------------------------------------------

struct WienerOpts {
  Common common;
  WienerConfig cfg;
  std::size_t self_test_n = 2000;
  double ks_gate = 0.0;
};

nlohmann::json ks_json(const KsResult& k) { return {{"ks", k.statistic}, {"p", k.p_value}, {"n", k.n}}; }

int run_wiener(WienerOpts o, std::ostream& out, std::ostream& err) {
  o.cfg.seed = o.common.seed;
  o.cfg.workers = o.common.workers;
  o.cfg.validate();
  Sink sink(o.common.output, out);
  std::ostream& os = sink.out();
  const nlohmann::json config = {{"beta", o.cfg.beta}, {"steps", o.cfg.steps}, {"n", o.cfg.n_samples},
                                 {"band", o.cfg.resolved_band()}, {"cutoff", o.cfg.resolved_cutoff()},
                                 {"seed", o.cfg.seed}, {"self_test_n", o.self_test_n}, {"format", o.common.format}};
  // The exact-sampler control must pass before any Wiener statistic is reported.
  const Eta0Report self = eta0_reference_experiment(o.self_test_n, derive_seed(o.cfg.seed, 0x5e1f), 4, o.cfg.workers);
  const bool self_ok = self.ks.p_value > 0.01;
  if (!self_ok) {
    err << "error: exact-sampler self-test rejected (p = " << self.ks.p_value << ")\n";
    write_header(os, "wiener", config);
    os << "# self_test " << ks_json(self.ks).dump() << " FAIL\n";
    return kExitGate;
  }
  const Eta0Report rep = eta0_pushforward_experiment(o.cfg);
  const nlohmann::json summary = {{"ks", rep.ks.statistic}, {"p", rep.ks.p_value}, {"n_effective", rep.eta0.size()},
                                  {"failure_rate", rep.failure_rate}, {"resamples", rep.resamples},
                                  {"max_endpoint_defect", rep.max_endpoint_defect},
                                  {"mean_unitarity_defect", rep.mean_unitarity_defect}, {"self_test", ks_json(self.ks)}};
  const bool pass = !(o.ks_gate > 0.0) || rep.ks.statistic < o.ks_gate;
  if (o.common.format == "json") {
    nlohmann::json eta = nlohmann::json::array();
    for (const cplx& v : rep.eta0) eta.push_back({v.real(), v.imag()});
    os << nlohmann::json{{"version", kVersion}, {"config", config}, {"eta0", eta}, {"summary", summary}}.dump(2) << "\n";
  } else {
    write_header(os, "wiener", config);
    os << "sample,eta0_re,eta0_im,u\n";
    for (std::size_t s = 0; s < rep.eta0.size(); ++s) {
      const double m = std::norm(rep.eta0[s]);
      os << s << "," << num(rep.eta0[s]) << "," << num(m / (1.0 + m)) << "\n";
    }
    os << "# summary " << summary.dump() << "\n";
  }
  return pass ? kExitOk : kExitGate;
}

// invariance / reparam ------------------------------------------------------------------------

struct InvOpts {
  Common common;
  std::string level = "0";
  int truncation = 64;
  std::size_t n = 10000;
  std::string observable = "a0";
  std::vector<double> angles{0.3, -0.2, 0.5};
  double loop_eta = 0.0;
  bool control = false;
  std::string control_level = "2";
  bool gate = false;
  int cutoff = 0;
};

void add_inv_options(CLI::App* sub, InvOpts& o) {
  sub->add_option("--level", o.level, "Level l of the sampled product measure");
  sub->add_option("--truncation", o.truncation, "Coordinate truncation T")->check(CLI::PositiveNumber);
  sub->add_option("--n", o.n, "Number of loops");
  sub->add_option("--observable", o.observable, "a0, abs_eta0 or abs_zeta1")
      ->check(CLI::IsMember({"a0", "abs_eta0", "abs_zeta1"}));
  sub->add_option("--cutoff", o.cutoff, "Toeplitz cutoff for refactorization (0: automatic)");
  sub->add_flag("--gate", o.gate, "Exit 2 unless the two-sample KS p-value exceeds 0.01");
}

InvarianceOptions inv_options(const InvOpts& o) {
  InvarianceOptions io;
  io.observable = parse_observable(o.observable);
  io.n = o.n;
  io.seed = o.common.seed;
  io.cutoff = o.cutoff;
  io.workers = o.common.workers;
  return io;
}

int write_invariance(const InvOpts& o, const std::string& command, nlohmann::json config, const InvarianceReport& r,
                     bool pass, std::ostream& os) {
  const nlohmann::json summary = {{"ks", r.ks.statistic}, {"p", r.ks.p_value},
                                  {"n_effective", std::min(r.base.size(), r.moved.size())},
                                  {"failure_rate", r.failure_rate}, {"max_pointwise_diff", r.max_pointwise_diff},
                                  {"pass", pass}};
  if (o.common.format == "json") {
    os << nlohmann::json{{"version", kVersion}, {"config", config}, {"base", r.base}, {"moved", r.moved}, {"summary", summary}}
              .dump(2)
       << "\n";
  } else {
    write_header(os, command, config);
    os << "sample,base,moved\n";
    const std::size_t rows = std::max(r.base.size(), r.moved.size());
    for (std::size_t s = 0; s < rows; ++s)
      os << s << "," << (s < r.base.size() ? num(r.base[s]) : "") << "," << (s < r.moved.size() ? num(r.moved[s]) : "")
         << "\n";
    os << "# summary " << summary.dump() << "\n";
  }
  return pass ? kExitOk : kExitGate;
}

nlohmann::json inv_config(const InvOpts& o, const Rational& level) {
  return {{"level", to_string(level)}, {"truncation", o.truncation}, {"n", o.n}, {"observable", o.observable},
          {"cutoff", o.cutoff}, {"seed", o.common.seed}, {"format", o.common.format}};
}

int run_invariance(const InvOpts& o, std::ostream& out) {
  const Rational level = parse_level(o.level);
  const MeasureSpec spec = su2_measure(level, o.truncation);
  Sink sink(o.common.output, out);
  std::ostream& os = sink.out();
  nlohmann::json config = inv_config(o, level);
  if (o.control) {
    const Rational other = parse_level(o.control_level);
    config["control_level"] = to_string(other);
    const InvarianceReport r = measure_comparison_experiment(spec, su2_measure(other, o.truncation), inv_options(o));
    // The control must reject; otherwise the test has no power.
    return write_invariance(o, "invariance", config, r, r.ks.p_value < 0.01, os);
  }
  if (o.angles.size() != 3) throw InvalidInput("--angles takes three su(2) coordinates");
  const double x[3] = {o.angles[0], o.angles[1], o.angles[2]};
  LaurentLoop h = LaurentLoop::constant(su2_exp(x));
  if (o.loop_eta != 0.0) h = multiply(h, k1_factor(cplx{o.loop_eta, 0.0}, 1));
  config["angles"] = o.angles;
  config["loop_eta"] = o.loop_eta;
  const InvarianceReport r = invariance_experiment(spec, h, inv_options(o));
  return write_invariance(o, "invariance", config, r, !o.gate || r.ks.p_value > 0.01, os);
}

struct ReparamOpts {
  InvOpts inv;
  std::string sigma = "rotation";
  double param = 0.7;
  double exact_tol = 1e-9;
};

int run_reparam(const ReparamOpts& o, std::ostream& out) {
  const Rational level = parse_level(o.inv.level);
  const MeasureSpec spec = su2_measure(level, o.inv.truncation);
  const Mobius sigma = o.sigma == "rotation" ? Mobius::rotation(o.param) : Mobius::hyperbolic(o.param);
  Sink sink(o.inv.common.output, out);
  nlohmann::json config = inv_config(o.inv, level);
  config["sigma"] = o.sigma;
  config["param"] = o.param;
  const InvarianceReport r = reparam_invariance_experiment(spec, sigma, inv_options(o.inv));
  bool pass = !o.inv.gate || r.ks.p_value > 0.01;
  // Rotations commute with the factorization, so equality holds sample by sample.
  if (sigma.is_rotation()) pass = pass && r.failures == 0 && r.max_pointwise_diff < o.exact_tol;
  return write_invariance(o.inv, "reparam", config, r, pass, sink.out());
}

}  // namespace

void register_experiments(CLI::App& app, std::vector<Command>& commands, std::ostream&) {
  {
    auto o = std::make_shared<DiagOpts>();
    auto* sub = app.add_subcommand("diag", "Diagonal-distribution transform E[a0^{-2 i lambda}]: Monte Carlo, partial product, sine formula");
    sub->add_option("--level", o->level, "Level l: sine formula sin(pi/(l+2)) / sin(pi/(l+2) (1 - i lambda))");
    sub->add_option("--lambda", o->lambda, "Spectral parameter(s); with --general, one vector in the simple-root basis");
    sub->add_option("--n", o->n, "Monte Carlo samples")->check(CLI::PositiveNumber);
    sub->add_option("--truncation", o->truncation, "N: eta_0..eta_{N-1} and zeta_1..zeta_N in the product")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--general", o->general, "Root system label; prints the general sine product and Gamma transform");
    sub->add_option("--sine-tol", o->sine_tol, "Gate: |mc - sine formula|");
    add_common(sub, o->common, true);
    commands.push_back({sub, [o](std::ostream& os, std::ostream&) { return run_diag(*o, os); }});
  }
  {
    auto o = std::make_shared<WienerOpts>();
    auto* sub = app.add_subcommand("wiener", "eta_0 of Brownian loops at inverse temperature beta versus the Fubini-Study law");
    sub->add_option("--beta", o->cfg.beta, "Inverse temperature; diffusion time 1/beta")->check(CLI::PositiveNumber);
    sub->add_option("--steps", o->cfg.steps, "Random-walk steps around the circle")->check(CLI::PositiveNumber);
    sub->add_option("--n", o->cfg.n_samples, "Number of loops")->check(CLI::PositiveNumber);
    sub->add_option("--band", o->cfg.band, "Fourier band of the projected loop (0: steps/4)");
    sub->add_option("--cutoff", o->cfg.cutoff, "Toeplitz cutoff (0: max(64, band))");
    sub->add_option("--self-test-n", o->self_test_n, "Loops in the exact-sampler self-test");
    sub->add_option("--ks-gate", o->ks_gate, "Exit 2 when the KS statistic reaches this value (0: report only)");
    add_common(sub, o->common, true);
    commands.push_back({sub, [o](std::ostream& os, std::ostream& err) { return run_wiener(*o, os, err); }});
  }
  {
    auto o = std::make_shared<InvOpts>();
    auto* sub = app.add_subcommand("invariance", "Left translation g -> h g: two-sample KS on a factorization observable");
    add_inv_options(sub, *o);
    sub->add_option("--angles", o->angles, "Constant part of h: exp of these su(2) coordinates")->expected(3);
    sub->add_option("--loop-eta", o->loop_eta, "Also multiply h by the polynomial factor with eta_1 = this value");
    sub->add_flag("--control", o->control, "Power check: level --level versus --control-level; must reject");
    sub->add_option("--control-level", o->control_level, "Second level for --control");
    add_common(sub, o->common, true);
    commands.push_back({sub, [o](std::ostream& os, std::ostream&) { return run_invariance(*o, os); }});
  }
  {
    auto o = std::make_shared<ReparamOpts>();
    auto* sub = app.add_subcommand("reparam", "Reparametrization g -> g o sigma^{-1} by a Mobius map of the circle");
    add_inv_options(sub, o->inv);
    sub->add_option("--sigma", o->sigma, "rotation (gated per sample) or hyperbolic")
        ->check(CLI::IsMember({"rotation", "hyperbolic"}));
    sub->add_option("--param", o->param, "Rotation angle or hyperbolic parameter s");
    sub->add_option("--exact-tol", o->exact_tol, "Gate for rotations: per-sample observable difference");
    add_common(sub, o->inv.common, true);
    commands.push_back({sub, [o](std::ostream& os, std::ostream&) { return run_reparam(*o, os); }});
  }
}

}  // namespace looplab::cli

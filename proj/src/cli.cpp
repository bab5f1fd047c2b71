#include "looplab/cli.hpp"

#include <charconv>

#include "cli_common.hpp"
#include "looplab/affine_weyl.hpp"
#include "looplab/ensemble.hpp"
#include "looplab/errors.hpp"
#include "looplab/measures.hpp"

namespace looplab::cli {

void add_common(CLI::App* sub, Common& c, bool random) {
  sub->add_option("-o,--output", c.output, "Write to this file instead of stdout");
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  if (random) {
    c.seed = default_seed();
    sub->add_option("--seed", c.seed, "Master seed (default: $LOOPLAB_SEED or built-in)");
    sub->add_option("--workers", c.workers, "Worker threads; output does not depend on this")->check(CLI::PositiveNumber);
  }
}

Sink::Sink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
  if (path.empty()) return;
  file_ = std::make_unique<std::ofstream>(path);
  if (!*file_) throw InvalidInput("cannot open output file '" + path + "'");
}

void write_header(std::ostream& os, const std::string& command, const nlohmann::json& config) {
  nlohmann::json j = config;
  j["command"] = command;
  os << "# looplab " << kVersion << " " << j.dump() << "\n";
}

std::string num(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string num(cplx v, const char* sep) { return num(v.real()) + sep + num(v.imag()); }

Rational parse_level(const std::string& text) {
  const Rational l = parse_rational(text);
  if (l <= Rational(-1)) throw InvalidLevel("level must exceed -1, got " + text);
  return l;
}

namespace {

// sample ------------------------------------------------------------------------------------

struct SampleOpts {
  Common common;
  std::string level = "0";
  int truncation = 8;
  std::size_t n = 10;
  std::string general;
};

nlohmann::json cplx_json(cplx v) { return nlohmann::json::array({v.real(), v.imag()}); }

int run_sample(const SampleOpts& o, std::ostream& out) {
  const Rational level = parse_level(o.level);
  Sink sink(o.common.output, out);
  std::ostream& os = sink.out();
  const nlohmann::json config = {{"level", to_string(level)}, {"truncation", o.truncation}, {"n", o.n},
                                 {"seed", o.common.seed}, {"general", o.general}, {"format", o.common.format}};
  const bool json = o.common.format == "json";
  nlohmann::json doc = {{"version", kVersion}, {"config", config}, {"samples", nlohmann::json::array()}};
  if (!json) write_header(os, "sample", config);

  if (o.general.empty()) {
    const MeasureSpec spec = su2_measure(level, o.truncation);
    if (!json) {
      os << "sample";
      for (int i = 0; i < o.truncation; ++i) os << ",eta" << i << "_re,eta" << i << "_im";
      for (int j = 1; j <= o.truncation; ++j) os << ",chi" << j << "_re,chi" << j << "_im";
      os << ",chi0_im";
      for (int k = 1; k <= o.truncation; ++k) os << ",zeta" << k << "_re,zeta" << k << "_im";
      os << ",log_density\n";
    }
    for (std::size_t s = 0; s < o.n; ++s) {
      Rng rng = make_rng(o.common.seed, s);
      const RootCoordsSU2 c = sample_coords(spec, rng);
      const double ld = log_density(spec, c);
      if (json) {
        nlohmann::json row = {{"eta", nlohmann::json::array()}, {"chi", nlohmann::json::array()},
                              {"chi0_im", c.chi0.imag()}, {"zeta", nlohmann::json::array()}, {"log_density", ld}};
        for (const cplx& v : c.eta) row["eta"].push_back(cplx_json(v));
        for (const cplx& v : c.chi) row["chi"].push_back(cplx_json(v));
        for (const cplx& v : c.zeta) row["zeta"].push_back(cplx_json(v));
        doc["samples"].push_back(std::move(row));
      } else {
        os << s;
        for (const cplx& v : c.eta) os << "," << num(v);
        for (const cplx& v : c.chi) os << "," << num(v);
        os << "," << num(c.chi0.imag());
        for (const cplx& v : c.zeta) os << "," << num(v);
        os << "," << num(ld) << "\n";
      }
    }
  } else {
    const RootSystem rs = build_root_system(o.general);
    const ReducedSequence seq = build_periodic_sequence(rs, default_period(rs), o.truncation);
    const MeasureSpec spec = general_measure(rs, exponent_table(rs, seq, level, o.truncation));
    if (!json) {
      os << "sample";
      for (std::size_t i = 0; i < spec.eta_exponents.size(); ++i) os << ",eta" << i << "_re,eta" << i << "_im";
      for (std::size_t j = 1; j <= spec.chi_rates.size(); ++j)
        for (int a = 1; a <= rs.rank; ++a) os << ",chi" << j << "_" << a << "_re,chi" << j << "_" << a << "_im";
      for (int a = 1; a <= rs.rank; ++a) os << ",chi0_" << a;
      for (std::size_t k = 1; k <= spec.zeta_exponents.size(); ++k) os << ",zeta" << k << "_re,zeta" << k << "_im";
      os << ",log_density\n";
    }
    for (std::size_t s = 0; s < o.n; ++s) {
      Rng rng = make_rng(o.common.seed, s);
      const GeneralCoords c = sample_general_coords(spec, rng);
      const double ld = log_density(spec, c);
      if (json) {
        nlohmann::json row = {{"eta", nlohmann::json::array()}, {"chi", nlohmann::json::array()},
                              {"chi0", c.chi0}, {"zeta", nlohmann::json::array()}, {"log_density", ld}};
        for (const cplx& v : c.eta) row["eta"].push_back(cplx_json(v));
        for (const auto& vec : c.chi) {
          nlohmann::json cj = nlohmann::json::array();
          for (const cplx& v : vec) cj.push_back(cplx_json(v));
          row["chi"].push_back(std::move(cj));
        }
        for (const cplx& v : c.zeta) row["zeta"].push_back(cplx_json(v));
        doc["samples"].push_back(std::move(row));
      } else {
        os << s;
        for (const cplx& v : c.eta) os << "," << num(v);
        for (const auto& vec : c.chi)
          for (const cplx& v : vec) os << "," << num(v);
        for (double v : c.chi0) os << "," << num(v);
        for (const cplx& v : c.zeta) os << "," << num(v);
        os << "," << num(ld) << "\n";
      }
    }
  }
  if (json) os << doc.dump(2) << "\n";
  return kExitOk;
}

// identities / roundtrip ----------------------------------------------------------------------

struct EnsembleCli {
  Common common;
  std::string level = "0";
  int m = 64;
  int trials = 20;
  EnsembleOptions ensemble;
  double tol = 1e-6;
  double a0_tol = 1e-6;
  double residual_tol = 1e-8;
};

void add_ensemble_options(CLI::App* sub, EnsembleCli& o) {
  sub->add_option("--level", o.level, "Level l > -1 (stored with the coordinates)");
  sub->add_option("--m", o.m, "Toeplitz cutoff M")->check(CLI::PositiveNumber);
  sub->add_option("--trials", o.trials, "Number of random coordinate sets")->check(CLI::NonNegativeNumber);
  sub->add_option("--max-index", o.ensemble.max_index, "Largest coordinate index T")->check(CLI::PositiveNumber);
  sub->add_option("--support", o.ensemble.support, "Maximum number of nonzero coordinates");
  sub->add_option("--max-modulus", o.ensemble.max_modulus, "Maximum coordinate modulus");
}

nlohmann::json ensemble_config(const EnsembleCli& o, const Rational& level) {
  return {{"level", to_string(level)}, {"m", o.m}, {"trials", o.trials}, {"seed", o.common.seed},
          {"max_index", o.ensemble.max_index}, {"support", o.ensemble.support},
          {"max_modulus", o.ensemble.max_modulus}, {"tol", o.tol}, {"format", o.common.format}};
}

int run_identities(const EnsembleCli& o, std::ostream& out) {
  const Rational level = parse_level(o.level);
  Sink sink(o.common.output, out);
  std::ostream& os = sink.out();
  const nlohmann::json config = ensemble_config(o, level);
  static const char* kNames[3] = {"log_det_AstarA", "log_det_A1starA1", "log_a0_squared"};
  std::vector<IdentityCheck> checks(static_cast<std::size_t>(o.trials));
  parallel_for(checks.size(), o.common.workers, [&](std::size_t t) {
    Rng rng = make_rng(o.common.seed, t);
    checks[t] = identity_check(random_test_coords(rng, to_double(level), o.ensemble), o.m);
  });
  double worst = 0.0;
  for (const auto& c : checks)
    for (double e : c.rel_error) worst = std::max(worst, e);
  const bool pass = worst < o.tol;
  if (o.common.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t t = 0; t < checks.size(); ++t)
      for (std::size_t q = 0; q < 3; ++q)
        rows.push_back({{"trial", t}, {"quantity", kNames[q]}, {"numeric", checks[t].numeric[q]},
                        {"closed_form", checks[t].closed_form[q]}, {"abs_error", checks[t].rel_error[q]}});
    os << nlohmann::json{{"version", kVersion}, {"config", config}, {"rows", rows}, {"max_abs_error", worst}, {"pass", pass}}.dump(2)
       << "\n";
  } else {
    write_header(os, "identities", config);
    os << "trial,quantity,numeric,closed_form,abs_error\n";
    for (std::size_t t = 0; t < checks.size(); ++t)
      for (std::size_t q = 0; q < 3; ++q)
        os << t << "," << kNames[q] << "," << num(checks[t].numeric[q]) << "," << num(checks[t].closed_form[q]) << ","
           << num(checks[t].rel_error[q]) << "\n";
    os << "# max_abs_error " << num(worst) << (pass ? " pass" : " FAIL") << "\n";
  }
  return pass ? kExitOk : kExitGate;
}

int run_roundtrip(const EnsembleCli& o, std::ostream& out) {
  const Rational level = parse_level(o.level);
  Sink sink(o.common.output, out);
  std::ostream& os = sink.out();
  nlohmann::json config = ensemble_config(o, level);
  config["a0_tol"] = o.a0_tol;
  config["residual_tol"] = o.residual_tol;
  std::vector<RoundtripCheck> checks(static_cast<std::size_t>(o.trials));
  parallel_for(checks.size(), o.common.workers, [&](std::size_t t) {
    Rng rng = make_rng(o.common.seed, t);
    checks[t] = roundtrip_check(random_test_coords(rng, to_double(level), o.ensemble), o.m);
  });
  bool pass = true;
  for (const auto& c : checks)
    pass = pass && c.max_coord_error < o.tol && c.birkhoff_residual < o.residual_tol &&
           std::abs(c.a0_triangular - c.a0_dets) < o.a0_tol;
  if (o.common.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t t = 0; t < checks.size(); ++t) {
      const auto& c = checks[t];
      rows.push_back({{"trial", t}, {"max_coord_error", c.max_coord_error}, {"resynthesis_residual", c.resynthesis_residual},
                      {"refined", c.refined}, {"birkhoff_residual", c.birkhoff_residual}, {"a0_triangular", c.a0_triangular},
                      {"a0_dets", c.a0_dets}});
    }
    os << nlohmann::json{{"version", kVersion}, {"config", config}, {"rows", rows}, {"pass", pass}}.dump(2) << "\n";
  } else {
    write_header(os, "roundtrip", config);
    os << "trial,max_coord_error,resynthesis_residual,refined,birkhoff_residual,a0_triangular,a0_dets,a0_diff\n";
    for (std::size_t t = 0; t < checks.size(); ++t) {
      const auto& c = checks[t];
      os << t << "," << num(c.max_coord_error) << "," << num(c.resynthesis_residual) << "," << (c.refined ? 1 : 0) << ","
         << num(c.birkhoff_residual) << "," << num(c.a0_triangular) << "," << num(c.a0_dets) << ","
         << num(std::abs(c.a0_triangular - c.a0_dets)) << "\n";
    }
    os << "# " << (pass ? "pass" : "FAIL") << "\n";
  }
  return pass ? kExitOk : kExitGate;
}

// affine --------------------------------------------------------------------------------------

struct AffineOpts {
  Common common;
  std::string type = "A";
  int rank = 1;
  std::string level = "0";
  int horizon = 4;
  std::vector<int> period;
};

std::string join(const IntVec& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? std::string(1, sep) : std::string()) + std::to_string(v[i]);
  return s;
}

int run_affine(const AffineOpts& o, std::ostream& out) {
  const Rational level = parse_level(o.level);
  if (o.type.size() != 1) throw InvalidInput("--type must be one letter");
  const RootSystem rs = build_root_system(o.type[0], o.rank);
  const IntVec period = o.period.empty() ? default_period(rs) : IntVec(o.period.begin(), o.period.end());
  const ReducedSequence seq = build_periodic_sequence(rs, period, o.horizon);
  const ExponentTable table = exponent_table(rs, seq, level, o.horizon);
  Sink sink(o.common.output, out);
  std::ostream& os = sink.out();
  const nlohmann::json config = {{"type", rs.label.substr(0, 1)}, {"rank", rs.rank}, {"level", to_string(level)},
                                 {"horizon", o.horizon}, {"period", period}, {"format", o.common.format}};
  const nlohmann::json word = {{"label", rs.label}, {"dual_coxeter", rs.dual_coxeter}, {"period", period},
                               {"period_length", seq.period_length}, {"reduced_word", seq.indices},
                               {"w0_word", table.w0_word}};
  auto entry_json = [](const char* kind, const ExponentEntry& e) {
    return nlohmann::json{{"kind", kind}, {"index", e.index}, {"root", to_string(e.root)}, {"q", e.root.q},
                          {"alpha", e.root.alpha}, {"exponent", to_string(e.exponent)}};
  };
  if (o.common.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& e : table.zeta) rows.push_back(entry_json("zeta", e));
    for (const auto& e : table.eta) rows.push_back(entry_json("eta", e));
    nlohmann::json rates = nlohmann::json::array();
    for (const auto& r : table.chi_rates) rates.push_back(to_string(r));
    os << nlohmann::json{{"version", kVersion}, {"config", config}, {"sequence", word}, {"exponents", rows}, {"chi_rates", rates}}.dump(2)
       << "\n";
    return kExitOk;
  }
  write_header(os, "affine", config);
  os << "# sequence " << word.dump() << "\n";
  os << "kind,index,root,q,alpha,exponent\n";
  auto row = [&](const char* kind, const ExponentEntry& e) {
    os << kind << "," << e.index << "," << to_string(e.root) << "," << e.root.q << "," << join(e.root.alpha, ';') << ","
       << to_string(e.exponent) << "\n";
  };
  for (const auto& e : table.zeta) row("zeta", e);
  for (const auto& e : table.eta) row("eta", e);
  for (std::size_t j = 0; j < table.chi_rates.size(); ++j)
    os << "chi," << j + 1 << ",," << j + 1 << ",," << to_string(table.chi_rates[j]) << "\n";
  return kExitOk;
}

}  // namespace

void register_basic(CLI::App& app, std::vector<Command>& commands, std::ostream&) {
  {
    auto o = std::make_shared<SampleOpts>();
    auto* sub = app.add_subcommand("sample", "Exact draws from the product measure on root subgroup coordinates");
    sub->add_option("--level", o->level, "Level l > -1: eta exponent 2+(l+2)i, chi rate 2j(l+2), zeta exponent (l+2)k");
    sub->add_option("--truncation", o->truncation, "T: eta_0..eta_{T-1}, chi_1..chi_T, zeta_1..zeta_T (horizon for --general)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--n", o->n, "Number of samples");
    sub->add_option("--general", o->general, "Root system label (e.g. A2, G2): exponents 1+(l+g)q -/+ rho(h_alpha)");
    add_common(sub, o->common, true);
    commands.push_back({sub, [o](std::ostream& os, std::ostream&) { return run_sample(*o, os); }});
  }
  {
    auto o = std::make_shared<EnsembleCli>();
    auto* sub = app.add_subcommand("identities",
                                   "Truncated Toeplitz determinants det(A*A), det(A1*A1) and a0^2 versus their closed-form products");
    add_ensemble_options(sub, *o);
    sub->add_option("--tol", o->tol, "Gate: maximal relative error");
    add_common(sub, o->common, true);
    commands.push_back({sub, [o](std::ostream& os, std::ostream&) { return run_identities(*o, os); }});
  }
  {
    auto o = std::make_shared<EnsembleCli>();
    o->tol = 1e-8;
    auto* sub = app.add_subcommand("roundtrip", "Coordinates -> loop -> recovered coordinates, and a0 two ways");
    add_ensemble_options(sub, *o);
    sub->add_option("--tol", o->tol, "Gate: per-coordinate error");
    sub->add_option("--a0-tol", o->a0_tol, "Gate: |a0 (triangular) - a0 (determinants)|");
    sub->add_option("--residual-tol", o->residual_tol, "Gate: Birkhoff factorization residual");
    add_common(sub, o->common, true);
    commands.push_back({sub, [o](std::ostream& os, std::ostream&) { return run_roundtrip(*o, os); }});
  }
  {
    auto o = std::make_shared<AffineOpts>();
    auto* sub = app.add_subcommand("affine", "Affine periodic reduced sequence and the exponent table of the general measure");
    sub->add_option("--type", o->type, "Cartan type letter A-G");
    sub->add_option("--rank", o->rank, "Rank r")->check(CLI::PositiveNumber);
    sub->add_option("--level", o->level, "Level l > -1 (exact rational, e.g. 7/2 or 3.5)");
    sub->add_option("--horizon", o->horizon, "Largest q in zeta roots q delta - alpha")->check(CLI::PositiveNumber);
    sub->add_option("--period", o->period, "Strictly dominant coroot-lattice period (coroot coordinates)");
    add_common(sub, o->common, false);
    commands.push_back({sub, [o](std::ostream& os, std::ostream&) { return run_affine(*o, os); }});
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"looplab: numerical experiments on loop groups, root subgroup coordinates and product measures"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  app.footer("Exit codes: 0 ok, 1 usage error, 2 gate failed, 3 numerical failure.\n"
             "Seeds: --seed, else $LOOPLAB_SEED. Every CSV starts with '# looplab <version> <config json>'.");
  std::vector<Command> commands;
  register_basic(app, commands, out);
  register_experiments(app, commands, out);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    out << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    for (const auto& c : commands)
      if (c.app->parsed()) err << c.app->help();
    return kExitUsage;
  }
  try {
    for (const auto& c : commands)
      if (c.app->parsed()) return c.run(out, err);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidLevel& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  err << "error: no command\n";
  return kExitUsage;
}

}  // namespace looplab::cli

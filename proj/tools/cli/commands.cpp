#include "cli/commands.hpp"

#include <cerrno>
#include <cmath>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <numbers>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli/params.hpp"
#include "qhe/core_maps.hpp"
#include "qhe/errors.hpp"
#include "qhe/fcs.hpp"
#include "qhe/microscopic.hpp"
#include "qhe/optimize.hpp"
#include "qhe/verify.hpp"
#include "qhe/version.hpp"

namespace qhe::cli {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Table start(const std::string& command, Params& p, const RunConfig& cfg) {
  p.apply(cfg.overrides);
  return {command, p.resolved(), {}, {}};
}

std::vector<double> decade_grid(double lo, double hi, int per_decade) {
  if (!(lo > 0.0 && hi > lo) || per_decade < 1) {
    throw InvalidParameter("T2 grid needs 0 < t2_min < t2_max and points_per_decade >= 1");
  }
  // Exponents k / per_decade on an integer lattice, so decades (T2/T1 = 1
  // in particular) are hit exactly.
  const int k_lo = static_cast<int>(std::ceil(std::log10(lo) * per_decade - 1e-9));
  const int k_hi = static_cast<int>(std::floor(std::log10(hi) * per_decade + 1e-9));
  std::vector<double> g;
  for (int k = k_lo; k <= k_hi; ++k) g.push_back(std::pow(10.0, static_cast<double>(k) / per_decade));
  return g;
}

Table fig1(const RunConfig& cfg) {
  Params p;
  p.declare("omega_over_T1", 0.5).declare("t2_min", 0.01).declare("t2_max", 1000.0)
      .declare("points_per_decade", 50.0);
  Table t = start("fig1", p, cfg);
  t.columns = {"T2_over_T1", "p_e_eto", "p_e_thermalization"};
  const auto grid = decade_grid(p.number("t2_min"), p.number("t2_max"), p.integer("points_per_decade"));
  for (const EtoScanRow& r : eto_vs_thermalization_scan(p.number("omega_over_T1"), grid)) {
    t.rows.push_back({r.t2_over_t1, r.p_e_eto, r.p_e_thermal});
  }
  return t;
}

Table fig4(const RunConfig& cfg) {
  Params p;
  p.declare("eta_C", 0.5).declare("T_H", 1.0).declare("eta_step", 0.01);
  Table t = start("fig4", p, cfg);
  t.columns = {"eta", "W_otto_nonmarkov", "W_otto_markov", "W_three_stroke"};
  const double eta_C = p.number("eta_C");
  const double step = p.number("eta_step");
  if (!(step > 0.0 && step < eta_C)) throw InvalidParameter("eta_step must lie in (0, eta_C)");
  std::vector<double> etas;
  for (int k = 1; k * step < eta_C - 1e-12; ++k) etas.push_back(k * step);
  const double T_H = p.number("T_H");
  const auto nm = work_efficiency_curve(eta_C, T_H, Curve::otto_nonmarkov, etas);
  const auto m = work_efficiency_curve(eta_C, T_H, Curve::otto_markov, etas);
  const auto ts = work_efficiency_curve(eta_C, T_H, Curve::three_stroke, etas);
  for (std::size_t i = 0; i < etas.size(); ++i) t.rows.push_back({etas[i], nm[i].W, m[i].W, ts[i].W});
  return t;
}

std::vector<double> omega_grid(const Params& p) {
  return log_grid(p.number("omega_min"), p.number("omega_max"), p.integer("points"));
}

Table fig5(const RunConfig& cfg) {
  Params p;
  p.declare("eta", 0.3).declare("eta_C", 0.5).declare("T_H", 1.0).declare("horizon", "both")
      .declare("omega_min", 1e-3).declare("omega_max", 10.0).declare("points", 120.0);
  Table t = start("fig5", p, cfg);
  t.parameters.emplace_back("horizon_codes", "0:single_cycle,1:infinite");
  t.parameters.emplace_back("series_codes", "0:otto_nonmarkov,1:otto_markov,2:three_stroke");
  t.columns = {"horizon", "series", "omega", "W", "variance_over_mean"};
  const std::string& h = p.text("horizon");
  std::vector<Horizon> horizons;
  if (h == "single" || h == "both") horizons.push_back(Horizon::single_cycle);
  if (h == "infinite" || h == "both") horizons.push_back(Horizon::infinite);
  if (horizons.empty()) throw InvalidParameter("horizon must be single, infinite or both");
  const auto grid = omega_grid(p);
  for (Horizon hz : horizons) {
    const double code = hz == Horizon::single_cycle ? 0.0 : 1.0;
    const FluctuationCurves c =
        fluctuation_curve(p.number("eta"), p.number("eta_C"), p.number("T_H"), hz, grid);
    for (const auto& pt : c.nonmarkov) t.rows.push_back({code, 0.0, pt.omega, pt.W, pt.value});
    for (const auto& pt : c.markov) t.rows.push_back({code, 1.0, pt.omega, pt.W, pt.value});
    const auto& s = c.three_stroke;
    t.rows.push_back({code, 2.0, s.omega, s.W, s.value});
  }
  return t;
}

Table fig6(const RunConfig& cfg) {
  Params p;
  p.declare("eta", 0.3).declare("eta_C", 0.5).declare("T_H", 1.0).declare("omega_min", 1e-3)
      .declare("omega_max", 10.0).declare("points", 120.0);
  Table t = start("fig6", p, cfg);
  t.parameters.emplace_back("series_codes", "0:otto_nonmarkov,2:three_stroke");
  t.columns = {"series", "omega", "W", "pcc"};
  const CorrelationCurves c =
      correlation_curve(p.number("eta"), p.number("eta_C"), p.number("T_H"), omega_grid(p));
  for (const auto& pt : c.nonmarkov) t.rows.push_back({0.0, pt.omega, pt.W, pt.value});
  t.rows.push_back({2.0, c.three_stroke.omega, c.three_stroke.W, c.three_stroke.value});
  return t;
}

double or_nan(const std::function<double()>& f) {
  try {
    return f();
  } catch (const ZeroVariance&) {
    return kNaN;
  } catch (const NonPrimitiveMap&) {
    return kNaN;
  }
}

Table sweep(const RunConfig& cfg) {
  Params p;
  p.declare("engine", "otto").declare("regime", "nonmarkov").declare("eta", 0.3)
      .declare("eta_C", 0.5).declare("T_H", 1.0).declare("lambda_H", "auto")
      .declare("lambda_C", "auto").declare("omega_min", 0.05).declare("omega_max", 10.0)
      .declare("points", 50.0);
  Table t = start("sweep", p, cfg);
  t.columns = {"omega", "W", "Q_H", "Q_C", "efficiency", "p_e1", "var_1", "scaled_var", "pcc"};
  const std::string& engine = p.text("engine");
  const std::string& regime_name = p.text("regime");
  if (regime_name != "markov" && regime_name != "nonmarkov") {
    throw InvalidParameter("regime must be markov or nonmarkov");
  }
  const Regime regime = regime_name == "markov" ? Regime::markov : Regime::nonmarkov;
  const double eta_C = p.number("eta_C");
  const double T_H = p.number("T_H");
  const double T_C = (1.0 - eta_C) * T_H;
  auto lambda_or = [&](const char* key, double fallback) {
    return p.text(key) == "auto" ? fallback : p.number(key);
  };

  for (double w : omega_grid(p)) {
    EngineConfig ec;
    double W = 0, Q_H = 0, Q_C = 0, eff = 0, pe1 = 0;
    if (engine == "otto") {
      OttoConfig c = otto_config_at(p.number("eta"), eta_C, T_H, w, regime);
      c.lambda_H = lambda_or("lambda_H", c.lambda_H);
      c.lambda_C = lambda_or("lambda_C", c.lambda_C);
      const OttoCycleReport r = otto_cycle_report(c);
      W = r.W, Q_H = r.Q_H, Q_C = r.Q_C, eff = r.eta, pe1 = r.p1.p_e();
      ec = c;
    } else if (engine == "three_stroke") {
      ThreeStrokeConfig c{w, T_H, T_C, lambda_or("lambda_H", 1.0), lambda_or("lambda_C", 1.0)};
      const ThreeStrokeReport r = three_stroke_report(c);
      W = r.W, Q_H = r.Q_H, Q_C = r.Q_C, eff = r.eta, pe1 = r.p1.p_e();
      ec = c;
    } else {
      throw InvalidParameter("engine must be otto or three_stroke");
    }
    const TiltedMap map = TiltedMap::from_config(ec);
    const PopulationVector p1 = map.steady_state();
    const double var1 = work_moments_N(map, p1, 1).variance;
    const double svar = or_nan([&] { return scaled_cumulants(map).variance; });
    const double pcc = or_nan([&] { return intercycle_pcc(map, p1); });
    t.rows.push_back({w, W, Q_H, Q_C, eff, pe1, var1, svar, pcc});
  }
  return t;
}

Table micro_report(const RunConfig& cfg) {
  Params p;
  p.declare("beta_omega", 1.0).declare("n_max", 60.0).declare("J", 1.0)
      .declare("t_points", 201.0).declare("jt_max", std::numbers::pi);
  Table t = start("micro-report", p, cfg);
  t.parameters.emplace_back("kind_codes", "0:intensity_dependent,1:standard");
  t.columns = {"kind", "Jt", "max_deviation_from_eto"};
  const double J = p.number("J");
  const int n_t = p.integer("t_points");
  if (!(J > 0.0) || n_t < 2) throw InvalidParameter("need J > 0 and t_points >= 2");
  const FockTruncation tr{p.integer("n_max"), 1.0, p.number("beta_omega")};
  std::vector<double> times;
  for (int k = 0; k < n_t; ++k) times.push_back(p.number("jt_max") * k / (n_t - 1) / J);
  for (const auto& r : eto_approximation_report(J, tr, times)) {
    t.rows.push_back({r.kind == CouplingKind::standard ? 1.0 : 0.0, r.Jt, r.deviation});
  }
  return t;
}

int run_verify(const RunConfig& cfg, std::ostream& os) {
  Params p;
  p.declare("perturb", 0.0);
  p.apply(cfg.overrides);
  const auto results = verify::run_suite(cfg.suite, {p.number("perturb")});
  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed;

  if (cfg.format == OutputFormat::json) {
    nlohmann::ordered_json doc;
    doc["metadata"] = {{"command", "verify"}, {"version", kVersion}, {"suite", cfg.suite},
                       {"perturb", p.text("perturb")}};
    doc["checks"] = nlohmann::ordered_json::array();
    for (const auto& r : results) {
      doc["checks"].push_back({{"suite", r.suite}, {"check", r.check}, {"residual", r.residual},
                               {"tolerance", r.tolerance}, {"passed", r.passed}});
    }
    doc["passed"] = ok;
    os << doc.dump(1) << '\n';
  } else {
    os << "# command=verify version=" << kVersion << " suite=" << cfg.suite
       << " perturb=" << p.text("perturb") << '\n';
    for (const auto& r : results) {
      os << (r.passed ? "PASS " : "FAIL ") << r.suite << '/' << r.check
         << " residual=" << format_number(r.residual)
         << " tolerance=" << format_number(r.tolerance) << '\n';
    }
  }
  return ok ? kOk : kVerificationFailure;
}

template <typename Body>
int with_output(const RunConfig& cfg, std::ostream& out, Body&& body) {
  if (cfg.out == "-") return body(out);
  std::ofstream f(cfg.out);
  if (!f) throw IoError("cannot open '" + cfg.out + "' for writing: " + std::strerror(errno));
  const int rc = body(f);
  f.flush();
  if (!f) throw IoError("write to '" + cfg.out + "' failed");
  return rc;
}

}  // namespace

Table build_table(const RunConfig& cfg) {
  if (cfg.command == "fig1") return fig1(cfg);
  if (cfg.command == "fig4") return fig4(cfg);
  if (cfg.command == "fig5") return fig5(cfg);
  if (cfg.command == "fig6") return fig6(cfg);
  if (cfg.command == "sweep") return sweep(cfg);
  if (cfg.command == "micro-report") return micro_report(cfg);
  throw InvalidParameter("unknown command '" + cfg.command + "'");
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "verify") {
      return with_output(cfg, out, [&](std::ostream& os) { return run_verify(cfg, os); });
    }
    const Table t = build_table(cfg);
    return with_output(cfg, out, [&](std::ostream& os) {
      if (cfg.format == OutputFormat::json) {
        write_json(t, os);
      } else {
        write_csv(t, os);
      }
      return int{kOk};
    });
  } catch (const IoError& e) {
    err << "qhe: I/O error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::exception& e) {
    err << "qhe: " << e.what() << '\n';
    return kValidationError;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Thermal-operation quantum heat engine simulator"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::vector<std::string> sets;
  std::string format = "csv";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "output path, '-' for stdout");
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--set", sets, "parameter override key=value (repeatable)");
  };
  for (const char* name : {"fig1", "fig4", "fig5", "fig6", "sweep", "micro-report", "verify"}) {
    CLI::App* sub = app.add_subcommand(name);
    add_common(sub);
    if (std::string(name) == "verify") {
      sub->add_option("--suite", cfg.suite, "all, gibbs-fixed-point, first-law, "
                                            "oracle-equivalence or microscopic-eto");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kValidationError;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = format == "json" ? OutputFormat::json : OutputFormat::csv;
  try {
    for (const auto& kv : sets) {
      auto [k, v] = split_assignment(kv);
      if (!cfg.overrides.emplace(k, v).second) {
        throw InvalidParameter("parameter '" + k + "' set twice");
      }
    }
  } catch (const std::exception& e) {
    err << "qhe: " << e.what() << '\n';
    return kValidationError;
  }
  return run(cfg, out, err);
}

}  // namespace qhe::cli

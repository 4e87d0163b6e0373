#pragma once

// Command-line driver: `family`, `scan` and `verify`.  Kept in a header so the
// test suite can call run() in-process.
//
// Exit codes: 0 pass, 2 rejected input, 3 verification failure, 4 calibration
// failure.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "graysurf/curvature.hpp"
#include "graysurf/errors.hpp"
#include "graysurf/families.hpp"
#include "graysurf/oracle.hpp"
#include "graysurf/profile.hpp"
#include "graysurf/version.hpp"

namespace graysurf::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { ok = 0, invalid_input = 2, verification_failed = 3, calibration_failed = 4 };

struct RunConfig {
  std::string command;
  int genus = 2;
  int k = 1;
  double x = 0.5;
  int eps = 1;
  bool cp2 = false;
  int n = 2048;
  double tol = 1e-6;
  std::string out = ".";
  std::string formats = "csv,json";
  std::uint64_t seed = 7;
  double perturb = 0.0;
  int sweep = 0;
  std::size_t grid = 100000;
  std::size_t count = 100;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ------------------------------------------------------------------ helpers

inline std::vector<std::string> split_formats(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

inline bool wants(const RunConfig& cfg, const std::string& fmt) {
  const auto f = split_formats(cfg.formats);
  return std::find(f.begin(), f.end(), fmt) != f.end();
}

inline void validate(const RunConfig& cfg) {
  for (const auto& f : split_formats(cfg.formats))
    if (f != "csv" && f != "json" && f != "svg")
      throw InputError("unknown format '" + f + "' (expected csv, json, svg)");
  if (cfg.n < 16) throw InputError("--n must be at least 16");
  if (!(cfg.tol > 0.0)) throw InputError("--tol must be positive");
  if (cfg.perturb < 0.0) throw InputError("--perturb must be non-negative");
  if (cfg.sweep < 0) throw InputError("--sweep must be non-negative");
  if (cfg.grid < 1) throw InputError("--grid must be positive");
  if (cfg.cp2) {
    if (cfg.eps != 1 && cfg.eps != -1) throw InputError("--eps must be 1 or -1 with --cp2");
  } else if (cfg.genus < 1) {
    throw InputError("--genus must be >= 1; genus 0 is only available as --cp2");
  }
}

/// Builds the family named by the config. Parameter-range failures become
/// InputError; a positivity failure of a genus family is a verification failure.
inline FamilySpec build_family(const RunConfig& cfg) {
  try {
    return cfg.cp2 ? cp2_family(cfg.x, cfg.eps) : genus_family(cfg.genus, cfg.k, cfg.x);
  } catch (const DomainError& e) {
    throw InputError(e.what());
  } catch (const PositivityError& e) {
    if (cfg.cp2) throw InputError(e.what());
    throw;
  }
}

inline Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

inline Json to_json(const Polynomial& p) {
  Json a = Json::array();
  for (double c : p.coefficients()) a.push_back(number(c));
  return a;
}

inline Json to_json(const Eigen::Vector4d& v) {
  return Json::array({number(v(0)), number(v(1)), number(v(2)), number(v(3))});
}

inline Json config_echo(const RunConfig& cfg) {
  Json j;
  j["command"] = cfg.command;
  j["genus"] = cfg.genus;
  j["k"] = cfg.k;
  j["x"] = cfg.x;
  j["eps"] = cfg.eps;
  j["cp2"] = cfg.cp2;
  j["n"] = cfg.n;
  j["tol"] = cfg.tol;
  j["formats"] = cfg.formats;
  j["seed"] = cfg.seed;
  j["perturb"] = cfg.perturb;
  j["sweep"] = cfg.sweep;
  j["grid"] = cfg.grid;
  j["count"] = cfg.count;
  return j;
}

inline Json spec_json(const FamilySpec& s) {
  Json j;
  j["kind"] = to_string(s.kind);
  j["genus"] = s.genus;
  j["k"] = s.k;
  j["chi"] = s.chi;
  j["s"] = s.s;
  j["K"] = s.K;
  j["A"] = s.A;
  j["eps"] = s.eps;
  j["x"] = s.x;
  j["y"] = s.y;
  j["C"] = s.C;
  j["D"] = s.D;
  j["E"] = s.E;
  j["P"] = to_json(s.P);
  return j;
}

inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path.string());
  f << text;
}

struct Series {
  std::string name;
  std::vector<double> y;
  std::string color;
};

/// Minimal line chart.
inline std::string svg_plot(const std::string& title, const std::string& xlabel,
                            const std::vector<double>& x, const std::vector<Series>& series) {
  const double W = 720, H = 440, left = 70, right = 150, top = 40, bottom = 50;
  double xmin = *std::min_element(x.begin(), x.end());
  double xmax = *std::max_element(x.begin(), x.end());
  double ymin = std::numeric_limits<double>::infinity(), ymax = -ymin;
  for (const auto& s : series)
    for (double v : s.y)
      if (std::isfinite(v)) {
        ymin = std::min(ymin, v);
        ymax = std::max(ymax, v);
      }
  if (!(ymax > ymin)) {
    ymin -= 1.0;
    ymax += 1.0;
  }
  const double pad = 0.05 * (ymax - ymin);
  ymin -= pad;
  ymax += pad;
  if (!(xmax > xmin)) xmax = xmin + 1.0;
  auto px = [&](double v) { return left + (v - xmin) / (xmax - xmin) * (W - left - right); };
  auto py = [&](double v) { return H - bottom - (v - ymin) / (ymax - ymin) * (H - top - bottom); };
  auto f4 = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return std::string(buf);
  };
  auto f1 = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return std::string(buf);
  };

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
    << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<text x=\"" << W / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" << title
    << "</text>\n";
  o << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << W - left - right
    << "\" height=\"" << H - top - bottom << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double xv = xmin + (xmax - xmin) * i / 4.0, yv = ymin + (ymax - ymin) * i / 4.0;
    o << "<text x=\"" << f1(px(xv)) << "\" y=\"" << H - bottom + 16
      << "\" text-anchor=\"middle\">" << f4(xv) << "</text>\n";
    o << "<text x=\"" << left - 6 << "\" y=\"" << f1(py(yv) + 4) << "\" text-anchor=\"end\">"
      << f4(yv) << "</text>\n";
  }
  o << "<text x=\"" << (left + W - right) / 2 << "\" y=\"" << H - 12
    << "\" text-anchor=\"middle\">" << xlabel << "</text>\n";
  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    o << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < x.size(); ++i)
      if (std::isfinite(s.y[i])) o << f1(px(x[i])) << ',' << f1(py(s.y[i])) << ' ';
    o << "\"/>\n";
    const double ly = top + 16 + 18.0 * static_cast<double>(k);
    o << "<line x1=\"" << W - right + 12 << "\" y1=\"" << ly - 4 << "\" x2=\"" << W - right + 32
      << "\" y2=\"" << ly - 4 << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"/>\n";
    o << "<text x=\"" << W - right + 38 << "\" y=\"" << ly << "\">" << s.name << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

// ------------------------------------------------------------------ family

inline bool close_to(double fitted, double exact, double tol) {
  return std::abs(fitted - exact) <= tol * std::max(1.0, std::abs(exact));
}

inline int cmd_family(const RunConfig& cfg, std::ostream& out) {
  const FamilySpec spec = build_family(cfg);
  const ProfileGrid grid = synthesize_profile(spec, cfg.n);
  const BoundaryReport bnd = boundary_report(grid, cfg.tol);
  const ACReport ac = ac_report(grid, cfg.tol);
  const double law = eigen_difference_law(grid);
  const auto spectrum = spectrum_along(grid);

  const auto& pf = ac.profile_fit;
  const auto& mf = ac.mu_fit;
  const bool coeffs_ok = close_to(pf.C, spec.C, cfg.tol) && close_to(pf.D, spec.D, cfg.tol) &&
                         close_to(pf.E, spec.E, cfg.tol) && close_to(mf.C, spec.C, cfg.tol) &&
                         close_to(mf.D, spec.D, cfg.tol);
  const bool passed = bnd.passed && ac.passed && coeffs_ok;

  std::filesystem::create_directories(cfg.out);
  const std::filesystem::path dir(cfg.out);

  if (wants(cfg, "csv")) {
    std::ostringstream csv;
    csv << "t,H,F,G,dF,dG,lambda0,lambda1,lambda2,tau\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const auto& r = spectrum[i];
      for (double v : {grid.t[i], grid.H[i], grid.F[i], grid.G[i], grid.dF[i], grid.dG[i],
                       r.lambda0, r.lambda1, r.lambda2})
        csv << fmt17(v) << ',';
      csv << fmt17(r.tau) << '\n';
    }
    write_text(dir / "profile.csv", csv.str());
  }

  if (wants(cfg, "json")) {
    Json j;
    j["tool"] = "graysurf";
    j["version"] = version;
    j["config"] = config_echo(cfg);
    j["spec"] = spec_json(spec);

    Json coeff;
    coeff["closed_form"] = {{"C", spec.C}, {"D", spec.D}, {"E", spec.E}};
    coeff["fitted_profile"] = {{"C", pf.C}, {"D", pf.D}, {"E", pf.E}, {"kappa", pf.kappa},
                               {"max_residual", pf.max_residual}};
    coeff["fitted_mu"] = {{"C", mf.C},   {"D", mf.D},   {"c1", mf.c1},
                          {"c0", mf.c0}, {"max_residual", mf.max_residual}};
    coeff["match"] = coeffs_ok;
    j["coefficients"] = coeff;

    j["profile"] = {{"a", grid.a}, {"b", grid.b}, {"length", grid.b - grid.a},
                    {"nodes", grid.size()}};

    Json b;
    b["kind"] = to_string(bnd.kind);
    Json res;
    for (const auto& r : bnd.residuals) res[r.name] = number(r.value);
    b["residuals"] = res;
    b["open_ends_nondegenerate"] = bnd.open_ends_nondegenerate;
    b["tolerance"] = bnd.tolerance;
    b["passed"] = bnd.passed;
    j["boundary"] = b;

    Json a;
    a["max_lambda01_gap"] = number(ac.max_lambda01_gap);
    a["lambda_minus_2mu_spread"] = number(ac.lambda_minus_2mu_spread);
    a["lambda_minus_2mu_mean"] = number(ac.lambda_minus_2mu_mean);
    a["mu_fit_residual"] = number(ac.mu_fit.max_residual);
    a["mean_curvature_residual"] = number(ac.mean_curvature_residual);
    a["tau_spread"] = number(ac.tau_spread);
    a["tau_nonconstant"] = ac.tau_nonconstant;
    a["nodes"] = ac.nodes;
    a["tolerance"] = ac.tolerance;
    a["passed"] = ac.passed;
    j["ac"] = a;
    j["eigen_difference_spread"] = number(law);
    j["passed"] = passed;
    write_text(dir / "report.json", j.dump(2) + "\n");
  }

  if (wants(cfg, "svg")) {
    std::vector<double> l0, l1, l2, tau;
    for (const auto& r : spectrum) {
      l0.push_back(r.lambda0);
      l1.push_back(r.lambda1);
      l2.push_back(r.lambda2);
      tau.push_back(r.tau);
    }
    write_text(dir / "profile.svg",
               svg_plot("Profile F, G", "t", grid.t,
                        {{"F", grid.F, "#1f77b4"}, {"G", grid.G, "#d62728"}}));
    write_text(dir / "spectrum.svg",
               svg_plot("Ricci eigenvalues", "t", grid.t,
                        {{"lambda0", l0, "#1f77b4"},
                         {"lambda1", l1, "#ff7f0e"},
                         {"lambda2", l2, "#2ca02c"},
                         {"tau", tau, "#7f7f7f"}}));
  }

  char line[256];
  std::snprintf(line, sizeof line,
                "%s x=%g: length %.12g, boundary %s (max %.2e), AC %s (gap %.2e, spread %.2e, "
                "fit %.2e, mc %.2e)\n",
                to_string(spec.kind), spec.x, grid.b - grid.a, bnd.passed ? "pass" : "FAIL",
                bnd.max_residual(), ac.passed ? "pass" : "FAIL", ac.max_lambda01_gap,
                ac.lambda_minus_2mu_spread, ac.mu_fit.max_residual, ac.mean_curvature_residual);
  out << line;
  out << (passed ? "PASS\n" : "FAIL\n");
  return passed ? ok : verification_failed;
}

// -------------------------------------------------------------------- scan

inline Json nonexistence_json(const NonexistenceReport& r) {
  Json j;
  j["case"] = to_string(r.kind);
  j["grid"] = r.grid;
  j["scanned"] = r.scanned;
  j["worst_residual"] = number(r.worst_residual);
  j["worst_rederived"] = number(r.worst_rederived);
  j["found_solution"] = r.found_solution;
  j["verdict"] = r.verdict;
  if (r.kind == TrivialRuledCase::torus) {
    j["factor"] = "(a+1)(a-1)^3(2a^2+a+2)";
    j["factor_coefficients"] = to_json(r.factor);
    Json roots = Json::array();
    for (double x : r.factor_roots) roots.push_back(x);
    j["factor_roots_above_1"] = roots;
  }
  Json ev = Json::array();
  for (const auto& s : r.evidence) {
    Json e = {{"alpha", s.alpha}, {"value", number(s.value)}};
    if (r.kind == TrivialRuledCase::genus_gt1) e["rederived"] = number(s.rederived);
    ev.push_back(e);
  }
  j["evidence"] = ev;
  return j;
}

inline int cmd_scan(const RunConfig& cfg, std::ostream& out) {
  const auto g = trivial_ruled_nonexistence(TrivialRuledCase::genus_gt1, cfg.grid);
  const auto t = trivial_ruled_nonexistence(TrivialRuledCase::torus, cfg.grid);
  const bool passed = !g.found_solution && !t.found_solution;

  std::filesystem::create_directories(cfg.out);
  const std::filesystem::path dir(cfg.out);
  Json j;
  j["tool"] = "graysurf";
  j["version"] = version;
  j["config"] = config_echo(cfg);
  j["cases"] = Json::array({nonexistence_json(g), nonexistence_json(t)});

  if (cfg.sweep > 0) {
    const double s = bundle_scale(cfg.genus, cfg.k);
    const int eps = cfg.genus == 1 ? 0 : 1;
    const int m = cfg.sweep;
    std::ostringstream csv;
    csv << "x,y,residual\n";
    double worst_anti = 0.0, worst_any = 0.0;
    for (int i = 0; i < m; ++i) {
      const double x = -1.0 + 2.0 * (i + 0.5) / m;
      for (int k = 0; k < m; ++k) {
        const double y = -1.0 + 2.0 * (k + 0.5) / m;
        const double r = compatibility_residual(x, y, s, eps);
        worst_any = std::max(worst_any, std::abs(r));
        csv << fmt17(x) << ',' << fmt17(y) << ',' << fmt17(r) << '\n';
      }
    }
    std::ostringstream anti;
    anti << "x,y,residual\n";
    for (int i = 0; i < m; ++i) {
      const double x = (i + 0.5) / m;
      const double r = compatibility_residual(x, -x, s, eps);
      worst_anti = std::max(worst_anti, std::abs(r));
      anti << fmt17(x) << ',' << fmt17(-x) << ',' << fmt17(r) << '\n';
    }
    if (wants(cfg, "csv")) {
      write_text(dir / "sweep.csv", csv.str());
      write_text(dir / "sweep_antidiagonal.csv", anti.str());
    }
    j["sweep"] = {{"s", s},
                  {"eps", eps},
                  {"points", m * m},
                  {"max_abs_residual", worst_any},
                  {"antidiagonal_max_abs_residual", worst_anti}};
  }
  j["passed"] = passed;
  if (wants(cfg, "json")) write_text(dir / "scan.json", j.dump(2) + "\n");

  char line[256];
  std::snprintf(line, sizeof line, "genus>1 product: max x(alpha) = %.6g, found_solution = %s\n",
                g.worst_residual, g.found_solution ? "true" : "false");
  out << line;
  std::snprintf(line, sizeof line, "torus product: %zu roots above 1, found_solution = %s\n",
                t.factor_roots.size(), t.found_solution ? "true" : "false");
  out << line << (passed ? "PASS\n" : "FAIL\n");
  return passed ? ok : verification_failed;
}

// ------------------------------------------------------------------ verify

inline Json agreement_json(const AgreementReport& r) {
  Json j;
  j["cases"] = r.cases.size();
  j["max_relative_error"] = number(r.max_relative_error);
  std::size_t worst = 0;
  for (std::size_t i = 0; i < r.cases.size(); ++i)
    if (r.cases[i].relative_error > r.cases[worst].relative_error) worst = i;
  if (!r.cases.empty()) {
    const auto& c = r.cases[worst];
    j["worst_case"] = {{"index", c.index},
                       {"s", c.s},
                       {"K", c.K},
                       {"t", c.point.t},
                       {"finite_difference", to_json(c.finite_difference)},
                       {"closed_form", to_json(c.closed_form)}};
  }
  j["tolerance"] = r.tolerance;
  j["passed"] = r.passed;
  return j;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  std::filesystem::create_directories(cfg.out);
  const std::filesystem::path dir(cfg.out);
  Json j;
  j["tool"] = "graysurf";
  j["version"] = version;
  j["config"] = config_echo(cfg);

  const CalibrationReport cal = calibrate();
  Json cj = Json::array();
  for (const auto& c : cal.cases)
    cj.push_back({{"name", c.name},
                  {"chart", to_string(c.chart)},
                  {"expected", to_json(c.expected)},
                  {"measured", to_json(c.measured)},
                  {"error", c.error},
                  {"passed", c.passed}});
  j["calibration"] = {{"cases", cj}, {"tolerance", cal.tolerance}, {"passed", cal.passed}};
  if (!cal.passed) {
    j["passed"] = false;
    if (wants(cfg, "json")) write_text(dir / "verify.json", j.dump(2) + "\n");
    out << "calibration failed on the " << cal.failed_chart << " chart\nFAIL\n";
    return calibration_failed;
  }

  const AgreementReport agree = agreement_suite(cfg.seed, cfg.count);
  j["agreement"] = agreement_json(agree);

  const FamilySpec spec = build_family(cfg);
  const FamilyProfile base(spec);
  const double a = base.a(), b = base.b();
  AgreementReport fam;
  KillingReport kill;
  if (cfg.perturb > 0.0) {
    const PerturbedProfile<FamilyProfile> pert(base, cfg.perturb, 4.0 * std::numbers::pi / (b - a));
    fam = family_agreement(spec, pert, a, b, cfg.seed);
    kill = killing_survey(spec, pert, a, b, cfg.seed);
  } else {
    fam = family_agreement(spec, base, a, b, cfg.seed);
    kill = killing_survey(spec, base, a, b, cfg.seed);
  }
  j["family"] = spec_json(spec);
  j["family_agreement"] = agreement_json(fam);
  Json samples = Json::array();
  for (const auto& s : kill.samples)
    samples.push_back({{"t", s.point.t},
                       {"u", s.point.u},
                       {"v", s.point.v},
                       {"w", s.point.w},
                       {"direction", to_json(s.direction)},
                       {"defect", number(s.defect)}});
  j["killing"] = {{"samples", samples},
                  {"max_defect", number(kill.max_defect)},
                  {"tolerance", kill.tolerance},
                  {"passed", kill.passed}};
  const bool passed = agree.passed && fam.passed && kill.passed;
  j["passed"] = passed;
  if (wants(cfg, "json")) write_text(dir / "verify.json", j.dump(2) + "\n");

  char line[256];
  std::snprintf(line, sizeof line,
                "calibration pass; agreement max rel %.2e over %zu profiles; family agreement "
                "%.2e; killing defect max %.2e\n",
                agree.max_relative_error, agree.cases.size(), fam.max_relative_error,
                kill.max_defect);
  out << line << (passed ? "PASS\n" : "FAIL\n");
  return passed ? ok : verification_failed;
}

// --------------------------------------------------------------------- run

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  RunConfig cfg;
  CLI::App app{"Bi-Hermitian Gray metric families: construction and verification", "graysurf"};
  app.set_version_flag("--version", std::string(version));
  app.set_config("--config", "", "Read options from a key = value file; flags override it");
  app.require_subcommand(1);

  app.add_option("--genus", cfg.genus, "Genus of the base curve (>= 1)")->capture_default_str();
  app.add_option("--k", cfg.k, "Bundle degree")->capture_default_str();
  app.add_option("--x", cfg.x, "Family parameter")->capture_default_str();
  app.add_option("--eps", cfg.eps, "CP2 orientation sign, 1 or -1")->capture_default_str();
  app.add_flag("--cp2", cfg.cp2, "Use the CP2 family instead of a genus family");
  app.add_option("--n", cfg.n, "Grid intervals")->capture_default_str();
  app.add_option("--tol", cfg.tol, "Report tolerance")->capture_default_str();
  app.add_option("--out", cfg.out, "Output directory")->capture_default_str();
  app.add_option("--formats", cfg.formats, "Comma list of csv, json, svg")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  app.add_option("--perturb", cfg.perturb, "Relative perturbation of G (verify)")
      ->capture_default_str();
  app.add_option("--sweep", cfg.sweep, "Compatibility sweep grid size (scan)")
      ->capture_default_str();
  app.add_option("--grid", cfg.grid, "Number of alpha samples (scan)")->capture_default_str();
  app.add_option("--count", cfg.count, "Random profiles in the agreement suite (verify)")
      ->capture_default_str();

  auto* family = app.add_subcommand("family", "Build, synthesize and verify one family member");
  auto* scan = app.add_subcommand("scan", "Nonexistence scans on trivial ruled surfaces");
  auto* verify = app.add_subcommand("verify", "Finite-difference oracle suite");
  for (auto* sub : {family, scan, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : invalid_input;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    validate(cfg);
    if (cfg.command == "family") return cmd_family(cfg, out);
    if (cfg.command == "scan") return cmd_scan(cfg, out);
    return cmd_verify(cfg, out);
  } catch (const InputError& e) {
    err << "invalid input: " << e.what() << '\n';
    return invalid_input;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "invalid output directory: " << e.what() << '\n';
    return invalid_input;
  } catch (const CalibrationError& e) {
    err << e.what() << '\n';
    return calibration_failed;
  } catch (const std::exception& e) {
    err << "verification failed: " << e.what() << '\n';
    return verification_failed;
  }
}

}  // namespace graysurf::cli

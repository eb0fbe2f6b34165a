// vdw: orbits, critical points and meshes for the two-fixed-particle
// Van der Waals potential.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vdw/critical.hpp"
#include "vdw/errors.hpp"
#include "vdw/export.hpp"
#include "vdw/levelset.hpp"
#include "vdw/potential.hpp"
#include "vdw/roots.hpp"
#include "vdw/verify.hpp"

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerify = 3;

// Thrown for bad option combinations detected after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  double l = 1.0;
  double g = 0.0;
  double xMax = 0.0;
  int samples = 1000;
  std::string format = "json";
  std::string out;
  bool json = false;
  int thetaSteps = 64;
  int columns = 200;
  int gridN = 2000;
  double tolerance = 1e-6;
  std::vector<double> coeffs;
  double gMin = 0.0;
  double gMax = 0.0;
  int steps = 9;
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << text;
}

double windowFor(const vdw::SystemConfig<double>& cfg, double G, double xMax) {
  return xMax > 0.0 ? xMax : vdw::defaultXMax(cfg, G);
}

int runOrbit(const Options& o) {
  const vdw::SystemConfig<double> cfg(o.l);
  const auto r = vdw::traceOrbit(cfg, o.g, windowFor(cfg, o.g, o.xMax), o.samples);
  if (o.format == "svg") {
    emit(vdw::toSVG(r, cfg), o.out);
  } else if (o.format == "csv") {
    emit(vdw::toCSV(r), o.out);
  } else {
    emit(vdw::toJSON(r), o.out);
  }
  return 0;
}

int runCritical(const Options& o) {
  const vdw::SystemConfig<double> cfg(o.l);
  const auto pts = vdw::criticalPoints(cfg);
  if (o.json) {
    std::cout << vdw::criticalPointsToJSON(o.l, pts);
    return 0;
  }
  std::printf("%-14s %-11s %-24s %-24s %-14s %s\n", "kind", "class", "x", "y", "hess_det", "provenance");
  for (const auto& p : pts)
    std::printf("%-14s %-11s %-24.17g %-24.17g %-14.6g %s\n", vdw::toString(p.kind).c_str(),
                vdw::toString(p.classification).c_str(), p.x, p.y, p.hessDet, p.provenance.c_str());
  return 0;
}

int runMesh(const Options& o) {
  const vdw::SystemConfig<double> cfg(o.l);
  const auto r = vdw::traceOrbit(cfg, o.g, windowFor(cfg, o.g, o.xMax), o.samples);
  emit(vdw::toMesh(r, o.thetaSteps), o.out);
  std::cerr << "wrote " << o.out << ": " << r.pointCount() * static_cast<std::size_t>(o.thetaSteps)
            << " vertices, topology " << vdw::topologyName(r) << "\n";
  return 0;
}

int runVerify(const Options& o) {
  const vdw::SystemConfig<double> cfg(o.l);
  const double window = windowFor(cfg, o.g, o.xMax);
  const auto rep = vdw::compareWithOracle(cfg, o.g, window, o.columns, o.gridN, o.tolerance);
  std::cout << "l " << vdw::formatNumber(o.l) << "\n"
            << "G " << vdw::formatNumber(o.g) << "\n"
            << "x_max " << vdw::formatNumber(window) << "\n"
            << "columns " << rep.columns << "\n"
            << "count_mismatches " << rep.countMismatches << "\n"
            << "max_location_error " << vdw::formatNumber(rep.maxLocationError) << "\n"
            << "max_membership_residual " << vdw::formatNumber(rep.maxMembershipResidual) << "\n"
            << "tolerance " << vdw::formatNumber(rep.locationTolerance) << "\n"
            << "status " << (rep.ok() ? "ok" : "FAIL") << "\n";
  for (double x : rep.mismatchedColumns) std::cerr << "count mismatch at x = " << vdw::formatNumber(x) << "\n";
  return rep.ok() ? 0 : kExitVerify;
}

int runRoots(const Options& o) {
  if (o.coeffs.size() < 2 || o.coeffs.size() > 5) throw UsageError("--coeffs needs between 2 and 5 values");
  const vdw::Polynomial<double> p{vdw::Polynomial<double>::Coefficients(
      Eigen::Map<const Eigen::VectorXd>(o.coeffs.data(), static_cast<Eigen::Index>(o.coeffs.size())))};
  std::cout << vdw::rootSetToJSON(p.degree(), vdw::solve(p));
  return 0;
}

int runScan(const Options& o) {
  if (o.steps < 1) throw UsageError("--steps must be at least 1");
  if (o.gMax < o.gMin) throw UsageError("--g-max must not be below --g-min");
  const vdw::SystemConfig<double> cfg(o.l);
  std::vector<double> levels;
  for (int i = 0; i < o.steps; ++i)
    levels.push_back(o.steps == 1 ? o.gMin : o.gMin + (o.gMax - o.gMin) * i / (o.steps - 1));
  const auto rows = vdw::topologyScan(cfg, levels, o.xMax, o.samples);
  std::cout << "G,topology,branches\n";
  for (const auto& e : rows)
    std::cout << vdw::formatNumber(e.G) << ',' << vdw::topologyName(e.topology, e.branchCount) << ','
              << e.branchCount << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equipotential orbits and critical points of B2 for two fixed particles"};
  app.set_config("--config", "vdw.toml", "TOML file with one [subcommand] table; flags take precedence");
  app.require_subcommand(1);
  Options o;

  auto addL = [&](CLI::App* sub) { sub->add_option("--l", o.l, "separation of the fixed particles")->required(); };
  auto addG = [&](CLI::App* sub) { sub->add_option("--g,--G", o.g, "level G of B2")->required(); };
  auto addWindow = [&](CLI::App* sub) {
    sub->add_option("--x-max,--x_max", o.xMax, "right edge of the x window; 0 picks it from the level set")
        ->capture_default_str();
    sub->add_option("--samples", o.samples, "x columns")->capture_default_str()->check(CLI::Range(2, 10'000'000));
  };

  auto* orbit = app.add_subcommand("orbit", "trace O(l, G) and write SVG, CSV or JSON");
  addL(orbit);
  addG(orbit);
  addWindow(orbit);
  orbit->add_option("--format", o.format, "output format")
      ->capture_default_str()
      ->check(CLI::IsMember({"svg", "csv", "json"}));
  orbit->add_option("--out", o.out, "output path (stdout when omitted)");

  auto* critical = app.add_subcommand("critical", "list stationary points of B2");
  addL(critical);
  critical->add_flag("--json", o.json, "JSON instead of a table");

  auto* mesh = app.add_subcommand("mesh", "surface of revolution of O(l, G) as Wavefront OBJ");
  addL(mesh);
  addG(mesh);
  addWindow(mesh);
  mesh->add_option("--theta-steps,--theta_steps", o.thetaSteps, "angular samples")
      ->capture_default_str()
      ->check(CLI::Range(3, 1'000'000));
  mesh->add_option("--out", o.out, "output .obj path")->required();

  auto* verify = app.add_subcommand("verify", "compare the closed-form columns with bisection");
  addL(verify);
  addG(verify);
  verify->add_option("--x-max,--x_max", o.xMax, "right edge of the x window; 0 picks it from the level set")
      ->capture_default_str();
  verify->add_option("--columns", o.columns, "x columns compared")->capture_default_str()->check(CLI::Range(2, 1'000'000));
  verify->add_option("--grid-n,--grid_n", o.gridN, "bisection grid intervals per column")
      ->capture_default_str()
      ->check(CLI::Range(2, 10'000'000));
  verify->add_option("--tolerance", o.tolerance, "allowed root location error in u")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  auto* roots = app.add_subcommand("roots", "roots of a0 + a1 u + ... + an u^n, n <= 4, as JSON");
  roots->add_option("--coeffs", o.coeffs, "ascending coefficients, comma separated")->required()->delimiter(',');

  auto* scan = app.add_subcommand("scan", "topology of O(l, G) over evenly spaced levels");
  addL(scan);
  scan->add_option("--g-min,--g_min", o.gMin, "lowest level")->required();
  scan->add_option("--g-max,--g_max", o.gMax, "highest level")->required();
  scan->add_option("--steps", o.steps, "number of levels, endpoints included")->capture_default_str();
  addWindow(scan);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    CLI::App* target = &app;
    for (auto* sub : app.get_subcommands()) target = sub;
    std::cerr << target->help();
    return kExitUsage;
  }

  try {
    if (*orbit) return runOrbit(o);
    if (*critical) return runCritical(o);
    if (*mesh) return runMesh(o);
    if (*verify) return runVerify(o);
    if (*roots) return runRoots(o);
    if (*scan) return runScan(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const vdw::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

#include "vdw/verify.hpp"

#include <algorithm>
#include <cmath>

#include "vdw/oracle.hpp"

namespace vdw {

double heightBound(const SystemConfig<double>& cfg, double G) {
  // Each squared distance is at least y^2 and B(sqrt(s)) >= -2/s, so for
  // G < K_l the level set needs y^2 <= 4 / (K_l - G). For G >= K_l one of
  // the squared distances must drop below 1/2.
  const double gap = pairConstant(cfg) - G;
  const double y2 = gap > 0.0 ? 4.0 / gap : 0.5;
  return std::sqrt(y2) * (1.0 + 1e-9) + 1e-9;
}

std::vector<double> oracleColumnHeights(const SystemConfig<double>& cfg, double G, double x, int gridN) {
  auto f = [&](double y) {
    try {
      return totalPotential2D(cfg, x, y) - G;
    } catch (const SingularityError&) {
      return 1e300;
    }
  };
  return oracle::bisectRoots(f, 0.0, heightBound(cfg, G), gridN);
}

OrbitResult traceOrbitOracle(const SystemConfig<double>& cfg, double G, double xMax, int samples, int gridN) {
  if (samples < 2) throw DomainError("traceOrbitOracle needs at least two samples");
  if (!(xMax > 0.0)) throw DomainError("xMax must be positive");
  const double dx = xMax / (samples - 1);
  std::vector<OrbitColumn> columns;
  for (int i = 0; i < samples; ++i) {
    const double x = i == samples - 1 ? xMax : dx * i;
    OrbitColumn column{x, {}};
    for (double y : oracleColumnHeights(cfg, G, x, gridN)) column.u.push_back(y * y);
    columns.push_back(std::move(column));
  }
  OrbitResult result;
  result.l = cfg.separation();
  result.G = G;
  result.branches = linkBranches(columns, dx);
  result.topology = classifyTopology(result.branches);
  result.provenance = Provenance::OracleOnly;
  return result;
}

VerificationReport compareWithOracle(const SystemConfig<double>& cfg, double G, double xMax, int columns, int gridN,
                                     double locationTolerance) {
  if (columns < 2) throw DomainError("compareWithOracle needs at least two columns");
  VerificationReport report;
  report.locationTolerance = locationTolerance;
  const double dx = xMax / (columns - 1);
  for (int i = 0; i < columns; ++i) {
    const double x = i == columns - 1 ? xMax : dx * i;
    const std::vector<double> algebraic = solveColumn(cfg, G, x);
    std::vector<double> reference;
    for (double y : oracleColumnHeights(cfg, G, x, gridN)) reference.push_back(y * y);
    ++report.columns;

    for (double u : algebraic) {
      const double r = std::abs(totalPotential2D(cfg, x, std::sqrt(u)) - G) / std::max(1.0, std::abs(G));
      report.maxMembershipResidual = std::max(report.maxMembershipResidual, r);
    }
    if (algebraic.size() != reference.size()) {
      ++report.countMismatches;
      report.mismatchedColumns.push_back(x);
      continue;
    }
    for (std::size_t k = 0; k < algebraic.size(); ++k)
      report.maxLocationError = std::max(report.maxLocationError, std::abs(algebraic[k] - reference[k]));
  }
  return report;
}

}  // namespace vdw

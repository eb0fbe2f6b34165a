#pragma once

// Cross-checks of the closed-form orbit pipeline against plain bisection of
// B2(x, .) - G, column by column.

#include <vector>

#include "vdw/levelset.hpp"
#include "vdw/potential.hpp"

namespace vdw {

/// Upper bound on y over the whole level set {B2 = G}.
double heightBound(const SystemConfig<double>& cfg, double G);

/// Heights y >= 0 on column x found by bisection (tangencies counted once).
std::vector<double> oracleColumnHeights(const SystemConfig<double>& cfg, double G, double x, int gridN = 2000);

/// traceOrbit with every column filled by the oracle instead of radicals.
OrbitResult traceOrbitOracle(const SystemConfig<double>& cfg, double G, double xMax, int samples, int gridN = 2000);

struct VerificationReport {
  int columns = 0;
  int countMismatches = 0;
  double maxLocationError = 0.0;     // in u = y^2, over columns with equal counts
  double maxMembershipResidual = 0.0;  // |B2 - G| / max(1, |G|) over algebraic points
  std::vector<double> mismatchedColumns;
  double locationTolerance = 1e-6;

  bool ok() const { return countMismatches == 0 && maxLocationError <= locationTolerance; }
};

/// Compares admissible-u multisets on `columns` uniform x-columns over [0, xMax].
VerificationReport compareWithOracle(const SystemConfig<double>& cfg, double G, double xMax, int columns,
                                     int gridN = 2000, double locationTolerance = 1e-6);

}  // namespace vdw

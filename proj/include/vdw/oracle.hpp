#pragma once

// Plain numerical ground truth used to check the closed-form pipeline:
// bracketing bisection, central finite differences, grid-refine search.
// Nothing here calls into the radical solvers.

#include <functional>
#include <vector>

#include <Eigen/Core>

namespace vdw::oracle {

using ScalarFunction = std::function<double(double)>;
using PlaneFunction = std::function<double(double, double)>;

struct BisectionOptions {
  double tolerance = 1e-12;
  double tangencyValue = 1e-9;
};

/// All roots of f on [lo, hi]: sign changes over gridN equal intervals are
/// bisected, and interior extrema with |f| <= tangencyValue are reported as
/// (double) roots. Sorted ascending.
std::vector<double> bisectRoots(const ScalarFunction& f, double lo, double hi, int gridN,
                                const BisectionOptions& options = {});

Eigen::Vector2d finiteDiffGradient(const PlaneFunction& f, double x, double y, double h);
Eigen::Matrix2d finiteDiffHessian(const PlaneFunction& f, double x, double y, double h);

struct Box {
  Eigen::Vector2d lower;
  Eigen::Vector2d upper;
};

struct MinimizeResult {
  Eigen::Vector2d point;
  double value;
  int levelsUsed;
};

/// Coarse grid over the box, then repeated refinement around the best node
/// until the box diameter drops below 1e-10 or `levels` refinements ran.
MinimizeResult gridRefineMinimize(const PlaneFunction& f, const Box& box, int levels, int gridPoints = 41);

}  // namespace vdw::oracle

#pragma once

// Level sets ("orbits") of B2 restricted to the closed first quadrant.
//
// With u = y^2 and s1 = (x + l/2)^2 + u, s2 = (x - l/2)^2 + u, clearing the
// denominators of B2(x, sqrt(u)) - G = 0 gives
//
//   s2^2 - 2 s1 s2^2 + s1^2 - 2 s2 s1^2 + (K_l - G) s1^2 s2^2 = 0,
//
// a quartic in u whose u^4 coefficient is K_l - G (a cubic when G = K_l).
// Each x column is solved by radicals and the admissible u >= 0 give the
// orbit heights y = sqrt(u).

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "vdw/potential.hpp"
#include "vdw/roots.hpp"

namespace vdw {

struct OrbitTolerance {
  /// |B2(x, y) - G| <= membership * max(1, |G|) for every emitted point.
  static constexpr double membership = 1e-7;
  /// u in [-clamp, 0) is treated as u = 0.
  static constexpr double clamp = 1e-10;
  /// Complex pairs with |Im u| below this (relative) are tangencies if Re u is a near root.
  static constexpr double tangencyImaginary = 1e-6;
};

/// Ascending coefficients c0..c4 of the u-polynomial at fixed (l, G, x).
struct UPolynomialCoeffs {
  Eigen::Matrix<double, 5, 1> ascending;
  bool degenerate = false;  // |c4| below the degeneracy threshold: cubic case

  Polynomial<double> polynomial() const;
  double evaluate(double u) const;
};

UPolynomialCoeffs buildUCoefficients(const SystemConfig<double>& cfg, double G, double x);

/// s1^2 s2^2, the factor relating the u-polynomial to B2 - G.
double clearedDenominator(const SystemConfig<double>& cfg, double x, double u);

/// Admissible u >= 0 (sorted, deduplicated) from the closed-form roots.
std::vector<double> solveForU(const UPolynomialCoeffs& coeffs);

/// Admissible u at column x that also pass the direct membership check.
std::vector<double> solveColumn(const SystemConfig<double>& cfg, double G, double x);

enum class Topology { Empty, Point, OneBranch, TwoBranches, Other };
enum class Provenance { Algebraic, OracleOnly };

struct OrbitPoint {
  double x;
  double y;
  double u;
  int branchId;
};

struct OrbitBranch {
  int id;
  std::vector<OrbitPoint> points;
};

struct OrbitResult {
  double l = 0.0;
  double G = 0.0;
  std::vector<OrbitBranch> branches;
  Topology topology = Topology::Empty;
  Provenance provenance = Provenance::Algebraic;

  std::size_t pointCount() const;
};

/// Sample columns of candidate points, one sorted y-list per x.
struct OrbitColumn {
  double x;
  std::vector<double> u;
};

/// Links points of consecutive columns into x-monotone branches.
std::vector<OrbitBranch> linkBranches(const std::vector<OrbitColumn>& columns, double dx);

Topology classifyTopology(const std::vector<OrbitBranch>& branches);

/// "Empty", "Point", "OneBranch", "TwoBranches" or "Other(n)".
std::string topologyName(Topology topology, std::size_t branchCount);
std::string topologyName(const OrbitResult& result);
std::string toString(Provenance provenance);

/// Right edge of the sampling window: 1 + l/2 + the largest x with an
/// admissible u, found by stepping outwards until 50 empty columns in a row.
double defaultXMax(const SystemConfig<double>& cfg, double G);

/// Orbit O(l, G) on the uniform grid x_i = i * xMax / (samples - 1).
/// Levels below m_l give an Empty result.
OrbitResult traceOrbit(const SystemConfig<double>& cfg, double G, double xMax, int samples);

struct ScanEntry {
  double G;
  Topology topology;
  std::size_t branchCount;
};

/// traceOrbit per level. A non-positive xMax selects defaultXMax per level.
std::vector<ScanEntry> topologyScan(const SystemConfig<double>& cfg, const std::vector<double>& gValues, double xMax,
                                    int samples);

}  // namespace vdw

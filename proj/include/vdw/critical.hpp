#pragma once

#include <span>
#include <string>
#include <vector>

#include "vdw/potential.hpp"
#include "vdw/roots.hpp"

namespace vdw {

enum class CriticalKind { Origin, Collinear, Perpendicular };
enum class Classification { Minimum, Saddle, Maximum, Degenerate };

/// Stationary point of B2 (first-quadrant representative).
struct CriticalPoint {
  double x;
  double y;
  CriticalKind kind;
  Classification classification;
  double hessDet;
  double gradientNorm;
  /// "closed_form" when the location comes from a radical formula,
  /// "identity" for the origin, whose location holds for every l.
  std::string provenance;
};

std::string toString(CriticalKind kind);
std::string toString(Classification classification);

/// Stationarity of y = 0 reduces dB2/dx to x times a cubic in u = x^2:
///   -64 u^3 + (64 - 16 l^2) u^2 + (20 l^4 + 160 l^2) u + (20 l^4 - 3 l^6).
Polynomial<double> collinearPolynomial(const SystemConfig<double>& cfg);

/// How a positive root u of the collinear cubic maps back to x.
enum class CollinearReading { SquareRoot, Square };

struct CollinearCandidate {
  double u;
  double x;
  CollinearReading reading;
  double gradientNorm;
  bool accepted;
};

/// Every positive root of the collinear cubic with the x it maps to. x = sqrt(u)
/// is tried first, x = u^2 second; candidates failing the gradient check at
/// 1e-6 (relative to 1 + |B2|) under both readings are kept with accepted = false.
std::vector<CollinearCandidate> collinearCandidates(const SystemConfig<double>& cfg);

/// Classification from the Hessian: det > 0 with positive curvature is a
/// minimum, det < 0 a saddle, |det| tiny relative to |H|^2 degenerate.
Classification classifyHessian(const Matrix2<double>& H);

/// Origin, the perpendicular apex (0, sqrt(4 - l^2)/2) for l < 2, and the
/// axis points from collinearCandidates(). Sorted by (x, y).
std::vector<CriticalPoint> criticalPoints(const SystemConfig<double>& cfg);

/// Hessian determinant at the perpendicular apex in closed form,
/// 16 l^2 (4 - l^2). Requires 0 < l < 2.
double hessianAtPerpendicular(const SystemConfig<double>& cfg);

/// (0, sqrt(4 - l^2)/2) per separation; each l must lie in (0, 2).
std::vector<Point2<double>> virtualParticleLimit(std::span<const double> separations);

}  // namespace vdw

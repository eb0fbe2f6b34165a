#include "vdw/critical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace vdw {

namespace {

constexpr double kPerpendicularGradientTol = 1e-7;
constexpr double kCollinearGradientTol = 1e-6;

double gradientNormAt(const SystemConfig<double>& cfg, double x, double y) {
  return gradient2D(cfg, x, y).norm();
}

bool stationary(const SystemConfig<double>& cfg, double x, double y, double tol, double& norm) {
  try {
    norm = gradientNormAt(cfg, x, y);
    return norm <= tol * (1.0 + std::abs(totalPotential2D(cfg, x, y)));
  } catch (const SingularityError&) {
    return false;
  }
}

CriticalPoint makePoint(const SystemConfig<double>& cfg, double x, double y, CriticalKind kind, double gradNorm,
                        std::string provenance) {
  const Matrix2<double> H = hessian2D(cfg, x, y);
  return {x, y, kind, classifyHessian(H), H.determinant(), gradNorm, std::move(provenance)};
}

}  // namespace

std::string toString(CriticalKind kind) {
  switch (kind) {
    case CriticalKind::Origin:
      return "Origin";
    case CriticalKind::Collinear:
      return "Collinear";
    case CriticalKind::Perpendicular:
      return "Perpendicular";
  }
  return "?";
}

std::string toString(Classification classification) {
  switch (classification) {
    case Classification::Minimum:
      return "Minimum";
    case Classification::Saddle:
      return "Saddle";
    case Classification::Maximum:
      return "Maximum";
    case Classification::Degenerate:
      return "Degenerate";
  }
  return "?";
}

Polynomial<double> collinearPolynomial(const SystemConfig<double>& cfg) {
  const double l2 = cfg.separation() * cfg.separation();
  const double l4 = l2 * l2, l6 = l4 * l2;
  return Polynomial<double>{20.0 * l4 - 3.0 * l6, 20.0 * l4 + 160.0 * l2, 64.0 - 16.0 * l2, -64.0};
}

std::vector<CollinearCandidate> collinearCandidates(const SystemConfig<double>& cfg) {
  const Polynomial<double> cubic = collinearPolynomial(cfg);
  const auto rs = solve(cubic);
  std::vector<CollinearCandidate> out;
  for (double u : rs.positiveRealRoots) {
    if (u == 0.0) continue;
    double norm = 0.0;
    const double bySqrt = std::sqrt(u);
    if (stationary(cfg, bySqrt, 0.0, kCollinearGradientTol, norm)) {
      out.push_back({u, bySqrt, CollinearReading::SquareRoot, norm, true});
      continue;
    }
    const double bySquare = u * u;
    double altNorm = 0.0;
    if (stationary(cfg, bySquare, 0.0, kCollinearGradientTol, altNorm)) {
      out.push_back({u, bySquare, CollinearReading::Square, altNorm, true});
      continue;
    }
    out.push_back({u, bySqrt, CollinearReading::SquareRoot, norm, false});
  }
  return out;
}

Classification classifyHessian(const Matrix2<double>& H) {
  const double det = H.determinant();
  if (std::abs(det) <= 1e-10 * H.squaredNorm()) return Classification::Degenerate;
  if (det < 0.0) return Classification::Saddle;
  return H(0, 0) > 0.0 ? Classification::Minimum : Classification::Maximum;
}

std::vector<CriticalPoint> criticalPoints(const SystemConfig<double>& cfg) {
  const double l = cfg.separation();
  std::vector<CriticalPoint> points;
  points.push_back(makePoint(cfg, 0.0, 0.0, CriticalKind::Origin, gradientNormAt(cfg, 0.0, 0.0), "identity"));

  if (l < 2.0) {
    // 4 y^2 + l^2 - 4 = 0 from dB2/dy on the perpendicular bisector.
    const auto rs = solveQuadratic(4.0, 0.0, l * l - 4.0);
    for (double y : rs.positiveRealRoots) {
      double norm = 0.0;
      if (y > 0.0 && stationary(cfg, 0.0, y, kPerpendicularGradientTol, norm))
        points.push_back(makePoint(cfg, 0.0, y, CriticalKind::Perpendicular, norm, "closed_form"));
    }
  }

  for (const auto& c : collinearCandidates(cfg))
    if (c.accepted) points.push_back(makePoint(cfg, c.x, 0.0, CriticalKind::Collinear, c.gradientNorm, "closed_form"));

  std::sort(points.begin(), points.end(),
            [](const CriticalPoint& a, const CriticalPoint& b) { return std::tie(a.x, a.y) < std::tie(b.x, b.y); });
  return points;
}

double hessianAtPerpendicular(const SystemConfig<double>& cfg) {
  const double l = cfg.separation();
  if (!(l < 2.0)) throw DomainError("the perpendicular critical point exists only for l < 2");
  const double closedForm = -16.0 * l * l * (l * l - 4.0);
  const double analytic = hessianDet2D(cfg, 0.0, std::sqrt(4.0 - l * l) / 2.0);
  if (std::abs(closedForm - analytic) > 1e-6 * std::abs(closedForm))
    throw std::logic_error("perpendicular Hessian closed form disagrees with the analytic Hessian");
  return closedForm;
}

std::vector<Point2<double>> virtualParticleLimit(std::span<const double> separations) {
  std::vector<Point2<double>> out;
  out.reserve(separations.size());
  for (double l : separations) {
    if (!(l > 0.0 && l < 2.0)) throw DomainError("virtualParticleLimit needs every l in (0, 2)");
    out.emplace_back(0.0, std::sqrt(4.0 - l * l) / 2.0);
  }
  return out;
}

}  // namespace vdw

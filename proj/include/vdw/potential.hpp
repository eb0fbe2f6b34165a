#pragma once

// Van der Waals model pair potential B(d) = 1/d^4 - 2/d^2 and the total
// potential felt by a free particle from two fixed particles at (+-l/2, 0, 0).
//
// Everything is written in terms of squared distances s so that B only
// ever sees s = (x +- l/2)^2 + y^2; this keeps the reflection symmetries
// B2(x, y) = B2(-x, y) = B2(x, -y) exact in floating point.

#include <cmath>
#include <string>

#include <Eigen/Core>
#include <Eigen/LU>

#include "vdw/errors.hpp"

namespace vdw {

/// Separation l of the two fixed particles. Always finite and positive.
template <typename Scalar = double>
class SystemConfig {
 public:
  explicit SystemConfig(Scalar separation) : separation_(separation) {
    if (!(separation > Scalar(0)) || !std::isfinite(separation))
      throw DomainError("particle separation l must be positive and finite");
  }

  Scalar separation() const { return separation_; }
  Scalar halfSeparation() const { return separation_ / Scalar(2); }

 private:
  Scalar separation_;
};

template <typename Scalar>
using Point2 = Eigen::Matrix<Scalar, 2, 1>;
template <typename Scalar>
using Matrix2 = Eigen::Matrix<Scalar, 2, 2>;

inline constexpr double kSingularDistanceSquared = 1e-24;

namespace detail {

template <typename Scalar>
void requireRegular(Scalar s) {
  if (!(s >= Scalar(kSingularDistanceSquared))) throw SingularityError("evaluation at a fixed particle position");
}

// B as a function of the squared distance and its first two derivatives in s.
template <typename Scalar>
Scalar pairFromSquared(Scalar s) {
  const Scalar inv = Scalar(1) / s;
  return inv * inv - Scalar(2) * inv;
}
template <typename Scalar>
Scalar pairSlope(Scalar s) {
  const Scalar inv = Scalar(1) / s;
  return Scalar(2) * inv * inv - Scalar(2) * inv * inv * inv;
}
template <typename Scalar>
Scalar pairCurvature(Scalar s) {
  const Scalar inv = Scalar(1) / s;
  const Scalar inv3 = inv * inv * inv;
  return Scalar(6) * inv3 * inv - Scalar(4) * inv3;
}

}  // namespace detail

template <typename Scalar>
Scalar pairPotential(Scalar d) {
  if (!(d > Scalar(0))) throw DomainError("pair distance must be positive");
  return detail::pairFromSquared(d * d);
}

/// K_l = B(l), the constant interaction of the two fixed particles.
template <typename Scalar>
Scalar pairConstant(const SystemConfig<Scalar>& cfg) {
  return detail::pairFromSquared(cfg.separation() * cfg.separation());
}

/// B2 at axial coordinate x and squared distance rho2 from the particle axis.
template <typename Scalar>
Scalar potentialFromRadial(const SystemConfig<Scalar>& cfg, Scalar x, Scalar rho2) {
  const Scalar h = cfg.halfSeparation();
  const Scalar a = x + h, b = x - h;
  const Scalar s1 = a * a + rho2, s2 = b * b + rho2;
  detail::requireRegular(s1);
  detail::requireRegular(s2);
  return (detail::pairFromSquared(s1) + detail::pairFromSquared(s2)) + pairConstant(cfg);
}

template <typename Scalar>
Scalar totalPotential2D(const SystemConfig<Scalar>& cfg, Scalar x, Scalar y) {
  return potentialFromRadial(cfg, x, y * y);
}

template <typename Scalar>
Scalar totalPotential2D(const SystemConfig<Scalar>& cfg, const Point2<Scalar>& p) {
  return totalPotential2D(cfg, p.x(), p.y());
}

template <typename Scalar>
Scalar totalPotential3D(const SystemConfig<Scalar>& cfg, Scalar x, Scalar y, Scalar z) {
  return potentialFromRadial(cfg, x, y * y + z * z);
}

template <typename Scalar>
Point2<Scalar> gradient2D(const SystemConfig<Scalar>& cfg, Scalar x, Scalar y) {
  const Scalar h = cfg.halfSeparation();
  const Scalar y2 = y * y;
  Point2<Scalar> g = Point2<Scalar>::Zero();
  for (const Scalar ax : {x + h, x - h}) {
    const Scalar s = ax * ax + y2;
    detail::requireRegular(s);
    const Scalar slope = Scalar(2) * detail::pairSlope(s);
    g.x() += slope * ax;
    g.y() += slope * y;
  }
  return g;
}

template <typename Scalar>
Matrix2<Scalar> hessian2D(const SystemConfig<Scalar>& cfg, Scalar x, Scalar y) {
  const Scalar h = cfg.halfSeparation();
  const Scalar y2 = y * y;
  Matrix2<Scalar> H = Matrix2<Scalar>::Zero();
  for (const Scalar ax : {x + h, x - h}) {
    const Scalar s = ax * ax + y2;
    detail::requireRegular(s);
    const Scalar slope = detail::pairSlope(s);
    const Scalar curv = detail::pairCurvature(s);
    H(0, 0) += Scalar(4) * curv * ax * ax + Scalar(2) * slope;
    H(1, 1) += Scalar(4) * curv * y2 + Scalar(2) * slope;
    H(0, 1) += Scalar(4) * curv * ax * y;
  }
  H(1, 0) = H(0, 1);
  return H;
}

template <typename Scalar>
Scalar hessianDet2D(const SystemConfig<Scalar>& cfg, Scalar x, Scalar y) {
  return hessian2D(cfg, x, y).determinant();
}

enum class MinimumSource { ClosedForm, Oracle };

struct GlobalMinimum {
  double value;
  Point2<double> point;
  MinimumSource source;
};

/// m_l and a minimizer in the closed first quadrant. For l < 2 the minimizer
/// is the apex (0, sqrt(4 - l^2)/2) where both distances equal 1; for l >= 2
/// it comes from the grid-refine oracle.
GlobalMinimum globalMinimum(const SystemConfig<double>& cfg);

std::string toString(MinimumSource source);

}  // namespace vdw

#pragma once

// Closed-form roots of polynomials up to degree four: quadratic formula,
// Cardano for the cubic, Ferrari for the quartic, plus compositions
// p(x^k) whose inner polynomial has degree <= 4. Everything is templated
// on the real scalar so the same code can run in long double.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "vdw/errors.hpp"

namespace vdw {

struct RootTolerance {
  static constexpr double imaginary = 1e-9;
  static constexpr double cluster = 1e-8;
  static constexpr double positive = 1e-10;
  static constexpr double degeneracy = 1e-12;
  static constexpr double residual = 1e-9;
  static constexpr double newtonDerivative = 1e-12;
};

inline constexpr int kMaxPolynomialDegree = 8;

/// Real polynomial with coefficients stored in ascending order
/// (coeffs[k] multiplies x^k). The degree ignores trailing coefficients
/// that are below the degeneracy threshold relative to the largest one.
template <typename Scalar>
class Polynomial {
 public:
  using Coefficients = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Complex = std::complex<Scalar>;

  explicit Polynomial(Coefficients ascending) : coeffs_(std::move(ascending)) { validate(); }

  Polynomial(std::initializer_list<Scalar> ascending) : coeffs_(static_cast<Eigen::Index>(ascending.size())) {
    Eigen::Index k = 0;
    for (Scalar c : ascending) coeffs_(k++) = c;
    validate();
  }

  const Coefficients& coeffs() const { return coeffs_; }
  Scalar coeff(int k) const { return k < coeffs_.size() ? coeffs_(k) : Scalar(0); }

  int degree() const { return degree_; }
  Scalar leading() const { return coeffs_(degree_); }
  Scalar magnitude() const { return coeffs_.cwiseAbs().maxCoeff(); }

  /// Horner evaluation; T is Scalar or std::complex<Scalar>.
  template <typename T>
  T operator()(const T& x) const {
    T acc(coeffs_(coeffs_.size() - 1));
    for (Eigen::Index k = coeffs_.size() - 2; k >= 0; --k) acc = acc * x + T(coeffs_(k));
    return acc;
  }

  /// sum_k |c_k| |r|^k, the natural magnitude against which p(r) is judged.
  Scalar residualScale(const Complex& r) const {
    const Scalar m = std::abs(r);
    Scalar acc = 0, power = 1;
    for (Eigen::Index k = 0; k < coeffs_.size(); ++k) {
      acc += std::abs(coeffs_(k)) * power;
      power *= m;
    }
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() == 1) return Polynomial({Scalar(0)});
    Coefficients d(coeffs_.size() - 1);
    for (Eigen::Index k = 1; k < coeffs_.size(); ++k) d(k - 1) = Scalar(k) * coeffs_(k);
    return Polynomial(std::move(d));
  }

  /// Scale of the root moduli, max(1, max_k |c_k / c_n|^(1/(n-k))).
  Scalar rootScale() const {
    Scalar s = 1;
    const Scalar lead = std::abs(leading());
    if (lead == Scalar(0)) return s;
    for (int k = 0; k < degree_; ++k)
      s = std::max(s, std::pow(std::abs(coeffs_(k)) / lead, Scalar(1) / Scalar(degree_ - k)));
    return s;
  }

 private:
  void validate() {
    if (coeffs_.size() < 1) throw DomainError("polynomial needs at least one coefficient");
    if (coeffs_.size() > kMaxPolynomialDegree + 1)
      throw UnsupportedDegree("polynomial degree above " + std::to_string(kMaxPolynomialDegree));
    if (!coeffs_.allFinite()) throw DomainError("polynomial coefficients must be finite");
    const Scalar threshold = Scalar(RootTolerance::degeneracy) * magnitude();
    degree_ = 0;
    for (Eigen::Index k = coeffs_.size() - 1; k > 0; --k) {
      if (std::abs(coeffs_(k)) > threshold) {
        degree_ = static_cast<int>(k);
        break;
      }
    }
  }

  Coefficients coeffs_;
  int degree_ = 0;
};

/// Roots with multiplicity, plus the real and non-negative projections.
template <typename Scalar>
struct RootSet {
  std::vector<std::complex<Scalar>> roots;
  std::vector<Scalar> realRoots;
  std::vector<Scalar> positiveRealRoots;
};

/// Real projections of roots whose imaginary part is at most
/// RootTolerance::imaginary * scale, sorted, with near duplicates merged.
template <typename Scalar>
std::vector<Scalar> extractReal(std::span<const std::complex<Scalar>> roots, Scalar scale) {
  std::vector<Scalar> real;
  for (const auto& r : roots)
    if (std::abs(r.imag()) <= Scalar(RootTolerance::imaginary) * scale) real.push_back(r.real());
  std::sort(real.begin(), real.end());

  std::vector<Scalar> merged;
  std::size_t i = 0;
  while (i < real.size()) {
    std::size_t j = i + 1;
    Scalar sum = real[i];
    while (j < real.size() &&
           real[j] - real[i] <= Scalar(RootTolerance::cluster) * std::max(Scalar(1), std::abs(real[i]))) {
      sum += real[j];
      ++j;
    }
    merged.push_back(sum / Scalar(j - i));
    i = j;
  }
  return merged;
}

template <typename Scalar>
std::vector<Scalar> extractReal(const RootSet<Scalar>& rs, Scalar scale) {
  return extractReal<Scalar>(std::span<const std::complex<Scalar>>(rs.roots), scale);
}

namespace detail {

template <typename Scalar>
void requireLeading(Scalar lead, std::initializer_list<Scalar> rest) {
  Scalar m = 0;
  for (Scalar c : rest) {
    if (!std::isfinite(c)) throw DomainError("polynomial coefficients must be finite");
    m = std::max(m, std::abs(c));
  }
  if (!std::isfinite(lead)) throw DomainError("polynomial coefficients must be finite");
  if (lead == Scalar(0) || std::abs(lead) <= Scalar(RootTolerance::degeneracy) * m)
    throw DegenerateLeadingCoefficient("leading coefficient is degenerate");
}

/// Principal cube root of a complex number.
template <typename Scalar>
std::complex<Scalar> principalCbrt(const std::complex<Scalar>& w) {
  const Scalar m = std::abs(w);
  if (m == Scalar(0)) return {0, 0};
  return std::polar(std::cbrt(m), std::arg(w) / Scalar(3));
}

/// Roots of y^2 + b y + c with complex coefficients, cancellation-free.
template <typename Scalar>
std::array<std::complex<Scalar>, 2> monicQuadratic(std::complex<Scalar> b, std::complex<Scalar> c) {
  using C = std::complex<Scalar>;
  C s = std::sqrt(b * b - Scalar(4) * c);
  if (std::real(std::conj(b) * s) < Scalar(0)) s = -s;
  const C q = Scalar(-0.5) * (b + s);
  if (q == C(0)) return {C(0), C(0)};
  return {q, c / q};
}

/// One Newton step on the original polynomial, kept only if it lowers |p|.
template <typename Scalar>
std::complex<Scalar> polish(const Polynomial<Scalar>& p, std::complex<Scalar> z) {
  using C = std::complex<Scalar>;
  C value(p.coeffs()(p.coeffs().size() - 1)), slope(0);
  Scalar slopeScale = 0;
  const Scalar m = std::abs(z);
  for (Eigen::Index k = p.coeffs().size() - 2; k >= 0; --k) {
    slope = slope * z + value;
    value = value * z + C(p.coeffs()(k));
  }
  Scalar power = 1;
  for (Eigen::Index k = 1; k < p.coeffs().size(); ++k) {
    slopeScale += Scalar(k) * std::abs(p.coeffs()(k)) * power;
    power *= m;
  }
  if (std::abs(slope) <= Scalar(RootTolerance::newtonDerivative) * std::max(slopeScale, Scalar(1))) return z;
  const C next = z - value / slope;
  if (!std::isfinite(next.real()) || !std::isfinite(next.imag())) return z;
  return std::abs(p(next)) <= std::abs(value) ? next : z;
}

template <typename Scalar>
RootSet<Scalar> classify(std::vector<std::complex<Scalar>> roots, Scalar scale) {
  for (const auto& r : roots)
    if (!std::isfinite(r.real()) || !std::isfinite(r.imag()))
      throw DomainError("non-finite root; coefficients out of range");
  RootSet<Scalar> rs;
  rs.roots = std::move(roots);
  rs.realRoots = extractReal(rs, scale);
  for (Scalar r : rs.realRoots)
    if (r >= -Scalar(RootTolerance::positive)) rs.positiveRealRoots.push_back(std::max(r, Scalar(0)));
  return rs;
}

template <typename Scalar>
RootSet<Scalar> finish(const Polynomial<Scalar>& p, std::vector<std::complex<Scalar>> roots) {
  for (auto& r : roots) r = polish(p, r);
  return classify(std::move(roots), p.rootScale());
}

/// Cardano on t^3 + p t + q, t-roots returned unshifted.
template <typename Scalar>
std::array<std::complex<Scalar>, 3> depressedCubic(Scalar p, Scalar q) {
  using C = std::complex<Scalar>;
  const C disc(q * q / Scalar(4) + p * p * p / Scalar(27));
  const C root = std::sqrt(disc);
  const C plus = -q / Scalar(2) + root;
  const C minus = -q / Scalar(2) - root;
  const C u = principalCbrt(std::abs(plus) >= std::abs(minus) ? plus : minus);
  // The partner cube root is fixed by u * v = -p / 3.
  const C v = u == C(0) ? C(0) : C(-p / Scalar(3)) / u;
  const C omega(Scalar(-0.5), std::sqrt(Scalar(3)) / Scalar(2));
  const C omega2 = std::conj(omega);
  return {u + v, omega * u + omega2 * v, omega2 * u + omega * v};
}

/// Roots of x^3 + b x^2 + c x + d.
template <typename Scalar>
std::array<std::complex<Scalar>, 3> monicCubic(Scalar b, Scalar c, Scalar d) {
  const Scalar p = c - b * b / Scalar(3);
  const Scalar q = Scalar(2) * b * b * b / Scalar(27) - b * c / Scalar(3) + d;
  auto t = depressedCubic(p, q);
  for (auto& ti : t) ti -= b / Scalar(3);
  return t;
}

/// Ferrari on y^4 + p y^2 + q y + r using a given resolvent root m of
/// 8 m^3 + 8 p m^2 + (2 p^2 - 8 r) m - q^2.
template <typename Scalar>
std::array<std::complex<Scalar>, 4> depressedQuartic(Scalar p, Scalar q, Scalar r, std::complex<Scalar> m) {
  using C = std::complex<Scalar>;
  const Scalar size = std::abs(p) + std::sqrt(std::abs(r)) + std::cbrt(std::abs(q)) * std::cbrt(std::abs(q));
  if (std::abs(m) <= Scalar(1e-14) * std::max(size, Scalar(1e-300))) {
    // q == 0: biquadratic z^2 + p z + r with y = +-sqrt(z).
    const auto z = monicQuadratic(C(p), C(r));
    const C a = std::sqrt(z[0]), b = std::sqrt(z[1]);
    return {a, -a, b, -b};
  }
  const C alpha = std::sqrt(Scalar(2) * m);
  const C beta = C(q) / (Scalar(2) * alpha);
  const C base = C(p / Scalar(2)) + m;
  const auto first = monicQuadratic(-alpha, base + beta);
  const auto second = monicQuadratic(alpha, base - beta);
  return {first[0], first[1], second[0], second[1]};
}

template <typename Scalar>
struct DepressedQuartic {
  Scalar shift, p, q, r;
};

template <typename Scalar>
DepressedQuartic<Scalar> depress(Scalar a4, Scalar a3, Scalar a2, Scalar a1, Scalar a0) {
  const Scalar b = a3 / a4, c = a2 / a4, d = a1 / a4, e = a0 / a4;
  const Scalar b2 = b * b;
  return {b / Scalar(4), c - Scalar(3) * b2 / Scalar(8), d - b * c / Scalar(2) + b2 * b / Scalar(8),
          e - b * d / Scalar(4) + b2 * c / Scalar(16) - Scalar(3) * b2 * b2 / Scalar(256)};
}

}  // namespace detail

template <typename Scalar>
RootSet<Scalar> solveQuadratic(Scalar a2, Scalar a1, Scalar a0) {
  using C = std::complex<Scalar>;
  detail::requireLeading(a2, {a1, a0});
  const Polynomial<Scalar> poly{a0, a1, a2};
  const Scalar disc = a1 * a1 - Scalar(4) * a2 * a0;
  std::vector<C> roots;
  if (disc >= Scalar(0)) {
    const Scalar q = Scalar(-0.5) * (a1 + std::copysign(std::sqrt(disc), a1));
    if (q == Scalar(0)) {
      roots = {C(0), C(0)};
    } else {
      roots = {C(q / a2), C(a0 / q)};
    }
  } else {
    const Scalar re = -a1 / (Scalar(2) * a2);
    const Scalar im = std::sqrt(-disc) / (Scalar(2) * std::abs(a2));
    roots = {C(re, im), C(re, -im)};
  }
  return detail::finish(poly, std::move(roots));
}

template <typename Scalar>
RootSet<Scalar> solveCubic(Scalar a3, Scalar a2, Scalar a1, Scalar a0) {
  detail::requireLeading(a3, {a2, a1, a0});
  const Polynomial<Scalar> poly{a0, a1, a2, a3};
  const auto t = detail::monicCubic(a2 / a3, a1 / a3, a0 / a3);
  return detail::finish(poly, std::vector<std::complex<Scalar>>(t.begin(), t.end()));
}

/// Roots of the Ferrari resolvent 8 m^3 + 8 p m^2 + (2 p^2 - 8 r) m - q^2
/// of the depressed form of a4 x^4 + ... + a0, ordered by decreasing real part.
template <typename Scalar>
std::array<std::complex<Scalar>, 3> quarticResolventRoots(Scalar a4, Scalar a3, Scalar a2, Scalar a1, Scalar a0) {
  detail::requireLeading(a4, {a3, a2, a1, a0});
  const auto dq = detail::depress(a4, a3, a2, a1, a0);
  // Monic form m^3 + p m^2 + (p^2/4 - r) m - q^2/8; its leading term never vanishes.
  const Scalar c2 = dq.p, c1 = dq.p * dq.p / Scalar(4) - dq.r, c0 = -dq.q * dq.q / Scalar(8);
  const Polynomial<Scalar> resolvent{c0, c1, c2, Scalar(1)};
  auto out = detail::monicCubic(c2, c1, c0);
  for (auto& m : out) m = detail::polish(resolvent, m);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.real() > b.real(); });
  return out;
}

/// Ferrari with an explicitly chosen resolvent root. The root multiset does
/// not depend on which of the three roots is used.
template <typename Scalar>
RootSet<Scalar> solveQuarticWithResolvent(Scalar a4, Scalar a3, Scalar a2, Scalar a1, Scalar a0,
                                          std::complex<Scalar> resolventRoot) {
  detail::requireLeading(a4, {a3, a2, a1, a0});
  const Polynomial<Scalar> poly{a0, a1, a2, a3, a4};
  const auto dq = detail::depress(a4, a3, a2, a1, a0);
  const auto y = detail::depressedQuartic(dq.p, dq.q, dq.r, resolventRoot);
  std::vector<std::complex<Scalar>> roots;
  for (const auto& yi : y) roots.push_back(yi - dq.shift);
  return detail::finish(poly, std::move(roots));
}

template <typename Scalar>
RootSet<Scalar> solveQuartic(Scalar a4, Scalar a3, Scalar a2, Scalar a1, Scalar a0) {
  const auto resolvent = quarticResolventRoots(a4, a3, a2, a1, a0);
  // The resolvent always has a real root m >= 0 (it is -q^2 <= 0 at m = 0).
  // The largest one keeps sqrt(2 m) away from zero.
  // resolvent is sorted by decreasing real part; take the first real one.
  std::complex<Scalar> best = resolvent[0];
  bool found = false;
  for (const auto& m : resolvent) {
    if (std::abs(m.imag()) <= Scalar(1e-6) * std::max(Scalar(1), std::abs(m))) {
      best = m;
      found = true;
      break;
    }
  }
  if (!found)
    for (const auto& m : resolvent)
      if (std::abs(m.imag()) < std::abs(best.imag())) best = m;
  return solveQuarticWithResolvent(a4, a3, a2, a1, a0, std::complex<Scalar>(std::max(best.real(), Scalar(0))));
}

/// Dispatch on the effective degree. Degree 0 yields no roots; the zero
/// polynomial is rejected.
template <typename Scalar>
RootSet<Scalar> solve(const Polynomial<Scalar>& p) {
  switch (p.degree()) {
    case 0:
      if (p.coeff(0) == Scalar(0)) throw DegenerateLeadingCoefficient("zero polynomial");
      return {};
    case 1:
      return detail::finish(p, {std::complex<Scalar>(-p.coeff(0) / p.coeff(1))});
    case 2:
      return solveQuadratic(p.coeff(2), p.coeff(1), p.coeff(0));
    case 3:
      return solveCubic(p.coeff(3), p.coeff(2), p.coeff(1), p.coeff(0));
    case 4:
      return solveQuartic(p.coeff(4), p.coeff(3), p.coeff(2), p.coeff(1), p.coeff(0));
    default:
      throw UnsupportedDegree("closed-form solving is limited to degree 4, got " + std::to_string(p.degree()));
  }
}

/// Roots of inner(x^k): solve inner for t, then take all k-th roots of each t.
template <typename Scalar>
RootSet<Scalar> solvePowerComposed(const Polynomial<Scalar>& inner, int k) {
  using C = std::complex<Scalar>;
  if (k < 1) throw DomainError("power k must be positive");
  if (inner.degree() > 4) throw UnsupportedDegree("inner polynomial degree above 4");
  const RootSet<Scalar> innerRoots = solve(inner);
  if (k == 1) return innerRoots;

  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> composed = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(inner.degree() * k + 1);
  for (int j = 0; j <= inner.degree(); ++j) composed(j * k) = inner.coeff(j);

  std::vector<C> roots;
  const Scalar turn = Scalar(2) * std::numbers::pi_v<Scalar> / Scalar(k);
  for (const C& t : innerRoots.roots) {
    const C base = std::abs(t) == Scalar(0) ? C(0) : std::polar(std::pow(std::abs(t), Scalar(1) / Scalar(k)), std::arg(t) / Scalar(k));
    for (int j = 0; j < k; ++j) roots.push_back(base * std::polar(Scalar(1), turn * Scalar(j)));
  }
  if (composed.size() > kMaxPolynomialDegree + 1) {
    // Beyond the Polynomial degree cap: no polish step.
    return detail::classify(std::move(roots), std::pow(inner.rootScale(), Scalar(1) / Scalar(k)));
  }
  return detail::finish(Polynomial<Scalar>(std::move(composed)), std::move(roots));
}

}  // namespace vdw

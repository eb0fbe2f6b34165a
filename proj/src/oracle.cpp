#include "vdw/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace vdw::oracle {

namespace {

double bisect(const ScalarFunction& f, double a, double b, double fa, double tol) {
  while (b - a > tol) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    const double fm = f(m);
    if (fm == 0.0) return m;
    if ((fm < 0.0) == (fa < 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

// Golden-section search for the extremum of f inside [a, b]; `minimum`
// selects the direction.
double locateExtremum(const ScalarFunction& f, double a, double b, bool minimum, double tol) {
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  auto g = [&](double t) { return minimum ? f(t) : -f(t); };
  double c = b - ratio * (b - a), d = a + ratio * (b - a);
  double gc = g(c), gd = g(d);
  while (b - a > tol) {
    if (gc < gd) {
      b = d;
      d = c;
      gd = gc;
      c = b - ratio * (b - a);
      gc = g(c);
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + ratio * (b - a);
      gd = g(d);
    }
    if (!(c > a && d < b)) break;
  }
  return 0.5 * (a + b);
}

}  // namespace

std::vector<double> bisectRoots(const ScalarFunction& f, double lo, double hi, int gridN,
                                const BisectionOptions& options) {
  if (!(lo < hi) || gridN < 2) throw std::invalid_argument("bisectRoots needs lo < hi and gridN >= 2");
  const double step = (hi - lo) / gridN;
  std::vector<double> xs(gridN + 1), fs(gridN + 1);
  for (int i = 0; i <= gridN; ++i) {
    xs[i] = i == gridN ? hi : lo + step * i;
    fs[i] = f(xs[i]);
  }

  std::vector<double> roots;
  for (int i = 0; i < gridN; ++i) {
    if (fs[i] == 0.0) {
      roots.push_back(xs[i]);
    } else if (fs[i + 1] != 0.0 && (fs[i] < 0.0) != (fs[i + 1] < 0.0)) {
      roots.push_back(bisect(f, xs[i], xs[i + 1], fs[i], options.tolerance));
    }
  }
  if (fs[gridN] == 0.0) roots.push_back(xs[gridN]);

  // Tangential roots: the discrete slope changes sign at node i without f
  // changing sign in the neighbouring cells.
  for (int i = 1; i < gridN; ++i) {
    const double left = fs[i] - fs[i - 1], right = fs[i + 1] - fs[i];
    if (left == 0.0 || right == 0.0 || (left < 0.0) == (right < 0.0)) continue;
    const bool minimum = left < 0.0;
    if ((fs[i - 1] < 0.0) != (fs[i] < 0.0) || (fs[i] < 0.0) != (fs[i + 1] < 0.0)) continue;
    const double t = locateExtremum(f, xs[i - 1], xs[i + 1], minimum, options.tolerance);
    if (std::abs(f(t)) > options.tangencyValue) continue;
    roots.push_back(t);
  }

  std::sort(roots.begin(), roots.end());
  std::vector<double> unique;
  for (double r : roots)
    if (unique.empty() || r - unique.back() > 10.0 * options.tolerance * std::max(1.0, std::abs(r)))
      unique.push_back(r);
  return unique;
}

Eigen::Vector2d finiteDiffGradient(const PlaneFunction& f, double x, double y, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  return {(f(x + h, y) - f(x - h, y)) / (2.0 * h), (f(x, y + h) - f(x, y - h)) / (2.0 * h)};
}

Eigen::Matrix2d finiteDiffHessian(const PlaneFunction& f, double x, double y, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  const double f0 = f(x, y);
  Eigen::Matrix2d H;
  H(0, 0) = (f(x + h, y) - 2.0 * f0 + f(x - h, y)) / (h * h);
  H(1, 1) = (f(x, y + h) - 2.0 * f0 + f(x, y - h)) / (h * h);
  H(0, 1) = (f(x + h, y + h) - f(x + h, y - h) - f(x - h, y + h) + f(x - h, y - h)) / (4.0 * h * h);
  H(1, 0) = H(0, 1);
  return H;
}

MinimizeResult gridRefineMinimize(const PlaneFunction& f, const Box& box, int levels, int gridPoints) {
  if (levels < 1 || gridPoints < 3) throw std::invalid_argument("gridRefineMinimize needs levels >= 1");
  Eigen::Vector2d lower = box.lower, upper = box.upper;
  if (!((upper - lower).minCoeff() > 0.0)) throw std::invalid_argument("degenerate search box");

  MinimizeResult best{lower, std::numeric_limits<double>::infinity(), 0};
  for (int level = 0; level < levels; ++level) {
    const Eigen::Vector2d step = (upper - lower) / (gridPoints - 1);
    for (int i = 0; i < gridPoints; ++i) {
      for (int j = 0; j < gridPoints; ++j) {
        const Eigen::Vector2d p = lower + Eigen::Vector2d(step.x() * i, step.y() * j);
        const double v = f(p.x(), p.y());
        if (v < best.value) {
          best.value = v;
          best.point = p;
        }
      }
    }
    best.levelsUsed = level + 1;
    if ((upper - lower).norm() < 1e-10) break;
    // Shrink to two cells around the incumbent, clipped to the original box.
    lower = (best.point - 2.0 * step).cwiseMax(box.lower);
    upper = (best.point + 2.0 * step).cwiseMin(box.upper);
  }
  return best;
}

}  // namespace vdw::oracle

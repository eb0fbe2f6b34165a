#pragma once

#include <algorithm>
#include <complex>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace vdwtest {

using C = std::complex<double>;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

/// Largest distance in a greedy nearest pairing of two multisets of equal size;
/// +inf when the sizes differ.
inline double multisetDistance(std::vector<C> a, std::vector<C> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (const C& z : a) {
    auto best = std::min_element(b.begin(), b.end(),
                                 [&](const C& p, const C& q) { return std::abs(p - z) < std::abs(q - z); });
    worst = std::max(worst, std::abs(*best - z));
    b.erase(best);
  }
  return worst;
}

inline double multisetDistance(const std::vector<double>& a, const std::vector<double>& b) {
  return multisetDistance(std::vector<C>(a.begin(), a.end()), std::vector<C>(b.begin(), b.end()));
}

/// Ascending coefficients of lead * prod (x - r_i).
inline std::vector<C> expand(C lead, const std::vector<C>& roots) {
  std::vector<C> c{lead};
  for (const C& r : roots) {
    std::vector<C> next(c.size() + 1, C(0));
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = std::move(next);
  }
  return c;
}

/// Distinct real roots in [-5, 5] or complex pairs, pairwise at least 0.1 apart.
inline std::vector<C> separatedRoots(int degree) {
  for (;;) {
    std::vector<C> roots;
    while (static_cast<int>(roots.size()) < degree) {
      if (degree - static_cast<int>(roots.size()) >= 2 && uniform(0.0, 1.0) < 0.4) {
        const C z(uniform(-5.0, 5.0), uniform(0.2, 5.0));
        roots.push_back(z);
        roots.push_back(std::conj(z));
      } else {
        roots.emplace_back(uniform(-5.0, 5.0), 0.0);
      }
    }
    bool ok = true;
    for (std::size_t i = 0; i < roots.size(); ++i)
      for (std::size_t j = i + 1; j < roots.size(); ++j) ok = ok && std::abs(roots[i] - roots[j]) > 0.1;
    if (ok) return roots;
  }
}

/// B2 without the constant K_l, evaluated directly from the two distances.
/// Finite differences of this stay accurate at small l, where K_l ~ 1/l^4
/// would otherwise swamp the second differences in rounding.
inline double pairInteraction(double l, double x, double y) {
  double v = 0.0;
  for (double a : {x + l / 2.0, x - l / 2.0}) {
    const double d2 = a * a + y * y;
    v += 1.0 / (d2 * d2) - 2.0 / d2;
  }
  return v;
}

inline std::string readFile(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace vdwtest

#include "vdw/levelset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

namespace vdw {

namespace {

using Coeffs5 = Eigen::Matrix<double, 5, 1>;

// Product of two ascending coefficient vectors, truncated to degree 4.
Coeffs5 multiply(const Coeffs5& a, const Coeffs5& b) {
  Coeffs5 out = Coeffs5::Zero();
  for (int i = 0; i < 5; ++i)
    for (int j = 0; i + j < 5; ++j) out(i + j) += a(i) * b(j);
  return out;
}

Coeffs5 linear(double constant) {
  Coeffs5 c = Coeffs5::Zero();
  c(0) = constant;
  c(1) = 1.0;
  return c;
}

double membershipTolerance(double G) { return OrbitTolerance::membership * std::max(1.0, std::abs(G)); }

// Outer limit on |x| for any point of the level set: for G < K_l the level set
// needs min(s1, s2) <= 4 / (K_l - G), otherwise min(s1, s2) < 1/2.
double extentBound(const SystemConfig<double>& cfg, double G) {
  const double gap = pairConstant(cfg) - G;
  const double radius = gap > 0.0 ? 2.0 / std::sqrt(gap) : std::sqrt(0.5);
  return cfg.halfSeparation() + radius;
}

}  // namespace

Polynomial<double> UPolynomialCoeffs::polynomial() const {
  return Polynomial<double>(Polynomial<double>::Coefficients(ascending));
}

double UPolynomialCoeffs::evaluate(double u) const {
  double acc = ascending(4);
  for (int k = 3; k >= 0; --k) acc = acc * u + ascending(k);
  return acc;
}

UPolynomialCoeffs buildUCoefficients(const SystemConfig<double>& cfg, double G, double x) {
  if (!std::isfinite(x) || !std::isfinite(G)) throw DomainError("x and G must be finite");
  const double h = cfg.halfSeparation();
  const double a = (x + h) * (x + h), b = (x - h) * (x - h);
  const Coeffs5 s1 = linear(a), s2 = linear(b);
  const Coeffs5 s1sq = multiply(s1, s1), s2sq = multiply(s2, s2);

  UPolynomialCoeffs out;
  out.ascending = s2sq - 2.0 * multiply(s1, s2sq) + s1sq - 2.0 * multiply(s2, s1sq) +
                  (pairConstant(cfg) - G) * multiply(s1sq, s2sq);
  out.degenerate =
      std::abs(out.ascending(4)) <= RootTolerance::degeneracy * out.ascending.cwiseAbs().maxCoeff();
  return out;
}

double clearedDenominator(const SystemConfig<double>& cfg, double x, double u) {
  const double h = cfg.halfSeparation();
  const double s1 = (x + h) * (x + h) + u, s2 = (x - h) * (x - h) + u;
  return s1 * s1 * s2 * s2;
}

std::vector<double> solveForU(const UPolynomialCoeffs& coeffs) {
  const Polynomial<double> poly = coeffs.polynomial();
  const RootSet<double> rs = solve(poly);

  std::vector<std::complex<double>> candidates;
  for (double r : rs.realRoots) candidates.emplace_back(r, 0.0);
  // A conjugate pair hugging the real axis is a double root smeared by
  // rounding (a tangency of the level set with the column).
  const double imagCut = RootTolerance::imaginary * poly.rootScale();
  for (const auto& z : rs.roots) {
    const double im = std::abs(z.imag());
    if (im <= imagCut || im > OrbitTolerance::tangencyImaginary * std::max(1.0, std::abs(z.real()))) continue;
    const double re = z.real();
    if (std::abs(poly(re)) <= RootTolerance::residual * poly.residualScale(re)) candidates.emplace_back(re, 0.0);
  }

  std::vector<double> out;
  for (double u : extractReal<double>(candidates, 1.0)) {
    if (u >= 0.0) {
      out.push_back(u);
    } else if (u >= -OrbitTolerance::clamp) {
      out.push_back(0.0);
    }
  }
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<double> solveColumn(const SystemConfig<double>& cfg, double G, double x) {
  std::vector<double> admitted;
  for (double u : solveForU(buildUCoefficients(cfg, G, x))) {
    try {
      if (std::abs(totalPotential2D(cfg, x, std::sqrt(u)) - G) <= membershipTolerance(G)) admitted.push_back(u);
    } catch (const SingularityError&) {
    }
  }
  return admitted;
}

std::size_t OrbitResult::pointCount() const {
  std::size_t n = 0;
  for (const auto& b : branches) n += b.points.size();
  return n;
}

std::vector<OrbitBranch> linkBranches(const std::vector<OrbitColumn>& columns, double dx) {
  double yScale = 1.0;
  for (const auto& c : columns)
    for (double u : c.u) yScale = std::max(yScale, std::sqrt(u));
  // Near a fold y - y0 grows like sqrt(x - x0), so a branch with a single
  // point gets a sqrt-sized allowance instead of the slope-based one.
  const double youngLimit = 5.0 * (dx + std::sqrt(dx * yScale));

  std::vector<OrbitBranch> branches;
  std::vector<int> active;
  for (const auto& column : columns) {
    std::vector<Eigen::Vector2d> pts;
    for (double u : column.u) pts.emplace_back(column.x, std::sqrt(u));

    std::vector<std::tuple<double, int, int>> pairs;  // distance, active slot, point
    for (int a = 0; a < static_cast<int>(active.size()); ++a) {
      const auto& bp = branches[active[a]].points;
      const Eigen::Vector2d last(bp.back().x, bp.back().y);
      double limit = youngLimit;
      if (bp.size() >= 2) limit = 5.0 * (dx + std::abs(bp.back().y - bp[bp.size() - 2].y));
      for (int j = 0; j < static_cast<int>(pts.size()); ++j) {
        const double d = (pts[j] - last).norm();
        if (d < limit) pairs.emplace_back(d, a, j);
      }
    }
    std::sort(pairs.begin(), pairs.end());

    std::vector<int> owner(pts.size(), -1);
    std::vector<bool> taken(active.size(), false);
    for (const auto& [d, a, j] : pairs) {
      if (taken[a] || owner[j] >= 0) continue;
      taken[a] = true;
      owner[j] = active[a];
    }

    std::vector<int> next;
    for (int j = 0; j < static_cast<int>(pts.size()); ++j) {
      int id = owner[j];
      if (id < 0) {
        id = static_cast<int>(branches.size());
        branches.push_back({id, {}});
      }
      branches[id].points.push_back({column.x, pts[j].y(), column.u[j], id});
      next.push_back(id);
    }
    std::sort(next.begin(), next.end());
    active = std::move(next);
  }
  return branches;
}

Topology classifyTopology(const std::vector<OrbitBranch>& branches) {
  switch (branches.size()) {
    case 0:
      return Topology::Empty;
    case 1: {
      const auto& pts = branches.front().points;
      const OrbitPoint& first = pts.front();
      const bool collapsed = std::all_of(pts.begin(), pts.end(), [&](const OrbitPoint& p) {
        return std::abs(p.x - first.x) <= RootTolerance::cluster && std::abs(p.y - first.y) <= RootTolerance::cluster;
      });
      return collapsed ? Topology::Point : Topology::OneBranch;
    }
    case 2:
      return Topology::TwoBranches;
    default:
      return Topology::Other;
  }
}

std::string topologyName(Topology topology, std::size_t branchCount) {
  switch (topology) {
    case Topology::Empty:
      return "Empty";
    case Topology::Point:
      return "Point";
    case Topology::OneBranch:
      return "OneBranch";
    case Topology::TwoBranches:
      return "TwoBranches";
    case Topology::Other:
      break;
  }
  return "Other(" + std::to_string(branchCount) + ")";
}

std::string topologyName(const OrbitResult& result) {
  return topologyName(result.topology, result.branches.size());
}

std::string toString(Provenance provenance) {
  return provenance == Provenance::Algebraic ? "Algebraic" : "OracleOnly";
}

double defaultXMax(const SystemConfig<double>& cfg, double G) {
  const double fallback = 1.0 + cfg.halfSeparation();
  if (G < globalMinimum(cfg).value - membershipTolerance(G)) return fallback;
  const double bound = extentBound(cfg, G);
  const double step = 0.01 * std::max(1.0, cfg.separation());
  const double minimumReach = cfg.halfSeparation() + 2.0;
  constexpr int kMaxColumns = 2'000'000;
  double lastFound = -1.0;
  int emptyRun = 0;
  for (int i = 0; i < kMaxColumns; ++i) {
    const double x = step * i;
    if (x > bound + step) break;
    if (!solveColumn(cfg, G, x).empty()) {
      lastFound = x;
      emptyRun = 0;
    } else if (++emptyRun >= 50 && x > minimumReach && lastFound >= 0.0) {
      break;
    }
  }
  return fallback + std::max(lastFound, 0.0);
}

OrbitResult traceOrbit(const SystemConfig<double>& cfg, double G, double xMax, int samples) {
  if (samples < 2) throw DomainError("traceOrbit needs at least two samples");
  if (!(xMax > 0.0) || !std::isfinite(xMax)) throw DomainError("xMax must be positive");
  if (!std::isfinite(G)) throw DomainError("G must be finite");

  OrbitResult result;
  result.l = cfg.separation();
  result.G = G;
  if (G < globalMinimum(cfg).value - membershipTolerance(G)) return result;

  const double dx = xMax / (samples - 1);
  std::vector<OrbitColumn> columns;
  columns.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    const double x = i == samples - 1 ? xMax : dx * i;
    columns.push_back({x, solveColumn(cfg, G, x)});
  }
  result.branches = linkBranches(columns, dx);
  result.topology = classifyTopology(result.branches);
  return result;
}

std::vector<ScanEntry> topologyScan(const SystemConfig<double>& cfg, const std::vector<double>& gValues, double xMax,
                                    int samples) {
  std::vector<ScanEntry> out;
  out.reserve(gValues.size());
  for (double G : gValues) {
    const double window = xMax > 0.0 ? xMax : defaultXMax(cfg, G);
    const OrbitResult r = traceOrbit(cfg, G, window, samples);
    out.push_back({G, r.topology, r.branches.size()});
  }
  return out;
}

}  // namespace vdw

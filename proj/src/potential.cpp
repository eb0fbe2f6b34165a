#include "vdw/potential.hpp"

#include <cmath>
#include <limits>

#include "vdw/oracle.hpp"

namespace vdw {

GlobalMinimum globalMinimum(const SystemConfig<double>& cfg) {
  const double l = cfg.separation();
  if (l < 2.0) {
    const double y = std::sqrt(4.0 - l * l) / 2.0;
    return {totalPotential2D(cfg, 0.0, y), Point2<double>(0.0, y), MinimumSource::ClosedForm};
  }
  auto f = [&cfg](double x, double y) {
    try {
      return totalPotential2D(cfg, x, y);
    } catch (const SingularityError&) {
      return std::numeric_limits<double>::infinity();
    }
  };
  const double h = cfg.halfSeparation();
  const oracle::Box box{{0.0, 0.0}, {h + 2.0, 2.0}};
  const auto best = oracle::gridRefineMinimize(f, box, 80);
  return {best.value, best.point, MinimumSource::Oracle};
}

std::string toString(MinimumSource source) {
  return source == MinimumSource::ClosedForm ? "closed_form" : "oracle";
}

}  // namespace vdw

#pragma once

// Deterministic text serializations of orbits and critical points. All
// floating-point values are written in shortest round-trip form.

#include <string>
#include <vector>

#include "vdw/critical.hpp"
#include "vdw/levelset.hpp"
#include "vdw/potential.hpp"
#include "vdw/roots.hpp"

namespace vdw {

std::string formatNumber(double value);

struct SvgStyle {
  int width = 800;
  int height = 600;
  double margin = 0.05;  // fraction of each side
  double strokeWidth = 1.5;
  double markerRadius = 4.0;
};

/// Four-quadrant picture: every branch is drawn with its reflections across
/// both axes, single-point branches as circles, fixed particles as dots.
std::string toSVG(const OrbitResult& result, const SystemConfig<double>& cfg, const SvgStyle& style = {});

/// Wavefront OBJ of the surface swept by rotating each branch about the
/// particle axis. Vertex count is points * thetaSteps; the seam is closed.
std::string toMesh(const OrbitResult& result, int thetaSteps = 64);

/// '#'-prefixed metadata lines, then an RFC 4180 table x,y,u,branch_id.
std::string toCSV(const OrbitResult& result);

std::string toJSON(const OrbitResult& result);
OrbitResult orbitFromJSON(const std::string& text);

std::string criticalPointsToJSON(double l, const std::vector<CriticalPoint>& points);
std::string rootSetToJSON(int degree, const RootSet<double>& roots);

}  // namespace vdw

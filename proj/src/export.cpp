#include "vdw/export.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace vdw {

namespace {

using Json = nlohmann::ordered_json;

Topology topologyFromName(const std::string& name) {
  if (name == "Empty") return Topology::Empty;
  if (name == "Point") return Topology::Point;
  if (name == "OneBranch") return Topology::OneBranch;
  if (name == "TwoBranches") return Topology::TwoBranches;
  if (name.rfind("Other(", 0) == 0) return Topology::Other;
  throw std::invalid_argument("unknown topology '" + name + "'");
}

Provenance provenanceFromName(const std::string& name) {
  if (name == "Algebraic") return Provenance::Algebraic;
  if (name == "OracleOnly") return Provenance::OracleOnly;
  throw std::invalid_argument("unknown provenance '" + name + "'");
}

void requireFinite(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite value in export");
}

}  // namespace

std::string formatNumber(double value) {
  requireFinite(value);
  if (value == 0.0) return "0";  // also folds -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::string toSVG(const OrbitResult& result, const SystemConfig<double>& cfg, const SvgStyle& style) {
  if (style.width <= 0 || style.height <= 0 || !(style.margin >= 0.0 && style.margin < 0.5))
    throw std::invalid_argument("degenerate SVG viewport");
  const double h = cfg.halfSeparation();

  double xr = h, yr = 0.0;
  for (const auto& b : result.branches)
    for (const auto& p : b.points) {
      xr = std::max(xr, std::abs(p.x));
      yr = std::max(yr, std::abs(p.y));
    }
  xr = std::max(xr, 0.5) * 1.05;
  yr = std::max(yr, 0.5) * 1.05;
  const double usableW = style.width * (1.0 - 2.0 * style.margin);
  const double usableH = style.height * (1.0 - 2.0 * style.margin);
  const double scale = std::min(usableW / (2.0 * xr), usableH / (2.0 * yr));
  const double cx = style.width / 2.0, cy = style.height / 2.0;
  auto sx = [&](double x) { return formatNumber(cx + x * scale); };
  auto sy = [&](double y) { return formatNumber(cy - y * scale); };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << style.width << "\" height=\""
      << style.height << "\" viewBox=\"0 0 " << style.width << ' ' << style.height << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << style.width << "\" height=\"" << style.height << "\" fill=\"white\"/>\n"
      << "<g stroke=\"#bbbbbb\" stroke-width=\"0.5\">\n"
      << "<line x1=\"0\" y1=\"" << formatNumber(cy) << "\" x2=\"" << style.width << "\" y2=\"" << formatNumber(cy)
      << "\"/>\n"
      << "<line x1=\"" << formatNumber(cx) << "\" y1=\"0\" x2=\"" << formatNumber(cx) << "\" y2=\"" << style.height
      << "\"/>\n"
      << "</g>\n";

  constexpr std::pair<int, int> kMirrors[] = {{1, 1}, {-1, 1}, {1, -1}, {-1, -1}};
  out << "<g fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"" << formatNumber(style.strokeWidth) << "\">\n";
  for (const auto& b : result.branches) {
    if (b.points.size() < 2) continue;
    for (const auto& [mx, my] : kMirrors) {
      out << "<polyline data-branch=\"" << b.id << "\" points=\"";
      for (std::size_t i = 0; i < b.points.size(); ++i) {
        if (i) out << ' ';
        out << sx(mx * b.points[i].x) << ',' << sy(my * b.points[i].y);
      }
      out << "\"/>\n";
    }
  }
  out << "</g>\n";

  out << "<g fill=\"#1f4e9c\">\n";
  for (const auto& b : result.branches) {
    if (b.points.size() != 1) continue;
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& [mx, my] : kMirrors) {
      auto key = std::make_pair(sx(mx * b.points[0].x), sy(my * b.points[0].y));
      if (!seen.insert(key).second) continue;
      out << "<circle data-branch=\"" << b.id << "\" cx=\"" << key.first << "\" cy=\"" << key.second << "\" r=\""
          << formatNumber(style.markerRadius) << "\"/>\n";
    }
  }
  out << "</g>\n";

  out << "<g fill=\"black\">\n";
  for (double px : {-h, h})
    out << "<circle class=\"particle\" cx=\"" << sx(px) << "\" cy=\"" << sy(0.0) << "\" r=\""
        << formatNumber(style.markerRadius * 1.5) << "\"/>\n";
  out << "</g>\n";

  out << "<text x=\"" << formatNumber(style.width * style.margin) << "\" y=\""
      << formatNumber(style.height * style.margin) << "\" font-family=\"sans-serif\" font-size=\"14\">l = "
      << formatNumber(result.l) << ", G = " << formatNumber(result.G) << " (" << topologyName(result)
      << ")</text>\n";
  out << "</svg>\n";
  return out.str();
}

std::string toMesh(const OrbitResult& result, int thetaSteps) {
  if (thetaSteps < 3) throw std::invalid_argument("thetaSteps must be at least 3");
  std::vector<double> cosT(thetaSteps), sinT(thetaSteps);
  for (int j = 0; j < thetaSteps; ++j) {
    const double t = 2.0 * std::numbers::pi * j / thetaSteps;
    cosT[j] = std::cos(t);
    sinT[j] = std::sin(t);
  }

  std::ostringstream out;
  out << "# surface of revolution of B2 level set\n"
      << "# l " << formatNumber(result.l) << " G " << formatNumber(result.G) << " topology " << topologyName(result)
      << " theta_steps " << thetaSteps << "\n";
  long base = 1;
  for (const auto& b : result.branches) {
    const long n = static_cast<long>(b.points.size());
    out << "# branch " << b.id << " points " << n << "\n";
    if (n == 1) out << "# ring: single point swept into a line loop\n";
    for (const auto& p : b.points)
      for (int j = 0; j < thetaSteps; ++j)
        out << "v " << formatNumber(p.x) << ' ' << formatNumber(p.y * cosT[j]) << ' ' << formatNumber(p.y * sinT[j])
            << "\n";
    for (long i = 0; i + 1 < n; ++i) {
      for (int j = 0; j < thetaSteps; ++j) {
        const int jn = (j + 1) % thetaSteps;
        const long a = base + i * thetaSteps + j, bb = base + (i + 1) * thetaSteps + j;
        const long c = base + (i + 1) * thetaSteps + jn, d = base + i * thetaSteps + jn;
        out << "f " << a << ' ' << bb << ' ' << c << "\n";
        out << "f " << a << ' ' << c << ' ' << d << "\n";
      }
    }
    base += n * thetaSteps;
  }
  return out.str();
}

std::string toCSV(const OrbitResult& result) {
  std::ostringstream out;
  out << "# l=" << formatNumber(result.l) << "\n"
      << "# G=" << formatNumber(result.G) << "\n"
      << "# topology=" << topologyName(result) << "\n"
      << "# provenance=" << toString(result.provenance) << "\n"
      << "x,y,u,branch_id\r\n";
  for (const auto& b : result.branches)
    for (const auto& p : b.points)
      out << formatNumber(p.x) << ',' << formatNumber(p.y) << ',' << formatNumber(p.u) << ',' << p.branchId << "\r\n";
  return out.str();
}

std::string toJSON(const OrbitResult& result) {
  Json j;
  j["l"] = result.l;
  j["G"] = result.G;
  j["topology"] = topologyName(result);
  j["provenance"] = toString(result.provenance);
  j["branch_count"] = result.branches.size();
  j["point_count"] = result.pointCount();
  Json branches = Json::array();
  for (const auto& b : result.branches) {
    Json points = Json::array();
    for (const auto& p : b.points) {
      requireFinite(p.x);
      requireFinite(p.y);
      requireFinite(p.u);
      points.push_back(Json{{"x", p.x}, {"y", p.y}, {"u", p.u}});
    }
    branches.push_back(Json{{"id", b.id}, {"points", std::move(points)}});
  }
  j["branches"] = std::move(branches);
  return j.dump(2) + "\n";
}

OrbitResult orbitFromJSON(const std::string& text) {
  const Json j = Json::parse(text);
  OrbitResult r;
  r.l = j.at("l").get<double>();
  r.G = j.at("G").get<double>();
  r.topology = topologyFromName(j.at("topology").get<std::string>());
  r.provenance = provenanceFromName(j.at("provenance").get<std::string>());
  for (const auto& jb : j.at("branches")) {
    OrbitBranch b{jb.at("id").get<int>(), {}};
    for (const auto& jp : jb.at("points"))
      b.points.push_back({jp.at("x").get<double>(), jp.at("y").get<double>(), jp.at("u").get<double>(), b.id});
    r.branches.push_back(std::move(b));
  }
  return r;
}

std::string criticalPointsToJSON(double l, const std::vector<CriticalPoint>& points) {
  Json arr = Json::array();
  for (const auto& p : points) {
    arr.push_back(Json{{"x", p.x},
                       {"y", p.y},
                       {"kind", toString(p.kind)},
                       {"classification", toString(p.classification)},
                       {"hess_det", p.hessDet},
                       {"gradient_norm", p.gradientNorm},
                       {"provenance", p.provenance}});
  }
  return Json{{"l", l}, {"points", std::move(arr)}}.dump(2) + "\n";
}

std::string rootSetToJSON(int degree, const RootSet<double>& roots) {
  Json all = Json::array();
  for (const auto& z : roots.roots) all.push_back(Json{{"re", z.real()}, {"im", z.imag()}});
  return Json{{"degree", degree},
              {"roots", std::move(all)},
              {"real_roots", roots.realRoots},
              {"positive_real_roots", roots.positiveRealRoots}}
             .dump(2) +
         "\n";
}

}  // namespace vdw

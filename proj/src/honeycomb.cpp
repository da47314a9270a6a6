// SPDX-License-Identifier: MIT
#include "hivetorus/honeycomb.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>

#include <json.hpp>

#include "hivetorus/errors.hpp"
#include "hivetorus/schema.hpp"

namespace hivetorus {

Point2 embed(double i, double j) { return {i - 0.5 * j, 0.5 * std::sqrt(3.0) * j}; }

Point2 triangle_gradient(const Point2& pa, const Point2& pb, const Point2& pc,
                         double fa, double fb, double fc) {
  // Solve [u; v] grad = [fb - fa; fc - fa] with u = pb - pa, v = pc - pa.
  const double ux = pb.x - pa.x;
  const double uy = pb.y - pa.y;
  const double vx = pc.x - pa.x;
  const double vy = pc.y - pa.y;
  const double det = ux * vy - uy * vx;
  if (std::abs(det) < 1e-14) throw NumericalError("degenerate triangle");
  const double du = fb - fa;
  const double dv = fc - fa;
  return {(du * vy - dv * uy) / det, (ux * dv - vx * du) / det};
}

HoneycombDiagram build_honeycomb(const TorusField& g, const HessianBound& s) {
  const int n = g.n();
  const QuadraticReference q = quadratic_reference(s, n);
  const auto hive = [&](long i, long j) { return g.at(i, j) + q(i, j); };
  HoneycombDiagram d;
  d.n = n;
  d.bound = s;
  d.points.resize(static_cast<std::size_t>(2 * n * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Point2 p00 = embed(i, j);
      const Point2 p10 = embed(i + 1, j);
      const Point2 p11 = embed(i + 1, j + 1);
      const Point2 p01 = embed(i, j + 1);
      const double f00 = hive(i, j);
      const double f10 = hive(i + 1, j);
      const double f11 = hive(i + 1, j + 1);
      const double f01 = hive(i, j + 1);
      const std::size_t base = static_cast<std::size_t>(2 * (i * n + j));
      d.points[base] = triangle_gradient(p00, p10, p11, f00, f10, f11);
      d.points[base + 1] = triangle_gradient(p00, p11, p01, f00, f11, f01);
    }
  }
  // Each up triangle touches three down triangles: across its (1,1) edge the
  // one in the same cell, across its (1,0) edge down(i, j-1), across its
  // (0,1) edge down(i+1, j).
  const TorusGrid grid(n);
  d.edges.reserve(static_cast<std::size_t>(3 * n * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int up = 2 * grid.index(i, j);
      d.edges.push_back({up, 2 * grid.index(i, j) + 1});
      d.edges.push_back({up, 2 * grid.index(i, j - 1) + 1});
      d.edges.push_back({up, 2 * grid.index(i + 1, j) + 1});
    }
  }
  return d;
}

DisplacementStats displacement_stats(const HoneycombDiagram& d,
                                     const HoneycombDiagram& ref) {
  if (d.n != ref.n || d.points.size() != ref.points.size()) {
    throw SizeMismatch("honeycomb diagrams have different shapes");
  }
  DisplacementStats st;
  st.per_vertex.resize(d.points.size());
  double sum = 0.0;
  for (std::size_t k = 0; k < d.points.size(); ++k) {
    const double dist = std::hypot(d.points[k].x - ref.points[k].x,
                                   d.points[k].y - ref.points[k].y);
    st.per_vertex[k] = dist;
    st.max = std::max(st.max, dist);
    sum += dist;
  }
  st.mean = d.points.empty() ? 0.0 : sum / static_cast<double>(d.points.size());
  return st;
}

void emit_svg(const HoneycombDiagram& d, std::ostream& os, const SvgOptions& opt) {
  double xmin = std::numeric_limits<double>::infinity();
  double ymin = xmin;
  double xmax = -xmin;
  double ymax = -xmin;
  for (const Point2& p : d.points) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  if (d.points.empty()) xmin = ymin = xmax = ymax = 0.0;
  // Degenerate extents are widened to a unit box around the data.
  if (xmax - xmin < 1e-6) {
    xmin -= 0.5;
    xmax += 0.5;
  }
  if (ymax - ymin < 1e-6) {
    ymin -= 0.5;
    ymax += 0.5;
  }
  const double w = xmax - xmin;
  const double h = ymax - ymin;
  const double extent = std::max(w, h);
  const double vx = xmin - 0.05 * w;
  const double vy = ymin - 0.05 * h;
  const double vw = 1.1 * w;
  const double vh = 1.1 * h;
  const double radius = opt.point_radius > 0 ? opt.point_radius : 0.006 * extent;
  const double stroke = 0.4 * radius;

  os << std::setprecision(10);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
     << opt.size_px << "\" height=\"" << opt.size_px * vh / vw << "\" viewBox=\""
     << vx << ' ' << vy << ' ' << vw << ' ' << vh << "\">\n";
  os << "  <desc>" << kHoneycombSchema << " n=" << d.n << " s=" << d.bound[0] << ','
     << d.bound[1] << ',' << d.bound[2] << "</desc>\n";
  // Flip y so the picture has the usual orientation.
  os << "  <g transform=\"translate(0," << (2 * vy + vh) << ") scale(1,-1)\">\n";
  if (opt.draw_edges && !d.edges.empty()) {
    os << "    <g stroke=\"#555555\" stroke-width=\"" << stroke << "\">\n";
    for (const auto& e : d.edges) {
      const Point2& a = d.points[static_cast<std::size_t>(e[0])];
      const Point2& b = d.points[static_cast<std::size_t>(e[1])];
      os << "      <line x1=\"" << a.x << "\" y1=\"" << a.y << "\" x2=\"" << b.x
         << "\" y2=\"" << b.y << "\"/>\n";
    }
    os << "    </g>\n";
  }
  os << "    <g fill=\"#1f4e9c\">\n";
  os << std::fixed << std::setprecision(8);
  for (const Point2& p : d.points) {
    os << "      <circle cx=\"" << p.x << "\" cy=\"" << p.y << "\" r=\"" << radius
       << "\"/>\n";
  }
  os << "    </g>\n  </g>\n</svg>\n";
}

void emit_svg(const HoneycombDiagram& d, const std::string& path, const SvgOptions& opt) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path + " for writing");
  emit_svg(d, out, opt);
  if (!out) throw Error("failed writing " + path);
}

std::string honeycomb_json(const HoneycombDiagram& d) {
  nlohmann::json j;
  j["schema"] = kHoneycombSchema;
  j["n"] = d.n;
  j["s"] = {d.bound[0], d.bound[1], d.bound[2]};
  nlohmann::json pts = nlohmann::json::array();
  for (const Point2& p : d.points) pts.push_back({p.x, p.y});
  j["points"] = std::move(pts);
  j["edges"] = d.edges;
  return j.dump();
}

}  // namespace hivetorus

// SPDX-License-Identifier: MIT
// Honeycomb diagrams of periodic hives.
//
// The hive is f = g + q(s), with g read periodically and q evaluated on the
// unwrapped lattice.  Lattice points are embedded in the plane by
// (i, j) -> i (1, 0) + j (-1/2, sqrt(3)/2), which sends the generators 1, w
// and 1 + w to unit vectors, so every unit triangle is equilateral.  Each
// cell (i, j) of the fundamental domain holds two triangles
//   up(i, j)   = {(i,j), (i+1,j), (i+1,j+1)},
//   down(i, j) = {(i,j), (i+1,j+1), (i,j+1)},
// and the honeycomb vertex of a triangle is the gradient of the affine
// interpolant of f on it.  Triangles sharing a lattice edge are joined.
#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "hivetorus/difference_ops.hpp"
#include "hivetorus/polytope_model.hpp"

namespace hivetorus {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

struct HoneycombDiagram {
  int n = 0;
  HessianBound bound;
  // Index 2 (i n + j) is up(i, j), index 2 (i n + j) + 1 is down(i, j).
  std::vector<Point2> points;
  std::vector<std::array<int, 2>> edges;
};

// Planar position of lattice point (i, j).
Point2 embed(double i, double j);

// Gradient of the affine function taking values fa, fb, fc at pa, pb, pc.
Point2 triangle_gradient(const Point2& pa, const Point2& pb, const Point2& pc,
                         double fa, double fb, double fc);

HoneycombDiagram build_honeycomb(const TorusField& g, const HessianBound& s);

struct DisplacementStats {
  double max = 0.0;
  double mean = 0.0;
  std::vector<double> per_vertex;
};

// Throws SizeMismatch when the diagrams have different n or point counts.
DisplacementStats displacement_stats(const HoneycombDiagram& d,
                                     const HoneycombDiagram& ref);

struct SvgOptions {
  double size_px = 800.0;
  double point_radius = 0.0;  // 0 picks a radius from the data extent
  bool draw_edges = true;
};

// Deterministic SVG 1.1: viewBox from the point bounding box plus a 5%
// margin, one <line> per edge and one <circle> per point.
void emit_svg(const HoneycombDiagram& d, std::ostream& os, const SvgOptions& opt = {});
void emit_svg(const HoneycombDiagram& d, const std::string& path,
              const SvgOptions& opt = {});

// JSON object with schema, n, s, points and edges.
std::string honeycomb_json(const HoneycombDiagram& d);

}  // namespace hivetorus

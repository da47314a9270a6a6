// SPDX-License-Identifier: MIT
#include <doctest.h>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <cmath>
#include <filesystem>
#include <json.hpp>
#include <sstream>

#include "hivetorus/errors.hpp"
#include "hivetorus/honeycomb.hpp"
#include "hivetorus/sampler.hpp"
#include "hivetorus/schema.hpp"
#include "test_support.hpp"

using namespace hivetorus;

namespace {

struct ParsedSvg {
  std::vector<Point2> circles;
  int lines = 0;
};

void walk(const boost::property_tree::ptree& node, ParsedSvg& out) {
  for (const auto& [tag, child] : node) {
    if (tag == "circle") {
      out.circles.push_back({child.get<double>("<xmlattr>.cx"), child.get<double>("<xmlattr>.cy")});
    } else if (tag == "line") {
      ++out.lines;
    }
    walk(child, out);
  }
}

ParsedSvg parse_svg(const std::string& text) {
  std::istringstream in(text);
  boost::property_tree::ptree tree;
  boost::property_tree::read_xml(in, tree);
  ParsedSvg out;
  walk(tree.get_child("svg"), out);
  return out;
}

}  // namespace

TEST_CASE("embedding and triangle gradients") {
  const Point2 e1 = embed(1, 0);
  const Point2 ew = embed(0, 1);
  const Point2 e11 = embed(1, 1);
  CHECK(std::hypot(e1.x, e1.y) == doctest::Approx(1.0));
  CHECK(std::hypot(ew.x, ew.y) == doctest::Approx(1.0));
  CHECK(std::hypot(e11.x, e11.y) == doctest::Approx(1.0));
  CHECK(e1.x * ew.x + e1.y * ew.y == doctest::Approx(-0.5));
  // Affine f(p) = 3 x - 2 y + 1.
  const auto f = [](Point2 p) { return 3 * p.x - 2 * p.y + 1; };
  const Point2 a{0.2, 0.1}, b{1.5, -0.3}, c{0.4, 2.0};
  const Point2 g = triangle_gradient(a, b, c, f(a), f(b), f(c));
  CHECK(g.x == doctest::Approx(3.0));
  CHECK(g.y == doctest::Approx(-2.0));
  CHECK_THROWS_AS(triangle_gradient(a, a, c, 0, 0, 0), NumericalError);
}

TEST_CASE("vertex and edge counts") {
  for (int n : {2, 4, 8}) {
    const HoneycombDiagram d = build_honeycomb(TorusField(n), {2, 2, 2});
    CHECK(d.points.size() == static_cast<std::size_t>(2 * n * n));
    CHECK(d.edges.size() == static_cast<std::size_t>(3 * n * n));
    // Every down triangle also has exactly three neighbors.
    std::vector<int> degree(d.points.size(), 0);
    for (const auto& e : d.edges) {
      ++degree[static_cast<std::size_t>(e[0])];
      ++degree[static_cast<std::size_t>(e[1])];
    }
    for (int deg : degree) CHECK(deg == 3);
  }
}

TEST_CASE("zero hive gives a single point") {
  const HoneycombDiagram d = build_honeycomb(TorusField(4), {0, 0, 0});
  for (const Point2& p : d.points) {
    CHECK(std::abs(p.x) <= 1e-12);
    CHECK(std::abs(p.y) <= 1e-12);
  }
}

TEST_CASE("reference honeycomb compared with itself") {
  const HoneycombDiagram ref = build_honeycomb(TorusField(4), {2, 2, 2});
  CHECK(ref.points.size() == 32);
  const DisplacementStats st = displacement_stats(ref, ref);
  CHECK(st.max == 0.0);
  CHECK(st.mean == 0.0);
  CHECK_THROWS_AS(displacement_stats(ref, build_honeycomb(TorusField(3), {2, 2, 2})),
                  SizeMismatch);
}

TEST_CASE("affine fields shift every gradient by the same slope") {
  // g(i,j) = 0.3 i + 0.7 j is not periodic, so compare gradients of the
  // unwrapped hive directly on one triangle away from the seam.
  const int n = 6;
  TorusField g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g.at(i, j) = 0.3 * i + 0.7 * j;
  }
  const HoneycombDiagram d = build_honeycomb(g, {0, 0, 0});
  // Slope s solves s . embed(1,0) = 0.3 and s . embed(0,1) = 0.7.
  const double sx = 0.3;
  const double sy = (0.7 + 0.5 * sx) / (0.5 * std::sqrt(3.0));
  for (int i = 0; i < n - 1; ++i) {
    for (int j = 0; j < n - 1; ++j) {
      for (int t = 0; t < 2; ++t) {
        const Point2& p = d.points[static_cast<std::size_t>(2 * (i * n + j) + t)];
        CHECK(p.x == doctest::Approx(sx));
        CHECK(p.y == doctest::Approx(sy));
      }
    }
  }
}

TEST_CASE("displacements scale linearly and respect the slope bound") {
  const int n = 4;
  const HessianBound s{2, 2, 2};
  const HoneycombDiagram ref = build_honeycomb(TorusField(n), s);
  const TorusField w = diameter_witness(n, s);
  const DisplacementStats base = displacement_stats(build_honeycomb(w, s), ref);
  CHECK(base.max > 0.0);
  CHECK(base.max <= 4.0 * n * s[2]);
  for (double lambda : {0.5, 2.0, -3.0}) {
    const DisplacementStats st = displacement_stats(build_honeycomb(lambda * w, s), ref);
    for (std::size_t k = 0; k < st.per_vertex.size(); ++k) {
      CHECK(std::abs(st.per_vertex[k] - std::abs(lambda) * base.per_vertex[k]) <= 1e-10);
    }
  }
}

TEST_CASE("sampled fields at n = 16 stay within the slope bound") {
  const int n = 16;
  const HessianBound s{2, 2, 2};
  SamplerConfig cfg = SamplerConfig::defaults(n, 3);
  cfg.burn_in = 50000;
  const HoneycombDiagram ref = build_honeycomb(TorusField(n), s);
  for (const TorusField& g : sample_uniform(build_constraints(n, s), cfg, 3).samples) {
    const DisplacementStats st = displacement_stats(build_honeycomb(g, s), ref);
    CHECK(std::isfinite(st.max));
    CHECK(st.max <= 4.0 * n * s[2]);
  }
}

TEST_CASE("SVG output parses and round-trips the coordinates") {
  const HoneycombDiagram ref = build_honeycomb(TorusField(4), {2, 2, 2});
  std::ostringstream os;
  emit_svg(ref, os);
  const std::string text = os.str();
  CHECK(text.find(kHoneycombSchema) != std::string::npos);
  const ParsedSvg svg = parse_svg(text);
  REQUIRE(svg.circles.size() == ref.points.size());
  CHECK(svg.lines == static_cast<int>(ref.edges.size()));
  for (std::size_t k = 0; k < ref.points.size(); ++k) {
    CHECK(std::abs(svg.circles[k].x - ref.points[k].x) <= 5e-7);
    CHECK(std::abs(svg.circles[k].y - ref.points[k].y) <= 5e-7);
  }
  std::ostringstream again;
  emit_svg(ref, again);
  CHECK(again.str() == text);
}

TEST_CASE("SVG without edges has only circles") {
  HoneycombDiagram toy;
  toy.n = 1;
  toy.points = {{0.0, 0.0}, {1.0, 2.0}, {-1.0, 0.5}};
  std::ostringstream os;
  emit_svg(toy, os);
  const ParsedSvg svg = parse_svg(os.str());
  CHECK(svg.circles.size() == 3);
  CHECK(svg.lines == 0);
}

TEST_CASE("SVG file output and JSON dump") {
  const HoneycombDiagram d = build_honeycomb(diameter_witness(3, {2, 2, 2}), {2, 2, 2});
  const auto path = std::filesystem::temp_directory_path() / "hivetorus_honeycomb_test.svg";
  emit_svg(d, path.string());
  CHECK(std::filesystem::file_size(path) > 0);
  std::filesystem::remove(path);
  const auto j = nlohmann::json::parse(honeycomb_json(d));
  CHECK(j["schema"] == kHoneycombSchema);
  CHECK(j["points"].size() == 18);
  CHECK(j["edges"].size() == 27);
  CHECK_THROWS_AS(emit_svg(d, std::string("/nonexistent-dir/x.svg")), Error);
}

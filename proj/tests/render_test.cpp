#include <doctest.h>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <charconv>
#include <random>
#include <sstream>

#include "trochoid/render.hpp"
#include "trochoid/verify.hpp"

using namespace trochoid;
namespace pt = boost::property_tree;

namespace {

Rig example() {
  Rig rig;
  rig.a = Rational(12);
  rig.b = Rational(2);
  rig.big_omega = Frequency(3);
  rig.small_omega = Frequency(15);
  return rig;
}

pt::ptree parse_xml(const std::string& text) {
  std::istringstream in(text);
  pt::ptree tree;
  pt::read_xml(in, tree);
  return tree;
}

// Numbers of an "M x y L x y ... [Z]" path, pairwise.
std::vector<Point2> path_points(const std::string& d) {
  std::vector<Point2> points;
  std::istringstream in(d);
  std::string token;
  std::vector<double> values;
  while (in >> token) {
    if (token == "M" || token == "L" || token == "Z") continue;
    if (token.front() == 'M' || token.front() == 'L') token.erase(0, 1);
    values.push_back(std::stod(token));
  }
  for (std::size_t i = 0; i + 1 < values.size(); i += 2) points.push_back({values[i], values[i + 1]});
  return points;
}

}  // namespace

TEST_CASE("SVG is well-formed with one path per trace") {
  const std::vector<Trace> traces{sample_trace(example(), FrameTag::Turntable, 64),
                                  sample_trace(example(), FrameTag::Turntable, 32)};
  const std::string svg = to_svg(traces);
  CHECK(svg.rfind("<?xml", 0) == 0);
  const pt::ptree tree = parse_xml(svg);
  const pt::ptree& root = tree.get_child("svg");
  CHECK(root.get<std::string>("<xmlattr>.xmlns") == "http://www.w3.org/2000/svg");
  const pt::ptree& group = root.get_child("g");
  CHECK(group.get<std::string>("<xmlattr>.fill") == "none");
  std::vector<std::string> strokes;
  std::vector<std::string> paths;
  for (const auto& [name, child] : group) {
    if (name != "path") continue;
    strokes.push_back(child.get<std::string>("<xmlattr>.stroke"));
    paths.push_back(child.get<std::string>("<xmlattr>.d"));
  }
  REQUIRE(paths.size() == 2);
  CHECK(strokes[0] == RenderStyle{}.palette[0]);
  CHECK(strokes[1] == RenderStyle{}.palette[1]);
  CHECK(path_points(paths[0]).size() == 65);
  CHECK(path_points(paths[1]).size() == 33);
  CHECK(paths[0].back() == 'Z');
}

TEST_CASE("open traces are not closed with Z") {
  const std::vector<double> times{0.0, 0.1, 0.2};
  const std::vector<Trace> traces{sample_at(example(), FrameTag::Turntable, times)};
  const std::string d = parse_xml(to_svg(traces)).get_child("svg.g.path").get<std::string>("<xmlattr>.d");
  CHECK(d.find('Z') == std::string::npos);
  CHECK(d.rfind("M", 0) == 0);
}

TEST_CASE("pixel coordinates map back to model coordinates") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 20; ++i) {
    const Rig rig = random_rig(rng);
    const std::vector<Trace> traces{sample_trace(rig, FrameTag::Turntable, 200)};
    RenderStyle style;
    const pt::ptree tree = parse_xml(to_svg(traces, style));
    const double width = tree.get<double>("svg.<xmlattr>.width");
    const double height = tree.get<double>("svg.<xmlattr>.height");
    const auto points = path_points(tree.get<std::string>("svg.g.path.<xmlattr>.d"));
    REQUIRE(points.size() == traces[0].samples.size());

    double min_x = 1e300, max_x = -1e300, min_y = 1e300, max_y = -1e300;
    for (const auto& s : traces[0].samples) {
      min_x = std::min(min_x, s.p.x);
      max_x = std::max(max_x, s.p.x);
      min_y = std::min(min_y, s.p.y);
      max_y = std::max(max_y, s.p.y);
    }
    const double scale = style.size / std::max(max_x - min_x, max_y - min_y);
    CHECK(std::max(width, height) == doctest::Approx(style.size + 2 * style.margin).epsilon(1e-6));
    for (std::size_t k = 0; k < points.size(); ++k) {
      const Point2 p = traces[0].samples[k].p;
      CHECK(std::abs(points[k].x - (style.margin + (p.x - min_x) * scale)) <= 5.1e-5);
      CHECK(std::abs(points[k].y - (style.margin + (max_y - p.y) * scale)) <= 5.1e-5);
      CHECK(points[k].x >= 0.0);
      CHECK(points[k].x <= width);
      CHECK(points[k].y >= 0.0);
      CHECK(points[k].y <= height);
    }
  }
}

TEST_CASE("palette cycles") {
  std::vector<Trace> traces;
  for (int i = 0; i < 10; ++i) traces.push_back(sample_trace(example(), FrameTag::Turntable, 16));
  RenderStyle style;
  style.palette = {"red", "blue"};
  const pt::ptree tree = parse_xml(to_svg(traces, style));
  std::vector<std::string> strokes;
  for (const auto& [name, child] : tree.get_child("svg.g")) {
    if (name == "path") strokes.push_back(child.get<std::string>("<xmlattr>.stroke"));
  }
  REQUIRE(strokes.size() == 10);
  for (std::size_t i = 0; i < strokes.size(); ++i) CHECK(strokes[i] == (i % 2 ? "blue" : "red"));
}

TEST_CASE("rendering rejects bad input") {
  const std::vector<Trace> none;
  CHECK_THROWS_AS(to_svg(none), std::invalid_argument);
  const std::vector<Trace> mixed{sample_trace(example(), FrameTag::Turntable, 16),
                                 sample_trace(example(), FrameTag::Laboratory, 16)};
  CHECK_THROWS_AS(to_svg(mixed), std::invalid_argument);
  std::vector<Trace> empty{sample_trace(example(), FrameTag::Turntable, 16)};
  empty[0].samples.clear();
  CHECK_THROWS_AS(to_svg(empty), std::invalid_argument);
  const std::vector<Trace> ok{sample_trace(example(), FrameTag::Turntable, 16)};
  RenderStyle bad;
  bad.stroke_width = 0.0;
  CHECK_THROWS_AS(to_svg(ok, bad), std::invalid_argument);
  bad = {};
  bad.palette.clear();
  CHECK_THROWS_AS(to_svg(ok, bad), std::invalid_argument);
}

TEST_CASE("CSV round-trips bit-exactly") {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 20; ++i) {
    const Trace trace = sample_trace(random_rig(rng), i % 2 ? FrameTag::Laboratory : FrameTag::Turntable, 97);
    const std::string csv = to_csv(trace);
    CHECK(csv.rfind("t,x,y\n", 0) == 0);
    const auto back = parse_csv(csv);
    REQUIRE(back.size() == trace.samples.size());
    for (std::size_t k = 0; k < back.size(); ++k) CHECK(back[k] == trace.samples[k]);
  }
}

TEST_CASE("CSV parse errors") {
  CHECK_THROWS(parse_csv("x,y\n1,2\n"));
  CHECK_THROWS(parse_csv("t,x,y\n1,2\n"));
  CHECK_THROWS(parse_csv("t,x,y\n1,2,abc\n"));
  CHECK(parse_csv("t,x,y\r\n1,2,3\r\n").size() == 1);
}

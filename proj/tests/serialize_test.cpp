#include <doctest.h>

#include <random>

#include "trochoid/serialize.hpp"
#include "trochoid/verify.hpp"

using namespace trochoid;

namespace {

Rig make_rig(Rational a, Rational b, Rational big, Rational small, Polarization p) {
  Rig rig;
  rig.a = a;
  rig.b = b;
  rig.big_omega = Frequency(big);
  rig.small_omega = Frequency(small);
  rig.polarization = p;
  return rig;
}

}  // namespace

TEST_CASE("classification JSON is stable") {
  CHECK(to_json(classify(make_rig(12, 2, 3, 15, Polarization::Anti))).dump() == R"({"class":"epicycloid","n":5})");
  CHECK(to_json(classify(make_rig(12, 3, 3, 15, Polarization::Co))).dump() == R"({"class":"hypocycloid","n":5})");
  CHECK(to_json(classify(make_rig(13, 2, 3, 15, Polarization::Anti))).dump() ==
        R"({"class":"epitrochoid","slide":"forward"})");
  CHECK(to_json(classify(make_rig(7, 2, 2, 5, Polarization::Anti))).dump() ==
        R"({"class":"epicycloid","n":"5/2","fractional":true})");
  CHECK(to_json(classify(make_rig(2, 2, 1, 2, Polarization::Co))).dump() == R"({"class":"line_segment","half_length":4.0})");
  CHECK(to_json(classify(make_rig(0, 2, 1, 2, Polarization::Co))).dump() == R"({"class":"circle","radius":2.0})");

  const Json ellipse = to_json(classify(make_rig(3, 1, 1, 2, Polarization::Co)));
  CHECK(ellipse["class"] == "ellipse");
  CHECK(ellipse["semi_major"].get<double>() == doctest::Approx(4.0));
  CHECK(ellipse["semi_minor"].get<double>() == doctest::Approx(2.0));
  auto it = ellipse.begin();
  CHECK(it.key() == "class");
  CHECK((++it).key() == "semi_major");
}

TEST_CASE("rig JSON") {
  Rig rig = make_rig(Rational(25, 2), 2, 3, Rational(31, 2), Polarization::Co);
  rig.phase_pen = 0.5;
  const Json doc = to_json(rig);
  CHECK(doc.dump() ==
        R"({"a":"25/2","b":"2","omega_table":"3","omega_pen":"31/2","polarization":"co","phase_table":0.0,"phase_pen":0.5})");
  CHECK(rig_from_json(doc) == rig);

  const Rig loose = rig_from_json(Json::parse(R"({"a":12.5,"b":2,"omega_table":3,"omega_pen":"31/2","polarization":"co"})"));
  CHECK(loose.a == Rational(25, 2));
  CHECK(loose.phase_pen == 0.0);

  CHECK_THROWS(rig_from_json(Json::parse(R"({"a":1,"b":1,"omega_table":1.5,"omega_pen":1,"polarization":"co"})")));
  CHECK_THROWS(rig_from_json(Json::parse(R"({"a":1,"b":1,"omega_table":1,"omega_pen":1,"polarization":"sideways"})")));
  CHECK_THROWS(rig_from_json(Json::parse(R"({"a":1,"b":1,"omega_table":1,"polarization":"co"})")));
  CHECK_THROWS(rig_from_json(Json::parse(R"({"a":-1,"b":1,"omega_table":1,"omega_pen":1,"polarization":"co"})")));
  CHECK_THROWS(rig_from_json(Json::parse("[1,2]")));
}

TEST_CASE("rig JSON round-trips") {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 300; ++i) {
    const Rig rig = random_rig(rng);
    CHECK(rig_from_json(Json::parse(to_json(rig).dump())) == rig);
  }
}

TEST_CASE("slide op and linear rig JSON") {
  const SlideOp op = SlideOp::stcf(Rational(1, 2), SlideDirection::Backward);
  CHECK(to_json(op).dump() == R"({"method":"stcf","magnitude":"1/2","direction":"backward"})");
  const SlideOp back = slide_op_from_json(to_json(op));
  CHECK(back.method == op.method);
  CHECK(back.magnitude == op.magnitude);
  CHECK(back.direction == op.direction);
  CHECK_THROWS(slide_op_from_json(Json::parse(R"({"method":"stcp","magnitude":"0","direction":"forward"})")));

  const LinearRig lin{Rational(20), Rational(10), Frequency(1)};
  CHECK(to_json(lin).dump() == R"({"r":"20","R":"10","omega":"1"})");
  CHECK(linear_rig_from_json(to_json(lin)) == lin);
}

TEST_CASE("trace metadata") {
  const Trace trace = sample_trace(make_rig(12, 2, 3, 15, Polarization::Anti), FrameTag::Laboratory, 16);
  const Json meta = trace_metadata(trace);
  CHECK(meta["frame"] == "lab");
  CHECK(meta["closed"] == true);
  CHECK(meta["samples"] == 17);
  CHECK(meta["rig"]["a"] == "12");

  const Trace lin = sample_linear(LinearRig{Rational(5), Rational(10), Frequency(1)}, 1.0, 4);
  CHECK(trace_metadata(lin)["linear_rig"]["r"] == "5");
}

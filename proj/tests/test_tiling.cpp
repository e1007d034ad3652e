#include <doctest.h>

#include <cmath>
#include <random>

#include "errors.hpp"
#include "oracles.hpp"
#include "radii.hpp"
#include "tiling.hpp"

using namespace compack;

namespace {

std::vector<Vec2> regular(int n, double side) {
  std::vector<Vec2> pts;
  const double rad = side / (2.0 * std::sin(kPi / n));
  for (int k = 0; k < n; ++k) pts.push_back(polar(rad, kTwoPi * k / n));
  return pts;
}

}  // namespace

TEST_CASE("polygon classification") {
  CHECK(classify_polygon(regular(3, 2.0)) == FaceKind::Triangle);
  CHECK(classify_polygon(regular(4, 2.0)) == FaceKind::Square);
  CHECK(classify_polygon({{0, 0}, {2, 0}, {2 + 2 * std::cos(1.0), 2 * std::sin(1.0)},
                          {2 * std::cos(1.0), 2 * std::sin(1.0)}}) == FaceKind::Rhombus);
  CHECK_FALSE(classify_polygon(regular(4, 1.0)).has_value());
}

TEST_CASE("c7 rhombus angle") {
  const double r = radius_class("c7").value;
  CHECK(rhombus_acute_angle(r) == doctest::Approx(2.0 * std::acos((-1.0 + std::sqrt(17.0)) / 4.0)));
}

TEST_CASE("c2 six-sided cell has sides 2 and angle sum 4 pi") {
  const double r = radius_class("c2").value;
  const auto h = hexagon6_reference(r);
  const std::vector<Vec2> pts(h.begin(), h.end());
  for (std::size_t k = 0; k < 6; ++k) CHECK(distance(pts[k], pts[(k + 1) % 6]) == doctest::Approx(2.0));
  const auto a = hexagon6_angles(r);
  CHECK(3 * (a[0] + a[1]) == doctest::Approx(4 * kPi));
  CHECK(classify_polygon(pts) == FaceKind::Hexagon6);
  CHECK(signed_area(pts) > 0.0);
}

TEST_CASE("strip tilings validate for c4 and c7") {
  const double r4 = radius_class("c4").value, r7 = radius_class("c7").value;
  for (const char* w : {"S", "T", "ST", "STT", "TTS"}) {
    CAPTURE(w);
    CHECK_NOTHROW(validate_tiling(strip_tiling(w, 3, r4), "c4", r4));
  }
  for (const char* w : {"R", "L", "RT", "RLT", "TTL"}) {
    CAPTURE(w);
    CHECK_NOTHROW(validate_tiling(strip_tiling(w, 3, r7), "c7", r7));
  }
  CHECK_NOTHROW(validate_tiling(snub_square_tiling(2), "c4", r4));
}

TEST_CASE("six-sided patterns validate for c2") {
  const double r = radius_class("c2").value;
  CHECK_NOTHROW(validate_tiling(hexagon6_kagome_tiling(r, 2), "c2", r));
  CHECK_NOTHROW(validate_tiling(hexagon6_dimer_tiling(r, 1), "c2", r));
}

TEST_CASE("face kinds outside the class are rejected") {
  const double r4 = radius_class("c4").value;
  const double r7 = radius_class("c7").value;
  try {
    validate_tiling(strip_tiling("R", 3, r7), "c4", r4);
    FAIL("expected InvalidTiling");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidTiling);
  }
  try {
    allowed_face_kinds("c5");
    FAIL("expected DescriptorMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DescriptorMismatch);
  }
}

TEST_CASE("broken tilings are rejected") {
  const double r4 = radius_class("c4").value;
  Tiling t = strip_tiling("S", 3, r4);
  Tiling gap = t;
  gap.faces.pop_back();
  CHECK_THROWS_AS(validate_tiling(gap, "c4", r4), Error);
  Tiling stretched = t;
  stretched.vertices[0].x += 0.01;
  CHECK_THROWS_AS(validate_tiling(stretched, "c4", r4), Error);
  Tiling clockwise = t;
  std::reverse(clockwise.faces[0].vertices.begin(), clockwise.faces[0].vertices.end());
  CHECK_THROWS_AS(validate_tiling(clockwise, "c4", r4), Error);
}

TEST_CASE("library strips agree with the independent row assembly") {
  const double r7 = radius_class("c7").value;
  const double phi = rhombus_acute_angle(r7);
  for (const char* w : {"SST", "STTS", "RLT", "RRT"}) {
    CAPTURE(w);
    const double r = std::string(w).find_first_of("RL") == std::string::npos ? radius_class("c4").value : r7;
    const Tiling mine = oracle::row_assembly(w, 3, phi);
    CHECK(tilings_congruent(mine, strip_tiling(w, 3, r)));
  }
}

TEST_CASE("tracing faces from vertices rebuilds the tiling") {
  const double r = radius_class("c4").value;
  const Tiling t = strip_tiling("STT", 3, r);
  const Tiling traced = tiling_from_vertices(t.vertices, t.periods);
  CHECK(traced.faces.size() == t.faces.size());
  CHECK(tilings_congruent(t, traced));
}

TEST_CASE("congruence survives rigid motions and tells different tilings apart") {
  const double r = radius_class("c4").value;
  const Tiling t = strip_tiling("STT", 3, r);
  CHECK(tilings_congruent(t, oracle::moved(t, 0.7, {3.1, -2.0}, false)));
  CHECK(tilings_congruent(t, oracle::moved(t, -1.9, {0.4, 5.0}, true)));
  CHECK_FALSE(tilings_congruent(t, strip_tiling("SST", 3, r)));
  CHECK_FALSE(tilings_congruent(t, strip_tiling("STT", 4, r)));
}

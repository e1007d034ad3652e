#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "errors.hpp"
#include "generate.hpp"
#include "oracles.hpp"
#include "patch_io.hpp"
#include "presets.hpp"
#include "verify.hpp"

using namespace compack;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Internal;
}

void check_clean(const Patch& p) {
  const VerifyReport rep = verify_patch(p);
  INFO(format_report(rep));
  CHECK(rep.ok());
  CHECK(rep.membership_checked);
  CHECK(rep.both_sizes);
  REQUIRE(rep.compact.has_value());
  CHECK(rep.compact->violating == 0);
}

}  // namespace

TEST_CASE("every preset generates a clean packing") {
  for (const Preset& pr : presets()) {
    CAPTURE(pr.name);
    const Patch p = generate_preset(pr.name);
    CHECK(p.class_id == pr.class_id);
    CHECK(p.periods.has_value());
    check_clean(p);
  }
  CHECK(figure_preset("c6").name == "fig6");
  CHECK(code_of([] { preset("fig99"); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("generation is deterministic") {
  for (const Preset& pr : presets()) {
    CHECK(serialize_patch(generate_preset(pr.name)) == serialize_patch(generate_preset(pr.name)));
  }
}

TEST_CASE("c5 with no substitution is the triangular packing") {
  const Patch p = generate(radius_class("c5"), C5Substitute{3, {}});
  CHECK(p.discs.size() == 9);
  CHECK(p.count(Size::Small) == 0);
  CHECK(density(p) == doctest::Approx(kPi / std::sqrt(12.0)).epsilon(1e-12));
}

TEST_CASE("c5 substitution needs an independent set") {
  const RadiusClass& rc = radius_class("c5");
  CHECK(code_of([&] { generate(rc, C5Substitute{3, {{0, 0}, {1, 0}}}); }) == ErrorCode::IndependentSet);
  // Adjacent only across the periodic boundary.
  CHECK(code_of([&] { generate(rc, C5Substitute{3, {{0, 0}, {2, 0}}}); }) == ErrorCode::IndependentSet);
  CHECK(code_of([&] { generate(rc, C5Substitute{3, {{0, 3}}}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { generate(rc, C5Substitute{3, {{1, 1}, {1, 1}}}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("random independent substitutions stay compact") {
  const RadiusClass& rc = radius_class("c5");
  std::mt19937 rng(11);
  for (int t = 0; t < 10; ++t) {
    const int n = 4 + static_cast<int>(rng() % 3);
    std::set<LatticePoint> chosen;
    for (int tries = 0; tries < 2 * n; ++tries) {
      const LatticePoint q{static_cast<int>(rng() % n), static_cast<int>(rng() % n)};
      bool free = !chosen.count(q);
      for (int di = -1; di <= 1; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == dj) continue;  // (1,1) and (-1,-1) are not lattice neighbors
          free = free && !chosen.count({((q.i + di) % n + n) % n, ((q.j + dj) % n + n) % n});
        }
      }
      if (free) chosen.insert(q);
    }
    if (chosen.empty()) continue;
    check_clean(generate(rc, C5Substitute{n, {chosen.begin(), chosen.end()}}));
  }
}

TEST_CASE("c3 layer words may not stack small layers") {
  const RadiusClass& rc = radius_class("c3");
  CHECK(code_of([&] { generate(rc, C3LayersA{"LSSL", 3}); }) == ErrorCode::AdjacentSmallLayers);
  // Cyclic adjacency counts too.
  CHECK(code_of([&] { generate(rc, C3LayersA{"SLS", 3}); }) == ErrorCode::AdjacentSmallLayers);
  CHECK(code_of([&] { generate(rc, C3LayersA{"LXL", 3}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("random c3 and c1 layer words are compact") {
  std::mt19937 rng(5);
  for (int t = 0; t < 8; ++t) {
    std::string a = "L", b, o;
    for (int k = 0; k < 5; ++k) a += (a.back() == 'S' || rng() % 2) ? 'L' : 'S';
    if (a.back() == 'S') a += 'L';
    for (int k = 0; k < 4; ++k) b += (rng() % 2) ? '1' : '0';
    for (int k = 0; k < 4; ++k) o += (rng() % 2) ? '1' : '0';
    CAPTURE(a);
    CAPTURE(b);
    CAPTURE(o);
    check_clean(generate(radius_class("c3"), C3LayersA{a, 3}));
    check_clean(generate(radius_class("c3"), C3LayersB{b, 3}));
    check_clean(generate(radius_class("c1"), C1Layers{o, 3}));
  }
}

TEST_CASE("c1 large discs meet two theta1 angles and one theta2") {
  const RadiusClass& rc = radius_class("c1");
  const double t1 = c1_theta1(rc.value), t2 = c1_theta2(rc.value);
  CHECK(2 * t1 + t2 == doctest::Approx(kTwoPi));
  for (const char* word : {"0", "0011", "01"}) {
    const Patch p = generate(rc, C1Layers{word, 3});
    const TangencyGraph g = build_tangency_graph(p);
    for (std::size_t i = 0; i < p.discs.size(); ++i) {
      if (p.discs[i].size != Size::Large) continue;
      std::vector<double> dirs;
      for (const Neighbor& n : g.adjacency[i]) {
        if (p.discs[n.index].size != Size::Large) continue;
        const Vec2 d = image_center(p, n) - p.discs[i].center;
        dirs.push_back(std::atan2(d.y, d.x));
      }
      REQUIRE(dirs.size() == 3);
      std::sort(dirs.begin(), dirs.end());
      std::vector<double> gaps{dirs[1] - dirs[0], dirs[2] - dirs[1], kTwoPi - (dirs[2] - dirs[0])};
      std::sort(gaps.begin(), gaps.end());
      CHECK(gaps[0] == doctest::Approx(t1));
      CHECK(gaps[1] == doctest::Approx(t1));
      CHECK(gaps[2] == doctest::Approx(t2));
    }
  }
}

TEST_CASE("c8 partial hole fills stay compact and full fill is denser than triangular") {
  const RadiusClass& rc = radius_class("c8");
  C8Fill some;
  some.all = false;
  some.holes = {{0, 0, true}, {1, 2, false}};
  check_clean(generate(rc, some));
  C8Fill all;
  CHECK(density(generate(rc, all)) > kPi / std::sqrt(12.0));
}

TEST_CASE("c9 clusters only fit pointing at edge midpoints") {
  // Rotating every cluster by 60 degrees makes them point at the corners.
  const RadiusClass& rc = radius_class("c9");
  Patch p = generate(rc, C9Fill{});
  check_clean(p);
  const double rho = 2.0 * rc.value / std::sqrt(3.0);
  Patch turned = p;
  turned.discs.clear();
  for (const Disc& d : p.discs) {
    if (d.size == Size::Large) turned.discs.push_back(d);
  }
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < 3; ++i) {
      const Vec2 base{2.0 * i + j, std::sqrt(3.0) * j};
      for (const Vec2 c : {base + Vec2{1.0, 1.0 / std::sqrt(3.0)}, base + Vec2{2.0, 2.0 / std::sqrt(3.0)}}) {
        for (int k = 0; k < 3; ++k) {
          turned.discs.push_back({c + polar(rho, kPi / 2 + k * 2 * kPi / 3 + (c.y - base.y > 1 ? kPi : 0.0)),
                                  Size::Small});
        }
      }
    }
  }
  CHECK_FALSE(verify_patch(turned).ok());
}

TEST_CASE("descriptor kind must match the class") {
  CHECK(code_of([] { generate(radius_class("c4"), C6Unique{2}); }) == ErrorCode::DescriptorMismatch);
  CHECK(descriptor_class(C3LayersB{"0", 3}) == "c3");
}

TEST_CASE("tilings and packings convert both ways") {
  const RadiusClass& c4 = radius_class("c4");
  const Tiling t = strip_tiling("STT", 3, c4.value);
  const Patch p = tiling_to_packing(c4, t);
  check_clean(p);
  CHECK(p.count(Size::Small) == t.count(FaceKind::Square));
  const Tiling back = packing_to_tiling(p);
  CHECK(tilings_congruent(t, back));
  CHECK(back.count(FaceKind::Triangle) == t.count(FaceKind::Triangle));

  const RadiusClass& c2 = radius_class("c2");
  const Tiling h = hexagon6_kagome_tiling(c2.value, 2);
  CHECK(tilings_congruent(h, packing_to_tiling(tiling_to_packing(c2, h))));
}

TEST_CASE("packing_to_tiling refuses packings without a tiling") {
  CHECK(code_of([] { packing_to_tiling(generate_preset("fig5")); }) == ErrorCode::DescriptorMismatch);
  Patch tri = oracle::triangular_patch(3, radius_class("c4").value);
  tri.class_id = "c4";
  CHECK(code_of([&] { packing_to_tiling(tri); }) == ErrorCode::NonCompact);
  Patch holed = generate_preset("fig4");
  holed.discs.erase(std::find_if(holed.discs.begin(), holed.discs.end(),
                                 [](const Disc& d) { return d.size == Size::Small; }));
  CHECK(code_of([&] { packing_to_tiling(holed); }) == ErrorCode::NonCompact);
}

TEST_CASE("descriptor documents") {
  const auto d = parse_descriptor("c5", R"({"extent": 4, "points": [[0, 0], [2, 2]]})");
  const auto* c5 = std::get_if<C5Substitute>(&d);
  REQUIRE(c5 != nullptr);
  CHECK(c5->points.size() == 2);
  CHECK(std::holds_alternative<C8Fill>(parse_descriptor("c8", R"({"holes": [[0, 0, "up"]]})")));
  CHECK(std::holds_alternative<C3LayersB>(parse_descriptor("c3", R"({"offsets": "01"})")));
  CHECK(std::holds_alternative<C4FromTiling>(parse_descriptor("c4", R"({"pattern": "snub", "extent": 2})")));
  CHECK(code_of([] { parse_descriptor("c6", R"({"extent": 2, "bogus": 1})"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_descriptor("c5", R"({"points": [[0]]})"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_descriptor("c5", "{"); }) == ErrorCode::Parse);
}

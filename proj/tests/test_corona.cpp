#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "corona.hpp"
#include "errors.hpp"
#include "oracles.hpp"
#include "radii.hpp"

using namespace compack;

namespace {

std::set<std::string> words(const std::vector<Corona>& cs) {
  std::set<std::string> out;
  for (const Corona& c : cs) out.insert(c.word);
  return out;
}

std::set<std::string> canonical_set(const std::vector<std::string>& ws) {
  std::set<std::string> out;
  for (const std::string& w : ws) out.insert(oracle::canonical(w));
  return out;
}

bool excluded_for(const CoronaSet& s, Size center, const std::string& word, const char* reason) {
  return std::any_of(s.excluded.begin(), s.excluded.end(), [&](const ExcludedCorona& e) {
    return e.corona.center == center && e.corona.word == word && e.reason == reason;
  });
}

}  // namespace

TEST_CASE("canonicalize picks the minimum over rotations and reflections") {
  CHECK(canonicalize("1r1r1") == "11r1r");
  CHECK(canonicalize("r1") == "1r");
  CHECK(canonicalize("rrrr") == "rrrr");
  std::mt19937 rng(7);
  for (int t = 0; t < 500; ++t) {
    std::string w(1 + rng() % 12, '1');
    for (char& c : w) c = (rng() & 1) ? 'r' : '1';
    const std::string c = canonicalize(w);
    CHECK(c == oracle::canonical(w));
    CHECK(canonicalize(c) == c);
    const std::string rot = w.substr(3 % w.size()) + w.substr(0, 3 % w.size());
    CHECK(canonicalize(rot) == c);
    CHECK(canonicalize(std::string(w.rbegin(), w.rend())) == c);
  }
}

TEST_CASE("canonicalize rejects bad words") {
  try {
    canonicalize("");
    FAIL("expected EmptyWord");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyWord);
  }
  CHECK_THROWS_AS(canonicalize("1x"), Error);
}

TEST_CASE("cyclic_contains wraps around and reads both ways") {
  CHECK(cyclic_contains("r111", "1r1"));
  CHECK(cyclic_contains("1rr11", "11r"));
  CHECK_FALSE(cyclic_contains("1r1r", "rr"));
}

TEST_CASE("raw small coronas: the table word and the monochromatic ring") {
  for (const RadiusClass& rc : radius_classes()) {
    CAPTURE(rc.id);
    const auto small = words(enumerate_coronas(Size::Small, rc));
    CHECK(small == std::set<std::string>{rc.small_corona_word, "rrrrrr"});
  }
}

TEST_CASE("raw large coronas match the printed lists") {
  for (const auto& [id, list] : oracle::kLargeLists) {
    CAPTURE(id);
    CHECK(words(enumerate_coronas(Size::Large, radius_class(id))) == canonical_set(list));
  }
  const auto c8 = enumerate_coronas(Size::Large, radius_class("c8"));
  const auto c9 = enumerate_coronas(Size::Large, radius_class("c9"));
  CHECK(c8.size() == 13);
  CHECK(c9.size() == 195);
  CHECK(words(c9).count("111111") == 1);
}

TEST_CASE("every enumerated corona closes and the audit is clean") {
  for (const RadiusClass& rc : radius_classes()) {
    for (Size center : {Size::Large, Size::Small}) {
      EnumerationAudit audit;
      for (const Corona& c : enumerate_coronas(center, rc.value, kFeasibilityTol, &audit)) {
        CHECK(std::abs(angle_decomposition(c, rc).total - kTwoPi) < kFeasibilityTol);
      }
      CHECK(audit.annulus_hits == 0);
    }
  }
}

TEST_CASE("angle decompositions of known coronas") {
  const RadiusClass& c1 = radius_class("c1");
  const auto d = angle_decomposition(Corona{Size::Large, canonicalize("1r1r1rr")}, c1);
  CHECK(d.count(AngleKind::AlphaPrime) == 6);
  CHECK(d.count(AngleKind::Beta) == 1);
  const auto mono = angle_decomposition(Corona{Size::Small, "rrrrrr"}, c1);
  CHECK(mono.count(AngleKind::ThirdPi) == 6);
  CHECK(mono.total == doctest::Approx(kTwoPi));
}

TEST_CASE("filters remove exactly the argued exclusions") {
  const CoronaSet c7 = filtered_corona_set(radius_class("c7"));
  CHECK(excluded_for(c7, Size::Large, canonicalize("rrr1r1r1r1"), kReasonLocal));
  CHECK(c7.large.size() == 5);

  const CoronaSet c3 = filtered_corona_set(radius_class("c3"));
  CHECK(std::any_of(c3.excluded.begin(), c3.excluded.end(), [](const ExcludedCorona& e) {
    return e.corona == Corona{Size::Large, canonicalize("rrrrr1r1")};
  }));

  const CoronaSet c6 = filtered_corona_set(radius_class("c6"));
  CHECK(excluded_for(c6, Size::Large, "111111", kReasonBoundary));
  REQUIRE(c6.large.size() == 1);
  CHECK(c6.large[0].length() == 12);

  const CoronaSet c4 = filtered_corona_set(radius_class("c4"));
  CHECK(c4.large.size() == 4);

  for (const RadiusClass& rc : radius_classes()) {
    CAPTURE(rc.id);
    const CoronaSet s = filtered_corona_set(rc);
    const bool keeps = s.contains(Corona{Size::Small, "rrrrrr"});
    CHECK(keeps == (rc.id == "c5"));
    // Filtering never adds coronas.
    const CoronaSet raw = build_corona_set(rc);
    CHECK(s.small.size() + s.large.size() + s.excluded.size() == raw.small.size() + raw.large.size());
  }
}

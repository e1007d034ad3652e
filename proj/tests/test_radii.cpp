#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "corona.hpp"
#include "errors.hpp"
#include "oracles.hpp"
#include "radii.hpp"

using namespace compack;

TEST_CASE("f_eval on the trivial and square signatures") {
  for (double r : {0.1, 0.5, 0.9}) CHECK(std::abs(f_eval({0, 0, 6}, r) - kTwoPi) < 1e-12);
  CHECK(std::abs(f_eval({4, 0, 0}, std::sqrt(2.0) - 1.0) - kTwoPi) < 1e-12);
  const double s = std::sin(kPi / 5);
  CHECK(std::abs(f_eval({5, 0, 0}, (1.0 - s) / s) - kTwoPi) < 1e-9);
  CHECK_THROWS_AS(f_eval({1, 0, 0}, 0.0), Error);
}

TEST_CASE("candidate signatures match an exhaustive loop") {
  std::vector<SmallSignature> brute;
  for (int i = 0; i <= 5; ++i) {
    for (int j = 0; j <= 5; ++j) {
      for (int k = 0; k <= 5; ++k) {
        if (6 * i + 3 * j + 2 * k <= 12 || i + j + k >= 6 || j % 2 != 0) continue;
        if (j == 0 && i * k != 0) continue;
        brute.push_back({i, j, k});
      }
    }
  }
  const auto got = candidate_signatures();
  CHECK(got == brute);
  CHECK(got.size() == 10);
  CHECK(std::is_sorted(got.begin(), got.end()));
  const std::set<SmallSignature> expected{{3, 2, 0}, {2, 2, 1}, {1, 4, 0}, {4, 0, 0}, {1, 2, 2},
                                          {0, 4, 1}, {2, 2, 0}, {3, 0, 0}, {1, 2, 1}, {5, 0, 0}};
  CHECK(std::set<SmallSignature>(got.begin(), got.end()) == expected);
  CHECK(std::find(got.begin(), got.end(), SmallSignature{2, 0, 2}) == got.end());
  CHECK(std::find(got.begin(), got.end(), SmallSignature{0, 4, 0}) == got.end());
}

TEST_CASE("solve_signature finds roots and reports missing ones") {
  CHECK(std::abs(solve_signature({4, 0, 0}) - (std::sqrt(2.0) - 1.0)) < 1e-12);
  CHECK(std::abs(solve_signature({3, 0, 0}) - (2.0 / std::sqrt(3.0) - 1.0)) < 1e-12);
  for (const SmallSignature sig : {SmallSignature{0, 0, 1}, SmallSignature{0, 0, 6}}) {
    try {
      solve_signature(sig);
      FAIL("expected NoSolution");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NoSolution);
    }
  }
}

TEST_CASE("large_feasible on known radii") {
  CHECK(large_feasible(solve_signature({3, 2, 0})) == LargeSignature{6, 1, 0});
  CHECK(large_feasible(std::sqrt(2.0) - 1.0).has_value());
  const double s = std::sin(kPi / 5);
  CHECK_FALSE(large_feasible((1.0 - s) / s).has_value());
  // Trivial (0,0,6) alone never counts.
  CHECK_FALSE(large_feasible(0.77).has_value());
}

TEST_CASE("nine radius classes with table decimals, words and residuals") {
  const auto classes = enumerate_radius_classes();
  REQUIRE(classes.size() == 9);
  for (std::size_t n = 0; n < 9; ++n) {
    const RadiusClass& rc = classes[n];
    const oracle::TableRow& row = oracle::kTable[n];
    CAPTURE(rc.id);
    CHECK(rc.id == row.id);
    CHECK(std::abs(rc.value - row.decimal) < 1e-9);
    CHECK(rc.signature == SmallSignature{row.i, row.j, row.k});
    CHECK(rc.small_corona_word == oracle::canonical(row.word));
    CHECK(std::abs(residual(rc)) < 1e-10);
    CHECK(std::abs(f_eval(rc.signature, rc.value) - kTwoPi) < 1e-9);
    const auto d = angle_decomposition(Corona{Size::Small, rc.small_corona_word}, rc);
    CHECK(d.count(AngleKind::Alpha) == row.i);
    CHECK(d.count(AngleKind::BetaPrime) == row.j);
    CHECK(d.count(AngleKind::ThirdPi) == row.k);
  }
}

TEST_CASE("enumeration is bitwise deterministic") {
  const auto a = enumerate_radius_classes();
  const auto b = enumerate_radius_classes();
  for (std::size_t n = 0; n < a.size(); ++n) {
    CHECK(a[n].value == b[n].value);
    CHECK(a[n].large_signature == b[n].large_signature);
  }
}

TEST_CASE("audit finds no near misses around the tolerance") {
  for (const CandidateResult& c : evaluate_candidates()) {
    CAPTURE(c.signature.i);
    CAPTURE(c.signature.j);
    CAPTURE(c.signature.k);
    CHECK(c.audit.annulus_hits == 0);
    CHECK(c.audit.nearest_miss > kAuditAnnulus);
    CHECK(c.large.has_value() == !c.audit.accepted.empty());
  }
}

TEST_CASE("radius_class lookup") {
  CHECK(radius_class("c4").value == doctest::Approx(std::sqrt(2.0) - 1.0));
  try {
    radius_class("c10");
    FAIL("expected UnknownClass");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownClass);
  }
}

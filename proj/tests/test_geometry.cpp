#include <doctest.h>

#include <cmath>

#include "errors.hpp"
#include "geometry.hpp"
#include "oracles.hpp"

using namespace compack;

TEST_CASE("contact angles satisfy the cosine identities on a dense grid") {
  for (int s = 1; s <= 99; ++s) {
    const double r = s / 100.0;
    const ContactAngles a = contact_angles(r);
    CHECK(std::cos(a.alpha_prime) == doctest::Approx(1.0 / (1.0 + r)).epsilon(1e-12));
    CHECK(std::cos(a.beta_prime) == doctest::Approx(r / (1.0 + r)).epsilon(1e-12));
    CHECK(std::abs(a.alpha + 2.0 * a.alpha_prime - kPi) < 1e-12);
    CHECK(std::abs(a.beta + 2.0 * a.beta_prime - kPi) < 1e-12);
  }
}

TEST_CASE("contact angles agree with the law of cosines") {
  for (double r : {0.05, 0.2807764064, 0.5, 0.93}) {
    const ContactAngles a = contact_angles(r);
    CHECK(a.alpha == doctest::Approx(oracle::contact_angle(r, 1, 1)).epsilon(1e-12));
    CHECK(a.alpha_prime == doctest::Approx(oracle::contact_angle(1, 1, r)).epsilon(1e-12));
    CHECK(a.beta == doctest::Approx(oracle::contact_angle(1, r, r)).epsilon(1e-12));
    CHECK(a.beta_prime == doctest::Approx(oracle::contact_angle(r, r, 1)).epsilon(1e-12));
  }
}

TEST_CASE("named radii give the expected angles") {
  const ContactAngles sq = contact_angles(std::sqrt(2.0) - 1.0);
  CHECK(std::abs(sq.alpha_prime - kPi / 4) < 1e-12);
  CHECK(std::abs(sq.alpha - kPi / 2) < 1e-12);

  const double s = std::sin(kPi / 12);
  const ContactAngles c6 = contact_angles(s / (1.0 - s));
  CHECK(std::abs(c6.beta - kPi / 6) < 1e-12);
  // Twelve small discs around a large one close exactly.
  CHECK(std::abs(12 * c6.beta - kTwoPi) < 1e-11);
}

TEST_CASE("equal radii degenerate to the equilateral angle") {
  const ContactAngles a = detail::contact_angles_relaxed(1.0);
  CHECK(std::abs(a.alpha_prime - kThirdPi) < 1e-12);
  CHECK(std::abs(a.beta_prime - kThirdPi) < 1e-12);
}

TEST_CASE("public entry point rejects radii outside (0, 1)") {
  for (double r : {0.0, -0.1, 1.0, 1.5, std::nan("")}) {
    try {
      contact_angles(r);
      FAIL("expected a domain error for r = " << r);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Domain);
    }
  }
}

TEST_CASE("alpha and beta' strictly decrease in r") {
  ContactAngles prev = contact_angles(0.0005);
  for (int s = 1; s < 1000; ++s) {
    const ContactAngles cur = contact_angles(0.0005 + s * 0.000999);
    CHECK(cur.alpha < prev.alpha);
    CHECK(cur.beta_prime < prev.beta_prime);
    prev = cur;
  }
}

TEST_CASE("limits as r approaches zero") {
  const ContactAngles a = contact_angles(1e-6);
  CHECK(std::abs(a.alpha - kPi) < 1e-2);
  CHECK(std::abs(a.beta_prime - kPi / 2) < 1e-2);
}

TEST_CASE("theta covers the five cases and is symmetric") {
  const double r = 0.3;
  const ContactAngles a = contact_angles(r);
  const Size L = Size::Large, S = Size::Small;
  CHECK(theta(L, L, L, r) == doctest::Approx(kThirdPi));
  CHECK(theta(S, S, S, r) == doctest::Approx(kThirdPi));
  CHECK(theta(S, L, L, r) == a.alpha);
  CHECK(theta(L, S, S, r) == a.beta);
  CHECK(theta(L, L, S, r) == a.alpha_prime);
  CHECK(theta(S, S, L, r) == a.beta_prime);
  for (Size c : {L, S}) {
    for (Size x : {L, S}) {
      for (Size y : {L, S}) {
        CHECK(theta(c, x, y, r) == theta(c, y, x, r));
        const double rc = c == L ? 1.0 : r, rx = x == L ? 1.0 : r, ry = y == L ? 1.0 : r;
        CHECK(theta(c, x, y, r) == doctest::Approx(oracle::contact_angle(rc, rx, ry)).epsilon(1e-12));
      }
    }
  }
  CHECK_THROWS_AS(theta(L, L, L, 1.0), Error);
}

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace compack {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kThirdPi = std::numbers::pi / 3.0;

// Large discs have radius 1, small discs radius r in (0, 1).
enum class Size : std::uint8_t { Large, Small };

// '1' for Large, 'r' for Small, matching the usual corona notation.
char to_char(Size s) noexcept;
Size size_from_char(char c);
const char* size_name(Size s) noexcept;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator/(double s) const { return {x / s, y / s}; }
  Vec2 operator-() const { return {-x, -y}; }
  Vec2& operator+=(Vec2 o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  bool operator==(const Vec2&) const = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }
inline Vec2 unit(Vec2 a) { return a / norm(a); }
inline Vec2 polar(double radius, double angle) {
  return {radius * std::cos(angle), radius * std::sin(angle)};
}
inline Vec2 rotate(Vec2 a, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * a.x - s * a.y, s * a.x + c * a.y};
}
inline Vec2 perp(Vec2 a) { return {-a.y, a.x}; }

// Angles of the triangle joining the centers of three mutually tangent discs.
// Two large + one small: alpha at the small center, alpha_prime at each large.
// Two small + one large: beta at the large center, beta_prime at each small.
struct ContactAngles {
  double r = 0.0;
  double alpha = 0.0;
  double alpha_prime = 0.0;
  double beta = 0.0;
  double beta_prime = 0.0;
};

// Throws Error(Domain) unless 0 < r < 1.
ContactAngles contact_angles(double r);

namespace detail {
// Admits r == 1 so tests can probe the equal-radius degeneration.
ContactAngles contact_angles_relaxed(double r);
}  // namespace detail

enum class AngleKind : std::uint8_t { ThirdPi, Alpha, AlphaPrime, Beta, BetaPrime };
inline constexpr int kAngleKindCount = 5;

const char* angle_kind_name(AngleKind k) noexcept;

// Which contact angle sits at `center` when it touches `left` and `right`,
// which also touch each other.
AngleKind angle_kind(Size center, Size left, Size right) noexcept;
double angle_value(AngleKind kind, const ContactAngles& a) noexcept;

double theta(Size center, Size left, Size right, double r);
double theta(Size center, Size left, Size right, const ContactAngles& a) noexcept;

}  // namespace compack

#include "geometry.hpp"

#include <string>

#include "errors.hpp"

namespace compack {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::Domain: return "domain";
    case ErrorCode::NoSolution: return "no-solution";
    case ErrorCode::Internal: return "internal";
    case ErrorCode::UnknownClass: return "unknown-class";
    case ErrorCode::EmptyWord: return "empty-word";
    case ErrorCode::Overlap: return "overlap";
    case ErrorCode::Parse: return "parse";
    case ErrorCode::DescriptorMismatch: return "descriptor-mismatch";
    case ErrorCode::IndependentSet: return "independent-set";
    case ErrorCode::AdjacentSmallLayers: return "adjacent-small-layers";
    case ErrorCode::InvalidTiling: return "invalid-tiling";
    case ErrorCode::NonCompact: return "non-compact";
    case ErrorCode::Aperiodic: return "aperiodic";
    case ErrorCode::Io: return "io";
  }
  return "unknown";
}

char to_char(Size s) noexcept { return s == Size::Large ? '1' : 'r'; }

Size size_from_char(char c) {
  if (c == '1') return Size::Large;
  if (c == 'r') return Size::Small;
  throw Error(ErrorCode::InvalidArgument,
              std::string("invalid size character '") + c + "' (expected '1' or 'r')");
}

const char* size_name(Size s) noexcept { return s == Size::Large ? "large" : "small"; }

namespace detail {

ContactAngles contact_angles_relaxed(double r) {
  if (!(r > 0.0) || !(r <= 1.0)) {
    throw Error(ErrorCode::Domain, "radius must lie in (0, 1], got " + std::to_string(r));
  }
  ContactAngles a;
  a.r = r;
  a.alpha_prime = std::acos(1.0 / (1.0 + r));
  a.alpha = kPi - 2.0 * a.alpha_prime;
  a.beta_prime = std::acos(r / (1.0 + r));
  a.beta = kPi - 2.0 * a.beta_prime;
  return a;
}

}  // namespace detail

ContactAngles contact_angles(double r) {
  if (!(r > 0.0) || !(r < 1.0)) {
    throw Error(ErrorCode::Domain, "radius must lie in (0, 1), got " + std::to_string(r));
  }
  return detail::contact_angles_relaxed(r);
}

const char* angle_kind_name(AngleKind k) noexcept {
  switch (k) {
    case AngleKind::ThirdPi: return "pi/3";
    case AngleKind::Alpha: return "alpha";
    case AngleKind::AlphaPrime: return "alpha'";
    case AngleKind::Beta: return "beta";
    case AngleKind::BetaPrime: return "beta'";
  }
  return "?";
}

AngleKind angle_kind(Size center, Size left, Size right) noexcept {
  if (left == center && right == center) return AngleKind::ThirdPi;
  if (center == Size::Large) {
    return (left == Size::Small && right == Size::Small) ? AngleKind::Beta : AngleKind::AlphaPrime;
  }
  return (left == Size::Large && right == Size::Large) ? AngleKind::Alpha : AngleKind::BetaPrime;
}

double angle_value(AngleKind kind, const ContactAngles& a) noexcept {
  switch (kind) {
    case AngleKind::ThirdPi: return kThirdPi;
    case AngleKind::Alpha: return a.alpha;
    case AngleKind::AlphaPrime: return a.alpha_prime;
    case AngleKind::Beta: return a.beta;
    case AngleKind::BetaPrime: return a.beta_prime;
  }
  return 0.0;
}

double theta(Size center, Size left, Size right, const ContactAngles& a) noexcept {
  return angle_value(angle_kind(center, left, right), a);
}

double theta(Size center, Size left, Size right, double r) {
  return theta(center, left, right, contact_angles(r));
}

}  // namespace compack

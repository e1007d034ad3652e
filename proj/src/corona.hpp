#pragma once

#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "geometry.hpp"
#include "radii.hpp"

namespace compack {

// Cyclic neighbor word around a disc, written over '1' (large) and 'r' (small).
// Stored canonically: the lexicographic minimum over rotations and reflections.
struct Corona {
  Size center = Size::Large;
  std::string word;

  std::size_t length() const { return word.size(); }
  auto operator<=>(const Corona&) const = default;
};

// "1:rrrrrr" style rendering.
std::string to_string(const Corona& c);

// Throws Error(EmptyWord) on an empty word, Error(InvalidArgument) on letters
// other than '1' and 'r'.
std::string canonicalize(std::string_view word);

// True when `sub` or its reversal appears as a contiguous cyclic subword.
bool cyclic_contains(std::string_view word, std::string_view sub);

struct EnumerationAudit {
  double nearest_miss = 0.0;  // closest closed word rejected by tol
  int annulus_hits = 0;       // rejected words with residual below kAuditAnnulus
};

std::vector<Corona> enumerate_coronas(Size center, double r, double tol = kFeasibilityTol,
                                      EnumerationAudit* audit = nullptr);
std::vector<Corona> enumerate_coronas(Size center, const RadiusClass& rc,
                                      double tol = kFeasibilityTol);

struct ExcludedCorona {
  Corona corona;
  std::string reason;
};

struct CoronaSet {
  std::string class_id;
  double r = 0.0;
  std::vector<Corona> small;
  std::vector<Corona> large;
  std::vector<ExcludedCorona> excluded;

  const std::vector<Corona>& around(Size center) const {
    return center == Size::Small ? small : large;
  }
  bool contains(const Corona& c) const;
};

inline constexpr const char* kReasonLocal = "local consistency";
inline constexpr const char* kReasonBoundary = "boundary argument";

// Unfiltered enumeration for both centers.
CoronaSet build_corona_set(const RadiusClass& rc, double tol = kFeasibilityTol);

// Removes coronas whose neighbors cannot see the demanded x.c.y subword in
// any viable corona of their own; iterated to a fixed point.
CoronaSet filter_locally_consistent(CoronaSet set);

// Drops the all-s corona unless another viable s-corona contains "sss".
CoronaSet filter_monochromatic(CoronaSet set);

// build -> local -> monochromatic -> local.
CoronaSet filtered_corona_set(const RadiusClass& rc);

struct AngleDecomposition {
  std::array<int, kAngleKindCount> counts{};  // indexed by AngleKind
  double total = 0.0;

  int count(AngleKind k) const { return counts[static_cast<std::size_t>(k)]; }
};

AngleDecomposition angle_decomposition(const Corona& c, double r);
AngleDecomposition angle_decomposition(const Corona& c, const RadiusClass& rc);

}  // namespace compack

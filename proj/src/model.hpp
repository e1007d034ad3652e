#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "corona.hpp"
#include "geometry.hpp"

namespace compack {

// Relative tolerance for tangency and overlap decisions.
inline constexpr double kTangencyTol = 1e-9;
// Absolute tolerance on the angular closure of a corona.
inline constexpr double kClosureTol = 1e-7;
// Periodic patches need both period vectors longer than this.
inline constexpr double kMinPeriod = 4.0;

struct Disc {
  Vec2 center;
  Size size = Size::Large;
};

struct Offset {
  int a = 0;
  int b = 0;
  auto operator<=>(const Offset&) const = default;
  Offset operator-() const { return {-a, -b}; }
};

struct Lattice {
  Vec2 a;
  Vec2 b;

  Vec2 translate(Offset o) const { return a * o.a + b * o.b; }
  double area() const { return std::abs(cross(a, b)); }
  // Coordinates of v in the (a, b) basis.
  Vec2 fractional(Vec2 v) const;
  // Maps v into the half-open cell [0,1)^2 of the basis.
  Vec2 reduce(Vec2 v) const;
};

struct Patch {
  std::string class_id;
  double r = 0.0;
  std::vector<Disc> discs;
  std::optional<Lattice> periods;

  double radius(Size s) const { return s == Size::Large ? 1.0 : r; }
  double radius(const Disc& d) const { return radius(d.size); }
  bool has_both_sizes() const;
  std::size_t count(Size s) const;
};

// Throws Error(InvalidArgument) for non-finite coordinates, r outside (0,1),
// dependent periods, or periods shorter than kMinPeriod.
void validate_patch(const Patch& p);

// Calls fn(i, j, offset, distance) for every pair of disc images (i, j + offset)
// whose centers are closer than radius_i + radius_j + slack. Each unordered
// pair of images is reported once.
void for_each_close_pair(const Patch& p, double slack,
                         const std::function<void(std::size_t, std::size_t, Offset, double)>& fn);

struct Neighbor {
  std::size_t index = 0;
  Offset offset;
  auto operator<=>(const Neighbor&) const = default;
};

struct TangencyGraph {
  // Neighbors of each disc, sorted counterclockwise by direction.
  std::vector<std::vector<Neighbor>> adjacency;
};

bool tangent(double dist, double radius_sum);
bool overlapping(double dist, double radius_sum);

Vec2 image_center(const Patch& p, const Neighbor& n);

// Throws Error(Overlap) naming the first offending pair.
TangencyGraph build_tangency_graph(const Patch& p);

struct CoronaResult {
  std::optional<Corona> corona;  // empty for an incomplete (open) neighborhood
  std::string reason;
  double closure_error = 0.0;
};

CoronaResult corona_of(const Patch& p, const TangencyGraph& g, std::size_t disc_index);

// Copies the periodic cell na x nb times and drops the periods.
Patch unroll(const Patch& p, int na, int nb);

}  // namespace compack

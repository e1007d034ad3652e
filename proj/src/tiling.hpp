#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geometry.hpp"
#include "model.hpp"

namespace compack {

enum class FaceKind { Triangle, Square, Rhombus, Hexagon6 };

const char* face_kind_name(FaceKind k) noexcept;
FaceKind face_kind_from_name(std::string_view name);

struct VertexRef {
  std::size_t index = 0;
  Offset offset;
  auto operator<=>(const VertexRef&) const = default;
};

struct Face {
  FaceKind kind = FaceKind::Triangle;
  std::vector<VertexRef> vertices;  // counterclockwise
};

// Polygons with unit edge length 2 whose vertices carry the large discs of a
// packing. With periods set, `vertices` holds one representative per orbit and
// faces reach neighboring cells through VertexRef offsets.
struct Tiling {
  std::vector<Vec2> vertices;
  std::vector<Face> faces;
  std::optional<Lattice> periods;

  Vec2 position(const VertexRef& v) const;
  std::vector<Vec2> face_points(const Face& f) const;
  std::size_t count(FaceKind k) const;
};

inline constexpr double kEdgeLength = 2.0;
inline constexpr double kTilingTol = 1e-9;

// Acute angle of the c7 rhombus: the pair of tangent small discs on the long
// diagonal touches all four corners.
double rhombus_acute_angle(double r);

// The c2 six-sided cell, centered at the origin, counterclockwise and starting
// with the corner at 30 degrees. Even slots are corners touching two cluster
// discs, odd slots corners touching one.
std::array<Vec2, 6> hexagon6_reference(double r);
// Interior angles at the even and odd slots of hexagon6_reference.
std::array<double, 2> hexagon6_angles(double r);

// Interior angle at each vertex of a counterclockwise polygon.
std::vector<double> interior_angles(const std::vector<Vec2>& pts);
double signed_area(const std::vector<Vec2>& pts);

// Geometric shape of a polygon with all sides of length 2, or nullopt.
std::optional<FaceKind> classify_polygon(const std::vector<Vec2>& pts);

// Face kinds a tiling for this class may contain; throws Error(DescriptorMismatch)
// for classes without a tiling correspondence.
std::vector<FaceKind> allowed_face_kinds(std::string_view class_id);

// Throws Error(InvalidTiling) describing the first violated rule.
void validate_tiling(const Tiling& t, std::string_view class_id, double r);

// Bounded counterclockwise faces of a plane (or periodic) straight-line graph
// whose adjacency lists are sorted counterclockwise.
std::vector<std::vector<VertexRef>> trace_faces(const std::vector<Vec2>& positions,
                                                const std::optional<Lattice>& periods,
                                                const std::vector<std::vector<Neighbor>>& adjacency);

// Joins every pair of vertices at distance 2 and traces the faces.
Tiling tiling_from_vertices(const std::vector<Vec2>& vertices, const std::optional<Lattice>& periods);

// Horizontal strips stacked bottom to top: 'S' square strip, 'T' triangle strip,
// 'R' / 'L' rhombus strip leaning right / left (rhombus angle from r).
// The word is repeated until the vertical period exceeds kMinPeriod.
Tiling strip_tiling(std::string_view strips, int width, double r);

Tiling snub_square_tiling(int extent);

// c2: one cell per lattice point, neighbors meeting corner to corner.
Tiling hexagon6_kagome_tiling(double r, int extent);
// c2: cells paired across every other edge, with six-triangle stars between.
Tiling hexagon6_dimer_tiling(double r, int extent);

// True when b is the image of a under some rotation/reflection plus
// translation (and the period lattices agree).
bool tilings_congruent(const Tiling& a, const Tiling& b, double tol = 1e-7);

}  // namespace compack

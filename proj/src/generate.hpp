#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "model.hpp"
#include "radii.hpp"
#include "tiling.hpp"

namespace compack {

// Lattice coordinates on the unit triangular packing with basis (2,0), (1,sqrt3).
struct LatticePoint {
  int i = 0;
  int j = 0;
  auto operator<=>(const LatticePoint&) const = default;
};

// The triangular hole of cell (i, j) pointing up or down.
struct Hole {
  int i = 0;
  int j = 0;
  bool up = true;
  auto operator<=>(const Hole&) const = default;
};

struct C6Unique {
  int extent = 2;
};
struct C5Substitute {
  int extent = 3;
  std::vector<LatticePoint> points;
};
struct HoleFill {
  int extent = 3;
  bool all = true;
  std::vector<Hole> holes;  // used when all is false
};
struct C8Fill : HoleFill {};
struct C9Fill : HoleFill {};
struct C4FromTiling {
  Tiling tiling;
};
struct C7FromTiling {
  Tiling tiling;
};
struct C2FromTiling {
  Tiling tiling;
};
// One bit per layer of flattened hexagons, bottom to top.
struct C1Layers {
  std::string orientations;
  int width = 3;
};
// Layer word over {L, S}, read cyclically; no two S layers may touch.
struct C3LayersA {
  std::string layers;
  int width = 3;
};
// One offset bit per interface between consecutive layers.
struct C3LayersB {
  std::string offsets;
  int width = 3;
};

using ConstructionDescriptor =
    std::variant<C6Unique, C5Substitute, C8Fill, C9Fill, C4FromTiling, C7FromTiling, C2FromTiling,
                 C1Layers, C3LayersA, C3LayersB>;

// Class id a descriptor belongs to.
std::string descriptor_class(const ConstructionDescriptor& d);

// Throws Error(DescriptorMismatch), Error(IndependentSet),
// Error(AdjacentSmallLayers), Error(InvalidTiling) or Error(InvalidArgument).
Patch generate(const RadiusClass& rc, const ConstructionDescriptor& d);

// Flattened-hexagon angles of the c1 construction: theta1 appears four times
// per hexagon, theta2 twice at opposite corners.
double c1_theta1(double r);
double c1_theta2(double r);

// Large disc at every vertex, small discs inside squares (c4), rhombi (c7)
// and six-sided cells (c2). Validates the tiling first.
Patch tiling_to_packing(const RadiusClass& rc, const Tiling& t);

// Large-large tangency segments of a compact c2, c4 or c7 packing.
// Throws Error(NonCompact) for packings that are not compact or lack a size.
Tiling packing_to_tiling(const Patch& p);

// Descriptor document for the given class. Keys by family:
//   c6: extent;  c5: extent, points [[i, j], ...];  c8/c9: extent, holes
//   ("all" or [[i, j, "up"|"down"], ...]);  c4/c7/c2: tiling (tiling
//   document), rows + width (strip word, c4/c7), or pattern ("snub" for c4,
//   "kagome"/"dimer" for c2) + extent;  c1: orientations + width;
//   c3: layers + width (family A) or offsets + width (family B).
ConstructionDescriptor parse_descriptor(std::string_view class_id, std::string_view text);

}  // namespace compack

#include "presets.hpp"

#include <algorithm>

#include "errors.hpp"

namespace compack {

const std::vector<Preset>& presets() {
  static const std::vector<Preset> table = {
      {"fig1", "c1", "flattened hexagons, all layers in one orientation"},
      {"fig2", "c2", "six-sided cells meeting corner to corner"},
      {"fig3", "c3", "large rows alternating with small-disc rows"},
      {"fig4", "c4", "square lattice with a small disc in every square"},
      {"fig5", "c5", "every third lattice disc replaced by a seven-disc flower"},
      {"fig6", "c6", "the unique packing, twelve small discs around each large"},
      {"fig7", "c7", "rhombus strips leaning one way"},
      {"fig8", "c8", "one small disc in every hole"},
      {"fig9", "c9", "three small discs in every hole"},
      {"fig10", "c4", "snub square tiling"},
      {"fig11", "c7", "rhombus and triangle strips"},
      {"fig12", "c2", "paired six-sided cells with triangle stars"},
      {"fig13", "c1", "flattened hexagon layers with mixed orientations"},
      {"fig14", "c3", "large rows with an irregular small-row pattern"},
      {"fig15", "c3", "large-disc layers with vertical small pairs, mixed offsets"},
  };
  return table;
}

const Preset& preset(std::string_view name) {
  const auto& all = presets();
  const auto it = std::find_if(all.begin(), all.end(), [&](const Preset& p) { return p.name == name; });
  if (it == all.end()) throw Error(ErrorCode::InvalidArgument, "unknown preset '" + std::string(name) + "'");
  return *it;
}

const Preset& figure_preset(std::string_view class_id) {
  radius_class(class_id);
  return preset("fig" + std::string(class_id.substr(1)));
}

ConstructionDescriptor preset_descriptor(const Preset& p) {
  const double r = radius_class(p.class_id).value;
  const std::string& n = p.name;
  if (n == "fig1") return C1Layers{"0", 3};
  if (n == "fig2") return C2FromTiling{hexagon6_kagome_tiling(r, 2)};
  if (n == "fig3") return C3LayersA{"LS", 3};
  if (n == "fig4") return C4FromTiling{strip_tiling("S", 3, r)};
  if (n == "fig5") {
    C5Substitute d;
    d.extent = 6;
    for (int j = 0; j < d.extent; ++j) {
      for (int i = 0; i < d.extent; ++i) {
        if ((i + 2 * j) % 3 == 0) d.points.push_back({i, j});
      }
    }
    return d;
  }
  if (n == "fig6") return C6Unique{2};
  if (n == "fig7") return C7FromTiling{strip_tiling("R", 3, r)};
  if (n == "fig8") return C8Fill{{3, true, {}}};
  if (n == "fig9") return C9Fill{{3, true, {}}};
  if (n == "fig10") return C4FromTiling{snub_square_tiling(2)};
  if (n == "fig11") return C7FromTiling{strip_tiling("RTLT", 3, r)};
  if (n == "fig12") return C2FromTiling{hexagon6_dimer_tiling(r, 1)};
  if (n == "fig13") return C1Layers{"0011", 3};
  if (n == "fig14") return C3LayersA{"LSLLS", 3};
  return C3LayersB{"0010", 3};
}

Patch generate_preset(std::string_view name) {
  const Preset& p = preset(name);
  return generate(radius_class(p.class_id), preset_descriptor(p));
}

}  // namespace compack

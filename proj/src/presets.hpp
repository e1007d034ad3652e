#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "generate.hpp"

namespace compack {

struct Preset {
  std::string name;  // "fig1" .. "fig15"
  std::string class_id;
  std::string summary;
};

const std::vector<Preset>& presets();

// Throws Error(InvalidArgument) for unknown names.
const Preset& preset(std::string_view name);

// The preset reproducing the main figure of a class ("fig<N>" for cN).
const Preset& figure_preset(std::string_view class_id);

ConstructionDescriptor preset_descriptor(const Preset& p);
Patch generate_preset(std::string_view name);

}  // namespace compack

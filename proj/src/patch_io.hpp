#pragma once

#include <string>
#include <string_view>

#include "model.hpp"
#include "tiling.hpp"

namespace compack {

// 17 significant digits, enough to round-trip any double.
std::string format_number(double v);

// Patch document:
//   {"radius_class": "c4", "r": ..., "periods": [[x, y], [x, y]],
//    "discs": [{"x": ..., "y": ..., "size": "large" | "small"}, ...]}
// "periods" is optional. Output is byte-stable for a given patch.
std::string serialize_patch(const Patch& p);

// Throws Error(Parse) with a line/column for malformed text or a field path
// for structural problems.
Patch parse_patch(std::string_view text);

// Tiling document:
//   {"vertices": [[x, y], ...], "periods": [[x, y], [x, y]],
//    "faces": [{"kind": "square", "vertices": [[index, da, db], ...]}, ...]}
// Aperiodic tilings may reference vertices by bare index.
std::string serialize_tiling(const Tiling& t);
Tiling parse_tiling(std::string_view text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

}  // namespace compack

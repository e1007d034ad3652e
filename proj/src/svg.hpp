#pragma once

#include <string>

#include "model.hpp"

namespace compack {

struct RenderOptions {
  bool edges = false;  // draw large-large tangency segments
  int repeat = 1;      // periodic patches are unrolled repeat x repeat times
};

// SVG 1.1 document. Circles are emitted in (y, x, size) order with fixed
// precision, so equal inputs give byte-identical output.
std::string render_svg(const Patch& p, const RenderOptions& opts = {});

}  // namespace compack

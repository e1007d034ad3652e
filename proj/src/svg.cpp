#include "svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <tuple>

#include "errors.hpp"

namespace compack {

namespace {

std::string fixed(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  // Avoid "-0.000000" so mirrored inputs do not differ by a sign.
  if (std::string(buf) == "-0.000000") return "0.000000";
  return buf;
}

}  // namespace

std::string render_svg(const Patch& p, const RenderOptions& opts) {
  if (opts.repeat < 1) throw Error(ErrorCode::InvalidArgument, "repeat must be positive");
  const Patch flat = p.periods ? unroll(p, opts.repeat, opts.repeat) : p;

  std::vector<Disc> discs = flat.discs;
  std::sort(discs.begin(), discs.end(), [](const Disc& a, const Disc& b) {
    return std::tie(a.center.y, a.center.x, a.size) < std::tie(b.center.y, b.center.x, b.size);
  });

  double lo_x = 0.0, lo_y = 0.0, hi_x = 0.0, hi_y = 0.0;
  for (std::size_t k = 0; k < discs.size(); ++k) {
    const double rad = flat.radius(discs[k]);
    const Vec2 c = discs[k].center;
    if (k == 0) {
      lo_x = c.x - rad, lo_y = c.y - rad, hi_x = c.x + rad, hi_y = c.y + rad;
    }
    lo_x = std::min(lo_x, c.x - rad);
    lo_y = std::min(lo_y, c.y - rad);
    hi_x = std::max(hi_x, c.x + rad);
    hi_y = std::max(hi_y, c.y + rad);
  }
  const double margin = 0.5;
  lo_x -= margin, lo_y -= margin, hi_x += margin, hi_y += margin;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << fixed(lo_x) << " "
      << fixed(-hi_y) << " " << fixed(hi_x - lo_x) << " " << fixed(hi_y - lo_y) << "\" width=\""
      << fixed((hi_x - lo_x) * 40.0) << "\" height=\"" << fixed((hi_y - lo_y) * 40.0) << "\">\n";
  out << "<title>" << p.class_id << " r=" << fixed(p.r) << "</title>\n";
  // y grows upward in patch coordinates; flip it for display.
  out << "<g transform=\"scale(1,-1)\">\n";
  for (const Disc& d : discs) {
    const bool large = d.size == Size::Large;
    out << "<circle cx=\"" << fixed(d.center.x) << "\" cy=\"" << fixed(d.center.y) << "\" r=\""
        << fixed(flat.radius(d)) << "\" fill=\"" << (large ? "#9ab8d8" : "#e8a25c")
        << "\" stroke=\"#333333\" stroke-width=\"0.02\"/>\n";
  }
  if (opts.edges) {
    std::vector<std::pair<Vec2, Vec2>> segs;
    const TangencyGraph g = build_tangency_graph(
        Patch{flat.class_id, flat.r, discs, std::nullopt});
    for (std::size_t i = 0; i < discs.size(); ++i) {
      if (discs[i].size != Size::Large) continue;
      for (const Neighbor& nb : g.adjacency[i]) {
        if (nb.index > i && discs[nb.index].size == Size::Large) {
          segs.push_back({discs[i].center, discs[nb.index].center});
        }
      }
    }
    for (const auto& [a, b] : segs) {
      out << "<line x1=\"" << fixed(a.x) << "\" y1=\"" << fixed(a.y) << "\" x2=\"" << fixed(b.x)
          << "\" y2=\"" << fixed(b.y) << "\" stroke=\"#202020\" stroke-width=\"0.06\"/>\n";
    }
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace compack

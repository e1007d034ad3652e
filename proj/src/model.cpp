#include "model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "errors.hpp"

namespace compack {

Vec2 Lattice::fractional(Vec2 v) const {
  const double det = cross(a, b);
  return {cross(v, b) / det, cross(a, v) / det};
}

Vec2 Lattice::reduce(Vec2 v) const {
  const Vec2 f = fractional(v);
  const double fa = f.x - std::floor(f.x);
  const double fb = f.y - std::floor(f.y);
  return a * fa + b * fb;
}

bool Patch::has_both_sizes() const {
  return count(Size::Large) > 0 && count(Size::Small) > 0;
}

std::size_t Patch::count(Size s) const {
  return static_cast<std::size_t>(
      std::count_if(discs.begin(), discs.end(), [s](const Disc& d) { return d.size == s; }));
}

void validate_patch(const Patch& p) {
  if (!(p.r > 0.0 && p.r < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "patch radius r must lie in (0, 1)");
  }
  for (std::size_t i = 0; i < p.discs.size(); ++i) {
    const Vec2 c = p.discs[i].center;
    if (!std::isfinite(c.x) || !std::isfinite(c.y)) {
      throw Error(ErrorCode::InvalidArgument, "disc " + std::to_string(i) + " has a non-finite center");
    }
  }
  if (p.periods) {
    const Lattice& L = *p.periods;
    if (std::abs(cross(L.a, L.b)) < 1e-12) {
      throw Error(ErrorCode::InvalidArgument, "period vectors are linearly dependent");
    }
    if (norm(L.a) <= kMinPeriod || norm(L.b) <= kMinPeriod) {
      throw Error(ErrorCode::InvalidArgument, "period vectors must be longer than 4");
    }
  }
}

void for_each_close_pair(const Patch& p, double slack,
                         const std::function<void(std::size_t, std::size_t, Offset, double)>& fn) {
  const std::size_t n = p.discs.size();
  if (!p.periods) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double reach = p.radius(p.discs[i]) + p.radius(p.discs[j]) + slack;
        const Vec2 d = p.discs[j].center - p.discs[i].center;
        if (std::abs(d.x) > reach || std::abs(d.y) > reach) continue;
        const double dist = norm(d);
        if (dist < reach) fn(i, j, Offset{}, dist);
      }
    }
    return;
  }
  const Lattice& L = *p.periods;
  const double det = cross(L.a, L.b);
  // Rows of the inverse basis bound how far a short vector reaches in
  // fractional coordinates.
  const double inv_a = norm(L.b) / std::abs(det);
  const double inv_b = norm(L.a) / std::abs(det);
  const double max_reach = 2.0 + slack;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double reach = p.radius(p.discs[i]) + p.radius(p.discs[j]) + slack;
      const Vec2 base = p.discs[j].center - p.discs[i].center;
      const Vec2 f = L.fractional(base);
      const int a_lo = static_cast<int>(std::floor(-f.x - max_reach * inv_a));
      const int a_hi = static_cast<int>(std::ceil(-f.x + max_reach * inv_a));
      const int b_lo = static_cast<int>(std::floor(-f.y - max_reach * inv_b));
      const int b_hi = static_cast<int>(std::ceil(-f.y + max_reach * inv_b));
      for (int da = a_lo; da <= a_hi; ++da) {
        for (int db = b_lo; db <= b_hi; ++db) {
          const Offset off{da, db};
          if (i == j && !(off > Offset{})) continue;
          const Vec2 d = base + L.translate(off);
          if (std::abs(d.x) > reach || std::abs(d.y) > reach) continue;
          const double dist = norm(d);
          if (dist < reach) fn(i, j, off, dist);
        }
      }
    }
  }
}

bool tangent(double dist, double radius_sum) {
  return std::abs(dist - radius_sum) <= kTangencyTol * radius_sum;
}

bool overlapping(double dist, double radius_sum) {
  return dist < radius_sum - kTangencyTol * radius_sum;
}

Vec2 image_center(const Patch& p, const Neighbor& n) {
  Vec2 c = p.discs[n.index].center;
  if (p.periods) c += p.periods->translate(n.offset);
  return c;
}

TangencyGraph build_tangency_graph(const Patch& p) {
  validate_patch(p);
  TangencyGraph g;
  g.adjacency.resize(p.discs.size());
  for_each_close_pair(p, 1e-6, [&](std::size_t i, std::size_t j, Offset off, double dist) {
    const double sum = p.radius(p.discs[i]) + p.radius(p.discs[j]);
    if (overlapping(dist, sum)) {
      std::ostringstream msg;
      msg << "discs " << i << " and " << j << " overlap (distance " << dist << ", radius sum "
          << sum << ")";
      throw Error(ErrorCode::Overlap, msg.str());
    }
    if (!tangent(dist, sum)) return;
    g.adjacency[i].push_back({j, off});
    g.adjacency[j].push_back({i, -off});
  });
  for (std::size_t i = 0; i < g.adjacency.size(); ++i) {
    const Vec2 c = p.discs[i].center;
    auto& nbrs = g.adjacency[i];
    std::sort(nbrs.begin(), nbrs.end(), [&](const Neighbor& x, const Neighbor& y) {
      const Vec2 dx = image_center(p, x) - c;
      const Vec2 dy = image_center(p, y) - c;
      const double ax = std::atan2(dx.y, dx.x);
      const double ay = std::atan2(dy.y, dy.x);
      if (ax != ay) return ax < ay;
      return x < y;
    });
  }
  return g;
}

namespace {

// Angle at the vertex opposite side `c` in a triangle with sides a, b, c.
double law_of_cosines(double a, double b, double c) {
  const double cosv = std::clamp((a * a + b * b - c * c) / (2.0 * a * b), -1.0, 1.0);
  return std::acos(cosv);
}

}  // namespace

CoronaResult corona_of(const Patch& p, const TangencyGraph& g, std::size_t disc_index) {
  CoronaResult out;
  const auto& nbrs = g.adjacency.at(disc_index);
  const Disc& self = p.discs[disc_index];
  const double r0 = p.radius(self);
  if (nbrs.size() < 3) {
    out.reason = "only " + std::to_string(nbrs.size()) + " tangent neighbors";
    return out;
  }
  std::string word;
  double total = 0.0;
  for (std::size_t k = 0; k < nbrs.size(); ++k) {
    const Neighbor& u = nbrs[k];
    const Neighbor& v = nbrs[(k + 1) % nbrs.size()];
    const Disc& du = p.discs[u.index];
    const Disc& dv = p.discs[v.index];
    const double ru = p.radius(du);
    const double rv = p.radius(dv);
    const double gap = distance(image_center(p, u), image_center(p, v));
    if (!tangent(gap, ru + rv)) {
      out.reason = "neighbors " + std::to_string(u.index) + " and " + std::to_string(v.index) +
                   " are not tangent";
      return out;
    }
    total += law_of_cosines(r0 + ru, r0 + rv, ru + rv);
    word.push_back(to_char(du.size));
  }
  out.closure_error = std::abs(total - kTwoPi);
  if (out.closure_error > kClosureTol) {
    out.reason = "angles do not close to 2*pi";
    return out;
  }
  out.corona = Corona{self.size, canonicalize(word)};
  return out;
}

Patch unroll(const Patch& p, int na, int nb) {
  if (!p.periods) throw Error(ErrorCode::Aperiodic, "cannot unroll an aperiodic patch");
  if (na < 1 || nb < 1) throw Error(ErrorCode::InvalidArgument, "unroll counts must be positive");
  Patch out;
  out.class_id = p.class_id;
  out.r = p.r;
  for (int j = 0; j < nb; ++j) {
    for (int i = 0; i < na; ++i) {
      const Vec2 shift = p.periods->translate({i, j});
      for (const Disc& d : p.discs) out.discs.push_back({d.center + shift, d.size});
    }
  }
  return out;
}

}  // namespace compack

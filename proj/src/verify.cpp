#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <sstream>

#include "errors.hpp"

namespace compack {

const char* disc_status_name(DiscStatus s) noexcept {
  switch (s) {
    case DiscStatus::Compact: return "compact";
    case DiscStatus::Boundary: return "boundary";
    case DiscStatus::Violating: return "violating";
  }
  return "?";
}

std::vector<OverlapFinding> check_overlaps(const Patch& p) {
  validate_patch(p);
  std::vector<OverlapFinding> out;
  for_each_close_pair(p, 0.0, [&](std::size_t i, std::size_t j, Offset off, double dist) {
    const double sum = p.radius(p.discs[i]) + p.radius(p.discs[j]);
    if (overlapping(dist, sum)) out.push_back({i, j, off, sum - dist});
  });
  return out;
}

namespace {

std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Vec2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Vec2& p : pts) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
    while (k >= lower && cross(hull[k - 1] - hull[k - 2], *it - hull[k - 2]) <= 0) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  return hull;
}

double segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 ab = b - a;
  const double t = std::clamp(dot(p - a, ab) / dot(ab, ab), 0.0, 1.0);
  return distance(p, a + ab * t);
}

// Distance from p to the hull frontier; zero for degenerate hulls.
double depth_inside(Vec2 p, const std::vector<Vec2>& hull) {
  if (hull.size() < 3) return 0.0;
  double best = INFINITY;
  for (std::size_t k = 0; k < hull.size(); ++k) {
    best = std::min(best, segment_distance(p, hull[k], hull[(k + 1) % hull.size()]));
  }
  return best;
}

const CoronaSet* cached_filtered_set(const std::string& class_id) {
  static std::mutex mu;
  static std::map<std::string, CoronaSet> cache;
  const auto& classes = radius_classes();
  const auto it = std::find_if(classes.begin(), classes.end(),
                               [&](const RadiusClass& rc) { return rc.id == class_id; });
  if (it == classes.end()) return nullptr;
  std::lock_guard<std::mutex> lock(mu);
  auto found = cache.find(class_id);
  if (found == cache.end()) found = cache.emplace(class_id, filtered_corona_set(*it)).first;
  return &found->second;
}

}  // namespace

CompactReport check_compact(const Patch& p) {
  const TangencyGraph g = build_tangency_graph(p);
  std::vector<Vec2> hull;
  if (!p.periods) {
    std::vector<Vec2> centers;
    for (const Disc& d : p.discs) centers.push_back(d.center);
    hull = convex_hull(std::move(centers));
  }
  CompactReport rep;
  for (std::size_t i = 0; i < p.discs.size(); ++i) {
    DiscFinding f;
    f.index = i;
    CoronaResult c = corona_of(p, g, i);
    if (c.corona) {
      f.status = DiscStatus::Compact;
      f.corona = std::move(c.corona);
      ++rep.compact;
    } else {
      f.reason = c.reason;
      const double reach = p.radius(p.discs[i]) + 2.0 + 2.0 * p.r;
      if (!p.periods && depth_inside(p.discs[i].center, hull) < reach) {
        f.status = DiscStatus::Boundary;
        ++rep.boundary;
      } else {
        f.status = DiscStatus::Violating;
        ++rep.violating;
      }
    }
    rep.discs.push_back(std::move(f));
  }
  return rep;
}

std::vector<MembershipFinding> check_corona_membership(const CompactReport& report,
                                                       const CoronaSet& allowed) {
  std::vector<MembershipFinding> out;
  for (const DiscFinding& f : report.discs) {
    if (f.corona && !allowed.contains(*f.corona)) out.push_back({f.index, *f.corona});
  }
  return out;
}

double density(const Patch& p) {
  if (!p.periods) throw Error(ErrorCode::Aperiodic, "density needs a periodic patch");
  validate_patch(p);
  const Lattice& L = *p.periods;
  std::vector<std::pair<Vec2, Size>> orbits;
  double area = 0.0;
  for (const Disc& d : p.discs) {
    const Vec2 q = L.reduce(d.center);
    const bool seen = std::any_of(orbits.begin(), orbits.end(), [&](const auto& o) {
      if (o.second != d.size) return false;
      const Vec2 f = L.fractional(q - o.first);
      const Vec2 res = (q - o.first) - L.translate({static_cast<int>(std::lround(f.x)),
                                                    static_cast<int>(std::lround(f.y))});
      return norm(res) < 1e-9;
    });
    if (seen) continue;
    orbits.push_back({q, d.size});
    const double rad = p.radius(d);
    area += kPi * rad * rad;
  }
  return area / L.area();
}

std::size_t VerifyReport::violations() const {
  std::size_t n = overlaps.size() + membership.size() + (radius_mismatch ? 1 : 0);
  if (compact) n += compact->violating;
  return n;
}

VerifyReport verify_patch(const Patch& p) {
  VerifyReport rep;
  rep.disc_count = p.discs.size();
  rep.both_sizes = p.has_both_sizes();
  if (!rep.both_sizes) rep.notes.push_back("both disc sizes must be present for a mixed packing");
  rep.overlaps = check_overlaps(p);
  if (!rep.overlaps.empty()) {
    rep.notes.push_back("compactness skipped: overlaps present");
    return rep;
  }
  rep.compact = check_compact(p);
  const CoronaSet* allowed = cached_filtered_set(p.class_id);
  if (!allowed) {
    rep.notes.push_back("membership skipped: '" + p.class_id + "' is not a radius class");
    return rep;
  }
  if (std::abs(allowed->r - p.r) > 1e-9) {
    rep.radius_mismatch = true;
    return rep;
  }
  rep.membership_checked = true;
  rep.membership = check_corona_membership(*rep.compact, *allowed);
  return rep;
}

std::string format_report(const VerifyReport& r) {
  std::ostringstream out;
  char buf[64];
  for (const OverlapFinding& f : r.overlaps) {
    std::snprintf(buf, sizeof buf, "%.3e", f.depth);
    out << "overlap " << f.i << " " << f.j << " offset " << f.offset.a << " " << f.offset.b
        << " depth " << buf << "\n";
  }
  if (r.compact) {
    for (const DiscFinding& f : r.compact->discs) {
      if (f.status == DiscStatus::Violating) out << "violating " << f.index << " " << f.reason << "\n";
    }
  }
  for (const MembershipFinding& f : r.membership) {
    out << "not-allowed " << f.index << " " << to_string(f.corona) << "\n";
  }
  if (r.radius_mismatch) out << "radius-mismatch r does not match the named class\n";
  for (const std::string& n : r.notes) out << "note " << n << "\n";
  out << "summary\n";
  out << "  discs " << r.disc_count << "\n";
  out << "  overlaps " << r.overlaps.size() << "\n";
  out << "  compact " << (r.compact ? r.compact->compact : 0) << "\n";
  out << "  boundary " << (r.compact ? r.compact->boundary : 0) << "\n";
  out << "  violating " << (r.compact ? r.compact->violating : 0) << "\n";
  out << "  membership " << (r.membership_checked ? std::to_string(r.membership.size()) : "skipped")
      << "\n";
  out << "  both_sizes " << (r.both_sizes ? "yes" : "no") << "\n";
  out << "  status " << (r.ok() ? "ok" : "fail") << "\n";
  return out.str();
}

}  // namespace compack

#include "tiling.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "errors.hpp"

namespace compack {

const char* face_kind_name(FaceKind k) noexcept {
  switch (k) {
    case FaceKind::Triangle: return "triangle";
    case FaceKind::Square: return "square";
    case FaceKind::Rhombus: return "rhombus";
    case FaceKind::Hexagon6: return "hexagon6";
  }
  return "?";
}

FaceKind face_kind_from_name(std::string_view name) {
  for (FaceKind k : {FaceKind::Triangle, FaceKind::Square, FaceKind::Rhombus, FaceKind::Hexagon6}) {
    if (name == face_kind_name(k)) return k;
  }
  throw Error(ErrorCode::Parse, "unknown face kind '" + std::string(name) + "'");
}

Vec2 Tiling::position(const VertexRef& v) const {
  Vec2 p = vertices.at(v.index);
  if (periods) p += periods->translate(v.offset);
  return p;
}

std::vector<Vec2> Tiling::face_points(const Face& f) const {
  std::vector<Vec2> pts;
  pts.reserve(f.vertices.size());
  for (const VertexRef& v : f.vertices) pts.push_back(position(v));
  return pts;
}

std::size_t Tiling::count(FaceKind k) const {
  return static_cast<std::size_t>(
      std::count_if(faces.begin(), faces.end(), [k](const Face& f) { return f.kind == k; }));
}

double rhombus_acute_angle(double r) { return 2.0 * std::acos((1.0 + 2.0 * r) / 2.0); }

namespace {

struct Hexagon6Radii {
  double double_corner;  // distance from the cell center to corners touching two cluster discs
  double single_corner;
};

Hexagon6Radii hexagon6_radii(double r) {
  const double rho = 2.0 * r / std::sqrt(3.0);  // cluster disc centers from the cell center
  const double c = rho * rho - (1.0 + r) * (1.0 + r);
  return {(rho + std::sqrt(rho * rho - 4.0 * c)) / 2.0, rho + 1.0 + r};
}

}  // namespace

std::array<Vec2, 6> hexagon6_reference(double r) {
  const Hexagon6Radii h = hexagon6_radii(r);
  std::array<Vec2, 6> out;
  for (int s = 0; s < 6; ++s) {
    const double angle = kPi / 6.0 + s * kPi / 3.0;
    out[static_cast<std::size_t>(s)] = polar(s % 2 == 0 ? h.double_corner : h.single_corner, angle);
  }
  return out;
}

std::array<double, 2> hexagon6_angles(double r) {
  const auto ref = hexagon6_reference(r);
  const auto ang = interior_angles(std::vector<Vec2>(ref.begin(), ref.end()));
  return {ang[0], ang[1]};
}

std::vector<double> interior_angles(const std::vector<Vec2>& pts) {
  const std::size_t n = pts.size();
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Vec2 in = pts[k] - pts[(k + n - 1) % n];
    const Vec2 outv = pts[(k + 1) % n] - pts[k];
    const double turn = std::atan2(cross(in, outv), dot(in, outv));
    out[k] = kPi - turn;
  }
  return out;
}

double signed_area(const std::vector<Vec2>& pts) {
  double acc = 0.0;
  for (std::size_t k = 0; k < pts.size(); ++k) acc += cross(pts[k], pts[(k + 1) % pts.size()]);
  return 0.5 * acc;
}

namespace {

bool near(double a, double b, double tol = kTilingTol) { return std::abs(a - b) <= tol; }

bool sides_are_two(const std::vector<Vec2>& pts) {
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (!near(distance(pts[k], pts[(k + 1) % pts.size()]), kEdgeLength, kTilingTol * kEdgeLength)) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::optional<FaceKind> classify_polygon(const std::vector<Vec2>& pts) {
  if (pts.size() < 3 || !sides_are_two(pts) || signed_area(pts) <= 0.0) return std::nullopt;
  const auto ang = interior_angles(pts);
  if (pts.size() == 3) return FaceKind::Triangle;
  if (pts.size() == 4) {
    const bool right = std::all_of(ang.begin(), ang.end(), [](double a) { return near(a, kPi / 2); });
    if (right) return FaceKind::Square;
    if (near(ang[0], ang[2]) && near(ang[1], ang[3]) && ang[0] < kPi && ang[1] < kPi) {
      return FaceKind::Rhombus;
    }
    return std::nullopt;
  }
  if (pts.size() == 6) return FaceKind::Hexagon6;
  return std::nullopt;
}

std::vector<FaceKind> allowed_face_kinds(std::string_view class_id) {
  if (class_id == "c4") return {FaceKind::Triangle, FaceKind::Square};
  if (class_id == "c7") return {FaceKind::Triangle, FaceKind::Rhombus};
  if (class_id == "c2") return {FaceKind::Triangle, FaceKind::Hexagon6};
  throw Error(ErrorCode::DescriptorMismatch,
              "class " + std::string(class_id) + " has no tiling correspondence (expected c2, c4 or c7)");
}

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidTiling, what); }

void check_face_shape(const std::vector<Vec2>& pts, FaceKind kind, double r, std::size_t idx) {
  const std::string where = "face " + std::to_string(idx) + " (" + face_kind_name(kind) + ")";
  if (!sides_are_two(pts)) invalid(where + ": every edge must have length 2");
  if (signed_area(pts) <= 0.0) invalid(where + ": vertices must be counterclockwise");
  const auto ang = interior_angles(pts);
  switch (kind) {
    case FaceKind::Triangle:
      if (pts.size() != 3) invalid(where + ": needs 3 vertices");
      for (double a : ang) {
        if (!near(a, kThirdPi)) invalid(where + ": triangle must be equilateral");
      }
      break;
    case FaceKind::Square:
      if (pts.size() != 4) invalid(where + ": needs 4 vertices");
      for (double a : ang) {
        if (!near(a, kPi / 2)) invalid(where + ": square corners must be right angles");
      }
      break;
    case FaceKind::Rhombus: {
      if (pts.size() != 4) invalid(where + ": needs 4 vertices");
      const double acute = rhombus_acute_angle(r);
      const bool even_acute = near(ang[0], acute) && near(ang[2], acute) &&
                              near(ang[1], kPi - acute) && near(ang[3], kPi - acute);
      const bool odd_acute = near(ang[1], acute) && near(ang[3], acute) &&
                             near(ang[0], kPi - acute) && near(ang[2], kPi - acute);
      if (!even_acute && !odd_acute) invalid(where + ": rhombus angles do not match the class");
      break;
    }
    case FaceKind::Hexagon6: {
      if (pts.size() != 6) invalid(where + ": needs 6 vertices");
      const auto ref = hexagon6_angles(r);
      bool ok = false;
      for (int parity = 0; parity < 2 && !ok; ++parity) {
        ok = true;
        for (std::size_t k = 0; k < 6; ++k) {
          if (!near(ang[k], ref[(k + static_cast<std::size_t>(parity)) % 2])) ok = false;
        }
      }
      if (!ok) invalid(where + ": six-sided cell angles do not match the class");
      break;
    }
  }
}

}  // namespace

void validate_tiling(const Tiling& t, std::string_view class_id, double r) {
  const auto allowed = allowed_face_kinds(class_id);
  if (t.faces.empty()) invalid("tiling has no faces");
  if (t.periods) {
    if (std::abs(cross(t.periods->a, t.periods->b)) < 1e-12) invalid("period vectors are dependent");
    if (norm(t.periods->a) <= kMinPeriod || norm(t.periods->b) <= kMinPeriod) {
      invalid("period vectors must be longer than 4");
    }
  }
  std::vector<double> angle_sum(t.vertices.size(), 0.0);
  double area = 0.0;
  for (std::size_t idx = 0; idx < t.faces.size(); ++idx) {
    const Face& f = t.faces[idx];
    if (std::find(allowed.begin(), allowed.end(), f.kind) == allowed.end()) {
      invalid("face " + std::to_string(idx) + ": kind " + face_kind_name(f.kind) +
              " is not allowed for class " + std::string(class_id));
    }
    for (const VertexRef& v : f.vertices) {
      if (v.index >= t.vertices.size()) invalid("face " + std::to_string(idx) + " references a missing vertex");
      if (!t.periods && v.offset != Offset{}) {
        invalid("face " + std::to_string(idx) + " uses a lattice offset in an aperiodic tiling");
      }
    }
    const auto pts = t.face_points(f);
    check_face_shape(pts, f.kind, r, idx);
    const auto ang = interior_angles(pts);
    for (std::size_t k = 0; k < pts.size(); ++k) angle_sum[f.vertices[k].index] += ang[k];
    area += signed_area(pts);
  }
  for (std::size_t v = 0; v < angle_sum.size(); ++v) {
    const bool interior = near(angle_sum[v], kTwoPi, 1e-7);
    if (t.periods && !interior) {
      invalid("vertex " + std::to_string(v) + ": face angles sum to " + std::to_string(angle_sum[v]) +
              " instead of 2*pi");
    }
    if (angle_sum[v] > kTwoPi + 1e-7) {
      invalid("vertex " + std::to_string(v) + ": faces overlap around the vertex");
    }
  }
  if (t.periods && !near(area, t.periods->area(), 1e-6 * t.periods->area())) {
    invalid("faces do not cover the periodic cell exactly");
  }
}

std::vector<std::vector<VertexRef>> trace_faces(const std::vector<Vec2>& positions,
                                                const std::optional<Lattice>& periods,
                                                const std::vector<std::vector<Neighbor>>& adjacency) {
  auto pos = [&](const VertexRef& v) {
    Vec2 p = positions[v.index];
    if (periods) p += periods->translate(v.offset);
    return p;
  };
  std::size_t half_edges = 0;
  for (const auto& a : adjacency) half_edges += a.size();

  std::vector<std::vector<bool>> seen(adjacency.size());
  for (std::size_t u = 0; u < adjacency.size(); ++u) seen[u].assign(adjacency[u].size(), false);

  std::vector<std::vector<VertexRef>> faces;
  for (std::size_t u0 = 0; u0 < adjacency.size(); ++u0) {
    for (std::size_t k0 = 0; k0 < adjacency[u0].size(); ++k0) {
      if (seen[u0][k0]) continue;
      std::vector<VertexRef> cycle{{u0, Offset{}}};
      std::size_t u = u0, k = k0;
      Offset cum{};
      for (std::size_t steps = 0; steps <= half_edges; ++steps) {
        seen[u][k] = true;
        const Neighbor nb = adjacency[u][k];
        const std::size_t v = nb.index;
        const Offset cum_v{cum.a + nb.offset.a, cum.b + nb.offset.b};
        const auto& out = adjacency[v];
        const Neighbor back{u, -nb.offset};
        const auto it = std::find(out.begin(), out.end(), back);
        if (it == out.end()) throw Error(ErrorCode::Internal, "adjacency is not symmetric");
        const std::size_t idx = static_cast<std::size_t>(it - out.begin());
        const std::size_t next = (idx + out.size() - 1) % out.size();
        if (v == u0 && next == k0) break;
        cycle.push_back({v, cum_v});
        u = v;
        k = next;
        cum = cum_v;
      }
      std::vector<Vec2> pts;
      for (const VertexRef& ref : cycle) pts.push_back(pos(ref));
      if (cycle.size() >= 3 && signed_area(pts) > 1e-9) faces.push_back(std::move(cycle));
    }
  }
  return faces;
}

Tiling tiling_from_vertices(const std::vector<Vec2>& vertices, const std::optional<Lattice>& periods) {
  Patch scaffold;
  scaffold.class_id = "tiling";
  scaffold.r = 0.5;
  scaffold.periods = periods;
  for (const Vec2& v : vertices) scaffold.discs.push_back({v, Size::Large});
  const TangencyGraph g = build_tangency_graph(scaffold);

  Tiling t;
  t.vertices = vertices;
  t.periods = periods;
  for (auto& cycle : trace_faces(vertices, periods, g.adjacency)) {
    Face f;
    f.vertices = std::move(cycle);
    const auto kind = classify_polygon(t.face_points(f));
    if (!kind) {
      throw Error(ErrorCode::InvalidTiling,
                  "vertex set produces a " + std::to_string(f.vertices.size()) +
                      "-gon that is not a tiling face");
    }
    f.kind = *kind;
    t.faces.push_back(std::move(f));
  }
  return t;
}

namespace {

// Nearest lattice image of `d`, as a residual vector.
Vec2 lattice_residual(const Lattice& L, Vec2 d) {
  const Vec2 f = L.fractional(d);
  return d - L.translate({static_cast<int>(std::lround(f.x)), static_cast<int>(std::lround(f.y))});
}

std::vector<Vec2> dedupe_mod_lattice(const std::vector<Vec2>& pts, const Lattice& L) {
  std::vector<Vec2> out;
  for (const Vec2& p : pts) {
    const Vec2 q = L.reduce(p);
    const bool dup = std::any_of(out.begin(), out.end(), [&](const Vec2& o) {
      return norm(lattice_residual(L, q - o)) < 1e-7;
    });
    if (!dup) out.push_back(q);
  }
  return out;
}

// Copies one cell extent x extent times.
std::pair<std::vector<Vec2>, Lattice> replicate(const std::vector<Vec2>& cell, const Lattice& L, int extent) {
  std::vector<Vec2> out;
  for (int j = 0; j < extent; ++j) {
    for (int i = 0; i < extent; ++i) {
      for (const Vec2& p : cell) out.push_back(p + L.translate({i, j}));
    }
  }
  return {out, Lattice{L.a * extent, L.b * extent}};
}

void require_extent(int extent, int minimum) {
  if (extent < minimum) {
    throw Error(ErrorCode::InvalidArgument,
                "extent must be at least " + std::to_string(minimum) + " for this tiling");
  }
}

}  // namespace

Tiling strip_tiling(std::string_view strips, int width, double r) {
  if (strips.empty()) throw Error(ErrorCode::InvalidArgument, "strip word is empty");
  if (width < 3) throw Error(ErrorCode::InvalidArgument, "strip width must be at least 3");
  const bool needs_rhombus = strips.find_first_of("RL") != std::string_view::npos;
  const double phi = needs_rhombus ? rhombus_acute_angle(r) : 0.0;

  auto height = [&](char c) {
    switch (c) {
      case 'S': return 2.0;
      case 'T': return std::sqrt(3.0);
      case 'R':
      case 'L': return 2.0 * std::sin(phi);
    }
    throw Error(ErrorCode::InvalidArgument, std::string("unknown strip letter '") + c + "'");
  };
  auto shift = [&](char c) {
    switch (c) {
      case 'T': return 1.0;
      case 'R': return 2.0 * std::cos(phi);
      case 'L': return -2.0 * std::cos(phi);
      default: return 0.0;
    }
  };

  std::string word(strips);
  double total = 0.0;
  for (char c : word) total += height(c);
  const std::string unit = word;
  while (total <= kMinPeriod) {
    word += unit;
    for (char c : unit) total += height(c);
  }

  const std::size_t n = word.size();
  const std::size_t w = static_cast<std::size_t>(width);
  std::vector<Vec2> line_origin(n + 1);
  for (std::size_t s = 0; s < n; ++s) {
    line_origin[s + 1] = line_origin[s] + Vec2{shift(word[s]), height(word[s])};
  }

  Tiling t;
  t.periods = Lattice{{2.0 * width, 0.0}, line_origin[n]};
  for (std::size_t line = 0; line < n; ++line) {
    for (std::size_t k = 0; k < w; ++k) {
      t.vertices.push_back(line_origin[line] + Vec2{2.0 * static_cast<double>(k), 0.0});
    }
  }
  auto ref = [&](std::size_t line, std::size_t k) {
    return VertexRef{(line % n) * w + (k % w),
                     Offset{static_cast<int>(k / w), static_cast<int>(line / n)}};
  };
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t k = 0; k < w; ++k) {
      if (word[s] == 'T') {
        t.faces.push_back({FaceKind::Triangle, {ref(s, k), ref(s, k + 1), ref(s + 1, k)}});
        t.faces.push_back({FaceKind::Triangle, {ref(s, k + 1), ref(s + 1, k + 1), ref(s + 1, k)}});
      } else {
        const FaceKind kind = word[s] == 'S' ? FaceKind::Square : FaceKind::Rhombus;
        t.faces.push_back({kind, {ref(s, k), ref(s, k + 1), ref(s + 1, k + 1), ref(s + 1, k)}});
      }
    }
  }
  return t;
}

Tiling snub_square_tiling(int extent) {
  require_extent(extent, 2);
  const double a = std::sqrt(2.0) * (1.0 + std::sqrt(3.0));
  const double circum = std::sqrt(2.0);
  const Lattice cell{{a, 0.0}, {0.0, a}};
  std::vector<Vec2> pts;
  for (int k = 0; k < 4; ++k) {
    pts.push_back(polar(circum, kPi / 3.0 + k * kPi / 2.0));
    pts.push_back(Vec2{a / 2.0, a / 2.0} + polar(circum, kPi / 6.0 + k * kPi / 2.0));
  }
  auto [verts, lattice] = replicate(dedupe_mod_lattice(pts, cell), cell, extent);
  return tiling_from_vertices(verts, lattice);
}

Tiling hexagon6_kagome_tiling(double r, int extent) {
  require_extent(extent, 2);
  const auto hex = hexagon6_reference(r);
  // The double corner at 30 degrees meets the single corner at 210 degrees of
  // the neighboring cell.
  const Vec2 t1 = hex[0] - hex[3];
  const Lattice cell{t1, rotate(t1, 2.0 * kPi / 3.0)};
  auto [verts, lattice] =
      replicate(dedupe_mod_lattice(std::vector<Vec2>(hex.begin(), hex.end()), cell), cell, extent);
  return tiling_from_vertices(verts, lattice);
}

Tiling hexagon6_dimer_tiling(double r, int extent) {
  require_extent(extent, 1);
  const auto hex = hexagon6_reference(r);
  // Edges (0,1), (2,3), (4,5) join two cells; the others face triangle stars.
  std::array<Vec2, 3> mid;
  for (std::size_t e = 0; e < 3; ++e) mid[e] = (hex[2 * e] + hex[2 * e + 1]) * 0.5;
  const Lattice cell{(mid[1] - mid[0]) * 2.0, (mid[2] - mid[0]) * 2.0};
  std::vector<Vec2> pts(hex.begin(), hex.end());
  for (const Vec2& p : hex) pts.push_back(mid[0] * 2.0 - p);
  for (std::size_t e = 0; e < 3; ++e) {
    const Vec2 p = hex[2 * e + 1];
    const Vec2 q = hex[(2 * e + 2) % 6];
    const Vec2 outward = unit(Vec2{(q - p).y, -(q - p).x});
    pts.push_back((p + q) * 0.5 + outward * std::sqrt(3.0));
  }
  auto [verts, lattice] = replicate(dedupe_mod_lattice(pts, cell), cell, extent);
  return tiling_from_vertices(verts, lattice);
}

namespace {

struct Motion {
  double angle = 0.0;
  bool reflect = false;
  Vec2 shift;

  Vec2 linear(Vec2 p) const { return rotate(reflect ? Vec2{p.x, -p.y} : p, angle); }
  Vec2 apply(Vec2 p) const { return linear(p) + shift; }
};

Vec2 centroid(const std::vector<Vec2>& pts) {
  Vec2 c;
  for (const Vec2& p : pts) c += p;
  return c / static_cast<double>(pts.size());
}

bool same_point(const Tiling& b, Vec2 p, Vec2 q, double tol) {
  if (b.periods) return norm(lattice_residual(*b.periods, p - q)) < tol;
  return distance(p, q) < tol;
}

bool lattice_contains(const Lattice& L, Vec2 v, double tol) {
  return norm(lattice_residual(L, v)) < tol;
}

}  // namespace

bool tilings_congruent(const Tiling& a, const Tiling& b, double tol) {
  if (a.faces.size() != b.faces.size() || a.faces.empty()) return false;
  if (a.periods.has_value() != b.periods.has_value()) return false;
  for (FaceKind k : {FaceKind::Triangle, FaceKind::Square, FaceKind::Rhombus, FaceKind::Hexagon6}) {
    if (a.count(k) != b.count(k)) return false;
  }
  if (a.periods && !near(a.periods->area(), b.periods->area(), tol)) return false;

  std::vector<Vec2> b_centroids;
  for (const Face& f : b.faces) b_centroids.push_back(centroid(b.face_points(f)));
  std::vector<Vec2> a_centroids;
  for (const Face& f : a.faces) a_centroids.push_back(centroid(a.face_points(f)));

  const Face& fa = a.faces.front();
  const auto pa = a.face_points(fa);
  const std::size_t n = pa.size();

  for (const Face& fb : b.faces) {
    if (fb.kind != fa.kind || fb.vertices.size() != n) continue;
    const auto pb = b.face_points(fb);
    for (std::size_t s = 0; s < n; ++s) {
      for (bool reflect : {false, true}) {
        auto target = [&](std::size_t k) { return reflect ? pb[(s + n - k) % n] : pb[(s + k) % n]; };
        Motion m;
        m.reflect = reflect;
        const Vec2 src = m.linear(pa[1] - pa[0]);  // angle still 0 here
        const Vec2 dst = target(1) - target(0);
        m.angle = std::atan2(dst.y, dst.x) - std::atan2(src.y, src.x);
        m.shift = target(0) - m.linear(pa[0]);
        bool ok = true;
        for (std::size_t k = 0; k < n && ok; ++k) ok = distance(m.apply(pa[k]), target(k)) < tol;
        if (!ok) continue;
        if (a.periods) {
          ok = lattice_contains(*b.periods, m.linear(a.periods->a), tol) &&
               lattice_contains(*b.periods, m.linear(a.periods->b), tol);
          if (!ok) continue;
        }
        for (std::size_t fi = 0; fi < a.faces.size() && ok; ++fi) {
          const Vec2 c = m.apply(a_centroids[fi]);
          bool hit = false;
          for (std::size_t fj = 0; fj < b.faces.size() && !hit; ++fj) {
            hit = b.faces[fj].kind == a.faces[fi].kind &&
                  b.faces[fj].vertices.size() == a.faces[fi].vertices.size() &&
                  same_point(b, c, b_centroids[fj], tol);
          }
          ok = hit;
        }
        if (ok) return true;
      }
    }
  }
  return false;
}

}  // namespace compack

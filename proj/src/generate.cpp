#include "generate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include <json.hpp>

#include "errors.hpp"
#include "patch_io.hpp"
#include "verify.hpp"

namespace compack {

namespace {

const double kSqrt3 = std::sqrt(3.0);
const Vec2 kLatA{2.0, 0.0};
const Vec2 kLatB{1.0, std::sqrt(3.0)};

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Patch empty_patch(const RadiusClass& rc) {
  Patch p;
  p.class_id = rc.id;
  p.r = rc.value;
  return p;
}

void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) throw Error(code, what);
}

void require_extent(int extent, int minimum) {
  require(extent >= minimum, ErrorCode::InvalidArgument,
          "extent must be at least " + std::to_string(minimum));
}

void require_bits(const std::string& word, const char* what) {
  require(!word.empty(), ErrorCode::InvalidArgument, std::string(what) + " word is empty");
  for (char c : word) {
    require(c == '0' || c == '1', ErrorCode::InvalidArgument,
            std::string(what) + " word may only contain 0 and 1");
  }
}

Vec2 lattice_point(int i, int j) { return kLatA * i + kLatB * j; }

Lattice triangular_periods(int extent) { return {kLatA * extent, kLatB * extent}; }

// ---- c6 ------------------------------------------------------------------

Patch generate_c6(const RadiusClass& rc, const C6Unique& d) {
  require_extent(d.extent, 2);
  const double r = rc.value;
  // Large discs are not tangent to each other; each lattice edge carries a
  // tangent pair of small discs straddling its midpoint.
  const double spacing = 2.0 * std::sqrt(1.0 + 2.0 * r);
  const Vec2 a{spacing, 0.0};
  const Vec2 b = rotate(a, kThirdPi);
  Patch p = empty_patch(rc);
  for (int j = 0; j < d.extent; ++j) {
    for (int i = 0; i < d.extent; ++i) {
      const Vec2 origin = a * i + b * j;
      p.discs.push_back({origin, Size::Large});
      for (int e = 0; e < 3; ++e) {
        const Vec2 dir = polar(1.0, e * kThirdPi);
        const Vec2 mid = origin + dir * (spacing / 2.0);
        p.discs.push_back({mid + perp(dir) * r, Size::Small});
        p.discs.push_back({mid - perp(dir) * r, Size::Small});
      }
    }
  }
  p.periods = Lattice{a * d.extent, b * d.extent};
  return p;
}

// ---- c5 ------------------------------------------------------------------

Patch generate_c5(const RadiusClass& rc, const C5Substitute& d) {
  require_extent(d.extent, 3);
  const int n = d.extent;
  std::set<LatticePoint> chosen;
  for (const LatticePoint& q : d.points) {
    require(q.i >= 0 && q.i < n && q.j >= 0 && q.j < n, ErrorCode::InvalidArgument,
            "substituted point (" + std::to_string(q.i) + ", " + std::to_string(q.j) +
                ") lies outside the " + std::to_string(n) + "x" + std::to_string(n) + " cell");
    require(chosen.insert(q).second, ErrorCode::InvalidArgument,
            "substituted point (" + std::to_string(q.i) + ", " + std::to_string(q.j) + ") repeated");
  }
  static constexpr std::array<std::array<int, 2>, 3> kForward{{{1, 0}, {0, 1}, {1, -1}}};
  for (const LatticePoint& q : chosen) {
    for (const auto& s : kForward) {
      const LatticePoint nb{((q.i + s[0]) % n + n) % n, ((q.j + s[1]) % n + n) % n};
      require(!chosen.count(nb), ErrorCode::IndependentSet,
              "substituted points (" + std::to_string(q.i) + ", " + std::to_string(q.j) + ") and (" +
                  std::to_string(nb.i) + ", " + std::to_string(nb.j) + ") are adjacent");
    }
  }
  const double r = rc.value;
  Patch p = empty_patch(rc);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const Vec2 c = lattice_point(i, j);
      if (!chosen.count({i, j})) {
        p.discs.push_back({c, Size::Large});
        continue;
      }
      p.discs.push_back({c, Size::Small});
      for (int k = 0; k < 6; ++k) {
        p.discs.push_back({c + polar(2.0 * r, kPi / 6.0 + k * kThirdPi), Size::Small});
      }
    }
  }
  p.periods = triangular_periods(n);
  return p;
}

// ---- c8 / c9 -------------------------------------------------------------

std::vector<Hole> selected_holes(const HoleFill& d) {
  std::vector<Hole> out;
  if (d.all) {
    for (int j = 0; j < d.extent; ++j) {
      for (int i = 0; i < d.extent; ++i) {
        out.push_back({i, j, true});
        out.push_back({i, j, false});
      }
    }
    return out;
  }
  std::set<Hole> seen;
  for (const Hole& h : d.holes) {
    require(h.i >= 0 && h.i < d.extent && h.j >= 0 && h.j < d.extent, ErrorCode::InvalidArgument,
            "hole (" + std::to_string(h.i) + ", " + std::to_string(h.j) + ") lies outside the cell");
    require(seen.insert(h).second, ErrorCode::InvalidArgument,
            "hole (" + std::to_string(h.i) + ", " + std::to_string(h.j) + ") listed twice");
    out.push_back(h);
  }
  return out;
}

Vec2 hole_center(const Hole& h) {
  const Vec2 base = lattice_point(h.i, h.j);
  return h.up ? base + Vec2{1.0, 1.0 / kSqrt3} : base + Vec2{2.0, 2.0 / kSqrt3};
}

Patch hole_fill(const RadiusClass& rc, const HoleFill& d, bool clusters) {
  require_extent(d.extent, 3);
  const auto holes = selected_holes(d);
  Patch p = empty_patch(rc);
  for (int j = 0; j < d.extent; ++j) {
    for (int i = 0; i < d.extent; ++i) p.discs.push_back({lattice_point(i, j), Size::Large});
  }
  const double rho = 2.0 * rc.value / kSqrt3;
  for (const Hole& h : holes) {
    const Vec2 c = hole_center(h);
    if (!clusters) {
      p.discs.push_back({c, Size::Small});
      continue;
    }
    // Each cluster disc points at an edge midpoint of its hole.
    const double start = h.up ? -kPi / 2.0 : kPi / 2.0;
    for (int k = 0; k < 3; ++k) {
      p.discs.push_back({c + polar(rho, start + k * 2.0 * kThirdPi), Size::Small});
    }
  }
  p.periods = triangular_periods(d.extent);
  return p;
}

// ---- c1 ------------------------------------------------------------------

using Hexagon = std::array<Vec2, 6>;

// Slots holding theta2 for an orientation bit.
std::array<int, 2> c1_wide_slots(char bit) { return bit == '0' ? std::array<int, 2>{0, 3} : std::array<int, 2>{2, 5}; }

Hexagon develop_hexagon(double r, char bit, int start, Vec2 p0, Vec2 p1) {
  const auto wide = c1_wide_slots(bit);
  auto angle = [&](int slot) {
    return slot == wide[0] || slot == wide[1] ? c1_theta2(r) : c1_theta1(r);
  };
  Hexagon h;
  h[static_cast<std::size_t>(start)] = p0;
  h[static_cast<std::size_t>((start + 1) % 6)] = p1;
  Vec2 dir = unit(p1 - p0);
  for (int step = 1; step < 5; ++step) {
    const int cur = (start + step) % 6;
    dir = rotate(dir, kPi - angle(cur));
    h[static_cast<std::size_t>((cur + 1) % 6)] = h[static_cast<std::size_t>(cur)] + dir * kEdgeLength;
  }
  return h;
}

void require_close(Vec2 a, Vec2 b, const char* what) {
  if (distance(a, b) > 1e-9) throw Error(ErrorCode::Internal, std::string("c1 layers: ") + what);
}

Patch generate_c1(const RadiusClass& rc, const C1Layers& d) {
  require_bits(d.orientations, "orientation");
  require(d.width >= 2, ErrorCode::InvalidArgument, "width must be at least 2");
  const double r = rc.value;
  std::string word = d.orientations;
  const int n = d.width;

  // Hexagon (i, j) has corners U(i,j), D(i-1,j), U(i-1,j), D(i-1,j-1),
  // U(i,j-1), D(i,j-1) in counterclockwise slot order; row j is one layer.
  std::vector<std::vector<Hexagon>> grid;
  Vec2 t2;
  for (;;) {
    const int m = static_cast<int>(word.size());
    grid.assign(static_cast<std::size_t>(m + 1), std::vector<Hexagon>(static_cast<std::size_t>(n + 1)));
    for (int j = 0; j <= m; ++j) {
      const char bit = word[static_cast<std::size_t>(j % m)];
      auto& row = grid[static_cast<std::size_t>(j)];
      if (j == 0) {
        row[0] = develop_hexagon(r, bit, 0, {0.0, 0.0}, polar(kEdgeLength, 5.0 * kPi / 6.0));
      } else {
        const Hexagon& below = grid[static_cast<std::size_t>(j - 1)][0];
        row[0] = develop_hexagon(r, bit, 3, below[1], below[0]);
      }
      for (int i = 1; i <= n; ++i) {
        const Hexagon& left = row[static_cast<std::size_t>(i - 1)];
        row[static_cast<std::size_t>(i)] = develop_hexagon(r, bit, 2, left[0], left[5]);
        if (j > 0) {
          const Hexagon& below = grid[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i)];
          require_close(row[static_cast<std::size_t>(i)][3], below[1], "rows do not match");
          require_close(row[static_cast<std::size_t>(i)][4], below[0], "rows do not match");
        }
      }
    }
    t2 = grid[static_cast<std::size_t>(m)][0][0] - grid[0][0][0];
    if (norm(t2) > kMinPeriod) break;
    word += d.orientations;
  }
  const int m = static_cast<int>(word.size());
  const Vec2 t1 = grid[0][static_cast<std::size_t>(n)][0] - grid[0][0][0];
  for (int j = 0; j <= m; ++j) {
    const auto& row = grid[static_cast<std::size_t>(j)];
    require_close(row[static_cast<std::size_t>(n)][0] - row[0][0], t1, "rows have different widths");
  }

  Patch p = empty_patch(rc);
  for (int j = 0; j < m; ++j) {
    const char bit = word[static_cast<std::size_t>(j)];
    for (int i = 0; i < n; ++i) {
      const Hexagon& h = grid[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      p.discs.push_back({h[0], Size::Large});
      p.discs.push_back({grid[static_cast<std::size_t>(j + 1)][static_cast<std::size_t>(i)][5], Size::Large});
      const auto wide = c1_wide_slots(bit);
      const Vec2 a = h[static_cast<std::size_t>(wide[0])];
      const Vec2 b = h[static_cast<std::size_t>(wide[1])];
      const Vec2 mid = (a + b) * 0.5;
      const Vec2 across = perp(unit(b - a)) * r;
      p.discs.push_back({mid + across, Size::Small});
      p.discs.push_back({mid - across, Size::Small});
    }
  }
  p.periods = Lattice{t1, t2};
  return p;
}

// ---- c3 ------------------------------------------------------------------

Patch generate_c3a(const RadiusClass& rc, const C3LayersA& d) {
  require(!d.layers.empty(), ErrorCode::InvalidArgument, "layer word is empty");
  for (char c : d.layers) {
    require(c == 'L' || c == 'S', ErrorCode::InvalidArgument, "layer word may only contain L and S");
  }
  require(!cyclic_contains(d.layers, "SS"), ErrorCode::AdjacentSmallLayers,
          "layer word '" + d.layers + "' has two adjacent small-disc layers");
  require(d.width >= 3, ErrorCode::InvalidArgument, "width must be at least 3");
  const double r = rc.value;
  const double lift = std::sqrt(r * r + 2.0 * r);  // small disc resting on two large discs

  auto height = [&](const std::string& w) {
    double y = 0.0;
    for (std::size_t t = 0; t < w.size(); ++t) {
      if (w[t] != 'L') continue;
      y += w[(t + 1) % w.size()] == 'S' ? 1.0 + r + lift : kSqrt3;
    }
    return y;
  };
  // Rotate so the word starts with a large layer.
  std::string word = d.layers;
  std::rotate(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(word.find('L')), word.end());
  const std::string unit_word = word;
  while (height(word) <= kMinPeriod) word += unit_word;

  Patch p = empty_patch(rc);
  double y = 0.0;
  double ox = 0.0;
  for (std::size_t t = 0; t < word.size(); ++t) {
    if (word[t] != 'L') continue;
    for (int k = 0; k < d.width; ++k) p.discs.push_back({{ox + 2.0 * k, y}, Size::Large});
    if (word[(t + 1) % word.size()] == 'S') {
      for (int k = 0; k < d.width; ++k) {
        p.discs.push_back({{ox + 2.0 + 2.0 * k, y + 1.0 + r}, Size::Small});
        p.discs.push_back({{ox + 1.0 + 2.0 * k, y + lift}, Size::Small});
      }
      y += 1.0 + r + lift;
    } else {
      y += kSqrt3;
    }
    ox += 1.0;
  }
  p.periods = Lattice{{2.0 * d.width, 0.0}, {ox, y}};
  return p;
}

Patch generate_c3b(const RadiusClass& rc, const C3LayersB& d) {
  require_bits(d.offsets, "offset");
  require(d.width >= 2, ErrorCode::InvalidArgument, "width must be at least 2");
  const double r = rc.value;
  const double half = std::sqrt(1.0 + 2.0 * r);  // large disc to the pair between neighbors
  const double rise = 1.0 / r;                    // layer spacing
  const double slide2 = (1.0 + r) * (1.0 + r) - (rise - r) * (rise - r);
  if (slide2 < 0.0) throw Error(ErrorCode::Internal, "c3 layer geometry has no solution");
  const double slide = std::sqrt(slide2);

  std::string word = d.offsets;
  while (rise * static_cast<double>(word.size()) <= kMinPeriod) word += d.offsets;

  Patch p = empty_patch(rc);
  double ox = 0.0;
  for (std::size_t t = 0; t < word.size(); ++t) {
    const double y = rise * static_cast<double>(t);
    for (int k = 0; k < d.width; ++k) {
      const double x = ox + 2.0 * half * k;
      p.discs.push_back({{x, y}, Size::Large});
      p.discs.push_back({{x + half, y + r}, Size::Small});
      p.discs.push_back({{x + half, y - r}, Size::Small});
    }
    ox += word[t] == '0' ? half + slide : half - slide;
  }
  p.periods = Lattice{{2.0 * half * d.width, 0.0}, {ox, rise * static_cast<double>(word.size())}};
  return p;
}

}  // namespace

std::string descriptor_class(const ConstructionDescriptor& d) {
  return std::visit(overloaded{
                        [](const C6Unique&) { return std::string("c6"); },
                        [](const C5Substitute&) { return std::string("c5"); },
                        [](const C8Fill&) { return std::string("c8"); },
                        [](const C9Fill&) { return std::string("c9"); },
                        [](const C4FromTiling&) { return std::string("c4"); },
                        [](const C7FromTiling&) { return std::string("c7"); },
                        [](const C2FromTiling&) { return std::string("c2"); },
                        [](const C1Layers&) { return std::string("c1"); },
                        [](const C3LayersA&) { return std::string("c3"); },
                        [](const C3LayersB&) { return std::string("c3"); },
                    },
                    d);
}

double c1_theta1(double r) { return 2.0 * contact_angles(r).alpha_prime; }
double c1_theta2(double r) { return kTwoPi - 2.0 * c1_theta1(r); }

Patch generate(const RadiusClass& rc, const ConstructionDescriptor& d) {
  const std::string want = descriptor_class(d);
  require(want == rc.id, ErrorCode::DescriptorMismatch,
          "descriptor builds a " + want + " packing but class " + rc.id + " was requested");
  return std::visit(overloaded{
                        [&](const C6Unique& x) { return generate_c6(rc, x); },
                        [&](const C5Substitute& x) { return generate_c5(rc, x); },
                        [&](const C8Fill& x) { return hole_fill(rc, x, false); },
                        [&](const C9Fill& x) { return hole_fill(rc, x, true); },
                        [&](const C4FromTiling& x) { return tiling_to_packing(rc, x.tiling); },
                        [&](const C7FromTiling& x) { return tiling_to_packing(rc, x.tiling); },
                        [&](const C2FromTiling& x) { return tiling_to_packing(rc, x.tiling); },
                        [&](const C1Layers& x) { return generate_c1(rc, x); },
                        [&](const C3LayersA& x) { return generate_c3a(rc, x); },
                        [&](const C3LayersB& x) { return generate_c3b(rc, x); },
                    },
                    d);
}

Patch tiling_to_packing(const RadiusClass& rc, const Tiling& t) {
  validate_tiling(t, rc.id, rc.value);
  const double r = rc.value;
  Patch p = empty_patch(rc);
  p.periods = t.periods;
  for (const Vec2& v : t.vertices) p.discs.push_back({v, Size::Large});
  const auto hex_ref = hexagon6_angles(r);
  const double rho = 2.0 * r / kSqrt3;
  for (const Face& f : t.faces) {
    const auto pts = t.face_points(f);
    Vec2 c;
    for (const Vec2& q : pts) c += q;
    c = c / static_cast<double>(pts.size());
    switch (f.kind) {
      case FaceKind::Triangle:
        break;
      case FaceKind::Square:
        p.discs.push_back({c, Size::Small});
        break;
      case FaceKind::Rhombus: {
        const auto ang = interior_angles(pts);
        const std::size_t acute = ang[0] < kPi / 2 ? 0 : 1;
        const Vec2 axis = unit(pts[acute + 2] - pts[acute]);
        p.discs.push_back({c + axis * r, Size::Small});
        p.discs.push_back({c - axis * r, Size::Small});
        break;
      }
      case FaceKind::Hexagon6: {
        const auto ang = interior_angles(pts);
        std::vector<Vec2> single;
        for (std::size_t k = 0; k < 6; ++k) {
          if (std::abs(ang[k] - hex_ref[1]) < std::abs(ang[k] - hex_ref[0])) single.push_back(pts[k]);
        }
        if (single.size() != 3) throw Error(ErrorCode::InvalidTiling, "six-sided cell has wrong corners");
        const Vec2 center = (single[0] + single[1] + single[2]) / 3.0;
        for (const Vec2& q : single) p.discs.push_back({center + unit(q - center) * rho, Size::Small});
        break;
      }
    }
  }
  return p;
}

Tiling packing_to_tiling(const Patch& p) {
  allowed_face_kinds(p.class_id);
  if (!p.has_both_sizes()) {
    throw Error(ErrorCode::NonCompact, "packing must contain both large and small discs");
  }
  const auto overlaps = check_overlaps(p);
  if (!overlaps.empty()) {
    throw Error(ErrorCode::NonCompact, "discs " + std::to_string(overlaps[0].i) + " and " +
                                           std::to_string(overlaps[0].j) + " overlap");
  }
  const CompactReport rep = check_compact(p);
  if (rep.violating > 0) {
    throw Error(ErrorCode::NonCompact,
                std::to_string(rep.violating) + " discs do not have a closed corona");
  }
  std::vector<Vec2> larges;
  for (const Disc& d : p.discs) {
    if (d.size == Size::Large) larges.push_back(d.center);
  }
  Tiling t = tiling_from_vertices(larges, p.periods);
  validate_tiling(t, p.class_id, p.r);
  return t;
}

// ---- descriptor documents ---------------------------------------------------

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::Parse, "descriptor " + path + ": " + what);
}

void only_keys(const json& doc, std::initializer_list<const char*> keys) {
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    bool ok = false;
    for (const char* k : keys) ok = ok || key == k;
    if (!ok) bad(key, "field not used by this family");
  }
}

int int_field(const json& doc, const char* key, int fallback) {
  const auto it = doc.find(key);
  if (it == doc.end()) return fallback;
  if (!it->is_number_integer()) bad(key, "expected an integer");
  return it->get<int>();
}

std::string word_field(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) bad(key, "missing");
  if (!it->is_string()) bad(key, "expected a string");
  return it->get<std::string>();
}

int small_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) bad(path, "expected an integer");
  return v.get<int>();
}

HoleFill parse_holes(const json& doc) {
  only_keys(doc, {"extent", "holes"});
  HoleFill h;
  h.extent = int_field(doc, "extent", 3);
  const auto it = doc.find("holes");
  if (it == doc.end() || (it->is_string() && *it == "all")) return h;
  if (!it->is_array()) bad("holes", "expected \"all\" or a list of [i, j, \"up\"|\"down\"]");
  h.all = false;
  for (std::size_t k = 0; k < it->size(); ++k) {
    const std::string path = "holes[" + std::to_string(k) + "]";
    const json& e = (*it)[k];
    if (!e.is_array() || e.size() != 3) bad(path, "expected [i, j, \"up\"|\"down\"]");
    Hole hole{small_int(e[0], path + "[0]"), small_int(e[1], path + "[1]"), true};
    if (e[2] == "up") {
      hole.up = true;
    } else if (e[2] == "down") {
      hole.up = false;
    } else {
      bad(path + "[2]", "expected \"up\" or \"down\"");
    }
    h.holes.push_back(hole);
  }
  return h;
}

Tiling tiling_field(const json& doc, const RadiusClass& rc, bool strips,
                    std::initializer_list<const char*> patterns) {
  if (doc.contains("tiling")) {
    only_keys(doc, {"tiling"});
    try {
      return parse_tiling(doc["tiling"].dump());
    } catch (const Error& e) {
      bad("tiling", e.what());
    }
  }
  if (strips && doc.contains("rows")) {
    only_keys(doc, {"rows", "width"});
    return strip_tiling(word_field(doc, "rows"), int_field(doc, "width", 3), rc.value);
  }
  if (doc.contains("pattern")) {
    only_keys(doc, {"pattern", "extent"});
    const std::string pattern = word_field(doc, "pattern");
    const bool known = std::any_of(patterns.begin(), patterns.end(),
                                   [&](const char* p) { return pattern == p; });
    if (!known) bad("pattern", "unknown pattern '" + pattern + "' for class " + rc.id);
    if (pattern == "snub") return snub_square_tiling(int_field(doc, "extent", 2));
    if (pattern == "kagome") return hexagon6_kagome_tiling(rc.value, int_field(doc, "extent", 2));
    return hexagon6_dimer_tiling(rc.value, int_field(doc, "extent", 1));
  }
  bad("document", strips ? "expected \"tiling\", \"rows\" or \"pattern\""
                         : "expected \"tiling\" or \"pattern\"");
}

}  // namespace

ConstructionDescriptor parse_descriptor(std::string_view class_id, std::string_view text) {
  const RadiusClass& rc = radius_class(class_id);
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("descriptor: ") + e.what());
  }
  if (!doc.is_object()) bad("document", "expected an object");
  const std::string id = rc.id;
  if (id == "c6") {
    only_keys(doc, {"extent"});
    return C6Unique{int_field(doc, "extent", 2)};
  }
  if (id == "c5") {
    only_keys(doc, {"extent", "points"});
    C5Substitute d;
    d.extent = int_field(doc, "extent", 3);
    if (const auto it = doc.find("points"); it != doc.end()) {
      if (!it->is_array()) bad("points", "expected a list of [i, j]");
      for (std::size_t k = 0; k < it->size(); ++k) {
        const std::string path = "points[" + std::to_string(k) + "]";
        const json& e = (*it)[k];
        if (!e.is_array() || e.size() != 2) bad(path, "expected [i, j]");
        d.points.push_back({small_int(e[0], path + "[0]"), small_int(e[1], path + "[1]")});
      }
    }
    return d;
  }
  if (id == "c8") return C8Fill{parse_holes(doc)};
  if (id == "c9") return C9Fill{parse_holes(doc)};
  if (id == "c4") return C4FromTiling{tiling_field(doc, rc, true, {"snub"})};
  if (id == "c7") return C7FromTiling{tiling_field(doc, rc, true, {})};
  if (id == "c2") return C2FromTiling{tiling_field(doc, rc, false, {"kagome", "dimer"})};
  if (id == "c1") {
    only_keys(doc, {"orientations", "width"});
    return C1Layers{word_field(doc, "orientations"), int_field(doc, "width", 3)};
  }
  // c3
  if (doc.contains("layers")) {
    only_keys(doc, {"layers", "width"});
    return C3LayersA{word_field(doc, "layers"), int_field(doc, "width", 3)};
  }
  if (doc.contains("offsets")) {
    only_keys(doc, {"offsets", "width"});
    return C3LayersB{word_field(doc, "offsets"), int_field(doc, "width", 3)};
  }
  bad("document", "expected \"layers\" or \"offsets\"");
}

}  // namespace compack

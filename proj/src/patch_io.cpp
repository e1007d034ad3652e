#include "patch_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "errors.hpp"

namespace compack {

using nlohmann::json;

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string point(Vec2 p) { return "[" + format_number(p.x) + ", " + format_number(p.y) + "]"; }

void write_periods(std::ostringstream& out, const std::optional<Lattice>& periods) {
  if (!periods) return;
  out << "  \"periods\": [" << point(periods->a) << ", " << point(periods->b) << "],\n";
}

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::Parse, path + ": " + what);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t k = 0; k < stop; ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    // Strip the library prefix "[json.exception.parse_error.101] ".
    if (const auto pos = msg.find("] "); pos != std::string::npos) msg = msg.substr(pos + 2);
    // Drop the library's own position prefix in favor of ours.
    if (msg.rfind("parse error at", 0) == 0) {
      if (const auto pos = msg.find(": "); pos != std::string::npos) msg = msg.substr(pos + 2);
    }
    throw Error(ErrorCode::Parse,
                "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
  }
}

const json& field(const json& obj, const std::string& path, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

double number(const json& v, const std::string& path) {
  if (!v.is_number()) fail(path, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) fail(path, "expected a finite number");
  return d;
}

long long integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  return v.get<long long>();
}

Vec2 parse_point(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2) fail(path, "expected [x, y]");
  return {number(v[0], path + "[0]"), number(v[1], path + "[1]")};
}

void reject_unknown(const json& obj, const std::string& path, std::initializer_list<const char*> known) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) fail(path, "unknown field \"" + key + "\"");
  }
}

std::optional<Lattice> parse_periods(const json& doc) {
  const auto it = doc.find("periods");
  if (it == doc.end() || it->is_null()) return std::nullopt;
  if (!it->is_array()) fail("periods", "expected a list of two vectors");
  if (it->size() != 2) {
    fail("periods", "expected exactly two period vectors, got " + std::to_string(it->size()));
  }
  Lattice L{parse_point((*it)[0], "periods[0]"), parse_point((*it)[1], "periods[1]")};
  if (std::abs(cross(L.a, L.b)) < 1e-12) fail("periods", "period vectors are linearly dependent");
  return L;
}

}  // namespace

std::string serialize_patch(const Patch& p) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"radius_class\": " << json(p.class_id).dump() << ",\n";
  out << "  \"r\": " << format_number(p.r) << ",\n";
  write_periods(out, p.periods);
  out << "  \"discs\": [";
  for (std::size_t i = 0; i < p.discs.size(); ++i) {
    const Disc& d = p.discs[i];
    out << (i == 0 ? "\n" : ",\n") << "    {\"x\": " << format_number(d.center.x)
        << ", \"y\": " << format_number(d.center.y) << ", \"size\": \"" << size_name(d.size) << "\"}";
  }
  out << (p.discs.empty() ? "]\n" : "\n  ]\n");
  out << "}\n";
  return out.str();
}

Patch parse_patch(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) fail("document", "expected an object");
  reject_unknown(doc, "document", {"radius_class", "r", "periods", "discs"});
  Patch p;
  const json& cls = field(doc, "document", "radius_class");
  if (!cls.is_string()) fail("radius_class", "expected a string");
  p.class_id = cls.get<std::string>();
  p.r = number(field(doc, "document", "r"), "r");
  if (!(p.r > 0.0 && p.r < 1.0)) fail("r", "must lie in (0, 1)");
  p.periods = parse_periods(doc);
  const json& discs = field(doc, "document", "discs");
  if (!discs.is_array()) fail("discs", "expected a list");
  for (std::size_t i = 0; i < discs.size(); ++i) {
    const std::string path = "discs[" + std::to_string(i) + "]";
    const json& d = discs[i];
    if (!d.is_object()) fail(path, "expected an object");
    reject_unknown(d, path, {"x", "y", "size"});
    Disc disc;
    disc.center.x = number(field(d, path, "x"), path + ".x");
    disc.center.y = number(field(d, path, "y"), path + ".y");
    const json& s = field(d, path, "size");
    if (s == "large") {
      disc.size = Size::Large;
    } else if (s == "small") {
      disc.size = Size::Small;
    } else {
      fail(path + ".size", "expected \"large\" or \"small\"");
    }
    p.discs.push_back(disc);
  }
  return p;
}

std::string serialize_tiling(const Tiling& t) {
  std::ostringstream out;
  out << "{\n";
  write_periods(out, t.periods);
  out << "  \"vertices\": [";
  for (std::size_t i = 0; i < t.vertices.size(); ++i) {
    out << (i == 0 ? "\n    " : ",\n    ") << point(t.vertices[i]);
  }
  out << (t.vertices.empty() ? "],\n" : "\n  ],\n");
  out << "  \"faces\": [";
  for (std::size_t i = 0; i < t.faces.size(); ++i) {
    const Face& f = t.faces[i];
    out << (i == 0 ? "\n" : ",\n") << "    {\"kind\": \"" << face_kind_name(f.kind) << "\", \"vertices\": [";
    for (std::size_t k = 0; k < f.vertices.size(); ++k) {
      const VertexRef& v = f.vertices[k];
      if (k) out << ", ";
      if (t.periods) {
        out << "[" << v.index << ", " << v.offset.a << ", " << v.offset.b << "]";
      } else {
        out << v.index;
      }
    }
    out << "]}";
  }
  out << (t.faces.empty() ? "]\n" : "\n  ]\n");
  out << "}\n";
  return out.str();
}

Tiling parse_tiling(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) fail("document", "expected an object");
  reject_unknown(doc, "document", {"vertices", "faces", "periods"});
  Tiling t;
  t.periods = parse_periods(doc);
  const json& verts = field(doc, "document", "vertices");
  if (!verts.is_array()) fail("vertices", "expected a list");
  for (std::size_t i = 0; i < verts.size(); ++i) {
    t.vertices.push_back(parse_point(verts[i], "vertices[" + std::to_string(i) + "]"));
  }
  const json& faces = field(doc, "document", "faces");
  if (!faces.is_array()) fail("faces", "expected a list");
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const std::string path = "faces[" + std::to_string(i) + "]";
    const json& f = faces[i];
    if (!f.is_object()) fail(path, "expected an object");
    reject_unknown(f, path, {"kind", "vertices"});
    Face face;
    const json& kind = field(f, path, "kind");
    if (!kind.is_string()) fail(path + ".kind", "expected a string");
    try {
      face.kind = face_kind_from_name(kind.get<std::string>());
    } catch (const Error& e) {
      fail(path + ".kind", e.what());
    }
    const json& refs = field(f, path, "vertices");
    if (!refs.is_array() || refs.size() < 3) fail(path + ".vertices", "expected at least three vertices");
    for (std::size_t k = 0; k < refs.size(); ++k) {
      const std::string rpath = path + ".vertices[" + std::to_string(k) + "]";
      const json& ref = refs[k];
      VertexRef v;
      long long idx = 0;
      if (ref.is_array()) {
        if (ref.size() != 3) fail(rpath, "expected [index, da, db]");
        idx = integer(ref[0], rpath + "[0]");
        v.offset = {static_cast<int>(integer(ref[1], rpath + "[1]")),
                    static_cast<int>(integer(ref[2], rpath + "[2]"))};
      } else {
        idx = integer(ref, rpath);
      }
      if (idx < 0 || static_cast<std::size_t>(idx) >= t.vertices.size()) {
        fail(rpath, "vertex index out of range");
      }
      v.index = static_cast<std::size_t>(idx);
      face.vertices.push_back(v);
    }
    t.faces.push_back(std::move(face));
  }
  return t;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot open '" + path + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error(ErrorCode::Io, "failed writing '" + path + "'");
}

}  // namespace compack

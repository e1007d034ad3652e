#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "errors.hpp"
#include "patch_io.hpp"
#include "presets.hpp"
#include "radii.hpp"
#include "svg.hpp"
#include "tiling.hpp"

using namespace compack;

namespace {

std::string parse_error(const std::string& text) {
  try {
    parse_patch(text);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
    return e.what();
  }
  FAIL("expected a parse error");
  return {};
}

}  // namespace

TEST_CASE("patch documents round-trip exactly") {
  for (const Preset& pr : presets()) {
    const Patch p = generate_preset(pr.name);
    const std::string text = serialize_patch(p);
    const Patch q = parse_patch(text);
    CHECK(serialize_patch(q) == text);
    REQUIRE(q.discs.size() == p.discs.size());
    for (std::size_t i = 0; i < p.discs.size(); ++i) {
      CHECK(q.discs[i].center == p.discs[i].center);
      CHECK(q.discs[i].size == p.discs[i].size);
    }
    CHECK(q.r == p.r);
  }
}

TEST_CASE("parse errors carry a location") {
  CHECK(parse_error("{\n  \"r\": 0.5,\n  oops\n}").find("line 3") != std::string::npos);
  CHECK(parse_error(R"({"radius_class": "c4", "r": 0.4, "discs": [{"x": 0, "y": 0, "size": "huge"}]})")
            .find("discs[0].size") != std::string::npos);
  CHECK(parse_error(R"({"radius_class": "c4", "r": 0.4, "discs": [{"x": 0, "size": "large"}]})")
            .find("discs[0]") != std::string::npos);
  CHECK(parse_error(R"({"radius_class": "c4", "r": 0.4, "periods": [[6, 0]], "discs": []})")
            .find("periods") != std::string::npos);
  CHECK(parse_error(R"({"radius_class": "c4", "r": 1.4, "discs": []})").find("r:") != std::string::npos);
  CHECK(parse_error(R"({"radius_class": "c4", "r": 0.4, "discs": [], "extra": 1})").find("extra") !=
        std::string::npos);
}

TEST_CASE("tiling documents round-trip") {
  const Tiling t = strip_tiling("ST", 3, radius_class("c4").value);
  const std::string text = serialize_tiling(t);
  const Tiling u = parse_tiling(text);
  CHECK(serialize_tiling(u) == text);
  CHECK(tilings_congruent(t, u));
  CHECK_THROWS_AS(parse_tiling(R"({"vertices": [[0, 0]], "faces": [{"kind": "square", "vertices": [0, 1, 2]}]})"),
                  Error);
  CHECK_THROWS_AS(parse_tiling(R"({"vertices": [], "faces": [{"kind": "octagon", "vertices": []}]})"), Error);
}

TEST_CASE("files") {
  const auto path = std::filesystem::temp_directory_path() / "compack_io_test.json";
  const Patch p = generate_preset("fig6");
  write_text_file(path.string(), serialize_patch(p));
  CHECK(read_text_file(path.string()) == serialize_patch(p));
  std::filesystem::remove(path);
  try {
    read_text_file("/nonexistent/dir/file.json");
    FAIL("expected Io");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Io);
  }
}

TEST_CASE("svg output is stable and complete") {
  const Patch p = generate_preset("fig7");
  const std::string a = render_svg(p, {true, 2});
  CHECK(a == render_svg(p, {true, 2}));
  CHECK(a.rfind("<?xml", 0) == 0);
  std::size_t circles = 0;
  for (std::size_t pos = a.find("<circle"); pos != std::string::npos; pos = a.find("<circle", pos + 1)) ++circles;
  CHECK(circles == 4 * p.discs.size());
  CHECK(a.find("<line") != std::string::npos);
  CHECK(render_svg(p).find("<line") == std::string::npos);
}

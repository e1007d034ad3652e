// Drives the compact executable as a subprocess.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(COMPACT_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool has(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("radii table and records") {
  const Run table = run("radii");
  CHECK(table.status == 0);
  for (const char* dec : {"0.6375559772", "0.5451510421", "0.5332964167", "0.4142135624", "0.3861061049",
                          "0.3491981862", "0.2807764064", "0.1547005384", "0.1010205144"}) {
    CHECK(has(table.out, dec));
  }
  CHECK(has(table.out, "eliminated (5,0,0)"));
  const Run records = run("radii --format records --audit");
  CHECK(records.status == 0);
  CHECK(has(records.out, "c9"));
  CHECK(run("radii --format xml").status != 0);
}

TEST_CASE("coronas listing and counts") {
  const Run c2 = run("coronas c2");
  CHECK(c2.status == 0);
  CHECK(has(c2.out, "111rr"));
  CHECK(has(c2.out, "boundary argument"));
  const Run c9 = run("coronas c9 --count-only");
  CHECK(c9.status == 0);
  CHECK(has(c9.out, "large 195"));
  CHECK(run("coronas c0").status == 2);
}

TEST_CASE("generate, verify, density and render") {
  const Run gen = run("generate c6 --preset figure -o cli_c6.json");
  REQUIRE(gen.status == 0);
  const Run ver = run("verify cli_c6.json");
  CHECK(ver.status == 0);
  CHECK(has(ver.out, "status ok"));
  const Run den = run("density cli_c6.json");
  CHECK(den.status == 0);
  CHECK(std::stod(den.out) > 0.8);
  const Run svg = run("render cli_c6.json --edges --repeat 2");
  CHECK(svg.status == 0);
  CHECK(has(svg.out, "<svg"));
  CHECK(run("generate c4 --rows ST --width 3").status == 0);
  CHECK(run("generate c2 --pattern dimer --extent 1").status == 0);
  CHECK(run("generate c3 --offsets 0110").status == 0);
  CHECK(run("generate c1 --orientations 01").status == 0);
  CHECK(run("generate c8 --holes all --extent 3").status == 0);
  write("cli_snub.json", R"({"pattern": "snub", "extent": 2})");
  CHECK(run("generate c4 --descriptor cli_snub.json").status == 0);
}

TEST_CASE("construction errors exit with status 2") {
  write("cli_points.txt", "0 0\n1 0\n");
  const Run adj = run("generate c5 --substitute cli_points.txt");
  CHECK(adj.status == 2);
  CHECK(has(adj.out, "independent"));
  CHECK(run("generate c3 --layers LSSL").status == 2);
  CHECK(run("generate c6 --layers LSL").status == 2);
  CHECK(run("generate c5 --substitute missing_file.txt").status == 2);
}

TEST_CASE("verify reports failures with exit 1 and parse errors with exit 2") {
  REQUIRE(run("generate c8 --preset fig8 -o cli_c8.json").status == 0);
  std::string doc = slurp("cli_c8.json");
  // Nudge the first coordinate by 1e-3.
  const auto pos = doc.find("\"x\": ") + 5;
  const auto end = doc.find(',', pos);
  const double x = std::stod(doc.substr(pos, end - pos)) + 1e-3;
  doc.replace(pos, end - pos, std::to_string(x));
  write("cli_c8_bad.json", doc);
  const Run bad = run("verify cli_c8_bad.json");
  CHECK(bad.status == 1);
  CHECK(has(bad.out, "status fail"));

  write("cli_one_period.json",
        R"({"radius_class": "c4", "r": 0.41421356237309503, "periods": [[6, 0]], "discs": []})");
  const Run one = run("verify cli_one_period.json");
  CHECK(one.status == 2);
  CHECK(has(one.out, "periods"));
  write("cli_syntax.json", "{\n  \"r\": 0.4,\n  ]\n");
  const Run syn = run("verify cli_syntax.json");
  CHECK(syn.status == 2);
  CHECK(has(syn.out, "line 3"));
  CHECK(run("density cli_syntax.json").status == 2);
}

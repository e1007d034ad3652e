// compact: command-line front end over the compack C API.

#include <compack/compack.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

// Library failure carrying the status for the error line.
struct Failure {
  cpk_status status;
  std::string message;
};

void check(cpk_status s) {
  if (s != CPK_OK) throw Failure{s, cpk_last_error()};
}

struct PatchDeleter {
  void operator()(cpk_patch* p) const { cpk_patch_free(p); }
};
using PatchPtr = std::unique_ptr<cpk_patch, PatchDeleter>;

struct CoronaSetDeleter {
  void operator()(cpk_corona_set* s) const { cpk_corona_set_free(s); }
};
using CoronaSetPtr = std::unique_ptr<cpk_corona_set, CoronaSetDeleter>;

std::string take(char* s) {
  std::string out(s ? s : "");
  cpk_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{CPK_ERR_IO, "cannot open '" + path + "' for reading"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{CPK_ERR_IO, "cannot open '" + path + "' for writing"};
  out << text;
  if (!out) throw Failure{CPK_ERR_IO, "failed writing '" + path + "'"};
}

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

PatchPtr load_patch(const std::string& path) {
  cpk_patch* p = nullptr;
  check(cpk_patch_load(path.c_str(), &p));
  return PatchPtr(p);
}

// ---- radii ---------------------------------------------------------------

int cmd_radii(bool audit, const std::string& format) {
  size_t n = 0;
  check(cpk_radius_class_count(&n));
  size_t nc = 0;
  check(cpk_candidate_count(&nc));
  std::ostringstream out;
  const bool records = format == "records";
  if (!records) {
    out << "id  value         i j k  small     l m n  residual    exact form\n";
  }
  for (size_t idx = 0; idx < n; ++idx) {
    cpk_radius_info info;
    check(cpk_radius_class_get(idx, &info));
    if (records) {
      out << "class id=" << info.id << " value=" << fmt("%.17g", info.value) << " i=" << info.i
          << " j=" << info.j << " k=" << info.k << " word=" << info.small_word << " l=" << info.l
          << " m=" << info.m << " n=" << info.n << " residual=" << fmt("%.3e", info.residual) << "\n";
      continue;
    }
    char line[256];
    std::snprintf(line, sizeof line, "%-3s %.10f  %d %d %d  %-8s  %d %d %d  %-10s  %s\n", info.id,
                  info.value, info.i, info.j, info.k, info.small_word, info.l, info.m, info.n,
                  fmt("%.2e", info.residual).c_str(), info.exact_form);
    out << line;
  }
  for (size_t idx = 0; idx < nc; ++idx) {
    cpk_candidate_info c;
    check(cpk_candidate_get(idx, &c));
    if (c.feasible) continue;
    if (records) {
      out << "eliminated i=" << c.i << " j=" << c.j << " k=" << c.k << " root=" << fmt("%.17g", c.root)
          << " reason=no-large-disc-signature\n";
    } else {
      out << "eliminated (" << c.i << "," << c.j << "," << c.k << ") r=" << fmt("%.10f", c.root)
          << ": no large-disc signature\n";
    }
  }
  if (audit) {
    if (!records) out << "audit (large-disc scan, tolerance 1e-7, annulus 1e-4)\n";
    for (size_t idx = 0; idx < nc; ++idx) {
      cpk_candidate_info c;
      check(cpk_candidate_get(idx, &c));
      std::ostringstream large;
      if (c.feasible) {
        large << "(" << c.l << "," << c.m << "," << c.n << ")";
      } else {
        large << "none";
      }
      if (records) {
        out << "audit i=" << c.i << " j=" << c.j << " k=" << c.k << " root=" << fmt("%.17g", c.root)
            << " large=" << large.str() << " nearest_miss=" << fmt("%.3e", c.nearest_miss)
            << " annulus_hits=" << c.annulus_hits << "\n";
      } else {
        out << "  (" << c.i << "," << c.j << "," << c.k << ") r=" << fmt("%.10f", c.root)
            << " large=" << large.str() << " nearest_miss=" << fmt("%.3e", c.nearest_miss)
            << " annulus_hits=" << c.annulus_hits
            << (c.feasible ? "" : " -> no large-disc signature") << "\n";
      }
    }
  }
  std::cout << out.str();
  return kExitOk;
}

// ---- coronas -------------------------------------------------------------

std::vector<std::string> words(const cpk_corona_set* s, char center) {
  size_t n = 0;
  check(cpk_corona_set_size(s, center, &n));
  std::vector<std::string> out;
  for (size_t k = 0; k < n; ++k) {
    const char* w = nullptr;
    check(cpk_corona_set_word(s, center, k, &w));
    out.emplace_back(w);
  }
  return out;
}

std::string joined(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& w : v) out += " " + w;
  return out;
}

int cmd_coronas(const std::string& class_id, bool count_only) {
  cpk_radius_info info;
  check(cpk_radius_class_find(class_id.c_str(), &info));
  cpk_corona_set* raw = nullptr;
  check(cpk_corona_set_create(class_id.c_str(), 0, &raw));
  CoronaSetPtr all(raw);
  check(cpk_corona_set_create(class_id.c_str(), 1, &raw));
  CoronaSetPtr kept(raw);

  const auto small = words(all.get(), 'r');
  const auto large = words(all.get(), '1');
  size_t excluded = 0;
  check(cpk_corona_set_excluded_count(kept.get(), &excluded));
  std::ostringstream out;
  if (count_only) {
    size_t nontrivial = 0;
    for (const auto& w : large) nontrivial += w != "111111";
    out << "small " << small.size() << "\n";
    out << "large " << large.size() << "\n";
    out << "large_nontrivial " << nontrivial << "\n";
    out << "excluded " << excluded << "\n";
    std::cout << out.str();
    return kExitOk;
  }
  out << "class " << info.id << " r=" << fmt("%.10f", info.value) << "\n";
  out << "small " << small.size() << ":" << joined(small) << "\n";
  out << "large " << large.size() << ":" << joined(large) << "\n";
  out << "excluded " << excluded << ":\n";
  for (size_t k = 0; k < excluded; ++k) {
    char center = 0;
    const char* word = nullptr;
    const char* reason = nullptr;
    check(cpk_corona_set_excluded_get(kept.get(), k, &center, &word, &reason));
    out << "  " << center << ":" << word << " " << reason << "\n";
  }
  const auto fs = words(kept.get(), 'r');
  const auto fl = words(kept.get(), '1');
  out << "allowed small " << fs.size() << ":" << joined(fs) << "\n";
  out << "allowed large " << fl.size() << ":" << joined(fl) << "\n";
  std::cout << out.str();
  return kExitOk;
}

// ---- generate ------------------------------------------------------------

struct GenerateArgs {
  std::string class_id;
  std::string preset;
  std::string descriptor;
  std::string substitute;
  std::string holes;
  std::string layers;
  std::string offsets;
  std::string orientations;
  std::string rows;
  std::string pattern;
  std::string tiling;
  int extent = 0;
  int width = 0;
  std::string output;
};

std::vector<std::vector<std::string>> token_lines(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<std::vector<std::string>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (!toks.empty()) out.push_back(std::move(toks));
  }
  return out;
}

int to_int(const std::string& s, const std::string& where) {
  try {
    size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Failure{CPK_ERR_PARSE, where + ": expected an integer, got '" + s + "'"};
}

std::string build_descriptor(const GenerateArgs& a) {
  using nlohmann::json;
  int sources = 0;
  for (const std::string* s : {&a.descriptor, &a.substitute, &a.holes, &a.layers, &a.offsets,
                               &a.orientations, &a.rows, &a.pattern, &a.tiling}) {
    sources += !s->empty();
  }
  if (sources > 1) throw Failure{CPK_ERR_INVALID_ARGUMENT, "choose one construction source"};
  if (!a.descriptor.empty()) return read_file(a.descriptor);

  json d = json::object();
  if (a.extent > 0) d["extent"] = a.extent;
  if (a.width > 0) d["width"] = a.width;
  if (!a.substitute.empty()) {
    json pts = json::array();
    for (const auto& toks : token_lines(a.substitute)) {
      if (toks.size() != 2) throw Failure{CPK_ERR_PARSE, a.substitute + ": each line needs 'i j'"};
      pts.push_back({to_int(toks[0], a.substitute), to_int(toks[1], a.substitute)});
    }
    d["points"] = pts;
    if (a.extent <= 0) d["extent"] = 6;
  } else if (!a.holes.empty()) {
    if (a.holes == "all") {
      d["holes"] = "all";
    } else {
      json hs = json::array();
      for (const auto& toks : token_lines(a.holes)) {
        if (toks.size() != 3) throw Failure{CPK_ERR_PARSE, a.holes + ": each line needs 'i j up|down'"};
        hs.push_back({to_int(toks[0], a.holes), to_int(toks[1], a.holes), toks[2]});
      }
      d["holes"] = hs;
    }
  } else if (!a.layers.empty()) {
    d["layers"] = a.layers;
  } else if (!a.offsets.empty()) {
    d["offsets"] = a.offsets;
  } else if (!a.orientations.empty()) {
    d["orientations"] = a.orientations;
  } else if (!a.rows.empty()) {
    d["rows"] = a.rows;
  } else if (!a.pattern.empty()) {
    d["pattern"] = a.pattern;
  } else if (!a.tiling.empty()) {
    try {
      d["tiling"] = json::parse(read_file(a.tiling));
    } catch (const json::parse_error& e) {
      throw Failure{CPK_ERR_PARSE, a.tiling + ": " + e.what()};
    }
  }
  return d.dump();
}

int cmd_generate(const GenerateArgs& a) {
  cpk_patch* raw = nullptr;
  if (!a.preset.empty()) {
    check(cpk_patch_preset(a.class_id.c_str(), a.preset.c_str(), &raw));
  } else {
    const std::string desc = build_descriptor(a);
    check(cpk_patch_generate(a.class_id.c_str(), desc.c_str(), &raw));
  }
  PatchPtr p(raw);
  char* text = nullptr;
  check(cpk_patch_serialize(p.get(), &text));
  emit(a.output, take(text));
  return kExitOk;
}

// ---- verify / render / density --------------------------------------------

int cmd_verify(const std::string& path) {
  PatchPtr p = load_patch(path);
  cpk_verify_summary s;
  char* report = nullptr;
  check(cpk_patch_verify(p.get(), &s, &report));
  std::cout << take(report);
  return s.ok ? kExitOk : kExitVerifyFailed;
}

int cmd_render(const std::string& path, const std::string& output, bool edges, int repeat) {
  PatchPtr p = load_patch(path);
  char* svg = nullptr;
  check(cpk_patch_render_svg(p.get(), edges ? static_cast<unsigned>(CPK_RENDER_EDGES) : 0u, repeat, &svg));
  emit(output, take(svg));
  return kExitOk;
}

int cmd_density(const std::string& path) {
  PatchPtr p = load_patch(path);
  double d = 0.0;
  check(cpk_patch_density(p.get(), &d));
  std::cout << fmt("%.12f", d) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compact two-radius disc packings: radii, coronas, generation and verification"};
  app.require_subcommand(1);

  bool audit = false;
  std::string format = "table";
  auto* radii = app.add_subcommand("radii", "Derive the nine admissible radius classes");
  radii->add_flag("--audit", audit, "Add the near-miss scan of the large-disc feasibility test");
  radii->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "records"}));

  std::string corona_class;
  bool count_only = false;
  auto* coronas = app.add_subcommand("coronas", "List coronas of a radius class");
  coronas->add_option("class", corona_class, "Radius class id (c1..c9)")->required();
  coronas->add_flag("--count-only", count_only, "Print only the counts");

  GenerateArgs g;
  auto* generate = app.add_subcommand("generate", "Write a packing patch");
  generate->add_option("class", g.class_id, "Radius class id (c1..c9)")->required();
  generate->add_option("--preset", g.preset, "Preset name (fig1..fig15, or 'figure')");
  generate->add_option("--descriptor", g.descriptor, "Descriptor document file");
  generate->add_option("--substitute", g.substitute, "c5: file of 'i j' lattice points");
  generate->add_option("--holes", g.holes, "c8/c9: 'all' or file of 'i j up|down'");
  generate->add_option("--layers", g.layers, "c3: layer word over L and S");
  generate->add_option("--offsets", g.offsets, "c3: offset bits between layers");
  generate->add_option("--orientations", g.orientations, "c1: orientation bit per layer");
  generate->add_option("--rows", g.rows, "c4/c7: strip word over S, T, R, L");
  generate->add_option("--pattern", g.pattern, "c4: snub; c2: kagome or dimer");
  generate->add_option("--tiling", g.tiling, "c2/c4/c7: tiling document");
  generate->add_option("--extent", g.extent, "Cells per side")->check(CLI::PositiveNumber);
  generate->add_option("--width", g.width, "Cells per layer")->check(CLI::PositiveNumber);
  generate->add_option("-o,--output", g.output, "Output path (default stdout)");

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "Check overlap, compactness and corona membership");
  verify->add_option("patch", verify_path, "Patch document")->required();

  std::string render_path, render_out;
  bool edges = false;
  int repeat = 1;
  auto* render = app.add_subcommand("render", "Render a patch as SVG");
  render->add_option("patch", render_path, "Patch document")->required();
  render->add_option("-o,--output", render_out, "Output path (default stdout)");
  render->add_flag("--edges", edges, "Overlay large-large tangency segments");
  render->add_option("--repeat", repeat, "Copies of a periodic cell per side")->check(CLI::PositiveNumber);

  std::string density_path;
  auto* density = app.add_subcommand("density", "Density of a periodic patch");
  density->add_option("patch", density_path, "Patch document")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*radii) return cmd_radii(audit, format);
    if (*coronas) return cmd_coronas(corona_class, count_only);
    if (*generate) return cmd_generate(g);
    if (*verify) return cmd_verify(verify_path);
    if (*render) return cmd_render(render_path, render_out, edges, repeat);
    if (*density) return cmd_density(density_path);
  } catch (const Failure& f) {
    std::cerr << "error: " << cpk_status_name(f.status) << ": " << f.message << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

#include "compack/compack.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "corona.hpp"
#include "errors.hpp"
#include "generate.hpp"
#include "patch_io.hpp"
#include "presets.hpp"
#include "radii.hpp"
#include "svg.hpp"
#include "verify.hpp"

struct cpk_patch {
  compack::Patch patch;
};

struct cpk_tiling {
  compack::Tiling tiling;
};

struct cpk_corona_set {
  compack::CoronaSet set;
  std::vector<std::string> excluded_words;
};

namespace {

thread_local std::string g_last_error;

cpk_status status_for(compack::ErrorCode code) {
  using compack::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return CPK_ERR_INVALID_ARGUMENT;
    case ErrorCode::Domain: return CPK_ERR_DOMAIN;
    case ErrorCode::NoSolution: return CPK_ERR_NO_SOLUTION;
    case ErrorCode::Internal: return CPK_ERR_INTERNAL;
    case ErrorCode::UnknownClass: return CPK_ERR_UNKNOWN_CLASS;
    case ErrorCode::EmptyWord: return CPK_ERR_EMPTY_WORD;
    case ErrorCode::Overlap: return CPK_ERR_OVERLAP;
    case ErrorCode::Parse: return CPK_ERR_PARSE;
    case ErrorCode::DescriptorMismatch: return CPK_ERR_DESCRIPTOR_MISMATCH;
    case ErrorCode::IndependentSet: return CPK_ERR_INDEPENDENT_SET;
    case ErrorCode::AdjacentSmallLayers: return CPK_ERR_ADJACENT_SMALL_LAYERS;
    case ErrorCode::InvalidTiling: return CPK_ERR_INVALID_TILING;
    case ErrorCode::NonCompact: return CPK_ERR_NON_COMPACT;
    case ErrorCode::Aperiodic: return CPK_ERR_APERIODIC;
    case ErrorCode::Io: return CPK_ERR_IO;
  }
  return CPK_ERR_INTERNAL;
}

cpk_status fail(cpk_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
cpk_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const compack::Error& e) {
    return fail(status_for(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(CPK_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CPK_ERR_INTERNAL, e.what());
  }
}

#define CPK_REQUIRE(ptr)                                                 \
  do {                                                                   \
    if ((ptr) == nullptr) return fail(CPK_ERR_NULL_POINTER, #ptr " is null"); \
  } while (0)

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <std::size_t N>
void copy_into(char (&dst)[N], const std::string& src) {
  std::strncpy(dst, src.c_str(), N - 1);
  dst[N - 1] = '\0';
}

void fill_info(const compack::RadiusClass& rc, cpk_radius_info* out) {
  *out = cpk_radius_info{};
  copy_into(out->id, rc.id);
  out->value = rc.value;
  out->i = rc.signature.i;
  out->j = rc.signature.j;
  out->k = rc.signature.k;
  out->l = rc.large_signature.l;
  out->m = rc.large_signature.m;
  out->n = rc.large_signature.n;
  copy_into(out->small_word, rc.small_corona_word);
  out->residual = compack::residual(rc);
  copy_into(out->exact_form, rc.closed_form_note);
}

cpk_patch* wrap(compack::Patch p) { return new cpk_patch{std::move(p)}; }

bool parse_center(char c, compack::Size* out) {
  if (c == '1') *out = compack::Size::Large;
  else if (c == 'r') *out = compack::Size::Small;
  else return false;
  return true;
}

}  // namespace

extern "C" {

const char* cpk_status_name(cpk_status status) {
  switch (status) {
    case CPK_OK: return "ok";
    case CPK_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case CPK_ERR_DOMAIN: return "domain";
    case CPK_ERR_NO_SOLUTION: return "no-solution";
    case CPK_ERR_INTERNAL: return "internal";
    case CPK_ERR_UNKNOWN_CLASS: return "unknown-class";
    case CPK_ERR_EMPTY_WORD: return "empty-word";
    case CPK_ERR_OVERLAP: return "overlap";
    case CPK_ERR_PARSE: return "parse";
    case CPK_ERR_DESCRIPTOR_MISMATCH: return "descriptor-mismatch";
    case CPK_ERR_INDEPENDENT_SET: return "independent-set";
    case CPK_ERR_ADJACENT_SMALL_LAYERS: return "adjacent-small-layers";
    case CPK_ERR_INVALID_TILING: return "invalid-tiling";
    case CPK_ERR_NON_COMPACT: return "non-compact";
    case CPK_ERR_APERIODIC: return "aperiodic";
    case CPK_ERR_IO: return "io";
    case CPK_ERR_NULL_POINTER: return "null-pointer";
    case CPK_ERR_OUT_OF_RANGE: return "out-of-range";
  }
  return "unknown";
}

const char* cpk_last_error(void) { return g_last_error.c_str(); }

void cpk_string_free(char* s) { std::free(s); }

cpk_status cpk_radius_class_count(size_t* out) {
  CPK_REQUIRE(out);
  return guarded([&] {
    *out = compack::radius_classes().size();
    return CPK_OK;
  });
}

cpk_status cpk_radius_class_get(size_t index, cpk_radius_info* out) {
  CPK_REQUIRE(out);
  return guarded([&] {
    const auto& all = compack::radius_classes();
    if (index >= all.size()) return fail(CPK_ERR_OUT_OF_RANGE, "radius class index out of range");
    fill_info(all[index], out);
    return CPK_OK;
  });
}

cpk_status cpk_radius_class_find(const char* id, cpk_radius_info* out) {
  CPK_REQUIRE(id);
  CPK_REQUIRE(out);
  return guarded([&] {
    fill_info(compack::radius_class(id), out);
    return CPK_OK;
  });
}

namespace {
const std::vector<compack::CandidateResult>& candidates() {
  static const std::vector<compack::CandidateResult> all = compack::evaluate_candidates();
  return all;
}
}  // namespace

cpk_status cpk_candidate_count(size_t* out) {
  CPK_REQUIRE(out);
  return guarded([&] {
    *out = candidates().size();
    return CPK_OK;
  });
}

cpk_status cpk_candidate_get(size_t index, cpk_candidate_info* out) {
  CPK_REQUIRE(out);
  return guarded([&] {
    const auto& all = candidates();
    if (index >= all.size()) return fail(CPK_ERR_OUT_OF_RANGE, "candidate index out of range");
    const auto& c = all[index];
    *out = cpk_candidate_info{};
    out->i = c.signature.i;
    out->j = c.signature.j;
    out->k = c.signature.k;
    out->root = c.root;
    out->feasible = c.large.has_value() ? 1 : 0;
    if (c.large) {
      out->l = c.large->l;
      out->m = c.large->m;
      out->n = c.large->n;
    }
    out->nearest_miss = c.audit.nearest_miss;
    out->annulus_hits = c.audit.annulus_hits;
    return CPK_OK;
  });
}

cpk_status cpk_canonicalize(const char* word, char** out) {
  CPK_REQUIRE(word);
  CPK_REQUIRE(out);
  return guarded([&] {
    *out = dup_string(compack::canonicalize(word));
    return CPK_OK;
  });
}

cpk_status cpk_corona_set_create(const char* class_id, int filtered, cpk_corona_set** out) {
  CPK_REQUIRE(class_id);
  CPK_REQUIRE(out);
  return guarded([&] {
    const auto& rc = compack::radius_class(class_id);
    auto* h = new cpk_corona_set{filtered ? compack::filtered_corona_set(rc) : compack::build_corona_set(rc), {}};
    for (const auto& e : h->set.excluded) h->excluded_words.push_back(e.corona.word);
    *out = h;
    return CPK_OK;
  });
}

void cpk_corona_set_free(cpk_corona_set* set) { delete set; }

cpk_status cpk_corona_set_size(const cpk_corona_set* set, char center, size_t* out) {
  CPK_REQUIRE(set);
  CPK_REQUIRE(out);
  compack::Size s;
  if (!parse_center(center, &s)) return fail(CPK_ERR_INVALID_ARGUMENT, "center must be '1' or 'r'");
  *out = set->set.around(s).size();
  return CPK_OK;
}

cpk_status cpk_corona_set_word(const cpk_corona_set* set, char center, size_t index, const char** out) {
  CPK_REQUIRE(set);
  CPK_REQUIRE(out);
  compack::Size s;
  if (!parse_center(center, &s)) return fail(CPK_ERR_INVALID_ARGUMENT, "center must be '1' or 'r'");
  const auto& v = set->set.around(s);
  if (index >= v.size()) return fail(CPK_ERR_OUT_OF_RANGE, "corona index out of range");
  *out = v[index].word.c_str();
  return CPK_OK;
}

cpk_status cpk_corona_set_excluded_count(const cpk_corona_set* set, size_t* out) {
  CPK_REQUIRE(set);
  CPK_REQUIRE(out);
  *out = set->set.excluded.size();
  return CPK_OK;
}

cpk_status cpk_corona_set_excluded_get(const cpk_corona_set* set, size_t index, char* center,
                                       const char** word, const char** reason) {
  CPK_REQUIRE(set);
  if (index >= set->set.excluded.size()) return fail(CPK_ERR_OUT_OF_RANGE, "excluded index out of range");
  const auto& e = set->set.excluded[index];
  if (center) *center = compack::to_char(e.corona.center);
  if (word) *word = e.corona.word.c_str();
  if (reason) *reason = e.reason.c_str();
  return CPK_OK;
}

cpk_status cpk_patch_generate(const char* class_id, const char* descriptor_json, cpk_patch** out) {
  CPK_REQUIRE(class_id);
  CPK_REQUIRE(descriptor_json);
  CPK_REQUIRE(out);
  return guarded([&] {
    const auto& rc = compack::radius_class(class_id);
    *out = wrap(compack::generate(rc, compack::parse_descriptor(class_id, descriptor_json)));
    return CPK_OK;
  });
}

cpk_status cpk_preset_count(size_t* out) {
  CPK_REQUIRE(out);
  *out = compack::presets().size();
  return CPK_OK;
}

cpk_status cpk_preset_get(size_t index, const char** name, const char** class_id, const char** summary) {
  const auto& all = compack::presets();
  if (index >= all.size()) return fail(CPK_ERR_OUT_OF_RANGE, "preset index out of range");
  if (name) *name = all[index].name.c_str();
  if (class_id) *class_id = all[index].class_id.c_str();
  if (summary) *summary = all[index].summary.c_str();
  return CPK_OK;
}

cpk_status cpk_patch_preset(const char* class_id, const char* name, cpk_patch** out) {
  CPK_REQUIRE(name);
  CPK_REQUIRE(out);
  return guarded([&] {
    const std::string wanted(name);
    const compack::Preset* p = nullptr;
    if (wanted == "figure") {
      if (!class_id) return fail(CPK_ERR_INVALID_ARGUMENT, "preset 'figure' needs a class id");
      p = &compack::figure_preset(class_id);
    } else {
      p = &compack::preset(wanted);
      if (class_id && p->class_id != class_id) {
        return fail(CPK_ERR_DESCRIPTOR_MISMATCH,
                    "preset " + p->name + " belongs to class " + p->class_id + ", not " + class_id);
      }
    }
    *out = wrap(compack::generate_preset(p->name));
    return CPK_OK;
  });
}

cpk_status cpk_patch_parse(const char* text, cpk_patch** out) {
  CPK_REQUIRE(text);
  CPK_REQUIRE(out);
  return guarded([&] {
    *out = wrap(compack::parse_patch(text));
    return CPK_OK;
  });
}

cpk_status cpk_patch_load(const char* path, cpk_patch** out) {
  CPK_REQUIRE(path);
  CPK_REQUIRE(out);
  return guarded([&] {
    *out = wrap(compack::parse_patch(compack::read_text_file(path)));
    return CPK_OK;
  });
}

cpk_status cpk_patch_serialize(const cpk_patch* p, char** out) {
  CPK_REQUIRE(p);
  CPK_REQUIRE(out);
  return guarded([&] {
    *out = dup_string(compack::serialize_patch(p->patch));
    return CPK_OK;
  });
}

cpk_status cpk_patch_save(const cpk_patch* p, const char* path) {
  CPK_REQUIRE(p);
  CPK_REQUIRE(path);
  return guarded([&] {
    compack::write_text_file(path, compack::serialize_patch(p->patch));
    return CPK_OK;
  });
}

void cpk_patch_free(cpk_patch* p) { delete p; }

cpk_status cpk_patch_class(const cpk_patch* p, const char** out) {
  CPK_REQUIRE(p);
  CPK_REQUIRE(out);
  *out = p->patch.class_id.c_str();
  return CPK_OK;
}

cpk_status cpk_patch_radius(const cpk_patch* p, double* out) {
  CPK_REQUIRE(p);
  CPK_REQUIRE(out);
  *out = p->patch.r;
  return CPK_OK;
}

cpk_status cpk_patch_is_periodic(const cpk_patch* p, int* out) {
  CPK_REQUIRE(p);
  CPK_REQUIRE(out);
  *out = p->patch.periods.has_value() ? 1 : 0;
  return CPK_OK;
}

cpk_status cpk_patch_disc_count(const cpk_patch* p, size_t* out) {
  CPK_REQUIRE(p);
  CPK_REQUIRE(out);
  *out = p->patch.discs.size();
  return CPK_OK;
}

cpk_status cpk_patch_disc_get(const cpk_patch* p, size_t index, double* x, double* y, char* size) {
  CPK_REQUIRE(p);
  if (index >= p->patch.discs.size()) return fail(CPK_ERR_OUT_OF_RANGE, "disc index out of range");
  const auto& d = p->patch.discs[index];
  if (x) *x = d.center.x;
  if (y) *y = d.center.y;
  if (size) *size = compack::to_char(d.size);
  return CPK_OK;
}

cpk_status cpk_patch_density(const cpk_patch* p, double* out) {
  CPK_REQUIRE(p);
  CPK_REQUIRE(out);
  return guarded([&] {
    *out = compack::density(p->patch);
    return CPK_OK;
  });
}

cpk_status cpk_patch_verify(const cpk_patch* p, cpk_verify_summary* summary, char** report) {
  CPK_REQUIRE(p);
  CPK_REQUIRE(summary);
  return guarded([&] {
    const compack::VerifyReport rep = compack::verify_patch(p->patch);
    *summary = cpk_verify_summary{};
    summary->discs = rep.disc_count;
    summary->overlaps = rep.overlaps.size();
    if (rep.compact) {
      summary->compact = rep.compact->compact;
      summary->boundary = rep.compact->boundary;
      summary->violating = rep.compact->violating;
    }
    summary->membership_violations = rep.membership.size();
    summary->membership_checked = rep.membership_checked ? 1 : 0;
    summary->both_sizes = rep.both_sizes ? 1 : 0;
    summary->ok = rep.ok() ? 1 : 0;
    if (report) *report = dup_string(compack::format_report(rep));
    return CPK_OK;
  });
}

cpk_status cpk_patch_render_svg(const cpk_patch* p, unsigned flags, int repeat, char** out) {
  CPK_REQUIRE(p);
  CPK_REQUIRE(out);
  return guarded([&] {
    compack::RenderOptions opts;
    opts.edges = (flags & CPK_RENDER_EDGES) != 0;
    opts.repeat = repeat;
    *out = dup_string(compack::render_svg(p->patch, opts));
    return CPK_OK;
  });
}

cpk_status cpk_patch_to_tiling(const cpk_patch* p, cpk_tiling** out) {
  CPK_REQUIRE(p);
  CPK_REQUIRE(out);
  return guarded([&] {
    *out = new cpk_tiling{compack::packing_to_tiling(p->patch)};
    return CPK_OK;
  });
}

cpk_status cpk_tiling_to_patch(const char* class_id, const cpk_tiling* t, cpk_patch** out) {
  CPK_REQUIRE(class_id);
  CPK_REQUIRE(t);
  CPK_REQUIRE(out);
  return guarded([&] {
    *out = wrap(compack::tiling_to_packing(compack::radius_class(class_id), t->tiling));
    return CPK_OK;
  });
}

cpk_status cpk_tiling_parse(const char* text, cpk_tiling** out) {
  CPK_REQUIRE(text);
  CPK_REQUIRE(out);
  return guarded([&] {
    *out = new cpk_tiling{compack::parse_tiling(text)};
    return CPK_OK;
  });
}

cpk_status cpk_tiling_serialize(const cpk_tiling* t, char** out) {
  CPK_REQUIRE(t);
  CPK_REQUIRE(out);
  return guarded([&] {
    *out = dup_string(compack::serialize_tiling(t->tiling));
    return CPK_OK;
  });
}

cpk_status cpk_tiling_face_count(const cpk_tiling* t, size_t* out) {
  CPK_REQUIRE(t);
  CPK_REQUIRE(out);
  *out = t->tiling.faces.size();
  return CPK_OK;
}

void cpk_tiling_free(cpk_tiling* t) { delete t; }

}  // extern "C"

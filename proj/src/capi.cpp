#include "symdyn/symdyn.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "symdyn/cover.hpp"
#include "symdyn/degree.hpp"
#include "symdyn/error.hpp"
#include "symdyn/manifest.hpp"
#include "symdyn/relations.hpp"
#include "symdyn/report.hpp"
#include "symdyn/spectral.hpp"

struct sd_manifest {
  symdyn::Manifest m;
};

struct sd_code {
  symdyn::OneBlockCode c;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
sd_status guard(F&& f) {
  try {
    last_error.clear();
    f();
    return SD_OK;
  } catch (const symdyn::Error& e) {
    last_error = e.what();
    return static_cast<sd_status>(e.kind());
  } catch (const std::exception& e) {
    last_error = std::string("internal: ") + e.what();
    return SD_INTERNAL;
  } catch (...) {
    last_error = "internal: unknown exception";
    return SD_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) symdyn::fail(symdyn::ErrorKind::InvalidArgument, std::string("null ") + what);
}

}  // namespace

extern "C" {

const char* sd_version(void) {
  static const std::string v(symdyn::version());
  return v.c_str();
}

const char* sd_status_name(sd_status status) {
  if (status == SD_OK) return "Ok";
  if (status == SD_INTERNAL) return "Internal";
  if (status < SD_INVALID_ARGUMENT || status > SD_UNKNOWN_NAME) return "Unknown";
  return symdyn::error_kind_name(static_cast<symdyn::ErrorKind>(status)).data();
}

const char* sd_last_error(void) { return last_error.c_str(); }

void sd_string_free(char* s) { std::free(s); }

sd_status sd_manifest_parse(const char* text, size_t len, sd_manifest** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = new sd_manifest{symdyn::parse_manifest(std::string_view(text, len))};
  });
}

sd_status sd_manifest_load(const char* path, sd_manifest** out) {
  return guard([&] {
    need(path, "path");
    need(out, "out");
    *out = new sd_manifest{symdyn::load_manifest(path)};
  });
}

void sd_manifest_free(sd_manifest* m) { delete m; }

sd_status sd_manifest_print(const sd_manifest* m, char** out) {
  return guard([&] {
    need(m, "manifest");
    need(out, "out");
    *out = dup(symdyn::print_manifest(m->m));
  });
}

sd_status sd_manifest_counts(const sd_manifest* m, size_t* systems, size_t* codes) {
  return guard([&] {
    need(m, "manifest");
    if (systems) *systems = m->m.systems.size();
    if (codes) *codes = m->m.codes.size();
  });
}

sd_status sd_manifest_equal(const sd_manifest* a, const sd_manifest* b, int* equal) {
  return guard([&] {
    need(a, "manifest");
    need(b, "manifest");
    need(equal, "equal");
    *equal = a->m == b->m;
  });
}

sd_status sd_manifest_set_option(sd_manifest* m, const char* key, uint64_t value) {
  return guard([&] {
    need(m, "manifest");
    need(key, "key");
    std::string k = key;
    auto& o = m->m.options;
    if (k == "P" && value > 0 && value <= UINT32_MAX)
      o.P = static_cast<std::uint32_t>(value);
    else if (k == "L" && value > 0)
      o.L = value;
    else if (k == "kcap")
      o.k_cap = value;
    else if (k == "subset_cap" && value > 0)
      o.subset_cap = value;
    else
      symdyn::fail(symdyn::ErrorKind::InvalidArgument, "bad option " + k + "=" + std::to_string(value));
  });
}

sd_status sd_run(const sd_manifest* m, int argc, const char* const* argv, int json, char** report, int* exit_code) {
  return guard([&] {
    need(m, "manifest");
    need(report, "report");
    need(exit_code, "exit_code");
    if (argc < 0 || (argc > 0 && !argv)) symdyn::fail(symdyn::ErrorKind::InvalidArgument, "bad argv");
    std::vector<std::string> args(argv, argv + argc);
    symdyn::Report r = symdyn::run_command(m->m, args);
    *report = dup(json ? r.json() : r.text());
    *exit_code = r.exit_code;
  });
}

sd_status sd_code_lookup(const sd_manifest* m, const char* name, sd_code** out) {
  return guard([&] {
    need(m, "manifest");
    need(name, "name");
    need(out, "out");
    *out = new sd_code{m->m.code(name)};
  });
}

void sd_code_free(sd_code* c) { delete c; }

sd_status sd_code_symbols(const sd_code* c, size_t* symbols, size_t* letters) {
  return guard([&] {
    need(c, "code");
    if (symbols) *symbols = c->c.domain().size();
    if (letters) *letters = c->c.alphabet().size();
  });
}

sd_status sd_code_resolving(const sd_code* c, char dir, int* resolving) {
  return guard([&] {
    need(c, "code");
    need(resolving, "resolving");
    if (dir != 'u' && dir != 's') symdyn::fail(symdyn::ErrorKind::InvalidArgument, "direction must be 'u' or 's'");
    *resolving = symdyn::resolving_check(c->c, dir == 'u' ? symdyn::Direction::U : symdyn::Direction::S).resolving;
  });
}

sd_status sd_code_finite_to_one(const sd_code* c, int* finite_to_one) {
  return guard([&] {
    need(c, "code");
    need(finite_to_one, "finite_to_one");
    *finite_to_one = symdyn::finite_to_one_check(c->c).finite_to_one;
  });
}

sd_status sd_code_degree(const sd_code* c, uint32_t P, size_t* K, size_t* d, uint64_t* D) {
  return guard([&] {
    need(c, "code");
    symdyn::MagicData md = symdyn::verify_d_equals_D(c->c, P);
    if (K) *K = md.K;
    if (d) *d = md.d;
    if (D) *D = md.D;
  });
}

sd_status sd_code_image_equal(const sd_code* a, const sd_code* b, int* equal) {
  return guard([&] {
    need(a, "code");
    need(b, "code");
    need(equal, "equal");
    *equal = symdyn::image_equal(a->c, b->c).equal;
  });
}

sd_status sd_code_cover(const sd_code* c, const char* relation, size_t* cover_symbols, size_t* classes) {
  return guard([&] {
    need(c, "code");
    need(relation, "relation");
    std::string rel = relation;
    if (rel != "alpha" && rel != "theta")
      symdyn::fail(symdyn::ErrorKind::InvalidArgument, "relation must be alpha or theta");
    symdyn::CoverSft cov = symdyn::build_cover(c->c);
    auto q = symdyn::quotient_presentation(cov, rel == "alpha" ? symdyn::RelationKind::Alpha
                                                               : symdyn::RelationKind::Theta);
    if (cover_symbols) *cover_symbols = cov.sft->size();
    if (classes) *classes = q.classes.size();
  });
}

sd_status sd_system_entropy(const sd_manifest* m, const char* name, double* entropy) {
  return guard([&] {
    need(m, "manifest");
    need(name, "name");
    need(entropy, "entropy");
    *entropy = symdyn::max_entropy_component(*m->m.system(name)).best().entropy;
  });
}

}  // extern "C"

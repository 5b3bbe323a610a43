#include "grpkit/grpkit.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <new>
#include <string>

#include "grpkit/arith.hpp"
#include "grpkit/errors.hpp"
#include "grpkit/int_matrix.hpp"
#include "grpkit/low_index.hpp"
#include "grpkit/manifest.hpp"
#include "grpkit/quotients.hpp"
#include "grpkit/rewrite.hpp"
#include "grpkit/scenarios.hpp"

struct grpkit_presentation {
  grpkit::Presentation value;
};

struct grpkit_subgroups {
  std::vector<grpkit::SubgroupClassRecord> records;
};

namespace {

thread_local std::string last_error;

grpkit_status fail(grpkit_status status, std::string const& message) {
  last_error = message;
  return status;
}

template <typename F>
grpkit_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return GRPKIT_OK;
  } catch (grpkit::ParseError const& e) {
    return fail(GRPKIT_PARSE_ERROR, e.what());
  } catch (grpkit::InvalidArgument const& e) {
    return fail(GRPKIT_INVALID_ARGUMENT, e.what());
  } catch (grpkit::ResourceError const& e) {
    return fail(GRPKIT_RESOURCE_ERROR, e.what());
  } catch (std::bad_alloc const&) {
    return fail(GRPKIT_RESOURCE_ERROR, "out of memory");
  } catch (std::exception const& e) {
    return fail(GRPKIT_INTERNAL_ERROR, e.what());
  }
}

char* copy_string(std::string const& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(void const* ptr, char const* what) {
  if (!ptr) throw grpkit::InvalidArgument(std::string(what) + " must not be null");
}

grpkit::SubgroupClassRecord const& record(grpkit_subgroups const* s, std::size_t i) {
  require(s, "subgroup list");
  if (i >= s->records.size()) {
    throw grpkit::InvalidArgument("class " + std::to_string(i + 1) + " out of range (" +
                                  std::to_string(s->records.size()) + " classes)");
  }
  return s->records[i];
}

}  // namespace

extern "C" {

const char* grpkit_last_error(void) { return last_error.c_str(); }

void grpkit_string_free(char* s) { std::free(s); }

grpkit_status grpkit_presentation_parse(const char* text, grpkit_presentation** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new grpkit_presentation{grpkit::parse_presentation(text)};
  });
}

grpkit_status grpkit_presentation_load(const char* name_or_path, grpkit_presentation** out) {
  return guarded([&] {
    require(name_or_path, "name");
    require(out, "out");
    std::string name = name_or_path;
    for (grpkit::CatalogKey k : grpkit::all_catalog_keys()) {
      if (grpkit::catalog_name(k) == name) {
        *out = new grpkit_presentation{grpkit::catalog(k)};
        return;
      }
    }
    if (!std::filesystem::exists(name)) {
      throw grpkit::InvalidArgument("'" + name + "' is neither a catalog group nor a file");
    }
    *out = new grpkit_presentation{grpkit::load_presentation_file(name)};
  });
}

void grpkit_presentation_free(grpkit_presentation* p) { delete p; }

grpkit_status grpkit_presentation_render(const grpkit_presentation* p, char** out) {
  return guarded([&] {
    require(p, "presentation");
    *out = copy_string(grpkit::render_presentation(p->value));
  });
}

grpkit_status grpkit_abelian_invariants(const grpkit_presentation* p, char** out) {
  return guarded([&] {
    require(p, "presentation");
    *out = copy_string(grpkit::render_invariants(grpkit::abelian_invariants(p->value)));
  });
}

grpkit_status grpkit_low_index(const grpkit_presentation* p, size_t from, size_t to, uint64_t node_budget,
                               unsigned jobs, grpkit_subgroups** out) {
  return guarded([&] {
    require(p, "presentation");
    require(out, "out");
    grpkit::LowIndexOptions options;
    options.node_budget = node_budget;
    options.jobs = jobs;
    *out = new grpkit_subgroups{grpkit::low_index_subgroups(p->value, from, to, options)};
  });
}

void grpkit_subgroups_free(grpkit_subgroups* s) { delete s; }

size_t grpkit_subgroups_count(const grpkit_subgroups* s) { return s ? s->records.size() : 0; }

size_t grpkit_subgroups_index(const grpkit_subgroups* s, size_t i) {
  return s && i < s->records.size() ? s->records[i].index : 0;
}

size_t grpkit_subgroups_class_size(const grpkit_subgroups* s, size_t i) {
  return s && i < s->records.size() ? s->records[i].class_size : 0;
}

grpkit_status grpkit_subgroup_presentation(const grpkit_presentation* p, const grpkit_subgroups* s, size_t i,
                                           int simplify, grpkit_presentation** out) {
  return guarded([&] {
    require(p, "presentation");
    auto const& rec = record(s, i);
    grpkit::Presentation h = grpkit::reidemeister_schreier(p->value, rec.representative);
    if (simplify) h = grpkit::tietze_simplify(h);
    *out = new grpkit_presentation{std::move(h)};
  });
}

grpkit_status grpkit_coset_action(const grpkit_subgroups* s, const grpkit_presentation* p, size_t i,
                                  char** out) {
  return guarded([&] {
    require(p, "presentation");
    auto const& rec = record(s, i);
    std::string text;
    for (std::uint32_t g = 0; g < rec.representative.n_generators(); ++g) {
      text += p->value.generators()[g] + ": " +
              grpkit::to_cycle_string(rec.representative.generator_permutation(g)) + "\n";
    }
    *out = copy_string(text);
  });
}

grpkit_status grpkit_coset_image_order(const grpkit_subgroups* s, size_t i, char** out) {
  return guarded([&] { *out = copy_string(grpkit::coset_action(record(s, i).representative).order().get_str()); });
}

grpkit_status grpkit_coset_image_is_simple(const grpkit_subgroups* s, size_t i, int* out) {
  return guarded([&] { *out = grpkit::is_simple(grpkit::coset_action(record(s, i).representative)) ? 1 : 0; });
}

int grpkit_is_prime(uint64_t n) { return grpkit::is_prime(n) ? 1 : 0; }

grpkit_status grpkit_split_prime(const char* field, uint64_t p, char** out) {
  return guarded([&] {
    require(field, "field");
    *out = copy_string(grpkit::render_splitting(grpkit::split_prime(grpkit::parse_field(field), p)));
  });
}

grpkit_status grpkit_count_epimorphisms(const grpkit_presentation* p, const char* target, const char* aut_order,
                                        char** total, char** automorphisms, char** classes) {
  return guarded([&] {
    require(p, "presentation");
    require(target, "target");
    std::optional<mpz_class> aut;
    if (aut_order) {
      mpz_class v;
      if (v.set_str(aut_order, 10) != 0 || v <= 0) {
        throw grpkit::InvalidArgument("automorphism order must be a positive integer");
      }
      aut = v;
    }
    grpkit::EpiCount c = grpkit::count_epimorphisms(p->value, grpkit::builtin_target(target), aut);
    *total = copy_string(c.total.get_str());
    *automorphisms = copy_string(c.aut_order.get_str());
    *classes = copy_string(c.classes.get_str());
  });
}

grpkit_status grpkit_mapping_torus_h1(const char* matrix, unsigned long power, char** out) {
  return guarded([&] {
    require(matrix, "matrix");
    if (power == 0) throw grpkit::InvalidArgument("power must be positive");
    *out = copy_string(grpkit::render_invariants(grpkit::mapping_torus_h1(grpkit::parse_matrix(matrix), power)));
  });
}

grpkit_status grpkit_verify(const char* manifest_path, unsigned jobs, size_t max_cosets, uint64_t node_budget,
                            int with_timing, char** report, int* verdict) {
  return guarded([&] {
    require(manifest_path, "manifest path");
    grpkit::VerifyOptions options;
    options.jobs = jobs;
    options.max_cosets = max_cosets;
    options.node_budget = node_budget;
    grpkit::VerificationReport r = grpkit::run_manifest(manifest_path, options);
    *report = copy_string(grpkit::render_report(r, with_timing != 0));
    *verdict = r.has_failures() ? 1 : r.has_errors() ? 2 : 0;
  });
}

grpkit_status grpkit_scenario_run(const char* name, uint64_t node_budget, unsigned jobs, char** report,
                                  int* passed) {
  return guarded([&] {
    require(name, "scenario name");
    grpkit::ScenarioOptions options;
    options.node_budget = node_budget;
    options.jobs = jobs;
    std::vector<std::string> names;
    if (std::string(name) == "all") {
      names = grpkit::scenario_names();
    } else {
      names.emplace_back(name);
    }
    std::string text;
    bool ok = true;
    for (std::string const& n : names) {
      grpkit::ScenarioResult r = grpkit::run_scenario(n, options);
      ok = ok && r.passed;
      text += grpkit::render_scenario(r);
    }
    *report = copy_string(text);
    *passed = ok ? 1 : 0;
  });
}

}  // extern "C"

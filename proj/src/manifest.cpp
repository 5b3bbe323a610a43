#include "grpkit/manifest.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "grpkit/arith.hpp"
#include "grpkit/errors.hpp"
#include "grpkit/int_matrix.hpp"
#include "grpkit/low_index.hpp"
#include "grpkit/quotients.hpp"
#include "grpkit/rewrite.hpp"

namespace grpkit {

using nlohmann::json;

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](CheckResult const& c) { return c.status == CheckStatus::Pass; });
}

bool VerificationReport::has_failures() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](CheckResult const& c) { return c.status == CheckStatus::Fail; });
}

bool VerificationReport::has_errors() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](CheckResult const& c) { return c.status == CheckStatus::Error; });
}

namespace {

using Records = std::vector<SubgroupClassRecord>;

struct GroupRef {
  std::string name;
  Presentation presentation;
};

// Low-index results shared between checks; each (group, index) query runs
// once even when several workers ask for it at the same time.
class RecordCache {
public:
  explicit RecordCache(VerifyOptions const& options) : options_(options) {}

  Records const& get(std::string const& key, Presentation const& p, std::size_t index) {
    std::shared_future<Records> future;
    std::promise<Records> promise;
    bool owner = false;
    {
      std::lock_guard lock(mutex_);
      auto it = entries_.find(key);
      if (it == entries_.end()) {
        future = promise.get_future().share();
        entries_.emplace(key, future);
        owner = true;
      } else {
        future = it->second;
      }
    }
    if (owner) {
      try {
        LowIndexOptions li;
        li.node_budget = options_.node_budget;
        promise.set_value(low_index_subgroups(p, index, index, li));
      } catch (...) {
        promise.set_exception(std::current_exception());
      }
    }
    return future.get();
  }

private:
  VerifyOptions options_;
  std::mutex mutex_;
  std::map<std::string, std::shared_future<Records>> entries_;
};

struct Check {
  std::string type;
  json spec;
  GroupRef group;
};

std::string field_string(json const& j, char const* key, std::size_t n) {
  if (!j.contains(key)) throw InvalidArgument("check #" + std::to_string(n) + ": missing field '" + key + "'");
  return j.at(key).get<std::string>();
}

template <typename T>
T field(json const& j, char const* key, std::size_t n) {
  if (!j.contains(key)) throw InvalidArgument("check #" + std::to_string(n) + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (json::exception const&) {
    throw InvalidArgument("check #" + std::to_string(n) + ": field '" + key + "' has the wrong type");
  }
}

IntegerMatrix matrix_field(json const& j, std::size_t n) {
  if (!j.contains("matrix")) throw InvalidArgument("check #" + std::to_string(n) + ": missing field 'matrix'");
  json const& m = j.at("matrix");
  if (m.is_string()) return parse_matrix(m.get<std::string>());
  std::vector<std::vector<mpz_class>> rows;
  for (json const& row : m) {
    std::vector<mpz_class> r;
    for (json const& v : row) {
      if (v.is_number_integer()) {
        r.emplace_back(std::to_string(v.get<long long>()));
      } else {
        r.emplace_back(v.get<std::string>());
      }
    }
    rows.push_back(std::move(r));
  }
  return IntegerMatrix::from_rows(rows);
}

mpz_class big_field(json const& j, char const* key, std::size_t n) {
  if (!j.contains(key)) throw InvalidArgument("check #" + std::to_string(n) + ": missing field '" + key + "'");
  json const& v = j.at(key);
  if (v.is_number_integer()) return mpz_class(std::to_string(v.get<long long>()));
  if (v.is_number_unsigned()) return mpz_class(std::to_string(v.get<unsigned long long>()));
  return mpz_class(v.get<std::string>());
}

GroupRef resolve_group(std::string const& ref, std::filesystem::path const& base_dir,
                       std::map<std::string, GroupRef>& seen) {
  auto it = seen.find(ref);
  if (it != seen.end()) return it->second;
  GroupRef g;
  g.name = ref;
  bool is_key = false;
  for (CatalogKey k : all_catalog_keys()) is_key = is_key || catalog_name(k) == ref;
  if (is_key) {
    g.presentation = catalog(ref);
  } else {
    std::filesystem::path path = std::filesystem::path(ref).is_absolute() ? std::filesystem::path(ref) : base_dir / ref;
    if (!std::filesystem::exists(path)) {
      throw InvalidArgument("unknown group '" + ref + "' (neither a catalog key nor a file)");
    }
    g.presentation = load_presentation_file(path.string());
  }
  seen.emplace(ref, g);
  return g;
}

std::string invariants_string(std::string const& text) { return render_invariants(parse_invariants(text)); }

std::string records_key(std::string const& group, std::size_t index) {
  return group + "|" + std::to_string(index);
}

SubgroupClassRecord const& pick_class(Records const& records, std::size_t ordinal, std::size_t n) {
  if (ordinal < 1 || ordinal > records.size()) {
    throw InvalidArgument("check #" + std::to_string(n) + ": class ordinal " + std::to_string(ordinal) +
                          " out of range (" + std::to_string(records.size()) + " classes)");
  }
  return records[ordinal - 1];
}

std::string join_multiset(std::vector<std::string> items) {
  std::sort(items.begin(), items.end());
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += items[i];
  }
  return out + "}";
}

std::string render_pattern(std::vector<PrimeFactor> factors) {
  std::sort(factors.begin(), factors.end());
  PrimeSplitting s;
  s.factors = std::move(factors);
  return render_splitting(s);
}

class Runner {
public:
  Runner(std::vector<Check> checks, VerifyOptions const& options)
      : checks_(std::move(checks)), options_(options), cache_(options) {}

  VerificationReport run() {
    VerificationReport report;
    report.checks.resize(checks_.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= checks_.size()) break;
        report.checks[i] = run_one(checks_[i], i + 1);
      }
    };
    unsigned jobs = std::max(1u, options_.jobs);
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> threads;
      for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(worker);
      for (auto& t : threads) t.join();
    }
    return report;
  }

private:
  CheckResult run_one(Check const& check, std::size_t n) {
    CheckResult r;
    r.type = check.type;
    auto start = std::chrono::steady_clock::now();
    try {
      evaluate(check, n, r);
      r.status = r.expected == r.actual ? CheckStatus::Pass : CheckStatus::Fail;
    } catch (std::exception const& e) {
      r.status = CheckStatus::Error;
      r.actual = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }

  Records const& records(Check const& c, std::size_t index) {
    return cache_.get(records_key(c.group.name, index), c.group.presentation, index);
  }

  void evaluate(Check const& c, std::size_t n, CheckResult& r) {
    json const& j = c.spec;
    std::string const& g = c.group.name;
    Presentation const& p = c.group.presentation;
    if (c.type == "LowIndexCount") {
      auto index = field<std::size_t>(j, "index", n);
      r.subject = g + " index " + std::to_string(index);
      r.expected = std::to_string(field<std::size_t>(j, "expected_classes", n));
      r.actual = std::to_string(records(c, index).size());
    } else if (c.type == "AqiOfGroup") {
      r.subject = g;
      r.expected = invariants_string(field_string(j, "expected_invariants", n));
      r.actual = render_invariants(abelian_invariants(p));
    } else if (c.type == "AqiOfClass") {
      auto index = field<std::size_t>(j, "index", n);
      auto ordinal = field<std::size_t>(j, "class_ordinal", n);
      r.subject = g + " index " + std::to_string(index) + " class " + std::to_string(ordinal);
      r.expected = invariants_string(field_string(j, "expected_invariants", n));
      SubgroupClassRecord const& rec = pick_class(records(c, index), ordinal, n);
      r.actual = render_invariants(subgroup_invariants(p, rec.representative));
    } else if (c.type == "NestedLowIndex") {
      auto outer = field<std::size_t>(j, "outer_index", n);
      auto ordinal = field<std::size_t>(j, "outer_class_ordinal", n);
      auto inner = field<std::size_t>(j, "inner_index", n);
      r.subject = g + " index " + std::to_string(outer) + " class " + std::to_string(ordinal) +
                  " / index " + std::to_string(inner);
      std::vector<std::string> expected;
      for (auto const& s : field<std::vector<std::string>>(j, "expected_invariants_multiset", n)) {
        expected.push_back(invariants_string(s));
      }
      r.expected = std::to_string(field<std::size_t>(j, "expected_classes", n)) + " classes " +
                   join_multiset(expected);
      SubgroupClassRecord const& rec = pick_class(records(c, outer), ordinal, n);
      Presentation h = subgroup_presentation(p, rec.representative);
      std::string key = records_key(g, outer) + "|" + std::to_string(ordinal);
      Records const& sub = cache_.get(records_key(key, inner), h, inner);
      std::vector<std::string> actual;
      for (SubgroupClassRecord const& s : sub) {
        actual.push_back(render_invariants(subgroup_invariants(h, s.representative)));
      }
      r.actual = std::to_string(sub.size()) + " classes " + join_multiset(actual);
    } else if (c.type == "CosetImageOrder") {
      auto index = field<std::size_t>(j, "index", n);
      auto ordinal = field<std::size_t>(j, "class_ordinal", n);
      r.subject = g + " index " + std::to_string(index) + " class " + std::to_string(ordinal);
      r.expected = big_field(j, "expected_order", n).get_str();
      SubgroupClassRecord const& rec = pick_class(records(c, index), ordinal, n);
      // The Schreier generators must enumerate back to the same index.
      EnumerationLimits limits;
      limits.max_cosets = options_.max_cosets;
      CosetTable again = enumerate_cosets(p, rec.generators_as_words, limits);
      if (again.n_cosets() != index) {
        r.actual = "coset enumeration gave index " + std::to_string(again.n_cosets());
        return;
      }
      r.actual = core_table(p, rec.representative).order().get_str();
    } else if (c.type == "SimpleCore") {
      auto index = field<std::size_t>(j, "index", n);
      auto ordinal = field<std::size_t>(j, "class_ordinal", n);
      r.subject = g + " index " + std::to_string(index) + " class " + std::to_string(ordinal);
      r.expected = field<bool>(j, "expected_simple", n) ? "simple" : "not simple";
      SubgroupClassRecord const& rec = pick_class(records(c, index), ordinal, n);
      r.actual = is_simple(core_table(p, rec.representative)) ? "simple" : "not simple";
    } else if (c.type == "MappingTorusH1") {
      IntegerMatrix m = matrix_field(j, n);
      auto power = field<unsigned long>(j, "power", n);
      r.subject = render_matrix(m) + " power " + std::to_string(power);
      r.expected = invariants_string(field_string(j, "expected_invariants", n));
      r.actual = render_invariants(mapping_torus_h1(m, power));
    } else if (c.type == "CharPoly") {
      IntegerMatrix m = matrix_field(j, n);
      r.subject = render_matrix(m);
      std::vector<mpz_class> expected;
      for (long long v : field<std::vector<long long>>(j, "expected_coeffs", n)) {
        expected.emplace_back(std::to_string(v));
      }
      r.expected = render_polynomial(expected);
      r.actual = render_polynomial(char_poly(m));
    } else if (c.type == "PrimeSplit") {
      FieldSpec f = parse_field(field_string(j, "field", n));
      auto prime = field<std::uint64_t>(j, "p", n);
      r.subject = f.label + " p=" + std::to_string(prime);
      std::vector<PrimeFactor> expected;
      for (auto const& ef : field<std::vector<std::vector<unsigned>>>(j, "expected_pattern", n)) {
        if (ef.size() != 2) throw InvalidArgument("check #" + std::to_string(n) + ": pattern entries are [e, f]");
        expected.push_back({ef[1], ef[0]});
      }
      r.expected = render_pattern(expected);
      r.actual = render_pattern(split_prime(f, prime).factors);
    } else if (c.type == "EpiClasses") {
      std::string target = field_string(j, "target", n);
      r.subject = g + " -> " + target;
      r.expected = std::to_string(field<std::size_t>(j, "expected_classes", n));
      std::optional<mpz_class> aut;
      if (j.contains("aut_order")) aut = big_field(j, "aut_order", n);
      r.actual = count_epimorphisms(p, builtin_target(target), aut).classes.get_str();
    }
  }

  std::vector<Check> checks_;
  VerifyOptions options_;
  RecordCache cache_;
};

bool needs_group(std::string const& type) {
  return type != "MappingTorusH1" && type != "CharPoly" && type != "PrimeSplit";
}

}  // namespace

VerificationReport run_manifest_text(std::string_view text, std::filesystem::path const& base_dir,
                                     VerifyOptions const& options) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (json::parse_error const& e) {
    throw ParseError(std::string("manifest is not valid JSON: ") + e.what(), 1, e.byte);
  }
  if (!doc.is_object() || !doc.contains("checks") || !doc.at("checks").is_array()) {
    throw ParseError("manifest needs a top-level \"checks\" array", 1, 1);
  }
  static std::map<std::string, std::vector<char const*>> const required = {
      {"LowIndexCount", {"index", "expected_classes"}},
      {"AqiOfClass", {"index", "class_ordinal", "expected_invariants"}},
      {"AqiOfGroup", {"expected_invariants"}},
      {"NestedLowIndex",
       {"outer_index", "outer_class_ordinal", "inner_index", "expected_classes", "expected_invariants_multiset"}},
      {"CosetImageOrder", {"index", "class_ordinal", "expected_order"}},
      {"SimpleCore", {"index", "class_ordinal", "expected_simple"}},
      {"MappingTorusH1", {"matrix", "power", "expected_invariants"}},
      {"CharPoly", {"matrix", "expected_coeffs"}},
      {"PrimeSplit", {"field", "p", "expected_pattern"}},
      {"EpiClasses", {"target", "expected_classes"}},
  };
  std::vector<Check> checks;
  std::map<std::string, GroupRef> seen;
  std::size_t n = 0;
  for (json const& item : doc.at("checks")) {
    ++n;
    if (!item.is_object() || !item.contains("type") || !item.at("type").is_string()) {
      throw InvalidArgument("check #" + std::to_string(n) + ": missing 'type'");
    }
    Check c;
    c.type = item.at("type").get<std::string>();
    auto fields = required.find(c.type);
    if (fields == required.end()) {
      throw InvalidArgument("check #" + std::to_string(n) + ": unknown type '" + c.type + "'");
    }
    for (char const* f : fields->second) {
      if (!item.contains(f)) {
        throw InvalidArgument("check #" + std::to_string(n) + ": missing field '" + f + "'");
      }
    }
    c.spec = item;
    if (needs_group(c.type)) c.group = resolve_group(field_string(item, "group", n), base_dir, seen);
    // Cheap references are resolved up front so typos fail before any work.
    if (c.type == "MappingTorusH1" || c.type == "CharPoly") (void)matrix_field(item, n);
    if (c.type == "PrimeSplit") (void)parse_field(field_string(item, "field", n));
    if (c.type == "EpiClasses") (void)builtin_target(field_string(item, "target", n));
    checks.push_back(std::move(c));
  }
  return Runner(std::move(checks), options).run();
}

VerificationReport run_manifest(std::filesystem::path const& path, VerifyOptions const& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open manifest '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return run_manifest_text(buffer.str(), path.parent_path(), options);
}

std::string render_report(VerificationReport const& report, bool with_timing) {
  std::string out;
  std::size_t passed = 0, failed = 0, errors = 0;
  for (std::size_t i = 0; i < report.checks.size(); ++i) {
    CheckResult const& c = report.checks[i];
    char const* tag = "ERROR";
    if (c.status == CheckStatus::Pass) {
      tag = "PASS ";
      ++passed;
    } else if (c.status == CheckStatus::Fail) {
      tag = "FAIL ";
      ++failed;
    } else {
      ++errors;
    }
    out += std::string(tag) + " #" + std::to_string(i + 1) + " " + c.type + " " + c.subject +
           ": expected " + c.expected + (c.status == CheckStatus::Error ? ", error: " : ", actual ") +
           c.actual;
    if (with_timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "  (%.3f s)", c.seconds);
      out += buf;
    }
    out += '\n';
  }
  out += std::to_string(report.checks.size()) + " checks: " + std::to_string(passed) + " passed, " +
         std::to_string(failed) + " failed, " + std::to_string(errors) + " errors\n";
  return out;
}

}  // namespace grpkit

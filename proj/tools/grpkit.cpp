// Command-line front end over the C API.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "grpkit/grpkit.h"

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct StringDeleter {
  void operator()(char* s) const { grpkit_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct PresentationDeleter {
  void operator()(grpkit_presentation* p) const { grpkit_presentation_free(p); }
};
struct SubgroupsDeleter {
  void operator()(grpkit_subgroups* s) const { grpkit_subgroups_free(s); }
};

// Thrown to unwind with an exit code after the message has been printed.
struct Exit {
  int code;
};

void check(grpkit_status status) {
  if (status == GRPKIT_OK) return;
  std::cerr << "grpkit: " << grpkit_last_error() << "\n";
  throw Exit{status == GRPKIT_RESOURCE_ERROR ? kExitResource
             : status == GRPKIT_INTERNAL_ERROR ? kExitCheckFailed
                                               : kExitUsage};
}

std::unique_ptr<grpkit_presentation, PresentationDeleter> load(std::string const& name) {
  grpkit_presentation* p = nullptr;
  check(grpkit_presentation_load(name.c_str(), &p));
  return std::unique_ptr<grpkit_presentation, PresentationDeleter>(p);
}

std::unique_ptr<grpkit_subgroups, SubgroupsDeleter> classes(grpkit_presentation const* p, std::size_t from,
                                                            std::size_t to, std::uint64_t budget, unsigned jobs) {
  grpkit_subgroups* s = nullptr;
  check(grpkit_low_index(p, from, to, budget, jobs, &s));
  return std::unique_ptr<grpkit_subgroups, SubgroupsDeleter>(s);
}

std::size_t class_position(grpkit_subgroups const* s, std::size_t k) {
  std::size_t n = grpkit_subgroups_count(s);
  if (k < 1 || k > n) {
    std::cerr << "grpkit: class " << k << " out of range (" << n << " classes)\n";
    throw Exit{kExitUsage};
  }
  return k - 1;
}

std::uint64_t default_node_budget() {
  std::uint64_t budget = 1000000000ull;
  if (char const* env = std::getenv("GRPKIT_NODE_BUDGET")) {
    try {
      std::size_t used = 0;
      std::string text = env;
      budget = std::stoull(text, &used);
      if (used != text.size() || budget == 0) throw std::invalid_argument("bad");
    } catch (std::exception const&) {
      std::cerr << "grpkit: GRPKIT_NODE_BUDGET must be a positive integer\n";
      throw Exit{kExitUsage};
    }
  }
  return budget;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finitely presented group toolkit", "grpkit"};
  app.require_subcommand(1);

  std::string file;
  std::size_t from = 1, to = 1, index = 1, klass = 1;
  bool class_sizes = false, simplify = false, want_order = false, want_simple = false, no_timing = false;
  std::string field, target, matrix, manifest, aut_order, scenario;
  std::uint64_t upto = 100, power = 1;
  std::uint64_t node_budget = 0;
  unsigned jobs = 1;
  std::size_t max_cosets = 1000000;

  auto* aqi = app.add_subcommand("aqi", "Abelian invariants of a group");
  aqi->add_option("file", file, "Presentation file or catalog key")->required();

  auto* low = app.add_subcommand("low-index", "Count conjugacy classes of subgroups by index");
  low->add_option("file", file, "Presentation file or catalog key")->required();
  low->add_option("--from", from, "Smallest index")->required()->check(CLI::PositiveNumber);
  low->add_option("--to", to, "Largest index")->required()->check(CLI::PositiveNumber);
  low->add_flag("--class-sizes", class_sizes, "List index and class size of each class");
  low->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  low->add_option("--node-budget", node_budget, "Search node budget")->check(CLI::PositiveNumber);

  auto* rewrite = app.add_subcommand("rewrite", "Presentation of a subgroup class");
  rewrite->add_option("file", file, "Presentation file or catalog key")->required();
  rewrite->add_option("--index", index, "Subgroup index")->required()->check(CLI::PositiveNumber);
  rewrite->add_option("--class", klass, "Class number, starting at 1")->required()->check(CLI::PositiveNumber);
  rewrite->add_flag("--simplify", simplify, "Apply Tietze simplification");
  rewrite->add_option("--node-budget", node_budget, "Search node budget")->check(CLI::PositiveNumber);

  auto* action = app.add_subcommand("coset-action", "Action of the generators on the cosets of a class");
  action->add_option("file", file, "Presentation file or catalog key")->required();
  action->add_option("--index", index, "Subgroup index")->required()->check(CLI::PositiveNumber);
  action->add_option("--class", klass, "Class number, starting at 1")->required()->check(CLI::PositiveNumber);
  action->add_flag("--order", want_order, "Print the order of the image");
  action->add_flag("--simple", want_simple, "Print whether the image is simple");
  action->add_option("--node-budget", node_budget, "Search node budget")->check(CLI::PositiveNumber);

  auto* split = app.add_subcommand("split-primes", "Factorization of rational primes in a number field");
  split->add_option("--field", field, "Qomega, Kweeks or a monic polynomial in x")->required();
  split->add_option("--upto", upto, "Largest prime")->required();

  auto* epi = app.add_subcommand("count-epi", "Count epimorphisms onto a small group");
  epi->add_option("file", file, "Presentation file or catalog key")->required();
  epi->add_option("--target", target, "A4, A5, S3, PSL27, Z2, Z3 or Z5")->required();
  epi->add_option("--aut-order", aut_order, "Order of the target's automorphism group");

  auto* torus = app.add_subcommand("mapping-torus", "First homology of a mapping torus");
  torus->add_option("--matrix", matrix, "Monodromy, e.g. [[-3,1],[-1,0]]")->required();
  torus->add_option("--power", power, "Power of the monodromy")->required()->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Run a verification manifest");
  verify->add_option("manifest", manifest, "Manifest file")->required();
  verify->add_option("--jobs", jobs, "Checks run in parallel")->check(CLI::PositiveNumber);
  verify->add_option("--max-cosets", max_cosets, "Coset enumeration limit")->check(CLI::PositiveNumber);
  verify->add_option("--node-budget", node_budget, "Search node budget")->check(CLI::PositiveNumber);
  verify->add_flag("--no-timing", no_timing, "Leave out timing fields");

  auto* scen = app.add_subcommand("scenario", "Named computations");
  scen->require_subcommand(1);
  auto* run = scen->add_subcommand("run", "Run a scenario");
  run->add_option("name", scenario, "Scenario name or 'all'")->required();
  run->add_option("--node-budget", node_budget, "Search node budget")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    std::uint64_t budget = node_budget ? node_budget : default_node_budget();
    if (aqi->parsed()) {
      auto p = load(file);
      char* out = nullptr;
      check(grpkit_abelian_invariants(p.get(), &out));
      std::cout << OwnedString(out).get() << "\n";
    } else if (low->parsed()) {
      auto p = load(file);
      auto s = classes(p.get(), from, to, budget, jobs);
      std::size_t n = grpkit_subgroups_count(s.get());
      std::cout << n << "\n";
      if (class_sizes) {
        for (std::size_t i = 0; i < n; ++i) {
          std::cout << "class " << i + 1 << ": index " << grpkit_subgroups_index(s.get(), i) << ", class size "
                    << grpkit_subgroups_class_size(s.get(), i) << "\n";
        }
      }
    } else if (rewrite->parsed()) {
      auto p = load(file);
      auto s = classes(p.get(), index, index, budget, 1);
      grpkit_presentation* h = nullptr;
      check(grpkit_subgroup_presentation(p.get(), s.get(), class_position(s.get(), klass), simplify, &h));
      std::unique_ptr<grpkit_presentation, PresentationDeleter> owned(h);
      char* out = nullptr;
      check(grpkit_presentation_render(h, &out));
      std::cout << OwnedString(out).get() << "\n";
    } else if (action->parsed()) {
      auto p = load(file);
      auto s = classes(p.get(), index, index, budget, 1);
      std::size_t pos = class_position(s.get(), klass);
      if (!want_order && !want_simple) {
        char* out = nullptr;
        check(grpkit_coset_action(s.get(), p.get(), pos, &out));
        std::cout << OwnedString(out).get();
      }
      if (want_order) {
        char* out = nullptr;
        check(grpkit_coset_image_order(s.get(), pos, &out));
        std::cout << "order: " << OwnedString(out).get() << "\n";
      }
      if (want_simple) {
        int simple = 0;
        check(grpkit_coset_image_is_simple(s.get(), pos, &simple));
        std::cout << "simple: " << (simple ? "true" : "false") << "\n";
      }
    } else if (split->parsed()) {
      for (std::uint64_t q = 2; q <= upto; ++q) {
        if (!grpkit_is_prime(q)) continue;
        char* out = nullptr;
        check(grpkit_split_prime(field.c_str(), q, &out));
        std::cout << q << ": " << OwnedString(out).get() << "\n";
      }
    } else if (epi->parsed()) {
      auto p = load(file);
      char *total = nullptr, *aut = nullptr, *cls = nullptr;
      check(grpkit_count_epimorphisms(p.get(), target.c_str(), aut_order.empty() ? nullptr : aut_order.c_str(),
                                      &total, &aut, &cls));
      OwnedString a(total), b(aut), c(cls);
      std::cout << "epimorphisms: " << a.get() << "\nautomorphisms: " << b.get() << "\nclasses: " << c.get()
                << "\n";
    } else if (torus->parsed()) {
      char* out = nullptr;
      check(grpkit_mapping_torus_h1(matrix.c_str(), power, &out));
      std::cout << OwnedString(out).get() << "\n";
    } else if (verify->parsed()) {
      char* out = nullptr;
      int verdict = 0;
      check(grpkit_verify(manifest.c_str(), jobs, max_cosets, budget, no_timing ? 0 : 1, &out, &verdict));
      std::cout << OwnedString(out).get();
      if (verdict == 1) return kExitCheckFailed;
      if (verdict == 2) return kExitResource;
    } else if (run->parsed()) {
      char* out = nullptr;
      int passed = 0;
      check(grpkit_scenario_run(scenario.c_str(), budget, 1, &out, &passed));
      std::cout << OwnedString(out).get();
      if (!passed) return kExitCheckFailed;
    }
  } catch (Exit const& e) {
    return e.code;
  }
  return 0;
}

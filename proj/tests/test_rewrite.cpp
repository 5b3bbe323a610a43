#include <doctest.h>

#include <set>

#include "grpkit/int_matrix.hpp"
#include "grpkit/low_index.hpp"
#include "grpkit/presentation.hpp"
#include "grpkit/rewrite.hpp"

using namespace grpkit;

namespace {

std::string invariants(Presentation const& p) { return render_invariants(abelian_invariants(p)); }

std::size_t subgroups_of_index(Presentation const& p, std::size_t n) {
  std::size_t total = 0;
  for (auto const& r : low_index_subgroups(p, n, n)) total += r.class_size;
  return total;
}

// Index-(m*n) subgroups of G inside the coset-0 stabilizer of h, counted
// over every conjugate of every class.
std::size_t contained_subgroups(Presentation const& g, CosetTable const& h, std::size_t index) {
  std::size_t total = 0;
  for (auto const& r : low_index_subgroups(g, index, index)) {
    std::set<std::vector<Coset>> seen;
    for (Coset c = 0; c < r.representative.n_cosets(); ++c) {
      CosetTable conj = standardize(r.representative, c);
      if (!seen.insert(conj.entries()).second) continue;
      bool inside = true;
      for (Word const& w : schreier_generators(conj)) inside = inside && h.trace(0, w) == 0;
      if (inside) ++total;
    }
  }
  return total;
}

}  // namespace

TEST_CASE("index-2 subgroup of Z") {
  Presentation z = parse_presentation("group<a | >");
  auto records = low_index_subgroups(z, 2, 2);
  REQUIRE(records.size() == 1);
  Presentation h = reidemeister_schreier(z, records[0].representative);
  CHECK(h.num_generators() == 1);
  CHECK(invariants(h) == "[ 0 ]");
}

TEST_CASE("Schreier data") {
  Presentation const& g = catalog(CatalogKey::Gamma);
  for (auto const& r : low_index_subgroups(g, 1, 10)) {
    CosetTable const& t = r.representative;
    SchreierData d = schreier_data(t);
    REQUIRE(d.transversal.size() == t.n_cosets());
    CHECK(d.transversal[0].empty());
    for (Coset c = 0; c < t.n_cosets(); ++c) {
      CHECK(t.trace(0, d.transversal[c]) == c);
      if (!d.transversal[c].empty()) {
        Word prefix(std::vector<Letter>(d.transversal[c].begin(), d.transversal[c].end() - 1));
        bool found = false;
        for (Word const& w : d.transversal) found = found || w == prefix;
        CHECK(found);
      }
    }
    for (Word const& w : d.subgroup_generators) {
      CHECK(t.trace(0, w) == 0);
      CHECK(free_reduce(w) == w);
      CHECK(!w.empty());
    }
  }
}

TEST_CASE("generator and relator counts scale with the index") {
  for (CatalogKey k : {CatalogKey::Gamma, CatalogKey::Lambda0, CatalogKey::GammaW}) {
    Presentation const& p = catalog(k);
    for (auto const& r : low_index_subgroups(p, 1, 8)) {
      CosetTable const& t = r.representative;
      SchreierData d = schreier_data(t);
      std::size_t n = t.n_cosets();
      CHECK(d.subgroup_generators.size() == n * (p.num_generators() - 1) + 1);
      CHECK(rewritten_relators(p, t, d).size() == n * p.relators().size());
    }
  }
}

TEST_CASE("index-3 subgroup of Gamma") {
  Presentation const& g = catalog(CatalogKey::Gamma);
  auto records = low_index_subgroups(g, 3, 3);
  REQUIRE(records.size() == 1);
  CHECK(invariants(reidemeister_schreier(g, records[0].representative)) == "[ 2, 2 ]");
  CHECK(render_invariants(subgroup_invariants(g, records[0].representative)) == "[ 2, 2 ]");
}

TEST_CASE("Tietze eliminates a generator given by a relator") {
  Presentation p = parse_presentation("group<a,b | b*a^-1, a^5>");
  Presentation s = tietze_simplify(p);
  CHECK(s.num_generators() == 1);
  CHECK(invariants(s) == "[ 5 ]");
}

TEST_CASE("Tietze preserves abelian invariants") {
  for (CatalogKey k : all_catalog_keys()) {
    Presentation const& p = catalog(k);
    CHECK(invariants(tietze_simplify(p)) == invariants(p));
    std::size_t hi = k == CatalogKey::GammaW ? 12 : 8;
    for (auto const& r : low_index_subgroups(p, 1, hi)) {
      Presentation raw = reidemeister_schreier(p, r.representative);
      for (unsigned effort : {1u, 3u, 6u}) {
        Presentation s = tietze_simplify(raw, effort);
        CHECK(s.num_generators() <= raw.num_generators());
        CHECK(invariants(s) == invariants(raw));
      }
    }
  }
}

TEST_CASE("index-1 rewrite") {
  Presentation const& g = catalog(CatalogKey::Lambda0);
  auto whole = low_index_subgroups(g, 1, 1);
  Presentation s = tietze_simplify(reidemeister_schreier(g, whole[0].representative));
  CHECK(invariants(s) == invariants(g));
}

TEST_CASE("Gamma_s rewrite") {
  Presentation const& g = catalog(CatalogKey::Gamma);
  auto records = low_index_subgroups(g, 12, 12);
  CosetTable const* gs = nullptr;
  for (auto const& r : records) {
    if (render_invariants(subgroup_invariants(g, r.representative)) == "[ 5, 0 ]") gs = &r.representative;
  }
  REQUIRE(gs != nullptr);
  Presentation raw = reidemeister_schreier(g, *gs);
  CHECK(raw.num_generators() == 25);
  Presentation s = tietze_simplify(raw);
  CHECK(s.num_generators() <= 25);
  CHECK(invariants(s) == "[ 5, 0 ]");
  CHECK(low_index_subgroups(s, 5, 5).size() == 8);
}

TEST_CASE("subgroup counts agree inside and outside a rewritten subgroup") {
  Presentation const& g = catalog(CatalogKey::Gamma);
  for (std::size_t n : {3u, 4u}) {
    for (auto const& r : low_index_subgroups(g, n, n)) {
      Presentation h = subgroup_presentation(g, r.representative);
      for (std::size_t m : {2u, 3u}) {
        CAPTURE(n);
        CAPTURE(m);
        CHECK(subgroups_of_index(h, m) == contained_subgroups(g, r.representative, n * m));
      }
    }
  }
}

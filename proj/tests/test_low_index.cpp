#include <doctest.h>

#include <algorithm>

#include "grpkit/errors.hpp"
#include "grpkit/low_index.hpp"
#include "grpkit/presentation.hpp"
#include "grpkit/rewrite.hpp"
#include "oracles.hpp"

using namespace grpkit;

namespace {

struct Finite {
  char const* name;
  char const* text;
  std::size_t degree;
  std::vector<oracle::Perm> images;
};

std::vector<Finite> finite_groups() {
  return {
      {"Z6", "group<a | a^6>", 6, {{1, 2, 3, 4, 5, 0}}},
      {"S3", "group<a,b | a^3, b^2, (a*b)^2>", 3, {{1, 2, 0}, {1, 0, 2}}},
      {"A4", "group<a,b | a^3, b^2, (a*b)^3>", 4, {{1, 2, 0, 3}, {1, 0, 3, 2}}},
      {"D6", "group<a,b | a^6, b^2, (a*b)^2>", 6, {{1, 2, 3, 4, 5, 0}, {0, 5, 4, 3, 2, 1}}},
  };
}

std::vector<oracle::ClassSummary> summarize(std::vector<SubgroupClassRecord> const& records) {
  std::vector<oracle::ClassSummary> out;
  for (auto const& r : records) out.push_back({r.index, r.class_size});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("finite groups against exhaustive subgroup enumeration") {
  for (Finite const& f : finite_groups()) {
    CAPTURE(f.name);
    Presentation p = parse_presentation(f.text);
    auto group = oracle::closure(f.degree, f.images);
    auto expected = oracle::subgroup_classes(f.degree, group);
    auto records = low_index_subgroups(p, 1, group.size());
    CHECK(summarize(records) == expected);

    // Total subgroups per index, summed over classes.
    std::map<std::size_t, std::size_t> total, brute;
    for (auto const& r : records) total[r.index] += r.class_size;
    for (auto const& h : oracle::subgroups(f.degree, group)) ++brute[group.size() / h.size()];
    CHECK(total == brute);
  }
}

TEST_CASE("records are sorted, canonical and consistent") {
  Presentation const& g = catalog(CatalogKey::Gamma);
  auto records = low_index_subgroups(g, 1, 12);
  for (std::size_t i = 0; i < records.size(); ++i) {
    auto const& r = records[i];
    CHECK(r.index == r.representative.n_cosets());
    CHECK(r.class_size == normalizer_index(g, r.representative));
    CHECK(r.index % r.class_size == 0);
    CHECK(canonical_table(r.representative) == r.representative);
    CHECK(core_table(g, r.representative).is_transitive());
    if (i > 0) CHECK(records[i - 1].representative < r.representative);
  }
}

TEST_CASE("index 1 gives the whole group") {
  for (CatalogKey k : all_catalog_keys()) {
    auto records = low_index_subgroups(catalog(k), 1, 1);
    REQUIRE(records.size() == 1);
    CHECK(records[0].class_size == 1);
    CHECK(records[0].index == 1);
  }
}

TEST_CASE("Gamma small indices") {
  Presentation const& g = catalog(CatalogKey::Gamma);
  CHECK(low_index_subgroups(g, 7, 7).size() == 4);
  CHECK(low_index_subgroups(g, 2, 2).empty());
  auto three = low_index_subgroups(g, 3, 3);
  REQUIRE(three.size() == 1);
  CHECK(normalizer_index(g, three[0].representative) == 1);
  CHECK(core_table(g, three[0].representative).order() == 3);
  auto four = low_index_subgroups(g, 4, 4);
  REQUIRE(four.size() == 1);
  CHECK(4 % normalizer_index(g, four[0].representative) == 0);
}

TEST_CASE("normalizer index in A4") {
  Presentation a4 = parse_presentation("group<a,b | a^3, b^2, (a*b)^3>");
  CosetTable t = standardize(enumerate_cosets(a4, {Word::generator(0)}));
  CHECK(normalizer_index(a4, t) == 4);
  CosetTable v = standardize(enumerate_cosets(a4, {Word::generator(1), Word{0, 2, 1}}));
  CHECK(v.n_cosets() == 3);
  CHECK(normalizer_index(a4, v) == 1);
}

TEST_CASE("index-7 counts of two extensions") {
  CHECK(low_index_subgroups(catalog(CatalogKey::Lambda2), 7, 7).empty());
  CHECK(low_index_subgroups(catalog(CatalogKey::GammaXC2), 7, 7).size() == 4);
}

TEST_CASE("output does not depend on the number of jobs") {
  for (CatalogKey k : {CatalogKey::Gamma, CatalogKey::Lambda0, CatalogKey::GammaW}) {
    Presentation const& p = catalog(k);
    std::size_t hi = k == CatalogKey::GammaW ? 10 : 9;
    auto one = low_index_subgroups(p, 1, hi, LowIndexOptions{1000000000ull, 1});
    auto four = low_index_subgroups(p, 1, hi, LowIndexOptions{1000000000ull, 4});
    REQUIRE(one.size() == four.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
      CHECK(one[i].representative == four[i].representative);
      CHECK(one[i].class_size == four[i].class_size);
      CHECK(one[i].generators_as_words == four[i].generators_as_words);
    }
  }
}

TEST_CASE("generator order does not change the class data") {
  Presentation const& g = catalog(CatalogKey::Gamma);
  Presentation swapped = parse_presentation(
      "group<z,y,x | x^3, y^2, z^2, (y*x^-1)^3, (z*x^-1)^3, (y*z)^3>");
  auto data = [](Presentation const& p) {
    std::vector<std::tuple<std::size_t, std::size_t, std::string>> out;
    for (auto const& r : low_index_subgroups(p, 1, 9)) {
      out.emplace_back(r.index, r.class_size, render_invariants(subgroup_invariants(p, r.representative)));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  CHECK(data(g) == data(swapped));
}

TEST_CASE("budget and range errors") {
  Presentation const& g = catalog(CatalogKey::Gamma);
  CHECK_THROWS_AS(low_index_subgroups(g, 1, 12, LowIndexOptions{10, 1}), BudgetExceeded);
  CHECK_THROWS_AS(low_index_subgroups(g, 0, 3), InvalidArgument);
  CHECK_THROWS_AS(low_index_subgroups(g, 5, 3), InvalidArgument);
  LowIndexStats stats;
  low_index_subgroups(g, 1, 6, {}, &stats);
  CHECK(stats.nodes > 0);
}

#include <doctest.h>

#include "grpkit/arith.hpp"
#include "grpkit/errors.hpp"
#include "oracles.hpp"

using namespace grpkit;

namespace {

long eval_mod(std::vector<long> const& f, long x, long p) {
  long v = 0;
  for (long c : f) v = ((v * x + c) % p + p) % p;
  return v;
}

std::vector<long> roots_mod(std::vector<long> const& f, long p) {
  std::vector<long> out;
  for (long x = 0; x < p; ++x) {
    if (eval_mod(f, x, p) == 0) out.push_back(x);
  }
  return out;
}

unsigned count_degree_one(PrimeSplitting const& s) {
  unsigned n = 0;
  for (auto const& f : s.factors) n += f.residue_degree == 1 ? 1 : 0;
  return n;
}

}  // namespace

TEST_CASE("primality") {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t n = 0; n < 200; ++n) {
    if (is_prime(n)) primes.push_back(n);
  }
  CHECK(primes.size() == 46);
  CHECK(primes.front() == 2);
  CHECK(is_prime(1000003));
  CHECK_FALSE(is_prime(1000001));
}

TEST_CASE("field parsing and discriminants") {
  CHECK(builtin_field("Qomega").min_poly == std::vector<long>{1, 1, 1});
  CHECK(builtin_field("Kweeks").min_poly == std::vector<long>{1, -1, 0, 1});
  CHECK(parse_field("x^3-x^2+1").min_poly == std::vector<long>{1, -1, 0, 1});
  CHECK(parse_field("x^2 + x + 1").min_poly == std::vector<long>{1, 1, 1});
  CHECK(discriminant(builtin_field("Qomega")) == -3);
  CHECK(discriminant(builtin_field("Kweeks")) == -23);
  CHECK(discriminant(parse_field("x^2+1")) == -4);
  CHECK_THROWS_AS(parse_field("Qfoo"), ParseError);
  CHECK_THROWS_AS(parse_field("2x^2+1"), InvalidArgument);
}

TEST_CASE("splitting in Q(omega) follows p mod 6") {
  FieldSpec q = builtin_field("Qomega");
  for (std::uint64_t p = 2; p <= 1000; ++p) {
    if (!is_prime(p)) continue;
    CAPTURE(p);
    PrimeSplitting s = split_prime(q, p);
    std::vector<PrimeFactor> expected;
    if (p == 3) expected = {{1, 2}};
    else if (p % 6 == 1) expected = {{1, 1}, {1, 1}};
    else expected = {{2, 1}};
    CHECK(s.factors == expected);
    CongruenceQuotient c = bianchi_quotient_catalog(p);
    REQUIRE(c.targets.size() == 1);
    if (p % 6 == 1) {
      CHECK(c.targets[0].q == p);
      CHECK(c.targets[0].multiplicity == 2);
    } else if (p == 3) {
      CHECK(c.targets[0].q == 3);
      CHECK(c.targets[0].multiplicity == 1);
    } else {
      CHECK(c.targets[0].q == p * p);
      CHECK(c.targets[0].multiplicity == 1);
    }
  }
}

TEST_CASE("splitting invariants in the cubic field") {
  FieldSpec k = builtin_field("Kweeks");
  for (std::uint64_t p = 2; p <= 1000; ++p) {
    if (!is_prime(p)) continue;
    CAPTURE(p);
    PrimeSplitting s = split_prime(k, p);
    unsigned sum = 0;
    bool ramified = false;
    for (auto const& f : s.factors) {
      sum += f.residue_degree * f.ramification;
      ramified = ramified || f.ramification > 1;
    }
    CHECK(sum == 3);
    CHECK(ramified == (p == 23));
    CHECK(count_degree_one(s) == roots_mod(k.min_poly, static_cast<long>(p)).size());
  }
}

TEST_CASE("the two primes of norm 23 and the split at 5") {
  FieldSpec k = builtin_field("Kweeks");
  CHECK(split_prime(k, 23).factors == std::vector<PrimeFactor>{{1, 1}, {1, 2}});
  CHECK(render_splitting(split_prime(k, 23)) == "(1,1) (2,1)");
  CHECK(split_prime(k, 5).factors == std::vector<PrimeFactor>{{1, 1}, {2, 1}});

  auto r23 = roots_mod(k.min_poly, 23);
  REQUIRE(r23.size() == 2);
  int double_roots = 0;
  for (long r : r23) {
    std::vector<long> square{1, -2 * r, r * r};
    if (oracle::poly_mod(k.min_poly, square, 23).empty()) ++double_roots;
  }
  CHECK(double_roots == 1);

  auto r5 = roots_mod(k.min_poly, 5);
  REQUIRE(r5.size() == 1);
  std::vector<long> linear{1, -r5[0]};
  CHECK(oracle::poly_mod(k.min_poly, linear, 5).empty());
  std::vector<long> square{1, -2 * r5[0], r5[0] * r5[0]};
  CHECK_FALSE(oracle::poly_mod(k.min_poly, square, 5).empty());
}

TEST_CASE("split_prime errors") {
  CHECK_THROWS_AS(split_prime(builtin_field("Qomega"), 9), NotPrime);
  CHECK_THROWS_AS(split_prime(parse_field("x^2+4"), 5), NonSquarefreeDiscriminant);
}

TEST_CASE("PSL(2,q) orders") {
  CHECK(psl2_order(23) == 6072);
  CHECK(psl2_order(23) == mpz_class(23 * 24 * 22 / 2));
  CHECK(psl2_order(7) == 168);
  CHECK(psl2_order(5) == 60);
  CHECK(psl2_order(4) == 60);
  CHECK(psl2_order(9) == 360);
  CHECK(psl2_order(3) == 12);
  CHECK_THROWS_AS(psl2_order(6), InvalidArgument);
}

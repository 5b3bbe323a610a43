#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace grpkit {

struct FieldSpec {
  // Monic, highest degree first: x^3 - x^2 + 1 is {1, -1, 0, 1}.
  std::vector<long> min_poly;
  std::string label;

  std::size_t degree() const noexcept { return min_poly.empty() ? 0 : min_poly.size() - 1; }
};

// Built-in fields "Qomega" (x^2 + x + 1) and "Kweeks" (x^3 - x^2 + 1).
FieldSpec builtin_field(std::string_view label);
// A built-in label, or a polynomial such as "x^3-x^2+1".
FieldSpec parse_field(std::string_view text);

mpz_class discriminant(FieldSpec const& f);

struct PrimeFactor {
  unsigned residue_degree = 0;  // f
  unsigned ramification = 0;    // e
  friend bool operator==(PrimeFactor const&, PrimeFactor const&) = default;
  friend auto operator<=>(PrimeFactor const&, PrimeFactor const&) = default;
};

struct PrimeSplitting {
  std::uint64_t p = 0;
  // Sorted by (f, e).
  std::vector<PrimeFactor> factors;
};

bool is_prime(std::uint64_t n);

// Factorization pattern of the minimal polynomial mod p. Supports degree <= 3.
// Throws NotPrime and NonSquarefreeDiscriminant.
PrimeSplitting split_prime(FieldSpec const& f, std::uint64_t p);

// "(e,f) (e,f) ..." in the stored order.
std::string render_splitting(PrimeSplitting const& s);

struct QuotientTarget {
  mpz_class q;
  unsigned multiplicity = 0;
};

struct CongruenceQuotient {
  std::uint64_t p = 0;
  std::vector<QuotientTarget> targets;
};

// Congruence quotients PSL(2, F_q) of PSL(2, Z[omega]) at p, read off the
// splitting of p in Q(omega).
CongruenceQuotient bianchi_quotient_catalog(std::uint64_t p);

// |PSL(2, F_q)|; throws InvalidArgument unless q is a prime power.
mpz_class psl2_order(std::uint64_t q);

}  // namespace grpkit

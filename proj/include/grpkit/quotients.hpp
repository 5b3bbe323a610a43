#pragma once

#include <gmpxx.h>

#include <optional>
#include <string_view>

#include "grpkit/perm_group.hpp"
#include "grpkit/presentation.hpp"

namespace grpkit {

inline constexpr std::size_t kMaxTargetOrder = 10000;
inline constexpr std::size_t kMaxAutTargetOrder = 200;

struct EpiCount {
  mpz_class total;       // surjective homomorphisms
  mpz_class aut_order;   // |Aut(q)|
  mpz_class classes;     // total / aut_order
};

struct HomSearchOptions {
  // Restrict generator images by the orders forced by power relators.
  bool order_pruning = true;
};

// Tuples of generator images in q that satisfy every relator of p. Throws
// BudgetExceeded when |q| exceeds kMaxTargetOrder.
mpz_class count_homomorphisms(Presentation const& p, PermutationGroup const& q,
                              HomSearchOptions const& options = {});

// Surjective homomorphisms onto q, grouped into Aut(q)-orbits. Without
// aut_order the automorphism group is enumerated, which needs
// |q| <= kMaxAutTargetOrder. Throws NonDivisible if the orbits do not come out
// even.
EpiCount count_epimorphisms(Presentation const& p, PermutationGroup const& q,
                            std::optional<mpz_class> aut_order = std::nullopt,
                            HomSearchOptions const& options = {});

// |Aut(q)| by extending generator maps over the Cayley graph.
mpz_class automorphism_group_order(PermutationGroup const& q);

// A4, A5, S3, PSL27 (on the projective line over F7), Z2, Z3, Z5.
PermutationGroup builtin_target(std::string_view name);

}  // namespace grpkit

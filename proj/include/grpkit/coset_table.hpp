#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grpkit/perm_group.hpp"
#include "grpkit/presentation.hpp"
#include "grpkit/word.hpp"

namespace grpkit {

using Coset = std::uint32_t;

// Closed coset table of a finite-index subgroup. Row c, column l holds c·l,
// with columns ordered g0, g0^-1, g1, g1^-1, ... (the Letter encoding).
class CosetTable {
public:
  CosetTable() = default;
  // Takes ownership of a row-major table; throws InvalidArgument unless the
  // table is closed and each column pair is mutually inverse.
  CosetTable(std::size_t n_generators, std::size_t n_cosets, std::vector<Coset> entries,
             std::vector<Word> subgroup_generators = {});

  std::size_t n_cosets() const noexcept { return n_cosets_; }
  std::size_t n_generators() const noexcept { return n_generators_; }
  std::size_t n_columns() const noexcept { return 2 * n_generators_; }
  std::vector<Word> const& subgroup_generators() const noexcept { return subgroup_generators_; }
  std::vector<Coset> const& entries() const noexcept { return entries_; }

  Coset operator()(Coset c, Letter l) const { return entries_[c * n_columns() + l]; }
  Coset trace(Coset c, Word const& w) const;

  bool relators_hold(Presentation const& p) const;
  bool subgroup_generators_hold() const;
  bool is_standard() const;

  // Permutation of the cosets induced by generator g.
  Permutation generator_permutation(std::uint32_t g) const;

  friend bool operator==(CosetTable const& a, CosetTable const& b) {
    return a.n_generators_ == b.n_generators_ && a.n_cosets_ == b.n_cosets_ &&
           a.entries_ == b.entries_;
  }
  // Lexicographic on (n_cosets, entries).
  friend bool operator<(CosetTable const& a, CosetTable const& b);

private:
  std::size_t n_generators_ = 0;
  std::size_t n_cosets_ = 0;
  std::vector<Coset> entries_;
  std::vector<Word> subgroup_generators_;
};

struct EnumerationLimits {
  std::size_t max_cosets = 1000000;
};

// Todd-Coxeter (HLT with lookahead). Throws LimitExceeded when more than
// max_cosets live cosets would be needed and InvalidArgument for words that
// use generators outside p.
CosetTable enumerate_cosets(Presentation const& p, std::vector<Word> const& subgroup_generators,
                            EnumerationLimits const& limits = {});

// Renumbers cosets in order of first appearance in a row-major scan starting
// from `base`. With base 0 this is the canonical form; other bases give the
// table of the conjugate stabilizer of `base`.
CosetTable standardize(CosetTable const& t, Coset base = 0);

PermutationGroup coset_action(CosetTable const& t);

std::string render_table(CosetTable const& t);

}  // namespace grpkit

#pragma once

#include <vector>

#include "grpkit/coset_table.hpp"
#include "grpkit/int_matrix.hpp"
#include "grpkit/presentation.hpp"

namespace grpkit {

struct SchreierData {
  // Schreier representative of each coset; coset 0 maps to the empty word.
  std::vector<Word> transversal;
  // Nontrivial Schreier generators rep(c)·g·rep(c·g)^-1, freely reduced.
  std::vector<Word> subgroup_generators;
  // generator_index[c * n_generators + g]: position of the Schreier generator
  // for (c, g) in subgroup_generators, or -1 when it is trivial.
  std::vector<int> generator_index;
};

// Transversal from the first-appearance definitions of the table.
SchreierData schreier_data(CosetTable const& t);

std::vector<Word> schreier_generators(CosetTable const& t);

// Rewritten relators for every (coset, relator) pair, in that order, before
// empty words are dropped. Letters refer to the Schreier generators.
std::vector<Word> rewritten_relators(Presentation const& p, CosetTable const& t,
                                     SchreierData const& data);

// Presentation of the stabilizer of coset 0 on its Schreier generators,
// named s1, s2, ...
Presentation reidemeister_schreier(Presentation const& p, CosetTable const& t);

inline constexpr unsigned kDefaultTietzeEffort = 3;

// Tietze simplification: free and cyclic reduction, removal of trivial and
// duplicate relators, and elimination of generators that occur exactly once
// in some relator. Higher effort tolerates more length growth.
Presentation tietze_simplify(Presentation const& p, unsigned effort = kDefaultTietzeEffort);

// Simplified presentation of the coset-0 stabilizer and its abelian invariants.
Presentation subgroup_presentation(Presentation const& p, CosetTable const& t);
AbelianInvariants subgroup_invariants(Presentation const& p, CosetTable const& t);

}  // namespace grpkit

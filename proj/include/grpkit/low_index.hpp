#pragma once

#include <cstdint>
#include <vector>

#include "grpkit/coset_table.hpp"
#include "grpkit/perm_group.hpp"
#include "grpkit/presentation.hpp"

namespace grpkit {

struct SubgroupClassRecord {
  CosetTable representative;  // canonical: least standardized table in its class
  std::size_t index = 0;
  std::size_t class_size = 0;  // number of conjugates, [G : N_G(H)]
  std::vector<Word> generators_as_words;  // Schreier generators
};

struct LowIndexOptions {
  // Cap on the number of partial tables the search accepts (search-tree
  // nodes); rejected definitions are not counted.
  std::uint64_t node_budget = 1000000000ull;
  // Worker threads; results do not depend on this.
  unsigned jobs = 1;
};

struct LowIndexStats {
  std::uint64_t nodes = 0;
};

// One record per conjugacy class of subgroups with index in [n_min, n_max],
// sorted by (index, table). Throws BudgetExceeded when the node budget runs
// out and InvalidArgument for a bad range.
std::vector<SubgroupClassRecord> low_index_subgroups(Presentation const& p, std::size_t n_min,
                                                     std::size_t n_max,
                                                     LowIndexOptions const& options = {},
                                                     LowIndexStats* stats = nullptr);

// [G : N_G(H)] for H the stabilizer of coset 0.
std::size_t normalizer_index(Presentation const& p, CosetTable const& t);

// Image of G acting on the cosets; its kernel is the normal core of H.
PermutationGroup core_table(Presentation const& p, CosetTable const& t);

// The lexicographically least table among all base-point relabelings.
CosetTable canonical_table(CosetTable const& t);

}  // namespace grpkit

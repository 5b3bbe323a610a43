#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

namespace grpkit {

using Point = std::uint32_t;

// Bijection of {0, ..., n-1}. Acts on the right: (p * q)(x) = q(p(x)).
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<Point> images);  // throws InvalidArgument
  static Permutation identity(std::size_t degree);
  // From disjoint cycles, e.g. {{0, 1, 2}, {3, 4}}.
  static Permutation from_cycles(std::size_t degree, std::vector<std::vector<Point>> const& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  std::span<Point const> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  mpz_class order() const;
  bool is_even() const;
  // Smallest moved point, or degree() for the identity.
  Point first_moved_point() const noexcept;

  friend Permutation operator*(Permutation const& a, Permutation const& b);
  friend bool operator==(Permutation const&, Permutation const&) = default;
  friend auto operator<=>(Permutation const&, Permutation const&) = default;

private:
  std::vector<Point> images_;
};

// Cycle notation; the identity renders as "()".
std::string to_cycle_string(Permutation const& p);

struct PermutationHash {
  std::size_t operator()(Permutation const& p) const noexcept;
};

// Stabilizer chain built by deterministic Schreier-Sims with base points
// chosen as smallest moved points.
class StabilizerChain {
public:
  struct Level {
    Point base_point;
    std::vector<Permutation> generators;
    // transversal[x] maps base_point to x; empty when x is outside the orbit.
    std::vector<Permutation> transversal;
    std::vector<Point> orbit;
  };

  explicit StabilizerChain(std::size_t degree);

  // Adds g to the group; returns false if g was already a member.
  bool add_generator(Permutation const& g);
  bool contains(Permutation const& g) const;
  // Residue of g after sifting and the depth where sifting stopped.
  Permutation sift(Permutation g, std::size_t* depth = nullptr) const;

  mpz_class order() const;
  std::vector<Level> const& levels() const noexcept { return levels_; }
  std::vector<Point> base() const;

private:
  void extend(std::size_t level, Permutation const& g);
  void extend_orbit(Level& level);

  std::size_t degree_;
  std::vector<Level> levels_;
};

class PermutationGroup {
public:
  PermutationGroup(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const noexcept { return degree_; }
  std::vector<Permutation> const& generators() const noexcept { return generators_; }

  mpz_class order() const;
  bool contains(Permutation const& p) const;  // throws InvalidArgument on degree mismatch
  bool is_transitive() const;
  std::vector<Point> orbit(Point x) const;
  StabilizerChain const& chain() const;

  // All elements; throws BudgetExceeded if the order exceeds the budget.
  std::vector<Permutation> elements(std::size_t budget) const;

private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  struct ChainCache {
    std::once_flag once;
    std::unique_ptr<StabilizerChain> chain;
  };
  std::shared_ptr<ChainCache> cache_ = std::make_shared<ChainCache>();
};

PermutationGroup normal_closure(PermutationGroup const& g, std::vector<Permutation> const& seeds);

inline constexpr std::size_t kDefaultElementBudget = 100000;

// Exhaustive test: every nonidentity conjugacy class has normal closure equal
// to g. Throws BudgetExceeded when order(g) > element_budget.
bool is_simple(PermutationGroup const& g, std::size_t element_budget = kDefaultElementBudget);

// Symmetric and alternating groups and a few small targets used for testing.
PermutationGroup symmetric_group(std::size_t n);
PermutationGroup alternating_group(std::size_t n);

}  // namespace grpkit

#include "grpkit/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "grpkit/errors.hpp"

namespace grpkit {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) throw InvalidArgument("images do not form a permutation");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::vector<std::vector<Point>> const& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (auto const& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point x = cycle[i];
      if (x >= degree || used[x]) throw InvalidArgument("cycles are not disjoint or out of range");
      used[x] = true;
      images[x] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (Point i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (Point i = 0; i < images_.size(); ++i) out.images_[images_[i]] = i;
  return out;
}

namespace {

template <typename F>
void for_each_cycle(std::span<Point const> images, F&& f) {
  std::vector<bool> seen(images.size(), false);
  for (Point start = 0; start < images.size(); ++start) {
    if (seen[start]) continue;
    std::vector<Point> cycle;
    for (Point x = start; !seen[x]; x = images[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    f(cycle);
  }
}

}  // namespace

mpz_class Permutation::order() const {
  mpz_class result = 1;
  for_each_cycle(images_, [&](std::vector<Point> const& cycle) {
    mpz_class len = static_cast<unsigned long>(cycle.size());
    mpz_lcm(result.get_mpz_t(), result.get_mpz_t(), len.get_mpz_t());
  });
  return result;
}

bool Permutation::is_even() const {
  std::size_t transpositions = 0;
  for_each_cycle(images_, [&](std::vector<Point> const& cycle) { transpositions += cycle.size() - 1; });
  return transpositions % 2 == 0;
}

Point Permutation::first_moved_point() const noexcept {
  for (Point i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return i;
  }
  return static_cast<Point>(images_.size());
}

Permutation operator*(Permutation const& a, Permutation const& b) {
  if (a.degree() != b.degree()) throw InvalidArgument("permutation degree mismatch");
  Permutation out;
  out.images_.resize(a.degree());
  for (Point i = 0; i < a.degree(); ++i) out.images_[i] = b.images_[a.images_[i]];
  return out;
}

std::string to_cycle_string(Permutation const& p) {
  std::string out;
  for_each_cycle(p.images(), [&](std::vector<Point> const& cycle) {
    if (cycle.size() < 2) return;
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  });
  return out.empty() ? "()" : out;
}

std::size_t PermutationHash::operator()(Permutation const& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

// StabilizerChain

StabilizerChain::StabilizerChain(std::size_t degree) : degree_(degree) {}

void StabilizerChain::extend_orbit(Level& level) {
  // Breadth-first closure of the orbit under the current level generators.
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    Point x = level.orbit[i];
    for (Permutation const& s : level.generators) {
      Point y = s[x];
      if (level.transversal[y].degree() == 0) {
        level.transversal[y] = level.transversal[x] * s;
        level.orbit.push_back(y);
      }
    }
  }
}

Permutation StabilizerChain::sift(Permutation g, std::size_t* depth) const {
  std::size_t i = 0;
  for (; i < levels_.size(); ++i) {
    Level const& level = levels_[i];
    Point image = g[level.base_point];
    if (level.transversal[image].degree() == 0) break;
    g = g * level.transversal[image].inverse();
  }
  if (depth) *depth = i;
  return g;
}

void StabilizerChain::extend(std::size_t index, Permutation const& g) {
  if (index == levels_.size()) {
    Level level;
    level.base_point = g.first_moved_point();
    level.transversal.resize(degree_);
    level.transversal[level.base_point] = Permutation::identity(degree_);
    level.orbit.push_back(level.base_point);
    levels_.push_back(std::move(level));
  }
  levels_[index].generators.push_back(g);
  extend_orbit(levels_[index]);

  // Every Schreier generator of this level must lie in the next stabilizer.
  // Recursion only touches deeper levels, so one sweep over this level's
  // orbit and generators suffices; the sizes are re-read as the loop runs.
  for (std::size_t oi = 0; oi < levels_[index].orbit.size(); ++oi) {
    for (std::size_t gi = 0; gi < levels_[index].generators.size(); ++gi) {
      Level const& level = levels_[index];
      Point x = level.orbit[oi];
      Permutation const& s = level.generators[gi];
      Permutation h = level.transversal[x] * s * level.transversal[s[x]].inverse();
      for (std::size_t i = index + 1; i < levels_.size() && !h.is_identity(); ++i) {
        Point image = h[levels_[i].base_point];
        if (levels_[i].transversal[image].degree() == 0) break;
        h = h * levels_[i].transversal[image].inverse();
      }
      if (!h.is_identity()) extend(index + 1, h);
    }
  }
}

bool StabilizerChain::add_generator(Permutation const& g) {
  if (g.degree() != degree_) throw InvalidArgument("permutation degree mismatch");
  Permutation residue = sift(g);
  if (residue.is_identity()) return false;
  // The whole group grows, so the generator is added at the top level.
  extend(0, g);
  return true;
}

bool StabilizerChain::contains(Permutation const& g) const {
  if (g.degree() != degree_) throw InvalidArgument("permutation degree mismatch");
  return sift(g).is_identity();
}

mpz_class StabilizerChain::order() const {
  mpz_class result = 1;
  for (Level const& level : levels_) result *= static_cast<unsigned long>(level.orbit.size());
  return result;
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> out;
  for (Level const& level : levels_) out.push_back(level.base_point);
  return out;
}

// PermutationGroup

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree == 0) throw InvalidArgument("permutation group degree must be positive");
  for (Permutation const& g : generators_) {
    if (g.degree() != degree) throw InvalidArgument("generator degree mismatch");
  }
}

StabilizerChain const& PermutationGroup::chain() const {
  std::call_once(cache_->once, [this] {
    auto chain = std::make_unique<StabilizerChain>(degree_);
    for (Permutation const& g : generators_) {
      if (!g.is_identity()) chain->add_generator(g);
    }
    cache_->chain = std::move(chain);
  });
  return *cache_->chain;
}

mpz_class PermutationGroup::order() const { return chain().order(); }

bool PermutationGroup::contains(Permutation const& p) const {
  if (p.degree() != degree_) throw InvalidArgument("permutation degree mismatch");
  return chain().contains(p);
}

std::vector<Point> PermutationGroup::orbit(Point x) const {
  std::vector<bool> seen(degree_, false);
  std::vector<Point> out{x};
  seen[x] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Permutation const& g : generators_) {
      Point y = g[out[i]];
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  return out;
}

bool PermutationGroup::is_transitive() const { return orbit(0).size() == degree_; }

std::vector<Permutation> PermutationGroup::elements(std::size_t budget) const {
  mpz_class n = order();
  if (n > static_cast<unsigned long>(budget)) {
    throw BudgetExceeded("group order " + n.get_str() + " exceeds element budget " +
                         std::to_string(budget));
  }
  // g = u_{k-1} ... u_1 u_0 with u_i from the i-th transversal.
  std::vector<Permutation> out{Permutation::identity(degree_)};
  auto const& levels = chain().levels();
  for (std::size_t i = levels.size(); i-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(out.size() * levels[i].orbit.size());
    for (Permutation const& g : out) {
      for (Point x : levels[i].orbit) next.push_back(g * levels[i].transversal[x]);
    }
    out = std::move(next);
  }
  return out;
}

PermutationGroup normal_closure(PermutationGroup const& g, std::vector<Permutation> const& seeds) {
  StabilizerChain chain(g.degree());
  std::vector<Permutation> gens;
  for (Permutation const& s : seeds) {
    if (s.degree() != g.degree()) throw InvalidArgument("seed degree mismatch");
    if (chain.add_generator(s)) gens.push_back(s);
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (Permutation const& x : g.generators()) {
      Permutation c = x.inverse() * gens[i] * x;
      if (chain.add_generator(c)) gens.push_back(c);
    }
  }
  return PermutationGroup(g.degree(), std::move(gens));
}

bool is_simple(PermutationGroup const& g, std::size_t element_budget) {
  std::vector<Permutation> elements = g.elements(element_budget);
  mpz_class order = g.order();
  if (order == 1) return false;
  std::unordered_set<Permutation, PermutationHash> classified;
  for (Permutation const& e : elements) {
    if (e.is_identity() || classified.count(e)) continue;
    // Sweep the conjugacy class of e.
    std::vector<Permutation> cls{e};
    classified.insert(e);
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (Permutation const& x : g.generators()) {
        Permutation c = x.inverse() * cls[i] * x;
        if (classified.insert(c).second) cls.push_back(c);
      }
    }
    if (normal_closure(g, {e}).order() != order) return false;
  }
  return true;
}

PermutationGroup symmetric_group(std::size_t n) {
  std::vector<Permutation> gens;
  if (n >= 2) {
    std::vector<Point> cycle(n);
    std::iota(cycle.begin(), cycle.end(), Point{0});
    gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
    if (n > 2) gens.push_back(Permutation::from_cycles(n, {cycle}));
  }
  return PermutationGroup(n, std::move(gens));
}

PermutationGroup alternating_group(std::size_t n) {
  std::vector<Permutation> gens;
  for (Point i = 2; i < n; ++i) gens.push_back(Permutation::from_cycles(n, {{0, 1, i}}));
  return PermutationGroup(n, std::move(gens));
}

}  // namespace grpkit

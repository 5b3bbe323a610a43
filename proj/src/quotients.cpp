#include "grpkit/quotients.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "grpkit/errors.hpp"

namespace grpkit {

namespace {

class HomSearch {
public:
  HomSearch(Presentation const& p, PermutationGroup const& q, HomSearchOptions const& options,
            bool surjective)
      : p_(p), q_(q), surjective_(surjective) {
    if (q.order() > static_cast<unsigned long>(kMaxTargetOrder)) {
      throw BudgetExceeded("target order " + q.order().get_str() + " exceeds " +
                           std::to_string(kMaxTargetOrder));
    }
    target_order_ = q.order();
    elements_ = q.elements(kMaxTargetOrder);
    std::size_t k = p.num_generators();
    inverses_.reserve(elements_.size());
    for (Permutation const& e : elements_) inverses_.push_back(e.inverse());

    // Per-generator exponent constraint from power relators g^e.
    std::vector<unsigned long> exponent(k, 0);
    by_level_.assign(k, {});
    for (Word const& raw : p.relators()) {
      Word r = cyclically_reduce(raw);
      if (r.empty()) continue;
      std::uint32_t top = 0;
      bool single = true;
      for (Letter l : r) {
        top = std::max(top, generator_of(l));
        if (generator_of(l) != generator_of(r[0])) single = false;
      }
      by_level_[top].push_back(r);
      if (single && options.order_pruning) {
        // A reduced power of one generator has all letters of one sign.
        std::uint32_t g = generator_of(r[0]);
        exponent[g] = std::gcd(exponent[g], static_cast<unsigned long>(r.size()));
      }
    }
    candidates_.assign(k, {});
    for (std::size_t g = 0; g < k; ++g) {
      for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (exponent[g] != 0) {
          if (exponent[g] % elements_[i].order().get_ui() != 0) continue;
        }
        candidates_[g].push_back(i);
      }
    }
    images_.assign(k, 0);
  }

  mpz_class run() {
    count_ = 0;
    dfs(0);
    return count_;
  }

private:
  bool holds(Word const& r) const {
    std::size_t n = q_.degree();
    std::vector<Point> cur(n);
    std::iota(cur.begin(), cur.end(), 0);
    for (Letter l : r) {
      std::size_t idx = images_[generator_of(l)];
      Permutation const& x = is_inverse(l) ? inverses_[idx] : elements_[idx];
      for (Point& v : cur) v = x[v];
    }
    for (Point i = 0; i < n; ++i) {
      if (cur[i] != i) return false;
    }
    return true;
  }

  bool generates() {
    std::vector<std::size_t> key(images_.begin(), images_.end());
    std::sort(key.begin(), key.end());
    key.erase(std::unique(key.begin(), key.end()), key.end());
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<Permutation> gens;
    for (std::size_t i : key) gens.push_back(elements_[i]);
    bool full = PermutationGroup(q_.degree(), std::move(gens)).order() == target_order_;
    memo_.emplace(std::move(key), full);
    return full;
  }

  void dfs(std::size_t g) {
    if (g == images_.size()) {
      if (!surjective_ || generates()) ++count_;
      return;
    }
    for (std::size_t i : candidates_[g]) {
      images_[g] = i;
      bool ok = true;
      for (Word const& r : by_level_[g]) {
        if (!holds(r)) {
          ok = false;
          break;
        }
      }
      if (ok) dfs(g + 1);
    }
  }

  Presentation const& p_;
  PermutationGroup const& q_;
  bool surjective_;
  mpz_class target_order_;
  std::vector<Permutation> elements_;
  std::vector<Permutation> inverses_;
  std::vector<std::vector<Word>> by_level_;
  std::vector<std::vector<std::size_t>> candidates_;
  std::vector<std::size_t> images_;
  std::map<std::vector<std::size_t>, bool> memo_;
  mpz_class count_;
};

}  // namespace

mpz_class count_homomorphisms(Presentation const& p, PermutationGroup const& q,
                              HomSearchOptions const& options) {
  return HomSearch(p, q, options, false).run();
}

EpiCount count_epimorphisms(Presentation const& p, PermutationGroup const& q,
                            std::optional<mpz_class> aut_order, HomSearchOptions const& options) {
  EpiCount out;
  out.total = HomSearch(p, q, options, true).run();
  out.aut_order = aut_order ? *aut_order : automorphism_group_order(q);
  if (out.aut_order <= 0) throw InvalidArgument("automorphism group order must be positive");
  if (!mpz_divisible_p(out.total.get_mpz_t(), out.aut_order.get_mpz_t())) {
    throw NonDivisible("epimorphism count " + out.total.get_str() +
                       " is not divisible by |Aut| = " + out.aut_order.get_str());
  }
  out.classes = out.total / out.aut_order;
  return out;
}

mpz_class automorphism_group_order(PermutationGroup const& q) {
  if (q.order() > static_cast<unsigned long>(kMaxAutTargetOrder)) {
    throw BudgetExceeded("automorphism enumeration needs |q| <= " + std::to_string(kMaxAutTargetOrder));
  }
  std::vector<Permutation> elements = q.elements(kMaxAutTargetOrder);
  std::size_t n = elements.size();
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(elements[i], i);

  // Irredundant generating set taken from q's generators.
  std::vector<std::size_t> gens;
  {
    std::vector<Permutation> so_far;
    mpz_class current = 1;
    for (Permutation const& g : q.generators()) {
      so_far.push_back(g);
      mpz_class next = PermutationGroup(q.degree(), so_far).order();
      if (next == current) {
        so_far.pop_back();
        continue;
      }
      current = next;
      gens.push_back(index.at(g));
    }
  }
  if (gens.empty()) return 1;

  std::vector<std::size_t> mult(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mult[a * n + b] = index.at(elements[a] * elements[b]);
  }
  std::size_t identity = index.at(Permutation::identity(q.degree()));
  std::vector<mpz_class> orders;
  for (Permutation const& e : elements) orders.push_back(e.order());

  std::size_t r = gens.size();
  std::vector<std::size_t> images(r, 0);
  std::vector<std::size_t> phi(n);
  std::vector<char> defined(n), used(n);
  mpz_class count = 0;

  // Tests whether s_i -> images[i] extends to an automorphism.
  auto extends = [&]() {
    std::fill(defined.begin(), defined.end(), 0);
    std::fill(used.begin(), used.end(), 0);
    std::vector<std::size_t> queue{identity};
    phi[identity] = identity;
    defined[identity] = used[identity] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::size_t x = queue[head];
      for (std::size_t i = 0; i < r; ++i) {
        std::size_t y = mult[x * n + gens[i]];
        std::size_t fy = mult[phi[x] * n + images[i]];
        if (defined[y]) {
          if (phi[y] != fy) return false;
          continue;
        }
        if (used[fy]) return false;
        defined[y] = used[fy] = 1;
        phi[y] = fy;
        queue.push_back(y);
      }
    }
    return true;
  };

  std::vector<std::vector<std::size_t>> candidates(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t e = 0; e < n; ++e) {
      if (orders[e] == orders[gens[i]]) candidates[i].push_back(e);
    }
  }
  std::vector<std::size_t> pos(r, 0);
  // Odometer over candidate tuples.
  while (true) {
    for (std::size_t i = 0; i < r; ++i) images[i] = candidates[i][pos[i]];
    if (extends()) ++count;
    std::size_t i = 0;
    while (i < r && ++pos[i] == candidates[i].size()) pos[i++] = 0;
    if (i == r) break;
  }
  return count;
}

PermutationGroup builtin_target(std::string_view name) {
  if (name == "A4") return alternating_group(4);
  if (name == "A5") return alternating_group(5);
  if (name == "S3") return symmetric_group(3);
  auto cyclic = [](std::size_t n) {
    std::vector<Point> cycle(n);
    std::iota(cycle.begin(), cycle.end(), 0);
    return PermutationGroup(n, {Permutation::from_cycles(n, {cycle})});
  };
  if (name == "Z2") return cyclic(2);
  if (name == "Z3") return cyclic(3);
  if (name == "Z5") return cyclic(5);
  if (name == "PSL27") {
    // x -> x + 1 and x -> -1/x on F7 plus infinity (point 7).
    std::vector<Point> shift(8), invert(8);
    for (Point i = 0; i < 7; ++i) shift[i] = (i + 1) % 7;
    shift[7] = 7;
    invert[0] = 7;
    invert[7] = 0;
    for (Point i = 1; i < 7; ++i) {
      Point inv = 1;
      while ((inv * i) % 7 != 1) ++inv;
      invert[i] = (7 - inv) % 7;
    }
    return PermutationGroup(8, {Permutation(shift), Permutation(invert)});
  }
  throw InvalidArgument("unknown target group '" + std::string(name) + "'");
}

}  // namespace grpkit

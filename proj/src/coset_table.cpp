#include "grpkit/coset_table.hpp"

#include <algorithm>
#include <limits>

#include "grpkit/errors.hpp"

namespace grpkit {

CosetTable::CosetTable(std::size_t n_generators, std::size_t n_cosets, std::vector<Coset> entries,
                       std::vector<Word> subgroup_generators)
    : n_generators_(n_generators),
      n_cosets_(n_cosets),
      entries_(std::move(entries)),
      subgroup_generators_(std::move(subgroup_generators)) {
  if (n_cosets_ == 0) throw InvalidArgument("coset table needs at least one coset");
  if (entries_.size() != n_cosets_ * n_columns()) throw InvalidArgument("coset table has wrong size");
  for (Coset c = 0; c < n_cosets_; ++c) {
    for (Letter l = 0; l < n_columns(); ++l) {
      Coset d = (*this)(c, l);
      if (d >= n_cosets_) throw InvalidArgument("coset table is not closed");
      if ((*this)(d, inverse(l)) != c) throw InvalidArgument("coset table is not consistent");
    }
  }
  for (Word const& w : subgroup_generators_) {
    if (w.generator_bound() > n_generators_) throw InvalidArgument("subgroup generator out of range");
  }
}

Coset CosetTable::trace(Coset c, Word const& w) const {
  for (Letter l : w) c = (*this)(c, l);
  return c;
}

bool CosetTable::relators_hold(Presentation const& p) const {
  if (p.num_generators() != n_generators_) return false;
  for (Word const& r : p.relators()) {
    for (Coset c = 0; c < n_cosets_; ++c) {
      if (trace(c, r) != c) return false;
    }
  }
  return true;
}

bool CosetTable::subgroup_generators_hold() const {
  return std::all_of(subgroup_generators_.begin(), subgroup_generators_.end(),
                     [this](Word const& w) { return trace(0, w) == 0; });
}

bool CosetTable::is_standard() const {
  Coset next = 1;
  for (Coset c = 0; c < n_cosets_; ++c) {
    for (Letter l = 0; l < n_columns(); ++l) {
      Coset d = (*this)(c, l);
      if (d > next) return false;
      if (d == next) ++next;
    }
  }
  return true;
}

Permutation CosetTable::generator_permutation(std::uint32_t g) const {
  std::vector<Point> images(n_cosets_);
  for (Coset c = 0; c < n_cosets_; ++c) images[c] = (*this)(c, make_letter(g));
  return Permutation(std::move(images));
}

bool operator<(CosetTable const& a, CosetTable const& b) {
  if (a.n_cosets_ != b.n_cosets_) return a.n_cosets_ < b.n_cosets_;
  return a.entries_ < b.entries_;
}

CosetTable standardize(CosetTable const& t, Coset base) {
  std::size_t n = t.n_cosets();
  if (base >= n) throw InvalidArgument("base point out of range");
  constexpr Coset kNone = std::numeric_limits<Coset>::max();
  std::vector<Coset> label(n, kNone), order;
  order.reserve(n);
  label[base] = 0;
  order.push_back(base);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Letter l = 0; l < t.n_columns(); ++l) {
      Coset d = t(order[i], l);
      if (label[d] == kNone) {
        label[d] = static_cast<Coset>(order.size());
        order.push_back(d);
      }
    }
  }
  std::vector<Coset> entries(n * t.n_columns());
  for (std::size_t i = 0; i < n; ++i) {
    for (Letter l = 0; l < t.n_columns(); ++l) entries[i * t.n_columns() + l] = label[t(order[i], l)];
  }
  return CosetTable(t.n_generators(), n, std::move(entries), t.subgroup_generators());
}

PermutationGroup coset_action(CosetTable const& t) {
  std::vector<Permutation> gens;
  for (std::uint32_t g = 0; g < t.n_generators(); ++g) gens.push_back(t.generator_permutation(g));
  return PermutationGroup(t.n_cosets(), std::move(gens));
}

std::string render_table(CosetTable const& t) {
  std::string out;
  for (Coset c = 0; c < t.n_cosets(); ++c) {
    out += std::to_string(c) + ":";
    for (Letter l = 0; l < t.n_columns(); ++l) out += " " + std::to_string(t(c, l));
    out += "\n";
  }
  return out;
}

namespace {

// Working state of an HLT enumeration. Dead cosets forward to their
// replacement through `forward_`; rows are never reused.
class Enumerator {
public:
  static constexpr std::int64_t kUndefined = -1;

  Enumerator(Presentation const& p, EnumerationLimits const& limits)
      : n_columns_(2 * p.num_generators()), limits_(limits) {
    for (Word const& r : p.relators()) {
      Word w = cyclically_reduce(r);
      if (w.empty()) continue;
      // Rotate to the lexicographically least cyclic permutation.
      std::vector<Letter> best(w.begin(), w.end());
      for (std::size_t s = 1; s < w.size(); ++s) {
        std::vector<Letter> rot(w.begin() + s, w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + s);
        if (rot < best) best = std::move(rot);
      }
      relators_.emplace_back(std::move(best));
    }
    new_coset();
  }

  void run(std::vector<Word> const& subgroup_generators) {
    for (Word const& w : subgroup_generators) scan_and_fill(0, free_reduce(w));
    for (std::size_t alpha = 0; alpha < forward_.size(); ++alpha) {
      if (!live(alpha)) continue;
      for (Word const& r : relators_) {
        scan_and_fill(static_cast<std::int64_t>(alpha), r);
        if (!live(alpha)) break;
      }
      if (!live(alpha)) continue;
      for (Letter l = 0; l < n_columns_ && live(alpha); ++l) {
        if (at(alpha, l) == kUndefined) define(static_cast<std::int64_t>(alpha), l);
      }
    }
  }

  CosetTable result(Presentation const& p, std::vector<Word> const& subgroup_generators) const {
    std::vector<Coset> index(forward_.size(), 0);
    std::size_t n = 0;
    for (std::size_t c = 0; c < forward_.size(); ++c) {
      if (live(c)) index[c] = static_cast<Coset>(n++);
    }
    std::vector<Coset> entries;
    entries.reserve(n * n_columns_);
    for (std::size_t c = 0; c < forward_.size(); ++c) {
      if (!live(c)) continue;
      for (Letter l = 0; l < n_columns_; ++l) entries.push_back(index[at(c, l)]);
    }
    std::vector<Word> subgens;
    for (Word const& w : subgroup_generators) subgens.push_back(free_reduce(w));
    return standardize(CosetTable(p.num_generators(), n, std::move(entries), std::move(subgens)));
  }

private:
  bool live(std::size_t c) const { return forward_[c] == static_cast<std::int64_t>(c); }
  std::int64_t& at(std::size_t c, Letter l) { return table_[c * n_columns_ + l]; }
  std::int64_t at(std::size_t c, Letter l) const { return table_[c * n_columns_ + l]; }

  std::int64_t new_coset() {
    std::int64_t c = static_cast<std::int64_t>(forward_.size());
    forward_.push_back(c);
    table_.insert(table_.end(), n_columns_, kUndefined);
    ++n_live_;
    return c;
  }

  void define(std::int64_t c, Letter l) {
    if (n_live_ >= limits_.max_cosets) {
      lookahead();
      if (n_live_ >= limits_.max_cosets) {
        throw LimitExceeded("coset enumeration exceeded " + std::to_string(limits_.max_cosets) +
                            " cosets");
      }
      // The lookahead may have merged c away or filled the entry.
      c = rep(c);
      if (at(c, l) != kUndefined) return;
    }
    std::int64_t d = new_coset();
    at(c, l) = d;
    at(d, inverse(l)) = c;
  }

  std::int64_t rep(std::int64_t c) {
    std::int64_t r = c;
    while (forward_[r] != r) r = forward_[r];
    while (forward_[c] != r) {
      std::int64_t next = forward_[c];
      forward_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(std::int64_t a, std::int64_t b, std::vector<std::int64_t>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    std::int64_t lo = std::min(a, b), hi = std::max(a, b);
    forward_[hi] = lo;
    --n_live_;
    queue.push_back(hi);
  }

  // Processes the coincidence a == b and all of its consequences.
  void coincidence(std::int64_t a, std::int64_t b) {
    std::vector<std::int64_t> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      std::int64_t gamma = queue[i];
      for (Letter l = 0; l < n_columns_; ++l) {
        std::int64_t delta = at(gamma, l);
        if (delta == kUndefined) continue;
        at(delta, inverse(l)) = kUndefined;
        std::int64_t mu = rep(gamma), nu = rep(delta);
        if (at(mu, l) != kUndefined) {
          merge(nu, at(mu, l), queue);
        } else if (at(nu, inverse(l)) != kUndefined) {
          merge(mu, at(nu, inverse(l)), queue);
        } else {
          at(mu, l) = nu;
          at(nu, inverse(l)) = mu;
        }
      }
    }
  }

  // Traces w from alpha in both directions; fills gaps by definition when
  // `fill` is set, otherwise only deduces a single missing entry.
  void scan(std::int64_t alpha, Word const& w, bool fill) {
    std::int64_t f = alpha, b = alpha;
    std::size_t i = 0, j = w.size();
    while (true) {
      while (i < j && at(f, w[i]) != kUndefined) f = at(f, w[i++]);
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && at(b, inverse(w[j - 1])) != kUndefined) b = at(b, inverse(w[--j]));
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        at(f, w[i]) = b;
        at(b, inverse(w[i])) = f;
        return;
      }
      if (!fill) return;
      define(f, w[i]);
      f = rep(f);
      b = rep(b);
    }
  }

  void scan_and_fill(std::int64_t alpha, Word const& w) { scan(alpha, w, true); }

  void lookahead() {
    for (std::size_t c = 0; c < forward_.size(); ++c) {
      for (Word const& r : relators_) {
        if (!live(c)) break;
        scan(static_cast<std::int64_t>(c), r, false);
      }
    }
  }

  std::size_t n_columns_;
  EnumerationLimits limits_;
  std::vector<Word> relators_;
  std::vector<std::int64_t> forward_;
  std::vector<std::int64_t> table_;
  std::size_t n_live_ = 0;
};

}  // namespace

CosetTable enumerate_cosets(Presentation const& p, std::vector<Word> const& subgroup_generators,
                            EnumerationLimits const& limits) {
  if (limits.max_cosets < 1) throw InvalidArgument("max_cosets must be at least 1");
  for (Word const& w : subgroup_generators) {
    if (w.generator_bound() > p.num_generators()) {
      throw InvalidArgument("subgroup generator uses a generator outside the presentation");
    }
  }
  if (p.num_generators() == 0) {
    return CosetTable(0, 1, {}, subgroup_generators);
  }
  Enumerator e(p, limits);
  e.run(subgroup_generators);
  return e.result(p, subgroup_generators);
}

}  // namespace grpkit

#include "grpkit/low_index.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <thread>

#include "grpkit/errors.hpp"
#include "grpkit/rewrite.hpp"

namespace grpkit {

namespace {

// Backtracking search over partial standardized coset tables. Every
// definition is followed by relator tracing (each relator cycle through the
// new edge is scanned in both directions, a single gap is filled), and a
// partial table survives only if no base-point relabeling is provably
// smaller, so exactly one table per conjugacy class is completed.
class Search {
public:
  using Cell = std::uint8_t;
  static constexpr Cell kUndefined = 0xFF;
  static constexpr std::size_t kMaxIndex = 250;

  struct Choice {
    std::uint32_t pos;
    Cell target;
  };

  Search(Presentation const& p, std::size_t n_min, std::size_t n_max, std::uint64_t budget,
         std::atomic<std::uint64_t>* nodes)
      : columns_(2 * p.num_generators()),
        n_min_(n_min),
        n_max_(n_max),
        budget_(budget),
        shared_nodes_(nodes),
        table_(n_max * columns_, kUndefined),
        label_(n_max),
        orig_(n_max),
        stamp_(n_max, 0) {
    prepare_relators(p);
    n_ = 1;
  }

  // Runs the search below the current state.
  void run() { dfs(0); }

  // Explores to the given depth and returns the choice sequences that reach
  // it; complete tables found on the way are recorded.
  std::vector<std::vector<Choice>> frontier(std::size_t depth) {
    std::vector<std::vector<Choice>> out;
    std::vector<Choice> path;
    collect(0, depth, path, out);
    return out;
  }

  // Replays a choice sequence from the initial state, then searches below it.
  void run_from(std::vector<Choice> const& path) {
    std::uint32_t pos = 0;
    for (Choice const& ch : path) {
      pos = first_undefined(pos);
      if (ch.target == n_) ++n_;
      assign(pos / columns_, pos % columns_, ch.target);
      propagate();
    }
    dfs(pos);
  }

  std::vector<CosetTable>& found() { return found_; }
  // Publishes nodes not yet added to the shared counter.
  void flush_nodes() {
    if (pending_nodes_ == 0) return;
    std::uint64_t total = shared_nodes_->fetch_add(pending_nodes_) + pending_nodes_;
    pending_nodes_ = 0;
    if (total > budget_) {
      throw BudgetExceeded("low-index search exceeded node budget of " + std::to_string(budget_));
    }
  }

private:
  void prepare_relators(Presentation const& p) {
    occurrences_.assign(columns_, {});
    for (Word const& r : p.relators()) {
      Word w = cyclically_reduce(r);
      std::size_t len = w.size();
      if (len == 0) continue;
      for (std::size_t i = 0; i < len; ++i) {
        std::vector<Letter> rot;
        rot.reserve(len);
        for (std::size_t k = 0; k < len; ++k) rot.push_back(w[(i + k) % len]);
        auto& list = occurrences_[rot[0]];
        bool duplicate = false;
        for (auto const& [off, l] : list) {
          if (l == len && std::equal(rot.begin(), rot.end(), letters_.begin() + off)) {
            duplicate = true;
            break;
          }
        }
        if (duplicate) continue;
        list.emplace_back(static_cast<std::uint32_t>(letters_.size()), static_cast<std::uint32_t>(len));
        letters_.insert(letters_.end(), rot.begin(), rot.end());
      }
    }
  }

  Cell& cell(std::size_t c, Letter l) { return table_[c * columns_ + l]; }

  void assign(std::size_t c, Letter l, Cell d) {
    std::uint32_t a = static_cast<std::uint32_t>(c * columns_ + l);
    std::uint32_t b = static_cast<std::uint32_t>(d * columns_ + inverse(l));
    table_[a] = d;
    table_[b] = static_cast<Cell>(c);
    trail_.push_back(a);
    trail_.push_back(b);
    queue_.emplace_back(static_cast<Cell>(c), l);
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      table_[trail_.back()] = kUndefined;
      trail_.pop_back();
    }
  }

  // Bidirectional scan of one relator rotation starting at coset c.
  bool scan(Cell c, Letter const* w, std::uint32_t len) {
    Cell f = c;
    std::uint32_t i = 0;
    while (i < len) {
      Cell next = table_[f * columns_ + w[i]];
      if (next == kUndefined) break;
      f = next;
      ++i;
    }
    if (i == len) return f == c;
    Cell b = c;
    std::uint32_t j = len;
    while (j > i) {
      Cell next = table_[b * columns_ + inverse(w[j - 1])];
      if (next == kUndefined) break;
      b = next;
      --j;
    }
    if (j == i) return f == b;
    if (j == i + 1) assign(f, w[i], b);
    return true;
  }

  bool propagate() {
    std::size_t head = 0;
    bool ok = true;
    while (ok && head < queue_.size()) {
      auto [c, l] = queue_[head++];
      Cell d = table_[c * columns_ + l];
      for (auto const& [off, len] : occurrences_[l]) {
        if (!scan(c, letters_.data() + off, len)) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
      for (auto const& [off, len] : occurrences_[inverse(l)]) {
        if (!scan(d, letters_.data() + off, len)) {
          ok = false;
          break;
        }
      }
    }
    queue_.clear();
    return ok;
  }

  // False when some base point provably yields a smaller standardized table.
  bool canonical() {
    std::size_t n = n_;
    for (std::size_t base = 1; base < n; ++base) {
      ++epoch_;
      stamp_[base] = epoch_;
      label_[base] = 0;
      orig_[0] = static_cast<Cell>(base);
      std::size_t next = 1;
      bool decided = false;
      for (std::size_t row = 0; row < n && !decided; ++row) {
        Cell const* mine = &table_[row * columns_];
        Cell const* theirs = &table_[orig_[row] * columns_];
        for (std::size_t col = 0; col < columns_; ++col) {
          Cell u = theirs[col];
          Cell v = mine[col];
          if (u == kUndefined || v == kUndefined) {
            decided = true;
            break;
          }
          Cell lu;
          if (stamp_[u] == epoch_) {
            lu = label_[u];
          } else {
            stamp_[u] = epoch_;
            lu = static_cast<Cell>(next);
            label_[u] = lu;
            orig_[next++] = u;
          }
          if (lu < v) return false;
          if (lu > v) {
            decided = true;
            break;
          }
        }
      }
    }
    return true;
  }

  std::uint32_t first_undefined(std::uint32_t pos) const {
    std::uint32_t end = static_cast<std::uint32_t>(n_ * columns_);
    while (pos < end && table_[pos] != kUndefined) ++pos;
    return pos;
  }

  void count_node() {
    if (++pending_nodes_ >= std::min<std::uint64_t>(0x1000, budget_)) flush_nodes();
  }

  // Tries target d for the entry at pos; returns true if the branch survived
  // propagation and the canonicity test; only survivors count as nodes.
  // The caller must undo to `mark`.
  bool try_choice(std::uint32_t pos, Cell d) {
    std::size_t c = pos / columns_;
    Letter l = pos % columns_;
    if (d == n_) ++n_;
    assign(c, l, d);
    if (!propagate() || !canonical()) return false;
    count_node();
    return true;
  }

  void record() {
    if (n_ < n_min_) return;
    std::vector<Coset> entries(table_.begin(), table_.begin() + n_ * columns_);
    found_.emplace_back(columns_ / 2, n_, std::move(entries));
  }

  template <typename F>
  void for_each_choice(std::uint32_t pos, F&& body) {
    Letter l = pos % columns_;
    std::size_t n = n_;
    for (std::size_t d = 0; d < n; ++d) {
      if (table_[d * columns_ + inverse(l)] == kUndefined) body(static_cast<Cell>(d));
    }
    if (n < n_max_) body(static_cast<Cell>(n));
  }

  void dfs(std::uint32_t pos) {
    pos = first_undefined(pos);
    if (pos == n_ * columns_) {
      record();
      return;
    }
    std::size_t n_saved = n_;
    for_each_choice(pos, [&](Cell d) {
      std::size_t mark = trail_.size();
      if (try_choice(pos, d)) dfs(pos + 1);
      undo(mark);
      n_ = n_saved;
    });
  }

  void collect(std::uint32_t pos, std::size_t depth, std::vector<Choice>& path,
               std::vector<std::vector<Choice>>& out) {
    pos = first_undefined(pos);
    if (pos == n_ * columns_) {
      record();
      return;
    }
    if (path.size() == depth) {
      out.push_back(path);
      return;
    }
    std::size_t n_saved = n_;
    for_each_choice(pos, [&](Cell d) {
      std::size_t mark = trail_.size();
      if (try_choice(pos, d)) {
        path.push_back({pos, d});
        collect(pos + 1, depth, path, out);
        path.pop_back();
      }
      undo(mark);
      n_ = n_saved;
    });
  }

  std::size_t columns_;
  std::size_t n_min_;
  std::size_t n_max_;
  std::uint64_t budget_;
  std::atomic<std::uint64_t>* shared_nodes_;
  std::uint64_t pending_nodes_ = 0;

  std::vector<Cell> table_;
  std::size_t n_ = 1;
  std::vector<std::uint32_t> trail_;
  std::vector<std::pair<Cell, Letter>> queue_;

  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> occurrences_;
  std::vector<Letter> letters_;

  std::vector<Cell> label_;
  std::vector<Cell> orig_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_ = 0;

  std::vector<CosetTable> found_;
};

std::size_t equal_base_points(CosetTable const& t) {
  CosetTable const standard = standardize(t, 0);
  std::size_t count = 0;
  for (Coset b = 0; b < t.n_cosets(); ++b) {
    if (standardize(t, b) == standard) ++count;
  }
  return count;
}

}  // namespace

std::size_t normalizer_index(Presentation const& p, CosetTable const& t) {
  if (t.n_generators() != p.num_generators()) {
    throw InvalidArgument("coset table does not match the presentation");
  }
  return t.n_cosets() / equal_base_points(t);
}

PermutationGroup core_table(Presentation const& p, CosetTable const& t) {
  if (t.n_generators() != p.num_generators()) {
    throw InvalidArgument("coset table does not match the presentation");
  }
  return coset_action(t);
}

CosetTable canonical_table(CosetTable const& t) {
  CosetTable best = standardize(t, 0);
  for (Coset b = 1; b < t.n_cosets(); ++b) {
    CosetTable candidate = standardize(t, b);
    if (candidate.entries() < best.entries()) best = std::move(candidate);
  }
  return best;
}

std::vector<SubgroupClassRecord> low_index_subgroups(Presentation const& p, std::size_t n_min,
                                                     std::size_t n_max,
                                                     LowIndexOptions const& options,
                                                     LowIndexStats* stats) {
  if (n_min < 1 || n_min > n_max) throw InvalidArgument("index range must satisfy 1 <= from <= to");
  if (n_max > Search::kMaxIndex) {
    throw InvalidArgument("index above " + std::to_string(Search::kMaxIndex) + " is not supported");
  }

  std::vector<CosetTable> tables;
  std::atomic<std::uint64_t> nodes{0};

  if (p.num_generators() == 0) {
    if (n_min == 1) tables.emplace_back(0, 1, std::vector<Coset>{});
  } else if (options.jobs <= 1) {
    Search search(p, n_min, n_max, options.node_budget, &nodes);
    search.run();
    search.flush_nodes();
    tables = std::move(search.found());
  } else {
    // Split the tree a few levels down and hand subtrees to workers.
    std::vector<std::vector<Search::Choice>> work;
    for (std::size_t depth = 1; depth <= 16; ++depth) {
      Search probe(p, n_min, n_max, options.node_budget, &nodes);
      work = probe.frontier(depth);
      if (work.size() >= 8 * options.jobs || depth == 16) {
        tables = std::move(probe.found());
        probe.flush_nodes();
        break;
      }
    }
    std::atomic<std::size_t> next{0};
    std::mutex mutex;
    std::exception_ptr error;
    auto worker = [&] {
      try {
        while (true) {
          std::size_t i = next.fetch_add(1);
          if (i >= work.size()) break;
          Search s(p, n_min, n_max, options.node_budget, &nodes);
          s.run_from(work[i]);
          s.flush_nodes();
          std::lock_guard lock(mutex);
          for (auto& t : s.found()) tables.push_back(std::move(t));
        }
      } catch (...) {
        std::lock_guard lock(mutex);
        if (!error) error = std::current_exception();
        next = work.size();
      }
    };
    std::vector<std::thread> threads;
    for (unsigned j = 0; j < options.jobs; ++j) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
  }
  if (stats) stats->nodes = nodes.load();

  std::sort(tables.begin(), tables.end());
  std::vector<SubgroupClassRecord> records;
  records.reserve(tables.size());
  for (CosetTable& t : tables) {
    SubgroupClassRecord rec;
    rec.index = t.n_cosets();
    rec.class_size = t.n_cosets() / equal_base_points(t);
    rec.generators_as_words = schreier_generators(t);
    rec.representative = CosetTable(t.n_generators(), t.n_cosets(), t.entries(), rec.generators_as_words);
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace grpkit

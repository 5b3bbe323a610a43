#include "grpkit/rewrite.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "grpkit/errors.hpp"

namespace grpkit {

SchreierData schreier_data(CosetTable const& t) {
  std::size_t n = t.n_cosets();
  std::size_t k = t.n_generators();
  SchreierData data;
  data.transversal.assign(n, Word{});
  std::vector<bool> reached(n, false);
  reached[0] = true;
  // Tree edges: the entry where each coset first appears in the scan.
  std::vector<bool> tree_edge(n * 2 * k, false);
  std::vector<Coset> order{0};
  for (std::size_t i = 0; i < order.size(); ++i) {
    Coset c = order[i];
    for (Letter l = 0; l < 2 * k; ++l) {
      Coset d = t(c, l);
      if (!reached[d]) {
        reached[d] = true;
        order.push_back(d);
        Word w = data.transversal[c];
        w.push_back(l);
        data.transversal[d] = std::move(w);
        tree_edge[c * 2 * k + l] = true;
        tree_edge[d * 2 * k + inverse(l)] = true;
      }
    }
  }
  if (order.size() != n) throw InvalidArgument("coset table is not connected");
  data.generator_index.assign(n * k, -1);
  for (Coset c = 0; c < n; ++c) {
    for (std::uint32_t g = 0; g < k; ++g) {
      Letter l = make_letter(g);
      if (tree_edge[c * 2 * k + l]) continue;
      Word s = free_reduce(data.transversal[c] * Word{l} * data.transversal[t(c, l)].inverted());
      if (s.empty()) continue;
      data.generator_index[c * k + g] = static_cast<int>(data.subgroup_generators.size());
      data.subgroup_generators.push_back(std::move(s));
    }
  }
  return data;
}

std::vector<Word> schreier_generators(CosetTable const& t) { return schreier_data(t).subgroup_generators; }

std::vector<Word> rewritten_relators(Presentation const& p, CosetTable const& t,
                                     SchreierData const& data) {
  if (p.num_generators() != t.n_generators()) {
    throw InvalidArgument("coset table does not match the presentation");
  }
  std::size_t k = t.n_generators();
  std::vector<Word> out;
  out.reserve(t.n_cosets() * p.relators().size());
  for (Coset c = 0; c < t.n_cosets(); ++c) {
    for (Word const& r : p.relators()) {
      Word w;
      Coset cur = c;
      for (Letter l : r) {
        std::uint32_t g = generator_of(l);
        if (!is_inverse(l)) {
          int s = data.generator_index[cur * k + g];
          if (s >= 0) w.push_back(make_letter(static_cast<std::uint32_t>(s)));
          cur = t(cur, l);
        } else {
          Coset prev = t(cur, l);
          int s = data.generator_index[prev * k + g];
          if (s >= 0) w.push_back(make_letter(static_cast<std::uint32_t>(s), true));
          cur = prev;
        }
      }
      out.push_back(free_reduce(w));
    }
  }
  return out;
}

Presentation reidemeister_schreier(Presentation const& p, CosetTable const& t) {
  SchreierData data = schreier_data(t);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < data.subgroup_generators.size(); ++i) {
    names.push_back("s" + std::to_string(i + 1));
  }
  return Presentation(std::move(names), rewritten_relators(p, t, data));
}

namespace {

// Least cyclic rotation of w or of its inverse; equal keys mean the two
// relators define the same normal closure element up to conjugation.
std::vector<Letter> cyclic_key(Word const& w) {
  std::vector<Letter> best;
  for (Word const& v : {w, w.inverted()}) {
    for (std::size_t s = 0; s < v.size(); ++s) {
      std::vector<Letter> rot(v.begin() + s, v.end());
      rot.insert(rot.end(), v.begin(), v.begin() + s);
      if (best.empty() || rot < best) best = std::move(rot);
    }
  }
  return best;
}

std::vector<Word> tidy(std::vector<Word> const& relators) {
  std::vector<Word> out;
  std::set<std::vector<Letter>> seen;
  for (Word const& r : relators) {
    Word w = cyclically_reduce(r);
    if (w.empty()) continue;
    if (!seen.insert(cyclic_key(w)).second) continue;
    out.push_back(std::move(w));
  }
  return out;
}

std::size_t total_length(std::vector<Word> const& relators) {
  std::size_t n = 0;
  for (Word const& r : relators) n += r.size();
  return n;
}

Word substitute(Word const& w, std::uint32_t gen, Word const& replacement, Word const& replacement_inv) {
  Word out;
  for (Letter l : w) {
    if (generator_of(l) != gen) {
      out.push_back(l);
    } else {
      out.append(is_inverse(l) ? replacement_inv : replacement);
    }
  }
  return free_reduce(out);
}

}  // namespace

Presentation tietze_simplify(Presentation const& p, unsigned effort) {
  std::vector<std::string> names = p.generators();
  std::vector<Word> relators = tidy(p.relators());
  std::size_t const cap = std::max<std::size_t>(total_length(relators), 16) * (1 + effort);

  while (true) {
    std::size_t k = names.size();
    std::vector<std::size_t> occurrences(k, 0);
    for (Word const& r : relators) {
      for (Letter l : r) ++occurrences[generator_of(l)];
    }
    // Cheapest elimination: a generator occurring once in a relator.
    long long best_growth = std::numeric_limits<long long>::max();
    std::size_t best_rel = 0;
    std::uint32_t best_gen = 0;
    for (std::size_t ri = 0; ri < relators.size(); ++ri) {
      Word const& r = relators[ri];
      std::vector<std::size_t> local(k, 0);
      for (Letter l : r) ++local[generator_of(l)];
      for (std::uint32_t g = 0; g < k; ++g) {
        if (local[g] != 1) continue;
        long long others = static_cast<long long>(occurrences[g]) - 1;
        long long len = static_cast<long long>(r.size());
        long long growth = others * (len - 2) - len;
        if (growth < best_growth) {
          best_growth = growth;
          best_rel = ri;
          best_gen = g;
        }
      }
    }
    if (best_growth == std::numeric_limits<long long>::max()) break;
    if (best_growth > 0 &&
        total_length(relators) + static_cast<std::size_t>(best_growth) > cap) {
      break;
    }

    // Rotate the relator so the generator comes first: l·v = 1.
    Word const& r = relators[best_rel];
    std::size_t at = 0;
    while (generator_of(r[at]) != best_gen) ++at;
    Word v;
    for (std::size_t i = 1; i < r.size(); ++i) v.push_back(r[(at + i) % r.size()]);
    Word replacement = is_inverse(r[at]) ? v : v.inverted();
    Word replacement_inv = replacement.inverted();

    std::vector<Word> next;
    for (std::size_t ri = 0; ri < relators.size(); ++ri) {
      if (ri == best_rel) continue;
      Word w = substitute(relators[ri], best_gen, replacement, replacement_inv);
      // Shift generator indices above the eliminated one.
      Word shifted;
      for (Letter l : w) {
        std::uint32_t g = generator_of(l);
        shifted.push_back(make_letter(g > best_gen ? g - 1 : g, is_inverse(l)));
      }
      next.push_back(std::move(shifted));
    }
    names.erase(names.begin() + best_gen);
    relators = tidy(next);
  }
  return Presentation(std::move(names), std::move(relators));
}

Presentation subgroup_presentation(Presentation const& p, CosetTable const& t) {
  return tietze_simplify(reidemeister_schreier(p, t));
}

AbelianInvariants subgroup_invariants(Presentation const& p, CosetTable const& t) {
  return abelian_invariants(subgroup_presentation(p, t));
}

}  // namespace grpkit

#include "grpkit/word.hpp"

#include <algorithm>

#include "grpkit/errors.hpp"

namespace grpkit {

std::uint32_t Word::generator_bound() const noexcept {
  std::uint32_t bound = 0;
  for (Letter l : letters_) bound = std::max(bound, generator_of(l) + 1);
  return bound;
}

Word Word::inverted() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (Letter& l : out) l = inverse(l);
  return Word(std::move(out));
}

Word Word::power(long long e) const {
  Word base = e < 0 ? inverted() : *this;
  unsigned long long n = e < 0 ? -static_cast<unsigned long long>(e) : static_cast<unsigned long long>(e);
  Word out;
  if (n > 0 && base.size() > (1ull << 28) / n) {
    throw InvalidArgument("word power too long to expand");
  }
  out.letters_.reserve(base.size() * n);
  for (unsigned long long i = 0; i < n; ++i) out.append(base);
  return out;
}

Word free_reduce(Word const& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (Letter l : w) {
    if (!stack.empty() && stack.back() == inverse(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack));
}

Word cyclically_reduce(Word const& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == inverse(r[hi - 1])) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Letter>(r.begin() + lo, r.begin() + hi));
}

Word commutator(Word const& u, Word const& v) {
  return free_reduce(u.inverted() * v.inverted() * u * v);
}

std::vector<long long> exponent_sums(Word const& w, std::size_t n_generators) {
  std::vector<long long> sums(n_generators, 0);
  for (Letter l : w) sums.at(generator_of(l)) += is_inverse(l) ? -1 : 1;
  return sums;
}

std::string render_word(Word const& w, std::span<std::string const> names) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += '*';
    out += names[generator_of(w[i])];
    long long e = static_cast<long long>(j - i) * (is_inverse(w[i]) ? -1 : 1);
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

}  // namespace grpkit

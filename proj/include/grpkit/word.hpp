#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace grpkit {

// A letter packs a generator index and a sign: 2*g for g, 2*g+1 for g^-1.
// The same encoding is used for coset table columns.
using Letter = std::uint32_t;

constexpr Letter make_letter(std::uint32_t gen, bool inverse = false) noexcept {
  return 2 * gen + (inverse ? 1u : 0u);
}
constexpr std::uint32_t generator_of(Letter l) noexcept { return l >> 1; }
constexpr bool is_inverse(Letter l) noexcept { return (l & 1u) != 0; }
constexpr Letter inverse(Letter l) noexcept { return l ^ 1u; }

class Word {
public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  static Word generator(std::uint32_t gen, int sign = 1) {
    return Word{make_letter(gen, sign < 0)};
  }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<Letter const> letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  void push_back(Letter l) { letters_.push_back(l); }
  void append(Word const& w) { letters_.insert(letters_.end(), w.begin(), w.end()); }

  // Largest generator index used plus one; 0 for the empty word.
  std::uint32_t generator_bound() const noexcept;

  Word inverted() const;
  Word power(long long e) const;

  friend Word operator*(Word a, Word const& b) {
    a.append(b);
    return a;
  }
  friend bool operator==(Word const&, Word const&) = default;
  friend auto operator<=>(Word const&, Word const&) = default;

private:
  std::vector<Letter> letters_;
};

// Unique freely reduced representative of w in the free group.
Word free_reduce(Word const& w);

// Free reduction followed by cancellation of inverse letters at the two ends.
Word cyclically_reduce(Word const& w);

// Commutator u^-1 v^-1 u v, freely reduced.
Word commutator(Word const& u, Word const& v);

// Exponent sum of each generator, indexed by generator.
std::vector<long long> exponent_sums(Word const& w, std::size_t n_generators);

// Renders with the given generator names, e.g. "a^-1*b^2".
std::string render_word(Word const& w, std::span<std::string const> names);

}  // namespace grpkit

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grpkit/word.hpp"

namespace grpkit {

// Finitely presented group. Relators are stored freely reduced (not
// cyclically reduced) and empty relators are dropped.
class Presentation {
public:
  Presentation() = default;
  Presentation(std::vector<std::string> generators, std::vector<Word> relators);

  std::size_t num_generators() const noexcept { return generators_.size(); }
  std::vector<std::string> const& generators() const noexcept { return generators_; }
  std::vector<Word> const& relators() const noexcept { return relators_; }

  // Index of a named generator, or -1.
  int find_generator(std::string_view name) const;

  friend bool operator==(Presentation const&, Presentation const&) = default;

private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
};

// Parses the `group<gens | relators>` language. `#` starts a comment that
// runs to the end of the line.
Presentation parse_presentation(std::string_view text);

// Parses a single relator word against existing generator names.
Word parse_word(std::string_view text, std::vector<std::string> const& generators);

std::string render_presentation(Presentation const& p);

Presentation load_presentation_file(std::string const& path);

// Named presentations of the catalog file format: `name: group<...>` per
// entry, entries may wrap over several lines.
std::vector<std::pair<std::string, Presentation>> parse_catalog(std::string_view text);

enum class CatalogKey { Gamma, Gamma0, Lambda0, Lambda1, Lambda2, GammaW, GammaXC2, Gamma0XC2 };

std::string_view catalog_name(CatalogKey key);
CatalogKey catalog_key(std::string_view name);  // throws InvalidArgument
std::vector<CatalogKey> const& all_catalog_keys();

Presentation const& catalog(CatalogKey key);
Presentation const& catalog(std::string_view name);

// Raw text of the shipped catalog.
std::string_view catalog_text();

}  // namespace grpkit

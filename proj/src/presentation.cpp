#include "grpkit/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <fstream>
#include <map>
#include <sstream>

#include "catalog_data.hpp"
#include "grpkit/errors.hpp"

namespace grpkit {

Presentation::Presentation(std::vector<std::string> generators, std::vector<Word> relators)
    : generators_(std::move(generators)) {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (generators_[i] == generators_[j]) {
        throw InvalidArgument("duplicate generator name '" + generators_[i] + "'");
      }
    }
  }
  for (Word const& r : relators) {
    if (r.generator_bound() > generators_.size()) {
      throw InvalidArgument("relator uses a generator index out of range");
    }
    Word reduced = free_reduce(r);
    if (!reduced.empty()) relators_.push_back(std::move(reduced));
  }
}

int Presentation::find_generator(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Presentation parse_group() {
    expect_keyword("group");
    expect('<');
    std::vector<std::string> gens;
    do {
      skip_space();
      auto [line, col] = position();
      std::string name = identifier();
      if (std::find(gens.begin(), gens.end(), name) != gens.end()) {
        throw ParseError("duplicate generator name '" + name + "'", line, col);
      }
      gens.push_back(std::move(name));
    } while (accept(','));
    expect('|');
    generators_ = &gens;
    std::vector<Word> relators;
    if (!peek_is('>')) {
      do {
        relators.push_back(relator());
      } while (accept(','));
    }
    expect('>');
    generators_ = nullptr;
    return Presentation(std::move(gens), std::move(relators));
  }

  Word parse_single_word(std::vector<std::string> const& gens) {
    generators_ = &gens;
    Word w = relator();
    expect_end();
    generators_ = nullptr;
    return free_reduce(w);
  }

  void expect_end() {
    skip_space();
    if (pos_ < text_.size()) fail("unexpected trailing input");
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  std::string identifier() {
    skip_space();
    if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected identifier");
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  std::pair<std::size_t, std::size_t> position() const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

  [[noreturn]] void fail(std::string const& what) const {
    auto [line, col] = position();
    throw ParseError(what, line, col);
  }

private:
  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  bool peek_is(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (peek_is(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect_keyword(std::string_view kw) {
    skip_space();
    auto [line, col] = position();
    std::string got = pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))
                          ? identifier()
                          : std::string();
    if (got != kw) throw ParseError("expected '" + std::string(kw) + "'", line, col);
  }

  Word relator() {
    Word w = term();
    while (accept('*')) w.append(term());
    return w;
  }

  Word term() {
    Word base = atom();
    if (accept('^')) {
      skip_space();
      auto [line, col] = position();
      bool negative = false;
      if (pos_ < text_.size() && text_[pos_] == '-') {
        negative = true;
        ++pos_;
      }
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("expected exponent");
      }
      long long value = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = value * 10 + (text_[pos_] - '0');
        if (value > INT_MAX) throw ParseError("exponent out of range", line, col);
        ++pos_;
      }
      if (value == 0) throw ParseError("zero exponent", line, col);
      base = base.power(negative ? -value : value);
    }
    return base;
  }

  Word atom() {
    skip_space();
    if (accept('(')) {
      Word first = relator();
      if (accept(',')) {
        Word second = relator();
        expect(')');
        return commutator(first, second);
      }
      expect(')');
      return first;
    }
    if (accept('[')) {
      Word first = relator();
      expect(',');
      Word second = relator();
      expect(']');
      return commutator(first, second);
    }
    auto [line, col] = position();
    std::string name = identifier();
    auto const& gens = *generators_;
    auto it = std::find(gens.begin(), gens.end(), name);
    if (it == gens.end()) throw ParseError("unknown symbol '" + name + "'", line, col);
    return Word::generator(static_cast<std::uint32_t>(it - gens.begin()));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::string> const* generators_ = nullptr;
};

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Parser parser(text);
  Presentation p = parser.parse_group();
  parser.expect_end();
  return p;
}

Word parse_word(std::string_view text, std::vector<std::string> const& generators) {
  return Parser(text).parse_single_word(generators);
}

std::string render_presentation(Presentation const& p) {
  std::string out = "group<";
  for (std::size_t i = 0; i < p.num_generators(); ++i) {
    if (i) out += ',';
    out += p.generators()[i];
  }
  out += " |";
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    out += i ? ", " : " ";
    out += render_word(p.relators()[i], p.generators());
  }
  out += ">";
  return out;
}

Presentation load_presentation_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str());
}

std::vector<std::pair<std::string, Presentation>> parse_catalog(std::string_view text) {
  Parser parser(text);
  std::vector<std::pair<std::string, Presentation>> entries;
  while (!parser.at_end()) {
    auto [line, col] = parser.position();
    std::string name = parser.identifier();
    for (auto const& e : entries) {
      if (e.first == name) throw ParseError("duplicate catalog entry '" + name + "'", line, col);
    }
    parser.expect(':');
    entries.emplace_back(std::move(name), parser.parse_group());
  }
  return entries;
}

namespace {

struct CatalogName {
  CatalogKey key;
  std::string_view name;
};

constexpr CatalogName kCatalogNames[] = {
    {CatalogKey::Gamma, "Gamma"},       {CatalogKey::Gamma0, "Gamma0"},
    {CatalogKey::Lambda0, "Lambda0"},   {CatalogKey::Lambda1, "Lambda1"},
    {CatalogKey::Lambda2, "Lambda2"},   {CatalogKey::GammaW, "GammaW"},
    {CatalogKey::GammaXC2, "GammaXC2"}, {CatalogKey::Gamma0XC2, "Gamma0XC2"},
};

std::map<CatalogKey, Presentation> const& catalog_entries() {
  static auto const entries = [] {
    std::map<CatalogKey, Presentation> out;
    for (auto& [name, p] : parse_catalog(catalog_text())) out.emplace(catalog_key(name), p);
    for (auto const& cn : kCatalogNames) {
      if (!out.count(cn.key)) throw Error("catalog is missing " + std::string(cn.name));
    }
    return out;
  }();
  return entries;
}

}  // namespace

std::string_view catalog_name(CatalogKey key) {
  for (auto const& cn : kCatalogNames) {
    if (cn.key == key) return cn.name;
  }
  return {};
}

CatalogKey catalog_key(std::string_view name) {
  for (auto const& cn : kCatalogNames) {
    if (cn.name == name) return cn.key;
  }
  throw InvalidArgument("unknown catalog key '" + std::string(name) + "'");
}

std::vector<CatalogKey> const& all_catalog_keys() {
  static std::vector<CatalogKey> const keys = [] {
    std::vector<CatalogKey> out;
    for (auto const& cn : kCatalogNames) out.push_back(cn.key);
    return out;
  }();
  return keys;
}

Presentation const& catalog(CatalogKey key) { return catalog_entries().at(key); }

Presentation const& catalog(std::string_view name) { return catalog(catalog_key(name)); }

std::string_view catalog_text() { return detail::kCatalogText; }

}  // namespace grpkit

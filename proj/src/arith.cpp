#include "grpkit/arith.hpp"

#include <algorithm>
#include <cctype>

#include "grpkit/errors.hpp"

namespace grpkit {

namespace {

using u128 = unsigned __int128;

std::uint64_t mod(long v, std::uint64_t p) {
  long m = static_cast<long>(static_cast<std::int64_t>(v) % static_cast<std::int64_t>(p));
  return static_cast<std::uint64_t>(m < 0 ? m + static_cast<long>(p) : m);
}

// Coefficients mod p, highest degree first.
using ModPoly = std::vector<std::uint64_t>;

std::uint64_t eval(ModPoly const& f, std::uint64_t x, std::uint64_t p) {
  u128 acc = 0;
  for (std::uint64_t c : f) acc = (acc * x + c) % p;
  return static_cast<std::uint64_t>(acc);
}

// Divides a monic f by (x - r), assuming r is a root.
ModPoly deflate(ModPoly const& f, std::uint64_t r, std::uint64_t p) {
  ModPoly q;
  u128 carry = 0;
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    carry = (carry * r + f[i]) % p;
    q.push_back(static_cast<std::uint64_t>(carry));
  }
  return q;
}

bool squarefree(mpz_class n) {
  n = abs(n);
  if (n == 0) return false;
  for (mpz_class d = 2; d * d <= n; ++d) {
    if (n % (d * d) == 0) return false;
    while (n % d == 0) n /= d;
  }
  return true;
}

}  // namespace

FieldSpec builtin_field(std::string_view label) {
  if (label == "Qomega") return FieldSpec{{1, 1, 1}, "Qomega"};
  if (label == "Kweeks") return FieldSpec{{1, -1, 0, 1}, "Kweeks"};
  throw InvalidArgument("unknown field '" + std::string(label) + "'");
}

FieldSpec parse_field(std::string_view text) {
  if (text == "Qomega" || text == "Kweeks") return builtin_field(text);
  // Sum of terms c*x^k, c x^k, x^k, x, c.
  std::vector<long> by_degree;
  std::size_t pos = 0;
  auto fail = [&](char const* what) { throw ParseError(what, 1, pos + 1); };
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) fail("empty polynomial");
  while (pos < s.size()) {
    long sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      fail("expected '+' or '-'");
    }
    long coeff = 1;
    bool has_coeff = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coeff = 0;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        coeff = coeff * 10 + (s[pos++] - '0');
        if (coeff > 1000000000L) fail("coefficient too large");
      }
      has_coeff = true;
      if (pos < s.size() && s[pos] == '*') ++pos;
    }
    std::size_t deg = 0;
    if (pos < s.size() && s[pos] == 'x') {
      ++pos;
      deg = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected exponent");
        deg = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
          deg = deg * 10 + static_cast<std::size_t>(s[pos++] - '0');
          if (deg > 64) fail("degree too large");
        }
      }
    } else if (!has_coeff) {
      fail("expected term");
    }
    if (by_degree.size() <= deg) by_degree.resize(deg + 1, 0);
    by_degree[deg] += sign * coeff;
  }
  while (!by_degree.empty() && by_degree.back() == 0) by_degree.pop_back();
  if (by_degree.size() < 2) throw InvalidArgument("polynomial must have degree at least 1");
  if (by_degree.back() != 1) throw InvalidArgument("polynomial must be monic");
  std::reverse(by_degree.begin(), by_degree.end());
  return FieldSpec{by_degree, std::string(text)};
}

mpz_class discriminant(FieldSpec const& f) {
  auto const& c = f.min_poly;
  switch (f.degree()) {
    case 1:
      return 1;
    case 2: {
      mpz_class b = c[1], d = c[2];
      return b * b - 4 * d;
    }
    case 3: {
      mpz_class b = c[1], cc = c[2], d = c[3];
      return b * b * cc * cc - 4 * cc * cc * cc - 4 * b * b * b * d - 27 * d * d + 18 * b * cc * d;
    }
    default:
      throw InvalidArgument("only fields of degree at most 3 are supported");
  }
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeSplitting split_prime(FieldSpec const& f, std::uint64_t p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (f.degree() == 0 || f.min_poly.front() != 1) throw InvalidArgument("minimal polynomial must be monic");
  if (!squarefree(discriminant(f))) {
    throw NonSquarefreeDiscriminant("discriminant of " + f.label + " is not squarefree");
  }
  ModPoly g;
  for (long c : f.min_poly) g.push_back(mod(c, p));

  PrimeSplitting out;
  out.p = p;
  // Linear factors with multiplicity.
  for (std::uint64_t r = 0; r < p && g.size() > 1; ++r) {
    unsigned e = 0;
    while (g.size() > 1 && eval(g, r, p) == 0) {
      g = deflate(g, r, p);
      ++e;
    }
    if (e) out.factors.push_back({1, e});
  }
  // No roots left: what remains (degree <= 3) is irreducible.
  if (g.size() > 1) out.factors.push_back({static_cast<unsigned>(g.size() - 1), 1});
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

std::string render_splitting(PrimeSplitting const& s) {
  std::string out;
  for (PrimeFactor const& f : s.factors) {
    if (!out.empty()) out += ' ';
    out += "(" + std::to_string(f.ramification) + "," + std::to_string(f.residue_degree) + ")";
  }
  return out;
}

CongruenceQuotient bianchi_quotient_catalog(std::uint64_t p) {
  PrimeSplitting s = split_prime(builtin_field("Qomega"), p);
  CongruenceQuotient out;
  out.p = p;
  mpz_class pz = static_cast<unsigned long>(p);
  if (s.factors.size() == 1 && s.factors[0].residue_degree == 2) {
    out.targets.push_back({pz * pz, 1});
  } else if (s.factors.size() == 2) {
    out.targets.push_back({pz, 2});
  } else {
    out.targets.push_back({pz, 1});
  }
  return out;
}

mpz_class psl2_order(std::uint64_t q) {
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;
  std::uint64_t r = q;
  while (r % p == 0 && r > 1) r /= p;
  if (q < 2 || r != 1) throw InvalidArgument(std::to_string(q) + " is not a prime power");
  mpz_class qq = static_cast<unsigned long>(q);
  mpz_class n = qq * (qq - 1) * (qq + 1);
  return q % 2 == 1 ? mpz_class(n / 2) : n;
}

}  // namespace grpkit

#include "grpkit/int_matrix.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "grpkit/errors.hpp"

namespace grpkit {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (auto const& row : rows) {
    if (row.size() != cols_) throw InvalidArgument("ragged matrix literal");
    for (long v : row) entries_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::from_rows(std::vector<std::vector<mpz_class>> const& rows) {
  IntegerMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw InvalidArgument("ragged matrix");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::transposed() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

IntegerMatrix operator*(IntegerMatrix const& a, IntegerMatrix const& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("matrix dimension mismatch");
  IntegerMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

IntegerMatrix operator+(IntegerMatrix const& a, IntegerMatrix const& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("matrix dimension mismatch");
  IntegerMatrix c = a;
  for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] += b.entries_[i];
  return c;
}

IntegerMatrix operator-(IntegerMatrix const& a, IntegerMatrix const& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("matrix dimension mismatch");
  IntegerMatrix c = a;
  for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] -= b.entries_[i];
  return c;
}

IntegerMatrix IntegerMatrix::power(unsigned long e) const {
  if (!is_square()) throw InvalidArgument("matrix power needs a square matrix");
  IntegerMatrix result = identity(rows_);
  for (unsigned long i = 0; i < e; ++i) result = result * *this;
  return result;
}

mpz_class IntegerMatrix::trace() const {
  if (!is_square()) throw InvalidArgument("trace needs a square matrix");
  mpz_class t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

mpz_class IntegerMatrix::determinant() const {
  if (!is_square()) throw InvalidArgument("determinant needs a square matrix");
  std::size_t n = rows_;
  if (n == 0) return 1;
  IntegerMatrix a = *this;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntegerMatrix parse_matrix(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) {
      throw ParseError(std::string("expected '") + c + "' in matrix literal", 1, pos + 1);
    }
    ++pos;
  };
  auto accept = [&](char c) {
    skip();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  };
  std::vector<std::vector<mpz_class>> rows;
  expect('[');
  if (!accept(']')) {
    do {
      expect('[');
      std::vector<mpz_class> row;
      do {
        skip();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        std::string token(text.substr(start, pos - start));
        if (token.empty() || token == "-" || token == "+") {
          throw ParseError("expected integer in matrix literal", 1, start + 1);
        }
        if (token[0] == '+') token.erase(0, 1);
        row.emplace_back(token);
      } while (accept(','));
      expect(']');
      rows.push_back(std::move(row));
    } while (accept(','));
    expect(']');
  }
  skip();
  if (pos != text.size()) throw ParseError("trailing input after matrix literal", 1, pos + 1);
  return IntegerMatrix::from_rows(rows);
}

std::string render_matrix(IntegerMatrix const& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += m(i, j).get_str();
    }
    out += ']';
  }
  return out + "]";
}

namespace {

// Elimination state for the Smith form. Row operations are mirrored on
// `left`, column operations on `right`.
struct SnfWorker {
  IntegerMatrix a;
  IntegerMatrix left;
  IntegerMatrix right;
  bool witnesses;

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(i, j), a(k, j));
    if (witnesses) {
      for (std::size_t j = 0; j < left.cols(); ++j) std::swap(left(i, j), left(k, j));
    }
  }
  void swap_cols(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, k));
    if (witnesses) {
      for (std::size_t r = 0; r < right.rows(); ++r) std::swap(right(r, i), right(r, k));
    }
  }
  // row_i += q * row_k
  void add_row(std::size_t i, std::size_t k, mpz_class const& q) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(k, j) != 0) a(i, j) += q * a(k, j);
    }
    if (witnesses) {
      for (std::size_t j = 0; j < left.cols(); ++j) {
        if (left(k, j) != 0) left(i, j) += q * left(k, j);
      }
    }
  }
  // col_i += q * col_k
  void add_col(std::size_t i, std::size_t k, mpz_class const& q) {
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (a(r, k) != 0) a(r, i) += q * a(r, k);
    }
    if (witnesses) {
      for (std::size_t r = 0; r < right.rows(); ++r) {
        if (right(r, k) != 0) right(r, i) += q * right(r, k);
      }
    }
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = -a(i, j);
    if (witnesses) {
      for (std::size_t j = 0; j < left.cols(); ++j) left(i, j) = -left(i, j);
    }
  }

  // Moves the entry of least absolute value in the trailing block to (t, t).
  bool pivot_min(std::size_t t) {
    std::size_t bi = 0, bj = 0;
    bool found = false;
    for (std::size_t i = t; i < a.rows(); ++i) {
      for (std::size_t j = t; j < a.cols(); ++j) {
        if (a(i, j) == 0) continue;
        if (!found || mpz_cmpabs(a(i, j).get_mpz_t(), a(bi, bj).get_mpz_t()) < 0) {
          bi = i;
          bj = j;
          found = true;
        }
      }
    }
    if (!found) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  // Moves the least nonzero entry of row t and column t to (t, t).
  void pivot_line(std::size_t t) {
    std::size_t bi = t, bj = t;
    for (std::size_t i = t + 1; i < a.rows(); ++i) {
      if (a(i, t) != 0 && mpz_cmpabs(a(i, t).get_mpz_t(), a(bi, bj).get_mpz_t()) < 0) {
        bi = i;
        bj = t;
      }
    }
    for (std::size_t j = t + 1; j < a.cols(); ++j) {
      if (a(t, j) != 0 && mpz_cmpabs(a(t, j).get_mpz_t(), a(bi, bj).get_mpz_t()) < 0) {
        bi = t;
        bj = j;
      }
    }
    swap_rows(t, bi);
    swap_cols(t, bj);
  }

  void run() {
    std::size_t limit = std::min(a.rows(), a.cols());
    mpz_class q;
    for (std::size_t t = 0; t < limit; ++t) {
      if (!pivot_min(t)) break;
      while (true) {
        bool clean = true;
        for (std::size_t i = t + 1; i < a.rows(); ++i) {
          if (a(i, t) == 0) continue;
          mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
          add_row(i, t, -q);
          if (a(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < a.cols(); ++j) {
          if (a(t, j) == 0) continue;
          mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
          add_col(j, t, -q);
          if (a(t, j) != 0) clean = false;
        }
        if (!clean) {
          pivot_line(t);
          continue;
        }
        // Pivot must divide the whole trailing block.
        bool divides = true;
        for (std::size_t i = t + 1; i < a.rows() && divides; ++i) {
          for (std::size_t j = t + 1; j < a.cols(); ++j) {
            if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
              add_row(t, i, 1);
              divides = false;
              break;
            }
          }
        }
        if (divides) break;
      }
      if (a(t, t) < 0) negate_row(t);
    }
  }
};

}  // namespace

SnfResult smith_normal_form(IntegerMatrix const& m, bool with_witnesses) {
  SnfWorker w{m, IntegerMatrix(), IntegerMatrix(), with_witnesses};
  if (with_witnesses) {
    w.left = IntegerMatrix::identity(m.rows());
    w.right = IntegerMatrix::identity(m.cols());
  }
  w.run();
  SnfResult out;
  std::size_t limit = std::min(m.rows(), m.cols());
  for (std::size_t i = 0; i < limit; ++i) out.diagonal.push_back(w.a(i, i));
  out.left = std::move(w.left);
  out.right = std::move(w.right);
  return out;
}

std::string render_invariants(AbelianInvariants const& a) {
  std::vector<std::string> parts;
  for (mpz_class const& d : a.torsion) parts.push_back(d.get_str());
  for (std::size_t i = 0; i < a.free_rank; ++i) parts.emplace_back("0");
  if (parts.empty()) return "[]";
  std::string out = "[ ";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ", ";
    out += parts[i];
  }
  return out + " ]";
}

AbelianInvariants parse_invariants(std::string_view text) {
  AbelianInvariants out;
  std::string digits;
  bool in_brackets = false, closed = false;
  auto flush = [&] {
    if (digits.empty()) return;
    mpz_class v(digits);
    digits.clear();
    if (v == 0) {
      ++out.free_rank;
    } else {
      if (out.free_rank > 0) throw ParseError("torsion invariant after a free factor", 1, 1);
      if (v < 2) throw ParseError("torsion invariants must be at least 2", 1, 1);
      out.torsion.push_back(v);
    }
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '[' && !in_brackets && !closed) {
      in_brackets = true;
    } else if (c == ']' && in_brackets) {
      flush();
      in_brackets = false;
      closed = true;
    } else if (c == ',' && in_brackets) {
      if (digits.empty()) throw ParseError("empty invariant", 1, i + 1);
      flush();
    } else if (std::isdigit(static_cast<unsigned char>(c)) && in_brackets) {
      digits += c;
    } else {
      throw ParseError("malformed invariant list", 1, i + 1);
    }
  }
  if (!closed) throw ParseError("unterminated invariant list", 1, text.size());
  for (std::size_t i = 0; i + 1 < out.torsion.size(); ++i) {
    if (!mpz_divisible_p(out.torsion[i + 1].get_mpz_t(), out.torsion[i].get_mpz_t())) {
      throw ParseError("torsion invariants must form a divisibility chain", 1, 1);
    }
  }
  return out;
}

mpz_class torsion_order(AbelianInvariants const& a) {
  mpz_class n = 1;
  for (mpz_class const& d : a.torsion) n *= d;
  return n;
}

AbelianInvariants cokernel_invariants(IntegerMatrix const& m) {
  SnfResult snf = smith_normal_form(m, false);
  AbelianInvariants out;
  std::size_t rank = 0;
  for (mpz_class const& d : snf.diagonal) {
    if (d == 0) continue;
    ++rank;
    if (d > 1) out.torsion.push_back(d);
  }
  out.free_rank = m.cols() - rank;
  return out;
}

IntegerMatrix relation_matrix(Presentation const& p) {
  std::size_t k = p.num_generators();
  IntegerMatrix m(p.relators().size(), k);
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    auto sums = exponent_sums(p.relators()[i], k);
    for (std::size_t j = 0; j < k; ++j) m(i, j) = static_cast<long>(sums[j]);
  }
  return m;
}

AbelianInvariants abelian_invariants(Presentation const& p) {
  return cokernel_invariants(relation_matrix(p));
}

AbelianInvariants mapping_torus_h1(IntegerMatrix const& a, unsigned long d) {
  if (!a.is_square()) throw InvalidArgument("monodromy matrix must be square");
  IntegerMatrix b = a.power(d) - IntegerMatrix::identity(a.rows());
  AbelianInvariants out = cokernel_invariants(b);
  out.free_rank += 1;
  return out;
}

mpz_class torus_bundle_torsion(IntegerMatrix const& psi, unsigned long d) {
  if (psi.rows() != 2 || psi.cols() != 2) throw InvalidArgument("expected a 2x2 matrix");
  if (psi.determinant() != 1) throw InvalidArgument("matrix must have determinant 1");
  mpz_class t = psi.power(d).trace() - 2;
  return abs(t);
}

std::vector<mpz_class> char_poly(IntegerMatrix const& m) {
  if (!m.is_square()) throw InvalidArgument("characteristic polynomial needs a square matrix");
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
  std::size_t n = m.rows();
  std::vector<mpz_class> coeffs(n + 1);
  coeffs[0] = 1;
  IntegerMatrix mk(n, n);
  IntegerMatrix id = IntegerMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += coeffs[k - 1];
    mpz_class t = (m * mk).trace();
    mpz_class kk = static_cast<unsigned long>(k);
    mpz_class c = -t;
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), kk.get_mpz_t());
    coeffs[k] = c;
  }
  return coeffs;
}

std::string render_polynomial(std::vector<mpz_class> const& coeffs, char var) {
  std::string out;
  std::size_t n = coeffs.empty() ? 0 : coeffs.size() - 1;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    mpz_class c = coeffs[i];
    if (c == 0) continue;
    std::size_t deg = n - i;
    bool negative = c < 0;
    mpz_class mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mag != 1 || deg == 0) out += mag.get_str();
    if (deg > 0) {
      out += var;
      if (deg > 1) out += "^" + std::to_string(deg);
    }
  }
  return out.empty() ? "0" : out;
}

IntegerMatrix transvection(std::vector<mpz_class> const& c, IntegerMatrix const& j) {
  std::size_t n = c.size();
  if (!j.is_square() || j.rows() != n) throw InvalidArgument("dimension mismatch between curve and form");
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) {
      if (j(r, s) != -j(s, r)) throw InvalidArgument("intersection form must be antisymmetric");
    }
  }
  // x -> x + (x^T j c) c, i.e. I + c (j c)^T acting on column vectors.
  std::vector<mpz_class> jc(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) jc[r] += j(r, s) * c[s];
  }
  IntegerMatrix t = IntegerMatrix::identity(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) t(r, s) += c[r] * jc[s];
  }
  return t;
}

IntegerMatrix standard_symplectic_form(std::size_t genus) {
  IntegerMatrix j(2 * genus, 2 * genus);
  for (std::size_t i = 0; i < genus; ++i) {
    j(2 * i, 2 * i + 1) = 1;
    j(2 * i + 1, 2 * i) = -1;
  }
  return j;
}

}  // namespace grpkit

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "grpkit/presentation.hpp"

namespace grpkit {

class IntegerMatrix {
public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntegerMatrix from_rows(std::vector<std::vector<mpz_class>> const& rows);
  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  mpz_class& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  mpz_class const& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  IntegerMatrix transposed() const;
  IntegerMatrix power(unsigned long e) const;
  mpz_class trace() const;
  // Fraction-free (Bareiss) elimination.
  mpz_class determinant() const;

  friend IntegerMatrix operator*(IntegerMatrix const& a, IntegerMatrix const& b);
  friend IntegerMatrix operator+(IntegerMatrix const& a, IntegerMatrix const& b);
  friend IntegerMatrix operator-(IntegerMatrix const& a, IntegerMatrix const& b);
  friend bool operator==(IntegerMatrix const&, IntegerMatrix const&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> entries_;
};

// Row-major literal such as "[[0,1],[-1,0]]".
IntegerMatrix parse_matrix(std::string_view text);
std::string render_matrix(IntegerMatrix const& m);

struct SnfResult {
  // min(rows, cols) entries, nonnegative; the nonzero ones form a chain
  // d1 | d2 | ... and precede the zeros.
  std::vector<mpz_class> diagonal;
  IntegerMatrix left;   // rows x rows, unimodular
  IntegerMatrix right;  // cols x cols, unimodular
};

// left * m * right == diag(diagonal). Witnesses are skipped when not wanted.
SnfResult smith_normal_form(IntegerMatrix const& m, bool with_witnesses = true);

struct AbelianInvariants {
  std::vector<mpz_class> torsion;  // each >= 2, dividing the next
  std::size_t free_rank = 0;

  friend bool operator==(AbelianInvariants const&, AbelianInvariants const&) = default;
};

// Torsion list followed by one 0 per free factor, e.g. "[ 5, 55, 0 ]"; the
// trivial group renders as "[]".
std::string render_invariants(AbelianInvariants const& a);
AbelianInvariants parse_invariants(std::string_view text);
mpz_class torsion_order(AbelianInvariants const& a);

// Invariants of Z^cols / (row space of m).
AbelianInvariants cokernel_invariants(IntegerMatrix const& m);

// Relator exponent-sum matrix (relators x generators).
IntegerMatrix relation_matrix(Presentation const& p);
AbelianInvariants abelian_invariants(Presentation const& p);

// H1 of the mapping torus with monodromy a^d: Z + coker(a^d - I).
AbelianInvariants mapping_torus_h1(IntegerMatrix const& a, unsigned long d);

// |tr(psi^d) - 2| for psi in SL(2,Z).
mpz_class torus_bundle_torsion(IntegerMatrix const& psi, unsigned long d);

// Characteristic polynomial det(tI - m), coefficients from t^n down to t^0.
std::vector<mpz_class> char_poly(IntegerMatrix const& m);
std::string render_polynomial(std::vector<mpz_class> const& coeffs, char var = 't');

// Matrix of x -> x + (x^T j c) c, the homology action of a right-handed
// Dehn twist about a curve with class c for the intersection form j.
IntegerMatrix transvection(std::vector<mpz_class> const& c, IntegerMatrix const& j);

// Standard symplectic form of genus g: blocks [[0,1],[-1,0]].
IntegerMatrix standard_symplectic_form(std::size_t genus);

}  // namespace grpkit

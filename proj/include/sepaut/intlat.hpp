#pragma once

#include "sepaut/numeric.hpp"

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace sepaut {

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t size);
  // One row per vector; all vectors must have length cols.
  static IntMatrix from_rows(std::span<IntVector const> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  BigInt const& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  IntVector row(std::size_t r) const;
  IntVector col(std::size_t c) const;

  IntMatrix transpose() const;
  IntMatrix operator*(IntMatrix const& rhs) const;
  IntVector operator*(IntVector const& v) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, BigInt const& factor);
  void add_col_multiple(std::size_t target, std::size_t source, BigInt const& factor);
  void negate_row(std::size_t r);

  bool is_zero() const;
  bool operator==(IntMatrix const&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

std::ostream& operator<<(std::ostream& os, IntMatrix const& m);

// Reads "rows cols" followed by rows*cols integers. Throws ParseError.
IntMatrix read_matrix(std::istream& in);

// U * A * V = S with U, V unimodular and S = diag(d_1, ..., d_r, 0, ...),
// d_k > 0 and d_k | d_{k+1}.
struct SNFResult {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;
  IntVector divisors;

  std::size_t rank() const { return divisors.size(); }
};

SNFResult smith_normal_form(IntMatrix const& A);

// Saturated basis of the integer kernel {a : A a = 0}, in row Hermite
// normal form.
std::vector<IntVector> kernel_basis(IntMatrix const& A);

// Row Hermite normal form with zero rows dropped: pivots positive, entries
// above each pivot reduced into [0, pivot).
IntMatrix hermite_normal_form(IntMatrix const& A);

// Fraction-free (Bareiss) determinant of a square matrix.
BigInt determinant(IntMatrix const& A);

// gcd of the absolute values of all k x k minors; 1 for k == 0. Exhaustive,
// meant for small matrices.
BigInt gcd_of_minors(IntMatrix const& A, std::size_t k);

std::size_t rank(IntMatrix const& A);

// Unique rational solution x of A x = b; throws std::invalid_argument when
// the system is inconsistent or underdetermined.
std::vector<Rational> solve_rational(IntMatrix const& A, IntVector const& b);

BigInt dot(IntVector const& a, IntVector const& b);

}  // namespace sepaut

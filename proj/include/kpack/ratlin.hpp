#pragma once

// Exact rational linear algebra: dense matrices over Q, fraction-free rank and
// kernel computation, and inertia of symmetric matrices by congruence.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace kpack {

using BigInt = mpz_class;

/// GMP rationals are kept in lowest terms with a positive denominator by every
/// arithmetic operation; `make_rational` is the only constructor from a raw
/// numerator/denominator pair.
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den);

/// Parses "p/q" or "p".
Rational parse_rational(const std::string& text);

/// Lossless "num/den" form (denominator always present, e.g. "3/1").
std::string to_string(const Rational& q);

/// True when gcd(|num|, den) = 1 and den > 0.
bool is_canonical(const Rational& q);

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<Rational>& entries() const noexcept { return data_; }

  RatMatrix transpose() const;
  RatMatrix column(std::size_t c) const;
  RatMatrix submatrix(const std::vector<std::size_t>& row_ids,
                      const std::vector<std::size_t>& col_ids) const;

  bool is_zero() const;
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_diagonal() const;
  Rational trace() const;
  std::size_t nonzeros() const;

  RatMatrix& operator+=(const RatMatrix& other);
  RatMatrix& operator-=(const RatMatrix& other);
  RatMatrix& operator*=(const Rational& s);

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RatMatrix operator+(RatMatrix a, const RatMatrix& b);
RatMatrix operator-(RatMatrix a, const RatMatrix& b);
RatMatrix operator*(RatMatrix a, const Rational& s);
RatMatrix operator*(const Rational& s, RatMatrix a);

/// Product; zero entries of the left factor are skipped, so structured sparse
/// operands cost nnz(a) * b.cols().
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);

RatMatrix transpose(const RatMatrix& m);

/// Assembles a block matrix. Every block row must agree on row count and every
/// block column on column count.
RatMatrix block_compose(const std::vector<std::vector<RatMatrix>>& blocks);

RatMatrix hstack(const std::vector<RatMatrix>& parts, std::size_t rows);

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  std::size_t dimension() const noexcept { return positive + negative + zero; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

std::string to_string(const Signature& s);

std::size_t rank(const RatMatrix& m);

/// Columns span the null space; one column per non-pivot column of m, in
/// ascending order, normalized so that free variable is 1 and the other free
/// variables are 0 (the reduced echelon basis).
RatMatrix kernel_basis(const RatMatrix& m);

/// Reduced row echelon form: `rows` holds one row per pivot, sorted by pivot
/// column, each with a 1 in its pivot column and 0 in every other pivot column.
struct RowEchelon {
  RatMatrix rows;
  std::vector<std::size_t> pivots;
};

RowEchelon row_echelon(const RatMatrix& m);

/// Inertia by rational congruence diagonalization. Throws NonSymmetric.
Signature signature(const RatMatrix& m);

}  // namespace kpack

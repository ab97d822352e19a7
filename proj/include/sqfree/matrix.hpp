#ifndef SQFREE_MATRIX_HPP
#define SQFREE_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "sqfree/poly.hpp"
#include "sqfree/rational.hpp"

namespace sqfree {

/// Dense square matrix over the rationals, row-major.
class Matrix {
 public:
  /// Zero matrix of the given dimension; throws DomainError on dim == 0.
  explicit Matrix(std::size_t dim);
  Matrix(std::size_t dim, std::vector<Rational> row_major);

  static Matrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  Rational& at(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const Rational& at(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t dim_;
  std::vector<Rational> entries_;
};

/// Column vector [p] of fixed length, zero-padded.
class CoeffVector {
 public:
  explicit CoeffVector(std::size_t len);
  explicit CoeffVector(std::vector<Rational> entries);

  /// Coefficients of p padded to `len`; DomainError unless deg p < len.
  static CoeffVector from_poly(const Poly& p, std::size_t len);
  Poly to_poly() const { return Poly(entries_); }

  std::size_t size() const noexcept { return entries_.size(); }
  Rational& operator[](std::size_t i) { return entries_[i]; }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }

  friend bool operator==(const CoeffVector&, const CoeffVector&) = default;

 private:
  std::vector<Rational> entries_;
};

/// Companion matrix of a monic r of degree s >= 1: ones on the subdiagonal,
/// last column -(r_0, ..., r_{s-1}).
Matrix companion(const Poly& r);

/// Cubic product; charges dim^3 multiplications.
Matrix mat_mul(const Matrix& a, const Matrix& b);
/// Charges dim^2 multiplications.
CoeffVector mat_vec(const Matrix& a, const CoeffVector& v);

/// p(c) by matrix Horner, M <- M*c + p_i*I from the leading coefficient
/// down. Performs exactly deg p matrix products; each p_i*I is charged
/// dim multiplications, so the total is deg p * (dim^3 + dim).
Matrix poly_at_matrix(const Poly& p, const Matrix& c);

}  // namespace sqfree

#endif  // SQFREE_MATRIX_HPP

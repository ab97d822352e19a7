#include "sqfree/matrix.hpp"

#include <random>

#include <gtest/gtest.h>

#include "sqfree/error.hpp"
#include "test_support.hpp"

namespace sqfree {
namespace {

Matrix from_rows(std::vector<std::vector<Rational>> rows) {
  const std::size_t n = rows.size();
  std::vector<Rational> flat;
  for (auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
  return Matrix(n, std::move(flat));
}

// Laplace expansion along the first row; independent of mat_mul.
Rational cofactor_det(const Matrix& m) {
  const std::size_t n = m.dim();
  if (n == 1) return m.at(0, 0);
  Rational det;
  for (std::size_t col = 0; col < n; ++col) {
    if (m.at(0, col).is_zero()) continue;
    Matrix minor(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = 0, mj = 0; j < n; ++j) {
        if (j == col) continue;
        minor.at(i - 1, mj++) = m.at(i, j);
      }
    }
    const Rational term = m.at(0, col) * cofactor_det(minor);
    if (col % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

Poly random_monic(std::mt19937_64& rng, std::size_t degree) {
  std::vector<Rational> c(degree + 1);
  for (std::size_t i = 0; i < degree; ++i) c[i] = testing::random_rational(rng, 20);
  c[degree] = Rational(1);
  return Poly(std::move(c));
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = testing::random_rational(rng, 50);
  }
  return m;
}

const Matrix kWorkedCompanion = from_rows({{0, -2}, {1, 3}});

TEST(MatrixTest, Companion) {
  EXPECT_EQ(companion(Poly({2, -3, 1})), kWorkedCompanion);
  EXPECT_EQ(companion(Poly({0, 1})), Matrix(1));
  EXPECT_EQ(companion(Poly({-1, 0, 0, 1})), from_rows({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}));
  EXPECT_THROW(companion(Poly({1, 2})), DomainError);
  EXPECT_THROW(companion(Poly::constant(1)), DomainError);
}

TEST(MatrixTest, CompanionCharacteristicPolynomial) {
  std::mt19937_64 rng(5);
  for (std::size_t s = 1; s <= 5; ++s) {
    const Poly r = random_monic(rng, s);
    const Matrix c = companion(r);
    Rational trace;
    for (std::size_t i = 0; i < s; ++i) trace += c.at(i, i);
    EXPECT_EQ(trace, -r.coeff(s - 1));
    const Rational sign = s % 2 == 0 ? Rational(1) : Rational(-1);
    EXPECT_EQ(cofactor_det(c), sign * r.coeff(0));
    // det(tI - C) = r(t) at s + 1 points pins the characteristic polynomial.
    for (long t = -2; t <= static_cast<long>(s) - 2; ++t) {
      Matrix shifted(s);
      for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) shifted.at(i, j) = -c.at(i, j);
        shifted.at(i, i) += Rational(t);
      }
      EXPECT_EQ(cofactor_det(shifted), eval(r, Rational(t)));
    }
  }
}

TEST(MatrixTest, MatMul) {
  std::mt19937_64 rng(8);
  const Matrix m = random_matrix(rng, 3);
  EXPECT_EQ(mat_mul(Matrix::identity(3), m), m);
  EXPECT_EQ(mat_mul(kWorkedCompanion, kWorkedCompanion), from_rows({{-2, -6}, {3, 7}}));
  EXPECT_TRUE(mat_mul(Matrix(3), m).is_zero());
  EXPECT_THROW(mat_mul(Matrix(2), Matrix(3)), DomainError);
}

TEST(MatrixTest, MatMulChargesCube) {
  std::mt19937_64 rng(9);
  for (std::size_t n = 1; n <= 6; ++n) {
    const Matrix a = random_matrix(rng, n), b = random_matrix(rng, n);
    OpCounter counter;
    {
      CountingScope scope(counter);
      (void)mat_mul(a, b);
    }
    EXPECT_EQ(counter.scalar_muls, n * n * n);
  }
}

TEST(MatrixTest, MatMulLaws) {
  std::mt19937_64 rng(10);
  for (int iter = 0; iter < 20; ++iter) {
    const Matrix a = random_matrix(rng, 4), b = random_matrix(rng, 4), c = random_matrix(rng, 4);
    EXPECT_EQ(mat_mul(mat_mul(a, b), c), mat_mul(a, mat_mul(b, c)));
    EXPECT_EQ(mat_mul(a, Matrix::identity(4)), a);
    EXPECT_EQ(mat_mul(Matrix::identity(4), a), a);
  }
}

TEST(MatrixTest, MatVec) {
  const CoeffVector v(std::vector<Rational>{Rational(1, 2), -3, 8});
  EXPECT_EQ(mat_vec(Matrix::identity(3), v), v);
  const CoeffVector g = CoeffVector::from_poly(Poly({-3, 2}), 2);
  EXPECT_EQ(mat_vec(kWorkedCompanion, g), CoeffVector(std::vector<Rational>{-4, 3}));
  EXPECT_EQ(mat_vec(kWorkedCompanion, CoeffVector(2)), CoeffVector(2));
  EXPECT_THROW(mat_vec(kWorkedCompanion, v), DomainError);
  EXPECT_THROW(CoeffVector::from_poly(Poly({1, 1, 1}), 2), DomainError);
  EXPECT_EQ(CoeffVector::from_poly(Poly({0, 1}), 4).to_poly(), Poly({0, 1}));
}

TEST(MatrixTest, PolyAtMatrix) {
  std::mt19937_64 rng(12);
  const Matrix m = random_matrix(rng, 3);
  EXPECT_EQ(poly_at_matrix(Poly({0, 1}), m), m);
  EXPECT_TRUE(poly_at_matrix(Poly({2, -3, 1}), kWorkedCompanion).is_zero());
  EXPECT_EQ(poly_at_matrix(Poly({-4, 3}), kWorkedCompanion), from_rows({{-4, -6}, {3, 5}}));

  Matrix seven = Matrix::identity(3);
  for (std::size_t i = 0; i < 3; ++i) seven.at(i, i) = Rational(7);
  EXPECT_EQ(poly_at_matrix(Poly::constant(7), m), seven);
  EXPECT_TRUE(poly_at_matrix(Poly(), m).is_zero());
}

TEST(MatrixTest, CayleyHamilton) {
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 40; ++iter) {
    const Poly r = random_monic(rng, 1 + iter % 8);
    EXPECT_TRUE(poly_at_matrix(r, companion(r)).is_zero()) << r;
  }
}

TEST(MatrixTest, PolyAtMatrixCharge) {
  std::mt19937_64 rng(14);
  for (std::size_t s = 1; s <= 5; ++s) {
    for (std::size_t d = 0; d <= 4; ++d) {
      std::vector<Rational> c(d + 1);
      for (auto& x : c) x = testing::random_rational(rng, 9);
      c[d] = Rational(1 + static_cast<long>(d));
      const Poly p(std::move(c));
      const Matrix m = random_matrix(rng, s);
      OpCounter counter;
      {
        CountingScope scope(counter);
        (void)poly_at_matrix(p, m);
      }
      EXPECT_EQ(counter.scalar_muls, d * s * s * s + d * s);
    }
  }
}

}  // namespace
}  // namespace sqfree

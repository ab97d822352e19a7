#include "sqfree/matrix.hpp"

#include <algorithm>

#include "sqfree/error.hpp"

namespace sqfree {

Matrix::Matrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
  if (dim == 0) throw DomainError("matrix dimension must be positive");
}

Matrix::Matrix(std::size_t dim, std::vector<Rational> row_major)
    : dim_(dim), entries_(std::move(row_major)) {
  if (dim == 0) throw DomainError("matrix dimension must be positive");
  if (entries_.size() != dim * dim) throw DomainError("matrix entry count is not dim^2");
}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = Rational(1);
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Rational& x) { return x.is_zero(); });
}

CoeffVector::CoeffVector(std::size_t len) : entries_(len) {
  if (len == 0) throw DomainError("coefficient vector length must be positive");
}

CoeffVector::CoeffVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DomainError("coefficient vector length must be positive");
}

CoeffVector CoeffVector::from_poly(const Poly& p, std::size_t len) {
  if (p.size() > len) throw DomainError("polynomial does not fit the coefficient vector");
  CoeffVector v(len);
  for (std::size_t i = 0; i < p.size(); ++i) v[i] = p.coeffs()[i];
  return v;
}

Matrix companion(const Poly& r) {
  if (r.is_constant()) throw DomainError("companion matrix of a constant polynomial");
  if (!r.is_monic()) throw DomainError("companion matrix needs a monic polynomial");
  const std::size_t s = *r.degree();
  Matrix c(s);
  for (std::size_t i = 1; i < s; ++i) c.at(i, i - 1) = Rational(1);
  for (std::size_t i = 0; i < s; ++i) c.at(i, s - 1) = -r.coeffs()[i];
  return c;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) throw DomainError("matrix dimension mismatch");
  const std::size_t n = a.dim();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Rational& aik = a.at(i, k);
      for (std::size_t j = 0; j < n; ++j) out.at(i, j).add_product(aik, b.at(k, j));
    }
  }
  return out;
}

CoeffVector mat_vec(const Matrix& a, const CoeffVector& v) {
  if (a.dim() != v.size()) throw DomainError("matrix-vector dimension mismatch");
  const std::size_t n = a.dim();
  CoeffVector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i].add_product(a.at(i, j), v[j]);
  }
  return out;
}

Matrix poly_at_matrix(const Poly& p, const Matrix& c) {
  const std::size_t n = c.dim();
  Matrix acc(n);
  if (p.is_zero()) return acc;

  const auto pc = p.coeffs();
  const Rational one(1);
  for (std::size_t i = 0; i < n; ++i) acc.at(i, i) = pc.back();
  for (std::size_t k = pc.size() - 1; k-- > 0;) {
    acc = mat_mul(acc, c);
    for (std::size_t i = 0; i < n; ++i) acc.at(i, i).add_product(pc[k], one);
  }
  return acc;
}

}  // namespace sqfree

#ifndef SQFREE_POLY_HPP
#define SQFREE_POLY_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "sqfree/rational.hpp"

namespace sqfree {

/// Degree of a polynomial; the zero polynomial has no degree (std::nullopt),
/// which orders below every finite degree.
using Degree = std::optional<std::size_t>;

/// Dense univariate polynomial over the rationals. Coefficient i belongs to
/// X^i and the leading coefficient is never zero; the zero polynomial has no
/// coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly constant(const Rational& c);
  /// c * X^n
  static Poly monomial(const Rational& c, std::size_t n);
  /// X - root
  static Poly linear_root(const Rational& root);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back().is_one(); }

  Degree degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }
  /// Number of coefficients; 0 for the zero polynomial.
  std::size_t size() const noexcept { return coeffs_.size(); }

  /// Coefficient of X^i; zero beyond the degree.
  Rational coeff(std::size_t i) const;
  Rational leading() const;
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
/// Schoolbook product; charges (deg a + 1)(deg b + 1) scalar multiplications
/// for nonzero operands.
Poly operator*(const Poly& a, const Poly& b);
Poly scale(const Poly& p, const Rational& c);

struct DivMod {
  Poly quotient;
  Poly remainder;
};

/// a = q*b + rem with deg rem < deg b. Throws DomainError when b is zero.
/// A monic divisor costs (deg a - deg b + 1) * deg b multiplications.
DivMod divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);

/// Quotient a / b, throwing IntegrityError when the remainder is nonzero.
Poly exact_div(const Poly& a, const Poly& b);

Poly derivative(const Poly& p);

/// p divided by its leading coefficient. Throws DomainError for zero.
Poly monic(const Poly& p);

/// Monic gcd by the Euclidean remainder sequence, each remainder rescaled to
/// be monic. Throws DomainError when both inputs are zero.
Poly gcd(const Poly& a, const Poly& b);

/// Bezout cofactors: u*a + v*b = d with d = gcd(a, b) monic.
struct Xgcd {
  Poly d;
  Poly u;
  Poly v;
};

/// Extended Euclid. When gcd(a, b) = 1 and deg a, deg b >= 1 the cofactors
/// satisfy deg u < deg b and deg v < deg a.
Xgcd xgcd(const Poly& a, const Poly& b);

Rational eval(const Poly& p, const Rational& x);

/// Unique polynomial of degree < points.size() through all points.
/// Throws DomainError on an empty set or duplicate abscissae.
Poly lagrange_interpolate(std::span<const std::pair<Rational, Rational>> points);

/// Canonical text: descending powers, explicit signs, '*' before X.
std::string format_poly(const Poly& p);
std::ostream& operator<<(std::ostream& os, const Poly& p);

/// Parses the text grammar
///   poly := ('+'|'-')? term (('+'|'-') term)*
///   term := coef ('*'? var)? | var
///   var  := 'X' ('^' uint)?
///   coef := uint ('/' uint)?
/// with insignificant whitespace. Throws ParseError.
Poly parse_poly(std::string_view text);

}  // namespace sqfree

#endif  // SQFREE_POLY_HPP

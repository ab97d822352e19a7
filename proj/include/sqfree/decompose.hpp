#ifndef SQFREE_DECOMPOSE_HPP
#define SQFREE_DECOMPOSE_HPP

#include <cstddef>
#include <vector>

#include "sqfree/poly.hpp"
#include "sqfree/rational.hpp"

namespace sqfree {

/// One level of a square-free decomposition: P_k with exponent k.
struct SquareFreeFactor {
  unsigned exponent = 0;
  Poly factor;

  friend bool operator==(const SquareFreeFactor&, const SquareFreeFactor&) = default;
};

/// lead * P_1 * P_2^2 * ... * P_m^m. Factors are listed for k = 1..m in
/// order; levels with no roots are kept as P_k = 1, while P_m != 1.
/// A constant input has no factors.
struct Decomposition {
  Rational lead{1};
  std::vector<SquareFreeFactor> factors;

  /// lead * prod P_k^k
  Poly expand() const;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

enum class MfFormula {
  kCompanion,  ///< [M_f] = P(C_r) * [g]
  kModMul,     ///< M_f = P*g mod r
};

/// Shared preprocessing of the decomposition algorithm for a monic f:
/// r = f / gcd(f, f'), P = f' / gcd(f, f') and the Bezout pair
/// r'*g + r*h = 1 with deg g < deg r, deg h < deg r'.
///
/// g is also kept as g_scaled / g_denominator, where g_denominator is the
/// lcm of the coefficient denominators of g. Both M_f formulas multiply by
/// g_scaled and divide by g_denominator once at the end, so the inner loops
/// never renormalize fractions with g's large denominators.
struct GSContext {
  Poly f;
  Poly d;
  Poly r;
  Poly P;
  Poly g;
  Poly h;
  std::size_t s = 0;
  Poly g_scaled;
  Rational g_denominator{1};
};

/// Throws DomainError unless f is monic of degree >= 1.
GSContext gs_prepare(const Poly& f);

/// Roots-multiplicity polynomial through the companion matrix of r.
Poly mf_companion(const GSContext& ctx);
/// Roots-multiplicity polynomial as the remainder of P*g modulo r.
Poly mf_modmul(const GSContext& ctx);
Poly mf(const GSContext& ctx, MfFormula formula);

/// P_k = gcd(M_f - k, r) for k = 1, 2, ... while sum_{j<=k} j*deg P_j < deg f.
/// Throws IntegrityError when k would pass deg f, or the degree sum
/// overshoots, which only happens for a wrong M_f.
Decomposition extract_factors(const Poly& mf, const GSContext& ctx);

/// Full decomposition of any nonzero f. The leading coefficient is split off
/// into Decomposition::lead. Throws DomainError for the zero polynomial.
Decomposition gs_decompose(const Poly& f, MfFormula formula);

/// Yun's algorithm, used as an independent reference.
Decomposition yun_decompose(const Poly& f);

/// Largest k with (X - alpha)^k dividing f. Throws DomainError for zero f.
unsigned multiplicity_at(const Poly& f, const Rational& alpha);

/// True iff d is a valid square-free decomposition of f.
bool verify_decomposition(const Decomposition& d, const Poly& f);

}  // namespace sqfree

#endif  // SQFREE_DECOMPOSE_HPP

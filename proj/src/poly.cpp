#include "sqfree/poly.hpp"

#include <algorithm>
#include <sstream>

#include "sqfree/error.hpp"

namespace sqfree {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, std::size_t n) {
  std::vector<Rational> coeffs(n + 1);
  coeffs[n] = c;
  return Poly(std::move(coeffs));
}

Poly Poly::linear_root(const Rational& root) { return Poly{-root, Rational(1)}; }

Rational Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(); }

Rational Poly::leading() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a.coeffs()[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b.coeffs()[i];
  return Poly(std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rational> out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a.coeffs()[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b.coeffs()[i];
  return Poly(std::move(out));
}

Poly operator-(const Poly& a) {
  std::vector<Rational> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& c : out) c = -c;
  return Poly(std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.size() + b.size() - 1);
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  for (std::size_t i = 0; i < ac.size(); ++i) {
    for (std::size_t j = 0; j < bc.size(); ++j) out[i + j].add_product(ac[i], bc[j]);
  }
  return Poly(std::move(out));
}

Poly scale(const Poly& p, const Rational& c) {
  std::vector<Rational> out(p.coeffs().begin(), p.coeffs().end());
  for (auto& x : out) x *= c;
  return Poly(std::move(out));
}

DivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.size() < b.size()) return {Poly(), a};

  std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
  const auto bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const Rational& lead = bc.back();
  const bool unit_lead = lead.is_one();
  std::vector<Rational> quot(rem.size() - db);

  for (std::size_t top = rem.size() - 1;; --top) {
    const std::size_t shift = top - db;
    Rational c = unit_lead ? rem[top] : rem[top] / lead;
    if (!c.is_zero()) {
      for (std::size_t j = 0; j < db; ++j) rem[shift + j].sub_product(c, bc[j]);
    }
    rem[top] = Rational();
    quot[shift] = std::move(c);
    if (shift == 0) break;
  }
  rem.resize(db);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quotient; }

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw IntegrityError("division expected to be exact left a remainder");
  return q;
}

Poly derivative(const Poly& p) {
  if (p.size() <= 1) return {};
  std::vector<Rational> out(p.size() - 1);
  const auto pc = p.coeffs();
  for (std::size_t i = 1; i < pc.size(); ++i) {
    out[i - 1] = pc[i];
    if (i > 1) out[i - 1] *= Rational(static_cast<long>(i));
  }
  return Poly(std::move(out));
}

Poly monic(const Poly& p) {
  if (p.is_zero()) throw DomainError("cannot normalize the zero polynomial");
  if (p.is_monic()) return p;
  const Rational inv = Rational(1) / p.leading();
  return scale(p, inv);
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
  if (b.is_zero()) return monic(a);
  if (a.is_zero()) return monic(b);
  Poly x = monic(a);
  Poly y = monic(b);
  while (!y.is_zero()) {
    Poly rem = x % y;
    x = std::move(y);
    y = rem.is_zero() ? Poly() : monic(rem);
  }
  return x;
}

Xgcd xgcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("xgcd of two zero polynomials");

  // Rows (r, u, v) keep r = u*a + v*b; each new remainder row is rescaled
  // so that r is monic.
  Poly r0 = a, u0 = Poly::constant(1), v0;
  Poly r1 = b, u1, v1 = Poly::constant(1);
  while (!r1.is_zero()) {
    auto [q, rem] = divmod(r0, r1);
    Poly u2 = u0 - q * u1;
    Poly v2 = v0 - q * v1;
    if (!rem.is_zero() && !rem.is_monic()) {
      const Rational inv = Rational(1) / rem.leading();
      rem = scale(rem, inv);
      u2 = scale(u2, inv);
      v2 = scale(v2, inv);
    }
    r0 = std::move(r1);
    u0 = std::move(u1);
    v0 = std::move(v1);
    r1 = std::move(rem);
    u1 = std::move(u2);
    v1 = std::move(v2);
  }
  if (!r0.is_monic()) {
    const Rational inv = Rational(1) / r0.leading();
    r0 = scale(r0, inv);
    u0 = scale(u0, inv);
    v0 = scale(v0, inv);
  }

  if (r0.is_one() && a.degree() >= 1u && b.degree() >= 1u && u0.degree() >= b.degree()) {
    auto [q, rem] = divmod(u0, b);
    v0 = v0 + q * a;
    u0 = std::move(rem);
  }
  return {std::move(r0), std::move(u0), std::move(v0)};
}

Rational eval(const Poly& p, const Rational& x) {
  Rational acc;
  const auto pc = p.coeffs();
  for (auto it = pc.rbegin(); it != pc.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly lagrange_interpolate(std::span<const std::pair<Rational, Rational>> points) {
  if (points.empty()) throw DomainError("interpolation through no points");
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i].first == points[j].first) {
        throw DomainError("duplicate abscissa " + points[i].first.to_string());
      }
    }
  }
  Poly result;
  for (std::size_t i = 0; i < points.size(); ++i) {
    Poly basis = Poly::constant(1);
    Rational denom(1);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      basis = basis * Poly::linear_root(points[j].first);
      denom *= points[i].first - points[j].first;
    }
    result = result + scale(basis, points[i].second / denom);
  }
  return result;
}

std::string format_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  const auto pc = p.coeffs();
  bool first = true;
  for (std::size_t i = pc.size(); i-- > 0;) {
    const Rational& c = pc[i];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Rational magnitude = negative ? -c : c;
    if (i == 0) {
      os << magnitude;
      continue;
    }
    if (!magnitude.is_one()) os << magnitude << '*';
    os << 'X';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << format_poly(p); }

}  // namespace sqfree

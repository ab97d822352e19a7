#include "sqfree/decompose.hpp"

#include "sqfree/error.hpp"
#include "sqfree/matrix.hpp"

namespace sqfree {

namespace {

Poly power(const Poly& base, unsigned exponent) {
  Poly result = Poly::constant(1);
  Poly b = base;
  while (exponent > 0) {
    if (exponent & 1u) result = result * b;
    exponent >>= 1u;
    if (exponent > 0) b = b * b;
  }
  return result;
}

std::size_t degree_or_zero(const Poly& p) { return p.degree().value_or(0); }

Rational common_denominator(const Poly& p) {
  mpz_class lcm = 1;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.raw().get_den_mpz_t());
  }
  return Rational(lcm);
}

Poly divide_coeffs(const Poly& p, const Rational& denominator) {
  if (denominator.is_one()) return p;
  std::vector<Rational> out(p.coeffs().begin(), p.coeffs().end());
  for (auto& c : out) c /= denominator;
  return Poly(std::move(out));
}

}  // namespace

Poly Decomposition::expand() const {
  Poly out = Poly::constant(lead);
  for (const auto& [k, p] : factors) out = out * power(p, k);
  return out;
}

GSContext gs_prepare(const Poly& f) {
  if (f.is_constant()) throw DomainError("square-free preprocessing needs deg f >= 1");
  if (!f.is_monic()) throw DomainError("square-free preprocessing needs a monic polynomial");

  GSContext ctx;
  ctx.f = f;
  const Poly df = derivative(f);
  ctx.d = gcd(f, df);
  ctx.r = exact_div(f, ctx.d);
  ctx.P = exact_div(df, ctx.d);
  ctx.s = *ctx.r.degree();

  auto [one, g, h] = xgcd(derivative(ctx.r), ctx.r);
  if (!one.is_one()) throw IntegrityError("radical is not coprime to its derivative");
  ctx.g = std::move(g);
  ctx.h = std::move(h);
  ctx.g_denominator = common_denominator(ctx.g);
  ctx.g_scaled = scale(ctx.g, ctx.g_denominator);
  return ctx;
}

Poly mf_companion(const GSContext& ctx) {
  const Matrix c = companion(ctx.r);
  const Matrix p_at_c = poly_at_matrix(ctx.P, c);
  const CoeffVector v = mat_vec(p_at_c, CoeffVector::from_poly(ctx.g_scaled, ctx.s));
  return divide_coeffs(v.to_poly(), ctx.g_denominator);
}

Poly mf_modmul(const GSContext& ctx) {
  return divide_coeffs((ctx.P * ctx.g_scaled) % ctx.r, ctx.g_denominator);
}

Poly mf(const GSContext& ctx, MfFormula formula) {
  return formula == MfFormula::kCompanion ? mf_companion(ctx) : mf_modmul(ctx);
}

Decomposition extract_factors(const Poly& mf, const GSContext& ctx) {
  const std::size_t n = *ctx.f.degree();
  Decomposition out;
  std::size_t covered = 0;
  for (unsigned k = 1; covered < n; ++k) {
    if (k > n) throw IntegrityError("factor extraction did not reach deg f; M_f is inconsistent");
    Poly pk = gcd(mf - Poly::constant(Rational(static_cast<long>(k))), ctx.r);
    covered += k * degree_or_zero(pk);
    if (covered > n) throw IntegrityError("factor degrees exceed deg f; M_f is inconsistent");
    out.factors.push_back({k, std::move(pk)});
  }
  return out;
}

Decomposition gs_decompose(const Poly& f, MfFormula formula) {
  if (f.is_zero()) throw DomainError("square-free decomposition of the zero polynomial");
  if (f.is_constant()) return {f.leading(), {}};
  const GSContext ctx = gs_prepare(monic(f));
  Decomposition out = extract_factors(mf(ctx, formula), ctx);
  out.lead = f.leading();
  return out;
}

Decomposition yun_decompose(const Poly& f) {
  if (f.is_zero()) throw DomainError("square-free decomposition of the zero polynomial");
  Decomposition out{f.leading(), {}};
  if (f.is_constant()) return out;

  const Poly fm = monic(f);
  const Poly df = derivative(fm);
  const Poly a0 = gcd(fm, df);
  Poly b = exact_div(fm, a0);
  Poly c = exact_div(df, a0);
  Poly d = c - derivative(b);
  for (unsigned k = 1; !b.is_constant(); ++k) {
    Poly a = gcd(b, d);
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - derivative(b);
    out.factors.push_back({k, std::move(a)});
  }
  return out;
}

unsigned multiplicity_at(const Poly& f, const Rational& alpha) {
  if (f.is_zero()) throw DomainError("multiplicity in the zero polynomial");
  const Poly linear = Poly::linear_root(alpha);
  unsigned k = 0;
  Poly q = f;
  for (;;) {
    auto [quot, rem] = divmod(q, linear);
    if (!rem.is_zero()) return k;
    q = std::move(quot);
    ++k;
  }
}

bool verify_decomposition(const Decomposition& d, const Poly& f) {
  if (f.is_zero()) return false;
  if (!d.factors.empty() && d.factors.back().factor.is_one()) return false;
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    const auto& [k, p] = d.factors[i];
    if (k != i + 1) return false;
    if (!p.is_monic()) return false;
    if (!p.is_constant() && !gcd(p, derivative(p)).is_one()) return false;
  }
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    const Poly& pi = d.factors[i].factor;
    if (pi.is_constant()) continue;
    for (std::size_t j = i + 1; j < d.factors.size(); ++j) {
      const Poly& pj = d.factors[j].factor;
      if (!pj.is_constant() && !gcd(pi, pj).is_one()) return false;
    }
  }
  return d.expand() == f;
}

}  // namespace sqfree

#include "sqfree/decompose.hpp"

#include <random>

#include <gtest/gtest.h>

#include "sqfree/error.hpp"
#include "sqfree/instance.hpp"
#include "test_support.hpp"

namespace sqfree {
namespace {

using testing::power;

const Poly kWorked{-4, 8, -5, 1};                  // (X-1)(X-2)^2
const Poly kMixed = parse_poly("X^5 + X^4 - 2*X^3 - 2*X^2 + X + 1");  // (X-1)^2 (X+1)^3
const Poly kHalfLine{Rational(5, 2), Rational(-1, 2)};           // (5 - X)/2

Decomposition decomposition(std::vector<SquareFreeFactor> factors, Rational lead = 1) {
  return {lead, std::move(factors)};
}

TEST(GsPrepareTest, WorkedExample) {
  const GSContext ctx = gs_prepare(kWorked);
  EXPECT_EQ(ctx.d, Poly({-2, 1}));
  EXPECT_EQ(ctx.r, Poly({2, -3, 1}));
  EXPECT_EQ(ctx.P, Poly({-4, 3}));
  EXPECT_EQ(ctx.g, Poly({-3, 2}));
  EXPECT_EQ(ctx.h, Poly::constant(-4));
  EXPECT_EQ(ctx.s, 2u);
}

TEST(GsPrepareTest, SquareFreeAndPurePower) {
  const Poly f{-1, 0, 1};
  const GSContext sf = gs_prepare(f);
  EXPECT_EQ(sf.d, Poly::constant(1));
  EXPECT_EQ(sf.r, f);
  EXPECT_EQ(sf.P, derivative(f));

  const GSContext pp = gs_prepare(power(Poly({-1, 1}), 4));
  EXPECT_EQ(pp.d, power(Poly({-1, 1}), 3));
  EXPECT_EQ(pp.r, Poly({-1, 1}));
  EXPECT_EQ(pp.P, Poly::constant(4));
  EXPECT_EQ(pp.g, Poly::constant(1));
  EXPECT_TRUE(pp.h.is_zero());
}

TEST(GsPrepareTest, ScaledCofactor) {
  const GSContext ctx = gs_prepare(kMixed);  // g = X/2
  EXPECT_EQ(ctx.g_denominator, Rational(2));
  EXPECT_EQ(ctx.g_scaled, Poly({0, 1}));

  // Rational input: the radical itself has fractional coefficients.
  const Poly f = monic(parse_poly("3*X^3 - 2*X^2 + 1/5*X")) * Poly({Rational(-1, 3), 1});
  const GSContext q = gs_prepare(f);
  EXPECT_EQ(scale(q.g, q.g_denominator), q.g_scaled);
  for (const auto& c : q.g_scaled.coeffs()) EXPECT_TRUE(c.is_integer());
  EXPECT_EQ(mf_companion(q), mf_modmul(q));
  EXPECT_EQ(gs_decompose(f, MfFormula::kCompanion), yun_decompose(f));
}

TEST(GsPrepareTest, Preconditions) {
  EXPECT_THROW(gs_prepare(Poly({1, 2})), DomainError);
  EXPECT_THROW(gs_prepare(Poly::constant(1)), DomainError);
  EXPECT_THROW(gs_prepare(Poly()), DomainError);
}

TEST(MfTest, BothFormulasOnExamples) {
  for (MfFormula formula : {MfFormula::kCompanion, MfFormula::kModMul}) {
    EXPECT_EQ(mf(gs_prepare(kWorked), formula), Poly({0, 1}));
    EXPECT_EQ(mf(gs_prepare(Poly({6, -5, -2, 1})), formula), Poly::constant(1));  // (X-1)(X+2)(X-3)
    EXPECT_EQ(mf(gs_prepare(kMixed), formula), kHalfLine);
    EXPECT_EQ(mf(gs_prepare(power(Poly({-1, 1}), 4)), formula), Poly::constant(4));
  }
}

TEST(MfTest, CompanionCharge) {
  const GSContext ctx = gs_prepare(kMixed);  // s = 2, deg P = 1
  OpCounter counter;
  {
    CountingScope scope(counter);
    (void)mf_companion(ctx);
  }
  EXPECT_EQ(counter.scalar_muls, 1u * 8u + 1u * 2u + 4u);
}

TEST(ExtractFactorsTest, Examples) {
  EXPECT_EQ(extract_factors(Poly({0, 1}), gs_prepare(kWorked)),
            decomposition({{1, Poly({-1, 1})}, {2, Poly({-2, 1})}}));
  const Poly sf{6, -5, -2, 1};
  EXPECT_EQ(extract_factors(Poly::constant(1), gs_prepare(sf)), decomposition({{1, sf}}));
  EXPECT_EQ(extract_factors(kHalfLine, gs_prepare(kMixed)),
            decomposition({{1, Poly::constant(1)}, {2, Poly({-1, 1})}, {3, Poly({1, 1})}}));
}

TEST(ExtractFactorsTest, CorruptMfIsAnIntegrityError) {
  const GSContext ctx = gs_prepare(kWorked);
  // M_f = 5 makes every gcd trivial until k = 5 > deg f.
  EXPECT_THROW(extract_factors(Poly::constant(5), ctx), IntegrityError);
  // M_f = 2 puts all of r at level 2: 2 * 2 > 3.
  EXPECT_THROW(extract_factors(Poly::constant(2), ctx), IntegrityError);
}

TEST(GsDecomposeTest, Examples) {
  const auto worked = decomposition({{1, Poly({-1, 1})}, {2, Poly({-2, 1})}});
  EXPECT_EQ(gs_decompose(kWorked, MfFormula::kCompanion), worked);
  EXPECT_EQ(gs_decompose(kWorked, MfFormula::kModMul), worked);
  EXPECT_EQ(gs_decompose(Poly({-6, 3}), MfFormula::kModMul),
            decomposition({{1, Poly({-2, 1})}}, 3));
  EXPECT_EQ(gs_decompose(kMixed, MfFormula::kCompanion),
            decomposition({{1, Poly::constant(1)}, {2, Poly({-1, 1})}, {3, Poly({1, 1})}}));
}

TEST(GsDecomposeTest, Degenerate) {
  EXPECT_EQ(gs_decompose(Poly::constant(Rational(-2, 3)), MfFormula::kModMul),
            decomposition({}, Rational(-2, 3)));
  EXPECT_THROW(gs_decompose(Poly(), MfFormula::kModMul), DomainError);
  EXPECT_THROW(yun_decompose(Poly()), DomainError);
  // Non-monic with a repeated root and fractional lead.
  const Poly f = scale(kWorked, Rational(-7, 2));
  const auto d = gs_decompose(f, MfFormula::kCompanion);
  EXPECT_EQ(d.lead, Rational(-7, 2));
  EXPECT_TRUE(verify_decomposition(d, f));
}

TEST(YunTest, Examples) {
  EXPECT_EQ(yun_decompose(kWorked), decomposition({{1, Poly({-1, 1})}, {2, Poly({-2, 1})}}));
  const Poly sf{6, -5, -2, 2};
  EXPECT_EQ(yun_decompose(sf), decomposition({{1, monic(sf)}}, 2));
  const Poly one = Poly::constant(1);
  const Poly x2 = Poly({-2, 1});
  EXPECT_EQ(yun_decompose(power(x2, 5)),
            decomposition({{1, one}, {2, one}, {3, one}, {4, one}, {5, x2}}));
}

TEST(MultiplicityTest, Examples) {
  EXPECT_EQ(multiplicity_at(kWorked, Rational(2)), 2u);
  EXPECT_EQ(multiplicity_at(kWorked, Rational(1)), 1u);
  EXPECT_EQ(multiplicity_at(kWorked, Rational(3)), 0u);
  EXPECT_EQ(multiplicity_at(power(Poly({-1, 1}), 4), Rational(1)), 4u);
  EXPECT_EQ(multiplicity_at(Poly::constant(5), Rational(1)), 0u);
  EXPECT_THROW(multiplicity_at(Poly(), Rational(1)), DomainError);
}

TEST(VerifyTest, Examples) {
  const auto good = gs_decompose(kWorked, MfFormula::kModMul);
  EXPECT_TRUE(verify_decomposition(good, kWorked));

  auto bumped = good;
  bumped.factors[1].exponent = 3;
  EXPECT_FALSE(verify_decomposition(bumped, kWorked));

  EXPECT_FALSE(verify_decomposition(good, kMixed));
  EXPECT_FALSE(verify_decomposition(good, Poly()));

  // Right product, wrong structure: (X-2)^2 listed as a square-free level-1 factor.
  const auto not_squarefree = decomposition({{1, kWorked}});
  EXPECT_FALSE(verify_decomposition(not_squarefree, kWorked));

  // Trailing P_m = 1 is not canonical.
  auto trailing = good;
  trailing.factors.push_back({3, Poly::constant(1)});
  EXPECT_FALSE(verify_decomposition(trailing, kWorked));

  // X^3 = X * X^2 with P_1 = P_2 = X: right product, levels not coprime.
  const Poly x{0, 1};
  const auto overlapping = decomposition({{1, x}, {2, x}});
  EXPECT_FALSE(verify_decomposition(overlapping, Poly({0, 0, 0, 1})));

  EXPECT_TRUE(verify_decomposition(decomposition({}, 4), Poly::constant(4)));
}

// ---- properties ----

Poly random_structured(Prng& rng, unsigned max_factors, unsigned max_degree, unsigned max_exponent,
                       unsigned max_total) {
  for (;;) {
    const unsigned n = 1 + static_cast<unsigned>(uniform_below(rng, max_factors));
    std::vector<FactorShape> shape(n);
    unsigned total = 0;
    for (auto& fs : shape) {
      fs.degree = 1 + static_cast<unsigned>(uniform_below(rng, max_degree));
      fs.exponent = 1 + static_cast<unsigned>(uniform_below(rng, max_exponent));
      total += fs.degree * fs.exponent;
    }
    if (total <= max_total) return random_instance(shape, 6, rng);
  }
}

TEST(DecomposePropertyTest, FormulasAgreeAndMatchYun) {
  Prng rng(77);
  for (int iter = 0; iter < 80; ++iter) {
    const Poly f = random_structured(rng, 4, 5, 5, 30);
    const GSContext ctx = gs_prepare(f);
    const Poly a = mf_companion(ctx);
    const Poly b = mf_modmul(ctx);
    ASSERT_EQ(a, b) << f;
    EXPECT_LT(b.degree(), ctx.s);
    const auto yun = yun_decompose(f);
    EXPECT_EQ(gs_decompose(f, MfFormula::kCompanion), yun);
    EXPECT_EQ(gs_decompose(f, MfFormula::kModMul), yun);
    EXPECT_TRUE(verify_decomposition(yun, f));
    for (const auto& [k, pk] : yun.factors) {
      if (!pk.is_one()) EXPECT_TRUE(((b - Poly::constant(Rational(static_cast<long>(k)))) % pk).is_zero());
    }
  }
}

TEST(DecomposePropertyTest, MultiplicityIdentityAndInterpolationAtRationalRoots) {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 60; ++iter) {
    const auto rooted = testing::random_rooted_poly(rng, 5, 5);
    const GSContext ctx = gs_prepare(rooted.f);
    const Poly rp = derivative(ctx.r);
    std::vector<std::pair<Rational, Rational>> pts;
    for (const auto& [alpha, m] : rooted.roots) {
      EXPECT_EQ(multiplicity_at(rooted.f, alpha), m);
      EXPECT_EQ(eval(ctx.P, alpha), Rational(static_cast<long>(m)) * eval(rp, alpha));
      pts.emplace_back(alpha, Rational(static_cast<long>(m)));
    }
    const Poly oracle = lagrange_interpolate(pts);
    EXPECT_EQ(mf_modmul(ctx), oracle);
    EXPECT_EQ(mf_companion(ctx), oracle);
  }
}

TEST(DecomposePropertyTest, SquareFreeFastPath) {
  Prng rng(3);
  for (int iter = 0; iter < 30; ++iter) {
    std::vector<FactorShape> shape{{1 + static_cast<unsigned>(uniform_below(rng, 8)), 1}};
    const Poly f = random_instance(shape, 9, rng);
    const GSContext ctx = gs_prepare(f);
    EXPECT_TRUE(ctx.d.is_one());
    EXPECT_EQ(mf_companion(ctx), Poly::constant(1));
    EXPECT_EQ(mf_modmul(ctx), Poly::constant(1));
    EXPECT_EQ(gs_decompose(f, MfFormula::kModMul), decomposition({{1, f}}));
  }
}

}  // namespace
}  // namespace sqfree

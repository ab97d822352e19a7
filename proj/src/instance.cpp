#include "sqfree/instance.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sqfree/error.hpp"

namespace sqfree {

namespace {

constexpr int kMaxRejections = 10000;

}  // namespace

std::uint64_t uniform_below(Prng& rng, std::uint64_t bound) {
  if (bound == 0) throw DomainError("uniform_below needs a positive bound");
  // Reject the low values that would bias x % bound.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

std::int64_t uniform_between(Prng& rng, std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw DomainError("uniform_between with an empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(uniform_below(rng, span));
}

Poly random_instance(std::span<const FactorShape> shape, unsigned coeff_bound, Prng& rng) {
  if (coeff_bound == 0) throw DomainError("coefficient bound must be positive");
  const auto bound = static_cast<std::int64_t>(coeff_bound);

  std::vector<Poly> bases;
  Poly f = Poly::constant(1);
  for (const auto& [degree, exponent] : shape) {
    if (degree == 0 || exponent == 0) throw DomainError("factor degree and exponent must be positive");
    Poly q;
    for (int attempt = 0;; ++attempt) {
      if (attempt == kMaxRejections) {
        throw DomainError("could not draw a square-free coprime factor of degree " +
                          std::to_string(degree) + "; raise the coefficient bound");
      }
      std::vector<Rational> coeffs(degree + 1);
      for (unsigned i = 0; i < degree; ++i) coeffs[i] = Rational(uniform_between(rng, -bound, bound));
      coeffs[degree] = Rational(1);
      q = Poly(std::move(coeffs));
      if (!gcd(q, derivative(q)).is_one()) continue;
      if (std::all_of(bases.begin(), bases.end(),
                      [&](const Poly& b) { return gcd(q, b).is_one(); })) {
        break;
      }
    }
    for (unsigned e = 0; e < exponent; ++e) f = f * q;
    bases.push_back(std::move(q));
  }
  return f;
}

Poly random_instance(const InstanceProfile& profile) {
  if (profile.num_factors == 0 || profile.max_factor_degree == 0 || profile.max_exponent == 0 ||
      profile.coeff_bound == 0) {
    throw DomainError("instance profile fields must be positive");
  }
  Prng rng(profile.seed);
  std::vector<FactorShape> shape(profile.num_factors);
  for (auto& fs : shape) {
    fs.degree = 1 + static_cast<unsigned>(uniform_below(rng, profile.max_factor_degree));
    fs.exponent = 1 + static_cast<unsigned>(uniform_below(rng, profile.max_exponent));
  }
  return random_instance(shape, profile.coeff_bound, rng);
}

std::vector<FactorShape> steer_shape(const InstanceProfile& profile, unsigned target_degree) {
  if (profile.num_factors == 0 || profile.max_factor_degree == 0 || profile.max_exponent == 0) {
    throw DomainError("instance profile fields must be positive");
  }
  std::vector<FactorShape> shape(profile.num_factors);
  for (unsigned i = 0; i < profile.num_factors; ++i) shape[i].exponent = 1 + i % profile.max_exponent;
  const unsigned weight = std::accumulate(shape.begin(), shape.end(), 0u,
                                          [](unsigned acc, const FactorShape& fs) { return acc + fs.exponent; });
  const auto unreachable = [&] {
    return DomainError("target degree " + std::to_string(target_degree) +
                       " is unreachable with this profile");
  };
  if (target_degree < weight) throw unreachable();

  for (auto& fs : shape) fs.degree = target_degree / weight;
  unsigned rest = target_degree % weight;
  // Largest exponents first; exponent 1 is always present so this terminates at 0.
  std::vector<std::size_t> order(shape.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return shape[a].exponent > shape[b].exponent; });
  for (std::size_t idx : order) {
    if (shape[idx].exponent <= rest) {
      ++shape[idx].degree;
      rest -= shape[idx].exponent;
    }
  }
  if (rest != 0) throw unreachable();
  for (const auto& fs : shape) {
    if (fs.degree > profile.max_factor_degree) throw unreachable();
  }
  return shape;
}

}  // namespace sqfree

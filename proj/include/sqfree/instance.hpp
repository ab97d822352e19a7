#ifndef SQFREE_INSTANCE_HPP
#define SQFREE_INSTANCE_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "sqfree/poly.hpp"

namespace sqfree {

/// Random test polynomials are drawn with std::mt19937_64, whose output
/// sequence is fixed by the C++ standard. Bounded integers come from
/// `uniform_below` rather than std::uniform_int_distribution so instances
/// do not depend on the standard library vendor.
using Prng = std::mt19937_64;

/// Uniform integer in [0, bound). bound must be positive.
std::uint64_t uniform_below(Prng& rng, std::uint64_t bound);
/// Uniform integer in [lo, hi].
std::int64_t uniform_between(Prng& rng, std::int64_t lo, std::int64_t hi);

struct InstanceProfile {
  unsigned num_factors = 3;
  unsigned max_factor_degree = 8;
  unsigned max_exponent = 3;
  unsigned coeff_bound = 10;
  std::uint64_t seed = 0;
};

/// Degree and exponent of one base factor q_i of f = prod q_i^{e_i}.
struct FactorShape {
  unsigned degree = 1;
  unsigned exponent = 1;
};

/// Monic f = prod q_i^{e_i} where the q_i are random monic polynomials with
/// integer coefficients in [-coeff_bound, coeff_bound], regenerated until
/// each is square-free and coprime to the ones before it.
/// Throws DomainError if coeff_bound is zero or rejection keeps failing.
Poly random_instance(std::span<const FactorShape> shape, unsigned coeff_bound, Prng& rng);

/// Draws num_factors shapes with degree in [1, max_factor_degree] and
/// exponent in [1, max_exponent] from `profile.seed`, then builds the
/// polynomial. Throws DomainError if any profile field is zero.
Poly random_instance(const InstanceProfile& profile);

/// Factor shapes for a benchmark instance of exactly `target_degree`:
/// exponents cycle through 1..max_exponent and factor degrees are split
/// as evenly as possible. Throws DomainError when the target cannot be
/// reached within the profile.
std::vector<FactorShape> steer_shape(const InstanceProfile& profile, unsigned target_degree);

}  // namespace sqfree

#endif  // SQFREE_INSTANCE_HPP

#pragma once

#include <string>
#include <vector>

#include "caylap/cayley.hpp"
#include "caylap/cyclotomic.hpp"

namespace caylap {

/// Which weight space a vector lives in:
///   g_full       unconstrained coordinates alpha_s
///   g_plus       all coordinates strictly positive
///   g_prime      alpha_s = alpha_{s^{-1}} (requires a symmetric S)
///   g_prime_plus both constraints
enum class WeightDomain { g_full, g_plus, g_prime, g_prime_plus };

const char* weight_domain_name(WeightDomain d);
WeightDomain weight_domain_from_name(const std::string& name);
bool weight_domain_symmetric(WeightDomain d);
bool weight_domain_positive(WeightDomain d);

/// A weight/coordinate vector over a generator set, one rational per
/// generator position, tagged with the space it is claimed to live in.
struct WeightVector {
  std::vector<Rational> values;
  WeightDomain domain = WeightDomain::g_full;
};

/// Verify the domain constraints (positivity, mirror symmetry under the
/// inversion pairing). Throws std::invalid_argument on violation.
void check_weight_vector(const GeneratorSet& s, const WeightVector& wv);

/// Orbits {i} or {i, pairing[i]} of the inversion pairing on generator
/// positions, ordered by smallest position: the coordinates of S'.
/// Requires a symmetric set.
std::vector<std::vector<int>> sprime_classes(const GeneratorSet& s);

/// Expand one value per S'-class into the mirrored full vector.
WeightVector symmetrize(const GeneratorSet& s, const std::vector<Rational>& per_class,
                        WeightDomain domain);

}  // namespace caylap

#pragma once

#include <cstdint>
#include <memory>

#include "qmfree/freespace.hpp"
#include "qmfree/functions.hpp"
#include "qmfree/space.hpp"
#include "qmfree/tree.hpp"

namespace qmf {

// Deterministic generator: splitmix64 stream, identical across platforms.
// All randomized checks in the artifact derive from an explicit seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  int uniform(int lo, int hi);  // inclusive
  // Rational with numerator in [num_lo, num_hi] and denominator in [1, den_hi].
  Rat rational(int num_lo, int num_hi, int den_hi);
  Rng fork();  // independent child stream

 private:
  std::uint64_t state_;
};

inline constexpr std::uint64_t kDefaultSeed = 1729;

// Valid space of the requested size; kinds are mixed across draws
// (symmetric closures, strictly positive asymmetric closures, order-induced
// hemi spaces, sparse hemi matrices). Always passes validate.
QuasiMetricSpace random_space(Rng& rng, int points);

QuasiMetricSpace random_metric_space(Rng& rng, int points);

// Molecule with 1..max_terms nonzero coefficients on non-base points;
// returns the zero molecule on one-point spaces.
Molecule random_molecule(Rng& rng, std::shared_ptr<const QuasiMetricSpace> space, int max_terms);

// Semi-Lipschitz function on the given domain points (base point added when
// missing): a lower envelope of cones c_m + L d(m, .), shifted to vanish at
// the base. Always has finite slip norm.
PointFunction random_slip_function(Rng& rng, std::shared_ptr<const QuasiMetricSpace> space,
                                   const std::vector<int>& domain_points);

PointFunction random_slip_function(Rng& rng, std::shared_ptr<const QuasiMetricSpace> space);

WeightedRootedTree random_tree(Rng& rng, int max_nodes);

}  // namespace qmf

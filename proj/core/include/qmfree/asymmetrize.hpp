#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qmfree/freespace.hpp"
#include "qmfree/functions.hpp"
#include "qmfree/rational.hpp"
#include "qmfree/space.hpp"
#include "qmfree/tree.hpp"

namespace qmf {

// Symbolic cone P of Lipschitz functions driving an asymmetrization:
// nonnegative functions, tree-monotone functions, or an explicit list of
// homogeneous half-spaces on function values.
struct ConeSpec {
  enum class Variant { Nonneg, TreeMonotone, Explicit };
  Variant variant = Variant::Nonneg;
  std::optional<WeightedRootedTree> tree;   // TreeMonotone
  std::vector<std::vector<Rat>> halfspaces; // Explicit: sum_i row[i] phi(x_i) >= 0

  static ConeSpec nonneg();
  static ConeSpec tree_monotone(WeightedRootedTree tree);
  static ConeSpec explicit_halfspaces(std::vector<std::vector<Rat>> rows);
};

// Dense >=0 rows of the cone over the space's points (base folded away).
// Validates tree/space compatibility for the tree-monotone variant.
std::vector<std::vector<Rat>> cone_rows(const ConeSpec& cone, const QuasiMetricSpace& space);

// ||q|_{F_P}: maximize <phi, q> over phi in the cone with Lipschitz norm at
// most 1 (phi(x0) = 0). Exact LP value.
Rat cone_restricted_norm(const Molecule& q, const QuasiMetricSpace& metric,
                         const ConeSpec& cone);

// D_P(x,y) = sup { phi(y) - phi(x) : phi in P, ||phi||_L <= 1 }, per ordered
// pair. Requires a metric-kind input; the result is validated (triangle
// re-verified, kind classified - typically quasi-hemi-metric).
QuasiMetricSpace canonical_asym(const QuasiMetricSpace& metric, const ConeSpec& cone);

// The nonnegative-cone asymmetrization of a finite subset of the rationals
// containing 0, by the piecewise closed form. Must agree with
// canonical_asym(nonneg) on the same subset.
QuasiMetricSpace closed_form_dplus_reals(const std::vector<Rat>& points);

enum class Property { S, Sstar, S0star, H, EqP };

struct PropertyReport {
  enum class Verdict { HoldsExact, HoldsOnSample, Counterexample };

  Property property = Property::S;
  Verdict verdict = Verdict::HoldsOnSample;
  std::string sample_desc;
  // Counterexample payload; exact values keyed by name, re-verifiable
  // against the definitions.
  std::optional<std::map<std::string, std::string>> witness_function;
  std::optional<std::map<std::string, std::string>> witness_molecule;
  std::map<std::string, std::string> values;
};

std::string property_name(Property p);
std::string verdict_name(PropertyReport::Verdict v);

// Pointwise positive/negative parts with the decomposition certificate
// (exact equality and the two-sided Lipschitz-norm inequalities).
struct SplitResult {
  PointFunction pos;
  PointFunction neg;
  Rat lip;
  Rat lip_pos;
  Rat lip_neg;
  PropertyReport certificate;  // property EqP, verdict HoldsExact
};

SplitResult split_pos_neg(const PointFunction& phi, const QuasiMetricSpace& metric);

struct SampleConfig {
  std::uint64_t seed = 1729;
  int samples = 50;
};

// (S): exact via vertex enumeration of the SLip_0(X, D_P) unit ball for
// |X| <= 4, sampled membership otherwise. (S*)/(S0*): the norm identity on
// every pairwise molecule plus a seeded random sample; first exact
// counterexample reported.
PropertyReport check_property(const QuasiMetricSpace& metric, const ConeSpec& cone,
                              Property property, const SampleConfig& config);

// The semi-Lipschitz cone of (X,d) as explicit half-spaces (rows from the
// zero-distance pairs).
ConeSpec slip_cone(const QuasiMetricSpace& quasi);

// Hypothesis (H) for P = SLip_0(X,d) inside Lip_0(X,D), D = the chosen
// symmetrization, plus the exact equivalence constant alpha = smallest
// constant with ||phi|_S <= alpha ||phi||_L.
struct HReport {
  PropertyReport report;
  Rat alpha;
};

HReport check_H(const QuasiMetricSpace& quasi, SymMode mode, const SampleConfig& config);

}  // namespace qmf

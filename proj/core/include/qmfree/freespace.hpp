#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "qmfree/functions.hpp"
#include "qmfree/lp.hpp"
#include "qmfree/rational.hpp"
#include "qmfree/space.hpp"

namespace qmf {

// Finitely supported combination of evaluation functionals over the non-base
// points. Canonical form: no zero coefficients, never a base-point entry
// (the base evaluation is the zero functional and folds away).
struct Molecule {
  std::shared_ptr<const QuasiMetricSpace> space;
  std::map<int, Rat> coeffs;

  static Molecule zero(std::shared_ptr<const QuasiMetricSpace> space);
  static Molecule dirac(std::shared_ptr<const QuasiMetricSpace> space, int point);
  static Molecule from_terms(std::shared_ptr<const QuasiMetricSpace> space,
                             const std::vector<std::pair<int, Rat>>& terms);

  bool is_zero() const { return coeffs.empty(); }
  Rat coeff(int point) const;

  Molecule operator+(const Molecule& other) const;
  Molecule operator-(const Molecule& other) const;
  Molecule operator-() const;
  Molecule scaled(const Rat& factor) const;

  friend bool operator==(const Molecule& a, const Molecule& b) {
    return *a.space == *b.space && a.coeffs == b.coeffs;
  }

  // Coordinates over the non-base points in label order (the geometry
  // coordinate system shared with the polytope module).
  std::vector<Rat> coordinates() const;
  static Molecule from_coordinates(std::shared_ptr<const QuasiMetricSpace> space,
                                   const std::vector<Rat>& coords);
};

// The LP behind dual_norm, exposed for the debug listing flag.
LinearProgram dual_norm_program(const Molecule& q);

// Asymmetric free norm: maximize sum of coeff(x) f(x) over the semi-Lipschitz
// unit ball (f(x0) = 0 substituted; one constraint per ordered pair). Always
// finite; may be 0 for nonzero molecules on quasi-hemi-metric spaces.
NormValue dual_norm(const Molecule& q);

struct KRTerm {
  Rat weight;  // > 0
  int to;      // y: mass created here
  int from;    // z: mass removed here
};

struct KRDecomposition {
  std::vector<KRTerm> terms;
  Rat cost;
};

LinearProgram kr_norm_program(const Molecule& q);

// Kantorovich-Rubinstein route: min-cost decomposition into weighted dipoles
// with the base point free to absorb imbalance. Equals dual_norm exactly.
std::pair<NormValue, KRDecomposition> kr_norm(const Molecule& q);

// Classical Lipschitz-free norm of q over symmetrize(space, mode).
NormValue sym_free_norm(const Molecule& q, SymMode mode);

// (delta(x) - delta(y)) / d(y,x); requires d(y,x) > 0.
Molecule elementary_molecule(const std::shared_ptr<const QuasiMetricSpace>& space, int x, int y);

// <f, q> = sum of coeff(x) f(x); requires f(x0) = 0 and a full domain.
Rat pairing(const Molecule& q, const PointFunction& f);

// dual_norm(q2 - q1); the quasi-distance induced on the span by the norm.
NormValue molecule_distance(const Molecule& q1, const Molecule& q2);

// Base-point-preserving map between quasi-metric spaces.
struct PointMap {
  std::shared_ptr<const QuasiMetricSpace> domain;
  std::shared_ptr<const QuasiMetricSpace> codomain;
  std::vector<int> image;  // image[i] = index in codomain

  static PointMap of(std::shared_ptr<const QuasiMetricSpace> domain,
                     std::shared_ptr<const QuasiMetricSpace> codomain, std::vector<int> image);
};

// Smallest L with d2(f(y), f(x)) <= L d1(y,x); infinite when a pair with
// d1(y,x) = 0 maps to d2 > 0.
NormValue slip_constant(const PointMap& f);

// Linearized map on molecules: sum of coeff(x) delta(f(x)), canonicalized.
// Throws std::invalid_argument when f is not semi-Lipschitz.
Molecule pushforward(const PointMap& f, const Molecule& q);

// Norm of the linearization, computed as the max pushed norm over the
// vertices of the domain free ball (|domain| <= 4). Equals slip_constant(f).
NormValue operator_norm(const PointMap& f);

}  // namespace qmf

#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qmfree/rational.hpp"

namespace qmf {

// Classification of a validated space, strongest first.
enum class Kind { Metric, QuasiMetric, QuasiHemiMetric };

std::string kind_name(Kind kind);

// Thrown by validate/adjoin/symmetrize when an axiom fails. Carries the
// first violated axiom and the witnessing indices.
class SpaceError : public std::runtime_error {
 public:
  enum class Axiom {
    NonSquare,
    NegativeEntry,
    NonzeroDiagonal,
    Triangle,    // witness (i, k, j): d(i,j) > d(i,k) + d(k,j)
    Separation,  // witness (i, j): d(i,j) = d(j,i) = 0, i != j
    DuplicateLabel,
    BadBase,
  };

  SpaceError(Axiom axiom, std::vector<int> where, const std::string& message)
      : std::runtime_error(message), axiom(axiom), where(std::move(where)) {}

  Axiom axiom;
  std::vector<int> where;
};

// Finite point set with an exact nonnegative pairwise quasi-distance matrix
// and a base point. Immutable after construction; every operation below is a
// pure function.
struct QuasiMetricSpace {
  std::vector<std::string> labels;
  std::vector<std::vector<Rat>> d;
  int base = 0;
  Kind kind = Kind::Metric;

  int size() const { return static_cast<int>(labels.size()); }
  const Rat& dist(int from, int to) const { return d[from][to]; }
  int index_of(const std::string& label) const;

  // Non-base point indices in label order (the coordinate system used by
  // molecules and ball geometry).
  std::vector<int> free_indices() const;

  bool operator==(const QuasiMetricSpace& other) const {
    return labels == other.labels && base == other.base && d == other.d && kind == other.kind;
  }
};

// Checks every axiom and returns the space tagged with the strongest kind it
// satisfies. Labels default to "0", "1", ... Throws SpaceError naming the
// first violated axiom with its witness.
QuasiMetricSpace validate(std::vector<std::vector<Rat>> d, int base,
                          std::vector<std::string> labels = {});

QuasiMetricSpace reverse(const QuasiMetricSpace& space);

enum class SymMode { Max, Sum };

QuasiMetricSpace symmetrize(const QuasiMetricSpace& space, SymMode mode);

// phi must be symmetric, satisfy phi(a,b) >= max{a,b} and phi(a,b) = 0 iff
// a = b = 0; the conditions are checked on every encountered pair and a
// violation throws std::invalid_argument.
QuasiMetricSpace symmetrize(const QuasiMetricSpace& space,
                            const std::function<Rat(const Rat&, const Rat&)>& combiner);

// One extra point at distance 1 to and from every original point; the new
// point becomes the base. A triangle failure through the new point (some
// original distance > 2) is reported, never clamped.
QuasiMetricSpace adjoin_basepoint(const QuasiMetricSpace& space);

struct EquivalenceResult {
  bool equivalent = false;
  Rat c_low;   // largest c with c*a <= b over pairs where both positive
  Rat c_high;  // smallest c with b <= c*a
  std::optional<std::pair<int, int>> witness;  // pair breaking equivalence
};

// Entrywise equivalence constants between two quasi-distances on the same
// point set.
EquivalenceResult equivalence_constant(const QuasiMetricSpace& a, const QuasiMetricSpace& b);

// The subspace on the given point indices with the induced quasi-metric;
// points must include the base.
QuasiMetricSpace induced_subspace(const QuasiMetricSpace& space, const std::vector<int>& points);

}  // namespace qmf

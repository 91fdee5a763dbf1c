#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "qmfree/rational.hpp"
#include "qmfree/space.hpp"

namespace qmf {

// Real-valued function on (a subset of) a quasi-metric space. Undefined
// entries mark points outside the declared domain (extension inputs).
struct PointFunction {
  std::shared_ptr<const QuasiMetricSpace> space;
  std::vector<std::optional<Rat>> values;

  static PointFunction full(std::shared_ptr<const QuasiMetricSpace> space,
                            std::vector<Rat> values);
  static PointFunction on_subset(std::shared_ptr<const QuasiMetricSpace> space,
                                 const std::vector<std::pair<int, Rat>>& values);

  bool defined(int i) const { return values[i].has_value(); }
  bool full_domain() const;
  const Rat& at(int i) const { return *values[i]; }
  std::vector<int> domain() const;
};

// Smallest L with f(x) - f(y) <= L d(y,x); infinite when no finite L works
// (some pair with d(y,x) = 0 and f(x) > f(y)). Translation-invariant in f.
NormValue slip_norm(const PointFunction& f);

// Classical Lipschitz constant of f under a metric-kind space on the same
// point set. Throws std::invalid_argument for non-metric kinds.
NormValue lip_norm(const PointFunction& f, const QuasiMetricSpace& metric);

struct MonotoneReport {
  bool monotone = true;
  // Violating (y, x): d(y,x) = 0 but f(x) > f(y).
  std::optional<std::pair<int, int>> witness;
};

MonotoneReport is_d_monotone(const PointFunction& f);

// Norm-preserving extension f~(x) = min over the domain M of
// f(m) + ||f|_S d(m,x). Requires the base point in M and a finite norm of
// the restriction; throws std::invalid_argument otherwise.
PointFunction mcshane_extend(const PointFunction& partial);

}  // namespace qmf

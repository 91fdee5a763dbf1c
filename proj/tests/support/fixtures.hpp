#pragma once

#include <memory>
#include <vector>

#include "qmfree/rational.hpp"
#include "qmfree/space.hpp"

namespace fixtures {

using qmf::QuasiMetricSpace;
using qmf::Rat;

using SpacePtr = std::shared_ptr<const QuasiMetricSpace>;

// Three points with rho(x1, x0) = 3/2 and every other off-diagonal
// quasi-distance 1; base x0.
inline SpacePtr figure2() {
  std::vector<std::vector<Rat>> d = {
      {Rat(0), Rat(1), Rat(1)},
      {Rat(3, 2), Rat(0), Rat(1)},
      {Rat(1), Rat(1), Rat(0)},
  };
  return std::make_shared<QuasiMetricSpace>(
      qmf::validate(std::move(d), 0, {"x0", "x1", "x2"}));
}

// {0, ..., n} with d(i, j) = 1 when j is neither 0 nor i, else 0; base 0.
inline SpacePtr discrete_hemi(int n) {
  const int size = n + 1;
  std::vector<std::vector<Rat>> d(size, std::vector<Rat>(size, Rat(0)));
  for (int i = 0; i < size; ++i) {
    for (int j = 1; j < size; ++j) {
      if (j != i) d[i][j] = 1;
    }
  }
  return std::make_shared<QuasiMetricSpace>(qmf::validate(std::move(d), 0));
}

// Points of the rational line under d(x, y) = max(y - x, 0); base at the
// value `base_value` (must be one of the points).
inline SpacePtr upper_line(const std::vector<Rat>& points, const Rat& base_value = Rat(0)) {
  const int n = static_cast<int>(points.size());
  std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n, Rat(0)));
  std::vector<std::string> labels(n);
  int base = -1;
  for (int i = 0; i < n; ++i) {
    labels[i] = qmf::rat_to_string(points[i]);
    if (points[i] == base_value) base = i;
    for (int j = 0; j < n; ++j) {
      if (points[j] > points[i]) d[i][j] = points[j] - points[i];
    }
  }
  return std::make_shared<QuasiMetricSpace>(qmf::validate(std::move(d), base, std::move(labels)));
}

// Subset of the rational line with the usual metric; base at `base_value`.
inline SpacePtr line_metric(const std::vector<Rat>& points, const Rat& base_value = Rat(0)) {
  const int n = static_cast<int>(points.size());
  std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n, Rat(0)));
  std::vector<std::string> labels(n);
  int base = -1;
  for (int i = 0; i < n; ++i) {
    labels[i] = qmf::rat_to_string(points[i]);
    if (points[i] == base_value) base = i;
    for (int j = 0; j < n; ++j) d[i][j] = qmf::rat_abs(points[j] - points[i]);
  }
  return std::make_shared<QuasiMetricSpace>(qmf::validate(std::move(d), base, std::move(labels)));
}

inline SpacePtr two_point_metric(const Rat& dist) {
  std::vector<std::vector<Rat>> d = {{Rat(0), dist}, {dist, Rat(0)}};
  return std::make_shared<QuasiMetricSpace>(qmf::validate(std::move(d), 0, {"a", "b"}));
}

inline SpacePtr one_point() {
  return std::make_shared<QuasiMetricSpace>(
      qmf::validate({{Rat(0)}}, 0, {"pt"}));
}

// Two points with d(a,b) = 1, d(b,a) = 0.
inline SpacePtr hemi_pair() {
  std::vector<std::vector<Rat>> d = {{Rat(0), Rat(1)}, {Rat(0), Rat(0)}};
  return std::make_shared<QuasiMetricSpace>(qmf::validate(std::move(d), 0, {"a", "b"}));
}

// Three points a, b, c with d(a,b) = d(b,c) = 1, d(a,c) = 2, 0 otherwise.
inline SpacePtr chain_hemi() {
  std::vector<std::vector<Rat>> d = {
      {Rat(0), Rat(1), Rat(2)},
      {Rat(0), Rat(0), Rat(1)},
      {Rat(0), Rat(0), Rat(0)},
  };
  return std::make_shared<QuasiMetricSpace>(qmf::validate(std::move(d), 0, {"a", "b", "c"}));
}

}  // namespace fixtures

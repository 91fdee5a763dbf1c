#include "qmfree/space.hpp"

#include <algorithm>
#include <set>

namespace qmf {

std::string kind_name(Kind kind) {
  switch (kind) {
    case Kind::Metric: return "metric";
    case Kind::QuasiMetric: return "quasi-metric";
    case Kind::QuasiHemiMetric: return "quasi-hemi-metric";
  }
  return "?";
}

int QuasiMetricSpace::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i) {
    if (labels[i] == label) return i;
  }
  return -1;
}

std::vector<int> QuasiMetricSpace::free_indices() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (i != base) out.push_back(i);
  }
  return out;
}

QuasiMetricSpace validate(std::vector<std::vector<Rat>> d, int base,
                          std::vector<std::string> labels) {
  const int n = static_cast<int>(d.size());
  if (n == 0) throw SpaceError(SpaceError::Axiom::NonSquare, {}, "empty matrix");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(d[i].size()) != n) {
      throw SpaceError(SpaceError::Axiom::NonSquare, {i},
                       "row " + std::to_string(i) + " has " + std::to_string(d[i].size()) +
                           " entries, expected " + std::to_string(n));
    }
  }
  if (labels.empty()) {
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  if (static_cast<int>(labels.size()) != n) {
    throw SpaceError(SpaceError::Axiom::NonSquare, {}, "label count does not match matrix size");
  }
  {
    std::set<std::string> seen;
    for (int i = 0; i < n; ++i) {
      if (!seen.insert(labels[i]).second) {
        throw SpaceError(SpaceError::Axiom::DuplicateLabel, {i},
                         "duplicate point name '" + labels[i] + "'");
      }
    }
  }
  if (base < 0 || base >= n) {
    throw SpaceError(SpaceError::Axiom::BadBase, {base},
                     "base index " + std::to_string(base) + " out of range");
  }

  // Guard against non-canonical two-argument mpq constructions from callers;
  // GMP comparisons assume canonical form.
  for (auto& row : d) {
    for (auto& cell : row) cell.canonicalize();
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (d[i][j] < 0) {
        throw SpaceError(SpaceError::Axiom::NegativeEntry, {i, j},
                         "negative entry d(" + labels[i] + "," + labels[j] + ")");
      }
    }
    if (d[i][i] != 0) {
      throw SpaceError(SpaceError::Axiom::NonzeroDiagonal, {i},
                       "nonzero diagonal at " + labels[i]);
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      for (int j = 0; j < n; ++j) {
        if (d[i][j] > d[i][k] + d[k][j]) {
          throw SpaceError(SpaceError::Axiom::Triangle, {i, k, j},
                           "triangle inequality fails: d(" + labels[i] + "," + labels[j] +
                               ") > d(" + labels[i] + "," + labels[k] + ") + d(" + labels[k] +
                               "," + labels[j] + ")");
        }
      }
    }
  }

  // Strongest kind the matrix satisfies; never trusted from input files.
  bool symmetric = true;
  bool forward_positive = true;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (d[i][j] != d[j][i]) symmetric = false;
      if (d[i][j] == 0) {
        forward_positive = false;
        if (d[j][i] == 0) {
          throw SpaceError(SpaceError::Axiom::Separation, {i, j},
                           "points " + labels[i] + " and " + labels[j] +
                               " are not separated: both directed distances vanish");
        }
      }
    }
  }

  QuasiMetricSpace space;
  space.labels = std::move(labels);
  space.d = std::move(d);
  space.base = base;
  space.kind = symmetric ? Kind::Metric
                         : (forward_positive ? Kind::QuasiMetric : Kind::QuasiHemiMetric);
  return space;
}

QuasiMetricSpace reverse(const QuasiMetricSpace& space) {
  const int n = space.size();
  std::vector<std::vector<Rat>> t(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t[i][j] = space.d[j][i];
  }
  return validate(std::move(t), space.base, space.labels);
}

QuasiMetricSpace symmetrize(const QuasiMetricSpace& space, SymMode mode) {
  return symmetrize(space, [mode](const Rat& a, const Rat& b) {
    return mode == SymMode::Max ? std::max(a, b) : Rat(a + b);
  });
}

QuasiMetricSpace symmetrize(const QuasiMetricSpace& space,
                            const std::function<Rat(const Rat&, const Rat&)>& combiner) {
  const int n = space.size();
  std::vector<std::vector<Rat>> s(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Rat& a = space.d[i][j];
      const Rat& b = space.d[j][i];
      Rat v = combiner(a, b);
      Rat w = combiner(b, a);
      if (v != w) {
        throw std::invalid_argument("symmetrize: combiner is not symmetric on (" +
                                    rat_to_string(a) + "," + rat_to_string(b) + ")");
      }
      if (v < std::max(a, b)) {
        throw std::invalid_argument("symmetrize: combiner below max on (" + rat_to_string(a) +
                                    "," + rat_to_string(b) + ")");
      }
      if ((v == 0) != (a == 0 && b == 0)) {
        throw std::invalid_argument("symmetrize: combiner breaks the zero condition on (" +
                                    rat_to_string(a) + "," + rat_to_string(b) + ")");
      }
      s[i][j] = std::move(v);
    }
  }
  return validate(std::move(s), space.base, space.labels);
}

QuasiMetricSpace adjoin_basepoint(const QuasiMetricSpace& space) {
  const int n = space.size();
  std::string name = "x*";
  while (space.index_of(name) >= 0) name += "*";

  std::vector<std::vector<Rat>> d(n + 1, std::vector<Rat>(n + 1, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) d[i][j] = space.d[i][j];
    d[i][n] = 1;
    d[n][i] = 1;
  }
  std::vector<std::string> labels = space.labels;
  labels.push_back(name);
  return validate(std::move(d), n, std::move(labels));
}

EquivalenceResult equivalence_constant(const QuasiMetricSpace& a, const QuasiMetricSpace& b) {
  if (a.labels != b.labels) {
    throw std::invalid_argument("equivalence_constant: point sets differ");
  }
  const int n = a.size();
  EquivalenceResult result;
  bool first = true;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const bool pa = a.d[i][j] > 0;
      const bool pb = b.d[i][j] > 0;
      if (pa != pb) {
        result.equivalent = false;
        result.witness = {i, j};
        return result;
      }
      if (!pa) continue;
      Rat ratio = b.d[i][j] / a.d[i][j];
      if (first) {
        result.c_low = ratio;
        result.c_high = ratio;
        first = false;
      } else {
        result.c_low = std::min(result.c_low, ratio);
        result.c_high = std::max(result.c_high, ratio);
      }
    }
  }
  if (first) {
    result.c_low = 1;
    result.c_high = 1;
  }
  result.equivalent = true;
  return result;
}

QuasiMetricSpace induced_subspace(const QuasiMetricSpace& space, const std::vector<int>& points) {
  const int m = static_cast<int>(points.size());
  int new_base = -1;
  std::vector<std::vector<Rat>> d(m, std::vector<Rat>(m));
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = space.labels.at(points[i]);
    if (points[i] == space.base) new_base = i;
    for (int j = 0; j < m; ++j) d[i][j] = space.d.at(points[i]).at(points[j]);
  }
  if (new_base < 0) throw std::invalid_argument("induced_subspace: base point not in subset");
  return validate(std::move(d), new_base, std::move(labels));
}

}  // namespace qmf

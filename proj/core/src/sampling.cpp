#include "qmfree/sampling.hpp"

#include <algorithm>
#include <set>

namespace qmf {

std::uint64_t Rng::next() {
  // splitmix64
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int Rng::uniform(int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return lo + static_cast<int>(v % span);
}

Rat Rng::rational(int num_lo, int num_hi, int den_hi) {
  Rat r(uniform(num_lo, num_hi), uniform(1, den_hi));
  r.canonicalize();
  return r;
}

Rng Rng::fork() { return Rng(next()); }

namespace {

// Shortest-path closure; input diagonal zero, entries nonnegative.
void min_plus_closure(std::vector<std::vector<Rat>>& d) {
  const int n = static_cast<int>(d.size());
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Rat via = d[i][k] + d[k][j];
        if (via < d[i][j]) d[i][j] = std::move(via);
      }
    }
  }
}

QuasiMetricSpace closure_space(Rng& rng, int n, bool symmetric, bool allow_zero) {
  while (true) {
    std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) {
      for (int j = symmetric ? i + 1 : 0; j < n; ++j) {
        if (i == j) continue;
        Rat v = allow_zero && rng.uniform(0, 3) == 0 ? Rat(0)
                                                     : Rat(rng.uniform(1, 8), rng.uniform(1, 4));
        v.canonicalize();
        d[i][j] = v;
        if (symmetric) d[j][i] = std::move(v);
      }
    }
    min_plus_closure(d);
    try {
      return validate(std::move(d), rng.uniform(0, n - 1));
    } catch (const SpaceError&) {
      // separation failed after closure; redraw
    }
  }
}

QuasiMetricSpace order_space(Rng& rng, int n) {
  // u-style quasi-hemi-metric on distinct rationals: d(x,y) = max(y-x, 0).
  std::set<Rat> values;
  while (static_cast<int>(values.size()) < n) values.insert(rng.rational(-6, 6, 3));
  std::vector<Rat> pts(values.begin(), values.end());
  std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n, Rat(0)));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = rat_to_string(pts[i]);
    for (int j = 0; j < n; ++j) {
      if (pts[j] > pts[i]) d[i][j] = pts[j] - pts[i];
    }
  }
  return validate(std::move(d), rng.uniform(0, n - 1), std::move(labels));
}

}  // namespace

QuasiMetricSpace random_space(Rng& rng, int points) {
  switch (rng.uniform(0, 3)) {
    case 0: return random_metric_space(rng, points);
    case 1: return closure_space(rng, points, /*symmetric=*/false, /*allow_zero=*/false);
    case 2: return closure_space(rng, points, /*symmetric=*/false, /*allow_zero=*/true);
    default: return order_space(rng, points);
  }
}

QuasiMetricSpace random_metric_space(Rng& rng, int points) {
  return closure_space(rng, points, /*symmetric=*/true, /*allow_zero=*/false);
}

Molecule random_molecule(Rng& rng, std::shared_ptr<const QuasiMetricSpace> space,
                         int max_terms) {
  const auto free = space->free_indices();
  if (free.empty()) return Molecule::zero(std::move(space));
  const int terms = rng.uniform(1, std::max(1, std::min<int>(max_terms, free.size())));
  std::vector<std::pair<int, Rat>> entries;
  std::vector<int> pool = free;
  for (int t = 0; t < terms && !pool.empty(); ++t) {
    int k = rng.uniform(0, static_cast<int>(pool.size()) - 1);
    int point = pool[k];
    pool.erase(pool.begin() + k);
    Rat c(0);
    while (c == 0) c = rng.rational(-4, 4, 3);
    entries.emplace_back(point, std::move(c));
  }
  return Molecule::from_terms(std::move(space), entries);
}

PointFunction random_slip_function(Rng& rng, std::shared_ptr<const QuasiMetricSpace> space,
                                   const std::vector<int>& domain_points) {
  std::vector<int> domain = domain_points;
  if (std::find(domain.begin(), domain.end(), space->base) == domain.end()) {
    domain.push_back(space->base);
  }
  std::sort(domain.begin(), domain.end());
  Rat slope(rng.uniform(1, 4), rng.uniform(1, 2));
  slope.canonicalize();
  // Lower envelope of cones anchored on a random support subset.
  std::vector<std::pair<int, Rat>> anchors;
  for (int m : domain) {
    if (rng.uniform(0, 1) == 0 || m == space->base) {
      anchors.emplace_back(m, rng.rational(-5, 5, 3));
    }
  }
  std::vector<std::pair<int, Rat>> out;
  for (int x : domain) {
    bool first = true;
    Rat best;
    for (const auto& [m, c] : anchors) {
      Rat candidate = c + slope * space->dist(m, x);
      if (first || candidate < best) {
        best = std::move(candidate);
        first = false;
      }
    }
    out.emplace_back(x, std::move(best));
  }
  // Shift to vanish at the base point.
  Rat at_base;
  for (const auto& [m, v] : out) {
    if (m == space->base) at_base = v;
  }
  for (auto& [m, v] : out) v -= at_base;
  return PointFunction::on_subset(std::move(space), out);
}

PointFunction random_slip_function(Rng& rng, std::shared_ptr<const QuasiMetricSpace> space) {
  std::vector<int> all(space->size());
  for (int i = 0; i < space->size(); ++i) all[i] = i;
  return random_slip_function(rng, std::move(space), all);
}

WeightedRootedTree random_tree(Rng& rng, int max_nodes) {
  const int n = rng.uniform(1, max_nodes);
  std::vector<std::string> nodes(n);
  std::vector<int> parent(n, -1);
  std::vector<Rat> length(n, Rat(0));
  std::vector<bool> marked(n, false);
  for (int i = 0; i < n; ++i) {
    nodes[i] = "n" + std::to_string(i);
    if (i > 0) {
      parent[i] = rng.uniform(0, i - 1);
      length[i] = rng.rational(1, 6, 3);
    }
    marked[i] = rng.uniform(0, 2) != 0;
  }
  marked[0] = true;
  return WeightedRootedTree::make(std::move(nodes), std::move(parent), std::move(length),
                                  std::move(marked));
}

}  // namespace qmf

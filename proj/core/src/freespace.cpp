#include "qmfree/freespace.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmf {

namespace {

void require_same_space(const Molecule& a, const Molecule& b, const char* what) {
  if (!(*a.space == *b.space)) {
    throw std::invalid_argument(std::string(what) + ": molecules live on different spaces");
  }
}

}  // namespace

Molecule Molecule::zero(std::shared_ptr<const QuasiMetricSpace> space) {
  Molecule q;
  q.space = std::move(space);
  return q;
}

Molecule Molecule::dirac(std::shared_ptr<const QuasiMetricSpace> space, int point) {
  return from_terms(std::move(space), {{point, Rat(1)}});
}

Molecule Molecule::from_terms(std::shared_ptr<const QuasiMetricSpace> space,
                              const std::vector<std::pair<int, Rat>>& terms) {
  Molecule q;
  q.space = std::move(space);
  for (const auto& [point, raw] : terms) {
    if (point < 0 || point >= q.space->size()) {
      throw std::invalid_argument("Molecule: point index out of range");
    }
    if (point == q.space->base) continue;  // delta(x0) is the zero functional
    Rat coeff = raw;
    coeff.canonicalize();
    auto it = q.coeffs.find(point);
    if (it == q.coeffs.end()) {
      if (coeff != 0) q.coeffs.emplace(point, std::move(coeff));
    } else {
      it->second += coeff;
      if (it->second == 0) q.coeffs.erase(it);
    }
  }
  return q;
}

Rat Molecule::coeff(int point) const {
  auto it = coeffs.find(point);
  return it == coeffs.end() ? Rat(0) : it->second;
}

Molecule Molecule::operator+(const Molecule& other) const {
  require_same_space(*this, other, "molecule addition");
  Molecule out = *this;
  for (const auto& [point, coeff] : other.coeffs) {
    auto it = out.coeffs.find(point);
    if (it == out.coeffs.end()) {
      out.coeffs.emplace(point, coeff);
    } else {
      it->second += coeff;
      if (it->second == 0) out.coeffs.erase(it);
    }
  }
  return out;
}

Molecule Molecule::operator-(const Molecule& other) const { return *this + (-other); }

Molecule Molecule::operator-() const { return scaled(Rat(-1)); }

Molecule Molecule::scaled(const Rat& factor) const {
  Molecule out;
  out.space = space;
  if (factor == 0) return out;
  for (const auto& [point, coeff] : coeffs) out.coeffs.emplace(point, factor * coeff);
  return out;
}

std::vector<Rat> Molecule::coordinates() const {
  std::vector<Rat> out;
  for (int i : space->free_indices()) out.push_back(coeff(i));
  return out;
}

Molecule Molecule::from_coordinates(std::shared_ptr<const QuasiMetricSpace> space,
                                    const std::vector<Rat>& coords) {
  const auto free = space->free_indices();
  if (coords.size() != free.size()) {
    throw std::invalid_argument("Molecule: coordinate count does not match dimension");
  }
  std::vector<std::pair<int, Rat>> terms;
  for (std::size_t k = 0; k < free.size(); ++k) terms.emplace_back(free[k], coords[k]);
  return from_terms(std::move(space), terms);
}

LinearProgram dual_norm_program(const Molecule& q) {
  const auto& space = *q.space;
  const int n = space.size();
  LinearProgram lp;
  std::vector<int> var_of(n, -1);
  for (int x = 0; x < n; ++x) {
    if (x == space.base) continue;
    // f(x) >= -d(x, x0) holds on the whole ball; declaring it as a bound
    // keeps the simplex phase-1-free without changing the feasible set.
    var_of[x] = lp.add_var("f_" + space.labels[x], Rat(-space.dist(x, space.base)));
  }
  std::vector<Rat> obj(lp.var_count(), Rat(0));
  for (const auto& [point, coeff] : q.coeffs) obj[var_of[point]] = coeff;
  lp.set_objective(Sense::Maximize, std::move(obj));
  // One constraint per ordered pair; pairs with d(y,x) = 0 become
  // f(x) <= f(y). No redundancy reduction here.
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      std::vector<std::pair<int, Rat>> row;
      if (x != space.base) row.emplace_back(var_of[x], Rat(1));
      if (y != space.base) row.emplace_back(var_of[y], Rat(-1));
      if (row.empty()) continue;
      lp.add_row(std::move(row), Rel::Le, space.dist(y, x));
    }
  }
  return lp;
}

NormValue dual_norm(const Molecule& q) {
  if (q.is_zero()) return NormValue::of(Rat(0));
  LPOutcome outcome = solve(dual_norm_program(q));
  if (outcome.status != LPStatus::Optimal) {
    throw std::logic_error("dual_norm: ball LP not optimal");
  }
  return NormValue::of(outcome.value);
}

LinearProgram kr_norm_program(const Molecule& q) {
  const auto& space = *q.space;
  const int n = space.size();
  LinearProgram lp;
  // One transport variable per ordered pair (z, y), z != y, base included.
  std::vector<std::vector<int>> var(n, std::vector<int>(n, -1));
  std::vector<Rat> cost;
  for (int z = 0; z < n; ++z) {
    for (int y = 0; y < n; ++y) {
      if (z == y) continue;
      var[z][y] = lp.add_var("t_" + space.labels[z] + "_" + space.labels[y], Rat(0));
      cost.push_back(space.dist(z, y));
    }
  }
  lp.set_objective(Sense::Minimize, std::move(cost));
  // Net creation at each non-base point equals the coefficient; the base
  // point absorbs the imbalance.
  for (int x = 0; x < n; ++x) {
    if (x == space.base) continue;
    std::vector<std::pair<int, Rat>> row;
    for (int z = 0; z < n; ++z) {
      if (var[z][x] >= 0) row.emplace_back(var[z][x], Rat(1));
    }
    for (int y = 0; y < n; ++y) {
      if (var[x][y] >= 0) row.emplace_back(var[x][y], Rat(-1));
    }
    lp.add_row(std::move(row), Rel::Eq, q.coeff(x));
  }
  return lp;
}

std::pair<NormValue, KRDecomposition> kr_norm(const Molecule& q) {
  KRDecomposition decomposition;
  decomposition.cost = 0;
  if (q.is_zero()) return {NormValue::of(Rat(0)), decomposition};

  const auto& space = *q.space;
  const int n = space.size();
  LPOutcome outcome = solve(kr_norm_program(q));
  if (outcome.status != LPStatus::Optimal) {
    throw std::logic_error("kr_norm: transport LP not optimal");
  }
  int k = 0;
  for (int z = 0; z < n; ++z) {
    for (int y = 0; y < n; ++y) {
      if (z == y) continue;
      const Rat& w = outcome.witness[k++];
      if (w > 0) decomposition.terms.push_back(KRTerm{w, y, z});
    }
  }
  decomposition.cost = outcome.value;
  return {NormValue::of(outcome.value), decomposition};
}

NormValue sym_free_norm(const Molecule& q, SymMode mode) {
  auto sym = std::make_shared<QuasiMetricSpace>(symmetrize(*q.space, mode));
  Molecule moved;
  moved.space = std::move(sym);
  moved.coeffs = q.coeffs;
  return dual_norm(moved);
}

Molecule elementary_molecule(const std::shared_ptr<const QuasiMetricSpace>& space, int x, int y) {
  const Rat& dyx = space->dist(y, x);
  if (dyx == 0) {
    throw std::invalid_argument("elementary_molecule: d(" + space->labels[y] + "," +
                                space->labels[x] + ") = 0");
  }
  Rat inv = 1 / dyx;
  return Molecule::from_terms(space, {{x, inv}, {y, Rat(-inv)}});
}

Rat pairing(const Molecule& q, const PointFunction& f) {
  if (!(*q.space == *f.space)) {
    throw std::invalid_argument("pairing: molecule and function live on different spaces");
  }
  if (!f.full_domain()) throw std::invalid_argument("pairing: function not fully defined");
  if (f.at(q.space->base) != 0) {
    throw std::invalid_argument("pairing: function does not vanish at the base point");
  }
  Rat out(0);
  for (const auto& [point, coeff] : q.coeffs) out += coeff * f.at(point);
  return out;
}

NormValue molecule_distance(const Molecule& q1, const Molecule& q2) {
  require_same_space(q1, q2, "molecule_distance");
  return dual_norm(q2 - q1);
}

PointMap PointMap::of(std::shared_ptr<const QuasiMetricSpace> domain,
                      std::shared_ptr<const QuasiMetricSpace> codomain, std::vector<int> image) {
  if (static_cast<int>(image.size()) != domain->size()) {
    throw std::invalid_argument("PointMap: image size does not match domain");
  }
  for (int v : image) {
    if (v < 0 || v >= codomain->size()) {
      throw std::invalid_argument("PointMap: image index out of range");
    }
  }
  if (image[domain->base] != codomain->base) {
    throw std::invalid_argument("PointMap: base point is not preserved");
  }
  PointMap f;
  f.domain = std::move(domain);
  f.codomain = std::move(codomain);
  f.image = std::move(image);
  return f;
}

NormValue slip_constant(const PointMap& f) {
  const auto& d1 = *f.domain;
  const auto& d2 = *f.codomain;
  const int n = d1.size();
  Rat best(0);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      const Rat& denom = d1.dist(y, x);
      const Rat& num = d2.dist(f.image[y], f.image[x]);
      if (denom == 0) {
        if (num > 0) return NormValue::infinite();
        continue;
      }
      Rat ratio = num / denom;
      if (ratio > best) best = std::move(ratio);
    }
  }
  return NormValue::of(best);
}

Molecule pushforward(const PointMap& f, const Molecule& q) {
  if (!(*q.space == *f.domain)) {
    throw std::invalid_argument("pushforward: molecule does not live on the map's domain");
  }
  if (slip_constant(f).is_infinite()) {
    throw std::invalid_argument("pushforward: map is not semi-Lipschitz");
  }
  std::vector<std::pair<int, Rat>> terms;
  for (const auto& [point, coeff] : q.coeffs) terms.emplace_back(f.image[point], coeff);
  return Molecule::from_terms(f.codomain, terms);
}

}  // namespace qmf

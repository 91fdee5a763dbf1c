#include "qmfree/functions.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmf {

PointFunction PointFunction::full(std::shared_ptr<const QuasiMetricSpace> space,
                                  std::vector<Rat> values) {
  if (static_cast<int>(values.size()) != space->size()) {
    throw std::invalid_argument("PointFunction: value count does not match point count");
  }
  PointFunction f;
  f.space = std::move(space);
  f.values.reserve(values.size());
  for (auto& v : values) {
    v.canonicalize();
    f.values.emplace_back(std::move(v));
  }
  return f;
}

PointFunction PointFunction::on_subset(std::shared_ptr<const QuasiMetricSpace> space,
                                       const std::vector<std::pair<int, Rat>>& values) {
  PointFunction f;
  f.values.assign(space->size(), std::nullopt);
  f.space = std::move(space);
  for (const auto& [i, v] : values) {
    if (i < 0 || i >= static_cast<int>(f.values.size())) {
      throw std::invalid_argument("PointFunction: index out of range");
    }
    Rat canonical = v;
    canonical.canonicalize();
    f.values[i] = std::move(canonical);
  }
  return f;
}

bool PointFunction::full_domain() const {
  return std::all_of(values.begin(), values.end(), [](const auto& v) { return v.has_value(); });
}

std::vector<int> PointFunction::domain() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(values.size()); ++i) {
    if (values[i]) out.push_back(i);
  }
  return out;
}

NormValue slip_norm(const PointFunction& f) {
  if (!f.full_domain()) throw std::invalid_argument("slip_norm: function not fully defined");
  const auto& space = *f.space;
  const int n = space.size();
  Rat best(0);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      const Rat& dyx = space.dist(y, x);
      Rat diff = f.at(x) - f.at(y);
      if (dyx == 0) {
        if (diff > 0) return NormValue::infinite();
        continue;
      }
      Rat ratio = diff / dyx;
      if (ratio > best) best = std::move(ratio);
    }
  }
  return NormValue::of(best);
}

NormValue lip_norm(const PointFunction& f, const QuasiMetricSpace& metric) {
  if (metric.kind != Kind::Metric) {
    throw std::invalid_argument("lip_norm: space is not metric-kind");
  }
  if (metric.size() != f.space->size()) {
    throw std::invalid_argument("lip_norm: point sets differ");
  }
  if (!f.full_domain()) throw std::invalid_argument("lip_norm: function not fully defined");
  const int n = metric.size();
  Rat best(0);
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      Rat diff = rat_abs(f.at(x) - f.at(y));
      if (metric.dist(x, y) == 0) continue;  // unreachable on valid metrics
      Rat ratio = diff / metric.dist(x, y);
      if (ratio > best) best = std::move(ratio);
    }
  }
  return NormValue::of(best);
}

MonotoneReport is_d_monotone(const PointFunction& f) {
  if (!f.full_domain()) throw std::invalid_argument("is_d_monotone: function not fully defined");
  const auto& space = *f.space;
  const int n = space.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      if (space.dist(y, x) == 0 && f.at(x) > f.at(y)) {
        return MonotoneReport{false, std::make_pair(y, x)};
      }
    }
  }
  return MonotoneReport{};
}

PointFunction mcshane_extend(const PointFunction& partial) {
  const auto& space = *partial.space;
  if (!partial.defined(space.base)) {
    throw std::invalid_argument("mcshane_extend: base point not in the domain");
  }
  const std::vector<int> domain = partial.domain();

  PointFunction restricted;
  {
    auto sub = std::make_shared<QuasiMetricSpace>(induced_subspace(space, domain));
    std::vector<Rat> vals;
    vals.reserve(domain.size());
    for (int i : domain) vals.push_back(partial.at(i));
    restricted = PointFunction::full(std::move(sub), std::move(vals));
  }
  NormValue norm = slip_norm(restricted);
  if (norm.is_infinite()) {
    throw std::invalid_argument("mcshane_extend: restriction is not semi-Lipschitz");
  }
  const Rat& L = norm.value();

  std::vector<Rat> out(space.size());
  for (int x = 0; x < space.size(); ++x) {
    bool first = true;
    Rat best;
    for (int m : domain) {
      Rat candidate = partial.at(m) + L * space.dist(m, x);
      if (first || candidate < best) {
        best = std::move(candidate);
        first = false;
      }
    }
    out[x] = std::move(best);
  }
  return PointFunction::full(partial.space, std::move(out));
}

}  // namespace qmf

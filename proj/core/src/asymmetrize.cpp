#include "qmfree/asymmetrize.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qmfree/lp.hpp"
#include "qmfree/polytope.hpp"
#include "qmfree/sampling.hpp"

namespace qmf {

ConeSpec ConeSpec::nonneg() {
  ConeSpec c;
  c.variant = Variant::Nonneg;
  return c;
}

ConeSpec ConeSpec::tree_monotone(WeightedRootedTree tree) {
  ConeSpec c;
  c.variant = Variant::TreeMonotone;
  c.tree = std::move(tree);
  return c;
}

ConeSpec ConeSpec::explicit_halfspaces(std::vector<std::vector<Rat>> rows) {
  ConeSpec c;
  c.variant = Variant::Explicit;
  c.halfspaces = std::move(rows);
  return c;
}

std::string property_name(Property p) {
  switch (p) {
    case Property::S: return "S";
    case Property::Sstar: return "S*";
    case Property::S0star: return "S0*";
    case Property::H: return "H";
    case Property::EqP: return "eqP-decomposition";
  }
  return "?";
}

std::string verdict_name(PropertyReport::Verdict v) {
  switch (v) {
    case PropertyReport::Verdict::HoldsExact: return "holds-exact";
    case PropertyReport::Verdict::HoldsOnSample: return "holds-on-sample";
    case PropertyReport::Verdict::Counterexample: return "counterexample";
  }
  return "?";
}

std::vector<std::vector<Rat>> cone_rows(const ConeSpec& cone, const QuasiMetricSpace& space) {
  const int n = space.size();
  std::vector<std::vector<Rat>> rows;
  switch (cone.variant) {
    case ConeSpec::Variant::Nonneg: {
      for (int i = 0; i < n; ++i) {
        if (i == space.base) continue;
        std::vector<Rat> row(n, Rat(0));
        row[i] = 1;
        rows.push_back(std::move(row));
      }
      break;
    }
    case ConeSpec::Variant::TreeMonotone: {
      if (!cone.tree) throw std::invalid_argument("tree-monotone cone without a tree");
      const auto& tree = *cone.tree;
      const auto marked = tree.marked_nodes();
      if (static_cast<int>(marked.size()) != n) {
        throw std::invalid_argument("tree-monotone cone: marked set does not match the space");
      }
      std::vector<int> point_of(tree.size(), -1);
      for (int m : marked) {
        int idx = space.index_of(tree.nodes[m]);
        if (idx < 0) {
          throw std::invalid_argument("tree-monotone cone: marked node '" + tree.nodes[m] +
                                      "' is not a point of the space");
        }
        point_of[m] = idx;
      }
      if (point_of[0] != space.base) {
        throw std::invalid_argument("tree-monotone cone: tree root is not the base point");
      }
      for (const auto& atom : atom_weights(tree)) {
        std::vector<Rat> row(n, Rat(0));
        row[point_of[atom.node]] += 1;
        row[point_of[atom.pred]] -= 1;
        rows.push_back(std::move(row));
      }
      break;
    }
    case ConeSpec::Variant::Explicit: {
      for (const auto& given : cone.halfspaces) {
        if (static_cast<int>(given.size()) != n) {
          throw std::invalid_argument("explicit cone row has the wrong size");
        }
        rows.push_back(given);
      }
      break;
    }
  }
  // Fold the base coordinate away (phi(x0) = 0).
  for (auto& row : rows) row[space.base] = 0;
  return rows;
}

namespace {

// Unordered Lipschitz pairs that are not implied by triangle equality
// through an intermediate point. The pruned ball is exactly the full ball.
std::vector<std::pair<int, int>> essential_pairs(const QuasiMetricSpace& metric) {
  const int n = metric.size();
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      bool implied = false;
      for (int c = 0; c < n && !implied; ++c) {
        if (c == a || c == b) continue;
        implied = metric.dist(a, c) + metric.dist(c, b) == metric.dist(a, b);
      }
      if (!implied) pairs.emplace_back(a, b);
    }
  }
  return pairs;
}

struct PBall {
  LinearProgram lp;
  std::vector<int> var_of;  // per point, -1 at base
};

PBall make_pball(const QuasiMetricSpace& metric, const ConeSpec& cone) {
  if (metric.kind != Kind::Metric) {
    throw std::invalid_argument("cone-restricted ball needs a metric-kind space");
  }
  const std::vector<std::vector<Rat>> rows = cone_rows(cone, metric);
  const bool nonneg_like =
      cone.variant == ConeSpec::Variant::Nonneg || cone.variant == ConeSpec::Variant::TreeMonotone;

  PBall ball;
  const int n = metric.size();
  ball.var_of.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    if (i == metric.base) continue;
    // Every ball element obeys phi(i) >= -D(i, x0); monotone cones pin 0.
    Rat lo = nonneg_like ? Rat(0) : Rat(-metric.dist(i, metric.base));
    ball.var_of[i] = ball.lp.add_var("phi_" + metric.labels[i], std::move(lo));
  }
  for (const auto& [a, b] : essential_pairs(metric)) {
    std::vector<std::pair<int, Rat>> fwd, bwd;
    if (a != metric.base) {
      fwd.emplace_back(ball.var_of[a], Rat(1));
      bwd.emplace_back(ball.var_of[a], Rat(-1));
    }
    if (b != metric.base) {
      fwd.emplace_back(ball.var_of[b], Rat(-1));
      bwd.emplace_back(ball.var_of[b], Rat(1));
    }
    if (fwd.empty()) continue;
    ball.lp.add_row(fwd, Rel::Le, metric.dist(a, b));
    ball.lp.add_row(bwd, Rel::Le, metric.dist(a, b));
  }
  for (const auto& row : rows) {
    std::vector<std::pair<int, Rat>> coeffs;
    for (int i = 0; i < n; ++i) {
      if (row[i] != 0 && ball.var_of[i] >= 0) coeffs.emplace_back(ball.var_of[i], row[i]);
    }
    if (!coeffs.empty()) ball.lp.add_row(std::move(coeffs), Rel::Ge, Rat(0));
  }
  return ball;
}

Rat pball_max(PBall& ball, const QuasiMetricSpace& metric,
              const std::vector<std::pair<int, Rat>>& objective) {
  std::vector<Rat> obj(ball.lp.var_count(), Rat(0));
  for (const auto& [point, coeff] : objective) {
    if (point == metric.base) continue;
    obj[ball.var_of[point]] += coeff;
  }
  ball.lp.set_objective(Sense::Maximize, std::move(obj));
  LPOutcome outcome = solve(ball.lp);
  if (outcome.status != LPStatus::Optimal) {
    throw std::logic_error("cone-restricted ball LP not optimal");
  }
  return outcome.value;
}

std::map<std::string, std::string> function_payload(const QuasiMetricSpace& space,
                                                    const std::vector<Rat>& values) {
  std::map<std::string, std::string> out;
  for (int i = 0; i < space.size(); ++i) out[space.labels[i]] = rat_to_string(values[i]);
  return out;
}

std::map<std::string, std::string> molecule_payload(const Molecule& q) {
  std::map<std::string, std::string> out;
  for (const auto& [point, coeff] : q.coeffs) {
    out[q.space->labels[point]] = rat_to_string(coeff);
  }
  return out;
}

}  // namespace

Rat cone_restricted_norm(const Molecule& q, const QuasiMetricSpace& metric,
                         const ConeSpec& cone) {
  if (!(*q.space == metric) && q.space->labels != metric.labels) {
    throw std::invalid_argument("cone_restricted_norm: molecule is not on the metric's points");
  }
  PBall ball = make_pball(metric, cone);
  std::vector<std::pair<int, Rat>> objective(q.coeffs.begin(), q.coeffs.end());
  return pball_max(ball, metric, objective);
}

QuasiMetricSpace canonical_asym(const QuasiMetricSpace& metric, const ConeSpec& cone) {
  PBall ball = make_pball(metric, cone);
  const int n = metric.size();
  std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n, Rat(0)));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      d[x][y] = pball_max(ball, metric, {{y, Rat(1)}, {x, Rat(-1)}});
    }
  }
  return validate(std::move(d), metric.base, metric.labels);
}

QuasiMetricSpace closed_form_dplus_reals(const std::vector<Rat>& points) {
  const int n = static_cast<int>(points.size());
  int base = -1;
  for (int i = 0; i < n; ++i) {
    if (points[i] == 0) base = i;
  }
  if (base < 0) throw std::invalid_argument("closed_form_dplus_reals: 0 must be a point");

  auto dplus = [](const Rat& s, const Rat& t) -> Rat {
    if (s >= 0 && t >= s) return t - s;
    if (t <= s && s <= 0) return s - t;
    if (t >= 0 && s >= t) return std::min(t, Rat(s - t));
    if (s <= t && t <= 0) return std::min(Rat(-t), Rat(t - s));
    return rat_abs(t);
  };

  std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n, Rat(0)));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = rat_to_string(points[i]);
    for (int j = 0; j < n; ++j) {
      if (i != j) d[i][j] = dplus(points[i], points[j]);
    }
  }
  return validate(std::move(d), base, std::move(labels));
}

SplitResult split_pos_neg(const PointFunction& phi, const QuasiMetricSpace& metric) {
  if (!phi.full_domain()) throw std::invalid_argument("split_pos_neg: partial function");
  if (phi.at(phi.space->base) != 0) {
    throw std::invalid_argument("split_pos_neg: function does not vanish at the base point");
  }
  const int n = phi.space->size();
  std::vector<Rat> pos(n), neg(n);
  for (int i = 0; i < n; ++i) {
    pos[i] = std::max(phi.at(i), Rat(0));
    neg[i] = std::max(Rat(-phi.at(i)), Rat(0));
  }
  SplitResult out{PointFunction::full(phi.space, std::move(pos)),
                  PointFunction::full(phi.space, std::move(neg)),
                  Rat(0),
                  Rat(0),
                  Rat(0),
                  {}};
  out.lip = lip_norm(phi, metric).value();
  out.lip_pos = lip_norm(out.pos, metric).value();
  out.lip_neg = lip_norm(out.neg, metric).value();
  for (int i = 0; i < n; ++i) {
    if (out.pos.at(i) - out.neg.at(i) != phi.at(i)) {
      throw std::logic_error("split_pos_neg: decomposition not exact");
    }
  }
  if (std::max(out.lip_pos, out.lip_neg) > out.lip || out.lip > out.lip_pos + out.lip_neg) {
    throw std::logic_error("split_pos_neg: norm certificate violated");
  }
  out.certificate.property = Property::EqP;
  out.certificate.verdict = PropertyReport::Verdict::HoldsExact;
  out.certificate.values["lip"] = rat_to_string(out.lip);
  out.certificate.values["lip_pos"] = rat_to_string(out.lip_pos);
  out.certificate.values["lip_neg"] = rat_to_string(out.lip_neg);
  return out;
}

namespace {

PropertyReport check_s(const QuasiMetricSpace& metric, const ConeSpec& cone,
                       const SampleConfig& config) {
  PropertyReport report;
  report.property = Property::S;
  const QuasiMetricSpace dp = canonical_asym(metric, cone);
  const std::vector<std::vector<Rat>> rows = cone_rows(cone, metric);
  const int n = metric.size();

  auto test_membership = [&](const std::vector<Rat>& values) -> int {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Rat sum(0);
      for (int i = 0; i < n; ++i) sum += rows[r][i] * values[i];
      if (sum < 0) return static_cast<int>(r);
    }
    return -1;
  };

  if (n <= 4) {
    VRep ball = enumerate_vertices(slip_ball_hrep(dp));
    const auto free = dp.free_indices();
    for (const auto& vertex : ball.vertices) {
      std::vector<Rat> values(n, Rat(0));
      for (std::size_t k = 0; k < free.size(); ++k) values[free[k]] = vertex[k];
      int violated = test_membership(values);
      if (violated >= 0) {
        report.verdict = PropertyReport::Verdict::Counterexample;
        report.witness_function = function_payload(dp, values);
        report.values["violated_cone_row"] = std::to_string(violated);
        report.sample_desc = "exhaustive vertex enumeration, |X| <= 4";
        return report;
      }
    }
    report.verdict = PropertyReport::Verdict::HoldsExact;
    report.sample_desc = "exhaustive: all " + std::to_string(ball.vertices.size()) +
                         " vertices of the SLip0(X,D_P) unit ball lie in the cone";
    return report;
  }

  Rng rng(config.seed);
  auto dp_shared = std::make_shared<QuasiMetricSpace>(dp);
  for (int k = 0; k < config.samples; ++k) {
    PointFunction f = random_slip_function(rng, dp_shared);
    std::vector<Rat> values;
    values.reserve(n);
    for (int i = 0; i < n; ++i) values.push_back(f.at(i));
    int violated = test_membership(values);
    if (violated >= 0) {
      report.verdict = PropertyReport::Verdict::Counterexample;
      report.witness_function = function_payload(dp, values);
      report.values["violated_cone_row"] = std::to_string(violated);
      report.values["slip_norm_under_DP"] = slip_norm(f).str();
      report.sample_desc = "sampled, seed " + std::to_string(config.seed);
      return report;
    }
  }
  report.verdict = PropertyReport::Verdict::HoldsOnSample;
  report.sample_desc = "sampled: " + std::to_string(config.samples) +
                       " semi-Lipschitz functions, seed " + std::to_string(config.seed);
  return report;
}

PropertyReport check_sstar(const QuasiMetricSpace& metric, const ConeSpec& cone,
                           Property property, const SampleConfig& config) {
  PropertyReport report;
  report.property = property;
  auto shared = std::make_shared<QuasiMetricSpace>(metric);
  const int n = metric.size();

  auto examine = [&](const Molecule& q) -> bool {
    if (q.is_zero()) return true;
    Rat free_norm = dual_norm(q).value();
    Rat forward = cone_restricted_norm(q, metric, cone);
    Rat backward = cone_restricted_norm(-q, metric, cone);
    Rat combined =
        property == Property::Sstar ? Rat(forward + backward) : std::max(forward, backward);
    if (combined == free_norm) return true;
    report.verdict = PropertyReport::Verdict::Counterexample;
    report.witness_molecule = molecule_payload(q);
    report.values["free_norm"] = rat_to_string(free_norm);
    report.values["cone_norm"] = rat_to_string(forward);
    report.values["cone_norm_reversed"] = rat_to_string(backward);
    report.values[property == Property::Sstar ? "sum" : "max"] = rat_to_string(combined);
    return false;
  };

  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      Molecule q = Molecule::from_terms(shared, {{y, Rat(1)}, {x, Rat(-1)}});
      if (!examine(q)) {
        report.sample_desc = "pairwise molecule family";
        return report;
      }
    }
  }
  Rng rng(config.seed);
  for (int k = 0; k < config.samples; ++k) {
    Molecule q = random_molecule(rng, shared, n);
    if (!examine(q)) {
      report.sample_desc = "random molecule sample, seed " + std::to_string(config.seed);
      return report;
    }
  }
  report.verdict = PropertyReport::Verdict::HoldsOnSample;
  report.sample_desc = "all pairwise molecules plus " + std::to_string(config.samples) +
                       " random molecules, seed " + std::to_string(config.seed);
  return report;
}

}  // namespace

PropertyReport check_property(const QuasiMetricSpace& metric, const ConeSpec& cone,
                              Property property, const SampleConfig& config) {
  if (metric.kind != Kind::Metric) {
    throw std::invalid_argument("check_property: input space must be metric-kind");
  }
  switch (property) {
    case Property::S: return check_s(metric, cone, config);
    case Property::Sstar:
    case Property::S0star: return check_sstar(metric, cone, property, config);
    default:
      throw std::invalid_argument("check_property: only S, S*, S0* are handled here");
  }
}

ConeSpec slip_cone(const QuasiMetricSpace& quasi) {
  const int n = quasi.size();
  std::vector<std::vector<Rat>> rows;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y || quasi.dist(y, x) != 0) continue;
      // phi(x) <= phi(y) whenever d(y,x) = 0
      std::vector<Rat> row(n, Rat(0));
      row[y] = 1;
      row[x] = -1;
      rows.push_back(std::move(row));
    }
  }
  return ConeSpec::explicit_halfspaces(std::move(rows));
}

HReport check_H(const QuasiMetricSpace& quasi, SymMode mode, const SampleConfig& config) {
  const QuasiMetricSpace sym = symmetrize(quasi, mode);
  const ConeSpec cone = slip_cone(quasi);
  const int n = quasi.size();
  auto sym_shared = std::make_shared<QuasiMetricSpace>(sym);

  HReport out;
  out.report.property = Property::H;
  out.alpha = 1;

  // alpha = max over pairs with d(y,x) > 0 of D_P(y,x) / d(y,x), the exact
  // smallest constant with ||phi|_S <= alpha ||phi||_L over the cone.
  {
    PBall ball = make_pball(sym, cone);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (x == y || quasi.dist(y, x) == 0) continue;
        Rat value = pball_max(ball, sym, {{x, Rat(1)}, {y, Rat(-1)}});
        Rat ratio = value / quasi.dist(y, x);
        if (ratio > out.alpha) out.alpha = std::move(ratio);
      }
    }
  }

  // Decomposition feasibility at a witness function phi with Lipschitz
  // norm L: find phi1 in the slip cone with both slip norms bounded by L.
  auto feasible_split = [&](const std::vector<Rat>& phi, const Rat& L) -> bool {
    LinearProgram lp;
    std::vector<int> var_of(n, -1);
    for (int i = 0; i < n; ++i) {
      if (i != quasi.base) var_of[i] = lp.add_var("p1_" + quasi.labels[i]);
    }
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (x == y) continue;
        std::vector<std::pair<int, Rat>> row;
        if (x != quasi.base) row.emplace_back(var_of[x], Rat(1));
        if (y != quasi.base) row.emplace_back(var_of[y], Rat(-1));
        if (row.empty()) continue;
        Rat bound = L * quasi.dist(y, x);
        lp.add_row(row, Rel::Le, bound);                           // phi1 semi-Lipschitz
        lp.add_row(std::move(row), Rel::Le, bound + phi[x] - phi[y]);  // phi2 = phi1 - phi
      }
    }
    return solve(lp).status == LPStatus::Optimal;
  };

  auto witness_fails = [&](const std::vector<Rat>& phi) -> bool {
    PointFunction f = PointFunction::full(sym_shared, phi);
    Rat L = lip_norm(f, sym).value();
    if (L == 0) return false;
    if (feasible_split(phi, L)) return false;
    out.report.verdict = PropertyReport::Verdict::Counterexample;
    out.report.witness_function = function_payload(sym, phi);
    out.report.values["lip_norm"] = rat_to_string(L);
    return true;
  };

  int vertex_count = 0;
  if (n <= 4 && n >= 2) {
    VRep ball = enumerate_vertices(slip_ball_hrep(sym));
    const auto free = sym.free_indices();
    for (const auto& vertex : ball.vertices) {
      std::vector<Rat> phi(n, Rat(0));
      for (std::size_t k = 0; k < free.size(); ++k) phi[free[k]] = vertex[k];
      ++vertex_count;
      if (witness_fails(phi)) {
        out.report.sample_desc = "Lipschitz-ball vertex";
        return out;
      }
    }
  }
  Rng rng(config.seed);
  for (int k = 0; k < config.samples; ++k) {
    PointFunction f = random_slip_function(rng, sym_shared);
    std::vector<Rat> phi;
    phi.reserve(n);
    for (int i = 0; i < n; ++i) phi.push_back(f.at(i));
    if (witness_fails(phi)) {
      out.report.sample_desc = "random Lipschitz function, seed " + std::to_string(config.seed);
      return out;
    }
  }
  out.report.verdict = PropertyReport::Verdict::HoldsOnSample;
  std::ostringstream desc;
  if (vertex_count > 0) desc << "all " << vertex_count << " Lipschitz-ball vertices plus ";
  desc << config.samples << " random Lipschitz functions, seed " << config.seed;
  out.report.sample_desc = desc.str();
  return out;
}

}  // namespace qmf

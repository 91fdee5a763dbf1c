#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmfree/functions.hpp"
#include "qmfree/sampling.hpp"
#include "support/fixtures.hpp"

using namespace qmf;

namespace {

// Distance-to-a-point function f = d(x, .) - d(x, x0).
PointFunction distance_function(const fixtures::SpacePtr& space, int x) {
  std::vector<Rat> values;
  for (int y = 0; y < space->size(); ++y) {
    values.push_back(space->dist(x, y) - space->dist(x, space->base));
  }
  return PointFunction::full(space, std::move(values));
}

}  // namespace

TEST_CASE("slip norm of the figure-2 function g = (1, 0)") {
  auto s = fixtures::figure2();
  PointFunction g = PointFunction::full(s, {Rat(0), Rat(1), Rat(0)});
  // six-term maximum: max{1, -1, 1, 0, -2/3, 0}
  CHECK(slip_norm(g) == NormValue::of(Rat(1)));
}

TEST_CASE("a function increasing against a zero distance is not semi-Lipschitz") {
  auto s = fixtures::hemi_pair();  // d(a,b) = 1, d(b,a) = 0
  PointFunction f = PointFunction::full(s, {Rat(1), Rat(0)});
  CHECK(slip_norm(f).is_infinite());
}

TEST_CASE("distance functions have slip norm exactly 1") {
  // On quasi-metric-kind spaces every point has positive outgoing distances,
  // so the bound 1 is attained at every x.
  for (const auto& s : {fixtures::figure2(), fixtures::discrete_hemi(3)}) {
    for (int x = 0; x < s->size(); ++x) {
      CHECK(slip_norm(distance_function(s, x)) == NormValue::of(Rat(1)));
    }
  }
  // Hemi case: from the maximum of the order space all distances vanish and
  // the distance function collapses to 0.
  auto u = fixtures::upper_line({Rat(0), Rat(1), Rat(2)});
  CHECK(slip_norm(distance_function(u, 0)) == NormValue::of(Rat(1)));
  CHECK(slip_norm(distance_function(u, 1)) == NormValue::of(Rat(1)));
  CHECK(slip_norm(distance_function(u, 2)) == NormValue::of(Rat(0)));
}

TEST_CASE("constant functions have slip norm 0") {
  auto s = fixtures::figure2();
  PointFunction c = PointFunction::full(s, {Rat(5), Rat(5), Rat(5)});
  CHECK(slip_norm(c) == NormValue::of(Rat(0)));
}

TEST_CASE("lip norm is the max of the two slip norms on metric spaces") {
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    auto m = std::make_shared<const QuasiMetricSpace>(random_metric_space(rng, rng.uniform(2, 6)));
    std::vector<Rat> values;
    for (int i = 0; i < m->size(); ++i) values.push_back(rng.rational(-5, 5, 3));
    PointFunction f = PointFunction::full(m, values);
    for (auto& v : values) v = -v;
    PointFunction neg = PointFunction::full(m, values);
    NormValue lip = lip_norm(f, *m);
    CHECK(lip == NormValue::of(std::max(slip_norm(f).value(), slip_norm(neg).value())));
  }
}

TEST_CASE("monotone functions: lip norm equals slip norm under the order quasi-metric") {
  auto u = fixtures::upper_line({Rat(0), Rat(1), Rat(2)});
  auto m = fixtures::line_metric({Rat(0), Rat(1), Rat(2)});
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    Rat f0(0);
    Rat f1 = f0 + rng.rational(0, 4, 3);
    Rat f2 = f1 + rng.rational(0, 4, 3);
    PointFunction f = PointFunction::full(u, {f0, f1, f2});
    PointFunction g = PointFunction::full(m, {f0, f1, f2});
    CHECK(lip_norm(g, *m) == slip_norm(f));
  }
}

TEST_CASE("lip norm rejects non-metric spaces and zero functions are flat") {
  auto s = fixtures::discrete_hemi(2);
  PointFunction z = PointFunction::full(s, {Rat(0), Rat(0), Rat(0)});
  CHECK_THROWS_AS(lip_norm(z, *s), std::invalid_argument);
  CHECK(lip_norm(z, symmetrize(*s, SymMode::Sum)) == NormValue::of(Rat(0)));
}

TEST_CASE("semi-Lipschitz functions are d-monotone") {
  Rng rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    auto s = std::make_shared<const QuasiMetricSpace>(random_space(rng, rng.uniform(2, 6)));
    PointFunction f = random_slip_function(rng, s);
    REQUIRE(slip_norm(f).is_finite());
    CHECK(is_d_monotone(f).monotone);
  }
}

TEST_CASE("d-monotonicity counterexample with its witnessing pair") {
  auto s = fixtures::chain_hemi();
  PointFunction f = PointFunction::full(s, {Rat(2), Rat(1), Rat(1)});
  MonotoneReport report = is_d_monotone(f);
  CHECK_FALSE(report.monotone);
  REQUIRE(report.witness.has_value());
  // d(b, a) = 0 yet f(a) > f(b)
  CHECK(*report.witness == std::pair<int, int>{1, 0});
  CHECK(slip_norm(f).is_infinite());
}

TEST_CASE("quasi-metric spaces make every function d-monotone and finite-norm") {
  auto s = fixtures::figure2();
  PointFunction f = PointFunction::full(s, {Rat(0), Rat(-7), Rat(13)});
  CHECK(is_d_monotone(f).monotone);
  CHECK(slip_norm(f).is_finite());
}

namespace {

// The two sup formulations of the slip constant: the plain difference ratio
// and the ratio floored at 0. They agree exactly on d-monotone functions.
std::pair<Rat, Rat> both_sups(const PointFunction& f) {
  const auto& s = *f.space;
  bool first = true;
  Rat plain(0), floored(0);
  for (int x = 0; x < s.size(); ++x) {
    for (int y = 0; y < s.size(); ++y) {
      if (x == y || s.dist(y, x) == 0) continue;
      Rat ratio = (f.at(x) - f.at(y)) / s.dist(y, x);
      if (first || ratio > plain) plain = ratio;
      first = false;
      if (ratio > floored) floored = ratio;
    }
  }
  return {plain, floored};
}

}  // namespace

TEST_CASE("the plain and floored sup formulations agree exactly when d-monotone") {
  // not semi-Lipschitz: plain sup is -1, floored sup is 0
  auto pair_space = fixtures::hemi_pair();
  PointFunction f = PointFunction::full(pair_space, {Rat(1), Rat(0)});
  auto [plain, floored] = both_sups(f);
  CHECK(plain == -1);
  CHECK(floored == 0);
  CHECK_FALSE(is_d_monotone(f).monotone);

  // agreement can happen without semi-Lipschitzness (both sups 0 here)
  auto chain = fixtures::chain_hemi();
  PointFunction g = PointFunction::full(chain, {Rat(2), Rat(1), Rat(1)});
  auto [plain2, floored2] = both_sups(g);
  CHECK(plain2 == 0);
  CHECK(floored2 == 0);
  CHECK(slip_norm(g).is_infinite());

  // on d-monotone functions the two formulations coincide with the norm
  Rng rng(67);
  for (int trial = 0; trial < 15; ++trial) {
    auto s = std::make_shared<const QuasiMetricSpace>(random_space(rng, rng.uniform(2, 6)));
    PointFunction h = random_slip_function(rng, s);
    REQUIRE(is_d_monotone(h).monotone);
    auto [p, q] = both_sups(h);
    CHECK(p == q);
    CHECK(slip_norm(h) == NormValue::of(q));
  }
}

TEST_CASE("McShane extension on the order space") {
  auto u = fixtures::upper_line({Rat(0), Rat(1), Rat(2)});
  PointFunction partial = PointFunction::on_subset(u, {{0, Rat(0)}, {2, Rat(2)}});
  PointFunction extended = mcshane_extend(partial);
  CHECK(extended.at(0) == 0);
  CHECK(extended.at(2) == 2);
  CHECK(extended.at(1) == 1);  // min{0 + u(1-0), 2 + u(1-2)}
}

TEST_CASE("McShane extension: full domain is the identity, zero stays zero") {
  auto s = fixtures::figure2();
  PointFunction f = PointFunction::full(s, {Rat(0), Rat(1), Rat(1, 2)});
  PointFunction same = mcshane_extend(f);
  for (int i = 0; i < s->size(); ++i) CHECK(same.at(i) == f.at(i));

  PointFunction zero = PointFunction::on_subset(s, {{0, Rat(0)}, {1, Rat(0)}});
  PointFunction extended = mcshane_extend(zero);
  for (int i = 0; i < s->size(); ++i) CHECK(extended.at(i) == 0);
}

TEST_CASE("McShane extension preserves values and the slip norm exactly") {
  Rng rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    auto s = std::make_shared<const QuasiMetricSpace>(random_space(rng, rng.uniform(2, 7)));
    std::vector<int> subset = {s->base};
    for (int i = 0; i < s->size(); ++i) {
      if (i != s->base && rng.uniform(0, 1)) subset.push_back(i);
    }
    PointFunction partial = random_slip_function(rng, s, subset);
    PointFunction restricted_space_fn = [&] {
      auto sub = std::make_shared<const QuasiMetricSpace>(induced_subspace(*s, partial.domain()));
      std::vector<Rat> vals;
      for (int i : partial.domain()) vals.push_back(partial.at(i));
      return PointFunction::full(sub, vals);
    }();
    NormValue inner = slip_norm(restricted_space_fn);
    REQUIRE(inner.is_finite());

    PointFunction extended = mcshane_extend(partial);
    for (int i : partial.domain()) CHECK(extended.at(i) == partial.at(i));
    CHECK(slip_norm(extended) == inner);
  }
}

TEST_CASE("McShane extension error paths") {
  auto s = fixtures::upper_line({Rat(0), Rat(1), Rat(2)});
  PointFunction no_base = PointFunction::on_subset(s, {{1, Rat(0)}, {2, Rat(1)}});
  CHECK_THROWS_AS(mcshane_extend(no_base), std::invalid_argument);

  // f(1) > f(2) but d(2,1) = 0 inside the subset
  PointFunction bad = PointFunction::on_subset(s, {{0, Rat(0)}, {1, Rat(3)}, {2, Rat(1)}});
  CHECK_THROWS_AS(mcshane_extend(bad), std::invalid_argument);
}

TEST_CASE("slip norm swaps sign under reversal") {
  Rng rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    auto s = std::make_shared<const QuasiMetricSpace>(random_space(rng, rng.uniform(2, 6)));
    auto r = std::make_shared<const QuasiMetricSpace>(reverse(*s));
    std::vector<Rat> values, negated;
    for (int i = 0; i < s->size(); ++i) {
      values.push_back(rng.rational(-4, 4, 2));
      negated.push_back(-values.back());
    }
    CHECK(slip_norm(PointFunction::full(s, values)) ==
          slip_norm(PointFunction::full(r, negated)));
  }
}

TEST_CASE("lip norm under a symmetrization never exceeds the slip norm") {
  Rng rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    auto s = std::make_shared<const QuasiMetricSpace>(random_space(rng, rng.uniform(2, 6)));
    PointFunction f = random_slip_function(rng, s);
    QuasiMetricSpace d = symmetrize(*s, SymMode::Max);
    CHECK(lip_norm(f, d).value() <= slip_norm(f).value());
  }
}

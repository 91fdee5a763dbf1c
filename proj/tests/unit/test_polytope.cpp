#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "qmfree/freespace.hpp"
#include "qmfree/polytope.hpp"
#include "qmfree/sampling.hpp"
#include "support/fixtures.hpp"

using namespace qmf;

namespace {

const std::vector<std::vector<Rat>> kFigure2Vertices = {
    {Rat(-3, 2), Rat(-1)}, {Rat(-3, 2), Rat(-1, 2)}, {Rat(0), Rat(-1)},
    {Rat(0), Rat(1)},      {Rat(1), Rat(0)},         {Rat(1), Rat(1)},
};

}  // namespace

TEST_CASE("figure-2 slip ball H-representation has the six pair rows") {
  HRep h = slip_ball_hrep(*fixtures::figure2());
  CHECK(h.dim == 2);
  REQUIRE(h.rows.size() == 6);
  // the set of (normal, rhs) rows from the six ordered pairs
  auto has_row = [&](std::vector<Rat> normal, Rat rhs) {
    return std::any_of(h.rows.begin(), h.rows.end(), [&](const HRep::Ineq& row) {
      return row.normal == normal && row.rhs == rhs;
    });
  };
  CHECK(has_row({Rat(1), Rat(-1)}, Rat(1)));    // g1 - g2 <= 1
  CHECK(has_row({Rat(-1), Rat(1)}, Rat(1)));    // g2 - g1 <= 1
  CHECK(has_row({Rat(1), Rat(0)}, Rat(1)));     // g1 <= 1
  CHECK(has_row({Rat(0), Rat(1)}, Rat(1)));     // g2 <= 1
  CHECK(has_row({Rat(-1), Rat(0)}, Rat(3, 2))); // -g1 <= 3/2
  CHECK(has_row({Rat(0), Rat(-1)}, Rat(1)));    // -g2 <= 1
}

TEST_CASE("two-point slip ball is the interval") {
  HRep h = slip_ball_hrep(*fixtures::two_point_metric(Rat(1)));
  VRep v = enumerate_vertices(h);
  CHECK(v.bounded());
  REQUIRE(v.vertices.size() == 2);
  CHECK(v.vertices[0] == std::vector<Rat>{Rat(-1)});
  CHECK(v.vertices[1] == std::vector<Rat>{Rat(1)});
}

TEST_CASE("order-space slip ball carries zero-rhs rows") {
  HRep h = slip_ball_hrep(*fixtures::upper_line({Rat(0), Rat(1), Rat(2)}));
  int zero_rows = 0;
  for (const auto& row : h.rows) {
    if (row.rhs == 0) ++zero_rows;
  }
  CHECK(zero_rows == 3);  // pairs (0,1), (0,2), (1,2) reversed all vanish
}

TEST_CASE("figure-2 slip ball has exactly the six derived vertices in lex order") {
  VRep v = enumerate_vertices(slip_ball_hrep(*fixtures::figure2()));
  CHECK(v.bounded());
  CHECK(v.vertices == kFigure2Vertices);
}

TEST_CASE("every nonzero slip-ball vertex sits on the unit sphere") {
  Rng rng(131);
  for (int trial = 0; trial < 15; ++trial) {
    auto s = std::make_shared<const QuasiMetricSpace>(random_space(rng, rng.uniform(2, 4)));
    VRep ball = enumerate_vertices(slip_ball_hrep(*s));
    const auto free = s->free_indices();
    for (const auto& vertex : ball.vertices) {
      std::vector<Rat> values(s->size(), Rat(0));
      for (std::size_t k = 0; k < free.size(); ++k) values[free[k]] = vertex[k];
      bool zero = std::all_of(vertex.begin(), vertex.end(), [](const Rat& x) { return x == 0; });
      NormValue norm = slip_norm(PointFunction::full(s, values));
      if (!zero) CHECK(norm == NormValue::of(Rat(1)));
    }
  }
}

TEST_CASE("unit square enumerates to four corners") {
  HRep h;
  h.dim = 2;
  h.rows = {{{Rat(1), Rat(0)}, Rat(1)},
            {{Rat(-1), Rat(0)}, Rat(0)},
            {{Rat(0), Rat(1)}, Rat(1)},
            {{Rat(0), Rat(-1)}, Rat(0)}};
  VRep v = enumerate_vertices(h);
  CHECK(v.bounded());
  CHECK(v.vertices.size() == 4);
}

TEST_CASE("a lone half-plane has no vertices, only boundary rays") {
  HRep h;
  h.dim = 2;
  h.rows = {{{Rat(1), Rat(1)}, Rat(1)}};
  VRep v = enumerate_vertices(h);
  CHECK(v.vertices.empty());
  CHECK(v.rays.size() == 2);
}

TEST_CASE("asymmetric polar in dimension one is self-dual on [-1, 1]") {
  VRep interval;
  interval.dim = 1;
  interval.vertices = {{Rat(-1)}, {Rat(1)}};
  VRep back = enumerate_vertices(asymmetric_polar(interval));
  CHECK(back.vertices == interval.vertices);
}

TEST_CASE("asymmetric polar of two points in the plane") {
  VRep pair;
  pair.dim = 2;
  pair.vertices = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
  HRep h = asymmetric_polar(pair);
  REQUIRE(h.rows.size() == 2);
  // { v : v1 <= 1, v2 <= 1 }
  CHECK(h.rows[0].rhs == 1);
  CHECK(h.rows[1].rhs == 1);
  VRep v = enumerate_vertices(h);
  REQUIRE(v.vertices.size() == 1);
  CHECK(v.vertices[0] == std::vector<Rat>{Rat(1), Rat(1)});
  CHECK(v.rays.size() == 2);
}

TEST_CASE("free ball of the figure-2 space") {
  VRep ball = free_ball_vrep(*fixtures::figure2());
  CHECK(ball.bounded());
  CHECK(ball.vertices.size() == 6);  // at most 6 extreme points, attained
  auto s = fixtures::figure2();
  for (const auto& vertex : ball.vertices) {
    Molecule q = Molecule::from_coordinates(s, vertex);
    CHECK(dual_norm(q) == NormValue::of(Rat(1)));
  }
}

TEST_CASE("dual norm equals the vertex maximum of the pairing") {
  Rng rng(137);
  for (int trial = 0; trial < 10; ++trial) {
    auto s = std::make_shared<const QuasiMetricSpace>(random_space(rng, rng.uniform(2, 4)));
    VRep ball = enumerate_vertices(slip_ball_hrep(*s));
    const auto free = s->free_indices();
    for (int k = 0; k < 4; ++k) {
      Molecule q = random_molecule(rng, s, 3);
      Rat best(0);
      for (const auto& vertex : ball.vertices) {
        Rat value(0);
        for (std::size_t i = 0; i < free.size(); ++i) value += vertex[i] * q.coeff(free[i]);
        if (value > best) best = value;
      }
      CHECK(dual_norm(q) == NormValue::of(best));
    }
  }
}

TEST_CASE("slip norm equals the free-ball vertex maximum of the pairing") {
  Rng rng(139);
  for (int trial = 0; trial < 10; ++trial) {
    auto s = std::make_shared<const QuasiMetricSpace>(random_space(rng, rng.uniform(2, 4)));
    VRep ball = free_ball_vrep(*s);
    for (int k = 0; k < 4; ++k) {
      PointFunction f = random_slip_function(rng, s);
      NormValue slip = slip_norm(f);
      REQUIRE(slip.is_finite());
      Rat best(0);
      for (const auto& vertex : ball.vertices) {
        Molecule q = Molecule::from_coordinates(s, vertex);
        Rat value = pairing(q, f);
        if (value > best) best = value;
      }
      for (const auto& ray : ball.rays) {
        Molecule q = Molecule::from_coordinates(s, ray);
        CHECK(pairing(q, f) <= 0);
      }
      CHECK(slip == NormValue::of(best));
    }
  }
}

TEST_CASE("bipolar check passes on bounded and hemi fixtures") {
  CHECK(bipolar_check(*fixtures::figure2()).ok);
  CHECK(bipolar_check(*fixtures::two_point_metric(Rat(1))).ok);

  BipolarReport hemi = bipolar_check(*fixtures::discrete_hemi(2));
  CHECK(hemi.ok);
  // the hemi free ball recedes in the negative orthant
  VRep ball = free_ball_vrep(*fixtures::discrete_hemi(2));
  REQUIRE(ball.rays.size() == 2);
  CHECK(ball.rays[0] == std::vector<Rat>{Rat(-1), Rat(0)});
  CHECK(ball.rays[1] == std::vector<Rat>{Rat(0), Rat(-1)});
}

TEST_CASE("reversal constants") {
  CHECK(reversal_constant(*fixtures::two_point_metric(Rat(5))) == NormValue::of(Rat(1)));
  CHECK(reversal_constant(*fixtures::line_metric({Rat(0), Rat(1), Rat(3)})) ==
        NormValue::of(Rat(1)));
  CHECK(reversal_constant(*fixtures::figure2()) == NormValue::of(Rat(3, 2)));
  CHECK(reversal_constant(*fixtures::upper_line({Rat(0), Rat(1), Rat(2)})).is_infinite());
  CHECK(reversal_constant(*fixtures::one_point()) == NormValue::of(Rat(1)));
}

TEST_CASE("reversal constant bounds the reversed norm on samples") {
  auto s = fixtures::figure2();
  NormValue m = reversal_constant(*s);
  REQUIRE(m.is_finite());
  Rng rng(149);
  for (int k = 0; k < 20; ++k) {
    Molecule q = random_molecule(rng, s, 2);
    CHECK(dual_norm(-q).value() <= m.value() * dual_norm(q).value());
  }
}

TEST_CASE("svg rendering is byte-stable and carries the polygon") {
  VRep ball = enumerate_vertices(slip_ball_hrep(*fixtures::figure2()));
  std::string once = render_ball_svg(ball, "ball");
  std::string twice = render_ball_svg(ball, "ball");
  CHECK(once == twice);
  CHECK(once.find("<polygon") != std::string::npos);
  CHECK(once.find("(-3/2,-1)") != std::string::npos);
  CHECK_THROWS_AS(render_ball_svg(VRep{1, {{Rat(0)}}, {}}, "x"), std::invalid_argument);
}

TEST_CASE("dimension guards") {
  Rng rng(151);
  QuasiMetricSpace big = random_space(rng, 5);
  CHECK_THROWS_AS(slip_ball_hrep(big), std::invalid_argument);
  CHECK_THROWS_AS(reversal_constant(big), std::invalid_argument);
  HRep too_big;
  too_big.dim = 4;
  too_big.rows = {{{Rat(1), Rat(0), Rat(0), Rat(0)}, Rat(1)}};
  CHECK_THROWS_AS(enumerate_vertices(too_big), std::invalid_argument);
}

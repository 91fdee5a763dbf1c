#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmfree/lp.hpp"

using namespace qmf;

namespace {

// Figure-2 semi-Lipschitz ball in the coordinates (g1, g2).
LinearProgram figure2_ball() {
  LinearProgram lp;
  int g1 = lp.add_var("g1");
  int g2 = lp.add_var("g2");
  lp.add_row({{g1, Rat(1)}, {g2, Rat(-1)}}, Rel::Le, Rat(1));
  lp.add_row({{g2, Rat(1)}, {g1, Rat(-1)}}, Rel::Le, Rat(1));
  lp.add_row({{g1, Rat(1)}}, Rel::Le, Rat(1));
  lp.add_row({{g2, Rat(1)}}, Rel::Le, Rat(1));
  lp.add_row({{g1, Rat(-1)}}, Rel::Le, Rat(3, 2));
  lp.add_row({{g2, Rat(-1)}}, Rel::Le, Rat(1));
  return lp;
}

}  // namespace

TEST_CASE("single bounded variable") {
  LinearProgram lp;
  int x = lp.add_var("x");
  lp.add_row({{x, Rat(1)}}, Rel::Le, Rat(3, 2));
  lp.set_objective(Sense::Maximize, {Rat(1)});
  LPOutcome out = solve(lp);
  REQUIRE(out.status == LPStatus::Optimal);
  CHECK(out.value == Rat(3, 2));
  CHECK(out.witness[0] == Rat(3, 2));
}

TEST_CASE("figure-2 ball: max g1 is the distance from the base") {
  LinearProgram lp = figure2_ball();
  lp.set_objective(Sense::Maximize, {Rat(1), Rat(0)});
  LPOutcome out = solve(lp);
  REQUIRE(out.status == LPStatus::Optimal);
  CHECK(out.value == 1);
}

TEST_CASE("unbounded program") {
  LinearProgram lp;
  lp.add_var("x", Rat(0));
  lp.set_objective(Sense::Maximize, {Rat(1)});
  CHECK(solve(lp).status == LPStatus::Unbounded);
}

TEST_CASE("infeasible program") {
  LinearProgram lp;
  int x = lp.add_var("x", Rat(0));
  lp.add_row({{x, Rat(1)}}, Rel::Le, Rat(-1));
  lp.set_objective(Sense::Maximize, {Rat(1)});
  CHECK(solve(lp).status == LPStatus::Infeasible);
}

TEST_CASE("equalities, minimization, exact witness") {
  LinearProgram lp;
  int x = lp.add_var("x", Rat(0));
  int y = lp.add_var("y", Rat(0));
  lp.add_row({{x, Rat(1)}, {y, Rat(1)}}, Rel::Eq, Rat(5, 3));
  lp.add_row({{x, Rat(1)}, {y, Rat(-1)}}, Rel::Ge, Rat(1, 3));
  lp.set_objective(Sense::Minimize, {Rat(2), Rat(1)});
  LPOutcome out = solve(lp);
  REQUIRE(out.status == LPStatus::Optimal);
  // best: push x to its minimum x = 1, y = 2/3
  CHECK(out.witness[0] + out.witness[1] == Rat(5, 3));
  CHECK(out.witness[0] - out.witness[1] >= Rat(1, 3));
  CHECK(out.value == 2 * out.witness[0] + out.witness[1]);
  CHECK(out.value == Rat(8, 3));
}

TEST_CASE("free variables may go negative") {
  LinearProgram lp;
  int x = lp.add_var("x");
  lp.add_row({{x, Rat(1)}}, Rel::Le, Rat(-2));
  lp.set_objective(Sense::Maximize, {Rat(1)});
  LPOutcome out = solve(lp);
  REQUIRE(out.status == LPStatus::Optimal);
  CHECK(out.value == -2);
}

TEST_CASE("variable bounds, including fixed variables") {
  LinearProgram lp;
  int x = lp.add_var("x", Rat(-1), Rat(2));
  int y = lp.add_var("y", std::nullopt, Rat(4));
  int z = lp.add_var("z", Rat(1, 2), Rat(1, 2));
  lp.add_row({{x, Rat(1)}, {y, Rat(1)}, {z, Rat(1)}}, Rel::Le, Rat(10));
  lp.set_objective(Sense::Maximize, {Rat(1), Rat(1), Rat(1)});
  LPOutcome out = solve(lp);
  REQUIRE(out.status == LPStatus::Optimal);
  CHECK(out.witness[0] == 2);
  CHECK(out.witness[1] == 4);
  CHECK(out.witness[2] == Rat(1, 2));
  CHECK(out.value == Rat(13, 2));
}

TEST_CASE("Beale's cycling example terminates at the known optimum") {
  LinearProgram lp;
  int x1 = lp.add_var("x1", Rat(0));
  int x2 = lp.add_var("x2", Rat(0));
  int x3 = lp.add_var("x3", Rat(0));
  int x4 = lp.add_var("x4", Rat(0));
  lp.add_row({{x1, Rat(1, 4)}, {x2, Rat(-60)}, {x3, Rat(-1, 25)}, {x4, Rat(9)}}, Rel::Le, Rat(0));
  lp.add_row({{x1, Rat(1, 2)}, {x2, Rat(-90)}, {x3, Rat(-1, 50)}, {x4, Rat(3)}}, Rel::Le, Rat(0));
  lp.add_row({{x3, Rat(1)}}, Rel::Le, Rat(1));
  lp.set_objective(Sense::Maximize, {Rat(3, 4), Rat(-150), Rat(1, 50), Rat(-6)});
  LPOutcome out = solve(lp);
  REQUIRE(out.status == LPStatus::Optimal);
  CHECK(out.value == Rat(1, 20));
}

TEST_CASE("determinism: identical programs give identical witnesses") {
  LinearProgram lp = figure2_ball();
  lp.set_objective(Sense::Maximize, {Rat(2), Rat(-1)});
  LPOutcome a = solve(lp);
  LPOutcome b = solve(lp);
  REQUIRE(a.status == LPStatus::Optimal);
  CHECK(a.value == b.value);
  CHECK(a.witness == b.witness);
}

TEST_CASE("witness satisfies every constraint exactly") {
  LinearProgram lp = figure2_ball();
  lp.set_objective(Sense::Maximize, {Rat(1), Rat(1)});
  LPOutcome out = solve(lp);
  REQUIRE(out.status == LPStatus::Optimal);
  for (const auto& row : lp.rows) {
    Rat lhs(0);
    for (const auto& [j, c] : row.coeffs) lhs += c * out.witness[j];
    CHECK(lhs <= row.rhs);
  }
  Rat obj(0);
  for (int j = 0; j < lp.var_count(); ++j) obj += lp.objective[j] * out.witness[j];
  CHECK(obj == out.value);
}

TEST_CASE("malformed programs are rejected") {
  LinearProgram lp;
  lp.add_var("x");
  lp.add_row({{5, Rat(1)}}, Rel::Le, Rat(1));
  CHECK_THROWS_AS(solve(lp), std::invalid_argument);

  LinearProgram crossed;
  crossed.add_var("x", Rat(2), Rat(1));
  CHECK_THROWS_AS(solve(crossed), std::invalid_argument);
}

TEST_CASE("listing renders a readable program") {
  LinearProgram lp = figure2_ball();
  lp.set_objective(Sense::Maximize, {Rat(1), Rat(0)});
  std::string text = lp.listing();
  CHECK(text.find("max: g1;") != std::string::npos);
  CHECK(text.find("g1 - g2 <= 1;") != std::string::npos);
  CHECK(text.find("<= 3/2;") != std::string::npos);
}

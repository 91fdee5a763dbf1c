#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmfree/rational.hpp"

namespace qmf {

enum class Sense { Maximize, Minimize };
enum class Rel { Le, Eq, Ge };
enum class LPStatus { Optimal, Infeasible, Unbounded };

// Exact-rational linear program. Variables are dense by index; names exist
// for the plain-text listing only.
struct LinearProgram {
  Sense sense = Sense::Maximize;
  std::vector<std::string> names;
  std::vector<Rat> objective;
  std::vector<std::optional<Rat>> lower;
  std::vector<std::optional<Rat>> upper;

  struct Row {
    std::vector<std::pair<int, Rat>> coeffs;
    Rel rel = Rel::Le;
    Rat rhs;
  };
  std::vector<Row> rows;

  int add_var(std::string name, std::optional<Rat> lo = std::nullopt,
              std::optional<Rat> hi = std::nullopt);
  void set_objective(Sense s, std::vector<Rat> coeffs);
  void add_row(std::vector<std::pair<int, Rat>> coeffs, Rel rel, Rat rhs);

  int var_count() const { return static_cast<int>(names.size()); }

  // Plain-text dump of the program, for the debug CLI flag.
  std::string listing() const;
};

struct LPOutcome {
  LPStatus status = LPStatus::Optimal;
  Rat value;                 // objective at the optimum (when Optimal)
  std::vector<Rat> witness;  // one value per declared variable (when Optimal)
};

// Two-phase primal simplex over exact rationals with Bland's anti-cycling
// pivot rule. Deterministic: identical programs produce identical outcomes
// and witnesses. Throws std::invalid_argument on malformed programs
// (out-of-range variable references, crossed bounds).
LPOutcome solve(const LinearProgram& program);

}  // namespace qmf

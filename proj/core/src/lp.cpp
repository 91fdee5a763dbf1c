#include "qmfree/lp.hpp"

#include <sstream>

namespace qmf {

int LinearProgram::add_var(std::string name, std::optional<Rat> lo, std::optional<Rat> hi) {
  names.push_back(std::move(name));
  objective.emplace_back(0);
  lower.push_back(std::move(lo));
  upper.push_back(std::move(hi));
  return var_count() - 1;
}

void LinearProgram::set_objective(Sense s, std::vector<Rat> coeffs) {
  sense = s;
  coeffs.resize(names.size(), Rat(0));
  objective = std::move(coeffs);
}

void LinearProgram::add_row(std::vector<std::pair<int, Rat>> coeffs, Rel rel, Rat rhs) {
  rows.push_back(Row{std::move(coeffs), rel, std::move(rhs)});
}

std::string LinearProgram::listing() const {
  std::ostringstream out;
  auto term = [&](std::ostringstream& os, bool& lead, const Rat& c, const std::string& name) {
    if (c == 0) return;
    if (c > 0 && !lead) os << " + ";
    if (c < 0) os << (lead ? "-" : " - ");
    Rat a = rat_abs(c);
    if (a != 1) os << rat_to_string(a) << " ";
    os << name;
    lead = false;
  };
  out << (sense == Sense::Maximize ? "max:" : "min:");
  {
    std::ostringstream body;
    bool lead = true;
    for (int j = 0; j < var_count(); ++j) term(body, lead, objective[j], names[j]);
    out << " " << (lead ? "0" : body.str()) << ";\n";
  }
  int r = 0;
  for (const auto& row : rows) {
    std::ostringstream body;
    bool lead = true;
    for (const auto& [j, c] : row.coeffs) term(body, lead, c, names[j]);
    out << "r" << r++ << ": " << (lead ? "0" : body.str())
        << (row.rel == Rel::Le ? " <= " : (row.rel == Rel::Eq ? " = " : " >= "))
        << rat_to_string(row.rhs) << ";\n";
  }
  for (int j = 0; j < var_count(); ++j) {
    if (lower[j] && upper[j]) {
      out << rat_to_string(*lower[j]) << " <= " << names[j] << " <= " << rat_to_string(*upper[j])
          << ";\n";
    } else if (lower[j]) {
      out << names[j] << " >= " << rat_to_string(*lower[j]) << ";\n";
    } else if (upper[j]) {
      out << names[j] << " <= " << rat_to_string(*upper[j]) << ";\n";
    } else {
      out << names[j] << " free;\n";
    }
  }
  return out.str();
}

namespace {

// Standard-form tableau: maximize c.y, A y = b, y >= 0, b >= 0 maintained.
struct Tableau {
  int m = 0;
  int n = 0;
  std::vector<std::vector<Rat>> a;  // m x n
  std::vector<Rat> b;               // m
  std::vector<int> basis;           // m, column index basic in each row

  void pivot(int row, int col) {
    Rat p = a[row][col];
    for (int j = 0; j < n; ++j) a[row][j] /= p;
    b[row] /= p;
    for (int i = 0; i < m; ++i) {
      if (i == row) continue;
      if (a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (int j = 0; j < n; ++j) {
        if (a[row][j] != 0) a[i][j] -= f * a[row][j];
      }
      b[i] -= f * b[row];
    }
    basis[row] = col;
  }

  // Maximizes obj (length n) with Bland's rule over columns `usable`.
  // Returns false when unbounded.
  bool run(const std::vector<Rat>& obj, const std::vector<bool>& usable) {
    while (true) {
      // Reduced costs priced against the current basis.
      std::vector<Rat> y(m);  // multipliers: y_i = obj[basis[i]]
      for (int i = 0; i < m; ++i) y[i] = obj[basis[i]];
      int enter = -1;
      for (int j = 0; j < n && enter < 0; ++j) {
        if (!usable[j]) continue;
        Rat red = obj[j];
        for (int i = 0; i < m; ++i) {
          if (y[i] != 0 && a[i][j] != 0) red -= y[i] * a[i][j];
        }
        if (red > 0) enter = j;  // Bland: lowest eligible index
      }
      if (enter < 0) return true;
      int leave = -1;
      Rat best;
      for (int i = 0; i < m; ++i) {
        if (a[i][enter] <= 0) continue;
        Rat ratio = b[i] / a[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  Rat objective_value(const std::vector<Rat>& obj) const {
    Rat v(0);
    for (int i = 0; i < m; ++i) v += obj[basis[i]] * b[i];
    return v;
  }
};

}  // namespace

LPOutcome solve(const LinearProgram& program) {
  const int nv = program.var_count();
  for (const auto& row : program.rows) {
    for (const auto& [j, c] : row.coeffs) {
      if (j < 0 || j >= nv) throw std::invalid_argument("lp: coefficient on unknown variable");
      (void)c;
    }
  }

  // Variable substitutions to reach y >= 0 form:
  //   lower bound l:  x = l + y
  //   upper only u:   x = u - y
  //   free:           x = y_pos - y_neg
  struct Subst {
    int col = -1;       // primary column
    int neg_col = -1;   // second column for split vars
    Rat shift;          // additive offset
    bool negated = false;
  };
  std::vector<Subst> subst(nv);
  int cols = 0;
  for (int j = 0; j < nv; ++j) {
    const auto& lo = program.lower[j];
    const auto& hi = program.upper[j];
    if (lo && hi && *hi < *lo) throw std::invalid_argument("lp: crossed bounds");
    Subst s;
    if (lo) {
      s.col = cols++;
      s.shift = *lo;
    } else if (hi) {
      s.col = cols++;
      s.shift = *hi;
      s.negated = true;
    } else {
      s.col = cols++;
      s.neg_col = cols++;
      s.shift = 0;
    }
    subst[j] = s;
  }

  // Rows: original rows, plus upper-bound rows for doubly bounded vars.
  struct NormRow {
    std::vector<Rat> coef;  // dense over substituted columns
    Rel rel;
    Rat rhs;
  };
  std::vector<NormRow> norm;
  auto add_norm_row = [&](const std::vector<std::pair<int, Rat>>& coeffs, Rel rel, Rat rhs) {
    NormRow r;
    r.coef.assign(cols, Rat(0));
    r.rel = rel;
    r.rhs = std::move(rhs);
    for (const auto& [j, c] : coeffs) {
      if (c == 0) continue;
      const Subst& s = subst[j];
      r.rhs -= c * s.shift;
      if (s.negated) {
        r.coef[s.col] -= c;
      } else {
        r.coef[s.col] += c;
        if (s.neg_col >= 0) r.coef[s.neg_col] -= c;
      }
    }
    norm.push_back(std::move(r));
  };
  for (const auto& row : program.rows) add_norm_row(row.coeffs, row.rel, row.rhs);
  for (int j = 0; j < nv; ++j) {
    if (program.lower[j] && program.upper[j] && *program.upper[j] > *program.lower[j]) {
      add_norm_row({{j, Rat(1)}}, Rel::Le, *program.upper[j]);
    } else if (program.lower[j] && program.upper[j] && *program.upper[j] == *program.lower[j]) {
      // fixed variable; substitution already pinned the shift, force y = 0
      add_norm_row({{j, Rat(1)}}, Rel::Eq, *program.upper[j]);
    }
  }

  // Objective over substituted columns (always maximize internally).
  std::vector<Rat> c(cols, Rat(0));
  Rat c0(0);
  const Rat sign = program.sense == Sense::Maximize ? 1 : -1;
  for (int j = 0; j < nv; ++j) {
    Rat cj = sign * program.objective[j];
    if (cj == 0) continue;
    const Subst& s = subst[j];
    c0 += cj * s.shift;
    if (s.negated) {
      c[s.col] -= cj;
    } else {
      c[s.col] += cj;
      if (s.neg_col >= 0) c[s.neg_col] -= cj;
    }
  }

  const int m = static_cast<int>(norm.size());
  // Columns: structural | slack/surplus | artificial.
  int slack_count = 0;
  for (const auto& r : norm) slack_count += (r.rel != Rel::Eq) ? 1 : 0;

  Tableau t;
  t.m = m;
  t.n = cols + slack_count + m;  // artificial slots allocated per row, used as needed
  t.a.assign(m, std::vector<Rat>(t.n, Rat(0)));
  t.b.assign(m, Rat(0));
  t.basis.assign(m, -1);

  int next_slack = cols;
  std::vector<int> artificial_cols;
  for (int i = 0; i < m; ++i) {
    NormRow& r = norm[i];
    bool flip = r.rhs < 0;
    for (int j = 0; j < cols; ++j) t.a[i][j] = flip ? Rat(-r.coef[j]) : r.coef[j];
    t.b[i] = flip ? Rat(-r.rhs) : r.rhs;
    Rel rel = r.rel;
    if (flip && rel != Rel::Eq) rel = (rel == Rel::Le) ? Rel::Ge : Rel::Le;
    if (rel != Rel::Eq) {
      int sc = next_slack++;
      t.a[i][sc] = (rel == Rel::Le) ? 1 : -1;
      if (rel == Rel::Le) t.basis[i] = sc;  // slack starts basic
    }
    if (t.basis[i] < 0) {
      int ac = cols + slack_count + static_cast<int>(artificial_cols.size());
      artificial_cols.push_back(ac);
      t.a[i][ac] = 1;
      t.basis[i] = ac;
    }
  }
  const int used_cols = cols + slack_count + static_cast<int>(artificial_cols.size());
  t.n = used_cols;
  for (auto& row : t.a) row.resize(used_cols);

  std::vector<bool> usable(t.n, true);

  // Phase 1: drive the artificials to zero.
  if (!artificial_cols.empty()) {
    std::vector<Rat> phase1(t.n, Rat(0));
    for (int ac : artificial_cols) phase1[ac] = -1;
    t.run(phase1, usable);  // bounded by construction (objective <= 0)
    if (t.objective_value(phase1) != 0) {
      LPOutcome out;
      out.status = LPStatus::Infeasible;
      return out;
    }
    // Pivot residual basic artificials out; drop rows that are all zero.
    for (int i = 0; i < t.m; ++i) {
      if (t.basis[i] < cols + slack_count) continue;
      int piv = -1;
      for (int j = 0; j < cols + slack_count && piv < 0; ++j) {
        if (t.a[i][j] != 0) piv = j;
      }
      if (piv >= 0) t.pivot(i, piv);
    }
    for (int ac : artificial_cols) usable[ac] = false;
  }

  // Phase 2.
  std::vector<Rat> obj(t.n, Rat(0));
  for (int j = 0; j < cols; ++j) obj[j] = c[j];
  // Rows still basic in an artificial are identically zero; keep them, the
  // artificial column is unusable so they never pivot.
  if (!t.run(obj, usable)) {
    LPOutcome out;
    out.status = LPStatus::Unbounded;
    return out;
  }

  std::vector<Rat> y(cols, Rat(0));
  for (int i = 0; i < t.m; ++i) {
    if (t.basis[i] < cols) y[t.basis[i]] = t.b[i];
  }
  LPOutcome out;
  out.status = LPStatus::Optimal;
  out.witness.assign(nv, Rat(0));
  for (int j = 0; j < nv; ++j) {
    const Subst& s = subst[j];
    if (s.negated) {
      out.witness[j] = s.shift - y[s.col];
    } else if (s.neg_col >= 0) {
      out.witness[j] = y[s.col] - y[s.neg_col];
    } else {
      out.witness[j] = s.shift + y[s.col];
    }
  }
  out.value = sign * (t.objective_value(obj) + c0);
  return out;
}

}  // namespace qmf

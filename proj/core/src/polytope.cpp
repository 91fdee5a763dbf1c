#include "qmfree/polytope.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qmfree/freespace.hpp"

namespace qmf {

namespace {

// Solves M v = rhs for square M by exact Gaussian elimination. Returns
// nullopt when M is singular.
std::optional<std::vector<Rat>> solve_square(std::vector<std::vector<Rat>> m,
                                             std::vector<Rat> rhs) {
  const int n = static_cast<int>(m.size());
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n && piv < 0; ++r) {
      if (m[r][col] != 0) piv = r;
    }
    if (piv < 0) return std::nullopt;
    std::swap(m[col], m[piv]);
    std::swap(rhs[col], rhs[piv]);
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rat f = m[r][col] / m[col][col];
      for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<Rat> v(n);
  for (int i = 0; i < n; ++i) v[i] = rhs[i] / m[i][i];
  return v;
}

// One-dimensional kernel of a (dim-1) x dim matrix of full row rank;
// nullopt when the rank is deficient.
std::optional<std::vector<Rat>> kernel_direction(std::vector<std::vector<Rat>> m, int dim) {
  const int rows = static_cast<int>(m.size());
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < dim && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows && piv < 0; ++i) {
      if (m[i][c] != 0) piv = i;
    }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c] / m[r][c];
      for (int j = 0; j < dim; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r != dim - 1) return std::nullopt;
  int free_col = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end()) ++free_col;
  std::vector<Rat> v(dim, Rat(0));
  v[free_col] = 1;
  for (int i = 0; i < r; ++i) v[pivot_col[i]] = -m[i][free_col] / m[i][pivot_col[i]];
  return v;
}

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  Rat out(0);
  for (std::size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
  return out;
}

// Scales to integer entries with content 1 (sign kept).
std::vector<Rat> primitive(const std::vector<Rat>& v) {
  mpz_class den(1);
  for (const auto& x : v) den = den * x.get_den() / gcd(den, mpz_class(x.get_den()));
  mpz_class num(0);
  std::vector<Rat> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i] * Rat(den);
    out[i].canonicalize();
    num = gcd(num, mpz_class(out[i].get_num()));
  }
  if (num == 0) return out;
  for (auto& x : out) {
    x /= Rat(num);
    x.canonicalize();
  }
  return out;
}

bool feasible(const HRep& h, const std::vector<Rat>& v) {
  return std::all_of(h.rows.begin(), h.rows.end(),
                     [&](const HRep::Ineq& row) { return dot(row.normal, v) <= row.rhs; });
}

void enumerate_subsets(int m, int k, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> idx(k);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      visit(idx);
      return;
    }
    for (int i = start; i <= m - (k - depth); ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  if (k >= 0 && k <= m) rec(0, 0);
}

}  // namespace

HRep slip_ball_hrep(const QuasiMetricSpace& space) {
  if (space.size() > 4) {
    throw std::invalid_argument("slip_ball_hrep: more than 4 points");
  }
  const auto free = space.free_indices();
  HRep h;
  h.dim = static_cast<int>(free.size());
  auto coord_of = [&](int point) {
    return static_cast<int>(std::find(free.begin(), free.end(), point) - free.begin());
  };
  const int n = space.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      HRep::Ineq row;
      row.normal.assign(h.dim, Rat(0));
      if (x != space.base) row.normal[coord_of(x)] += 1;
      if (y != space.base) row.normal[coord_of(y)] -= 1;
      row.rhs = space.dist(y, x);
      h.rows.push_back(std::move(row));
    }
  }
  return h;
}

VRep enumerate_vertices(const HRep& h) {
  if (h.dim > 3) throw std::invalid_argument("enumerate_vertices: dimension above 3");
  if (h.rows.empty()) throw std::invalid_argument("enumerate_vertices: empty inequality list");
  const int m = static_cast<int>(h.rows.size());
  VRep v;
  v.dim = h.dim;

  std::set<std::vector<Rat>> vertices;
  enumerate_subsets(m, h.dim, [&](const std::vector<int>& subset) {
    std::vector<std::vector<Rat>> mat;
    std::vector<Rat> rhs;
    for (int i : subset) {
      mat.push_back(h.rows[i].normal);
      rhs.push_back(h.rows[i].rhs);
    }
    auto point = solve_square(std::move(mat), std::move(rhs));
    if (point && feasible(h, *point)) vertices.insert(std::move(*point));
  });
  v.vertices.assign(vertices.begin(), vertices.end());

  // Extreme rays of the recession cone {r : normal . r <= 0}: directions
  // whose active normals span a hyperplane.
  std::set<std::vector<Rat>> rays;
  auto consider = [&](const std::vector<Rat>& direction) {
    if (std::all_of(direction.begin(), direction.end(), [](const Rat& x) { return x == 0; })) {
      return;
    }
    std::vector<Rat> r = primitive(direction);
    bool inside = true;
    std::vector<std::vector<Rat>> active;
    for (const auto& row : h.rows) {
      Rat p = dot(row.normal, r);
      if (p > 0) {
        inside = false;
        break;
      }
      if (p == 0) active.push_back(row.normal);
    }
    if (!inside) return;
    if (h.dim == 1) {
      rays.insert(std::move(r));
      return;
    }
    // rank of active normals must be dim - 1 for extremality
    int rank = 0;
    for (int c = 0; c < h.dim && rank < static_cast<int>(active.size()); ++c) {
      int piv = -1;
      for (int i = rank; i < static_cast<int>(active.size()) && piv < 0; ++i) {
        if (active[i][c] != 0) piv = i;
      }
      if (piv < 0) continue;
      std::swap(active[rank], active[piv]);
      for (int i = 0; i < static_cast<int>(active.size()); ++i) {
        if (i == rank || active[i][c] == 0) continue;
        Rat f = active[i][c] / active[rank][c];
        for (int j = 0; j < h.dim; ++j) active[i][j] -= f * active[rank][j];
      }
      ++rank;
    }
    if (rank == h.dim - 1) rays.insert(std::move(r));
  };

  if (h.dim == 1) {
    consider({Rat(1)});
    consider({Rat(-1)});
  } else {
    enumerate_subsets(m, h.dim - 1, [&](const std::vector<int>& subset) {
      std::vector<std::vector<Rat>> mat;
      for (int i : subset) mat.push_back(h.rows[i].normal);
      auto dir = kernel_direction(std::move(mat), h.dim);
      if (!dir) return;
      consider(*dir);
      std::vector<Rat> neg(dir->size());
      for (std::size_t i = 0; i < dir->size(); ++i) neg[i] = -(*dir)[i];
      consider(neg);
    });
  }
  v.rays.assign(rays.begin(), rays.end());
  return v;
}

HRep asymmetric_polar(const VRep& v) {
  if (v.vertices.empty()) throw std::invalid_argument("asymmetric_polar: no vertices");
  HRep h;
  h.dim = v.dim;
  for (const auto& vertex : v.vertices) h.rows.push_back({vertex, Rat(1)});
  for (const auto& ray : v.rays) h.rows.push_back({ray, Rat(0)});
  return h;
}

VRep free_ball_vrep(const QuasiMetricSpace& space) {
  VRep slip = enumerate_vertices(slip_ball_hrep(space));
  // The slip ball is bounded (every coordinate is boxed by the base-point
  // constraints), so its polar is cut by vertices only.
  return enumerate_vertices(asymmetric_polar(slip));
}

BipolarReport bipolar_check(const QuasiMetricSpace& space) {
  BipolarReport report;
  if (space.size() > 4) {
    report.detail = "more than 4 points";
    return report;
  }
  auto shared = std::make_shared<QuasiMetricSpace>(space);
  const int n = space.size();

  // Molecule set in free coordinates.
  VRep molecules;
  molecules.dim = static_cast<int>(space.free_indices().size());
  std::vector<Molecule> molecule_list;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y || space.dist(y, x) == 0) continue;
      Molecule m = elementary_molecule(shared, x, y);
      molecules.vertices.push_back(m.coordinates());
      molecule_list.push_back(std::move(m));
    }
  }
  if (molecules.vertices.empty()) {
    report.detail = "no elementary molecules";
    return report;
  }

  // First polar, taken inside the dual cone: the polar inequalities plus the
  // cone membership rows from zero-distance pairs.
  HRep first = asymmetric_polar(molecules);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y || space.dist(y, x) != 0) continue;
      HRep::Ineq row;
      row.normal.assign(first.dim, Rat(0));
      const auto free = space.free_indices();
      auto coord_of = [&](int point) {
        return static_cast<int>(std::find(free.begin(), free.end(), point) - free.begin());
      };
      if (x != space.base) row.normal[coord_of(x)] += 1;
      if (y != space.base) row.normal[coord_of(y)] -= 1;
      row.rhs = 0;
      first.rows.push_back(std::move(row));
    }
  }
  VRep first_vertices = enumerate_vertices(first);

  // The first polar must be the semi-Lipschitz unit ball: every vertex has
  // slip norm exactly 1 (0 only for the zero vertex, which cannot appear in
  // a full-dimensional ball boundary enumeration unless degenerate).
  for (const auto& vertex : first_vertices.vertices) {
    std::vector<Rat> values(n, Rat(0));
    const auto free = space.free_indices();
    for (std::size_t k = 0; k < free.size(); ++k) values[free[k]] = vertex[k];
    NormValue s = slip_norm(PointFunction::full(shared, values));
    bool zero = std::all_of(vertex.begin(), vertex.end(), [](const Rat& x) { return x == 0; });
    if (zero) continue;
    if (s.is_infinite() || s.value() != 1) {
      report.detail = "first polar vertex with slip norm " + s.str();
      return report;
    }
  }
  if (!first_vertices.rays.empty()) {
    report.detail = "semi-Lipschitz ball reported unbounded";
    return report;
  }

  // Second polar = candidate free ball; verify against dual_norm both ways.
  VRep bipolar = enumerate_vertices(asymmetric_polar(first_vertices));
  for (const auto& vertex : bipolar.vertices) {
    Molecule q = Molecule::from_coordinates(shared, vertex);
    NormValue norm = dual_norm(q);
    bool zero = q.is_zero();
    if (!zero && norm.value() > 1) {
      report.detail = "bipolar vertex outside the free ball";
      return report;
    }
  }
  for (const auto& ray : bipolar.rays) {
    Molecule q = Molecule::from_coordinates(shared, ray);
    if (dual_norm(q).value() != 0) {
      report.detail = "bipolar ray with nonzero forward norm";
      return report;
    }
  }
  // Membership the other way: the generating molecules lie in the bipolar
  // and on the free-ball boundary.
  for (const auto& m : molecule_list) {
    NormValue norm = dual_norm(m);
    if (norm.value() != 1) {
      report.detail = "elementary molecule with dual norm " + norm.str();
      return report;
    }
    auto coords = m.coordinates();
    for (const auto& vertex : first_vertices.vertices) {
      if (dot(vertex, coords) > 1) {
        report.detail = "elementary molecule escapes the bipolar";
        return report;
      }
    }
  }
  report.ok = true;
  report.detail = "bipolar equals the free ball (" +
                  std::to_string(bipolar.vertices.size()) + " vertices, " +
                  std::to_string(bipolar.rays.size()) + " rays)";
  return report;
}

NormValue reversal_constant(const QuasiMetricSpace& space) {
  if (space.size() > 4) {
    throw std::invalid_argument("reversal_constant: more than 4 points");
  }
  if (space.size() == 1) return NormValue::of(Rat(1));
  auto shared = std::make_shared<QuasiMetricSpace>(space);
  VRep ball = free_ball_vrep(space);
  if (!ball.rays.empty()) return NormValue::infinite();
  Rat best(0);
  for (const auto& vertex : ball.vertices) {
    Molecule q = Molecule::from_coordinates(shared, vertex);
    if (q.is_zero()) continue;
    NormValue reversed = dual_norm(-q);
    if (reversed.value() > best) best = reversed.value();
  }
  if (best == 0) best = 1;  // one-point space: vacuous bound
  return NormValue::of(best);
}

NormValue operator_norm(const PointMap& f) {
  if (f.domain->size() > 4) {
    throw std::invalid_argument("operator_norm: domain has more than 4 points");
  }
  NormValue constant = slip_constant(f);
  if (constant.is_infinite()) return NormValue::infinite();
  if (f.domain->size() == 1) return NormValue::of(Rat(0));
  VRep ball = free_ball_vrep(*f.domain);
  Rat best(0);
  for (const auto& vertex : ball.vertices) {
    Molecule q = Molecule::from_coordinates(f.domain, vertex);
    NormValue pushed = dual_norm(pushforward(f, q));
    if (pushed.value() > best) best = pushed.value();
  }
  for (const auto& ray : ball.rays) {
    Molecule q = Molecule::from_coordinates(f.domain, ray);
    if (dual_norm(pushforward(f, q)).value() != 0) {
      // A recession direction with positive pushed norm would make the
      // operator unbounded; slip_constant being finite rules it out.
      throw std::logic_error("operator_norm: ray with positive pushed norm");
    }
  }
  return NormValue::of(best);
}

namespace {

// Exact decimal scaling for SVG coordinates: round(v * scale) as integer.
long svg_coord(const Rat& v, long scale) {
  Rat scaled = v * scale;
  mpz_class num = scaled.get_num();
  mpz_class den = scaled.get_den();
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r * 2 >= den) q += 1;
  return q.get_si();
}

}  // namespace

std::string render_ball_svg(const VRep& ball, const std::string& title) {
  if (ball.dim != 2) throw std::invalid_argument("render_ball_svg: dimension must be 2");

  // Fixed viewport: [-3, 3]^2 mapped to 600x600, y up.
  const long scale = 100;
  auto px = [&](const Rat& x) { return 300 + svg_coord(x, scale); };
  auto py = [&](const Rat& y) { return 300 - svg_coord(y, scale); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
         "viewBox=\"0 0 600 600\">\n";
  svg << "  <title>" << title << "</title>\n";
  svg << "  <rect x=\"0\" y=\"0\" width=\"600\" height=\"600\" fill=\"white\"/>\n";
  svg << "  <line x1=\"0\" y1=\"300\" x2=\"600\" y2=\"300\" stroke=\"#999\"/>\n";
  svg << "  <line x1=\"300\" y1=\"0\" x2=\"300\" y2=\"600\" stroke=\"#999\"/>\n";

  // Vertices in polygon order: sort by angle around the centroid using exact
  // comparisons (quadrant, then cross product).
  std::vector<std::vector<Rat>> pts = ball.vertices;
  if (!pts.empty()) {
    Rat cx(0), cy(0);
    for (const auto& p : pts) {
      cx += p[0];
      cy += p[1];
    }
    cx /= static_cast<int>(pts.size());
    cy /= static_cast<int>(pts.size());
    auto quadrant = [&](const std::vector<Rat>& p) {
      Rat dx = p[0] - cx, dy = p[1] - cy;
      if (dx >= 0 && dy >= 0) return 0;
      if (dx < 0 && dy >= 0) return 1;
      if (dx < 0) return 2;
      return 3;
    };
    std::sort(pts.begin(), pts.end(), [&](const auto& a, const auto& b) {
      int qa = quadrant(a), qb = quadrant(b);
      if (qa != qb) return qa < qb;
      Rat cross = (a[0] - cx) * (b[1] - cy) - (a[1] - cy) * (b[0] - cx);
      if (cross != 0) return cross > 0;
      return a < b;
    });
    svg << "  <polygon points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) svg << " ";
      svg << px(pts[i][0]) << "," << py(pts[i][1]);
    }
    svg << "\" fill=\"#c8d8f0\" stroke=\"#2040a0\" stroke-width=\"2\"/>\n";
  }
  for (const auto& ray : ball.rays) {
    svg << "  <line x1=\"" << px(Rat(0)) << "\" y1=\"" << py(Rat(0)) << "\" x2=\""
        << px(ray[0] * 3) << "\" y2=\"" << py(ray[1] * 3)
        << "\" stroke=\"#a02020\" stroke-dasharray=\"6,4\" stroke-width=\"2\"/>\n";
  }
  // Labels follow the canonical lexicographic vertex order.
  for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
    const auto& p = ball.vertices[i];
    svg << "  <circle cx=\"" << px(p[0]) << "\" cy=\"" << py(p[1])
        << "\" r=\"4\" fill=\"#2040a0\"/>\n";
    svg << "  <text x=\"" << px(p[0]) + 8 << "\" y=\"" << py(p[1]) - 8
        << "\" font-size=\"14\" font-family=\"monospace\">(" << rat_to_string(p[0]) << ","
        << rat_to_string(p[1]) << ")</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace qmf

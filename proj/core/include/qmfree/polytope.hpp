#pragma once

#include <string>
#include <vector>

#include "qmfree/rational.hpp"
#include "qmfree/space.hpp"

namespace qmf {

// H-representation: conjunction of normal . v <= rhs.
struct HRep {
  struct Ineq {
    std::vector<Rat> normal;
    Rat rhs;
  };
  int dim = 0;
  std::vector<Ineq> rows;
};

// Exact V-representation: vertices plus recession-cone rays (empty for
// bounded bodies). Vertices are deduplicated and sorted lexicographically;
// rays are scaled to primitive integer vectors.
struct VRep {
  int dim = 0;
  std::vector<std::vector<Rat>> vertices;
  std::vector<std::vector<Rat>> rays;

  bool bounded() const { return rays.empty(); }
};

// Unit ball of the semi-Lipschitz cone norm in the coordinates f(x), x != x0:
// one inequality f(x) - f(y) <= d(y,x) per ordered pair. Requires |X| <= 4.
HRep slip_ball_hrep(const QuasiMetricSpace& space);

// Exact enumeration by subset intersection and feasibility filtering;
// dim <= 3. Reports extreme recession rays for unbounded bodies.
VRep enumerate_vertices(const HRep& h);

// Asymmetric polar (no absolute values): <vertex, .> <= 1 per vertex and
// <ray, .> <= 0 per ray.
HRep asymmetric_polar(const VRep& v);

// Unit ball of the free norm: polar of the slip ball, enumerated. |X| <= 4.
VRep free_ball_vrep(const QuasiMetricSpace& space);

struct BipolarReport {
  bool ok = false;
  std::string detail;
};

// Builds the elementary-molecule set, takes the asymmetric polar twice and
// verifies the result equals the free-norm unit ball by exact two-way
// membership (rays checked in the hemi case). |X| <= 4.
BipolarReport bipolar_check(const QuasiMetricSpace& space);

// Smallest M with dual_norm(-q) <= M dual_norm(q) for all molecules;
// infinite when the free ball is unbounded. |X| <= 4.
NormValue reversal_constant(const QuasiMetricSpace& space);

// Self-contained SVG picture of a 2-dimensional ball (|X| = 3): polygon,
// axes, labeled vertices. Byte-stable for identical input.
std::string render_ball_svg(const VRep& ball, const std::string& title);

}  // namespace qmf

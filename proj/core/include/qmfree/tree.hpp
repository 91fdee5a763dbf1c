#pragma once

#include <string>
#include <vector>

#include "qmfree/freespace.hpp"
#include "qmfree/rational.hpp"
#include "qmfree/space.hpp"

namespace qmf {

// Finite rooted tree with positive edge lengths and a marked subset of nodes
// designated as the space (root always marked, root = base point).
struct WeightedRootedTree {
  std::vector<std::string> nodes;  // root first
  std::vector<int> parent;         // parent[0] = -1
  std::vector<Rat> length;         // length[i] = edge to parent, length[0] unused
  std::vector<bool> marked;

  int size() const { return static_cast<int>(nodes.size()); }
  int node_index(const std::string& name) const;
  std::vector<int> marked_nodes() const;

  // Checks the shape: parent map acyclic and spanning, lengths positive,
  // root marked. Throws std::invalid_argument.
  static WeightedRootedTree make(std::vector<std::string> nodes, std::vector<int> parent,
                                 std::vector<Rat> length, std::vector<bool> marked);
};

// Path distance between two nodes (through their meet).
Rat tree_distance(const WeightedRootedTree& tree, int a, int b);

// Nearest common ancestor.
int tree_meet(const WeightedRootedTree& tree, int a, int b);

// Metric space on the marked nodes under the path metric; base = root.
QuasiMetricSpace path_metric(const WeightedRootedTree& tree);

// Edge flows of a molecule on the marked space: flow through an edge is the
// sum of coefficients over marked nodes at or below its child end.
struct EdgeFlow {
  std::vector<Rat> flow;  // per node, flow[0] unused
};

EdgeFlow godard_embed(const WeightedRootedTree& tree, const Molecule& q);

// Sum over edges of length * positive part of the flow.
Rat tree_asym_norm(const WeightedRootedTree& tree, const Molecule& q);

// Sum over edges of length * |flow|; the Lipschitz-free norm of q on the
// path metric.
Rat tree_sym_norm(const WeightedRootedTree& tree, const Molecule& q);

// Nearest strict marked ancestor and the path distance to it, for each
// marked node except the root. Drives the tree-monotone cone.
struct AtomInfo {
  int node;
  int pred;
  Rat weight;
};

std::vector<AtomInfo> atom_weights(const WeightedRootedTree& tree);

// Same tree with every node marked.
WeightedRootedTree fully_marked(const WeightedRootedTree& tree);

}  // namespace qmf

#include "qmfree/tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmf {

int WeightedRootedTree::node_index(const std::string& name) const {
  for (int i = 0; i < size(); ++i) {
    if (nodes[i] == name) return i;
  }
  return -1;
}

std::vector<int> WeightedRootedTree::marked_nodes() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (marked[i]) out.push_back(i);
  }
  return out;
}

WeightedRootedTree WeightedRootedTree::make(std::vector<std::string> nodes,
                                            std::vector<int> parent, std::vector<Rat> length,
                                            std::vector<bool> marked) {
  const int n = static_cast<int>(nodes.size());
  if (n == 0) throw std::invalid_argument("tree: no nodes");
  if (static_cast<int>(parent.size()) != n || static_cast<int>(length.size()) != n ||
      static_cast<int>(marked.size()) != n) {
    throw std::invalid_argument("tree: field sizes disagree");
  }
  if (parent[0] != -1) throw std::invalid_argument("tree: first node must be the root");
  for (int i = 1; i < n; ++i) {
    if (parent[i] < 0 || parent[i] >= n || parent[i] == i) {
      throw std::invalid_argument("tree: bad parent of node " + nodes[i]);
    }
    if (length[i] <= 0) {
      throw std::invalid_argument("tree: non-positive edge length at node " + nodes[i]);
    }
  }
  for (int i = 1; i < n; ++i) {
    int steps = 0;
    for (int v = i; v != 0; v = parent[v]) {
      if (++steps > n) throw std::invalid_argument("tree: parent map has a cycle");
    }
  }
  {
    std::vector<std::string> sorted = nodes;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("tree: duplicate node names");
    }
  }
  if (!marked[0]) throw std::invalid_argument("tree: root must be marked");
  WeightedRootedTree t;
  t.nodes = std::move(nodes);
  t.parent = std::move(parent);
  t.length = std::move(length);
  t.marked = std::move(marked);
  return t;
}

namespace {

int depth_steps(const WeightedRootedTree& tree, int v) {
  int d = 0;
  while (v != 0) {
    v = tree.parent[v];
    ++d;
  }
  return d;
}

}  // namespace

int tree_meet(const WeightedRootedTree& tree, int a, int b) {
  int da = depth_steps(tree, a);
  int db = depth_steps(tree, b);
  while (da > db) {
    a = tree.parent[a];
    --da;
  }
  while (db > da) {
    b = tree.parent[b];
    --db;
  }
  while (a != b) {
    a = tree.parent[a];
    b = tree.parent[b];
  }
  return a;
}

Rat tree_distance(const WeightedRootedTree& tree, int a, int b) {
  int meet = tree_meet(tree, a, b);
  Rat out(0);
  for (int v = a; v != meet; v = tree.parent[v]) out += tree.length[v];
  for (int v = b; v != meet; v = tree.parent[v]) out += tree.length[v];
  return out;
}

QuasiMetricSpace path_metric(const WeightedRootedTree& tree) {
  const std::vector<int> pts = tree.marked_nodes();
  const int m = static_cast<int>(pts.size());
  std::vector<std::vector<Rat>> d(m, std::vector<Rat>(m, Rat(0)));
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = tree.nodes[pts[i]];
    for (int j = 0; j < m; ++j) {
      if (i != j) d[i][j] = tree_distance(tree, pts[i], pts[j]);
    }
  }
  return validate(std::move(d), 0, std::move(labels));  // root is marked first
}

EdgeFlow godard_embed(const WeightedRootedTree& tree, const Molecule& q) {
  QuasiMetricSpace marked_space = path_metric(tree);
  if (!(*q.space == marked_space)) {
    throw std::invalid_argument("godard_embed: molecule does not live on the tree's marked space");
  }
  const std::vector<int> pts = tree.marked_nodes();
  EdgeFlow flows;
  flows.flow.assign(tree.size(), Rat(0));
  for (const auto& [point, coeff] : q.coeffs) {
    for (int v = pts[point]; v != 0; v = tree.parent[v]) flows.flow[v] += coeff;
  }
  return flows;
}

Rat tree_asym_norm(const WeightedRootedTree& tree, const Molecule& q) {
  EdgeFlow flows = godard_embed(tree, q);
  Rat out(0);
  for (int v = 1; v < tree.size(); ++v) {
    if (flows.flow[v] > 0) out += tree.length[v] * flows.flow[v];
  }
  return out;
}

Rat tree_sym_norm(const WeightedRootedTree& tree, const Molecule& q) {
  EdgeFlow flows = godard_embed(tree, q);
  Rat out(0);
  for (int v = 1; v < tree.size(); ++v) out += tree.length[v] * rat_abs(flows.flow[v]);
  return out;
}

std::vector<AtomInfo> atom_weights(const WeightedRootedTree& tree) {
  std::vector<AtomInfo> out;
  for (int a : tree.marked_nodes()) {
    if (a == 0) continue;
    Rat weight(0);
    int v = a;
    do {
      weight += tree.length[v];
      v = tree.parent[v];
    } while (v != 0 && !tree.marked[v]);
    out.push_back(AtomInfo{a, v, std::move(weight)});
  }
  return out;
}

WeightedRootedTree fully_marked(const WeightedRootedTree& tree) {
  WeightedRootedTree t = tree;
  std::fill(t.marked.begin(), t.marked.end(), true);
  return t;
}

}  // namespace qmf

#include "qmfree/json_io.hpp"

#include <filesystem>
#include <fstream>

namespace qmf {

namespace {

std::string sibling_path(const std::string& context_path, const std::string& relative) {
  std::filesystem::path p(relative);
  if (p.is_absolute() || context_path.empty()) return relative;
  return (std::filesystem::path(context_path).parent_path() / p).string();
}

}  // namespace

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw FileError("cannot parse '" + path + "': " + e.what());
  }
  return j;
}

void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw FileError("cannot write '" + path + "'");
  out << text;
}

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  throw FileError("expected a rational as \"p/q\" string or integer, got " + j.dump());
}

QuasiMetricSpace space_from_json(const Json& j) {
  if (!j.contains("points") || !j.contains("d")) {
    throw FileError("space file needs \"points\" and \"d\"");
  }
  std::vector<std::string> labels = j.at("points").get<std::vector<std::string>>();
  std::vector<std::vector<Rat>> d;
  for (const auto& row : j.at("d")) {
    std::vector<Rat> out;
    for (const auto& cell : row) out.push_back(rat_from_json(cell));
    d.push_back(std::move(out));
  }
  int base = 0;
  if (j.contains("base")) {
    const std::string name = j.at("base").get<std::string>();
    base = -1;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == name) base = static_cast<int>(i);
    }
    if (base < 0) throw FileError("base point '" + name + "' is not listed in \"points\"");
  }
  return validate(std::move(d), base, std::move(labels));
}

Json space_to_json(const QuasiMetricSpace& space) {
  Json j;
  j["points"] = space.labels;
  j["base"] = space.labels[space.base];
  Json rows = Json::array();
  for (const auto& row : space.d) {
    Json out = Json::array();
    for (const auto& cell : row) out.push_back(rat_to_string(cell));
    rows.push_back(std::move(out));
  }
  j["d"] = std::move(rows);
  j["kind"] = kind_name(space.kind);
  return j;
}

std::shared_ptr<const QuasiMetricSpace> load_space(const std::string& path) {
  return std::make_shared<QuasiMetricSpace>(space_from_json(load_json(path)));
}

std::shared_ptr<const QuasiMetricSpace> resolve_space(const Json& j,
                                                      const std::string& context_path) {
  if (j.is_string()) return load_space(sibling_path(context_path, j.get<std::string>()));
  return std::make_shared<QuasiMetricSpace>(space_from_json(j));
}

PointFunction function_from_json(const Json& j, const std::string& context_path) {
  if (!j.contains("space") || !j.contains("values")) {
    throw FileError("function file needs \"space\" and \"values\"");
  }
  auto space = resolve_space(j.at("space"), context_path);
  std::vector<std::pair<int, Rat>> values;
  for (const auto& [name, cell] : j.at("values").items()) {
    int idx = space->index_of(name);
    if (idx < 0) throw FileError("function value on unknown point '" + name + "'");
    values.emplace_back(idx, rat_from_json(cell));
  }
  return PointFunction::on_subset(std::move(space), values);
}

Json function_to_json(const PointFunction& f) {
  Json values = Json::object();
  for (int i : f.domain()) values[f.space->labels[i]] = rat_to_string(f.at(i));
  Json j;
  j["space"] = space_to_json(*f.space);
  j["values"] = std::move(values);
  return j;
}

PointFunction load_function(const std::string& path) {
  return function_from_json(load_json(path), path);
}

Molecule molecule_from_json(const Json& j, const std::string& context_path) {
  if (!j.contains("space") || !j.contains("coefficients")) {
    throw FileError("molecule file needs \"space\" and \"coefficients\"");
  }
  auto space = resolve_space(j.at("space"), context_path);
  std::vector<std::pair<int, Rat>> terms;
  for (const auto& [name, cell] : j.at("coefficients").items()) {
    int idx = space->index_of(name);
    if (idx < 0) throw FileError("molecule coefficient on unknown point '" + name + "'");
    terms.emplace_back(idx, rat_from_json(cell));
  }
  return Molecule::from_terms(std::move(space), terms);
}

Json molecule_to_json(const Molecule& q) {
  Json coeffs = Json::object();
  for (const auto& [point, coeff] : q.coeffs) {
    coeffs[q.space->labels[point]] = rat_to_string(coeff);
  }
  Json j;
  j["space"] = space_to_json(*q.space);
  j["coefficients"] = std::move(coeffs);
  return j;
}

Molecule load_molecule(const std::string& path) {
  return molecule_from_json(load_json(path), path);
}

WeightedRootedTree tree_from_json(const Json& j) {
  for (const char* key : {"nodes", "root", "edges", "marked"}) {
    if (!j.contains(key)) throw FileError(std::string("tree file needs \"") + key + "\"");
  }
  std::vector<std::string> given = j.at("nodes").get<std::vector<std::string>>();
  const std::string root = j.at("root").get<std::string>();
  // Root first, remaining nodes in listed order.
  std::vector<std::string> nodes;
  nodes.push_back(root);
  for (const auto& name : given) {
    if (name != root) nodes.push_back(name);
  }
  auto index_of = [&](const std::string& name) {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i] == name) return static_cast<int>(i);
    }
    throw FileError("tree references unknown node '" + name + "'");
  };
  std::vector<int> parent(nodes.size(), -1);
  std::vector<Rat> length(nodes.size(), Rat(0));
  for (const auto& edge : j.at("edges")) {
    int child = index_of(edge.at("child").get<std::string>());
    int par = index_of(edge.at("parent").get<std::string>());
    if (child == 0) throw FileError("tree root cannot have a parent");
    parent[child] = par;
    length[child] = rat_from_json(edge.at("length"));
  }
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    if (parent[i] < 0) throw FileError("tree node '" + nodes[i] + "' has no edge to a parent");
  }
  std::vector<bool> marked(nodes.size(), false);
  for (const auto& name : j.at("marked")) marked[index_of(name.get<std::string>())] = true;
  marked[0] = true;
  return WeightedRootedTree::make(std::move(nodes), std::move(parent), std::move(length),
                                  std::move(marked));
}

Json tree_to_json(const WeightedRootedTree& tree) {
  Json j;
  j["nodes"] = tree.nodes;
  j["root"] = tree.nodes[0];
  Json edges = Json::array();
  for (int i = 1; i < tree.size(); ++i) {
    Json e;
    e["child"] = tree.nodes[i];
    e["parent"] = tree.nodes[tree.parent[i]];
    e["length"] = rat_to_string(tree.length[i]);
    edges.push_back(std::move(e));
  }
  j["edges"] = std::move(edges);
  Json marked = Json::array();
  for (int i : tree.marked_nodes()) marked.push_back(tree.nodes[i]);
  j["marked"] = std::move(marked);
  return j;
}

WeightedRootedTree load_tree(const std::string& path) { return tree_from_json(load_json(path)); }

PointMap map_from_json(const Json& j, const std::string& context_path) {
  for (const char* key : {"domain", "codomain", "map"}) {
    if (!j.contains(key)) throw FileError(std::string("map file needs \"") + key + "\"");
  }
  auto domain = resolve_space(j.at("domain"), context_path);
  auto codomain = resolve_space(j.at("codomain"), context_path);
  std::vector<int> image(domain->size(), -1);
  for (const auto& [from, to] : j.at("map").items()) {
    int src = domain->index_of(from);
    if (src < 0) throw FileError("map from unknown point '" + from + "'");
    int dst = codomain->index_of(to.get<std::string>());
    if (dst < 0) throw FileError("map to unknown point '" + to.get<std::string>() + "'");
    image[src] = dst;
  }
  for (int i = 0; i < domain->size(); ++i) {
    if (image[i] < 0) {
      throw FileError("map does not cover point '" + domain->labels[i] + "'");
    }
  }
  return PointMap::of(std::move(domain), std::move(codomain), std::move(image));
}

PointMap load_map(const std::string& path) { return map_from_json(load_json(path), path); }

Json report_to_json(const PropertyReport& report) {
  Json j;
  j["property"] = property_name(report.property);
  j["verdict"] = verdict_name(report.verdict);
  j["sample"] = report.sample_desc;
  if (report.witness_function) j["witness_function"] = *report.witness_function;
  if (report.witness_molecule) j["witness_molecule"] = *report.witness_molecule;
  if (!report.values.empty()) j["values"] = report.values;
  return j;
}

Json vrep_to_json(const VRep& v) {
  Json j;
  j["dimension"] = v.dim;
  Json vertices = Json::array();
  for (const auto& vertex : v.vertices) {
    Json row = Json::array();
    for (const auto& x : vertex) row.push_back(rat_to_string(x));
    vertices.push_back(std::move(row));
  }
  j["vertices"] = std::move(vertices);
  Json rays = Json::array();
  for (const auto& ray : v.rays) {
    Json row = Json::array();
    for (const auto& x : ray) row.push_back(rat_to_string(x));
    rays.push_back(std::move(row));
  }
  j["rays"] = std::move(rays);
  j["bounded"] = v.bounded();
  return j;
}

Json kr_to_json(const KRDecomposition& d, const QuasiMetricSpace& space) {
  Json terms = Json::array();
  for (const auto& term : d.terms) {
    Json t;
    t["weight"] = rat_to_string(term.weight);
    t["to"] = space.labels[term.to];
    t["from"] = space.labels[term.from];
    terms.push_back(std::move(t));
  }
  Json j;
  j["terms"] = std::move(terms);
  j["cost"] = rat_to_string(d.cost);
  return j;
}

}  // namespace qmf

#pragma once

#include <json.hpp>

#include <memory>
#include <string>

#include "qmfree/asymmetrize.hpp"
#include "qmfree/freespace.hpp"
#include "qmfree/functions.hpp"
#include "qmfree/polytope.hpp"
#include "qmfree/space.hpp"
#include "qmfree/tree.hpp"

namespace qmf {

using Json = nlohmann::json;

// File-format errors (bad paths, malformed documents) carry the offending
// path in the message.
class FileError : public std::runtime_error {
 public:
  explicit FileError(const std::string& message) : std::runtime_error(message) {}
};

Json load_json(const std::string& path);
void save_text(const std::string& path, const std::string& text);

// {"points": [...], "base": name, "d": [["p/q" | int, ...], ...]}
QuasiMetricSpace space_from_json(const Json& j);
Json space_to_json(const QuasiMetricSpace& space);
std::shared_ptr<const QuasiMetricSpace> load_space(const std::string& path);

// "space" is a path (resolved relative to the containing file) or an inline
// space object.
std::shared_ptr<const QuasiMetricSpace> resolve_space(const Json& j,
                                                      const std::string& context_path);

// {"space": ..., "values": {point: "p/q"}}; missing points mark a subset
// domain.
PointFunction function_from_json(const Json& j, const std::string& context_path);
Json function_to_json(const PointFunction& f);
PointFunction load_function(const std::string& path);

// {"space": ..., "coefficients": {point: "p/q"}}
Molecule molecule_from_json(const Json& j, const std::string& context_path);
Json molecule_to_json(const Molecule& q);
Molecule load_molecule(const std::string& path);

// {"nodes": [...], "root": name,
//  "edges": [{"child": c, "parent": p, "length": "p/q"}], "marked": [...]}
WeightedRootedTree tree_from_json(const Json& j);
Json tree_to_json(const WeightedRootedTree& tree);
WeightedRootedTree load_tree(const std::string& path);

// {"domain": ..., "codomain": ..., "map": {point: point}}
PointMap map_from_json(const Json& j, const std::string& context_path);
PointMap load_map(const std::string& path);

Json report_to_json(const PropertyReport& report);
Json vrep_to_json(const VRep& v);
Json kr_to_json(const KRDecomposition& d, const QuasiMetricSpace& space);

Rat rat_from_json(const Json& j);

}  // namespace qmf

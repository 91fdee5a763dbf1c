#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "qmfree/asymmetrize.hpp"
#include "qmfree/freespace.hpp"
#include "qmfree/functions.hpp"
#include "qmfree/json_io.hpp"
#include "qmfree/polytope.hpp"
#include "qmfree/sampling.hpp"
#include "qmfree/space.hpp"
#include "qmfree/tree.hpp"

namespace {

using namespace qmf;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitCounterexample = 2;

void emit(const Json& payload, const std::string& out_path) {
  std::string text = payload.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    save_text(out_path, text);
  }
}

void emit_raw(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    save_text(out_path, text);
  }
}

SymMode parse_mode(const std::string& mode) {
  if (mode == "max") return SymMode::Max;
  if (mode == "sum") return SymMode::Sum;
  throw std::invalid_argument("unknown symmetrization mode '" + mode + "'");
}

ConeSpec parse_cone(const std::string& cone, const std::string& tree_path) {
  if (cone == "lplus") return ConeSpec::nonneg();
  if (cone == "monotone") {
    if (tree_path.empty()) {
      throw std::invalid_argument("--cone monotone needs --tree <path>");
    }
    return ConeSpec::tree_monotone(load_tree(tree_path));
  }
  throw std::invalid_argument("unknown cone '" + cone + "' (use lplus or monotone)");
}

struct Options {
  std::string input;
  std::string out;
  std::string emit_format = "json";
  std::string mode = "sum";
  std::string method = "all";
  std::string cone = "lplus";
  std::string tree_path;
  std::string molecule_path;
  std::string map_path;
  std::string property;
  bool polar = false;
  bool dump_lp = false;
  std::uint64_t seed = kDefaultSeed;
  int samples = 50;
};

int run_validate(const Options& opt) {
  auto space = load_space(opt.input);
  Json j;
  j["kind"] = kind_name(space->kind);
  j["points"] = space->size();
  emit(j, opt.out);
  return kExitOk;
}

int run_space_transform(const Options& opt, const std::string& which) {
  auto space = load_space(opt.input);
  QuasiMetricSpace result = [&] {
    if (which == "reverse") return reverse(*space);
    if (which == "adjoin") return adjoin_basepoint(*space);
    return symmetrize(*space, parse_mode(opt.mode));
  }();
  emit(space_to_json(result), opt.out);
  return kExitOk;
}

int run_slipnorm(const Options& opt) {
  PointFunction f = load_function(opt.input);
  if (!f.full_domain()) {
    throw std::invalid_argument("slipnorm needs values on every point (use extend for subsets)");
  }
  Json j;
  j["slip_norm"] = slip_norm(f).str();
  MonotoneReport monotone = is_d_monotone(f);
  j["d_monotone"] = monotone.monotone;
  if (monotone.witness) {
    j["witness"] = {f.space->labels[monotone.witness->first],
                    f.space->labels[monotone.witness->second]};
  }
  if (f.space->kind == Kind::Metric) j["lip_norm"] = lip_norm(f, *f.space).str();
  emit(j, opt.out);
  return kExitOk;
}

int run_extend(const Options& opt) {
  PointFunction partial = load_function(opt.input);
  PointFunction extended = mcshane_extend(partial);
  Json j = function_to_json(extended);
  j["slip_norm"] = slip_norm(extended).str();
  emit(j, opt.out);
  return kExitOk;
}

int run_freenorm(const Options& opt) {
  Molecule q = load_molecule(opt.input);
  if (opt.dump_lp) std::cerr << dual_norm_program(q).listing();
  Json j;
  const bool all = opt.method == "all";
  if (all || opt.method == "dual") {
    j["dual"] = dual_norm(q).str();
    j["dual_reversed"] = dual_norm(-q).str();
  }
  if (all || opt.method == "kr") {
    auto [value, decomposition] = kr_norm(q);
    j["kr"] = value.str();
    j["kr_decomposition"] = kr_to_json(decomposition, *q.space);
  }
  if (all || opt.method == "sym") {
    j["sym"] = sym_free_norm(q, parse_mode(opt.mode)).str();
    j["sym_mode"] = opt.mode;
  }
  if (j.empty()) throw std::invalid_argument("unknown method '" + opt.method + "'");
  emit(j, opt.out);
  return kExitOk;
}

int run_asymmetrize(const Options& opt) {
  auto space = load_space(opt.input);
  ConeSpec cone = parse_cone(opt.cone, opt.tree_path);
  QuasiMetricSpace dp = canonical_asym(*space, cone);
  emit(space_to_json(dp), opt.out);
  return kExitOk;
}

int run_check(const Options& opt) {
  auto space = load_space(opt.input);
  SampleConfig config{opt.seed, opt.samples};
  PropertyReport report;
  Json j;
  if (opt.property == "H") {
    HReport h = check_H(*space, parse_mode(opt.mode), config);
    report = h.report;
    j = report_to_json(report);
    j["alpha"] = rat_to_string(h.alpha);
  } else {
    Property property;
    if (opt.property == "S") {
      property = Property::S;
    } else if (opt.property == "Sstar") {
      property = Property::Sstar;
    } else if (opt.property == "S0star") {
      property = Property::S0star;
    } else {
      throw std::invalid_argument("unknown property '" + opt.property +
                                  "' (use S, Sstar, S0star, H)");
    }
    report = check_property(*space, parse_cone(opt.cone, opt.tree_path), property, config);
    j = report_to_json(report);
  }
  j["seed"] = opt.seed;
  j["samples"] = opt.samples;
  emit(j, opt.out);
  return report.verdict == PropertyReport::Verdict::Counterexample ? kExitCounterexample
                                                                   : kExitOk;
}

int run_ball(const Options& opt) {
  auto space = load_space(opt.input);
  VRep ball = opt.polar ? free_ball_vrep(*space)
                        : enumerate_vertices(slip_ball_hrep(*space));
  if (opt.emit_format == "svg") {
    const std::string title = opt.polar ? "free-norm unit ball" : "semi-Lipschitz unit ball";
    emit_raw(render_ball_svg(ball, title), opt.out);
    return kExitOk;
  }
  if (opt.emit_format != "json") {
    throw std::invalid_argument("unknown --emit format '" + opt.emit_format + "'");
  }
  Json j = vrep_to_json(ball);
  j["ball"] = opt.polar ? "free" : "slip";
  emit(j, opt.out);
  return kExitOk;
}

int run_tree_norm(const Options& opt) {
  WeightedRootedTree tree = load_tree(opt.input);
  Molecule q = load_molecule(opt.molecule_path);
  QuasiMetricSpace marked = path_metric(tree);
  if (!(*q.space == marked)) {
    // accept molecules declared over the same point names
    Molecule moved;
    moved.space = std::make_shared<const QuasiMetricSpace>(marked);
    for (const auto& [point, coeff] : q.coeffs) {
      int idx = marked.index_of(q.space->labels[point]);
      if (idx < 0) {
        throw std::invalid_argument("molecule point '" + q.space->labels[point] +
                                    "' is not a marked tree node");
      }
      moved.coeffs.emplace(idx, coeff);
    }
    q = std::move(moved);
  }
  EdgeFlow flow = godard_embed(tree, q);
  Json flows = Json::object();
  for (int v = 1; v < tree.size(); ++v) flows[tree.nodes[v]] = rat_to_string(flow.flow[v]);
  Json j;
  j["flows"] = std::move(flows);
  j["asym"] = rat_to_string(tree_asym_norm(tree, q));
  j["asym_reversed"] = rat_to_string(tree_asym_norm(tree, -q));
  j["sym"] = rat_to_string(tree_sym_norm(tree, q));
  emit(j, opt.out);
  return kExitOk;
}

int run_pushforward(const Options& opt) {
  PointMap f = load_map(opt.map_path);
  Molecule q = load_molecule(opt.molecule_path);
  if (!(*q.space == *f.domain)) {
    throw std::invalid_argument("molecule does not live on the map's domain");
  }
  Molecule pushed = pushforward(f, q);
  Json j = molecule_to_json(pushed);
  j["slip_constant"] = slip_constant(f).str();
  j["norm_before"] = dual_norm(q).str();
  j["norm_after"] = dual_norm(pushed).str();
  emit(j, opt.out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact semi-Lipschitz free-space calculator over finite quasi-metric spaces"};
  app.require_subcommand(1);

  Options opt;

  auto add_common = [&](CLI::App* sub, bool with_input = true) {
    if (with_input) sub->add_option("input", opt.input, "input file")->required();
    sub->add_option("--out", opt.out, "write the result to a file instead of stdout");
    return sub;
  };

  auto* validate_cmd = add_common(app.add_subcommand("validate", "classify a space file"));
  auto* reverse_cmd = add_common(app.add_subcommand("reverse", "transpose the quasi-distance"));
  auto* sym_cmd = add_common(app.add_subcommand("symmetrize", "symmetrized metric space"));
  sym_cmd->add_option("--mode", opt.mode, "max | sum");
  auto* adjoin_cmd =
      add_common(app.add_subcommand("adjoin", "adjoin a new base point at distance 1"));
  auto* slip_cmd = add_common(app.add_subcommand("slipnorm", "semi-Lipschitz norm of a function"));
  auto* extend_cmd =
      add_common(app.add_subcommand("extend", "norm-preserving extension from a subset"));
  auto* free_cmd = add_common(app.add_subcommand("freenorm", "free norms of a molecule"));
  free_cmd->add_option("--method", opt.method, "dual | kr | sym | all");
  free_cmd->add_option("--mode", opt.mode, "symmetrization mode for --method sym");
  free_cmd->add_flag("--dump-lp", opt.dump_lp, "print the generated LP to stderr");
  auto* asym_cmd = add_common(app.add_subcommand("asymmetrize", "canonical asymmetrization"));
  asym_cmd->add_option("--cone", opt.cone, "lplus | monotone");
  asym_cmd->add_option("--tree", opt.tree_path, "tree file for --cone monotone");
  auto* check_cmd = add_common(app.add_subcommand("check", "property checker"));
  check_cmd->add_option("--property", opt.property, "S | Sstar | S0star | H")->required();
  check_cmd->add_option("--cone", opt.cone, "lplus | monotone");
  check_cmd->add_option("--tree", opt.tree_path, "tree file for --cone monotone");
  check_cmd->add_option("--mode", opt.mode, "symmetrization mode for H");
  check_cmd->add_option("--seed", opt.seed, "sample seed");
  check_cmd->add_option("--samples", opt.samples, "sample count");
  auto* ball_cmd = add_common(app.add_subcommand("ball", "unit-ball geometry (|X| <= 4)"));
  ball_cmd->add_option("--emit", opt.emit_format, "json | svg");
  ball_cmd->add_flag("--polar", opt.polar, "the free ball (polar) instead of the slip ball");
  auto* tree_cmd = add_common(app.add_subcommand("tree-norm", "edge flows and tree norms"));
  tree_cmd->add_option("--molecule", opt.molecule_path, "molecule file")->required();
  auto* push_cmd = add_common(app.add_subcommand("pushforward", "linearized map image"), false);
  push_cmd->add_option("--map", opt.map_path, "map file")->required();
  push_cmd->add_option("--molecule", opt.molecule_path, "molecule file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (validate_cmd->parsed()) return run_validate(opt);
    if (reverse_cmd->parsed()) return run_space_transform(opt, "reverse");
    if (sym_cmd->parsed()) return run_space_transform(opt, "symmetrize");
    if (adjoin_cmd->parsed()) return run_space_transform(opt, "adjoin");
    if (slip_cmd->parsed()) return run_slipnorm(opt);
    if (extend_cmd->parsed()) return run_extend(opt);
    if (free_cmd->parsed()) return run_freenorm(opt);
    if (asym_cmd->parsed()) return run_asymmetrize(opt);
    if (check_cmd->parsed()) return run_check(opt);
    if (ball_cmd->parsed()) return run_ball(opt);
    if (tree_cmd->parsed()) return run_tree_norm(opt);
    if (push_cmd->parsed()) return run_pushforward(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

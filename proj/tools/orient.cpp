// Command-line front end: enumerate, classify, solve, verify, novelty, examples.

#include <iostream>

#include "CLI11.hpp"
#include "orient/io.hpp"

namespace {

using namespace orient;
using orient::io::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNP = 2;
constexpr int kExitUnsat = 3;
constexpr int kExitRefused = 4;
constexpr int kExitVerifyFailed = 5;

ForbiddenSet load_forbidden(const std::string& path) {
  return path.empty() ? ForbiddenSet() : io::parse_forbidden(io::read_json_file(path));
}

std::vector<RelationRep> load_relations(const std::string& path) {
  return path.empty() ? std::vector<RelationRep>{} : io::parse_relations(io::read_json_file(path));
}

Method parse_method(const std::string& name) {
  if (name == "auto") return Method::Auto;
  if (name == "brute") return Method::Brute;
  if (name == "affine") return Method::Affine;
  if (name == "2sat") return Method::TwoSat;
  if (name == "trivial") return Method::Trivial;
  throw Error("unknown method '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Forbidden-tournament orientation problems: classification and solving"};
  app.require_subcommand(1);

  std::string forbidden_path;
  std::string relations_path;
  std::string instance_path;
  std::string orientation_path;
  std::string out_path;
  std::string method_name = "auto";
  int order = 0;
  bool up_to_iso = false;

  auto* enumerate = app.add_subcommand("enumerate", "List labeled tournaments of one order");
  enumerate->add_option("--n", order, "Tournament order")->required();
  enumerate->add_option("--forbidden", forbidden_path, "Keep only F-free tournaments");
  enumerate->add_flag("--up-to-iso", up_to_iso, "List one canonical tournament per isomorphism class");

  auto* classify_cmd = app.add_subcommand("classify", "Decide P versus NP-complete");
  classify_cmd->add_option("--forbidden", forbidden_path, "Forbidden tournaments file")->required();
  classify_cmd->add_option("--relations", relations_path, "Relations file");

  auto* solve_cmd = app.add_subcommand("solve", "Find an orientation of an instance");
  solve_cmd->add_option("--forbidden", forbidden_path, "Forbidden tournaments file")->required();
  solve_cmd->add_option("--relations", relations_path, "Relations file");
  solve_cmd->add_option("--instance", instance_path, "Instance file")->required();
  solve_cmd->add_option("--method", method_name, "auto|brute|affine|2sat|trivial");
  solve_cmd->add_option("--out", out_path, "Write the orientation file here");

  auto* verify_cmd = app.add_subcommand("verify", "Check an orientation against an instance");
  verify_cmd->add_option("--forbidden", forbidden_path, "Forbidden tournaments file")->required();
  verify_cmd->add_option("--relations", relations_path, "Relations file");
  verify_cmd->add_option("--instance", instance_path, "Instance file")->required();
  verify_cmd->add_option("--orientation", orientation_path, "Orientation file")->required();

  auto* novelty_cmd = app.add_subcommand("novelty", "Report whether the template reduces to a known family");
  novelty_cmd->add_option("--forbidden", forbidden_path, "Forbidden tournaments file")->required();
  novelty_cmd->add_option("--relations", relations_path, "Relations file");

  auto* examples_cmd = app.add_subcommand("examples", "Write the worked example inputs");
  examples_cmd->add_option("--out", out_path, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    const Limits limits = Limits::from_env();

    if (*enumerate) {
      const ForbiddenSet f = load_forbidden(forbidden_path);
      std::vector<Tournament> ts = forbidden_path.empty() ? enumerate_labeled(order, limits)
                                                          : enumerate_f_free(order, f, limits);
      std::vector<Tournament> classes;
      for (const Tournament& t : iso_classes(order, limits)) {
        if (forbidden_path.empty() || is_f_free(t, f)) classes.push_back(t);
      }
      json doc = io::emit_tournament_list(up_to_iso ? classes : ts);
      doc["n"] = order;
      doc["labeled"] = ts.size();
      doc["iso_classes"] = classes.size();
      std::cout << io::dump(doc);
      return kExitOk;
    }

    if (*classify_cmd) {
      const ForbiddenSet f = load_forbidden(forbidden_path);
      const auto reps = load_relations(relations_path);
      require_valid(f, reps);
      const Classification c = classify(f, reps, limits);
      std::cout << io::dump(io::classification_report(c, reps));
      std::cerr << to_string(c.verdict) << "\n";
      return c.verdict == Verdict::NPComplete ? kExitNP : kExitOk;
    }

    if (*solve_cmd) {
      const ForbiddenSet f = load_forbidden(forbidden_path);
      const auto reps = load_relations(relations_path);
      const OrientationInstance inst = io::parse_instance(io::read_json_file(instance_path));
      const SolveOutcome out = solve(f, reps, inst, parse_method(method_name), limits);
      if (out.status == SolveStatus::Sat) {
        const json orientation = io::emit_orientation(*out.orientation);
        if (!out_path.empty()) io::write_json_file(out_path, orientation);
        std::cout << io::dump(orientation);
        std::cerr << "SAT via " << to_string(out.route) << "\n";
        return kExitOk;
      }
      std::cout << io::dump(io::solve_report(out));
      return out.status == SolveStatus::Unsat ? kExitUnsat : kExitRefused;
    }

    if (*verify_cmd) {
      const ForbiddenSet f = load_forbidden(forbidden_path);
      const OrientationInstance inst = io::parse_instance(io::read_json_file(instance_path));
      const auto reps = effective_relations(load_relations(relations_path), inst);
      require_valid(f, reps);
      const Orientation o = io::parse_orientation(io::read_json_file(orientation_path));
      const VerifyReport report = verify(inst, f, reps, o, limits);
      std::cout << io::dump(io::verify_to_json(report));
      return report.ok ? kExitOk : kExitVerifyFailed;
    }

    if (*novelty_cmd) {
      const ForbiddenSet f = load_forbidden(forbidden_path);
      const auto reps = load_relations(relations_path);
      require_valid(f, reps);
      std::cout << io::dump(io::novelty_to_json(novelty_report(f, reps, limits)));
      return kExitOk;
    }

    if (*examples_cmd) {
      io::write_examples(out_path);
      for (const auto& file : io::example_files()) std::cout << out_path << "/" << file.name << "\n";
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

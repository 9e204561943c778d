#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "orient/classifier.hpp"
#include "orient/solver.hpp"

namespace orient::io {

using nlohmann::json;

// Parse errors name the offending field, e.g. "tournaments[1].arcs[0]".
json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& doc);
// Sorted keys, two-space indent, trailing newline.
std::string dump(const json& doc);

json tournament_to_json(const Tournament& t);
Tournament tournament_from_json(const json& j, const std::string& where = "tournament");

// { "tournaments": [ { "n": int, "arcs": [[i,j],...] } ] }
std::vector<Tournament> parse_tournament_list(const json& doc);
json emit_tournament_list(const std::vector<Tournament>& ts);
ForbiddenSet parse_forbidden(const json& doc);
json emit_forbidden(const ForbiddenSet& f);

// { "relations": [ { "name": str, "arity": int, "tournaments": [...] } ] }
std::vector<RelationRep> parse_relations(const json& doc);
json emit_relations(const std::vector<RelationRep>& reps);

// { "vertices": int, "edges": [[u,v],...], "oriented": [[u,v],...],
//   "constraints": [ { "relation": str, "tuple": [v1,...] } ] }
OrientationInstance parse_instance(const json& doc);
json emit_instance(const OrientationInstance& inst);

// { "arcs": [[u,v],...] }
Orientation parse_orientation(const json& doc);
json emit_orientation(const Orientation& o);

json counterexample_to_json(const Counterexample& ce);
json classification_report(const Classification& c, const std::vector<RelationRep>& reps);
json novelty_to_json(const NoveltyReport& r);
json verify_to_json(const VerifyReport& r);
json solve_report(const SolveOutcome& out);

// Tournaments and inputs of the worked examples, keyed by file name.
struct ExampleFile {
  std::string name;
  json doc;
};
std::vector<ExampleFile> example_files();
void write_examples(const std::filesystem::path& dir);

// Shared tournaments of the worked examples.
namespace fig {
Tournament t4();
Tournament tc4();
Tournament c3_minus();
Tournament c3_plus();
Tournament cyclic3();
// Majority-closed relation: a is the 3-cycle, b and c transitive.
Tournament fig2_a();
Tournament fig2_b();
Tournament fig2_c();
// Transitive triple whose minority and majority are both cyclic.
Tournament fig3_a();
Tournament fig3_b();
Tournament fig3_c();

ForbiddenSet t4_tc4();
ForbiddenSet cyclic3_t4();
RelationRep transitive_triples();
RelationRep fig2_relation();
}  // namespace fig

}  // namespace orient::io

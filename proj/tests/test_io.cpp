#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <fstream>

#include "doctest.h"
#include "orient/io.hpp"

using namespace orient;
using orient::io::json;
namespace fig = orient::io::fig;

namespace {

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "orient_test_io";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("forbidden round trip is byte-stable") {
  const json doc = io::emit_forbidden(fig::t4_tc4());
  const std::string text = io::dump(doc);
  CHECK(io::dump(io::emit_forbidden(io::parse_forbidden(json::parse(text)))) == text);
  // Keys sorted, arcs sorted.
  CHECK(text.find("\"arcs\"") < text.find("\"n\""));
  auto first = doc["tournaments"][0]["arcs"];
  CHECK(std::is_sorted(first.begin(), first.end()));
}

TEST_CASE("round trips for relations, instances and orientations") {
  const std::vector<RelationRep> reps = {fig::fig2_relation(), fig::transitive_triples(), arrow_relation()};
  CHECK(io::emit_relations(io::parse_relations(io::emit_relations(reps))) == io::emit_relations(reps));

  OrientationInstance inst;
  inst.vertex_count = 5;
  inst.edges = {{1, 2}, {2, 5}};
  inst.pre_oriented = {{3, 1}};
  inst.constraints = {{"fig2", {4, 2, 1}}};
  const json idoc = io::emit_instance(inst);
  CHECK(io::emit_instance(io::parse_instance(idoc)) == idoc);

  Orientation o{{{1, 2}, {3, 1}, {5, 2}}};
  CHECK(io::parse_orientation(io::emit_orientation(o)).arcs == o.arcs);
}

TEST_CASE("parsing worked-example documents") {
  auto reps = io::parse_relations(io::emit_relations({fig::fig2_relation()}));
  REQUIRE(reps.size() == 1);
  CHECK(reps[0].arity == 3);
  CHECK(reps[0].tournaments.size() == 3);

  auto inst = io::parse_instance(json::parse(R"({"vertices": 2, "oriented": [[2, 1]]})"));
  CHECK(inst.edges.empty());
  CHECK(inst.pre_oriented == std::vector<Arc>{{2, 1}});
  auto ni = normalize(inst, {});
  REQUIRE(std::holds_alternative<NormalizedInstance>(ni));
  const auto& cs = std::get<NormalizedInstance>(ni).constraints;
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].relation == kArrowRelation);
  CHECK(cs[0].tuple == std::vector{2, 1});
  CHECK(find_relation({}, kArrowRelation)->tournaments == std::vector{Tournament::transitive(2)});
}

TEST_CASE("schema violations name the field") {
  CHECK(error_of([] { io::parse_forbidden(json::parse(R"({"tournaments": [{"n": 3, "arcs": [[1,2],[2,3]]}]})")); })
            .find("tournaments[0]") != std::string::npos);
  CHECK(error_of([] {
          io::parse_forbidden(json::parse(R"({"tournaments": [{"n": 2, "arcs": [[1,2]]}, {"n": 2, "arcs": [[1]]}]})"));
        }).find("tournaments[1].arcs[0]") != std::string::npos);
  CHECK(error_of([] { io::parse_forbidden(json::parse(R"({"members": []})")); }).find("tournaments") !=
        std::string::npos);
  CHECK(error_of([] { io::parse_relations(json::parse(R"({"relations": [{"name": 3, "arity": 2, "tournaments": []}]})")); })
            .find("relations[0].name") != std::string::npos);
  CHECK(error_of([] {
          io::parse_relations(json::parse(
              R"({"relations": [{"name": "r", "arity": 3, "tournaments": [{"n": 2, "arcs": [[1,2]]}]}]})"));
        }).find("relations[0].tournaments[0]") != std::string::npos);
  CHECK(error_of([] { io::parse_instance(json::parse(R"({"vertices": 3, "edges": [[1, 0]]})")); }).find("edges[0]") !=
        std::string::npos);
  CHECK(error_of([] {
          io::parse_instance(json::parse(R"({"vertices": 3, "constraints": [{"relation": "r", "tuple": [1, "x"]}]})"));
        }).find("constraints[0].tuple[1]") != std::string::npos);
  CHECK(error_of([] { io::parse_instance(json::parse(R"({"edges": []})")); }).find("vertices") != std::string::npos);
  CHECK(error_of([] { io::parse_forbidden(json::parse(R"({"tournaments": [{"n": 1, "arcs": []}]})")); }) != "");
}

TEST_CASE("file errors carry position") {
  auto bad = scratch("broken.json");
  std::ofstream(bad) << "{\n  \"tournaments\": [\n    {\"n\": 2,, }\n";
  std::string msg = error_of([&] { io::read_json_file(bad); });
  CHECK(msg.find("broken.json") != std::string::npos);
  CHECK(msg.find("line 3") != std::string::npos);
  CHECK(error_of([] { io::read_json_file("/nonexistent/file.json"); }).find("cannot open") != std::string::npos);
}

TEST_CASE("classification report structure") {
  const auto reps = std::vector<RelationRep>{fig::transitive_triples()};
  const json r = io::classification_report(classify(fig::t4_tc4(), reps), reps);
  CHECK(r["verdict"] == "NP-complete");
  CHECK(r["primary"] == "NP-complete");
  CHECK(r["case"].is_null());
  for (const char* k : {"case1", "case2", "case3", "case4"}) CHECK(r["cases"][k] == false);
  CHECK(r["evidence"]["transitive"]["largest"] == 3);
  CHECK(r["evidence"]["transitive"]["none_free_above"] == false);
  const json& mino = r["evidence"]["minority"]["relations"][0];
  CHECK(mino["name"] == "transitive");
  CHECK(mino["preserved"] == false);
  CHECK(mino["counterexample"]["result"] == json::parse("[[1,3],[2,1],[3,2]]"));
  CHECK(mino["counterexample"]["triple"].size() == 3);

  // The transitive triple with both results cyclic appears among the candidates.
  json fig3 = json::array();
  std::array<Tournament, 3> t = {fig::fig3_a(), fig::fig3_b(), fig::fig3_c()};
  std::sort(t.begin(), t.end());
  for (const auto& x : t) fig3.push_back(io::tournament_to_json(x)["arcs"]);
  auto listed = [&](const json& cands, const json& result) {
    for (const auto& c : cands) {
      if (c["triple"] == fig3 && c["result"] == result) return true;
    }
    return false;
  };
  CHECK(listed(mino["candidates"], json::parse("[[1,3],[2,1],[3,2]]")));
  CHECK(listed(r["evidence"]["majority"]["relations"][0]["candidates"], json::parse("[[1,2],[2,3],[3,1]]")));

  const json p = io::classification_report(classify(fig::t4_tc4(), {}), {});
  CHECK(p["verdict"] == "P");
  CHECK(p["primary"] == "P, case 3");
  CHECK(p["case"] == 3);
  CHECK(p["holding"] == json::array({3}));
  CHECK(p["evidence"]["minority"]["f_free"].size() == 3);
  CHECK(p["evidence"]["majority"]["f_free"][2]["size"] == 16);
  CHECK_FALSE(p["evidence"]["majority"]["f_free"][2]["counterexample"].is_null());

  const json e = io::classification_report(classify(ForbiddenSet(), {}), {});
  CHECK(e["evidence"]["transitive"]["largest"] == "unbounded");
}

TEST_CASE("novelty, verify and solve reports") {
  const json n = io::novelty_to_json(novelty_report(fig::cyclic3_t4(), {}));
  CHECK(n["status"] == "CORE_HENSON");
  CHECK(n["henson_order"] == 4);
  CHECK(io::novelty_to_json(novelty_report(fig::t4_tc4(), {}))["status"] == "NOVEL");

  CHECK(io::verify_to_json(VerifyReport{false, {"x"}}) == json::parse(R"({"ok": false, "violations": ["x"]})"));

  OrientationInstance k5;
  k5.vertex_count = 5;
  for (int u = 1; u <= 5; ++u) {
    for (int v = u + 1; v <= 5; ++v) k5.edges.push_back({u, v});
  }
  const json s = io::solve_report(solve(fig::t4_tc4(), {}, k5));
  CHECK(s["status"] == "UNSAT");
  CHECK(s["route"] == "affine");
  CHECK(s["classification"] == "P, case 3");
}

TEST_CASE("example files") {
  auto files = io::example_files();
  CHECK(files.size() == 16);
  auto dir = scratch("examples");
  io::write_examples(dir);
  for (const auto& f : files) {
    REQUIRE(std::filesystem::exists(dir / f.name));
    CHECK(io::read_json_file(dir / f.name) == f.doc);
  }
  auto fig1 = io::parse_tournament_list(io::read_json_file(dir / "fig1_tournaments.json"));
  CHECK(fig1 == std::vector{fig::t4(), fig::tc4(), fig::c3_minus(), fig::c3_plus()});
  auto forbidden = io::parse_forbidden(io::read_json_file(dir / "forbidden_t4_tc4.json"));
  CHECK(forbidden.members().size() == 2);
  auto completion = io::parse_instance(io::read_json_file(dir / "instance_k4_completion.json"));
  CHECK(completion.pre_oriented.size() == 2);
}

TEST_CASE("deterministic output") {
  const auto reps = std::vector<RelationRep>{fig::transitive_triples()};
  CHECK(io::dump(io::classification_report(classify(fig::t4_tc4(), reps), reps)) ==
        io::dump(io::classification_report(classify(fig::t4_tc4(), reps), reps)));
}

#include "orient/io.hpp"

#include <fstream>
#include <sstream>

namespace orient::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw Error(where + ": " + what); }

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

int int_of(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<int>();
}

const json& array_of(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

std::pair<int, int> pair_of(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) fail(where, "expected a pair [u,v]");
  return {int_of(j[0], where + "[0]"), int_of(j[1], where + "[1]")};
}

json arcs_to_json(std::vector<Arc> arcs) {
  std::sort(arcs.begin(), arcs.end());
  json out = json::array();
  for (auto [u, v] : arcs) out.push_back({u, v});
  return out;
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << dump(doc);
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

json tournament_to_json(const Tournament& t) { return json{{"n", t.order()}, {"arcs", arcs_to_json(t.arcs())}}; }

Tournament tournament_from_json(const json& j, const std::string& where) {
  const int n = int_of(field(j, "n", where), where + ".n");
  const json& arcs = array_of(field(j, "arcs", where), where + ".arcs");
  std::vector<Arc> list;
  for (std::size_t i = 0; i < arcs.size(); ++i) list.push_back(pair_of(arcs[i], where + ".arcs[" + std::to_string(i) + "]"));
  try {
    return Tournament::from_arcs(n, list);
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

std::vector<Tournament> parse_tournament_list(const json& doc) {
  const json& list = array_of(field(doc, "tournaments", "document"), "tournaments");
  std::vector<Tournament> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    out.push_back(tournament_from_json(list[i], "tournaments[" + std::to_string(i) + "]"));
  }
  return out;
}

json emit_tournament_list(const std::vector<Tournament>& ts) {
  json list = json::array();
  for (const Tournament& t : ts) list.push_back(tournament_to_json(t));
  return json{{"tournaments", list}};
}

ForbiddenSet parse_forbidden(const json& doc) {
  auto members = parse_tournament_list(doc);
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i].order() < 2) fail("tournaments[" + std::to_string(i) + "]", "forbidden tournaments need at least 2 vertices");
  }
  return ForbiddenSet(std::move(members));
}

json emit_forbidden(const ForbiddenSet& f) { return emit_tournament_list(f.members()); }

std::vector<RelationRep> parse_relations(const json& doc) {
  const json& list = array_of(field(doc, "relations", "document"), "relations");
  std::vector<RelationRep> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "relations[" + std::to_string(i) + "]";
    const json& name = field(list[i], "name", where);
    if (!name.is_string()) fail(where + ".name", "expected a string");
    const int arity = int_of(field(list[i], "arity", where), where + ".arity");
    const json& ts = array_of(field(list[i], "tournaments", where), where + ".tournaments");
    std::vector<Tournament> members;
    for (std::size_t k = 0; k < ts.size(); ++k) {
      const std::string at = where + ".tournaments[" + std::to_string(k) + "]";
      Tournament t = tournament_from_json(ts[k], at);
      if (t.order() != arity) fail(at, "order " + std::to_string(t.order()) + " differs from arity " + std::to_string(arity));
      members.push_back(t);
    }
    out.emplace_back(name.get<std::string>(), arity, std::move(members));
  }
  return out;
}

json emit_relations(const std::vector<RelationRep>& reps) {
  json list = json::array();
  for (const RelationRep& rep : reps) {
    json ts = json::array();
    for (const Tournament& t : rep.tournaments) ts.push_back(tournament_to_json(t));
    list.push_back(json{{"name", rep.name}, {"arity", rep.arity}, {"tournaments", ts}});
  }
  return json{{"relations", list}};
}

OrientationInstance parse_instance(const json& doc) {
  OrientationInstance inst;
  inst.vertex_count = int_of(field(doc, "vertices", "document"), "vertices");
  if (inst.vertex_count < 0) fail("vertices", "must be non-negative");
  auto pairs = [&](const char* key, auto& out) {
    if (!doc.contains(key)) return;
    const json& list = array_of(doc[key], key);
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string where = std::string(key) + "[" + std::to_string(i) + "]";
      auto p = pair_of(list[i], where);
      if (p.first < 1 || p.second < 1) fail(where, "vertex labels must be positive");
      out.push_back(p);
    }
  };
  pairs("edges", inst.edges);
  pairs("oriented", inst.pre_oriented);
  if (doc.contains("constraints")) {
    const json& list = array_of(doc["constraints"], "constraints");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string where = "constraints[" + std::to_string(i) + "]";
      const json& rel = field(list[i], "relation", where);
      if (!rel.is_string()) fail(where + ".relation", "expected a string");
      const json& tuple = array_of(field(list[i], "tuple", where), where + ".tuple");
      Constraint c{rel.get<std::string>(), {}};
      for (std::size_t k = 0; k < tuple.size(); ++k) {
        int v = int_of(tuple[k], where + ".tuple[" + std::to_string(k) + "]");
        if (v < 1) fail(where + ".tuple[" + std::to_string(k) + "]", "vertex labels must be positive");
        c.tuple.push_back(v);
      }
      inst.constraints.push_back(std::move(c));
    }
  }
  return inst;
}

json emit_instance(const OrientationInstance& inst) {
  std::vector<Arc> edges;
  for (auto [u, v] : inst.edges) edges.push_back({std::min(u, v), std::max(u, v)});
  json constraints = json::array();
  for (const Constraint& c : inst.constraints) constraints.push_back(json{{"relation", c.relation}, {"tuple", c.tuple}});
  return json{{"vertices", inst.vertex_count},
              {"edges", arcs_to_json(edges)},
              {"oriented", arcs_to_json(inst.pre_oriented)},
              {"constraints", constraints}};
}

Orientation parse_orientation(const json& doc) {
  const json& list = array_of(field(doc, "arcs", "document"), "arcs");
  Orientation o;
  for (std::size_t i = 0; i < list.size(); ++i) o.arcs.push_back(pair_of(list[i], "arcs[" + std::to_string(i) + "]"));
  std::sort(o.arcs.begin(), o.arcs.end());
  return o;
}

json emit_orientation(const Orientation& o) { return json{{"arcs", arcs_to_json(o.arcs)}}; }

json counterexample_to_json(const Counterexample& ce) {
  json triple = json::array();
  for (const Tournament& t : ce.triple) triple.push_back(arcs_to_json(t.arcs()));
  return json{{"triple", triple}, {"result", arcs_to_json(ce.result.arcs())}};
}

namespace {

json preservation_to_json(const PreservationVerdict& v) {
  json out{{"preserved", v.preserved}};
  out["counterexample"] = v.counterexample ? counterexample_to_json(*v.counterexample) : json(nullptr);
  if (!v.candidates.empty()) {
    json list = json::array();
    for (const Counterexample& ce : v.candidates) list.push_back(counterexample_to_json(ce));
    out["candidates"] = list;
  }
  return out;
}

json evidence_to_json(const PreservationEvidence& e, const std::vector<RelationRep>& reps) {
  json arities = json::array();
  for (const ArityVerdict& a : e.f_free.arities) {
    json row = preservation_to_json(a.verdict);
    row["n"] = a.order;
    row["size"] = a.set_size;
    arities.push_back(row);
  }
  json relations = json::array();
  for (std::size_t i = 0; i < e.reps.size(); ++i) {
    json row = preservation_to_json(e.reps[i]);
    row["name"] = reps[i].name;
    relations.push_back(row);
  }
  return json{{"holds", e.holds}, {"f_free", arities}, {"relations", relations}};
}

int case_number(Verdict v) {
  switch (v) {
    case Verdict::PCase1: return 1;
    case Verdict::PCase2: return 2;
    case Verdict::PCase3: return 3;
    case Verdict::PCase4: return 4;
    case Verdict::NPComplete: return 0;
  }
  return 0;
}

}  // namespace

json classification_report(const Classification& c, const std::vector<RelationRep>& reps) {
  json holding = json::array();
  for (Verdict v : c.holding) holding.push_back(case_number(v));
  json all_transitive = json::object();
  for (std::size_t i = 0; i < reps.size(); ++i) all_transitive[reps[i].name] = static_cast<bool>(c.reps_all_transitive[i]);
  json transitive{{"largest", c.transitive.largest_transitive ? json(*c.transitive.largest_transitive) : json("unbounded")},
                  {"none_free_above", c.transitive.none_free_above ? json(*c.transitive.none_free_above) : json(nullptr)}};
  return json{
      {"verdict", c.verdict == Verdict::NPComplete ? "NP-complete" : "P"},
      {"primary", to_string(c.verdict)},
      {"case", c.verdict == Verdict::NPComplete ? json(nullptr) : json(case_number(c.verdict))},
      {"case2_bound", c.case2_bound ? json(*c.case2_bound) : json(nullptr)},
      {"cases", {{"case1", c.case1}, {"case2", c.case2}, {"case3", c.case3}, {"case4", c.case4}}},
      {"holding", holding},
      {"evidence",
       {{"reps_all_transitive", all_transitive},
        {"transitive", transitive},
        {"minority", evidence_to_json(c.minority, reps)},
        {"majority", evidence_to_json(c.majority, reps)}}}};
}

json novelty_to_json(const NoveltyReport& r) {
  const char* status = "NOVEL";
  switch (r.status) {
    case Novelty::CoreOneElement: status = "CORE_ONE_ELEMENT"; break;
    case Novelty::CoreCliqueReduct: status = "CORE_CLIQUE_REDUCT"; break;
    case Novelty::CoreHenson: status = "CORE_HENSON"; break;
    case Novelty::CoreTournamentReduct: status = "CORE_TOURNAMENT_REDUCT"; break;
    case Novelty::Novel: break;
  }
  return json{{"status", status},
              {"description", to_string(r.status)},
              {"henson_order", r.henson_order ? json(*r.henson_order) : json(nullptr)},
              {"least_empty_order", r.least_empty_order ? json(*r.least_empty_order) : json(nullptr)},
              {"readings_agree", r.readings_agree}};
}

json verify_to_json(const VerifyReport& r) { return json{{"ok", r.ok}, {"violations", r.violations}}; }

json solve_report(const SolveOutcome& out) {
  const char* status = out.status == SolveStatus::Sat ? "SAT" : out.status == SolveStatus::Unsat ? "UNSAT" : "REFUSED";
  json doc{{"status", status}, {"route", to_string(out.route)}, {"reason", out.reason}};
  if (out.orientation) doc["arcs"] = arcs_to_json(out.orientation->arcs);
  if (out.classification) doc["classification"] = to_string(out.classification->verdict);
  return doc;
}

namespace fig {

namespace {
Tournament make(int n, std::initializer_list<Arc> arcs) {
  std::vector<Arc> list(arcs);
  return Tournament::from_arcs(n, list);
}
}  // namespace

Tournament t4() { return make(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}); }
Tournament tc4() { return make(4, {{1, 2}, {3, 1}, {1, 4}, {2, 3}, {2, 4}, {4, 3}}); }
Tournament c3_minus() { return make(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {4, 2}, {3, 4}}); }
Tournament c3_plus() { return make(4, {{2, 1}, {3, 1}, {4, 1}, {2, 3}, {4, 2}, {3, 4}}); }
Tournament cyclic3() { return make(3, {{1, 2}, {2, 3}, {3, 1}}); }
Tournament fig2_a() { return make(3, {{1, 2}, {3, 1}, {2, 3}}); }
Tournament fig2_b() { return make(3, {{2, 1}, {1, 3}, {2, 3}}); }
Tournament fig2_c() { return make(3, {{2, 1}, {3, 1}, {2, 3}}); }
Tournament fig3_a() { return make(3, {{1, 2}, {1, 3}, {2, 3}}); }
Tournament fig3_b() { return make(3, {{1, 2}, {3, 1}, {3, 2}}); }
Tournament fig3_c() { return make(3, {{2, 1}, {3, 1}, {2, 3}}); }

ForbiddenSet t4_tc4() { return ForbiddenSet({t4(), tc4()}); }
ForbiddenSet cyclic3_t4() { return ForbiddenSet({cyclic3(), t4()}); }
RelationRep transitive_triples() { return RelationRep("transitive", 3, transitive_tournaments(3)); }
RelationRep fig2_relation() { return RelationRep("fig2", 3, {fig2_a(), fig2_b(), fig2_c()}); }

}  // namespace fig

std::vector<ExampleFile> example_files() {
  auto complete = [](int n) {
    OrientationInstance inst;
    inst.vertex_count = n;
    for (int u = 1; u <= n; ++u) {
      for (int v = u + 1; v <= n; ++v) inst.edges.push_back({u, v});
    }
    return inst;
  };
  auto triangle_with = [](const std::string& relation) {
    OrientationInstance inst;
    inst.vertex_count = 3;
    inst.constraints.push_back({relation, {1, 2, 3}});
    return inst;
  };
  OrientationInstance completion = complete(4);
  completion.pre_oriented = {{2, 1}, {3, 4}};

  return {
      {"fig1_tournaments.json", emit_tournament_list({fig::t4(), fig::tc4(), fig::c3_minus(), fig::c3_plus()})},
      {"fig2_triple.json", emit_tournament_list({fig::fig2_a(), fig::fig2_b(), fig::fig2_c()})},
      {"fig3_triple.json", emit_tournament_list({fig::fig3_a(), fig::fig3_b(), fig::fig3_c()})},
      {"forbidden_t4_tc4.json", emit_forbidden(fig::t4_tc4())},
      {"forbidden_cyclic3_t4.json", emit_forbidden(fig::cyclic3_t4())},
      {"forbidden_empty.json", emit_forbidden(ForbiddenSet())},
      {"relations_transitive_triples.json", emit_relations({fig::transitive_triples()})},
      {"relations_fig2.json", emit_relations({fig::fig2_relation()})},
      {"relations_arrow.json", emit_relations({arrow_relation()})},
      {"instance_empty.json", emit_instance(OrientationInstance{})},
      {"instance_k3.json", emit_instance(complete(3))},
      {"instance_k4.json", emit_instance(complete(4))},
      {"instance_k5.json", emit_instance(complete(5))},
      {"instance_k4_completion.json", emit_instance(completion)},
      {"instance_triangle_transitive.json", emit_instance(triangle_with("transitive"))},
      {"instance_triangle_fig2.json", emit_instance(triangle_with("fig2"))},
  };
}

void write_examples(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const ExampleFile& file : example_files()) write_json_file(dir / file.name, file.doc);
}

}  // namespace orient::io

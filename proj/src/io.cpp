#include "eulerlab/io.hpp"

#include <set>

namespace eulerlab {

using nlohmann::json;

std::string_view to_string(GroupKind k) { return k == GroupKind::Torus ? "torus" : "elem_abelian_2"; }

namespace {

GroupKind parse_kind(const std::string& s) {
  if (s == "elem_abelian_2") return GroupKind::ElemAbelian2;
  if (s == "torus") return GroupKind::Torus;
  throw InputError("unknown group kind '" + s + "' (expected elem_abelian_2 or torus)");
}

void only_fields(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!j.is_object()) throw InputError(where + " must be an object");
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw InputError("unknown field '" + key + "' in " + where);
  }
}

std::int64_t integer(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw InputError(what + " must be an integer");
  return j.get<std::int64_t>();
}

std::vector<std::int64_t> int_vector(const json& j, int rank, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be an array");
  if (static_cast<int>(j.size()) != rank) {
    throw InputError(what + " has " + std::to_string(j.size()) + " coordinates, expected " +
                     std::to_string(rank));
  }
  std::vector<std::int64_t> out;
  for (const auto& x : j) out.push_back(integer(x, what + " coordinate"));
  return out;
}

CharF2 char_from(const std::vector<std::int64_t>& v, const std::string& what) {
  CharF2 c;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0 && v[i] != 1) throw InputError(what + " coordinates must be 0 or 1");
    if (v[i] == 1) c.bits |= std::uint64_t{1} << i;
  }
  return c;
}

std::vector<std::int64_t> char_coords(CharF2 c, int rank) {
  std::vector<std::int64_t> out(rank);
  for (int i = 0; i < rank; ++i) out[i] = static_cast<std::int64_t>((c.bits >> i) & 1u);
  return out;
}

template <class Rep, class MakeKey>
Rep parse_module(const json& j, int rank, const std::string& where, MakeKey make_key) {
  only_fields(j, {"entries"}, where);
  if (!j.contains("entries") || !j["entries"].is_array()) throw InputError(where + ".entries must be an array");
  Rep r(rank);
  std::set<typename Rep::Entries::key_type> seen;
  for (const auto& e : j["entries"]) {
    only_fields(e, {"char", "mult"}, where + " entry");
    if (!e.contains("char") || !e.contains("mult")) throw InputError(where + " entry needs char and mult");
    const auto key = make_key(int_vector(e["char"], rank, "character"));
    const auto m = integer(e["mult"], "multiplicity");
    if (m <= 0) throw InputError("multiplicity must be positive, got " + std::to_string(m));
    if (!seen.insert(key).second) throw InputError("duplicate character in " + where);
    r.add(key, m);
  }
  return r;
}

}  // namespace

InputDocument parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  only_fields(j, {"group", "module", "target", "flag", "n", "d"}, "document");
  if (!j.contains("group")) throw InputError("document needs a group");
  if (!j.contains("module")) throw InputError("document needs a module");
  const auto& g = j["group"];
  only_fields(g, {"kind", "rank"}, "group");
  if (!g.contains("kind") || !g["kind"].is_string()) throw InputError("group.kind must be a string");
  if (!g.contains("rank")) throw InputError("group.rank is required");

  InputDocument doc;
  doc.kind = parse_kind(g["kind"].get<std::string>());
  const auto rank = integer(g["rank"], "group.rank");
  if (rank < 1) throw InputError("group rank must be at least 1 (got " + std::to_string(rank) + ")");
  if (doc.kind == GroupKind::ElemAbelian2 && rank > 64) throw ResourceError("ranks above 64 are not supported");
  if (rank > 1024) throw ResourceError("rank too large");
  doc.rank = static_cast<int>(rank);

  auto to_char = [](const std::vector<std::int64_t>& v) { return char_from(v, "character"); };
  auto to_weight = [](std::vector<std::int64_t> v) { return Weight{std::move(v)}; };
  doc.has_target = j.contains("target");
  if (doc.kind == GroupKind::ElemAbelian2) {
    doc.module_e = parse_module<RepE>(j["module"], doc.rank, "module", to_char);
    doc.target_e = doc.has_target ? parse_module<RepE>(j["target"], doc.rank, "target", to_char) : RepE(doc.rank);
  } else {
    doc.module_t = parse_module<RepT>(j["module"], doc.rank, "module", to_weight);
    doc.target_t = doc.has_target ? parse_module<RepT>(j["target"], doc.rank, "target", to_weight) : RepT(doc.rank);
  }
  if (j.contains("flag")) {
    const auto& f = j["flag"];
    only_fields(f, {"dual_basis"}, "flag");
    if (!f.contains("dual_basis") || !f["dual_basis"].is_array()) {
      throw InputError("flag.dual_basis must be an array");
    }
    if (doc.kind == GroupKind::ElemAbelian2) {
      std::vector<CharF2> basis;
      for (const auto& v : f["dual_basis"]) basis.push_back(char_from(int_vector(v, doc.rank, "flag covector"), "flag covector"));
      doc.flag_e = FlagE(doc.rank, std::move(basis));
    } else {
      std::vector<Weight> basis;
      for (const auto& v : f["dual_basis"]) basis.push_back(Weight{int_vector(v, doc.rank, "flag covector")});
      doc.flag_t = RationalFlag(doc.rank, std::move(basis));
    }
  }
  if (j.contains("n")) doc.n = static_cast<int>(integer(j["n"], "n"));
  if (j.contains("d")) doc.d = static_cast<int>(integer(j["d"], "d"));
  return doc;
}

std::vector<std::vector<std::int64_t>> flag_coords(const FlagE& f) {
  std::vector<std::vector<std::int64_t>> out;
  for (auto c : f.dual_basis()) out.push_back(char_coords(c, f.rank()));
  return out;
}

std::vector<std::vector<std::int64_t>> flag_coords(const RationalFlag& f) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& w : f.dual_basis()) out.push_back(w.coords);
  return out;
}

// ---------------------------------------------------------------------------

void to_json(json& j, const Poly& p) {
  j = {{"field", std::string(to_string(p.field()))}, {"vars", p.nvars()}, {"text", p.to_string()}};
}

void from_json(const json& j, Poly& p) {
  p = Poly::parse(j.at("text").get<std::string>(), parse_field(j.at("field").get<std::string>()),
                  j.at("vars").get<std::size_t>());
}

void to_json(json& j, const TriangularSystem& s) {
  json gens = json::array();
  for (const auto& g : s.generators()) gens.push_back(g.to_string());
  j = {{"field", std::string(to_string(s.field()))}, {"vars", s.nvars()}, {"generators", gens}};
}

void from_json(const json& j, TriangularSystem& s) {
  const Field field = parse_field(j.at("field").get<std::string>());
  const auto nvars = j.at("vars").get<std::size_t>();
  std::vector<Poly> gens;
  for (const auto& g : j.at("generators")) gens.push_back(Poly::parse(g.get<std::string>(), field, nvars));
  s = gens.empty() ? TriangularSystem() : TriangularSystem(std::move(gens));
}

void to_json(json& j, const Weight& w) { j = w.coords; }
void from_json(const json& j, Weight& w) { w.coords = j.get<std::vector<std::int64_t>>(); }

void to_json(json& j, const RepE& r) {
  json entries = json::array();
  for (const auto& [c, m] : r.entries()) entries.push_back({{"char", char_coords(c, r.rank())}, {"mult", m}});
  j = {{"rank", r.rank()}, {"entries", entries}};
}

void from_json(const json& j, RepE& r) {
  r = RepE(j.at("rank").get<int>());
  for (const auto& e : j.at("entries")) {
    r.add(char_from(e.at("char").get<std::vector<std::int64_t>>(), "character"), e.at("mult").get<std::int64_t>());
  }
}

void to_json(json& j, const RepT& r) {
  json entries = json::array();
  for (const auto& [w, m] : r.entries()) entries.push_back({{"char", w.coords}, {"mult", m}});
  j = {{"rank", r.rank()}, {"entries", entries}};
}

void from_json(const json& j, RepT& r) {
  r = RepT(j.at("rank").get<int>());
  for (const auto& e : j.at("entries")) r.add(e.at("char").get<Weight>(), e.at("mult").get<std::int64_t>());
}

void to_json(json& j, const FlagE& f) { j = {{"rank", f.rank()}, {"dual_basis", flag_coords(f)}}; }

void from_json(const json& j, FlagE& f) {
  const int rank = j.at("rank").get<int>();
  std::vector<CharF2> basis;
  for (const auto& v : j.at("dual_basis")) basis.push_back(char_from(v.get<std::vector<std::int64_t>>(), "flag covector"));
  f = FlagE(rank, std::move(basis));
}

void to_json(json& j, const RationalFlag& f) { j = {{"rank", f.rank()}, {"dual_basis", flag_coords(f)}}; }

void from_json(const json& j, RationalFlag& f) {
  f = RationalFlag(j.at("rank").get<int>(), j.at("dual_basis").get<std::vector<Weight>>());
}

void to_json(json& j, const Subgroup& s) {
  json basis = json::array();
  for (auto v : s.basis()) basis.push_back(char_coords(CharF2{v}, s.rank()));
  j = {{"rank", s.rank()}, {"basis", basis}};
}

void from_json(const json& j, Subgroup& s) {
  std::vector<linalg::F2Vec> gens;
  for (const auto& v : j.at("basis")) gens.push_back(char_from(v.get<std::vector<std::int64_t>>(), "vector").bits);
  s = Subgroup(j.at("rank").get<int>(), std::move(gens));
}

void to_json(json& j, const Presentation& p) {
  j = {{"relations", p.relations}, {"quotient_dimension", p.quotient_dimension()},
       {"provenance", p.provenance}, {"notes", p.notes}};
}

void from_json(const json& j, Presentation& p) {
  p.relations = j.at("relations").get<TriangularSystem>();
  p.provenance = j.at("provenance").get<std::string>();
  p.notes = j.at("notes").get<std::vector<std::string>>();
}

void to_json(json& j, const NonvanishingResult& r) {
  j = {{"nonvanishing", r.nonvanishing}, {"euler_class", r.euler_class}, {"normal_form", r.normal_form},
       {"presentation", r.presentation}, {"u_dims", r.u_dims}, {"v_dims", r.v_dims}};
}

void from_json(const json& j, NonvanishingResult& r) {
  r.nonvanishing = j.at("nonvanishing").get<bool>();
  r.euler_class = j.at("euler_class").get<Poly>();
  r.normal_form = j.at("normal_form").get<Poly>();
  r.presentation = j.at("presentation").get<Presentation>();
  r.u_dims = j.at("u_dims").get<std::vector<std::int64_t>>();
  r.v_dims = j.at("v_dims").get<std::vector<std::int64_t>>();
}

void to_json(json& j, const FlagFindResult& r) {
  json lifted = json::array();
  for (auto c : r.lifted_flag) lifted.push_back(char_coords(c, r.subgroup.rank()));
  j = {{"subgroup", r.subgroup}, {"u_fixed", r.u_fixed}, {"v_fixed", r.v_fixed}, {"flag", r.flag},
       {"flag_in_dual", lifted}, {"u_dims", r.u_dims}, {"v_dims", r.v_dims}};
}

void from_json(const json& j, FlagFindResult& r) {
  r.subgroup = j.at("subgroup").get<Subgroup>();
  r.u_fixed = j.at("u_fixed").get<RepE>();
  r.v_fixed = j.at("v_fixed").get<RepE>();
  r.flag = j.at("flag").get<FlagE>();
  r.lifted_flag.clear();
  for (const auto& v : j.at("flag_in_dual")) {
    r.lifted_flag.push_back(char_from(v.get<std::vector<std::int64_t>>(), "flag covector"));
  }
  r.u_dims = j.at("u_dims").get<std::vector<std::int64_t>>();
  r.v_dims = j.at("v_dims").get<std::vector<std::int64_t>>();
}

void to_json(json& j, const HypothesisItem& h) {
  j = {{"description", h.description}, {"status", std::string(to_string(h.status))}, {"evidence", h.evidence}};
}

void from_json(const json& j, HypothesisItem& h) {
  h.description = j.at("description").get<std::string>();
  h.evidence = j.at("evidence").get<std::string>();
  const auto s = j.at("status").get<std::string>();
  if (s == "pass") {
    h.status = ItemStatus::Pass;
  } else if (s == "fail") {
    h.status = ItemStatus::Fail;
  } else if (s == "assumed") {
    h.status = ItemStatus::Assumed;
  } else {
    throw InputError("unknown hypothesis status '" + s + "'");
  }
}

void to_json(json& j, const BoundReport& r) {
  j = {{"theorem", r.theorem}, {"hypotheses", r.hypotheses}, {"bound", nullptr},
       {"witness", r.witness}, {"notes", r.notes}};
  if (r.bound) j["bound"] = *r.bound;
}

void from_json(const json& j, BoundReport& r) {
  r.theorem = j.at("theorem").get<std::string>();
  r.hypotheses = j.at("hypotheses").get<std::vector<HypothesisItem>>();
  r.bound = j.at("bound").is_null() ? std::nullopt : std::optional(j.at("bound").get<std::int64_t>());
  r.witness = j.at("witness");
  r.notes = j.at("notes").get<std::vector<std::string>>();
}

void to_json(json& j, const CheckItem& c) { j = {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}}; }

void from_json(const json& j, CheckItem& c) {
  c.name = j.at("name").get<std::string>();
  c.pass = j.at("pass").get<bool>();
  c.detail = j.at("detail").get<std::string>();
}

void to_json(json& j, const FlagRingReport& r) {
  j = {{"n", r.n}, {"l", r.l}, {"bounds", nullptr}, {"items", r.items}, {"all_pass", r.all_pass()}};
  if (r.bounds) j["bounds"] = *r.bounds;
}

void from_json(const json& j, FlagRingReport& r) {
  r.n = j.at("n").get<int>();
  r.l = j.at("l").get<int>();
  r.bounds = j.at("bounds").is_null() ? std::nullopt : std::optional(j.at("bounds").get<std::vector<int>>());
  r.items = j.at("items").get<std::vector<CheckItem>>();
}

void to_json(json& j, const SymPowerTable& t) {
  j = {{"base", t.base}, {"degree", t.degree}, {"table", t.table}, {"dimension", t.table.dim()}};
}

void from_json(const json& j, SymPowerTable& t) {
  t.base = j.at("base").get<RepE>();
  t.degree = j.at("degree").get<int>();
  t.table = j.at("table").get<RepE>();
}

void to_json(json& j, const EmbeddingResult& r) {
  j = {{"k", r.k},
       {"target_dim", r.target_dim},
       {"flag", r.flag},
       {"u_dims", r.u_dims},
       {"v_dims", r.v_dims},
       {"p_dims", r.p_dims},
       {"uk_dims", r.uk_dims},
       {"uk_total", r.uk_total},
       {"v_total", r.v_total},
       {"p_claim_holds", r.p_claim_holds},
       {"uk_claim_holds", r.uk_claim_holds}};
}

void from_json(const json& j, EmbeddingResult& r) {
  r.k = j.at("k").get<int>();
  r.target_dim = j.at("target_dim").get<int>();
  r.flag = j.at("flag").get<FlagE>();
  r.u_dims = j.at("u_dims").get<std::vector<std::int64_t>>();
  r.v_dims = j.at("v_dims").get<std::vector<std::int64_t>>();
  r.p_dims = j.at("p_dims").get<std::vector<std::vector<std::int64_t>>>();
  r.uk_dims = j.at("uk_dims").get<std::vector<std::int64_t>>();
  r.uk_total = j.at("uk_total").get<std::int64_t>();
  r.v_total = j.at("v_total").get<std::int64_t>();
  r.p_claim_holds = j.at("p_claim_holds").get<bool>();
  r.uk_claim_holds = j.at("uk_claim_holds").get<bool>();
}

void to_json(json& j, const LineDecomposition& d) {
  json lines = json::array();
  for (const auto& [line, rep] : d.lines) lines.push_back({{"line", line}, {"module", rep}, {"dim", rep.dim()}});
  j = {{"rank", d.rank}, {"fixed_dim", d.fixed_dim}, {"lines", lines}};
}

void from_json(const json& j, LineDecomposition& d) {
  d.rank = j.at("rank").get<int>();
  d.fixed_dim = j.at("fixed_dim").get<std::int64_t>();
  d.lines.clear();
  for (const auto& e : j.at("lines")) d.lines.emplace(e.at("line").get<Weight>(), e.at("module").get<RepT>());
}

void to_json(json& j, const CircleExampleParams& p) {
  j = {{"a", p.a}, {"b", p.b}, {"c", p.c}, {"a_prime", p.a_prime}, {"b_prime", p.b_prime}};
}

void from_json(const json& j, CircleExampleParams& p) {
  p.a = j.at("a").get<std::int64_t>();
  p.b = j.at("b").get<std::int64_t>();
  p.c = j.at("c").get<std::int64_t>();
  p.a_prime = j.at("a_prime").get<std::int64_t>();
  p.b_prime = j.at("b_prime").get<std::int64_t>();
}

namespace {

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> optional_from(const json& j) {
  return j.is_null() ? std::nullopt : std::optional<T>(j.get<T>());
}

}  // namespace

void to_json(json& j, const EquivarianceReport& r) {
  j = {{"samples", r.samples},
       {"tol", r.tol},
       {"seed", r.seed},
       {"max_residual", r.max_residual},
       {"min_norm", optional_json(r.min_norm)},
       {"symbolic_weights", optional_json(r.symbolic_weights)},
       {"symbolic_zero_set", optional_json(r.symbolic_zero_set)},
       {"pass", r.pass}};
}

void from_json(const json& j, EquivarianceReport& r) {
  r.samples = j.at("samples").get<int>();
  r.tol = j.at("tol").get<double>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.max_residual = j.at("max_residual").get<double>();
  r.min_norm = optional_from<double>(j.at("min_norm"));
  r.symbolic_weights = optional_from<bool>(j.at("symbolic_weights"));
  r.symbolic_zero_set = optional_from<bool>(j.at("symbolic_zero_set"));
  r.pass = j.at("pass").get<bool>();
}

void to_json(json& j, const ReduceResult& r) {
  j = {{"input", r.input}, {"system", r.system}, {"normal_form", r.normal_form}, {"is_zero", r.is_zero}};
}

void from_json(const json& j, ReduceResult& r) {
  r.input = j.at("input").get<Poly>();
  r.system = j.at("system").get<TriangularSystem>();
  r.normal_form = j.at("normal_form").get<Poly>();
  r.is_zero = j.at("is_zero").get<bool>();
}

void to_json(json& j, const EulerCheckResult& r) {
  j = {{"group", std::string(to_string(r.kind))}, {"flag", r.flag}, {"result", r.result}};
}

void from_json(const json& j, EulerCheckResult& r) {
  r.kind = parse_kind(j.at("group").get<std::string>());
  r.flag = j.at("flag").get<std::vector<std::vector<std::int64_t>>>();
  r.result = j.at("result").get<NonvanishingResult>();
}

void to_json(json& j, const TorusFlagResult& r) {
  j = {{"flag", r.flag}, {"u_dims", r.u_dims}, {"v_dims", r.v_dims}};
}

void from_json(const json& j, TorusFlagResult& r) {
  r.flag = j.at("flag").get<RationalFlag>();
  r.u_dims = j.at("u_dims").get<std::vector<std::int64_t>>();
  r.v_dims = j.at("v_dims").get<std::vector<std::int64_t>>();
}

void to_json(json& j, const FlagRingResult& r) {
  j = {{"presentation", r.presentation}, {"report", optional_json(r.report)}};
}

void from_json(const json& j, FlagRingResult& r) {
  r.presentation = j.at("presentation").get<Presentation>();
  r.report = optional_from<FlagRingReport>(j.at("report"));
}

void to_json(json& j, const TorusExampleResult& r) {
  j = {{"params", r.params},
       {"source_layout", r.source_layout},
       {"target_layout", r.target_layout},
       {"report", r.report}};
}

void from_json(const json& j, TorusExampleResult& r) {
  r.params = j.at("params").get<CircleExampleParams>();
  r.source_layout = j.at("source_layout").get<std::vector<Weight>>();
  r.target_layout = j.at("target_layout").get<std::vector<Weight>>();
  r.report = j.at("report").get<EquivarianceReport>();
}

}  // namespace eulerlab

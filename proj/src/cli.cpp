#include "eulerlab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "eulerlab/io.hpp"

namespace eulerlab::cli {

using nlohmann::json;

std::uint64_t default_seed() {
  const char* env = std::getenv("EULERLAB_SEED");
  if (env == nullptr || *env == '\0') return 0;
  const std::string s(env);
  if (s.find_first_not_of("0123456789") != std::string::npos) {
    throw InputError("EULERLAB_SEED must be an unsigned integer, got '" + s + "'");
  }
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw InputError("EULERLAB_SEED out of range: '" + s + "'");
  }
}

namespace {

struct Common {
  std::string input;
  std::string inline_text;
  bool machine = false;
  std::uint64_t seed = 0;
  CLI::Option* seed_opt = nullptr;

  std::uint64_t effective_seed() const { return seed_opt->count() > 0 ? seed : default_seed(); }
};

void add_common(CLI::App* sub, Common& c, bool document) {
  if (document) {
    auto* i = sub->add_option("-i,--input", c.input, "Input document (JSON file)");
    auto* t = sub->add_option("--inline", c.inline_text, "Input document given as text");
    i->excludes(t);
  }
  sub->add_flag("--machine", c.machine, "Emit one JSON document per line");
  c.seed_opt = sub->add_option("--seed", c.seed, "Sampling seed (default 0 or EULERLAB_SEED)");
}

InputDocument load_document(const Common& c) {
  if (!c.inline_text.empty()) return parse_document(c.inline_text);
  if (c.input.empty()) throw InputError("an input document is required (-i FILE or --inline TEXT)");
  std::ifstream in(c.input);
  if (!in) throw InputError("cannot read input document '" + c.input + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

std::string rep_text(const RepE& r) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, m] : r.entries()) {
    os << (first ? "" : " ") << to_string(c, r.rank()) << ":" << m;
    first = false;
  }
  return first ? "0" : os.str();
}

std::string rep_text(const RepT& r) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, m] : r.entries()) {
    os << (first ? "" : " ") << to_string(w) << ":" << m;
    first = false;
  }
  return first ? "0" : os.str();
}

std::string dims_text(const std::vector<std::int64_t>& d) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  os << ']';
  return os.str();
}

std::string coords_text(const std::vector<std::vector<std::int64_t>>& basis) {
  std::ostringstream os;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    os << (i ? " " : "") << "T" << i + 1 << "=(";
    for (std::size_t j = 0; j < basis[i].size(); ++j) os << (j ? "," : "") << basis[i][j];
    os << ')';
  }
  return os.str();
}

void presentation_text(std::ostream& os, const Presentation& p) {
  os << "presentation: " << p.provenance << "\n";
  const auto& gens = p.relations.generators();
  for (std::size_t j = 0; j < gens.size(); ++j) os << "  g" << j + 1 << " = " << gens[j].to_string() << "\n";
  os << "quotient dimension: " << p.quotient_dimension() << "\n";
  for (const auto& n : p.notes) os << "note: " << n << "\n";
}

void bound_text(std::ostream& os, const BoundReport& r) {
  os << "theorem: " << r.theorem << "\n";
  for (const auto& h : r.hypotheses) {
    os << "hypothesis: " << h.description << ": " << to_string(h.status);
    if (!h.evidence.empty()) os << " (" << h.evidence << ")";
    os << "\n";
  }
  if (r.bound) {
    os << "bound: " << *r.bound << "\n";
  } else {
    os << "bound: not applicable\n";
  }
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  os << "witness: " << r.witness.dump() << "\n";
}

class Emitter {
 public:
  Emitter(std::ostream& out, bool machine) : out_(out), machine_(machine) {}
  template <class T>
  void emit(const std::string& command, const T& result, const std::string& text) {
    if (machine_) {
      out_ << json{{"command", command}, {"result", result}}.dump() << "\n";
    } else {
      out_ << text;
    }
  }

 private:
  std::ostream& out_;
  bool machine_;
};

int cmd_reduce(const Common& c, const std::string& field_name, std::size_t nvars, const std::string& poly,
               const std::vector<std::string>& gens, std::ostream& out) {
  const Field field = parse_field(field_name);
  std::vector<Poly> gs;
  for (const auto& g : gens) gs.push_back(Poly::parse(g, field, nvars));
  if (gs.size() != nvars) {
    throw StructuralError("expected " + std::to_string(nvars) + " generators, got " + std::to_string(gs.size()));
  }
  ReduceResult r;
  r.input = Poly::parse(poly, field, nvars);
  r.system = TriangularSystem(std::move(gs));
  r.normal_form = reduce(r.input, r.system);
  r.is_zero = r.normal_form.is_zero();
  std::ostringstream os;
  os << "normal form: " << r.normal_form.to_string() << "\n";
  os << "zero in quotient: " << (r.is_zero ? "yes" : "no") << "\n";
  Emitter(out, c.machine).emit("reduce", r, os.str());
  return 0;
}

int cmd_euler_check(const Common& c, std::ostream& out, std::ostream& err) {
  const auto doc = load_document(c);
  EulerCheckResult r;
  r.kind = doc.kind;
  if (doc.kind == GroupKind::ElemAbelian2) {
    const FlagE flag = doc.flag_e ? *doc.flag_e : find_flag(doc.module_e, doc.target_e);
    r.flag = flag_coords(flag);
    r.result = euler_nonvanishing(doc.module_e, doc.target_e, flag);
  } else {
    const RationalFlag flag = doc.flag_t ? *doc.flag_t : find_rational_flag(doc.module_t, doc.target_t);
    r.flag = flag_coords(flag);
    r.result = euler_nonvanishing(doc.module_t, doc.target_t, flag);
  }
  std::ostringstream os;
  os << "flag: " << coords_text(r.flag) << "\n";
  presentation_text(os, r.result.presentation);
  os << "dim U_i: " << dims_text(r.result.u_dims) << "\n";
  os << "dim V_i: " << dims_text(r.result.v_dims) << "\n";
  os << "e(V) = " << r.result.euler_class.to_string() << "\n";
  os << "normal form: " << r.result.normal_form.to_string() << "\n";
  os << "nonvanishing: " << (r.result.nonvanishing ? "true" : "false") << "\n";
  Emitter(out, c.machine).emit("euler-check", r, os.str());
  if (!r.result.nonvanishing) {
    err << "e(V) nonzero in the quotient fails: e(V) reduces to 0\n";
    return 1;
  }
  return 0;
}

int cmd_flag_find(const Common& c, std::ostream& out) {
  const auto doc = load_document(c);
  std::ostringstream os;
  if (doc.kind == GroupKind::ElemAbelian2) {
    const auto r = find_flag_with_subgroup(doc.module_e, doc.target_e);
    os << "subgroup F: dim " << r.subgroup.dim();
    json basis = r.subgroup;
    os << " basis " << basis["basis"].dump() << "\n";
    os << "U^F: " << rep_text(r.u_fixed) << "\n";
    os << "V^F: " << rep_text(r.v_fixed) << "\n";
    os << "flag of E/F: " << coords_text(flag_coords(r.flag)) << "\n";
    std::vector<std::vector<std::int64_t>> lifted;
    for (auto t : r.lifted_flag) {
      std::vector<std::int64_t> v;
      for (int x : t.coords(doc.rank)) v.push_back(x);
      lifted.push_back(std::move(v));
    }
    os << "flag in E*: " << coords_text(lifted) << "\n";
    os << "dim U_i: " << dims_text(r.u_dims) << "\n";
    os << "dim V_i: " << dims_text(r.v_dims) << "\n";
    Emitter(out, c.machine).emit("flag-find", r, os.str());
  } else {
    TorusFlagResult r;
    r.flag = find_rational_flag(doc.module_t, doc.target_t);
    r.u_dims = decompose(doc.module_t, r.flag).dims();
    r.v_dims = decompose(doc.target_t, r.flag).dims();
    os << "flag: " << coords_text(flag_coords(r.flag)) << "\n";
    os << "dim U_i: " << dims_text(r.u_dims) << "\n";
    os << "dim V_i: " << dims_text(r.v_dims) << "\n";
    Emitter(out, c.machine).emit("flag-find", r, os.str());
  }
  return 0;
}

int cmd_bound(const Common& c, const std::string& theorem, CLI::Option* n_opt, int n_flag, std::ostream& out,
              std::ostream& err) {
  const auto doc = load_document(c);
  auto need = [&](GroupKind k) {
    if (doc.kind != k) {
      throw InputError("theorem " + theorem + " expects a " + std::string(to_string(k)) + " document");
    }
  };
  BoundReport r;
  if (theorem == "free-zero-set") {
    need(GroupKind::ElemAbelian2);
    r = bound_free_zero_set(doc.module_e, doc.target_e);
  } else if (theorem == "stiefel") {
    std::optional<int> n = doc.n;
    if (n_opt->count() > 0) n = n_flag;
    if (!n) throw InputError("theorem stiefel needs n (-n or document field n)");
    if (doc.kind == GroupKind::ElemAbelian2) {
      r = bound_stiefel(doc.module_e, doc.target_e, *n, doc.flag_e);
    } else {
      r = bound_stiefel(doc.module_t, doc.target_t, *n, doc.flag_t);
    }
  } else if (theorem == "torus-interior" || theorem == "torus-annulus") {
    need(GroupKind::Torus);
    r = bound_torus(doc.module_t, doc.target_t,
                    theorem == "torus-interior" ? TorusVariant::Interior : TorusVariant::Annulus);
  } else {
    throw InputError("unknown theorem '" + theorem + "'");
  }
  std::ostringstream os;
  bound_text(os, r);
  Emitter(out, c.machine).emit("bound", r, os.str());
  if (const auto* f = r.first_failure()) {
    err << "hypothesis failed: " << f->description;
    if (!f->evidence.empty()) err << " (" << f->evidence << ")";
    err << "\n";
    return 1;
  }
  return 0;
}

int cmd_flag_ring(const Common& c, int n, int l, const std::vector<int>& bounds, bool verify, int samples,
                  std::ostream& out, std::ostream& err) {
  std::optional<std::vector<int>> nb;
  if (!bounds.empty()) nb = bounds;
  if (samples < 0) throw InputError("--samples must be nonnegative");
  FlagRingResult r;
  r.presentation = flag_ring(n, l, nb);
  if (verify) r.report = verify_flag_ring(n, l, {nb, samples, c.effective_seed()});
  std::ostringstream os;
  presentation_text(os, r.presentation);
  os << "top degree: " << flag_top_degree(n, l) << "\n";
  if (r.report) {
    for (const auto& item : r.report->items) {
      os << item.name << ": " << (item.pass ? "pass" : "fail") << " (" << item.detail << ")\n";
    }
  }
  Emitter(out, c.machine).emit("flag-ring", r, os.str());
  if (r.report && !r.report->all_pass()) {
    for (const auto& item : r.report->items) {
      if (!item.pass) err << "check failed: " << item.name << " (" << item.detail << ")\n";
    }
    return 1;
  }
  return 0;
}

int cmd_sympow(const Common& c, CLI::Option* d_opt, int d_flag, std::ostream& out, std::ostream& err) {
  const auto doc = load_document(c);
  if (doc.kind != GroupKind::ElemAbelian2) throw InputError("sympow expects an elem_abelian_2 document");
  std::optional<int> d = doc.d;
  if (d_opt->count() > 0) d = d_flag;
  if (!d) throw InputError("sympow needs d (-d or document field d)");
  if (*d < 0) throw InputError("d must be nonnegative");
  std::ostringstream os;
  if (!doc.has_target) {
    SymPowerTable t{doc.module_e, *d, sym_multiplicities(doc.module_e, *d)};
    os << "S^" << t.degree << "(U*): " << rep_text(t.table) << "\n";
    os << "dimension: " << t.table.dim() << "\n";
    Emitter(out, c.machine).emit("sympow", t, os.str());
    return 0;
  }
  const auto r = min_embedding_k(doc.module_e, doc.target_e, *d, doc.flag_e);
  os << "k: " << r.k << "\n";
  os << "flag: " << coords_text(flag_coords(r.flag)) << "\n";
  os << "dim U_i: " << dims_text(r.u_dims) << "\n";
  os << "dim V_i: " << dims_text(r.v_dims) << "\n";
  for (std::size_t j = 0; j < r.p_dims.size(); ++j) {
    os << "dim P[" << j + 1 << "]_i: " << dims_text(r.p_dims[j]) << "\n";
  }
  os << "dim U[k]_i: " << dims_text(r.uk_dims) << "\n";
  os << "dim U[k] - dim V: " << r.uk_total - r.v_total << " (need >= " << r.target_dim << ")\n";
  os << "dim P[j]_i >= dim U_i: " << (r.p_claim_holds ? "pass" : "fail") << "\n";
  os << "dim U[k]_i >= k dim U_i: " << (r.uk_claim_holds ? "pass" : "fail") << "\n";
  Emitter(out, c.machine).emit("sympow", r, os.str());
  if (!r.p_claim_holds || !r.uk_claim_holds) {
    err << "check failed: " << (!r.p_claim_holds ? "dim P[j]_i >= dim U_i" : "dim U[k]_i >= k dim U_i") << "\n";
    return 1;
  }
  return 0;
}

int cmd_torus_decompose(const Common& c, std::ostream& out) {
  const auto doc = load_document(c);
  if (doc.kind != GroupKind::Torus) throw InputError("torus-decompose expects a torus document");
  const auto d = line_decomposition(doc.module_t);
  std::ostringstream os;
  os << "fixed dimension: " << d.fixed_dim << "\n";
  for (const auto& [line, rep] : d.lines) {
    os << "line " << to_string(line) << ": dim " << rep.dim() << " weights " << rep_text(rep) << "\n";
  }
  Emitter(out, c.machine).emit("torus-decompose", d, os.str());
  return 0;
}

int cmd_torus_example(const Common& c, std::int64_t a, std::int64_t b, std::int64_t cc, int samples, double tol,
                      bool serial, std::ostream& out, std::ostream& err) {
  const auto map = circle_example(a, b, cc);
  TorusExampleResult r;
  r.params = circle_params(a, b, cc);
  r.source_layout = map.source_layout;
  r.target_layout = map.target_layout;
  r.report = verify_equivariance(map, {samples, tol, c.effective_seed(), serial ? Execution::Serial : Execution::Parallel});
  std::ostringstream os;
  const auto& p = r.params;
  os << "map: (x, y) -> (x^" << p.b << " + y^" << p.a << ", x^" << p.a_prime << " * conj(y)^" << p.b_prime
     << ")\n";
  os << "a' = " << p.a_prime << ", b' = " << p.b_prime << ", aa' - bb' = " << p.a * p.a_prime - p.b * p.b_prime
     << "\n";
  os << "source weights: " << to_string(r.source_layout[0]) << " " << to_string(r.source_layout[1]) << "\n";
  os << "target weights: " << to_string(r.target_layout[0]) << " " << to_string(r.target_layout[1]) << "\n";
  std::ostringstream num;
  num.precision(3);
  num << std::scientific << r.report.max_residual;
  os << "equivariance: " << (r.report.max_residual < tol ? "pass" : "fail") << " (max residual " << num.str()
     << " over " << r.report.samples << " samples, seed " << r.report.seed << ")\n";
  if (r.report.min_norm) {
    std::ostringstream mn;
    mn.precision(6);
    mn << *r.report.min_norm;
    os << "min |f(x)| on sphere: " << mn.str() << "\n";
  }
  if (r.report.symbolic_weights) os << "symbolic weights: " << (*r.report.symbolic_weights ? "pass" : "fail") << "\n";
  if (r.report.symbolic_zero_set) {
    os << "symbolic Zero(f) = {0}: " << (*r.report.symbolic_zero_set ? "pass" : "fail") << "\n";
  }
  Emitter(out, c.machine).emit("torus-example", r, os.str());
  if (!r.report.pass) {
    err << "verification failed: max residual " << num.str() << " with tolerance " << tol << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Euler-class certificates and zero-set dimension bounds for (Z/2)^l and torus maps", "eulerlab"};
  app.require_subcommand(1, 1);
  std::map<std::string, Common> common;

  auto* reduce_cmd = app.add_subcommand("reduce", "Normal form of a polynomial modulo a triangular system");
  std::string field = "F2", poly;
  std::size_t nvars = 0;
  std::vector<std::string> gens;
  reduce_cmd->add_option("--field", field, "F2 or Q")->capture_default_str();
  reduce_cmd->add_option("--vars", nvars, "Number of variables")->required();
  reduce_cmd->add_option("--poly", poly, "Polynomial to reduce")->required();
  reduce_cmd->add_option("--gen", gens, "Generator g_j (repeat once per variable, in order)")->required();
  add_common(reduce_cmd, common["reduce"], false);

  auto* euler_cmd = app.add_subcommand("euler-check", "Nonvanishing of e(V) modulo the presentation of U");
  add_common(euler_cmd, common["euler-check"], true);

  auto* flag_cmd = app.add_subcommand("flag-find", "Fixed subgroup and flag with dim U_i > dim V_i");
  add_common(flag_cmd, common["flag-find"], true);

  auto* bound_cmd = app.add_subcommand("bound", "Certified lower bound for the zero-set dimension");
  std::string theorem;
  int bound_n = 0;
  bound_cmd->add_option("--theorem", theorem, "free-zero-set | stiefel | torus-interior | torus-annulus")
      ->required()
      ->check(CLI::IsMember({"free-zero-set", "stiefel", "torus-interior", "torus-annulus"}));
  auto* bound_n_opt = bound_cmd->add_option("-n", bound_n, "Stiefel ambient dimension n");
  add_common(bound_cmd, common["bound"], true);

  auto* ring_cmd = app.add_subcommand("flag-ring", "Flag-manifold cohomology ring and its checks");
  int ring_n = 0, ring_l = 0, ring_samples = 100;
  std::vector<int> ring_bounds;
  bool ring_verify = false;
  ring_cmd->add_option("-n", ring_n, "Ambient dimension n")->required();
  ring_cmd->add_option("-l", ring_l, "Flag length l")->required();
  ring_cmd->add_option("--bounds", ring_bounds, "Nondecreasing n_1,...,n_l")->delimiter(',');
  ring_cmd->add_flag("--verify", ring_verify, "Run the verification items");
  ring_cmd->add_option("--samples", ring_samples, "Random Q samples for the e(Q) item")->capture_default_str();
  add_common(ring_cmd, common["flag-ring"], false);

  auto* sym_cmd = app.add_subcommand("sympow", "Symmetric power table, or minimal k for U[k] when V is given");
  int sym_d = 0;
  auto* sym_d_opt = sym_cmd->add_option("-d", sym_d, "Degree (table) or required dim U[k] - dim V");
  add_common(sym_cmd, common["sympow"], true);

  auto* tdec_cmd = app.add_subcommand("torus-decompose", "Split a torus representation into rational lines");
  add_common(tdec_cmd, common["torus-decompose"], true);

  auto* tex_cmd = app.add_subcommand("torus-example", "Circle map (x^b + y^a, x^a' conj(y)^b') and its checks");
  std::int64_t ta = 0, tb = 0, tc = 0;
  int t_samples = 10000;
  double t_tol = 1e-9;
  bool t_serial = false;
  tex_cmd->add_option("-a", ta, "a")->required();
  tex_cmd->add_option("-b", tb, "b")->required();
  tex_cmd->add_option("-c", tc, "c")->required();
  tex_cmd->add_option("--samples", t_samples, "Sample count")->capture_default_str();
  tex_cmd->add_option("--tol", t_tol, "Residual tolerance")->capture_default_str();
  tex_cmd->add_flag("--serial", t_serial, "Use the serial sampling loop");
  add_common(tex_cmd, common["torus-example"], false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (reduce_cmd->parsed()) return cmd_reduce(common["reduce"], field, nvars, poly, gens, out);
    if (euler_cmd->parsed()) return cmd_euler_check(common["euler-check"], out, err);
    if (flag_cmd->parsed()) return cmd_flag_find(common["flag-find"], out);
    if (bound_cmd->parsed()) return cmd_bound(common["bound"], theorem, bound_n_opt, bound_n, out, err);
    if (ring_cmd->parsed()) {
      return cmd_flag_ring(common["flag-ring"], ring_n, ring_l, ring_bounds, ring_verify, ring_samples, out, err);
    }
    if (sym_cmd->parsed()) return cmd_sympow(common["sympow"], sym_d_opt, sym_d, out, err);
    if (tdec_cmd->parsed()) return cmd_torus_decompose(common["torus-decompose"], out);
    if (tex_cmd->parsed()) {
      return cmd_torus_example(common["torus-example"], ta, tb, tc, t_samples, t_tol, t_serial, out, err);
    }
  } catch (const HypothesisFailure& e) {
    err << "hypothesis failed: " << e.what() << "\n";
    return 1;
  } catch (const AssemblyError& e) {
    err << "assembly failed: " << e.what() << "\n";
    return 1;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace eulerlab::cli

#include "eulerlab/bounds.hpp"

#include <algorithm>
#include <sstream>

#include "eulerlab/cohomology.hpp"
#include "eulerlab/flagsearch.hpp"

namespace eulerlab {

using nlohmann::json;

std::string_view to_string(ItemStatus s) {
  switch (s) {
    case ItemStatus::Pass:
      return "pass";
    case ItemStatus::Fail:
      return "fail";
    case ItemStatus::Assumed:
      return "assumed";
  }
  return "fail";
}

const HypothesisItem* BoundReport::first_failure() const {
  for (const auto& h : hypotheses) {
    if (h.status == ItemStatus::Fail) return &h;
  }
  return nullptr;
}

namespace {

std::string dims_string(const std::vector<std::int64_t>& d) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  os << ']';
  return os.str();
}

json chars_json(const std::vector<CharF2>& cs, int rank) {
  json a = json::array();
  for (auto c : cs) a.push_back(c.coords(rank));
  return a;
}

json weights_json(const std::vector<Weight>& ws) {
  json a = json::array();
  for (const auto& w : ws) a.push_back(w.coords);
  return a;
}

json relations_json(const Presentation& p) {
  json a = json::array();
  for (const auto& g : p.relations.generators()) a.push_back(g.to_string());
  return a;
}

// Appends an item; returns whether it passed.
bool check(BoundReport& r, std::string description, bool ok, std::string evidence) {
  r.hypotheses.push_back({std::move(description), ok ? ItemStatus::Pass : ItemStatus::Fail,
                          std::move(evidence)});
  return ok;
}

}  // namespace

BoundReport bound_free_zero_set(const RepE& u, const RepE& v) {
  if (u.rank() != v.rank()) throw StructuralError("U and V have different ranks");
  BoundReport r;
  r.theorem = "free-zero-set";
  const auto gap = u.dim() - v.dim();

  if (!check(r, "V^E = 0", v.fixed_dim() == 0, "dim V^E = " + std::to_string(v.fixed_dim()))) return r;
  if (!check(r, "dim U - dim V > dim U^E", gap > u.fixed_dim(),
             std::to_string(gap) + (gap > u.fixed_dim() ? " > " : " <= ") +
                 std::to_string(u.fixed_dim()))) {
    return r;
  }

  const Subgroup f = best_fixed_subgroup(u, v);
  const RepE uf = fixed_subrep(u, f);
  const RepE vf = fixed_subrep(v, f);
  check(r, "F maximal with dim U^F - dim V^F >= dim U - dim V", true,
        "dim F = " + std::to_string(f.dim()) + ", dim U^F - dim V^F = " +
            std::to_string(uf.dim() - vf.dim()));

  FlagE flag;
  try {
    flag = find_flag(uf, vf);
  } catch (const HypothesisFailure& e) {
    check(r, "dim U_i > dim V_i for every step of a flag of E/F", false, e.what());
    return r;
  }
  const auto ud = decompose(uf, flag).dims();
  const auto vd = decompose(vf, flag).dims();
  const bool steps_ok = std::equal(ud.begin(), ud.end(), vd.begin(), std::greater<>{});
  if (!check(r, "dim U_i > dim V_i for every step of a flag of E/F", steps_ok,
             "dim U_i = " + dims_string(ud) + ", dim V_i = " + dims_string(vd))) {
    return r;
  }

  const auto nv = euler_nonvanishing(uf, vf, flag);
  const auto ann = annihilator_basis(f);
  std::vector<CharF2> lifted;
  for (auto t : flag.dual_basis()) lifted.push_back(lift_character(t, ann));

  json subgroup_basis = json::array();
  for (auto b : f.basis()) subgroup_basis.push_back(CharF2{b}.coords(f.rank()));
  r.witness = {
      {"subgroup", {{"rank", f.rank()}, {"basis", subgroup_basis}}},
      {"quotient_rank", flag.rank()},
      {"flag", chars_json(flag.dual_basis(), flag.rank())},
      {"flag_in_dual", chars_json(lifted, u.rank())},
      {"u_dims", ud},
      {"v_dims", vd},
      {"relations", relations_json(nv.presentation)},
      {"euler_class", nv.euler_class.to_string()},
      {"certificate", nv.normal_form.to_string()},
  };
  if (!check(r, "e(V^F) nonzero in H*(X; F2)", nv.nonvanishing, "normal form " + nv.normal_form.to_string())) {
    return r;
  }
  r.bound = gap;
  r.notes.push_back("zero-set restricted to U^F contains a compact subspace on which E/F (rank " +
                    std::to_string(flag.rank()) + ") acts freely");
  return r;
}

namespace {

// Flags whose steps each add exactly one summand of P, in permutation order.
template <class Key>
std::vector<std::vector<Key>> orderings(const RepTable<Key>& p, bool& well_formed) {
  std::vector<Key> keys;
  well_formed = true;
  for (const auto& [k, m] : p.entries()) {
    if (m != 1) well_formed = false;
    keys.push_back(k);
  }
  if (static_cast<int>(keys.size()) != p.rank()) well_formed = false;
  std::vector<std::vector<Key>> out;
  if (!well_formed) return out;
  do {
    out.push_back(keys);
  } while (std::next_permutation(keys.begin(), keys.end()));
  return out;
}

template <class Key>
std::vector<Key> step_keys(const Decomposition<RepTable<Key>>& d) {
  std::vector<Key> out;
  for (const auto& part : d.parts) out.push_back(part.entries().begin()->first);
  return out;
}

bool all_ones(const std::vector<std::int64_t>& d) {
  return std::all_of(d.begin(), d.end(), [](auto x) { return x == 1; });
}

bool q_fits(const std::vector<std::int64_t>& qd, int n) {
  for (std::size_t i = 0; i < qd.size(); ++i) {
    if (qd[i] > n - static_cast<std::int64_t>(i + 1)) return false;
  }
  return true;
}

std::string q_bound_string(const std::vector<std::int64_t>& qd, int n) {
  std::vector<std::int64_t> caps;
  for (std::size_t i = 0; i < qd.size(); ++i) caps.push_back(n - static_cast<std::int64_t>(i + 1));
  return "dim Q_i = " + dims_string(qd) + ", n - i = " + dims_string(caps);
}

template <class Rep, class Flag, class MakeFlag>
std::optional<Flag> choose_stiefel_flag(BoundReport& r, const Rep& p, const Rep& q, int n,
                                        const std::optional<Flag>& given, MakeFlag make_flag) {
  const int l = p.rank();
  std::optional<Flag> chosen;
  if (given) {
    if (given->rank() != l) throw StructuralError("flag rank does not match representation rank");
    chosen = given;
  } else {
    bool well_formed = false;
    std::optional<Flag> first_valid;
    for (auto& keys : orderings(p, well_formed)) {
      std::optional<Flag> candidate;
      try {
        candidate = make_flag(l, keys);
      } catch (const InputError&) {
        continue;  // dependent summands
      }
      if (!all_ones(decompose(p, *candidate).dims())) continue;
      if (!first_valid) first_valid = candidate;
      if (q_fits(decompose(q, *candidate).dims(), n)) {
        chosen = candidate;
        break;
      }
    }
    if (!chosen) chosen = first_valid;
  }
  const auto pd = chosen ? decompose(p, *chosen).dims() : std::vector<std::int64_t>{};
  if (!check(r, "dim P_i = 1 for i = 1..l", chosen && all_ones(pd),
             chosen ? "dim P_i = " + dims_string(pd)
                    : "P must consist of l linearly independent summands of multiplicity 1")) {
    return std::nullopt;
  }
  const auto qd = decompose(q, *chosen).dims();
  if (!check(r, "dim Q_i <= n - i for i = 1..l", q_fits(qd, n), q_bound_string(qd, n))) {
    return std::nullopt;
  }
  return chosen;
}

}  // namespace

BoundReport bound_stiefel(const RepE& p, const RepE& q, int n, const std::optional<FlagE>& flag) {
  if (p.rank() != q.rank()) throw StructuralError("P and Q have different ranks");
  BoundReport r;
  r.theorem = "stiefel-real";
  const int l = p.rank();
  if (!check(r, "P^E = 0", p.fixed_dim() == 0, "dim P^E = " + std::to_string(p.fixed_dim()))) return r;
  if (!check(r, "Q^E = 0", q.fixed_dim() == 0, "dim Q^E = " + std::to_string(q.fixed_dim()))) return r;
  if (!check(r, "n > l", n > l, "n = " + std::to_string(n) + ", l = " + std::to_string(l))) return r;

  auto chosen = choose_stiefel_flag(r, p, q, n, flag, [](int rank, const std::vector<CharF2>& keys) {
    return FlagE(rank, keys);
  });
  if (!chosen) return r;

  // t_i is the Euler class of the line P_i, so work in the basis of P's characters.
  const FlagE p_flag(l, step_keys(decompose(p, *chosen)));
  const auto ring = flag_ring(n, l);
  const Poly eq = euler_poly(q, p_flag);
  const Poly nf = reduce(eq, ring.relations);
  r.witness = {
      {"flag", chars_json(p_flag.dual_basis(), l)},
      {"q_dims", decompose(q, p_flag).dims()},
      {"relations", relations_json(ring)},
      {"euler_class", eq.to_string()},
      {"certificate", nf.to_string()},
  };
  if (!check(r, "e(Q) nonzero in H*(O(P,R^n)/E; F2)", !nf.is_zero(), "normal form " + nf.to_string())) {
    return r;
  }

  const std::int64_t dim_q = q.dim();
  const std::int64_t consistent = flag_top_degree(n, l) - dim_q;
  const std::int64_t printed = static_cast<std::int64_t>(l) * n - static_cast<std::int64_t>(l) * (l - 1) / 2 - dim_q;
  r.bound = consistent;
  r.witness["dimension_consistent_bound"] = consistent;
  r.witness["printed_bound"] = printed;
  r.witness["stiefel_dimension"] = flag_top_degree(n, l);
  r.notes.push_back("discrepancy: printed formula ln - l(l-1)/2 - dim Q = " + std::to_string(printed) +
                    " exceeds the dimension-consistent value ln - l(l+1)/2 - dim Q = " +
                    std::to_string(consistent) + " (dim O(P,R^n) = ln - l(l+1)/2); the latter is authoritative");
  if (consistent >= 0) r.notes.push_back("zero-set is non-empty");
  return r;
}

BoundReport bound_stiefel(const RepT& p, const RepT& q, int n, const std::optional<RationalFlag>& flag) {
  if (p.rank() != q.rank()) throw StructuralError("P and Q have different ranks");
  BoundReport r;
  r.theorem = "stiefel-complex";
  const int l = p.rank();
  if (!check(r, "P^T = 0", p.fixed_dim() == 0, "dim_C P^T = " + std::to_string(p.fixed_dim()))) return r;
  if (!check(r, "Q^T = 0", q.fixed_dim() == 0, "dim_C Q^T = " + std::to_string(q.fixed_dim()))) return r;
  if (!check(r, "n > l", n > l, "n = " + std::to_string(n) + ", l = " + std::to_string(l))) return r;

  auto chosen = choose_stiefel_flag(r, p, q, n, flag, [](int rank, const std::vector<Weight>& keys) {
    return RationalFlag(rank, keys);
  });
  if (!chosen) return r;

  // Coordinates in the basis of P's weights themselves (not their primitive
  // representatives): t_i is the Euler class of P_i.
  const auto pi = step_keys(decompose(p, *chosen));
  linalg::QMat m;
  for (const auto& w : pi) {
    linalg::QVec row;
    for (auto x : w.coords) row.emplace_back(static_cast<long>(x));
    m.push_back(std::move(row));
  }
  const auto inv = *linalg::q_inverse(m);
  const auto ring = flag_ring(n, l, std::nullopt, Field::Q);
  Poly eq = Poly::constant(Field::Q, l, 1);
  for (const auto& [alpha, mult] : q.entries()) {
    linalg::QVec c(l, 0);
    for (int i = 0; i < l; ++i) {
      for (int j = 0; j < l; ++j) c[j] += mpq_class(static_cast<long>(alpha.coords[i])) * inv[i][j];
    }
    eq = eq * Poly::linear_form(Field::Q, c).pow(static_cast<unsigned>(mult));
  }
  const Poly nf = reduce(eq, ring.relations);
  r.witness = {
      {"flag", weights_json(pi)},
      {"q_dims", decompose(q, *chosen).dims()},
      {"relations", relations_json(ring)},
      {"euler_class", eq.to_string()},
      {"certificate", nf.to_string()},
  };
  if (!check(r, "e(Q) nonzero in H*_T(U(P,C^n); Q)", !nf.is_zero(), "normal form " + nf.to_string())) {
    return r;
  }
  const std::int64_t bound = 2 * static_cast<std::int64_t>(l) * n - static_cast<std::int64_t>(l) * l - 2 * q.dim();
  r.bound = bound;
  r.witness["stiefel_dimension"] = 2 * static_cast<std::int64_t>(l) * n - static_cast<std::int64_t>(l) * l;
  r.notes.push_back("zero-set is a non-empty free T-space");
  return r;
}

namespace {

// v in Z^l with alpha(v) != 0 for every nonzero weight of u and v; tries
// (1, k, k^2, ...) for k = 1, 2, ...
std::vector<std::int64_t> generic_cocharacter(const RepT& u, const RepT& v) {
  const int l = u.rank();
  for (std::int64_t k = 1;; ++k) {
    std::vector<std::int64_t> cand(l);
    std::int64_t pw = 1;
    for (int i = 0; i < l; ++i) {
      cand[i] = pw;
      pw *= k;
    }
    auto good = [&](const RepT& rep) {
      return std::all_of(rep.entries().begin(), rep.entries().end(), [&](const auto& e) {
        std::int64_t s = 0;
        for (int i = 0; i < l; ++i) s += e.first.coords[i] * cand[i];
        return e.first.is_trivial() || s != 0;
      });
    };
    if (good(u) && good(v)) return cand;
  }
}

}  // namespace

BoundReport bound_torus(const RepT& u, const RepT& v, TorusVariant variant) {
  if (u.rank() != v.rank()) throw StructuralError("U and V have different ranks");
  BoundReport r;
  r.theorem = variant == TorusVariant::Interior ? "torus-interior" : "torus-annulus";
  if (!check(r, "U^T = 0", u.fixed_dim() == 0, "dim_C U^T = " + std::to_string(u.fixed_dim()))) return r;
  if (!check(r, "V^T = 0", v.fixed_dim() == 0, "dim_C V^T = " + std::to_string(v.fixed_dim()))) return r;
  const auto gap = u.dim() - v.dim();

  if (variant == TorusVariant::Interior) {
    RationalFlag flag;
    try {
      flag = find_rational_flag(u, v);
    } catch (const HypothesisFailure& e) {
      check(r, "dim U_i > dim V_i for every step of a rational flag", false, e.what());
      return r;
    }
    const auto nv = euler_nonvanishing(u, v, flag);
    check(r, "dim U_i > dim V_i for every step of a rational flag", true,
          "dim U_i = " + dims_string(nv.u_dims) + ", dim V_i = " + dims_string(nv.v_dims));
    r.witness = {
        {"flag", weights_json(flag.dual_basis())},
        {"u_dims", nv.u_dims},
        {"v_dims", nv.v_dims},
        {"relations", relations_json(nv.presentation)},
        {"euler_class", nv.euler_class.to_string()},
        {"certificate", nv.normal_form.to_string()},
    };
    if (!check(r, "e(V) nonzero in H*_T(X; Q)", nv.nonvanishing, "normal form " + nv.normal_form.to_string())) {
      return r;
    }
    r.bound = 2 * gap;
    r.notes.push_back("zero-set contains a compact T-subspace with finite isotropy groups");
    return r;
  }

  if (!check(r, "dim_C U > dim_C V", gap > 0,
             std::to_string(u.dim()) + (gap > 0 ? " > " : " <= ") + std::to_string(v.dim()))) {
    return r;
  }
  // Restrict to a circle acting with no fixed vectors: H*(S(U)/circle; Q) = Q[t]/(t^{dim U}).
  const auto cochar = generic_cocharacter(u, v);
  mpq_class coeff = 1;
  for (const auto& [alpha, m] : v.entries()) {
    std::int64_t s = 0;
    for (int i = 0; i < u.rank(); ++i) s += alpha.coords[i] * cochar[i];
    for (std::int64_t k = 0; k < m; ++k) coeff *= static_cast<long>(s);
  }
  const TriangularSystem sphere({Poly::monomial(Field::Q, Monomial::variable(1, 0, static_cast<std::uint32_t>(u.dim())))});
  const Poly ev = Poly::monomial(Field::Q, Monomial::variable(1, 0, static_cast<std::uint32_t>(v.dim())), coeff);
  const Poly nf = reduce(ev, sphere);
  r.witness = {
      {"cocharacter", cochar},
      {"relations", json::array({sphere.generators()[0].to_string()})},
      {"euler_class", ev.to_string()},
      {"certificate", nf.to_string()},
  };
  if (!check(r, "e(V) nonzero in H*_circle(S(U); Q)", !nf.is_zero(), "normal form " + nf.to_string())) {
    return r;
  }
  r.hypotheses.push_back({"phi(0) < 0 and phi(x) > 0 for large |x|", ItemStatus::Assumed,
                          "boundary condition assumed; phi is not part of the input"});
  r.bound = 2 * gap - 1;
  r.notes.push_back("bound applies to Zero(f) intersected with Zero(phi)");
  return r;
}

}  // namespace eulerlab

#include "eulerlab/flagsearch.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace eulerlab {

using linalg::F2Vec;

GapTable gap_table(const RepE& u, const RepE& v) {
  GapTable g;
  for (const auto& [alpha, m] : u.entries()) g[alpha] += m;
  for (const auto& [alpha, m] : v.entries()) g[alpha] -= m;
  return g;
}

namespace {

void require_same_rank(const RepE& u, const RepE& v) {
  if (u.rank() != v.rank()) throw StructuralError("U and V have different ranks");
}

void require_fixed_free(const RepE& v) {
  if (v.fixed_dim() != 0) {
    throw HypothesisFailure("V^E = 0 fails: dim V^E = " + std::to_string(v.fixed_dim()));
  }
}

void require_gap(const RepE& u, const RepE& v) {
  const auto gap = u.dim() - v.dim();
  if (gap <= u.fixed_dim()) {
    throw HypothesisFailure("dim U - dim V > dim U^E fails: " + std::to_string(gap) +
                            " <= " + std::to_string(u.fixed_dim()));
  }
}

}  // namespace

FlagE find_flag(const RepE& u, const RepE& v) {
  require_same_rank(u, v);
  require_fixed_free(v);
  require_gap(u, v);
  const int l = u.rank();
  if (l > 20) throw ResourceError("find_flag is limited to rank 20");

  const GapTable gaps = gap_table(u, v);
  auto gap_of = [&](F2Vec a) {
    auto it = gaps.find(CharF2{a});
    return it == gaps.end() ? std::int64_t{0} : it->second;
  };

  std::vector<CharF2> basis;
  std::vector<F2Vec> prev;  // rref basis of E^{i-1}
  for (int i = 1; i <= l; ++i) {
    const auto prev_elems = linalg::f2_span_elements(prev);
    std::set<F2Vec> seen;
    bool found = false;
    std::int64_t best_score = 0;
    F2Vec best_rep = 0;
    for (const auto& [alpha, d] : gaps) {
      if (alpha.is_trivial() || linalg::f2_in_span(prev, alpha.bits)) continue;
      // E' = E^{i-1} + span(alpha); its new elements form the coset alpha + E^{i-1}.
      F2Vec rep = alpha.bits;
      for (F2Vec e : prev_elems) rep = std::min(rep, alpha.bits ^ e);
      if (!seen.insert(rep).second) continue;
      std::int64_t score = 0;
      for (F2Vec e : prev_elems) score += gap_of(rep ^ e);
      if (score <= 0) continue;
      if (!found || score > best_score || (score == best_score && rep < best_rep)) {
        found = true;
        best_score = score;
        best_rep = rep;
      }
    }
    if (!found) {
      throw HypothesisFailure("no admissible extension at step " + std::to_string(i) +
                              ": every E' has gap sum <= 0 (dim U_" + std::to_string(i) +
                              " > dim V_" + std::to_string(i) + " unattainable)");
    }
    basis.push_back(CharF2{best_rep});
    prev.push_back(best_rep);
    prev = linalg::f2_rref(std::move(prev));
  }
  return FlagE(l, std::move(basis));
}

std::vector<Subgroup> all_subgroups(int rank) {
  if (rank < 0) throw InputError("negative rank");
  if (rank > 6) throw ResourceError("subgroup enumeration is limited to rank <= 6 (got " +
                                    std::to_string(rank) + ")");
  const F2Vec nelem = F2Vec{1} << rank;
  // A subspace is stored as its membership mask over the 2^rank elements.
  std::unordered_set<std::uint64_t> seen{1};
  std::vector<std::uint64_t> frontier{1};
  std::vector<std::uint64_t> all{1};
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (auto mask : frontier) {
      for (F2Vec v = 1; v < nelem; ++v) {
        if ((mask >> v) & 1u) continue;
        std::uint64_t grown = mask;
        for (F2Vec e = 0; e < nelem; ++e) {
          if ((mask >> e) & 1u) grown |= std::uint64_t{1} << (e ^ v);
        }
        if (seen.insert(grown).second) {
          next.push_back(grown);
          all.push_back(grown);
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out;
  out.reserve(all.size());
  for (auto mask : all) {
    std::vector<F2Vec> elems;
    for (F2Vec e = 0; e < nelem; ++e) {
      if ((mask >> e) & 1u) elems.push_back(e);
    }
    out.emplace_back(rank, std::move(elems));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.basis() < b.basis();
  });
  return out;
}

std::vector<std::int64_t> fixed_gaps(const RepE& u, const RepE& v, const std::vector<Subgroup>& subgroups,
                                     Execution exec) {
  const GapTable gaps = gap_table(u, v);
  const std::vector<std::pair<CharF2, std::int64_t>> flat(gaps.begin(), gaps.end());
  std::vector<std::int64_t> out(subgroups.size(), 0);
  auto kernel = [&](std::size_t s) {
    std::int64_t acc = 0;
    for (const auto& [alpha, d] : flat) {
      if (subgroups[s].annihilated_by(alpha)) acc += d;
    }
    out[s] = acc;
  };
  const auto n = static_cast<std::int64_t>(subgroups.size());
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t s = 0; s < n; ++s) kernel(static_cast<std::size_t>(s));
  } else {
    for (std::int64_t s = 0; s < n; ++s) kernel(static_cast<std::size_t>(s));
  }
  return out;
}

Subgroup best_fixed_subgroup(const RepE& u, const RepE& v, Execution exec) {
  require_same_rank(u, v);
  require_fixed_free(v);
  const auto subgroups = all_subgroups(u.rank());
  const auto gaps = fixed_gaps(u, v, subgroups, exec);
  const auto threshold = u.dim() - v.dim();

  std::vector<std::size_t> qualifying;
  for (std::size_t s = 0; s < subgroups.size(); ++s) {
    if (gaps[s] >= threshold) qualifying.push_back(s);
  }
  // subgroups are sorted by (dim, basis), so the first maximal candidate of the
  // largest dimension is the deterministic choice.
  const Subgroup* best = nullptr;
  for (auto s : qualifying) {
    const Subgroup& f = subgroups[s];
    const bool maximal = std::none_of(qualifying.begin(), qualifying.end(), [&](std::size_t t) {
      return subgroups[t].dim() > f.dim() && subgroups[t].contains(f);
    });
    if (!maximal) continue;
    if (best == nullptr || f.dim() > best->dim()) best = &f;
  }
  // The trivial subgroup always qualifies, so best is set.
  return *best;
}

FlagFindResult find_flag_with_subgroup(const RepE& u, const RepE& v) {
  require_same_rank(u, v);
  require_fixed_free(v);
  require_gap(u, v);
  FlagFindResult r;
  r.subgroup = best_fixed_subgroup(u, v);
  r.u_fixed = fixed_subrep(u, r.subgroup);
  r.v_fixed = fixed_subrep(v, r.subgroup);
  r.flag = find_flag(r.u_fixed, r.v_fixed);
  const auto ann = annihilator_basis(r.subgroup);
  for (auto t : r.flag.dual_basis()) r.lifted_flag.push_back(lift_character(t, ann));
  r.u_dims = decompose(r.u_fixed, r.flag).dims();
  r.v_dims = decompose(r.v_fixed, r.flag).dims();
  return r;
}

RationalFlag find_rational_flag(const RepT& u, const RepT& v) {
  if (u.rank() != v.rank()) throw StructuralError("U and V have different ranks");
  if (u.fixed_dim() != 0) {
    throw HypothesisFailure("U^T = 0 fails: dim_C U^T = " + std::to_string(u.fixed_dim()));
  }
  if (v.fixed_dim() != 0) {
    throw HypothesisFailure("V^T = 0 fails: dim_C V^T = " + std::to_string(v.fixed_dim()));
  }
  const int l = u.rank();

  std::vector<Weight> candidates;
  for (const auto& [alpha, m] : u.entries()) candidates.push_back(primitive(alpha));
  std::sort(candidates.begin(), candidates.end(), colex_less);
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::map<Weight, std::int64_t> gaps;
  for (const auto& [alpha, m] : u.entries()) gaps[alpha] += m;
  for (const auto& [alpha, m] : v.entries()) gaps[alpha] -= m;

  auto to_q = [](const Weight& w) {
    linalg::QVec r;
    for (auto x : w.coords) r.emplace_back(static_cast<long>(x));
    return r;
  };

  std::vector<Weight> chosen;
  linalg::QMat prev;
  for (int i = 1; i <= l; ++i) {
    bool found = false;
    std::int64_t best_score = 0;
    std::size_t best = 0;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const auto gq = to_q(candidates[c]);
      if (linalg::q_in_span(prev, gq)) continue;
      auto rows = prev;
      rows.push_back(gq);
      const auto next = linalg::q_rref(std::move(rows));
      std::int64_t score = 0;
      for (const auto& [alpha, d] : gaps) {
        const auto aq = to_q(alpha);
        if (linalg::q_in_span(next, aq) && !linalg::q_in_span(prev, aq)) score += d;
      }
      if (score > 0 && (!found || score > best_score)) {
        found = true;
        best_score = score;
        best = c;
      }
    }
    if (!found) {
      throw HypothesisFailure("no admissible extension at step " + std::to_string(i) +
                              ": no rational line of U gives dim U_" + std::to_string(i) +
                              " > dim V_" + std::to_string(i));
    }
    chosen.push_back(candidates[best]);
    prev.push_back(to_q(candidates[best]));
    prev = linalg::q_rref(std::move(prev));
  }
  return RationalFlag(l, std::move(chosen));
}

}  // namespace eulerlab

#include "eulerlab/sympow.hpp"

#include <algorithm>
#include <map>

namespace eulerlab {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceError("symmetric power multiplicity overflows 64 bits");
  return r;
}

constexpr int kMaxEmbeddingK = 4096;

}  // namespace

RepE sym_multiplicities(const RepE& u, int degree) {
  if (degree < 0) throw InputError("symmetric power degree must be nonnegative");
  // counts[deg][label]: monomials of that degree in the variables processed so far.
  std::vector<std::map<std::uint64_t, std::int64_t>> counts(degree + 1);
  counts[0][0] = 1;
  for (const auto& [alpha, m] : u.entries()) {
    for (std::int64_t copy = 0; copy < m; ++copy) {
      std::vector<std::map<std::uint64_t, std::int64_t>> next(degree + 1);
      for (int deg = 0; deg <= degree; ++deg) {
        for (const auto& [label, n] : counts[deg]) {
          for (int e = 0; deg + e <= degree; ++e) {
            const std::uint64_t lab = (e % 2 == 1) ? (label ^ alpha.bits) : label;
            auto& slot = next[deg + e][lab];
            slot = checked_add(slot, n);
          }
        }
      }
      counts = std::move(next);
    }
  }
  RepE out(u.rank());
  for (const auto& [label, n] : counts[degree]) out.add(CharF2{label}, n);
  return out;
}

bool spans_dual(const RepE& u) {
  std::vector<linalg::F2Vec> rows;
  for (const auto& [alpha, m] : u.entries()) rows.push_back(alpha.bits);
  return linalg::f2_rank(rows) == u.rank();
}

FlagE spanning_flag(const RepE& u) {
  std::vector<CharF2> chosen;
  std::vector<linalg::F2Vec> span;
  for (const auto& [alpha, m] : u.entries()) {
    if (alpha.is_trivial() || linalg::f2_in_span(span, alpha.bits)) continue;
    chosen.push_back(alpha);
    span.push_back(alpha.bits);
    span = linalg::f2_rref(std::move(span));
  }
  if (static_cast<int>(chosen.size()) != u.rank()) {
    throw HypothesisFailure("intersection of ker(alpha) over characters of U is nonzero");
  }
  return FlagE(u.rank(), std::move(chosen));
}

EmbeddingResult min_embedding_k(const RepE& u, const RepE& v, int d, const std::optional<FlagE>& flag) {
  if (u.rank() != v.rank()) throw StructuralError("U and V have different ranks");
  if (d < 0) throw InputError("target dimension d must be nonnegative");
  if (u.dim() == 0) throw HypothesisFailure("U != 0 fails: U = 0");
  if (!spans_dual(u)) {
    throw HypothesisFailure("intersection of ker(alpha) over characters of U is nonzero");
  }
  if (v.fixed_dim() != 0) throw HypothesisFailure("V^E = 0 fails: dim V^E = " + std::to_string(v.fixed_dim()));

  EmbeddingResult r;
  r.target_dim = d;
  r.flag = flag ? *flag : spanning_flag(u);
  if (r.flag.rank() != u.rank()) throw StructuralError("flag rank does not match representation rank");
  r.u_dims = decompose(u, r.flag).dims();
  r.v_dims = decompose(v, r.flag).dims();
  for (std::size_t i = 0; i < r.u_dims.size(); ++i) {
    if (r.u_dims[i] == 0) throw HypothesisFailure("U_i != 0 fails: U_" + std::to_string(i + 1) + " = 0");
  }
  r.v_total = v.dim();

  const auto l = r.u_dims.size();
  std::vector<std::int64_t> uk(l, 0);
  std::int64_t total = 0;
  r.p_claim_holds = true;
  for (int k = 1; k <= kMaxEmbeddingK; ++k) {
    const RepE pj = sym_multiplicities(u, 2 * k - 1);
    const auto pd = decompose(pj, r.flag).dims();
    r.p_dims.push_back(pd);
    for (std::size_t i = 0; i < l; ++i) {
      uk[i] = checked_add(uk[i], pd[i]);
      if (pd[i] < r.u_dims[i]) r.p_claim_holds = false;
    }
    total = checked_add(total, pj.dim());
    bool ok = total - r.v_total >= d;
    for (std::size_t i = 0; i < l && ok; ++i) ok = uk[i] > r.v_dims[i];
    if (ok) {
      r.k = k;
      r.uk_dims = uk;
      r.uk_total = total;
      r.uk_claim_holds = true;
      for (std::size_t i = 0; i < l; ++i) {
        if (uk[i] < k * r.u_dims[i]) r.uk_claim_holds = false;
      }
      return r;
    }
  }
  throw ResourceError("no k <= " + std::to_string(kMaxEmbeddingK) + " satisfies the embedding inequalities");
}

}  // namespace eulerlab

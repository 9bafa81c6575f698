#pragma once

// Character multiplicities of symmetric powers S^d(U*) of real E-representations,
// and the smallest odd-degree polynomial module U[k] that satisfies the flag
// inequalities.

#include <cstdint>
#include <optional>
#include <vector>

#include "eulerlab/rep.hpp"

namespace eulerlab {

/// Multiplicity of beta = number of degree-d monomials in dim U variables
/// (each labeled by its character) whose labels sum to beta.
RepE sym_multiplicities(const RepE& u, int degree);

struct SymPowerTable {
  RepE base;
  int degree = 0;
  RepE table;

  friend bool operator==(const SymPowerTable&, const SymPowerTable&) = default;
};

/// True iff the characters occurring in U span E*, i.e. their kernels meet in 0.
bool spans_dual(const RepE& u);
/// Flag obtained by adding U's characters one at a time (least first) so that
/// each new one is independent of the previous ones. Requires spans_dual(u).
FlagE spanning_flag(const RepE& u);

struct EmbeddingResult {
  int k = 0;
  int target_dim = 0;  ///< requested d
  FlagE flag;
  std::vector<std::int64_t> u_dims;
  std::vector<std::int64_t> v_dims;
  std::vector<std::vector<std::int64_t>> p_dims;  ///< p_dims[j-1][i-1] = dim P[j]_i
  std::vector<std::int64_t> uk_dims;              ///< dim U[k]_i
  std::int64_t uk_total = 0;
  std::int64_t v_total = 0;
  bool p_claim_holds = false;   ///< dim P[j]_i >= dim U_i for all j <= k
  bool uk_claim_holds = false;  ///< dim U[k]_i >= k dim U_i

  friend bool operator==(const EmbeddingResult&, const EmbeddingResult&) = default;
};

/// Least k >= 1 with dim U[k]_i > dim V_i for all i and dim U[k] - dim V >= d,
/// where U[k] = sum_{j <= k} S^{2j-1}(U*).
EmbeddingResult min_embedding_k(const RepE& u, const RepE& v, int d,
                                const std::optional<FlagE>& flag = std::nullopt);

}  // namespace eulerlab

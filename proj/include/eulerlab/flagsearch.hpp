#pragma once

// Construction of flags and fixed subgroups with dim U_i > dim V_i at every step.

#include <cstdint>
#include <map>
#include <vector>

#include "eulerlab/parallel.hpp"
#include "eulerlab/rep.hpp"

namespace eulerlab {

/// d^alpha = dim U^alpha - dim V^alpha on the union of supports.
using GapTable = std::map<CharF2, std::int64_t>;
GapTable gap_table(const RepE& u, const RepE& v);

/// Greedy flag: at step i pick the i-dimensional E' containing E^{i-1} with the
/// largest positive gap sum over E' \ E^{i-1}, ties to the least new covector.
/// Throws HypothesisFailure when dim U - dim V <= dim U^E, when V^E != 0, or
/// when some step has no positive extension.
FlagE find_flag(const RepE& u, const RepE& v);

/// Every subgroup of (Z/2)^rank, ordered by dimension then basis. rank <= 6.
std::vector<Subgroup> all_subgroups(int rank);

/// dim U^F - dim V^F for each subgroup (OpenMP kernel with serial reference).
std::vector<std::int64_t> fixed_gaps(const RepE& u, const RepE& v, const std::vector<Subgroup>& subgroups,
                                     Execution exec = Execution::Parallel);

/// A maximal F with dim U^F - dim V^F >= dim U - dim V. Among maximal
/// candidates the largest dimension wins, then the least canonical basis.
Subgroup best_fixed_subgroup(const RepE& u, const RepE& v, Execution exec = Execution::Parallel);

/// Subgroup + flag for E/F acting on U^F, as used by the free zero-set bound.
struct FlagFindResult {
  Subgroup subgroup;
  RepE u_fixed;  ///< U^F as an E/F-representation
  RepE v_fixed;
  FlagE flag;    ///< flag of E/F
  std::vector<CharF2> lifted_flag;  ///< the same dual basis as elements of E*
  std::vector<std::int64_t> u_dims;
  std::vector<std::int64_t> v_dims;

  friend bool operator==(const FlagFindResult&, const FlagFindResult&) = default;
};

FlagFindResult find_flag_with_subgroup(const RepE& u, const RepE& v);

/// Greedy flag over Q for torus representations; candidate steps are the
/// rational lines of U's weights. Throws HypothesisFailure on failure.
RationalFlag find_rational_flag(const RepT& u, const RepT& v);

}  // namespace eulerlab

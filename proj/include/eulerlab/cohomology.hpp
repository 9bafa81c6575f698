#pragma once

// Quotient-ring presentations S*(E*)/(e(U_1), ..., e(U_l)), Euler-class
// nonvanishing, and the flag-manifold rings F2[t_1..t_l]/(e_1..e_l).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eulerlab/poly.hpp"
#include "eulerlab/rep.hpp"

namespace eulerlab {

struct Presentation {
  TriangularSystem relations;
  std::string provenance;
  std::vector<std::string> notes;

  Field field() const { return relations.field(); }
  std::size_t nvars() const { return relations.nvars(); }
  std::uint64_t quotient_dimension() const { return relations.quotient_dimension(); }
  /// Basis monomials of the given degree, computed on demand.
  std::vector<Monomial> basis_in_degree(std::uint32_t degree) const {
    return quotient_basis_in_degree(relations, degree);
  }

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Relations g_j = e(U_j) in flag coordinates. Throws HypothesisFailure naming
/// the first i with U_i = 0. A nonzero fixed part is recorded in the notes.
Presentation presentation(const RepE& u, const FlagE& flag);
Presentation presentation(const RepT& u, const RationalFlag& flag);

struct NonvanishingResult {
  bool nonvanishing = false;
  Poly euler_class;   ///< e(V) in flag coordinates
  Poly normal_form;   ///< certificate: image of e(V) in the quotient
  Presentation presentation;
  std::vector<std::int64_t> u_dims;
  std::vector<std::int64_t> v_dims;

  friend bool operator==(const NonvanishingResult&, const NonvanishingResult&) = default;
};

/// Reduces e(V) modulo the presentation of U. Requires V^G = 0.
NonvanishingResult euler_nonvanishing(const RepE& u, const RepE& v, const FlagE& flag);
NonvanishingResult euler_nonvanishing(const RepT& u, const RepT& v, const RationalFlag& flag);

/// F2[t_1..t_l]/(e_1..e_l) with e_i = h_{n-i+1}(t_1..t_i), or the restricted
/// variant e'_i = h_{n_i-i+1}(t_1..t_i) when bounds n_1 <= ... <= n_l are given.
Presentation flag_ring(int n, int l, const std::optional<std::vector<int>>& bounds = std::nullopt,
                       Field field = Field::F2);

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;

  friend bool operator==(const CheckItem&, const CheckItem&) = default;
};

struct FlagRingOptions {
  std::optional<std::vector<int>> bounds;
  int random_q_samples = 100;  ///< 0 disables item (d)
  std::uint64_t seed = 0;
};

struct FlagRingReport {
  int n = 0;
  int l = 0;
  std::optional<std::vector<int>> bounds;
  std::vector<CheckItem> items;

  bool all_pass() const;
  friend bool operator==(const FlagRingReport&, const FlagRingReport&) = default;
};

/// Checks (a) the symmetric ē_i identity, (b) the top class is nonzero,
/// (c) the quotient dimension, (d) e(Q) is nonzero for random Q with
/// dim Q_i <= n_i - i, including the boundary case dim Q_i = n_i - i.
FlagRingReport verify_flag_ring(int n, int l, const FlagRingOptions& options = {});

/// Top cohomological degree of the flag orbit space: sum_{i<=l} (n - i).
std::int64_t flag_top_degree(int n, int l);

}  // namespace eulerlab

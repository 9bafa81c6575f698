#pragma once

// Certified lower bounds on covering dimensions of zero-sets. Each report
// carries the hypothesis checklist that was evaluated and the witness data
// needed to re-check it.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "eulerlab/rep.hpp"

namespace eulerlab {

enum class ItemStatus { Pass, Fail, Assumed };

struct HypothesisItem {
  std::string description;
  ItemStatus status = ItemStatus::Pass;
  std::string evidence;

  friend bool operator==(const HypothesisItem&, const HypothesisItem&) = default;
};

struct BoundReport {
  std::string theorem;
  std::vector<HypothesisItem> hypotheses;
  std::optional<std::int64_t> bound;  ///< present iff no item failed
  nlohmann::json witness = nlohmann::json::object();
  std::vector<std::string> notes;

  bool applicable() const { return bound.has_value(); }
  /// First failed item, or nullptr.
  const HypothesisItem* first_failure() const;

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

/// Free part of the zero-set of an E-map U -> V: bound dim U - dim V, via a
/// maximal fixed subgroup F, a flag of E/F and the Euler-class certificate.
BoundReport bound_free_zero_set(const RepE& u, const RepE& v);

/// Zero-set of an E-map from the real Stiefel manifold O(P, R^n) to Q.
/// Without a flag, the orderings of P's characters are searched.
BoundReport bound_stiefel(const RepE& p, const RepE& q, int n,
                          const std::optional<FlagE>& flag = std::nullopt);
/// Complex Stiefel manifold U(P, C^n) with a torus action.
BoundReport bound_stiefel(const RepT& p, const RepT& q, int n,
                          const std::optional<RationalFlag>& flag = std::nullopt);

enum class TorusVariant { Interior, Annulus };

/// Torus zero-set bounds: 2(dim_C U - dim_C V) on a finite-isotropy subspace,
/// or 2(dim_C U - dim_C V) - 1 for the annulus variant.
BoundReport bound_torus(const RepT& u, const RepT& v, TorusVariant variant);

std::string_view to_string(ItemStatus s);

}  // namespace eulerlab

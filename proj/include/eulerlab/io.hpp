#pragma once

// Input documents and JSON conversions for every result type the command line
// emits. from_json(to_json(x)) == x for all of them.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "eulerlab/bounds.hpp"
#include "eulerlab/cohomology.hpp"
#include "eulerlab/flagsearch.hpp"
#include "eulerlab/sympow.hpp"
#include "eulerlab/torus.hpp"

namespace eulerlab {

enum class GroupKind { ElemAbelian2, Torus };

std::string_view to_string(GroupKind k);

/// {"group":{"kind":..,"rank":l},"module":{"entries":[..]},"target":{..},
///  "flag":{"dual_basis":[..]},"n":..,"d":..}; only group and module are required.
struct InputDocument {
  GroupKind kind = GroupKind::ElemAbelian2;
  int rank = 0;
  RepE module_e, target_e;
  RepT module_t, target_t;
  bool has_target = false;
  std::optional<FlagE> flag_e;
  std::optional<RationalFlag> flag_t;
  std::optional<int> n;
  std::optional<int> d;
};

/// Throws InputError on malformed JSON, unknown fields, duplicate characters,
/// non-positive multiplicities, rank 0 and coordinate mismatches.
InputDocument parse_document(std::string_view text);

/// Dual basis coordinates of either kind of flag.
std::vector<std::vector<std::int64_t>> flag_coords(const FlagE& f);
std::vector<std::vector<std::int64_t>> flag_coords(const RationalFlag& f);

// Result documents assembled by the command line.

struct ReduceResult {
  Poly input;
  TriangularSystem system;
  Poly normal_form;
  bool is_zero = false;
  friend bool operator==(const ReduceResult&, const ReduceResult&) = default;
};

struct EulerCheckResult {
  GroupKind kind = GroupKind::ElemAbelian2;
  std::vector<std::vector<std::int64_t>> flag;
  NonvanishingResult result;
  friend bool operator==(const EulerCheckResult&, const EulerCheckResult&) = default;
};

struct TorusFlagResult {
  RationalFlag flag;
  std::vector<std::int64_t> u_dims;
  std::vector<std::int64_t> v_dims;
  friend bool operator==(const TorusFlagResult&, const TorusFlagResult&) = default;
};

struct FlagRingResult {
  Presentation presentation;
  std::optional<FlagRingReport> report;
  friend bool operator==(const FlagRingResult&, const FlagRingResult&) = default;
};

struct TorusExampleResult {
  CircleExampleParams params;
  std::vector<Weight> source_layout;
  std::vector<Weight> target_layout;
  EquivarianceReport report;
  friend bool operator==(const TorusExampleResult&, const TorusExampleResult&) = default;
};

void to_json(nlohmann::json& j, const Poly& p);
void from_json(const nlohmann::json& j, Poly& p);
void to_json(nlohmann::json& j, const TriangularSystem& s);
void from_json(const nlohmann::json& j, TriangularSystem& s);
void to_json(nlohmann::json& j, const Weight& w);
void from_json(const nlohmann::json& j, Weight& w);
void to_json(nlohmann::json& j, const RepE& r);
void from_json(const nlohmann::json& j, RepE& r);
void to_json(nlohmann::json& j, const RepT& r);
void from_json(const nlohmann::json& j, RepT& r);
void to_json(nlohmann::json& j, const FlagE& f);
void from_json(const nlohmann::json& j, FlagE& f);
void to_json(nlohmann::json& j, const RationalFlag& f);
void from_json(const nlohmann::json& j, RationalFlag& f);
void to_json(nlohmann::json& j, const Subgroup& s);
void from_json(const nlohmann::json& j, Subgroup& s);
void to_json(nlohmann::json& j, const Presentation& p);
void from_json(const nlohmann::json& j, Presentation& p);
void to_json(nlohmann::json& j, const NonvanishingResult& r);
void from_json(const nlohmann::json& j, NonvanishingResult& r);
void to_json(nlohmann::json& j, const FlagFindResult& r);
void from_json(const nlohmann::json& j, FlagFindResult& r);
void to_json(nlohmann::json& j, const HypothesisItem& h);
void from_json(const nlohmann::json& j, HypothesisItem& h);
void to_json(nlohmann::json& j, const BoundReport& r);
void from_json(const nlohmann::json& j, BoundReport& r);
void to_json(nlohmann::json& j, const CheckItem& c);
void from_json(const nlohmann::json& j, CheckItem& c);
void to_json(nlohmann::json& j, const FlagRingReport& r);
void from_json(const nlohmann::json& j, FlagRingReport& r);
void to_json(nlohmann::json& j, const SymPowerTable& t);
void from_json(const nlohmann::json& j, SymPowerTable& t);
void to_json(nlohmann::json& j, const EmbeddingResult& r);
void from_json(const nlohmann::json& j, EmbeddingResult& r);
void to_json(nlohmann::json& j, const LineDecomposition& d);
void from_json(const nlohmann::json& j, LineDecomposition& d);
void to_json(nlohmann::json& j, const CircleExampleParams& p);
void from_json(const nlohmann::json& j, CircleExampleParams& p);
void to_json(nlohmann::json& j, const EquivarianceReport& r);
void from_json(const nlohmann::json& j, EquivarianceReport& r);
void to_json(nlohmann::json& j, const ReduceResult& r);
void from_json(const nlohmann::json& j, ReduceResult& r);
void to_json(nlohmann::json& j, const EulerCheckResult& r);
void from_json(const nlohmann::json& j, EulerCheckResult& r);
void to_json(nlohmann::json& j, const TorusFlagResult& r);
void from_json(const nlohmann::json& j, TorusFlagResult& r);
void to_json(nlohmann::json& j, const FlagRingResult& r);
void from_json(const nlohmann::json& j, FlagRingResult& r);
void to_json(nlohmann::json& j, const TorusExampleResult& r);
void from_json(const nlohmann::json& j, TorusExampleResult& r);

}  // namespace eulerlab

#pragma once

// Torus representations split into rational lines, equivariant sphere maps
// assembled as joins, and the explicit circle example with its verifier.

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "eulerlab/parallel.hpp"
#include "eulerlab/rep.hpp"

namespace eulerlab {

using Complex = std::complex<double>;
using CVec = std::vector<Complex>;

struct LineDecomposition {
  int rank = 0;
  std::int64_t fixed_dim = 0;
  std::map<Weight, RepT> lines;  ///< primitive representative -> U_lambda

  friend bool operator==(const LineDecomposition&, const LineDecomposition&) = default;
};

LineDecomposition line_decomposition(const RepT& u);

/// A T-map between complex representations. Each coordinate of the source and
/// target carries a weight; t in R^l/Z^l acts on a coordinate of weight w by
/// exp(2 pi i <w, t>).
struct MapDescription {
  int rank = 0;
  std::vector<Weight> source_layout;
  std::vector<Weight> target_layout;
  std::function<CVec(std::span<const Complex>)> evaluate;
  std::string tag;  ///< join | circle-example | user
  nlohmann::json params = nlohmann::json::object();

  RepT source() const;
  RepT target() const;
};

/// exp(2 pi i <w_k, t>) x_k for each coordinate k.
CVec act(const std::vector<Weight>& layout, std::span<const double> t, std::span<const Complex> x);

MapDescription identity_map(int rank, std::vector<Weight> layout);

struct CircleExampleParams {
  std::int64_t a = 0, b = 0, c = 0;
  std::int64_t a_prime = 0, b_prime = 0;

  friend bool operator==(const CircleExampleParams&, const CircleExampleParams&) = default;
};

/// Minimal positive (a', b') with a a' - b b' = 1. Throws InputError unless
/// a, b, c >= 1 and gcd(a, b) = 1.
CircleExampleParams circle_params(std::int64_t a, std::int64_t b, std::int64_t c);

/// (x, y) -> (x^b + y^a, x^{a'} conj(y)^{b'}) from weights (ac, bc) to (abc, c),
/// all weights multiples of `direction` (default: the rank-1 generator).
MapDescription circle_example(std::int64_t a, std::int64_t b, std::int64_t c,
                              const std::optional<Weight>& direction = std::nullopt);

/// x -> f(x) / |f(x)|, a sphere map whenever Zero(f) = {0}.
MapDescription normalized(const MapDescription& m);

struct JoinOptions {
  int samples = 64;
  double tol = 1e-9;
  std::uint64_t seed = 0;
};

/// f(sum t_l u_l) = sum t_l f_l(u_l) with t_l = |x_l|, coordinates laid out
/// block by block in line order. Each part is sampled and must return unit
/// vectors, otherwise AssemblyError.
MapDescription join_assemble(const std::map<Weight, MapDescription>& parts, const JoinOptions& options = {});

struct VerifyOptions {
  int samples = 10000;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  Execution exec = Execution::Parallel;
};

struct EquivarianceReport {
  int samples = 0;
  double tol = 0;
  std::uint64_t seed = 0;
  double max_residual = 0;              ///< max |f(t x) - t f(x)|
  std::optional<double> min_norm;       ///< min |f(x)| on the sphere (circle example)
  std::optional<bool> symbolic_weights;   ///< exponent bookkeeping matches the target weights
  std::optional<bool> symbolic_zero_set;  ///< Zero(f) = {0} from the exponents
  bool pass = false;

  friend bool operator==(const EquivarianceReport&, const EquivarianceReport&) = default;
};

EquivarianceReport verify_equivariance(const MapDescription& m, const VerifyOptions& options = {});

/// Seeded point on the unit sphere of C^dim, shared by the verifier and tests.
CVec sample_sphere(std::size_t dim, std::uint64_t seed, std::uint64_t index);

}  // namespace eulerlab

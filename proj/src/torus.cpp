#include "eulerlab/torus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

namespace eulerlab {

using nlohmann::json;

LineDecomposition line_decomposition(const RepT& u) {
  LineDecomposition d;
  d.rank = u.rank();
  for (const auto& [alpha, m] : u.entries()) {
    if (alpha.is_trivial()) {
      d.fixed_dim += m;
      continue;
    }
    const Weight line = primitive(alpha);
    auto it = d.lines.try_emplace(line, RepT(u.rank())).first;
    it->second.add(alpha, m);
  }
  return d;
}

namespace {

RepT layout_table(int rank, const std::vector<Weight>& layout) {
  RepT r(rank);
  for (const auto& w : layout) r.add(w, 1);
  return r;
}

Complex ipow(Complex z, std::int64_t e) {
  Complex r = 1.0;
  while (e > 0) {
    if (e & 1) r *= z;
    e >>= 1;
    if (e > 0) z *= z;
  }
  return r;
}

double norm2(std::span<const Complex> x) {
  double s = 0;
  for (auto z : x) s += std::norm(z);
  return std::sqrt(s);
}

std::vector<double> sample_torus(int rank, std::uint64_t seed, std::uint64_t index) {
  std::mt19937_64 rng(stream_seed(seed ^ 0x5bd1e9955bd1e995ull, index));
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> t(rank);
  for (auto& x : t) x = unif(rng);
  return t;
}

}  // namespace

RepT MapDescription::source() const { return layout_table(rank, source_layout); }
RepT MapDescription::target() const { return layout_table(rank, target_layout); }

CVec act(const std::vector<Weight>& layout, std::span<const double> t, std::span<const Complex> x) {
  CVec out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    double phase = 0;
    for (std::size_t i = 0; i < t.size(); ++i) phase += static_cast<double>(layout[k].coords[i]) * t[i];
    phase -= std::floor(phase);
    out[k] = std::polar(1.0, 2 * std::numbers::pi * phase) * x[k];
  }
  return out;
}

CVec sample_sphere(std::size_t dim, std::uint64_t seed, std::uint64_t index) {
  std::mt19937_64 rng(stream_seed(seed, index));
  std::normal_distribution<double> normal(0.0, 1.0);
  CVec x(dim);
  double n = 0;
  while (n == 0) {
    for (auto& z : x) z = Complex(normal(rng), normal(rng));
    n = norm2(x);
  }
  for (auto& z : x) z /= n;
  return x;
}

MapDescription identity_map(int rank, std::vector<Weight> layout) {
  MapDescription m;
  m.rank = rank;
  m.source_layout = layout;
  m.target_layout = std::move(layout);
  m.evaluate = [](std::span<const Complex> x) { return CVec(x.begin(), x.end()); };
  m.tag = "user";
  m.params = {{"map", "identity"}};
  return m;
}

CircleExampleParams circle_params(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (a < 1 || b < 1 || c < 1) throw InputError("a, b, c must be positive integers");
  if (std::gcd(a, b) != 1) throw InputError("gcd(a,b) must be 1");
  // Extended Euclid for a^{-1} mod b.
  std::int64_t old_r = a, r = b, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  std::int64_t ap = ((old_s % b) + b) % b;
  if (ap == 0) ap = b;
  std::int64_t bp = (a * ap - 1) / b;
  while (bp < 1) {
    ap += b;
    bp += a;
  }
  return {a, b, c, ap, bp};
}

MapDescription circle_example(std::int64_t a, std::int64_t b, std::int64_t c,
                              const std::optional<Weight>& direction) {
  const auto p = circle_params(a, b, c);
  const Weight dir = direction.value_or(Weight{{1}});
  if (dir.is_trivial()) throw InputError("circle example direction must be nonzero");
  auto scaled = [&](std::int64_t k) {
    Weight w = dir;
    for (auto& x : w.coords) x *= k;
    return w;
  };
  MapDescription m;
  m.rank = static_cast<int>(dir.coords.size());
  m.source_layout = {scaled(a * c), scaled(b * c)};
  m.target_layout = {scaled(a * b * c), scaled(c)};
  m.evaluate = [p](std::span<const Complex> in) {
    const Complex x = in[0];
    const Complex y = in[1];
    return CVec{ipow(x, p.b) + ipow(y, p.a), ipow(x, p.a_prime) * ipow(std::conj(y), p.b_prime)};
  };
  m.tag = "circle-example";
  m.params = {{"a", p.a}, {"b", p.b}, {"c", p.c}, {"a_prime", p.a_prime}, {"b_prime", p.b_prime},
              {"direction", dir.coords}};
  return m;
}

MapDescription normalized(const MapDescription& m) {
  MapDescription out = m;
  out.evaluate = [f = m.evaluate](std::span<const Complex> x) {
    CVec y = f(x);
    const double n = norm2(y);
    if (n > 0) {
      for (auto& z : y) z /= n;
    }
    return y;
  };
  out.params["normalized"] = true;
  return out;
}

MapDescription join_assemble(const std::map<Weight, MapDescription>& parts, const JoinOptions& options) {
  if (parts.empty()) throw InputError("join needs at least one part");
  struct Block {
    std::size_t src_dim;
    std::size_t tgt_dim;
    std::function<CVec(std::span<const Complex>)> f;
  };
  MapDescription out;
  out.rank = parts.begin()->second.rank;
  out.tag = "join";
  out.params = {{"lines", json::array()}, {"parts", json::array()}};
  std::vector<Block> blocks;
  for (const auto& [line, part] : parts) {
    if (part.rank != out.rank || !line.fits(out.rank)) throw InputError("join parts have different ranks");
    if (line.is_trivial() || !(primitive(line) == line)) {
      throw InputError("join keys must be primitive line representatives, got " + to_string(line));
    }
    for (const auto* layout : {&part.source_layout, &part.target_layout}) {
      for (const auto& w : *layout) {
        if (w.is_trivial() || !(primitive(w) == line)) {
          throw InputError("weight " + to_string(w) + " does not lie on line " + to_string(line));
        }
      }
    }
    for (int s = 0; s < options.samples; ++s) {
      const CVec u = sample_sphere(part.source_layout.size(), options.seed, static_cast<std::uint64_t>(s));
      const double n = norm2(part.evaluate(u));
      if (std::abs(n - 1.0) > options.tol) {
        throw AssemblyError("part on line " + to_string(line) + " is not a sphere map: |f(u)| = " +
                            std::to_string(n));
      }
    }
    blocks.push_back({part.source_layout.size(), part.target_layout.size(), part.evaluate});
    out.source_layout.insert(out.source_layout.end(), part.source_layout.begin(), part.source_layout.end());
    out.target_layout.insert(out.target_layout.end(), part.target_layout.begin(), part.target_layout.end());
    out.params["lines"].push_back(line.coords);
    out.params["parts"].push_back(part.tag);
  }
  out.evaluate = [blocks](std::span<const Complex> x) {
    CVec y;
    std::size_t offset = 0;
    for (const auto& b : blocks) {
      const auto xb = x.subspan(offset, b.src_dim);
      offset += b.src_dim;
      const double t = norm2(xb);
      if (t == 0) {
        y.insert(y.end(), b.tgt_dim, Complex{});
        continue;
      }
      CVec u(xb.begin(), xb.end());
      for (auto& z : u) z /= t;
      for (auto z : b.f(u)) y.push_back(t * z);
    }
    return y;
  };
  return out;
}

namespace {

struct SymbolicChecks {
  bool weights;
  bool zero_set;
};

SymbolicChecks circle_symbolic(const MapDescription& m) {
  const auto a = m.params.at("a").get<std::int64_t>();
  const auto b = m.params.at("b").get<std::int64_t>();
  const auto c = m.params.at("c").get<std::int64_t>();
  const auto ap = m.params.at("a_prime").get<std::int64_t>();
  const auto bp = m.params.at("b_prime").get<std::int64_t>();
  const Weight dir{m.params.at("direction").get<std::vector<std::int64_t>>()};
  auto scaled = [&](std::int64_t k) {
    Weight w = dir;
    for (auto& x : w.coords) x *= k;
    return w;
  };
  // Exponent bookkeeping: x^b and y^a both carry weight abc, x^{a'} conj(y)^{b'}
  // carries a'ac - b'bc = c(aa' - bb').
  const std::int64_t wx = a * c, wy = b * c;
  bool weights = b * wx == a * b * c && a * wy == a * b * c && ap * wx - bp * wy == c &&
                 m.source_layout.size() == 2 && m.target_layout.size() == 2 &&
                 m.source_layout[0] == scaled(wx) && m.source_layout[1] == scaled(wy) &&
                 m.target_layout[0] == scaled(b * wx) && m.target_layout[1] == scaled(ap * wx - bp * wy);
  // Second coordinate zero forces x = 0 or y = 0 (a', b' >= 1); then the first
  // coordinate is y^a or x^b, which vanishes only at 0 (a, b >= 1).
  bool zero_set = a >= 1 && b >= 1 && ap >= 1 && bp >= 1;
  return {weights, zero_set};
}

}  // namespace

EquivarianceReport verify_equivariance(const MapDescription& m, const VerifyOptions& options) {
  if (!(options.tol > 0)) throw InputError("tolerance must be positive");
  if (options.samples < 0) throw InputError("sample count must be nonnegative");
  EquivarianceReport r;
  r.samples = options.samples;
  r.tol = options.tol;
  r.seed = options.seed;
  const bool circle = m.tag == "circle-example";

  const std::size_t dim = m.source_layout.size();
  double max_residual = 0;
  double min_norm = std::numeric_limits<double>::infinity();
  auto kernel = [&](std::int64_t i, double& res, double& nrm) {
    const auto idx = static_cast<std::uint64_t>(i);
    const CVec x = sample_sphere(dim, options.seed, idx);
    const auto t = sample_torus(m.rank, options.seed, idx);
    const CVec fx = m.evaluate(x);
    const CVec lhs = m.evaluate(act(m.source_layout, t, x));
    const CVec rhs = act(m.target_layout, t, fx);
    double s = 0;
    for (std::size_t k = 0; k < lhs.size(); ++k) s += std::norm(lhs[k] - rhs[k]);
    res = std::sqrt(s);
    nrm = norm2(fx);
  };
  const std::int64_t n = options.samples;
  if (options.exec == Execution::Parallel) {
#pragma omp parallel for schedule(static) reduction(max : max_residual) reduction(min : min_norm)
    for (std::int64_t i = 0; i < n; ++i) {
      double res = 0, nrm = 0;
      kernel(i, res, nrm);
      max_residual = std::max(max_residual, res);
      min_norm = std::min(min_norm, nrm);
    }
  } else {
    for (std::int64_t i = 0; i < n; ++i) {
      double res = 0, nrm = 0;
      kernel(i, res, nrm);
      max_residual = std::max(max_residual, res);
      min_norm = std::min(min_norm, nrm);
    }
  }
  r.max_residual = max_residual;
  r.pass = max_residual < options.tol;
  if (circle) {
    r.min_norm = n > 0 ? min_norm : 0.0;
    const auto sym = circle_symbolic(m);
    r.symbolic_weights = sym.weights;
    r.symbolic_zero_set = sym.zero_set;
    r.pass = r.pass && *r.min_norm > 0 && sym.weights && sym.zero_set;
  }
  return r;
}

}  // namespace eulerlab

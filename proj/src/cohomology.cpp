#include "eulerlab/cohomology.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace eulerlab {

namespace {

template <class Rep, class Flag>
Presentation make_presentation(const Rep& u, const Flag& flag, const char* group) {
  const auto d = decompose(u, flag);
  std::vector<Poly> gens;
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    if (d.parts[i].empty()) {
      throw HypothesisFailure("U_i != 0 fails: U_" + std::to_string(i + 1) + " = 0");
    }
    gens.push_back(euler_poly(d.parts[i], flag));
  }
  Presentation p{TriangularSystem(std::move(gens)), {}, {}};
  std::ostringstream prov;
  prov << "euler classes e(U_1)..e(U_" << d.parts.size() << ") of a " << group
       << " representation of dimension " << u.dim();
  p.provenance = prov.str();
  if (d.fixed.dim() != 0) {
    p.notes.push_back("fixed part of dimension " + std::to_string(d.fixed.dim()) + " ignored");
  }
  return p;
}

template <class Rep, class Flag>
NonvanishingResult nonvanishing(const Rep& u, const Rep& v, const Flag& flag, const char* fixed_name) {
  if (u.rank() != v.rank()) throw StructuralError("U and V have different ranks");
  if (v.fixed_dim() != 0) {
    throw HypothesisFailure(std::string(fixed_name) + " = 0 fails: fixed dimension " +
                            std::to_string(v.fixed_dim()));
  }
  NonvanishingResult r;
  r.presentation = presentation(u, flag);
  r.euler_class = euler_poly(v, flag);
  r.normal_form = reduce(r.euler_class, r.presentation.relations);
  r.nonvanishing = !r.normal_form.is_zero();
  r.u_dims = decompose(u, flag).dims();
  r.v_dims = decompose(v, flag).dims();
  return r;
}

std::vector<int> effective_bounds(int n, int l, const std::optional<std::vector<int>>& bounds) {
  if (l < 1) throw InputError("flag ring needs l >= 1");
  if (l > n) throw InputError("flag ring needs l <= n (got l=" + std::to_string(l) +
                              ", n=" + std::to_string(n) + ")");
  if (!bounds) return std::vector<int>(l, n);
  const auto& b = *bounds;
  if (static_cast<int>(b.size()) != l) throw InputError("expected " + std::to_string(l) + " bounds n_i");
  for (int i = 1; i <= l; ++i) {
    const int ni = b[i - 1];
    if (ni < i || ni > n) {
      throw InputError("bound n_" + std::to_string(i) + " = " + std::to_string(ni) +
                       " violates i <= n_i <= n");
    }
    if (i > 1 && ni < b[i - 2]) throw InputError("bounds n_i must be nondecreasing");
  }
  return b;
}

}  // namespace

Presentation presentation(const RepE& u, const FlagE& flag) {
  return make_presentation(u, flag, "(Z/2)^l");
}

Presentation presentation(const RepT& u, const RationalFlag& flag) {
  return make_presentation(u, flag, "torus");
}

NonvanishingResult euler_nonvanishing(const RepE& u, const RepE& v, const FlagE& flag) {
  return nonvanishing(u, v, flag, "V^E");
}

NonvanishingResult euler_nonvanishing(const RepT& u, const RepT& v, const RationalFlag& flag) {
  return nonvanishing(u, v, flag, "V^T");
}

Presentation flag_ring(int n, int l, const std::optional<std::vector<int>>& bounds, Field field) {
  const auto nb = effective_bounds(n, l, bounds);
  std::vector<Poly> gens;
  for (int i = 1; i <= l; ++i) {
    gens.push_back(complete_homogeneous(field, l, 1, i, static_cast<std::uint32_t>(nb[i - 1] - i + 1)));
  }
  Presentation p{TriangularSystem(std::move(gens)), {}, {}};
  std::ostringstream prov;
  prov << "flag ring n=" << n << " l=" << l;
  if (bounds) {
    prov << " bounds=";
    for (int i = 0; i < l; ++i) prov << (i ? "," : "") << nb[i];
  }
  p.provenance = prov.str();
  return p;
}

std::int64_t flag_top_degree(int n, int l) {
  return static_cast<std::int64_t>(l) * n - static_cast<std::int64_t>(l) * (l + 1) / 2;
}

bool FlagRingReport::all_pass() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.pass; });
}

FlagRingReport verify_flag_ring(int n, int l, const FlagRingOptions& options) {
  const auto nb = effective_bounds(n, l, options.bounds);
  const auto ring = flag_ring(n, l, options.bounds);
  const auto& rel = ring.relations;
  const auto nv = static_cast<std::size_t>(l);
  FlagRingReport report{n, l, options.bounds, {}};

  if (!options.bounds) {
    // (a) h_{n-i+1}(t_1..t_l) = e_i + sum_{j>i} h_{j-i}(t_j..t_l) e_j
    bool ok = true;
    std::string detail = "identity holds for i=1.." + std::to_string(l);
    for (int i = 1; i <= l && ok; ++i) {
      const Poly ebar = complete_homogeneous(Field::F2, nv, 1, nv, static_cast<std::uint32_t>(n - i + 1));
      Poly rhs = rel.generators()[i - 1];
      for (int j = i + 1; j <= l; ++j) {
        const Poly a = complete_homogeneous(Field::F2, nv, j, nv, static_cast<std::uint32_t>(j - i));
        rhs = rhs + a * rel.generators()[j - 1];
      }
      if (!(ebar == rhs)) {
        ok = false;
        detail = "mismatch at i=" + std::to_string(i) + ": " + ebar.to_string() + " vs " + rhs.to_string();
      }
    }
    report.items.push_back({"a: ebar identity", ok, detail});
  }

  // (b) prod t_i^{n_i - i} is nonzero.
  {
    std::vector<std::uint32_t> exps(nv);
    for (int i = 1; i <= l; ++i) exps[i - 1] = static_cast<std::uint32_t>(nb[i - 1] - i);
    const Poly top = Poly::monomial(Field::F2, Monomial(exps));
    const Poly nf = reduce(top, rel);
    report.items.push_back({"b: top class nonzero", !nf.is_zero(),
                            "normal form " + nf.to_string() + " in degree " +
                                std::to_string(Monomial(exps).degree())});
  }

  // (c) quotient dimension.
  {
    std::uint64_t expected = 1;
    for (int i = 1; i <= l; ++i) expected *= static_cast<std::uint64_t>(nb[i - 1] - i + 1);
    bool ok = rel.quotient_dimension() == expected && quotient_basis(rel).size() == expected;
    std::string detail = "dimension " + std::to_string(rel.quotient_dimension());
    if (!options.bounds) {
      std::uint64_t falling = 1;  // n!/(n-l)!
      for (int k = n - l + 1; k <= n; ++k) falling *= static_cast<std::uint64_t>(k);
      ok = ok && falling == expected;
      detail += ", n!/(n-l)! = " + std::to_string(falling);
    }
    report.items.push_back({"c: quotient dimension", ok, detail});
  }

  // (d) e(Q) nonzero for dim Q_i <= n_i - i, Q^E = 0.
  if (options.random_q_samples > 0) {
    const FlagE std_flag = FlagE::standard(l);
    RepE boundary(l);
    for (int i = 1; i <= l; ++i) boundary.add(CharF2{std::uint64_t{1} << (i - 1)}, nb[i - 1] - i);
    const bool boundary_ok = !reduce(euler_poly(boundary, std_flag), rel).is_zero();
    report.items.push_back({"d: boundary e(Q) nonzero", boundary_ok,
                            "dim Q_i = n_i - i, dim Q = " + std::to_string(boundary.dim())});

    std::mt19937_64 rng(options.seed);
    int failures = 0;
    std::string first_failure;
    for (int s = 0; s < options.random_q_samples; ++s) {
      RepE q(l);
      for (int i = 1; i <= l; ++i) {
        std::uniform_int_distribution<int> dim_dist(0, nb[i - 1] - i);
        std::uniform_int_distribution<std::uint64_t> low(0, (std::uint64_t{1} << (i - 1)) - 1);
        const int k = dim_dist(rng);
        for (int c = 0; c < k; ++c) q.add(CharF2{(std::uint64_t{1} << (i - 1)) | low(rng)}, 1);
      }
      if (reduce(euler_poly(q, std_flag), rel).is_zero()) {
        if (failures++ == 0) first_failure = "sample " + std::to_string(s) + " reduced to 0";
      }
    }
    report.items.push_back({"d: random e(Q) nonzero", failures == 0,
                            failures == 0 ? std::to_string(options.random_q_samples) + " samples"
                                          : first_failure});
  }
  return report;
}

}  // namespace eulerlab

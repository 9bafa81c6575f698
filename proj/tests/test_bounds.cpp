#include <gtest/gtest.h>

#include <random>

#include "eulerlab/bounds.hpp"
#include "eulerlab/cohomology.hpp"
#include "oracles.hpp"

using namespace eulerlab;

namespace {

CharF2 ch(std::initializer_list<int> c) {
  std::vector<int> v(c);
  return CharF2::from_coords(v);
}

Weight w(std::initializer_list<std::int64_t> c) { return Weight{std::vector<std::int64_t>(c)}; }

bool has_note(const BoundReport& r, const std::string& needle) {
  for (const auto& n : r.notes) {
    if (n.find(needle) != std::string::npos) return true;
  }
  return false;
}

// Random invertible l x l matrix over F2 acting on characters (columns as bit masks).
std::vector<std::uint64_t> random_gl(std::mt19937_64& rng, int l) {
  std::uniform_int_distribution<std::uint64_t> d(1, (std::uint64_t{1} << l) - 1);
  for (;;) {
    std::vector<std::uint64_t> cols(l);
    for (auto& c : cols) c = d(rng);
    if (oracle::span(cols).size() == (std::size_t{1} << l)) return cols;
  }
}

RepE apply(const std::vector<std::uint64_t>& cols, const RepE& u) {
  RepE out(u.rank());
  for (const auto& [a, m] : u.entries()) {
    std::uint64_t img = 0;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if ((a.bits >> j) & 1u) img ^= cols[j];
    }
    out.add(CharF2{img}, m);
  }
  return out;
}

}  // namespace

TEST(FreeZeroSet, RankOneCount) {
  for (int m = 1; m <= 5; ++m) {
    for (int k = 0; k < m; ++k) {
      RepE u(1), v(1);
      u.add(ch({1}), m);
      v.add(ch({1}), k);
      const auto r = bound_free_zero_set(u, v);
      ASSERT_TRUE(r.applicable());
      EXPECT_EQ(*r.bound, m - k);
    }
  }
}

TEST(FreeZeroSet, RankTwoExample) {
  RepE u(2), v(2);
  const CharF2 a = ch({1, 0}), b = ch({0, 1});
  u.add(a, 3).add(b, 1).add(a + b, 1);
  v.add(a, 1);
  const auto r = bound_free_zero_set(u, v);
  ASSERT_TRUE(r.applicable());
  EXPECT_EQ(*r.bound, 4);
  EXPECT_EQ(r.witness["subgroup"]["basis"].size(), 0u);
  EXPECT_EQ(r.witness["flag"][0], (std::vector<int>{1, 0}));
  EXPECT_EQ(r.first_failure(), nullptr);
}

TEST(FreeZeroSet, TrivialSourceNotApplicable) {
  RepE u(1), v(1);
  u.add(CharF2{}, 2);
  v.add(ch({1}), 1);
  const auto r = bound_free_zero_set(u, v);
  EXPECT_FALSE(r.applicable());
  ASSERT_NE(r.first_failure(), nullptr);
  EXPECT_EQ(r.first_failure()->description, "dim U - dim V > dim U^E");
}

TEST(FreeZeroSet, FixedTargetIsFailedItem) {
  RepE u(1), v(1);
  u.add(ch({1}), 3);
  v.add(CharF2{}, 1);
  const auto r = bound_free_zero_set(u, v);
  EXPECT_FALSE(r.applicable());
  EXPECT_EQ(r.first_failure()->description, "V^E = 0");
}

TEST(FreeZeroSet, WitnessReproducesVerdicts) {
  std::mt19937_64 rng(5);
  for (int l = 1; l <= 3; ++l) {
    std::vector<std::uint64_t> all, nontrivial;
    for (std::uint64_t a = 0; a < (1u << l); ++a) {
      all.push_back(a);
      if (a) nontrivial.push_back(a);
    }
    for (int s = 0; s < 60; ++s) {
      const RepE u = oracle::random_rep(rng, l, all, 6), v = oracle::random_rep(rng, l, nontrivial, 2);
      const auto r = bound_free_zero_set(u, v);
      if (!r.applicable()) continue;
      // Rebuild everything from the witness alone.
      std::vector<linalg::F2Vec> fb;
      for (const auto& row : r.witness["subgroup"]["basis"]) {
        fb.push_back(CharF2::from_coords(row.get<std::vector<int>>()).bits);
      }
      const Subgroup f(l, fb);
      const int q = r.witness["quotient_rank"].get<int>();
      std::vector<CharF2> basis;
      for (const auto& row : r.witness["flag"]) basis.push_back(CharF2::from_coords(row.get<std::vector<int>>()));
      const FlagE flag(q, basis);
      const RepE uf = fixed_subrep(u, f), vf = fixed_subrep(v, f);
      EXPECT_EQ(decompose(uf, flag).dims(), r.witness["u_dims"].get<std::vector<std::int64_t>>());
      EXPECT_EQ(decompose(vf, flag).dims(), r.witness["v_dims"].get<std::vector<std::int64_t>>());
      const auto pres = presentation(uf, flag);
      const Poly ev = euler_poly(vf, flag);
      EXPECT_EQ(ev.to_string(), r.witness["euler_class"].get<std::string>());
      EXPECT_EQ(reduce(ev, pres.relations).to_string(), r.witness["certificate"].get<std::string>());
      EXPECT_FALSE(reduce(ev, pres.relations).is_zero());
    }
  }
}

TEST(FreeZeroSetProperty, InvariantUnderAutomorphisms) {
  std::mt19937_64 rng(19);
  for (int l = 1; l <= 3; ++l) {
    std::vector<std::uint64_t> all, nontrivial;
    for (std::uint64_t a = 0; a < (1u << l); ++a) {
      all.push_back(a);
      if (a) nontrivial.push_back(a);
    }
    for (int s = 0; s < 60; ++s) {
      const RepE u = oracle::random_rep(rng, l, all, 5), v = oracle::random_rep(rng, l, nontrivial, 2);
      const auto g = random_gl(rng, l);
      const auto r1 = bound_free_zero_set(u, v);
      const auto r2 = bound_free_zero_set(apply(g, u), apply(g, v));
      EXPECT_EQ(r1.bound, r2.bound);
    }
  }
}

TEST(FreeZeroSetProperty, TrivialSummandNeverHelps) {
  std::mt19937_64 rng(29);
  for (int l = 1; l <= 3; ++l) {
    std::vector<std::uint64_t> all, nontrivial;
    for (std::uint64_t a = 0; a < (1u << l); ++a) {
      all.push_back(a);
      if (a) nontrivial.push_back(a);
    }
    for (int s = 0; s < 60; ++s) {
      const RepE u = oracle::random_rep(rng, l, all, 4), v = oracle::random_rep(rng, l, nontrivial, 2);
      RepE bigger = u;
      bigger.add(CharF2{}, 1);
      const bool before = u.dim() - v.dim() > u.fixed_dim();
      const bool after = bigger.dim() - v.dim() > bigger.fixed_dim();
      EXPECT_EQ(before, after);
      if (!bound_free_zero_set(u, v).applicable()) EXPECT_FALSE(bound_free_zero_set(bigger, v).applicable());
    }
  }
}

TEST(StiefelReal, SphereCase) {
  for (int n = 2; n <= 6; ++n) {
    RepE p(1), q(1);
    p.add(ch({1}), 1);
    q.add(ch({1}), n - 1);
    const auto r = bound_stiefel(p, q, n);
    ASSERT_TRUE(r.applicable()) << n;
    EXPECT_EQ(*r.bound, 0);
    EXPECT_EQ(r.witness["printed_bound"], 1);
    EXPECT_TRUE(has_note(r, "discrepancy"));
    EXPECT_TRUE(has_note(r, "non-empty"));
  }
}

TEST(StiefelReal, TensorQ) {
  for (int n = 3; n <= 6; ++n) {
    for (int l = 1; l < n && l <= 3; ++l) {
      RepE p(l), q(l);
      for (int i = 1; i <= l; ++i) {
        p.add(CharF2{std::uint64_t{1} << (i - 1)}, 1);
        if (n - i > 0) q.add(CharF2{std::uint64_t{1} << (i - 1)}, n - i);
      }
      const auto r = bound_stiefel(p, q, n);
      ASSERT_TRUE(r.applicable());
      EXPECT_EQ(*r.bound, 0);
      EXPECT_EQ(r.witness["printed_bound"], l);
      EXPECT_EQ(r.witness["dimension_consistent_bound"], 0);
    }
  }
}

TEST(StiefelReal, FailedItems) {
  RepE p(2), q(2);
  p.add(ch({1, 0}), 1).add(ch({0, 1}), 1);
  q.add(ch({1, 0}), 5);
  auto r = bound_stiefel(p, q, 3);
  EXPECT_FALSE(r.applicable());
  // Either ordering puts at least one summand too high.
  EXPECT_EQ(r.first_failure()->description, "dim Q_i <= n - i for i = 1..l");
  r = bound_stiefel(p, RepE(2), 2);
  EXPECT_EQ(r.first_failure()->description, "n > l");
  RepE p2(2);
  p2.add(ch({1, 0}), 2);
  r = bound_stiefel(p2, RepE(2), 4);
  EXPECT_EQ(r.first_failure()->description, "dim P_i = 1 for i = 1..l");
}

TEST(StiefelComplex, CircleCase) {
  for (int n = 2; n <= 6; ++n) {
    RepT p(1), q(1);
    p.add(w({1}), 1);
    q.add(w({1}), n - 1);
    const auto r = bound_stiefel(p, q, n);
    ASSERT_TRUE(r.applicable());
    EXPECT_EQ(*r.bound, 1);
    EXPECT_FALSE(has_note(r, "discrepancy"));
  }
}

TEST(StiefelComplex, RankTwo) {
  RepT p(2), q(2);
  p.add(w({1, 0}), 1).add(w({0, 1}), 1);
  q.add(w({1, 0}), 2).add(w({0, 1}), 1);
  const auto r = bound_stiefel(p, q, 3);
  ASSERT_TRUE(r.applicable());
  EXPECT_EQ(*r.bound, 2 * 2 * 3 - 4 - 2 * 3);
}

TEST(Torus, Examples) {
  RepT u(1), v(1);
  u.add(w({1}), 2);
  v.add(w({5}), 1);
  auto r = bound_torus(u, v, TorusVariant::Interior);
  ASSERT_TRUE(r.applicable());
  EXPECT_EQ(*r.bound, 2);

  RepT v1(1);
  v1.add(w({1}), 1);
  r = bound_torus(u, v1, TorusVariant::Annulus);
  ASSERT_TRUE(r.applicable());
  EXPECT_EQ(*r.bound, 1);
  EXPECT_EQ(r.hypotheses.back().status, ItemStatus::Assumed);

  r = bound_torus(u, u, TorusVariant::Annulus);
  EXPECT_FALSE(r.applicable());
  EXPECT_EQ(r.first_failure()->description, "dim_C U > dim_C V");
}

TEST(Torus, FixedWeightsFail) {
  RepT u(1), v(1);
  u.add(w({0}), 1).add(w({1}), 2);
  const auto r = bound_torus(u, v, TorusVariant::Interior);
  EXPECT_FALSE(r.applicable());
  EXPECT_EQ(r.first_failure()->description, "U^T = 0");
}

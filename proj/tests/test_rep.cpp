#include <gtest/gtest.h>

#include <random>

#include "eulerlab/flagsearch.hpp"
#include "eulerlab/rep.hpp"
#include "oracles.hpp"

using namespace eulerlab;

namespace {

CharF2 ch(std::initializer_list<int> c) {
  std::vector<int> v(c);
  return CharF2::from_coords(v);
}

Weight w(std::initializer_list<std::int64_t> c) { return Weight{std::vector<std::int64_t>(c)}; }

Poly P(const char* text, std::size_t nvars, Field f = Field::F2) { return Poly::parse(text, f, nvars); }

}  // namespace

TEST(RepTable, RejectsBadEntries) {
  RepE u(2);
  EXPECT_THROW(u.add(ch({1, 0, 1}), 1), StructuralError);
  EXPECT_THROW(u.add(ch({1, 0}), -1), InputError);
  EXPECT_THROW(CharF2::from_coords(std::vector<int>{2, 0}), InputError);
  EXPECT_THROW(FlagE(0, {}), InputError);
  EXPECT_THROW(FlagE(2, {ch({1, 0}), ch({1, 0})}), InputError);
}

TEST(Decompose, RegularRepresentationExample) {
  // (R[E]/R)^m for l=2: every nonzero character with multiplicity m.
  const int m = 3;
  RepE v(2);
  for (std::uint64_t a = 1; a < 4; ++a) v.add(CharF2{a}, m);
  for (const auto& c : oracle::all_chains(2)) {
    std::vector<CharF2> basis;
    for (auto b : c.basis) basis.push_back(CharF2{b});
    const auto d = decompose(v, FlagE(2, basis));
    EXPECT_EQ(d.dims(), (std::vector<std::int64_t>{m, 2 * m}));
  }
}

TEST(Decompose, SingleCharacter) {
  RepE u(1);
  u.add(ch({1}), 3);
  const auto d = decompose(u, FlagE::standard(1));
  EXPECT_EQ(d.dims(), std::vector<std::int64_t>{3});
  EXPECT_EQ(d.fixed.dim(), 0);
}

TEST(Decompose, TorusLines) {
  RepT u(2);
  u.add(w({1, 0}), 2).add(w({2, 0}), 1).add(w({0, 1}), 1);
  const auto d = decompose(u, RationalFlag::standard(2));
  EXPECT_EQ(d.dims(), (std::vector<std::int64_t>{3, 1}));
}

TEST(DecomposeProperty, PartitionMatchesOracle) {
  std::mt19937_64 rng(17);
  for (int l = 1; l <= 3; ++l) {
    std::vector<std::uint64_t> pool;
    for (std::uint64_t a = 0; a < (1u << l); ++a) pool.push_back(a);
    for (const auto& c : oracle::all_chains(l)) {
      std::vector<CharF2> basis;
      for (auto b : c.basis) basis.push_back(CharF2{b});
      const FlagE flag(l, basis);
      for (int s = 0; s < 10; ++s) {
        const RepE u = oracle::random_rep(rng, l, pool, 6);
        const auto d = decompose(u, flag);
        EXPECT_EQ(d.dims(), oracle::level_dims(u, c));
        std::int64_t total = d.fixed.dim();
        for (auto x : d.dims()) total += x;
        EXPECT_EQ(total, u.dim());
        EXPECT_EQ(d.fixed.dim(), u.fixed_dim());
      }
    }
  }
}

TEST(FlagFromChain, PicksLeastRepresentatives) {
  // E^1 = span(11), E^2 = everything: the least element outside E^1 is 01.
  const auto f = FlagE::from_chain(2, {{ch({1, 1})}, {ch({1, 1}), ch({1, 0})}});
  EXPECT_EQ(f.dual_basis(), (std::vector<CharF2>{ch({1, 1}), ch({1, 0})}));
  // Steps that are not nested, or do not grow by one, are rejected.
  EXPECT_THROW(FlagE::from_chain(2, {{ch({1, 1})}, {ch({1, 0})}}), InputError);
  EXPECT_THROW(FlagE::from_chain(2, {{ch({1, 1})}, {ch({1, 1})}}), InputError);
}

TEST(RationalFlagTest, NormalizesAndRejectsDependence) {
  const RationalFlag f(2, {w({-2, 0}), w({3, 6})});
  EXPECT_EQ(f.dual_basis(), (std::vector<Weight>{w({1, 0}), w({1, 2})}));
  EXPECT_THROW(RationalFlag(2, {w({1, 1}), w({2, 2})}), InputError);
  EXPECT_EQ(primitive(w({0, -4, 6})), w({0, 2, -3}));
}

TEST(FixedSubrep, Examples) {
  RepE u(2);
  const CharF2 a = ch({1, 0}), b = ch({0, 1});
  u.add(a, 3).add(b, 1).add(a + b, 1);
  EXPECT_EQ(fixed_subrep(u, Subgroup::trivial(2)), u);
  RepE with_fixed = u;
  with_fixed.add(CharF2{}, 2);
  const auto all = fixed_subrep(with_fixed, Subgroup::whole(2));
  EXPECT_EQ(all.rank(), 0);
  EXPECT_EQ(all.dim(), 2);
  EXPECT_EQ(all.fixed_dim(), 2);
  // ker a is spanned by the vector (0,1) of E.
  const Subgroup ker_a(2, {0b10});
  const auto r = fixed_subrep(u, ker_a);
  RepE want(1);
  want.add(ch({1}), 3);
  EXPECT_EQ(r, want);
}

TEST(FixedSubrepProperty, NestedSubgroupsCompose) {
  std::mt19937_64 rng(23);
  for (int l = 1; l <= 3; ++l) {
    std::vector<std::uint64_t> pool;
    for (std::uint64_t a = 0; a < (1u << l); ++a) pool.push_back(a);
    const auto subs = all_subgroups(l);
    for (int s = 0; s < 5; ++s) {
      const RepE u = oracle::random_rep(rng, l, pool, 7);
      for (const auto& f : subs) {
        const RepE uf = fixed_subrep(u, f);
        for (const auto& g : subs) {
          if (!g.contains(f)) continue;
          EXPECT_EQ(fixed_subrep(uf, quotient_image(g, f)), fixed_subrep(u, g));
        }
      }
    }
  }
}

TEST(EulerPoly, Examples) {
  RepE u(1);
  u.add(ch({1}), 4);
  EXPECT_EQ(euler_poly(u, FlagE::standard(1)), P("T1^4", 1));
  RepE v(2);
  v.add(ch({1, 0}), 1).add(ch({1, 1}), 1);
  EXPECT_EQ(euler_poly(v, FlagE::standard(2)), P("T1^2 + T1*T2", 2));
  RepT t(1);
  t.add(w({2}), 1).add(w({3}), 1);
  EXPECT_EQ(euler_poly(t, RationalFlag::standard(1)), P("6*T1^2", 1, Field::Q));
  EXPECT_EQ(euler_poly(RepE(2), FlagE::standard(2)), P("1", 2));
}

TEST(EulerPoly, TrivialCharacterFails) {
  RepE u(2);
  u.add(CharF2{}, 1);
  try {
    euler_poly(u, FlagE::standard(2));
    FAIL() << "expected HypothesisFailure";
  } catch (const HypothesisFailure& e) {
    EXPECT_NE(std::string(e.what()).find("euler class vanishes identically"), std::string::npos);
  }
}

TEST(EulerPolyProperty, MultiplicativeWithDegreeDim) {
  std::mt19937_64 rng(31);
  for (int l = 1; l <= 3; ++l) {
    std::vector<std::uint64_t> pool;
    for (std::uint64_t a = 1; a < (1u << l); ++a) pool.push_back(a);
    for (const auto& c : oracle::all_chains(l)) {
      std::vector<CharF2> basis;
      for (auto b : c.basis) basis.push_back(CharF2{b});
      const FlagE flag(l, basis);
      for (int s = 0; s < 5; ++s) {
        const RepE u = oracle::random_rep(rng, l, pool, 3), v = oracle::random_rep(rng, l, pool, 3);
        const Poly eu = euler_poly(u, flag), ev = euler_poly(v, flag);
        EXPECT_EQ(euler_poly(u + v, flag), eu * ev);
        for (const auto& [m, coeff] : eu.terms()) EXPECT_EQ(static_cast<std::int64_t>(m.degree()), u.dim());
      }
    }
  }
  std::uniform_int_distribution<std::int64_t> coord(-3, 3);
  for (int s = 0; s < 50; ++s) {
    RepT u(2), v(2);
    for (int k = 0; k < 3; ++k) {
      Weight x{{coord(rng), coord(rng)}}, y{{coord(rng), coord(rng)}};
      if (!x.is_trivial()) u.add(x, 1);
      if (!y.is_trivial()) v.add(y, 1);
    }
    const RationalFlag flag(2, {w({1, 1}), w({1, -2})});
    EXPECT_EQ(euler_poly(u + v, flag), euler_poly(u, flag) * euler_poly(v, flag));
    const Poly e = euler_poly(u, flag);
    for (const auto& [m, coeff] : e.terms()) {
      EXPECT_EQ(static_cast<std::int64_t>(m.degree()), u.dim());
    }
  }
}

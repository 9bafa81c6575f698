#include <gtest/gtest.h>

#include <random>

#include "eulerlab/errors.hpp"
#include "eulerlab/poly.hpp"

using namespace eulerlab;

namespace {

Poly P(const char* text, std::size_t nvars = 2, Field f = Field::F2) { return Poly::parse(text, f, nvars); }

// Random polynomial with up to `terms` terms and exponents below `max_exp`.
Poly random_poly(std::mt19937_64& rng, Field f, std::size_t nvars, int terms, std::uint32_t max_exp) {
  std::uniform_int_distribution<std::uint32_t> e(0, max_exp);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  Poly::Terms t;
  for (int k = 0; k < terms; ++k) {
    std::vector<std::uint32_t> exps(nvars);
    for (auto& x : exps) x = e(rng);
    mpq_class c = f == Field::F2 ? mpq_class(1) : mpq_class(num(rng), den(rng));
    t[Monomial(exps)] += c;
  }
  return Poly::from_terms(f, nvars, std::move(t));
}

// g_j = c*T_j^{d_j} + random terms of lower T_j-degree in T_1..T_j.
TriangularSystem random_system(std::mt19937_64& rng, Field f, std::size_t l, std::uint32_t max_d) {
  std::uniform_int_distribution<std::uint32_t> dd(1, max_d);
  std::vector<Poly> gens;
  for (std::size_t j = 0; j < l; ++j) {
    const auto d = dd(rng);
    Poly g = Poly::monomial(f, Monomial::variable(l, j, d), f == Field::Q ? mpq_class(3, 2) : mpq_class(1));
    std::uniform_int_distribution<std::uint32_t> low(0, d - 1), other(0, 3);
    for (int k = 0; k < 3; ++k) {
      std::vector<std::uint32_t> exps(l, 0);
      for (std::size_t i = 0; i < j; ++i) exps[i] = other(rng);
      exps[j] = low(rng);
      g = g + Poly::monomial(f, Monomial(exps));
    }
    gens.push_back(g);
  }
  return TriangularSystem(std::move(gens));
}

}  // namespace

TEST(PolyText, PrintsAscendingGrlex) {
  EXPECT_EQ(P("T2^3 + T1*T2^2 + T1^2*T2").to_string(), "T1^2*T2 + T1*T2^2 + T2^3");
  EXPECT_EQ(P("0").to_string(), "0");
  EXPECT_EQ(P("1 + T1").to_string(), "1 + T1");
  EXPECT_EQ(P("3/6*T1 - 2", 1, Field::Q).to_string(), "-2 + 1/2*T1");
}

TEST(PolyText, ParserAcceptsWhitespaceAndLowercase) {
  EXPECT_EQ(P("  t1 *t2+T2 ^ 2 "), P("T2^2+T1*T2"));
  EXPECT_EQ(P("T1 + T1"), P("0"));
}

TEST(PolyText, RejectsBadInput) {
  EXPECT_THROW(P("T3"), StructuralError);
  EXPECT_THROW(P("T1 +"), InputError);
  EXPECT_THROW(P("T1^"), InputError);
  EXPECT_THROW(P("1/2*T1"), InputError);  // no image in F2
}

TEST(PolyText, RoundTripRandom) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Field f = i % 2 ? Field::Q : Field::F2;
    const Poly p = random_poly(rng, f, 3, 6, 4);
    EXPECT_EQ(Poly::parse(p.to_string(), f, 3), p) << p.to_string();
  }
}

TEST(PolyArith, FrobeniusOverF2) { EXPECT_EQ(P("T1+T2") * P("T1+T2"), P("T1^2+T2^2")); }

TEST(PolyArith, OneIsIdentity) {
  const Poly p = P("T1^2*T2 + T2 + 1");
  EXPECT_EQ(p * Poly::constant(Field::F2, 2, 1), p);
}

TEST(PolyArith, HandExpansion) {
  EXPECT_EQ(P("T1^2+T1*T2+T2^2") * P("T2"), P("T1^2*T2+T1*T2^2+T2^3"));
}

TEST(PolyArith, MismatchIsStructuralError) {
  EXPECT_THROW(P("T1") + P("T1", 3), StructuralError);
  EXPECT_THROW(P("T1") * P("T1", 2, Field::Q), StructuralError);
}

TEST(PolyArith, RingAxiomsRandom) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const Field f = i % 2 ? Field::Q : Field::F2;
    const Poly a = random_poly(rng, f, 2, 4, 3), b = random_poly(rng, f, 2, 4, 3), c = random_poly(rng, f, 2, 4, 3);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a - a, Poly(f, 2));
    EXPECT_EQ(a.pow(3), a * a * a);
  }
}

TEST(TriangularSystemTest, ValidatesShape) {
  EXPECT_THROW(TriangularSystem({P("T1^2 + T2")}), InputError);            // count != nvars
  EXPECT_THROW(TriangularSystem({P("T1^2 + T2"), P("T2^2")}), InputError);  // g_1 uses T2
  EXPECT_THROW(TriangularSystem({P("T1^2"), P("T1*T2^2")}), InputError);    // non-constant leading coefficient
  EXPECT_THROW(TriangularSystem({P("T1^2"), P("T1")}), InputError);         // d_2 = 0
  EXPECT_NO_THROW(TriangularSystem({P("T1^2"), P("T2^2+T1*T2")}));
}

TEST(Reduce, Examples) {
  const TriangularSystem s1({P("T1^3", 1)});
  EXPECT_TRUE(reduce(P("T1^3", 1), s1).is_zero());
  EXPECT_EQ(reduce(P("T1^2", 1), s1), P("T1^2", 1));
  const TriangularSystem s2({P("T1^2"), P("T2^2+T1*T2")});
  EXPECT_TRUE(reduce(P("T1^3"), s2).is_zero());
}

TEST(Reduce, ZeroTestExamples) {
  const TriangularSystem s1({P("T1^3", 1)});
  auto z = is_zero_in_quotient(P("T1^2", 1), s1);
  EXPECT_FALSE(z.is_zero);
  EXPECT_EQ(z.normal_form, P("T1^2", 1));
  EXPECT_TRUE(is_zero_in_quotient(P("T1^3", 1), s1).is_zero);
  const TriangularSystem s2({P("T1^3"), P("T2^2+T1*T2")});
  z = is_zero_in_quotient(P("T1^2*T2"), s2);
  EXPECT_FALSE(z.is_zero);
  EXPECT_EQ(z.normal_form, P("T1^2*T2"));
}

TEST(Reduce, QuotientOverQUsesLeadingCoefficient) {
  // 2*T1^2 - 1 = 0 gives T1^2 = 1/2.
  const TriangularSystem s({P("2*T1^2 - 1", 1, Field::Q)});
  EXPECT_EQ(reduce(P("T1^4", 1, Field::Q), s), P("1/4", 1, Field::Q));
}

TEST(ReduceProperty, LinearIdempotentAndKillsIdeal) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 150; ++i) {
    const Field f = i % 3 == 0 ? Field::Q : Field::F2;
    const std::size_t l = 1 + i % 3;
    const auto s = random_system(rng, f, l, 4);
    const Poly p = random_poly(rng, f, l, 5, 6), q = random_poly(rng, f, l, 5, 6);
    const Poly rp = reduce(p, s);
    EXPECT_EQ(reduce(p + q, s), rp + reduce(q, s));
    EXPECT_EQ(reduce(rp, s), rp);
    for (std::size_t j = 0; j < l; ++j) {
      EXPECT_TRUE(reduce(p * s.generators()[j], s).is_zero());
      EXPECT_LT(rp.degree_in(j), s.degrees()[j]);
    }
    // p - r lies in the ideal: adding ideal elements does not change the normal form.
    const Poly h = random_poly(rng, f, l, 3, 3);
    EXPECT_EQ(reduce(p + h * s.generators()[l - 1], s), rp);
  }
}

TEST(ReduceProperty, OrderIndependent) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 150; ++i) {
    const Field f = i % 2 ? Field::Q : Field::F2;
    const std::size_t l = 1 + i % 3;
    const auto s = random_system(rng, f, l, 4);
    const Poly p = random_poly(rng, f, l, 6, 7);
    EXPECT_EQ(reduce(p, s, ReductionOrder::HighestVariableFirst), reduce(p, s, ReductionOrder::LexLeadingTerm));
  }
}

TEST(ReduceProperty, ExactRationalScaling) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 13);
  for (int i = 0; i < 100; ++i) {
    const std::size_t l = 1 + i % 3;
    const auto s = random_system(rng, Field::Q, l, 4);
    const Poly p = random_poly(rng, Field::Q, l, 5, 6);
    const mpq_class c(num(rng), den(rng));
    EXPECT_EQ(reduce(p.scaled(c), s), reduce(p, s).scaled(c));
  }
}

TEST(QuotientBasis, Examples) {
  const TriangularSystem s1({P("T1^3", 1)});
  using E = std::vector<std::uint32_t>;
  const std::vector<Monomial> want{Monomial(E{0}), Monomial(E{1}), Monomial(E{2})};
  EXPECT_EQ(quotient_basis(s1), want);
  EXPECT_EQ(quotient_basis(TriangularSystem({P("T1^3"), P("T2^2+T1")})).size(), 6u);
  const auto one = quotient_basis(TriangularSystem({P("T1"), P("T2")}));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], Monomial(2));
}

TEST(QuotientBasis, HilbertSeriesMatchesBasisCount) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 60; ++i) {
    const auto s = random_system(rng, Field::F2, 1 + i % 3, 5);
    const auto h = hilbert_series(s);
    const auto basis = quotient_basis(s);
    std::vector<std::uint64_t> counted(h.size(), 0);
    for (const auto& m : basis) {
      ASSERT_LT(m.degree(), counted.size());
      ++counted[m.degree()];
    }
    EXPECT_EQ(counted, h);
    for (std::uint32_t d = 0; d < h.size(); ++d) EXPECT_EQ(quotient_basis_in_degree(s, d).size(), h[d]);
  }
}

TEST(CompleteHomogeneous, SmallCases) {
  EXPECT_EQ(complete_homogeneous(Field::F2, 2, 1, 2, 3), P("T1^3+T1^2*T2+T1*T2^2+T2^3"));
  EXPECT_EQ(complete_homogeneous(Field::F2, 2, 2, 2, 2), P("T2^2"));
  EXPECT_EQ(complete_homogeneous(Field::F2, 2, 1, 2, 0), P("1"));
}

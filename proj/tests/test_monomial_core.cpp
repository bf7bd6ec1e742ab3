#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support/borel_enum.hpp"
#include "support/brute.hpp"

using namespace liaison;

namespace {

MonomialIdeal fixture_bf_rmk() { return MonomialIdeal(3, {{3, 0, 0}, {2, 1, 0}, {1, 2, 0}}); }

}  // namespace

TEST(Monomial, BasicArithmetic) {
  Monomial a{2, 0, 1}, b{1, 1, 0};
  EXPECT_EQ(a.degree(), 3u);
  EXPECT_EQ(a.to_string(), "x1^2*x3");
  EXPECT_EQ(Monomial::unit(3).to_string(), "1");
  EXPECT_EQ(a * b, (Monomial{3, 1, 1}));
  EXPECT_EQ(gcd(a, b), (Monomial{1, 0, 0}));
  EXPECT_EQ(lcm(a, b), (Monomial{2, 1, 1}));
  EXPECT_EQ(colon(a, b), (Monomial{1, 0, 1}));
  EXPECT_TRUE(Monomial({1, 0, 0}).divides(a));
  EXPECT_FALSE(b.divides(a));
  EXPECT_EQ(Monomial::variable(3, 1, 4), (Monomial{0, 4, 0}));
  EXPECT_EQ(Monomial({0, 4, 0}).pure_power_variable(), 1u);
  EXPECT_FALSE(a.is_pure_power());
}

TEST(Monomial, DegLexOrder) {
  EXPECT_TRUE(deglex_compare(Monomial{0, 0, 2}, Monomial{1, 0, 0}) > 0);
  EXPECT_TRUE(deglex_compare(Monomial{1, 0, 1}, Monomial{0, 2, 0}) > 0);
  EXPECT_TRUE(deglex_compare(Monomial{1, 1, 0}, Monomial{1, 1, 0}) == 0);
  // GeneratorOrder: ascending degree, then deglex-largest first
  std::vector<Monomial> v{{0, 0, 2}, {1, 0, 0}, {0, 2, 0}, {2, 0, 0}};
  std::sort(v.begin(), v.end(), GeneratorOrder{});
  EXPECT_EQ(v[0], (Monomial{1, 0, 0}));
  EXPECT_EQ(v[1], (Monomial{2, 0, 0}));
  EXPECT_EQ(v[3], (Monomial{0, 0, 2}));
}

TEST(Monomial, EnumerationMatchesBrute) {
  for (std::size_t n = 0; n <= 4; ++n)
    for (unsigned d = 0; d <= 6; ++d) {
      const auto ms = monomials_of_degree(n, d);
      const auto bs = brute::all_of_degree(n, d);
      ASSERT_EQ(ms.size(), bs.size()) << n << " " << d;
      EXPECT_EQ(monomial_count(n, d), bs.size());
      std::set<brute::Exps> a, b(bs.begin(), bs.end());
      for (const auto& m : ms) a.insert(brute::exps(m));
      EXPECT_EQ(a, b);
      for (std::size_t k = 1; k < ms.size(); ++k) EXPECT_TRUE(deglex_compare(ms[k - 1], ms[k]) > 0);
    }
  EXPECT_EQ(binomial(10, 3), 120u);
  EXPECT_EQ(binomial(3, 5), 0u);
  EXPECT_EQ(monomial_count(3, -1), 0u);
}

TEST(MonomialIdeal, MinimalizationAndMembership) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const auto raw = brute::random_gens(rng, n, 5, 1 + rng() % 7);
    const auto J = brute::ideal(n, raw);
    EXPECT_EQ(brute::sorted(brute::gens_of(J)), brute::minimal(raw));
    for (std::size_t k = 1; k < J.size(); ++k)
      EXPECT_TRUE(GeneratorOrder{}(J.generators()[k - 1], J.generators()[k]));
    for (unsigned d = 0; d <= 6; ++d)
      for (const auto& m : brute::all_of_degree(n, d))
        ASSERT_EQ(J.contains(Monomial(std::vector<Exponent>(m.begin(), m.end()))), brute::member(m, raw));
  }
}

TEST(MonomialIdeal, ColonSumProductProperties) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    const auto J = brute::ideal(n, brute::random_gens(rng, n, 4, 1 + rng() % 5));
    const auto K = brute::ideal(n, brute::random_gens(rng, n, 4, 1 + rng() % 5));
    const auto e = brute::random_exps(rng, n, 3);
    const Monomial m(std::vector<Exponent>(e.begin(), e.end()));
    const auto C = colon(J, m);
    const auto S = sum(J, K);
    const auto P = multiply(J, m);
    for (unsigned d = 0; d <= 5; ++d)
      for (const auto& x : brute::all_of_degree(n, d)) {
        const Monomial u(std::vector<Exponent>(x.begin(), x.end()));
        EXPECT_EQ(C.contains(u), J.contains(u * m));
        EXPECT_EQ(S.contains(u), J.contains(u) || K.contains(u));
        EXPECT_EQ(P.contains(u), m.divides(u) && J.contains(colon(u, m)));
      }
  }
}

TEST(MonomialIdeal, RestrictExtendRoundTrip) {
  const MonomialIdeal J(3, {{0, 2, 0}, {0, 1, 1}, {0, 0, 3}});
  const auto sub = restrict(J, {1, 2});
  EXPECT_EQ(sub.ideal.ambient(), 2u);
  EXPECT_EQ(sub.ideal, MonomialIdeal(2, {{2, 0}, {1, 1}, {0, 3}}));
  EXPECT_EQ(extend(sub.ideal, sub.variables, 3), J);
}

TEST(MonomialIdeal, ArtinianAndDegenerate) {
  EXPECT_TRUE(is_artinian(MonomialIdeal::maximal_power(3, 2)));
  EXPECT_FALSE(is_artinian(fixture_bf_rmk()));
  EXPECT_TRUE(is_artinian(MonomialIdeal::unit(2)));
  EXPECT_TRUE(MonomialIdeal::zero(2).is_zero());
  EXPECT_THROW(height(MonomialIdeal::zero(2)), InputError);
  EXPECT_THROW(height(MonomialIdeal::unit(2)), InputError);
  EXPECT_THROW(irreducible_decomposition(MonomialIdeal::unit(2)), InputError);
}

TEST(MonomialIdeal, BorelAndLexMatchBrute) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const auto g = trial % 2 ? brute::random_borel(rng, n, 4, 1 + rng() % 3) : brute::random_gens(rng, n, 4, 1 + rng() % 5);
    const auto J = brute::ideal(n, g);
    ASSERT_EQ(is_borel_fixed(J), brute::borel_fixed(g, n)) << J.to_string();
    ASSERT_EQ(is_lex_segment(J), brute::lex_segment(g, n)) << J.to_string();
  }
}

TEST(MonomialIdeal, BorelFixedButNotLex) {
  const auto J = fixture_bf_rmk();
  EXPECT_TRUE(is_borel_fixed(J));
  EXPECT_FALSE(is_lex_segment(J));
  ASSERT_TRUE(lex_segment_witness(J).has_value());
  EXPECT_EQ(*lex_segment_witness(J), (Monomial{2, 0, 1}));
}

TEST(MonomialIdeal, HeightPrimesDecompositionMatchBrute) {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const auto g = brute::random_gens(rng, n, 4, 1 + rng() % 5);
    const auto J = brute::ideal(n, g);
    ASSERT_EQ(height(J), brute::height(g, n)) << J.to_string();
    std::set<std::uint32_t> ass;
    for (const auto& p : associated_primes(J)) {
      std::uint32_t mask = 0;
      for (auto i : p) mask |= 1u << i;
      ass.insert(mask);
    }
    ASSERT_EQ(ass, brute::associated(g, n)) << J.to_string();
    EXPECT_EQ(is_equidimensional(J), brute::unmixed(g, n));
    const auto comps = irreducible_decomposition(J);
    for (unsigned d = 0; d <= 6; ++d)
      for (const auto& x : brute::all_of_degree(n, d)) {
        const Monomial u(std::vector<Exponent>(x.begin(), x.end()));
        bool in_all = true;
        for (const auto& c : comps) in_all = in_all && c.to_ideal(n).contains(u);
        ASSERT_EQ(in_all, J.contains(u)) << J.to_string() << " at " << u.to_string();
      }
  }
}

TEST(MonomialIdeal, StandardMonomialCounts) {
  std::mt19937 rng(15);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const auto g = brute::random_gens(rng, n, 5, 1 + rng() % 5);
    const auto J = brute::ideal(n, g);
    for (unsigned d = 0; d <= 7; ++d) {
      EXPECT_EQ(static_cast<std::int64_t>(count_standard_monomials(J, d)), brute::hilbert(g, n, d));
      EXPECT_EQ(static_cast<std::int64_t>(standard_monomials(J, d).size()), brute::hilbert(g, n, d));
    }
  }
}

TEST(BorelCM, ConditionsOnFixtures) {
  const auto bad = fixture_bf_rmk();
  EXPECT_FALSE(is_equidimensional(bad));
  EXPECT_FALSE(has_cm_borel_shape(bad, height(bad)));
  EXPECT_FALSE(cone_over_artinian_borel(bad, height(bad)).has_value());
  EXPECT_FALSE(is_cm_borel(bad).has_value());

  const auto m2 = MonomialIdeal::maximal_power(3, 2);
  EXPECT_TRUE(is_equidimensional(m2));
  auto cone = is_cm_borel(m2);
  ASSERT_TRUE(cone.has_value());
  EXPECT_EQ(cone->c, 3u);

  // (x1, x2^2) in three variables: a cone over an Artinian ideal of K[x1,x2]
  const MonomialIdeal J(3, {{1, 0, 0}, {0, 2, 0}});
  cone = is_cm_borel(J);
  ASSERT_TRUE(cone.has_value());
  EXPECT_EQ(cone->c, 2u);
  EXPECT_EQ(cone->base, MonomialIdeal(2, {{1, 0}, {0, 2}}));

  EXPECT_THROW(is_cm_borel(MonomialIdeal(2, {{0, 1}})), InputError);
}

TEST(BorelCM, ConditionsAgreeOnRandomBorel) {
  std::mt19937 rng(16);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const auto J = brute::ideal(n, brute::random_borel(rng, n, 4, 1 + rng() % 3));
    const auto c = height(J);
    const bool ii = is_equidimensional(J);
    const bool iii = has_cm_borel_shape(J, c);
    const bool iv = cone_over_artinian_borel(J, c).has_value();
    EXPECT_EQ(ii, iii) << J.to_string();
    EXPECT_EQ(iii, iv) << J.to_string();
  }
}

TEST(BorelEnumeration, MatchesSubsetSearch) {
  for (auto [n, D] : {std::pair<std::size_t, unsigned>{2, 3}, {3, 2}, {1, 4}}) {
    std::vector<brute::Exps> pool;
    for (unsigned d = 1; d <= D; ++d)
      for (const auto& m : brute::all_of_degree(n, d)) pool.push_back(m);
    std::set<brute::Gens> expected;
    for (std::uint32_t mask = 1; mask < (1u << pool.size()); ++mask) {
      brute::Gens g;
      for (std::size_t k = 0; k < pool.size(); ++k)
        if (mask >> k & 1) g.push_back(pool[k]);
      if (brute::borel_fixed(g, n)) expected.insert(brute::minimal(g));
    }
    std::set<brute::Gens> found;
    const auto count = borel_enum::for_each_borel_ideal(n, D, [&](const MonomialIdeal& J) {
      EXPECT_TRUE(found.insert(brute::sorted(brute::gens_of(J))).second) << J.to_string();
    });
    EXPECT_EQ(count, found.size());
    EXPECT_EQ(found, expected) << n << " " << D;
  }
}

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "coadjoint/errors.hpp"
#include "coadjoint/orbit.hpp"
#include "generators.hpp"

using namespace coadjoint;

namespace {

RootSystem rs_of(const char* t) { return build_root_system(CartanType::parse(t)); }

StabilizerReport stab(const RootSystem& rs, const char* eta) {
  return stabilizer(OrbitDatum(rs, RationalWeight::parse(eta)));
}

std::string levi(const char* t, const char* eta) {
  const RootSystem rs = rs_of(t);
  return stab(rs, eta).levi_type.to_string();
}

/// Type A_{n-1} oracle in epsilon coordinates: eta has entries
/// lambda_i = sum_{j >= i} w_j, the coroots are e_i - e_j, and the Levi
/// roots are the pairs with equal entries.
std::size_t type_a_levi_count(const RationalWeight& w) {
  const std::size_t n = w.rank() + 1;
  std::vector<Rational> lambda(n, Rational(0));
  for (std::size_t i = n - 1; i-- > 0;) lambda[i] = lambda[i + 1] + w.coords[i];
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && lambda[i] == lambda[j]) ++count;
  return count;
}

}  // namespace

TEST(Stabilizer, Examples) {
  const RootSystem a1 = rs_of("A1");
  const auto r1 = stab(a1, "1");
  EXPECT_TRUE(r1.regular);
  EXPECT_TRUE(r1.levi_roots.empty());
  EXPECT_EQ(r1.center_torus_rank, 1);

  const RootSystem a2 = rs_of("A2");
  const auto r2 = stab(a2, "1,0");
  EXPECT_FALSE(r2.regular);
  EXPECT_EQ(r2.levi_type.to_string(), "A1");
  EXPECT_EQ(r2.levi_roots.size(), 2u);
  EXPECT_EQ(r2.center_torus_rank, 1);

  const RootSystem a3 = rs_of("A3");
  const OrbitDatum od(a3, RationalWeight::parse("1,0,1"));
  const auto r3 = stabilizer(od);
  EXPECT_EQ(r3.levi_type.to_string(), "A1");
  EXPECT_EQ(r3.levi_roots.size(), type_a_levi_count(od.eta()));
  EXPECT_EQ(type_a_blocks(od), (std::vector<int>{1, 2, 1}));
}

TEST(Stabilizer, A3AgainstAllTwelveCoroots) {
  // Brute force: eta = (1,0,1) is (2,1,1,0) in epsilon coordinates; the
  // coroots e_i - e_j vanish on it only for {i,j} = {2,3}.
  const RootSystem a3 = rs_of("A3");
  const auto r = stab(a3, "1,0,1");
  ASSERT_EQ(r.levi_roots.size(), 2u);
  std::set<Root> got(r.levi_roots.begin(), r.levi_roots.end());
  EXPECT_TRUE(got.count(Root{{0, 1, 0}}));
  EXPECT_TRUE(got.count(Root{{0, -1, 0}}));
}

TEST(Stabilizer, LeviTypes) {
  EXPECT_EQ(levi("B3", "0,0,1"), "A2");
  EXPECT_EQ(levi("B3", "1,0,0"), "B2");
  EXPECT_EQ(levi("C3", "1,0,0"), "B2");
  EXPECT_EQ(levi("D4", "0,1,0,0"), "A1xA1xA1");
  EXPECT_EQ(levi("D5", "1,0,0,0,0"), "D4");
  EXPECT_EQ(levi("E8", "1,0,0,0,0,0,0,0"), "D7");
  EXPECT_EQ(levi("E8", "0,0,0,0,0,0,0,1"), "E7");
  EXPECT_EQ(levi("E7", "0,0,0,0,0,0,1"), "E6");
  EXPECT_EQ(levi("F4", "1,0,0,0"), "C3");
  EXPECT_EQ(levi("F4", "0,0,0,1"), "B3");
  EXPECT_EQ(levi("G2", "1,0"), "A1");
  EXPECT_EQ(levi("G2", "1,1"), "");
  EXPECT_EQ(levi("A2xB2", "0,0,0,0"), "A2xB2");
}

TEST(Stabilizer, LeviTypeTracksRootCount) {
  for (const char* t : {"B4", "C4", "D5", "F4", "E6"}) {
    const RootSystem rs = rs_of(t);
    gen::Engine rng(17);
    for (int c = 0; c < 40; ++c) {
      const Weight w = gen::weight(rng, rs.rank(), -1, 1);
      const auto r = stabilizer(OrbitDatum(rs, RationalWeight(w)));
      if (r.levi_type.empty()) {
        EXPECT_TRUE(r.levi_roots.empty()) << t;
      } else {
        EXPECT_EQ(RootSystem(r.levi_type).roots().size(), r.levi_roots.size()) << t;
      }
      EXPECT_EQ(r.center_torus_rank, rs.rank() - r.levi_type.rank());
      EXPECT_EQ(r.levi_simple_roots.size(), static_cast<std::size_t>(r.levi_type.rank()));
    }
  }
}

TEST(Stabilizer, TypeALeviCountMatchesEpsilonOracle) {
  gen::Engine rng(23);
  for (int c = 0; c < 150; ++c) {
    const int n = static_cast<int>(gen::uniform(rng, 2, 8));
    const RootSystem& rs = *gen::group(CartanType({{'A', n - 1}})).rs;
    const RationalWeight w = gen::rational_weight(rng, n - 1);
    EXPECT_EQ(stabilizer(OrbitDatum(rs, w)).levi_roots.size(), type_a_levi_count(w));
  }
}

TEST(Orbit, RankMismatchThrows) {
  const RootSystem a2 = rs_of("A2");
  EXPECT_THROW(OrbitDatum(a2, RationalWeight::parse("1")), InvalidInput);
}

TEST(Orbit, Quantizability) {
  const RootSystem a1 = rs_of("A1"), a2 = rs_of("A2"), e7 = rs_of("E7");
  EXPECT_TRUE(is_quantizable(OrbitDatum(e7, RationalWeight(e7.fundamental_weight(0)))));
  EXPECT_FALSE(is_quantizable(OrbitDatum(a1, RationalWeight::parse("1/2"))));
  EXPECT_TRUE(is_quantizable(OrbitDatum(a2, RationalWeight::parse("2,-3"))));
  EXPECT_TRUE(is_quantizable(OrbitDatum(a2, RationalWeight::parse("4/2,-3"))));
}

TEST(Orbit, Dimension) {
  const RootSystem a1 = rs_of("A1"), a2 = rs_of("A2");
  EXPECT_EQ(symplectic_dimension(OrbitDatum(a1, RationalWeight::parse("3"))), 2);
  EXPECT_EQ(symplectic_dimension(OrbitDatum(a2, RationalWeight::parse("1,0"))), 4);
  EXPECT_EQ(symplectic_dimension(OrbitDatum(a2, RationalWeight::parse("1,1"))), 6);
  EXPECT_EQ(symplectic_dimension(OrbitDatum(a2, RationalWeight::parse("0,0"))), 0);
  EXPECT_EQ(symplectic_dimension(OrbitDatum(a2, RationalWeight::parse("1,-1"))), 4);
}

TEST(Orbit, TypeABlocks) {
  const RootSystem a4 = rs_of("A4");
  EXPECT_EQ(type_a_blocks(OrbitDatum(a4, RationalWeight::parse("0,0,0,0"))), (std::vector<int>{5}));
  EXPECT_EQ(type_a_blocks(OrbitDatum(a4, RationalWeight::parse("0,0,0,1"))),
            (std::vector<int>{4, 1}));
  EXPECT_EQ(type_a_blocks(OrbitDatum(a4, RationalWeight::parse("1,1,1,1"))),
            (std::vector<int>{1, 1, 1, 1, 1}));
  const RootSystem b2 = rs_of("B2");
  EXPECT_THROW(type_a_blocks(OrbitDatum(b2, RationalWeight::parse("1,0"))), InvalidInput);
}

TEST(OrbitProperties, RegularIffFullDimensionIffNoLevi) {
  gen::Engine rng(101);
  for (int c = 0; c < 200; ++c) {
    const CartanType t = gen::semisimple_type(rng, 6);
    const RootSystem& rs = *gen::group(t).rs;
    const OrbitDatum od(rs, gen::rational_weight(rng, t.rank()));
    const auto r = stabilizer(od);
    const bool full = symplectic_dimension(od) == static_cast<int>(rs.roots().size());
    EXPECT_EQ(r.regular, full);
    EXPECT_EQ(r.regular, r.levi_roots.empty());
    EXPECT_EQ(symplectic_dimension(od) % 2, 0);
  }
}

TEST(OrbitProperties, LeviClosedUnderNegationAndAddition) {
  gen::Engine rng(102);
  for (int c = 0; c < 120; ++c) {
    const CartanType t = gen::semisimple_type(rng, 6);
    const RootSystem& rs = *gen::group(t).rs;
    const auto r = stabilizer(OrbitDatum(rs, RationalWeight(gen::weight(rng, t.rank(), -1, 1))));
    std::set<Root> levi(r.levi_roots.begin(), r.levi_roots.end());
    for (const auto& a : r.levi_roots) {
      EXPECT_TRUE(levi.count(-a));
      for (const auto& b : r.levi_roots) {
        Root sum = a;
        for (std::size_t i = 0; i < sum.coords.size(); ++i) sum.coords[i] += b.coords[i];
        if (rs.index_of(sum) >= 0) EXPECT_TRUE(levi.count(sum)) << t.to_string();
      }
    }
  }
}

TEST(OrbitProperties, ParabolicContainsPositivesAndLevi) {
  gen::Engine rng(103);
  for (int c = 0; c < 120; ++c) {
    const CartanType t = gen::semisimple_type(rng, 6);
    const RootSystem& rs = *gen::group(t).rs;
    const auto r = stabilizer(OrbitDatum(rs, RationalWeight(gen::dominant_weight(rng, t.rank(), 2))));
    std::set<Root> par(r.parabolic_roots.begin(), r.parabolic_roots.end());
    for (const auto& a : rs.positive_roots()) EXPECT_TRUE(par.count(a)) << t.to_string();
    for (const auto& a : r.levi_roots) EXPECT_TRUE(par.count(-a)) << t.to_string();
    EXPECT_EQ(par.size(), rs.num_positive() + r.levi_roots.size() / 2);
  }
}

TEST(OrbitProperties, ScalingInvariance) {
  gen::Engine rng(104);
  for (int c = 0; c < 150; ++c) {
    const CartanType t = gen::semisimple_type(rng, 6);
    const RootSystem& rs = *gen::group(t).rs;
    const RationalWeight w = gen::rational_weight(rng, t.rank());
    const Rational k = ratio(gen::uniform(rng, 1, 9), gen::uniform(rng, 1, 9));
    const auto a = stabilizer(OrbitDatum(rs, w));
    const auto b = stabilizer(OrbitDatum(rs, w.scaled(k)));
    EXPECT_EQ(a.levi_roots, b.levi_roots);
    EXPECT_EQ(a.parabolic_roots, b.parabolic_roots);
  }
}

TEST(OrbitProperties, NegationSymmetry) {
  gen::Engine rng(105);
  for (int c = 0; c < 150; ++c) {
    const CartanType t = gen::semisimple_type(rng, 6);
    const RootSystem& rs = *gen::group(t).rs;
    const RationalWeight w = gen::rational_weight(rng, t.rank());
    const auto a = stabilizer(OrbitDatum(rs, w));
    const auto b = stabilizer(OrbitDatum(rs, w.scaled(-1)));
    EXPECT_EQ(std::set<Root>(a.levi_roots.begin(), a.levi_roots.end()),
              std::set<Root>(b.levi_roots.begin(), b.levi_roots.end()));
    std::set<Root> neg;
    for (const auto& r : a.parabolic_roots) neg.insert(-r);
    EXPECT_EQ(neg, std::set<Root>(b.parabolic_roots.begin(), b.parabolic_roots.end()));
  }
}

TEST(OrbitProperties, QuantizabilityIsWeylInvariant) {
  gen::Engine rng(106);
  for (int c = 0; c < 150; ++c) {
    const CartanType t = gen::semisimple_type(rng, 6);
    const RootSystem& rs = *gen::group(t).rs;
    const Weight w = gen::weight(rng, t.rank(), -3, 3);
    const int i = static_cast<int>(gen::uniform(rng, 0, t.rank() - 1));
    const Weight s = rs.reflect(w, i);
    EXPECT_TRUE(is_quantizable(OrbitDatum(rs, RationalWeight(s))));
    // Non-integral points stay non-integral: reflect the half-shifted weight.
    RationalWeight half = RationalWeight(w).scaled(Rational(1) / 2);
    const bool before = is_quantizable(OrbitDatum(rs, half));
    std::vector<Rational> refl = half.coords;
    const Rational p = half.coords[static_cast<std::size_t>(i)];
    for (int k = 0; k < rs.rank(); ++k)
      refl[static_cast<std::size_t>(k)] -= p * rs.cartan_matrix()(k, i);
    EXPECT_EQ(before, is_quantizable(OrbitDatum(rs, RationalWeight(refl))));
  }
}

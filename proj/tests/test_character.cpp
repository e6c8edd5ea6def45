#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "coadjoint/character.hpp"
#include "coadjoint/errors.hpp"
#include "coadjoint/sun_orbits.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace coadjoint;
using cd = std::complex<double>;

namespace {

RootSystem rs_of(const char* t) { return build_root_system(CartanType::parse(t)); }

KappaTable table(const RootSystem& rs, const char* eta) {
  return kappa_on_center(OrbitDatum(rs, RationalWeight::parse(eta)), CenterGroup(rs));
}

cd phase(double turns) { return std::polar(1.0, 2.0 * std::numbers::pi * turns); }

/// Random point of the SU(n) maximal torus as eigenvalues x_1..x_n.
std::vector<cd> random_eigenvalues(gen::Engine& rng, int n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<cd> x;
  double total = 0;
  for (int i = 0; i + 1 < n; ++i) {
    const double a = u(rng);
    total += a;
    x.push_back(phase(a));
  }
  x.push_back(phase(-total));
  return x;
}

}  // namespace

TEST(KappaOnCenter, FubiniStudyLine) {
  const RootSystem a1 = rs_of("A1");
  const CenterGroup cg(a1);
  const KappaTable t = kappa_on_center(OrbitDatum(a1, RationalWeight::parse("1")), cg);
  EXPECT_EQ(t.at(cg.generators()[0]), RootOfUnity(1, 2));
  EXPECT_TRUE(t.injective);
  EXPECT_EQ(t.image_size, 2);
  const Pi1Bound b = pi1_lower_bound(t);
  EXPECT_EQ(b.value, 2);
  EXPECT_EQ(to_string(b.provenance), "paper_theorem");
}

TEST(KappaOnCenter, RootLatticeIsTrivial) {
  for (const auto& [type, eta] : std::vector<std::pair<const char*, const char*>>{
           {"A1", "2"}, {"A2", "1,1"}, {"A3", "0,2,0"}, {"D4", "0,1,0,0"}, {"E6", "0,1,0,0,0,0"}}) {
    const RootSystem rs = rs_of(type);
    const KappaTable t = table(rs, eta);
    for (const auto& e : t.entries) EXPECT_TRUE(e.value.is_one()) << type;
    EXPECT_EQ(t.image_size, 1);
    EXPECT_EQ(pi1_lower_bound(t).value, 1);
    EXPECT_EQ(to_string(pi1_lower_bound(t).provenance), "trivial");
  }
}

TEST(KappaOnCenter, ProjectivePlane) {
  const RootSystem a2 = rs_of("A2");
  const KappaTable t = table(a2, "1,0");
  EXPECT_TRUE(t.injective);
  EXPECT_EQ(pi1_lower_bound(t).value, 3);
  EXPECT_EQ(pi1_lower_bound(t).provenance, BoundProvenance::kInjectiveOnCenter);
}

TEST(KappaOnCenter, DerivedImageSize) {
  // D4 with a spin weight: image {1, -1} inside a center of order 4.
  const RootSystem d4 = rs_of("D4");
  const KappaTable t = table(d4, "0,0,1,0");
  EXPECT_EQ(t.center_order, 4);
  EXPECT_EQ(t.image_size, 2);
  EXPECT_FALSE(t.injective);
  EXPECT_EQ(pi1_lower_bound(t).value, 2);
  EXPECT_EQ(to_string(pi1_lower_bound(t).provenance), "derived_image_size");
  // SU(6), eta = 2 varpi_1: z -> z^{-2} has image of size 3.
  const RootSystem a5 = rs_of("A5");
  EXPECT_EQ(pi1_lower_bound(table(a5, "2,0,0,0,0")).value, 3);
}

TEST(KappaOnCenter, TrivialCenterCountsAsInjective) {
  const RootSystem e8 = rs_of("E8");
  const KappaTable t = table(e8, "1,0,0,0,0,0,0,0");
  EXPECT_TRUE(t.injective);
  EXPECT_EQ(pi1_lower_bound(t).value, 1);
}

TEST(KappaOnCenter, NonIntegralIsRejected) {
  const RootSystem a1 = rs_of("A1");
  EXPECT_THROW(table(a1, "1/2"), NotQuantizable);
}

TEST(KappaOnCenter, CalibratedAgainstScalarMatrices) {
  // kappa = e^{-eta}: on zeta I with zeta = e^{2 pi i a/n} this is
  // zeta^{-|lambda|}, |lambda| the number of boxes of the Young diagram.
  gen::Engine rng(31);
  for (int c = 0; c < 100; ++c) {
    const int n = static_cast<int>(gen::uniform(rng, 2, 8));
    const auto& g = gen::group(CartanType({{'A', n - 1}}));
    const Weight w = gen::weight(rng, n - 1);
    std::int64_t boxes = 0;
    for (int j = 0; j < n - 1; ++j) boxes += (j + 1) * w.coords[static_cast<std::size_t>(j)];
    const KappaTable t = kappa_on_center(OrbitDatum(*g.rs, RationalWeight(w)), *g.center);
    for (std::int64_t a = 0; a < n; ++a)
      EXPECT_EQ(t.at(sun_center_element(*g.center, a)), RootOfUnity(-a * boxes, n));
  }
}

TEST(KappaOnCenter, TableInvariants) {
  gen::Engine rng(32);
  for (int c = 0; c < 150; ++c) {
    const CartanType type = gen::semisimple_type(rng);
    const auto& g = gen::group(type);
    const KappaTable t =
        kappa_on_center(OrbitDatum(*g.rs, RationalWeight(gen::weight(rng, type.rank()))), *g.center);
    EXPECT_EQ(t.center_order % t.image_size, 0);
    EXPECT_EQ(t.injective, t.image_size == t.center_order);
    EXPECT_EQ(static_cast<std::int64_t>(t.entries.size()), t.center_order);
    for (const auto& e : t.entries) EXPECT_EQ(t.center_order % e.value.order(), 0);
    const Pi1Bound b = pi1_lower_bound(t);
    EXPECT_EQ(b.value, t.image_size);
    EXPECT_EQ(b.provenance == BoundProvenance::kInjectiveOnCenter, t.injective);
  }
}

TEST(KappaOnCenter, ScalingCovariance) {
  const props::Outcome o = props::kappa_scaling_covariance(150);
  EXPECT_TRUE(o.ok()) << o.first_failure;
}

TEST(WeylDimension, Examples) {
  const RootSystem a1 = rs_of("A1");
  EXPECT_EQ(weyl_dimension(a1, Weight{{3}}), 4);
  EXPECT_EQ(weyl_dimension(rs_of("A2"), Weight{{1, 1}}), 8);
  EXPECT_EQ(weyl_dimension(rs_of("G2"), Weight{{1, 0}}), 7);
  EXPECT_EQ(weyl_dimension(rs_of("E8"), Weight{{0, 0, 0, 0, 0, 0, 0, 1}}), 248);
  EXPECT_EQ(weyl_dimension(rs_of("E6"), Weight{{1, 0, 0, 0, 0, 0}}), 27);
  EXPECT_EQ(weyl_dimension(rs_of("B3"), Weight{{0, 0, 1}}), 8);
  EXPECT_THROW(weyl_dimension(rs_of("A2"), Weight{{1, -1}}), InvalidInput);
  for (const char* t : {"A3", "B4", "C3", "D5", "E7", "F4", "G2xA1"}) {
    const RootSystem rs = rs_of(t);
    EXPECT_EQ(weyl_dimension(rs, Weight::zero(static_cast<std::size_t>(rs.rank()))), 1) << t;
  }
}

TEST(WeylDimension, AdjointRepresentations) {
  // The highest root is the highest weight of the adjoint representation,
  // whose dimension is #roots + rank.
  for (const auto& [series, rank] : oracle::simple_types(8)) {
    const RootSystem rs(CartanType({{series, rank}}));
    const Weight theta = rs.root_as_weight(rs.positive_roots().back());
    EXPECT_EQ(weyl_dimension(rs, theta), BigInt(rs.roots().size() + static_cast<std::size_t>(rank)))
        << series << rank;
  }
}

TEST(WeylDimension, TypeAMatchesTableauxCount) {
  for (int n = 2; n <= 4; ++n) {
    const RootSystem& rs = *gen::group(CartanType({{'A', n - 1}})).rs;
    gen::Engine rng(static_cast<std::uint64_t>(40 + n));
    for (int c = 0; c < 40; ++c) {
      const Weight w = gen::dominant_weight(rng, n - 1, 3);
      EXPECT_EQ(weyl_dimension(rs, w), oracle::ssyt_dimension(w.coords));
    }
  }
}

TEST(WeylCharacter, SuTwoClosedForm) {
  const RootSystem a1 = rs_of("A1");
  gen::Engine rng(50);
  std::uniform_real_distribution<double> u(0.01, 0.49);
  for (int k = 1; k <= 5; ++k) {
    for (int c = 0; c < 20; ++c) {
      const cd t1 = phase(u(rng)), t2 = 1.0 / t1;
      const cd expected = (std::pow(t1, k + 1) - std::pow(t2, k + 1)) / (t1 - t2);
      const std::vector<cd> t{t1};
      EXPECT_LT(std::abs(weyl_character_at_torus(a1, Weight{{k}}, t) - expected), 1e-9);
    }
  }
}

TEST(WeylCharacter, TrivialRepresentationIsOne) {
  for (const char* type : {"A2", "B3", "G2", "F4"}) {
    const RootSystem rs = rs_of(type);
    gen::Engine rng(51);
    std::vector<Rational> x;
    for (int i = 0; i < rs.rank(); ++i) x.push_back(ratio(gen::uniform(rng, 1, 997), 1009));
    const auto t = torus_point_from_coweight(rs, x);
    EXPECT_LT(std::abs(weyl_character_at_torus(rs, Weight::zero(static_cast<std::size_t>(rs.rank())), t) - 1.0),
              1e-9)
        << type;
  }
}

TEST(WeylCharacter, NearIdentityApproachesDimension) {
  // Re chi(eps v) = dim - a eps^2 + O(eps^4); one Richardson step removes the
  // quadratic term while staying clear of the denominator floor.
  for (const auto& [type, hw] : std::vector<std::pair<const char*, Weight>>{
           {"A2", Weight{{1, 1}}}, {"B2", Weight{{1, 0}}}, {"G2", Weight{{1, 0}}}, {"A3", Weight{{1, 0, 1}}}}) {
    const RootSystem rs = rs_of(type);
    auto re_chi = [&](std::int64_t den) {
      std::vector<Rational> x;
      for (int i = 0; i < rs.rank(); ++i) x.push_back(ratio(i + 2, den));
      return weyl_character_at_torus(rs, hw, torus_point_from_coweight(rs, x)).real();
    };
    const double extrapolated = (4.0 * re_chi(400) - re_chi(200)) / 3.0;
    const double dim = static_cast<double>(weyl_dimension(rs, hw));
    EXPECT_NEAR(extrapolated, dim, 1e-4 * dim) << type;
    EXPECT_GT(std::abs(re_chi(200) - dim), std::abs(re_chi(400) - dim)) << type;
  }
}

TEST(WeylCharacter, MatchesSchurPolynomials) {
  gen::Engine rng(52);
  for (int c = 0; c < 120; ++c) {
    const int n = static_cast<int>(gen::uniform(rng, 2, 4));
    const RootSystem& rs = *gen::group(CartanType({{'A', n - 1}})).rs;
    const Weight hw = gen::dominant_weight(rng, n - 1, 3);
    const auto x = random_eigenvalues(rng, n);
    const auto t = oracle::fundamental_values(x);
    EXPECT_LT(std::abs(weyl_character_at_torus(rs, hw, t) - oracle::schur(hw.coords, x)), 1e-8);
  }
}

TEST(WeylCharacter, InvariantUnderPermutingEigenvalues) {
  gen::Engine rng(53);
  for (int c = 0; c < 120; ++c) {
    const int n = static_cast<int>(gen::uniform(rng, 2, 5));
    const RootSystem& rs = *gen::group(CartanType({{'A', n - 1}})).rs;
    const Weight hw = gen::dominant_weight(rng, n - 1, 2);
    auto x = random_eigenvalues(rng, n);
    const cd before = weyl_character_at_torus(rs, hw, oracle::fundamental_values(x));
    std::shuffle(x.begin(), x.end(), rng);
    const cd after = weyl_character_at_torus(rs, hw, oracle::fundamental_values(x));
    EXPECT_LT(std::abs(before - after), 1e-9);
  }
}

TEST(WeylCharacter, SingularPointsThrow) {
  const RootSystem a2 = rs_of("A2");
  const std::vector<cd> identity{1.0, 1.0};
  EXPECT_THROW(weyl_character_at_torus(a2, Weight{{1, 0}}, identity), SingularTorusPoint);
  const std::vector<cd> central{phase(1.0 / 3), phase(2.0 / 3)};
  EXPECT_THROW(weyl_character_at_torus(a2, Weight{{1, 0}}, central), SingularTorusPoint);
  EXPECT_THROW(weyl_character_at_torus(a2, Weight{{1, 0}}, std::vector<cd>{1.0}), InvalidInput);
}

TEST(WeylOracle, Examples) {
  const RootSystem a1 = rs_of("A1");
  const CenterGroup c1(a1);
  const RootOfUnity k = kappa_via_weyl_oracle(OrbitDatum(a1, RationalWeight::parse("1")), c1.generators()[0], c1);
  EXPECT_EQ(k, RootOfUnity(1, 2));
  EXPECT_NEAR(std::abs(k.value() - cd(-1, 0)), 0.0, 1e-15);

  const RootSystem a2 = rs_of("A2");
  const CenterGroup c2(a2);
  for (const auto& z : c2.elements())
    EXPECT_TRUE(kappa_via_weyl_oracle(OrbitDatum(a2, RationalWeight::parse("1,1")), z, c2).is_one());
}

TEST(WeylOracle, A2AgainstNumericLimit) {
  // Approach the central generator along a generic direction and take the
  // limit of chi(pi*)/dim by linear extrapolation in the step size.
  // rho = alpha_1 + alpha_2 is a root, so its central character is trivial;
  // (2,1) has four boxes and sees the center with order 3.
  const RootSystem a2 = rs_of("A2");
  const CenterGroup cg(a2);
  const CenterElement z = cg.generators()[0];
  const auto x0 = cg.coweight_representative(z);
  for (const auto& [hw, order] : std::vector<std::pair<Weight, std::int64_t>>{{Weight{{1, 1}}, 1},
                                                                              {Weight{{2, 1}}, 3}}) {
    const double dim = static_cast<double>(weyl_dimension(a2, hw));
    auto near = [&](std::int64_t den) {
      std::vector<Rational> x{Rational(x0[0]) + ratio(3, den), Rational(x0[1]) + ratio(7, den)};
      return std::conj(weyl_character_at_torus(a2, hw, torus_point_from_coweight(a2, x))) / dim;
    };
    const cd numeric = 2.0 * near(20000) - near(10000);
    const RootOfUnity exact = kappa_via_weyl_oracle(OrbitDatum(a2, RationalWeight(hw)), z, cg);
    EXPECT_EQ(exact.order(), order);
    EXPECT_LT(std::abs(numeric - exact.value()), 1e-4);
    for (const auto& other : {RootOfUnity(0, 1), RootOfUnity(1, 3), RootOfUnity(2, 3)})
      if (other != exact) EXPECT_GT(std::abs(numeric - other.value()), 0.5);
  }
}

TEST(WeylOracle, RejectsSingularAndNonIntegral) {
  const RootSystem a2 = rs_of("A2");
  const CenterGroup cg(a2);
  EXPECT_THROW(kappa_via_weyl_oracle(OrbitDatum(a2, RationalWeight::parse("1,0")), cg.generators()[0], cg),
               Unsupported);
  EXPECT_THROW(kappa_via_weyl_oracle(OrbitDatum(a2, RationalWeight::parse("1/2,1")), cg.generators()[0], cg),
               NotQuantizable);
}

TEST(WeylOracle, AgreesWithKappaTableUpToRankFour) {
  gen::Engine rng(60);
  int checked = 0;
  while (checked < 150) {
    const CartanType t = gen::semisimple_type(rng, 4);
    const auto& g = gen::group(t);
    const Weight w = gen::weight(rng, t.rank(), -3, 3);
    const OrbitDatum od(*g.rs, RationalWeight(w));
    if (!stabilizer(od).regular) continue;
    const KappaTable table = kappa_on_center(od, *g.center);
    for (const auto& e : table.entries)
      EXPECT_EQ(kappa_via_weyl_oracle(od, e.element, *g.center), e.value) << props::describe(t, w);
    ++checked;
  }
}

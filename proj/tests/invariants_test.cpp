#include "cpv/check/generators.hpp"
#include "cpv/check/oracles.hpp"
#include "cpv/distances.hpp"
#include "cpv/ellipsoid.hpp"
#include "cpv/error.hpp"
#include "cpv/invariants.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace cpv;
using namespace cpv::testing;

namespace {

Barcode bc(std::vector<Bar> bars, Spectrum spec) { return {std::move(spec), std::move(bars)}; }

Barcode ellipsoid(std::vector<Scalar> a, Scalar t) { return ellipsoid_barcode(EllipsoidParams(std::move(a), std::move(t))); }

}  // namespace

TEST(Spectral, Examples) {
  const Barcode unit = ellipsoid({S(1)}, S(1));
  EXPECT_EQ(spectral_invariant(unit, 0, true), S(0));
  EXPECT_EQ(spectral_invariant(unit, 0), kInf);

  const Barcode three = bc({bar(S(3), kInf)}, spectrum({S(3)}, S(0), S(4)));
  EXPECT_EQ(spectral_invariant(three, 0), S(3));
  EXPECT_EQ(spectral_invariant(translate_barcode(three, S("5/2")), 0), S("11/2"));
  EXPECT_EQ(spectral_invariant(bc({}, spectrum({}, S(0), S(1))), 0), kInf);
}

TEST(Spectral, PiSpanIsRejected) {
  const Barcode b = bc({bar(kNegInf, kInf), bar(S(1), kInf)}, spectrum({S(1)}, S(0), S(2)));
  const ShClass c = sh_class(b);
  ASSERT_EQ(c.generators.size(), 2U);
  EXPECT_EQ(c.pi_span(), std::vector<std::size_t>{0});
  try {
    spectral_invariant(b, 0);
    FAIL() << "expected InPiSpan";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InPiSpan);
  }
  EXPECT_EQ(spectral_invariant(b, 1), S(1));
}

TEST(Translate, Examples) {
  const Barcode b = bc({bar(S(0), S(1))}, spectrum({S(0), S(1)}, S(0), S(2)));
  EXPECT_EQ(translate_barcode(b, S(0)), b);
  const Barcode moved = translate_barcode(b, S(5));
  ASSERT_EQ(moved.bars.size(), 1U);
  EXPECT_EQ(moved.bars[0], bar(S(5), S(6)));
  EXPECT_EQ(moved.spectrum.points(), (std::vector<Scalar>{S(5), S(6)}));
  EXPECT_EQ(moved.spectrum.lo(), S(5));
  EXPECT_THROW(translate_barcode(b, kInf), Error);
  Rng rng(51);
  for (int t = 0; t < 50; ++t) {
    const Barcode r = check::random_barcode(rng);
    const Scalar shift = rng.rational(-5, 5, 3);
    EXPECT_EQ(translate_barcode(translate_barcode(r, shift), -shift), r);
    EXPECT_TRUE(validate_barcode(translate_barcode(r, shift)).empty());
  }
}

TEST(Depth, Examples) {
  EXPECT_EQ(boundary_depth(bc({}, spectrum({}, S(0), S(1)))), S(0));
  EXPECT_EQ(boundary_depth(bc({bar(S(0), S(2)), bar(S(1), S("3/2"))}, spectrum({S(0), S(1), S("3/2"), S(2)}, S(0), S(2)))),
            S(2));
  EXPECT_EQ(boundary_depth(ellipsoid({S(1), S(1)}, S(5))), S(1));
}

TEST(Depth, StableUnderPerturbation) {
  Rng rng(52);
  for (int t = 0; t < 100; ++t) {
    const Barcode b = check::random_barcode(rng, {6, 6, 10, 2, false});
    const Scalar r = rng.rational(0, 1, 4);
    const Barcode p = perturb_barcode(b, r, rng.uniform(0, 1 << 30));
    EXPECT_LE(abs(boundary_depth(p) - boundary_depth(b)), S(2) * r);
  }
}

TEST(Cover, Examples) {
  EXPECT_EQ(covering_number({S(0), S(5)}, S(1)).count, 2U);
  const Cover c = covering_number({S(0), S("1/4"), S("1/2")}, S(1));
  EXPECT_EQ(c.count, 1U);
  EXPECT_EQ(c.centers, std::vector<Scalar>{S("1/4")});
  EXPECT_EQ(covering_number({}, S(1)).count, 0U);
  // Open balls: points exactly delta apart need two.
  EXPECT_EQ(covering_number({S(0), S(1)}, S(1)).count, 2U);
  EXPECT_THROW(covering_number({S(0)}, S(0)), Error);
}

TEST(Cover, OptimalAgainstExhaustiveSearch) {
  Rng rng(53);
  for (int t = 0; t < 200; ++t) {
    std::vector<Scalar> pts;
    const int n = static_cast<int>(rng.uniform(0, 7));
    for (int i = 0; i < n; ++i) pts.push_back(rng.rational(0, 6, 4));
    const Scalar delta = Scalar(rng.uniform(1, 8), 4);
    const Cover c = covering_number(pts, delta);
    EXPECT_EQ(c.count, check::brute_force_cover(pts, delta));
    ASSERT_EQ(c.centers.size(), c.count);
    for (const Scalar& p : pts) {
      bool covered = false;
      for (const Scalar& x : c.centers) covered = covered || abs(p - x) * S(2) < delta;
      EXPECT_TRUE(covered);
    }
  }
}

TEST(Cover, MonotoneInDelta) {
  Rng rng(54);
  for (int t = 0; t < 50; ++t) {
    std::vector<Scalar> pts;
    for (int i = 0; i < 8; ++i) pts.push_back(rng.rational(0, 10, 3));
    std::size_t previous = pts.size() + 1;
    for (int k = 1; k <= 24; ++k) {
      const std::size_t c = covering_number(pts, Scalar(k, 2)).count;
      EXPECT_LE(c, previous);
      previous = c;
    }
  }
}

TEST(Bound, Examples) {
  const Barcode b = ellipsoid({S(1), S(1)}, S(5));
  EXPECT_EQ(long_bar_endpoints(b, S(1)), (std::vector<Scalar>{S(0), S(1), S(2), S(3), S(4), S(5)}));
  EXPECT_EQ(translated_point_lower_bound(b, S(1)), 6U);
  EXPECT_EQ(translated_point_lower_bound(bc({}, spectrum({}, S(0), S(1))), S(1)), 0U);
  EXPECT_EQ(translated_point_lower_bound(bc({bar(S(0), S(2))}, spectrum({S(0), S(2)}, S(0), S(2))), S(3)), 0U);
}

TEST(Vanishing, Examples) {
  const VanishingFlags trunc = vanishing_predicates(ellipsoid({S(1)}, S(2)));
  EXPECT_TRUE(trunc.has_bar_at_zero);
  EXPECT_FALSE(trunc.has_half_infinite);
  EXPECT_EQ(trunc.forces_sh_zero, Verdict::Unknown);
  EXPECT_EQ(to_string(trunc.forces_sh_zero), "unknown under truncation");

  const VanishingFlags inf = vanishing_predicates(bc({bar(S(0), kInf)}, spectrum({S(0)}, S(0), S(1))));
  EXPECT_TRUE(inf.has_bar_at_zero);
  EXPECT_TRUE(inf.has_half_infinite);
  EXPECT_EQ(inf.forces_sh_zero, Verdict::False);

  const VanishingFlags fin = vanishing_predicates(bc({bar(S(0), S(3))}, spectrum({S(0), S(3)}, S(0), S(3))));
  EXPECT_EQ(fin.forces_sh_zero, Verdict::True);
}

TEST(Lipschitz, ZeroRadius) {
  const LipschitzReport r = check_lipschitz(ellipsoid({S(1), S("3/2")}, S(6)), PerturbationBall(S(0)), 20, 7);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.max_deviation, S(0));
  EXPECT_EQ(r.max_distance, S(0));
}

TEST(Lipschitz, SingleBarShift) {
  const Barcode b = bc({bar(S(0), kInf)}, spectrum({S(0)}, S(-1), S(1)));
  const Barcode moved = bc({bar(S("1/2"), kInf)}, spectrum({S("1/2")}, S(-1), S(1)));
  EXPECT_EQ(bottleneck_distance(b, moved).delta, S("1/2"));
  EXPECT_EQ(abs(spectral_invariant(moved, 0) - spectral_invariant(b, 0)), S("1/2"));
}

TEST(Lipschitz, EllipsoidTrials) {
  const LipschitzReport r = check_lipschitz(ellipsoid({S(1), S("3/2")}, S(6)), PerturbationBall(S("1/4")), 100, 11);
  EXPECT_EQ(r.trials, 100U);
  EXPECT_TRUE(r.ok()) << r.violations.front().detail;
  EXPECT_LE(r.max_deviation, S("1/4"));
  EXPECT_LE(r.max_distance, S("1/4"));
}

TEST(Perturb, StaysInBall) {
  Rng rng(55);
  for (int t = 0; t < 100; ++t) {
    const Barcode b = check::random_barcode(rng);
    const Scalar r = rng.rational(0, 2, 4);
    const Barcode p = perturb_barcode(b, r, static_cast<std::uint64_t>(t));
    EXPECT_TRUE(validate_barcode(p).empty());
    EXPECT_LE(bottleneck_distance(b, p, {false, true}).delta, r);
    EXPECT_EQ(perturb_barcode(b, r, static_cast<std::uint64_t>(t)), p);
  }
  EXPECT_THROW(PerturbationBall(S(-1)), Error);
}

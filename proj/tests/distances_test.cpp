#include "cpv/check/generators.hpp"
#include "cpv/check/oracles.hpp"
#include "cpv/distances.hpp"
#include "cpv/error.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace cpv;
using namespace cpv::testing;

namespace {

Barcode bc(std::vector<Bar> bars, Spectrum spec) { return {std::move(spec), std::move(bars)}; }

Spectrum span03() { return spectrum({S(0), S(1), S(2), S(3)}, S(0), S(3)); }

}  // namespace

TEST(Bottleneck, IdenticalBarcodesAreAtZero) {
  const Barcode b = bc({bar(S(0), S(2)), bar(S(1), kInf, 1), bar(kNegInf, S(3))}, span03());
  const BottleneckResult r = bottleneck_distance(b, b);
  EXPECT_EQ(r.delta, S(0));
  for (const MatchedPair& p : r.matching.pairs) {
    ASSERT_TRUE(p.left && p.right);
    EXPECT_EQ(b.bars[*p.left], b.bars[*p.right]);
  }
}

TEST(Bottleneck, SingleBarAgainstEmpty) {
  const Barcode a = bc({bar(S(0), S(2))}, spectrum({S(0), S(2)}, S(0), S(2)));
  const Barcode e = bc({}, spectrum({S(0), S(2)}, S(0), S(2)));
  // Frozen from the exhaustive matching oracle.
  EXPECT_EQ(check::brute_force_bottleneck(a.bars, e.bars), S(1));
  const BottleneckResult r = bottleneck_distance(a, e);
  EXPECT_EQ(r.delta, S(1));
  ASSERT_EQ(r.matching.pairs.size(), 1U);
  EXPECT_EQ(r.matching.pairs[0], (MatchedPair{0, std::nullopt, S(1)}));
}

TEST(Bottleneck, InfiniteBarCannotVanish) {
  const Barcode a = bc({bar(S(0), kInf)}, spectrum({S(0)}, S(0), S(1)));
  const Barcode e = bc({}, spectrum({S(0)}, S(0), S(1)));
  EXPECT_EQ(bottleneck_distance(a, e).delta, kInf);
  const Barcode full = bc({bar(kNegInf, kInf)}, spectrum({S(0)}, S(0), S(1)));
  EXPECT_EQ(bottleneck_distance(a, full).delta, kInf);
}

TEST(Bottleneck, MixedFiniteAndInfinite) {
  const Barcode a = bc({bar(S(0), S(2)), bar(S(0), kInf)}, spectrum({S(0), S(2)}, S(0), S(2)));
  const Barcode b = bc({bar(S(1), S(2)), bar(S(1), kInf)}, spectrum({S(1), S(2)}, S(0), S(2)));
  EXPECT_EQ(check::brute_force_bottleneck(a.bars, b.bars), S(1));
  EXPECT_EQ(bottleneck_distance(a, b).delta, S(1));
}

TEST(Bottleneck, GradedOptionSeparatesParities) {
  const Barcode a = bc({bar(S(0), S(3), 0)}, span03());
  const Barcode b = bc({bar(S(0), S(3), 1)}, span03());
  EXPECT_EQ(bottleneck_distance(a, b).delta, S(0));
  EXPECT_EQ(bottleneck_distance(a, b, {true, false}).delta, S("3/2"));
}

TEST(Bottleneck, TruncatedBarsReadAsEndingAtHorizon) {
  Barcode a = bc({bar(S(2), kInf)}, span03());
  a.bars[0].truncated = true;
  const Barcode e = bc({}, span03());
  EXPECT_EQ(bottleneck_distance(a, e).delta, S("1/2"));
  EXPECT_EQ(bottleneck_distance(a, e, {false, true}).delta, kInf);
}

TEST(Bottleneck, AgreesWithExhaustiveMatching) {
  Rng rng(31);
  for (int t = 0; t < 300; ++t) {
    const check::BarcodeShape shape{5, 5, 6, 2, rng.chance(1, 2)};
    const Barcode a = check::random_barcode(rng, shape);
    const Barcode b = check::random_barcode(rng, shape);
    for (const bool graded : {false, true}) {
      const BottleneckResult r = bottleneck_distance(a, b, {graded, false});
      ASSERT_EQ(r.delta, check::brute_force_bottleneck(a.bars, b.bars, graded)) << "trial " << t;
      if (r.delta.is_finite()) {
        EXPECT_TRUE(check_matching(a.bars, b.bars, r.matching, graded).empty());
        EXPECT_EQ(r.matching.cost, r.delta);
      }
    }
  }
}

TEST(Bottleneck, MetricAxioms) {
  Rng rng(32);
  for (int t = 0; t < 200; ++t) {
    const check::BarcodeShape shape{5, 5, 6, 2, rng.chance(1, 3)};
    const Barcode a = check::random_barcode(rng, shape);
    const Barcode b = check::random_barcode(rng, shape);
    const Barcode c = check::random_barcode(rng, shape);
    const Scalar ab = bottleneck_distance(a, b).delta;
    EXPECT_EQ(ab, bottleneck_distance(b, a).delta);
    EXPECT_LE(bottleneck_distance(a, c).delta, ab + bottleneck_distance(b, c).delta);
    EXPECT_EQ(bottleneck_distance(a, a).delta, S(0));
    // Zero distance means equal multisets (no zero-length bars are generated).
    if (ab == S(0)) {
      std::vector<Bar> x = a.bars;
      std::vector<Bar> y = b.bars;
      EXPECT_EQ(x, y);
    }
  }
}

TEST(Bottleneck, FeasibilityIsMonotone) {
  Rng rng(33);
  for (int t = 0; t < 100; ++t) {
    const Barcode a = check::random_barcode(rng, {5, 5, 6, 2, false});
    const Barcode b = check::random_barcode(rng, {5, 5, 6, 2, false});
    const Scalar d = bottleneck_distance(a, b).delta;
    bool seen_feasible = false;
    for (int k = 0; k <= 24; ++k) {
      const Scalar delta(k, 4);
      const bool ok = matching_feasible(a.bars, b.bars, delta, false);
      if (seen_feasible) EXPECT_TRUE(ok);
      seen_feasible = seen_feasible || ok;
      EXPECT_EQ(ok, !(delta < d));
    }
  }
}

TEST(Interleaving, IdenticalModulesAtZero) {
  const SampledModule m = module_from_barcode(bc({bar(S(0), S(2)), bar(S(1), kInf, 1)}, span03()));
  const InterleavingResult r = interleaving_distance_bruteforce(m, m);
  EXPECT_EQ(r.delta, S(0));
  ASSERT_TRUE(r.certificate);
  EXPECT_TRUE(verify_interleaving(*r.certificate, m, m).empty());
}

TEST(Interleaving, ShiftedIntervalModules) {
  const SampledModule a = module_from_barcode(bc({bar(S(0), S(2))}, span03()));
  const SampledModule b = module_from_barcode(bc({bar(S(1), S(3))}, span03()));
  const InterleavingResult r = interleaving_distance_bruteforce(a, b);
  EXPECT_EQ(r.delta, S(1));
  ASSERT_TRUE(r.certificate);
  EXPECT_TRUE(verify_interleaving(*r.certificate, a, b).empty());
  EXPECT_FALSE(find_interleaving(a, b, S("1/2")).has_value());
}

TEST(Interleaving, IntervalAgainstZeroModule) {
  const SampledModule a = module_from_barcode(bc({bar(S(0), S(2))}, span03()));
  const SampledModule z = module_from_barcode(bc({}, span03()));
  EXPECT_EQ(interleaving_distance_bruteforce(a, z).delta, S(1));
  EXPECT_EQ(interleaving_distance_bruteforce(z, a).delta, S(1));
}

TEST(Interleaving, InfiniteBarAgainstZeroIsInfinite) {
  const SampledModule a = module_from_barcode(bc({bar(S(1), kInf)}, span03()));
  const SampledModule z = module_from_barcode(bc({}, span03()));
  const InterleavingResult r = interleaving_distance_bruteforce(a, z);
  EXPECT_EQ(r.delta, kInf);
  EXPECT_FALSE(r.certificate);
}

TEST(Interleaving, ZeroMapsBetweenConstantModulesFail) {
  const SampledModule m = module_from_barcode(bc({bar(S(0), S(3))}, span03()));
  InterleavingCertificate c;
  c.delta = S("1/4");
  c.forward.cuts = shifted_cuts(m.spectrum, m.spectrum, c.delta);
  c.backward.cuts = c.forward.cuts;
  for (std::size_t i = 0; i <= c.forward.cuts.size(); ++i) {
    const Scalar x = i == 0 ? c.forward.cuts[0] - S(1)
                            : (i == c.forward.cuts.size() ? c.forward.cuts.back() + S(1)
                                                          : midpoint(c.forward.cuts[i - 1], c.forward.cuts[i]));
    const GradedDim from = m.dims[representative_sample(m, x)];
    const GradedDim to = m.dims[representative_sample(m, x + c.delta)];
    c.forward.maps.push_back(GradedMatrix::zero(to, from));
  }
  c.backward.maps = c.forward.maps;
  const auto violations = verify_interleaving(c, m, m);
  EXPECT_FALSE(violations.empty());
  bool composite = false;
  for (const auto& v : violations) composite = composite || v.find("composite") != std::string::npos;
  EXPECT_TRUE(composite);
}

TEST(Interleaving, ShapeMismatchThrows) {
  const SampledModule m = module_from_barcode(bc({bar(S(0), S(3))}, span03()));
  InterleavingCertificate c;
  c.delta = S(0);
  c.forward.cuts = shifted_cuts(m.spectrum, m.spectrum, c.delta);
  c.backward.cuts = c.forward.cuts;
  c.forward.maps.assign(c.forward.cuts.size() + 1, GradedMatrix::zero({3, 0}, {3, 0}));
  c.backward.maps = c.forward.maps;
  EXPECT_THROW(verify_interleaving(c, m, m), Error);
}

TEST(Interleaving, TooLargeGuard) {
  const SampledModule m = module_from_barcode(
      bc({bar(S(0), S(3)), bar(S(0), S(3)), bar(S(0), S(3)), bar(S(1), S(3)), bar(S(1), S(3))}, span03()));
  try {
    interleaving_distance_bruteforce(m, m);
    FAIL() << "expected TooLarge";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
  }
}

TEST(Interleaving, MatchesBottleneckOnRandomPairs) {
  Rng rng(34);
  for (int t = 0; t < 40; ++t) {
    const SampledModule a = check::random_module(rng, {3, 2, 6, true, true});
    const SampledModule b = check::random_module(rng, {3, 2, 6, true, true});
    const InterleavingResult il = interleaving_distance_bruteforce(a, b);
    EXPECT_EQ(il.delta, bottleneck_distance(decompose(a), decompose(b), {true, false}).delta) << "trial " << t;
    if (il.certificate) EXPECT_TRUE(verify_interleaving(*il.certificate, a, b).empty());
  }
}

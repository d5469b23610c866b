#include "cpv/check/generators.hpp"
#include "cpv/check/oracles.hpp"
#include "cpv/ellipsoid.hpp"
#include "cpv/error.hpp"
#include "cpv/persistence.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace cpv;
using namespace cpv::testing;

namespace {

SampledModule two_sample_module(const Spectrum& spec, const Gf2Matrix& map) {
  SampledModule m;
  m.spectrum = spec;
  m.samples = {S("1/2"), S("3/2")};
  m.dims = {{1, 0}, {1, 0}};
  m.maps = {{map, Gf2Matrix::zero(0, 0)}};
  return m;
}

bool has_kind(const std::vector<ModuleViolation>& v, ModuleViolation::Kind k) {
  for (const auto& x : v) {
    if (x.kind == k) return true;
  }
  return false;
}

}  // namespace

TEST(Spectrum, RejectsBadWindows) {
  EXPECT_THROW(spectrum({S(2), S(1)}, S(0), S(3)), Error);
  EXPECT_THROW(spectrum({S(1), S(1)}, S(0), S(3)), Error);
  EXPECT_THROW(spectrum({S(4)}, S(0), S(3)), Error);
  EXPECT_THROW(spectrum({}, S(3), S(0)), Error);
  EXPECT_THROW(spectrum({kInf}, S(0), S(3)), Error);
  EXPECT_EQ(Spectrum::from_unsorted({S(2), S(1), S(2)}, S(0), S(3)).points(), (std::vector<Scalar>{S(1), S(2)}));
}

TEST(ValidateModule, SingleSampleIsValid) {
  SampledModule m;
  m.spectrum = spectrum({}, S(0), S(1));
  m.samples = {S("1/2")};
  m.dims = {{1, 0}};
  EXPECT_TRUE(validate_module(m).empty());
}

TEST(ValidateModule, ZeroMapWithoutSpectrumPointIsReported) {
  const auto v = validate_module(two_sample_module(spectrum({}, S(0), S(2)), Gf2Matrix::zero(1, 1)));
  ASSERT_EQ(v.size(), 1U);
  EXPECT_EQ(v[0].kind, ModuleViolation::Kind::NonInvertible);
}

TEST(ValidateModule, ReportsCollisionsShapesAndCrowding) {
  SampledModule m = two_sample_module(spectrum({S(1)}, S(0), S(2)), Gf2Matrix::zero(1, 1));
  m.samples[1] = S(1);
  EXPECT_TRUE(has_kind(validate_module(m), ModuleViolation::Kind::SampleOnSpectrum));

  m = two_sample_module(spectrum({S(1)}, S(0), S(2)), Gf2Matrix::zero(2, 1));
  EXPECT_TRUE(has_kind(validate_module(m), ModuleViolation::Kind::ShapeMismatch));

  m = two_sample_module(spectrum({S("3/4"), S(1)}, S(0), S(2)), Gf2Matrix::zero(1, 1));
  EXPECT_TRUE(has_kind(validate_module(m), ModuleViolation::Kind::CrowdedGap));

  m = two_sample_module(spectrum({S(1), S(2)}, S(0), S(2)), Gf2Matrix::zero(1, 1));
  EXPECT_TRUE(has_kind(validate_module(m), ModuleViolation::Kind::Unbracketed));
}

TEST(Decompose, ConstantModuleIsOneInfiniteBar) {
  const Barcode b = decompose(two_sample_module(spectrum({S(1)}, S(0), S(2)), Gf2Matrix::identity(1)));
  EXPECT_EQ(b.bars, (std::vector<Bar>{bar(kNegInf, kInf)}));
}

TEST(Decompose, ZeroMapAcrossPointSplitsTheBar) {
  const SampledModule m = two_sample_module(spectrum({S(1)}, S(0), S(2)), Gf2Matrix::zero(1, 1));
  // Frozen from the basis-change oracle.
  const auto oracle = check::brute_force_decompose(m);
  ASSERT_TRUE(oracle);
  const std::vector<Bar> expected{bar(kNegInf, S(1)), bar(S(1), kInf)};
  EXPECT_EQ(oracle->bars, expected);
  EXPECT_EQ(decompose(m).bars, expected);
}

TEST(Decompose, EllipsoidRoundTrip) {
  const Barcode e = ellipsoid_barcode(EllipsoidParams({S(1), S(1)}, S(3)));
  const Barcode back = decompose(module_from_barcode(e));
  EXPECT_TRUE(same_bars(back, e));
  EXPECT_FALSE(back == e);  // truncation flags are not recoverable
}

TEST(Decompose, NonUniqueSnapOnBrokenGrid) {
  // A non-invertible map across a spectrum-free gap puts an endpoint there.
  const SampledModule m = two_sample_module(spectrum({}, S(0), S(2)), Gf2Matrix::zero(1, 1));
  try {
    decompose(m);
    FAIL() << "expected NonUniqueSnap";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonUniqueSnap);
  }
}

TEST(Decompose, RejectsShapeMismatch) {
  SampledModule m = two_sample_module(spectrum({S(1)}, S(0), S(2)), Gf2Matrix::zero(2, 1));
  EXPECT_THROW(decompose(m), Error);
}

TEST(ModuleFromBarcode, EmptyBarcodeIsZeroModule) {
  const SampledModule m = module_from_barcode({spectrum({S(1), S(2)}, S(0), S(3)), {}});
  ASSERT_EQ(m.samples.size(), 3U);
  for (const GradedDim& d : m.dims) EXPECT_EQ(d, (GradedDim{0, 0}));
  EXPECT_TRUE(validate_module(m).empty());
}

TEST(ModuleFromBarcode, InfiniteBarGivesIdentities) {
  const SampledModule m = module_from_barcode({spectrum({S(1), S(2)}, S(0), S(3)), {bar(kNegInf, kInf)}}, 2);
  ASSERT_EQ(m.samples.size(), 6U);
  for (const GradedDim& d : m.dims) EXPECT_EQ(d, (GradedDim{1, 0}));
  for (const GradedMatrix& f : m.maps) EXPECT_EQ(f.even, Gf2Matrix::identity(1));
}

TEST(ModuleFromBarcode, DimsCountBarsOverSamples) {
  const Barcode b{spectrum({S(0), S(1), S(2)}, S(0), S(2)), {bar(S(0), S(1)), bar(S(0), S(2))}};
  const SampledModule m = module_from_barcode(b);
  // Frozen by counting bars over each sample.
  const std::vector<GradedDim> expected{{0, 0}, {2, 0}, {1, 0}, {0, 0}};
  EXPECT_EQ(check::bar_counts(b, m.samples), expected);
  EXPECT_EQ(m.dims, expected);
  EXPECT_TRUE(validate_module(m).empty());
}

TEST(ModuleFromBarcode, Errors) {
  EXPECT_THROW(module_from_barcode({spectrum({}, S(1), S(1)), {}}), Error);
  try {
    module_from_barcode({spectrum({}, S(1), S(1)), {}});
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyHorizon);
  }
  EXPECT_THROW(module_from_barcode({spectrum({S(1)}, S(0), S(2)), {bar(S("1/2"), S(1))}}), Error);
  EXPECT_THROW(module_from_barcode({spectrum({S(1)}, S(0), S(2)), {}}, 0), Error);
}

TEST(RankInvariant, IdentityMapsKeepFullRank) {
  SampledModule m;
  m.spectrum = spectrum({S(1), S(2)}, S(0), S(3));
  m.samples = {S("1/2"), S("3/2"), S("5/2")};
  m.dims = {{2, 1}, {2, 1}, {2, 1}};
  m.maps = {GradedMatrix::identity({2, 1}), GradedMatrix::identity({2, 1})};
  for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(rank_invariant(m, 0, k), (GradedDim{2, 1}));
  EXPECT_THROW(rank_invariant(m, 2, 1), Error);
  EXPECT_THROW(rank_invariant(m, 0, 3), Error);
}

TEST(RankInvariant, ZeroAcrossSpectrumPoint) {
  const SampledModule m = two_sample_module(spectrum({S(1)}, S(0), S(2)), Gf2Matrix::zero(1, 1));
  EXPECT_EQ(rank_invariant(m, 0, 1), (GradedDim{0, 0}));
  EXPECT_EQ(rank_invariant(m, 1, 1), (GradedDim{1, 0}));
}

TEST(RankInvariant, MonotoneUnderComposition) {
  Rng rng(11);
  for (int t = 0; t < 100; ++t) {
    const SampledModule m = check::random_module(rng);
    for (std::size_t i = 0; i < m.size(); ++i) {
      EXPECT_EQ(rank_invariant(m, i, i), m.dims[i]);
      for (std::size_t j = i; j + 1 < m.size(); ++j) {
        const GradedDim a = rank_invariant(m, i, j);
        const GradedDim b = rank_invariant(m, i, j + 1);
        EXPECT_LE(b.even, a.even);
        EXPECT_LE(b.odd, a.odd);
      }
    }
  }
}

TEST(DecomposeProperties, RoundTripOnRandomBarcodes) {
  Rng rng(21);
  for (int t = 0; t < 200; ++t) {
    const Barcode b = check::random_barcode(rng);
    const SampledModule m = module_from_barcode(b, static_cast<int>(rng.uniform(1, 3)));
    ASSERT_TRUE(validate_module(m).empty());
    ASSERT_EQ(decompose(m), b) << "trial " << t;
  }
}

TEST(DecomposeProperties, BarCountsMatchDimsAndEndpointsAreSpectral) {
  Rng rng(22);
  for (int t = 0; t < 200; ++t) {
    const SampledModule m = check::random_module(rng, {4, 3, 8, true, true});
    ASSERT_TRUE(validate_module(m).empty());
    const Barcode b = decompose(m);
    EXPECT_EQ(check::bar_counts(b, m.samples), m.dims);
    EXPECT_TRUE(check::off_spectrum_endpoints(b).empty());
    EXPECT_TRUE(validate_barcode(b).empty());
  }
}

TEST(DecomposeProperties, AgreesWithBasisChangeOracle) {
  Rng rng(23);
  for (int t = 0; t < 100; ++t) {
    const SampledModule m = check::random_module(rng);
    const auto oracle = check::brute_force_decompose(m);
    ASSERT_TRUE(oracle);
    EXPECT_EQ(decompose(m), *oracle) << "trial " << t;
  }
}

TEST(DecomposeProperties, ParityBlocksDecomposeIndependently) {
  Rng rng(24);
  for (int t = 0; t < 100; ++t) {
    const SampledModule m = check::random_module(rng);
    SampledModule even_only = m;
    for (GradedDim& d : even_only.dims) d.odd = 0;
    for (GradedMatrix& f : even_only.maps) f.odd = Gf2Matrix::zero(0, 0);
    std::vector<Bar> expected_even;
    for (const Bar& x : decompose(m).bars) {
      if (x.parity == Parity::Even) expected_even.push_back(x);
    }
    EXPECT_EQ(decompose(even_only).bars, expected_even);
  }
}

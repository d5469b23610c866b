#pragma once

#include "cpv/gf2.hpp"
#include "cpv/scalar.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cpv {

/// Z/2 supergrading.
enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}
inline int to_int(Parity p) { return static_cast<int>(p); }
inline Parity parity_of(long long n) { return (n % 2 == 0) ? Parity::Even : Parity::Odd; }

inline constexpr Parity kParities[] = {Parity::Even, Parity::Odd};

struct GradedDim {
  std::size_t even = 0;
  std::size_t odd = 0;

  std::size_t& operator[](Parity p) { return p == Parity::Even ? even : odd; }
  std::size_t operator[](Parity p) const { return p == Parity::Even ? even : odd; }
  std::size_t total() const { return even + odd; }

  friend bool operator==(const GradedDim&, const GradedDim&) = default;
};

/// Parity-preserving linear map, stored as one block per parity.
struct GradedMatrix {
  Gf2Matrix even;
  Gf2Matrix odd;

  static GradedMatrix identity(const GradedDim& d) {
    return {Gf2Matrix::identity(d.even), Gf2Matrix::identity(d.odd)};
  }
  static GradedMatrix zero(const GradedDim& to, const GradedDim& from) {
    return {Gf2Matrix::zero(to.even, from.even), Gf2Matrix::zero(to.odd, from.odd)};
  }

  Gf2Matrix& operator[](Parity p) { return p == Parity::Even ? even : odd; }
  const Gf2Matrix& operator[](Parity p) const { return p == Parity::Even ? even : odd; }

  GradedDim source() const { return {even.cols(), odd.cols()}; }
  GradedDim target() const { return {even.rows(), odd.rows()}; }
  GradedDim rank() const { return {even.rank(), odd.rank()}; }
  bool is_invertible() const { return even.is_invertible() && odd.is_invertible(); }

  GradedMatrix operator*(const GradedMatrix& rhs) const { return {even * rhs.even, odd * rhs.odd}; }

  friend bool operator==(const GradedMatrix&, const GradedMatrix&) = default;
};

/// Finite truncation of a spectrum: strictly increasing finite points inside
/// the closed window [lo, hi].
class Spectrum {
 public:
  Spectrum() = default;
  /// Throws InvalidArgument unless points are finite, strictly increasing and
  /// inside [lo, hi] with lo <= hi finite.
  Spectrum(std::vector<Scalar> points, Scalar lo, Scalar hi);
  /// Sorts and deduplicates before validating.
  static Spectrum from_unsorted(std::vector<Scalar> points, Scalar lo, Scalar hi);

  const std::vector<Scalar>& points() const noexcept { return points_; }
  const Scalar& lo() const noexcept { return lo_; }
  const Scalar& hi() const noexcept { return hi_; }
  std::size_t size() const noexcept { return points_.size(); }

  bool contains(const Scalar& s) const;
  /// Spectrum points strictly between a and b.
  std::vector<Scalar> points_between(const Scalar& a, const Scalar& b) const;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  std::vector<Scalar> points_;
  Scalar lo_ = 0;
  Scalar hi_ = 0;
};

/// Interval (birth, death) with strict containment birth < s < death.
/// `truncated` marks a death of +inf that only records "outlives the horizon".
struct Bar {
  Scalar birth;
  Scalar death;
  Parity parity = Parity::Even;
  bool truncated = false;

  bool contains(const Scalar& s) const { return birth < s && s < death; }
  bool is_finite() const { return birth.is_finite() && death.is_finite(); }
  Scalar length() const { return death - birth; }

  friend bool operator==(const Bar&, const Bar&) = default;
  friend auto operator<=>(const Bar&, const Bar&) = default;
};

/// Multiset of bars over an ambient spectrum. Bars are kept sorted, so
/// equality is multiset equality.
struct Barcode {
  Spectrum spectrum;
  std::vector<Bar> bars;

  Barcode() = default;
  Barcode(Spectrum s, std::vector<Bar> b);

  /// Graded count of bars containing s.
  GradedDim dim_at(const Scalar& s) const;

  friend bool operator==(const Barcode&, const Barcode&) = default;
};

/// Equality of bar multisets and spectra, ignoring truncation flags.
bool same_bars(const Barcode& a, const Barcode& b);

/// Violations of the barcode invariants: finite endpoints outside the
/// spectrum, birth >= death, birth = +inf, death = -inf.
std::vector<std::string> validate_barcode(const Barcode& b);

/// Persistence module sampled on a grid that avoids the spectrum. maps[i]
/// goes from samples[i] to samples[i + 1].
struct SampledModule {
  Spectrum spectrum;
  std::vector<Scalar> samples;
  std::vector<GradedDim> dims;
  std::vector<GradedMatrix> maps;

  std::size_t size() const { return samples.size(); }

  friend bool operator==(const SampledModule&, const SampledModule&) = default;
};

struct ModuleViolation {
  enum class Kind {
    EmptyGrid,
    NonFiniteSample,
    UnsortedSamples,
    SampleOnSpectrum,
    ShapeMismatch,
    NonInvertible,
    CrowdedGap,
    Unbracketed,
  };
  Kind kind;
  std::size_t index;
  std::string detail;
};

std::vector<ModuleViolation> validate_module(const SampledModule& m);

/// Composite structure map from sample i to sample j (i <= j).
GradedMatrix structure_map(const SampledModule& m, std::size_t i, std::size_t j);

/// Graded rank of the structure map from sample i to sample j (0-based).
GradedDim rank_invariant(const SampledModule& m, std::size_t i, std::size_t j);

/// Interval decomposition over Z/2 via the rank-function inclusion-exclusion,
/// with endpoints snapped to the unique spectrum point in each sample gap.
Barcode decompose(const SampledModule& m);

/// Canonical module of a barcode: bar-tracking 0/1 structure maps on a grid
/// with `grid_density` samples per spectrum gap.
SampledModule module_from_barcode(const Barcode& b, int grid_density = 1);

}  // namespace cpv

#pragma once

#include "cpv/distances.hpp"
#include "cpv/persistence.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cpv {

/// A bar (a, +inf) standing for a basis element of symplectic cohomology.
/// Fully infinite bars (-inf, +inf) span the quotient subspace Pi.
struct ShGenerator {
  enum class Kind { HalfInfinite, FullyInfinite };
  Scalar birth;
  Kind kind;
  std::size_t bar_index;  // into Barcode::bars
};

struct ShClass {
  std::vector<ShGenerator> generators;

  std::vector<std::size_t> pi_span() const;
};

/// Infinite bars of `b` in bar order. Truncated bars only count when
/// `include_truncated` is set.
ShClass sh_class(const Barcode& b, bool include_truncated = false);

/// Birth of the half-infinite bar indexed by `generator` in sh_class(b),
/// or +inf when there is no such bar. Throws InPiSpan for a fully infinite one.
Scalar spectral_invariant(const Barcode& b, std::size_t generator, bool include_truncated = false);

/// Shift every finite endpoint and the spectrum by a finite t.
Barcode translate_barcode(const Barcode& b, const Scalar& t);

/// Longest finite bar; truncated and unbounded bars do not count.
Scalar boundary_depth(const Barcode& b);

struct Cover {
  std::size_t count = 0;
  std::vector<Scalar> centers;
};

/// Minimal number of open balls of radius delta/2 covering `points`, with
/// witness centers (greedy sweep, optimal in one dimension).
Cover covering_number(std::vector<Scalar> points, const Scalar& delta);

/// Finite endpoints of the bars of length >= delta. A truncated bar is read
/// as ending at the horizon.
std::vector<Scalar> long_bar_endpoints(const Barcode& b, const Scalar& delta);

/// Covering number of long_bar_endpoints(b_id, delta): the guaranteed
/// number of distinct translated-point lengths.
std::size_t translated_point_lower_bound(const Barcode& b_id, const Scalar& delta);

enum class Verdict { False, True, Unknown };
std::string_view to_string(Verdict v);

struct VanishingFlags {
  bool has_bar_at_zero = false;
  bool has_half_infinite = false;
  Verdict forces_sh_zero = Verdict::Unknown;
};

/// Reporting predicates on a model identity barcode. Truncated bars are not
/// certified half-infinite, so their presence turns a vanishing claim into
/// Unknown.
VanishingFlags vanishing_predicates(const Barcode& b);

struct PerturbationBall {
  Scalar radius;

  explicit PerturbationBall(Scalar r);
};

struct LipschitzViolation {
  std::size_t trial;
  std::string detail;
};

struct LipschitzReport {
  std::string invariant = "spectral_lipschitz";
  std::size_t trials = 0;
  Scalar max_deviation = 0;
  Scalar max_distance = 0;
  std::vector<LipschitzViolation> violations;

  bool ok() const { return violations.empty(); }
};

/// Random barcode within bottleneck distance `radius` of b: endpoints moved
/// by at most radius, short bars inserted or deleted. Truncated bars keep
/// their flag and only move their birth.
Barcode perturb_barcode(const Barcode& b, const Scalar& radius, std::uint64_t seed);

/// Property harness for |c(b') - c(b)| <= radius over random perturbations
/// b' of b. SH generators are paired through the witness matching.
LipschitzReport check_lipschitz(const Barcode& b, const PerturbationBall& ball, std::size_t trials,
                                std::uint64_t seed = 0);

}  // namespace cpv

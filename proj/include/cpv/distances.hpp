#pragma once

#include "cpv/persistence.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cpv {

/// One matched pair. A missing index is an ersatz (zero-length) partner
/// placed at the midpoint of the real bar.
struct MatchedPair {
  std::optional<std::size_t> left;
  std::optional<std::size_t> right;
  Scalar cost;

  friend bool operator==(const MatchedPair&, const MatchedPair&) = default;
};

struct Matching {
  std::vector<MatchedPair> pairs;
  Scalar cost = 0;
};

struct BottleneckOptions {
  /// Only match bars of equal parity.
  bool graded = false;
  /// Treat truncated bars as genuine (a, +inf) bars. Off by default: a
  /// truncated bar then counts as the finite bar (a, horizon hi).
  bool truncated_as_infinite = false;
};

struct BottleneckResult {
  Scalar delta;
  Matching matching;
};

/// Cost of matching bar a to bar b: max endpoint gap (same-type infinities
/// are 0 apart, mixed ones +inf).
Scalar bar_match_cost(const Bar& a, const Bar& b);
/// Cost of sending a bar to the diagonal: half its length, +inf for
/// unbounded bars.
Scalar bar_ersatz_cost(const Bar& a);

/// Bars as the matching sees them, i.e. with truncated deaths resolved
/// according to the options.
std::vector<Bar> effective_bars(const Barcode& b, const BottleneckOptions& opts);

/// Bottleneck distance with a witness matching. Binary search over the
/// candidate values, feasibility by maximum bipartite matching.
BottleneckResult bottleneck_distance(const Barcode& b1, const Barcode& b2, const BottleneckOptions& opts = {});

/// True iff a matching of cost <= delta exists (filled into `out` if given).
bool matching_feasible(const std::vector<Bar>& left, const std::vector<Bar>& right, const Scalar& delta,
                       bool graded, Matching* out = nullptr);

/// Recompute the cost of a matching from scratch and check it is a bijection
/// of S1 + E1 onto S2 + E2. Returns the problems found.
std::vector<std::string> check_matching(const std::vector<Bar>& left, const std::vector<Bar>& right,
                                        const Matching& m, bool graded);

/// Piecewise-constant family of graded maps V_s -> W_{s+delta}. cuts are the
/// sorted breakpoints; maps[c] is valid on the c-th open cell between them
/// (cell 0 is below cuts[0], the last cell above cuts.back()).
struct ShiftedMapFamily {
  std::vector<Scalar> cuts;
  std::vector<GradedMatrix> maps;
};

struct InterleavingCertificate {
  Scalar delta;
  ShiftedMapFamily forward;   // V_s -> W_{s+delta}
  ShiftedMapFamily backward;  // W_s -> V_{s+delta}
};

struct InterleavingOptions {
  /// Maps preserve the Z/2 grading. When false both modules are regarded
  /// as ungraded spaces.
  bool graded = true;
  /// Per-sample total dimension bound for the enumeration.
  std::size_t max_dim = 4;
};

struct InterleavingResult {
  Scalar delta;
  std::optional<InterleavingCertificate> certificate;
};

/// Which sample of `m` represents the parameter s (s must avoid the
/// spectrum): the first sample lying in the same spectrum-free gap.
std::size_t representative_sample(const SampledModule& m, const Scalar& s);

/// Structure map of `m` from parameter s to t (s <= t, both off-spectrum).
GradedMatrix module_map(const SampledModule& m, const Scalar& s, const Scalar& t);

/// Breakpoints of a family V_s -> W_{s+delta}: spectrum(V) and spectrum(W) - delta.
std::vector<Scalar> shifted_cuts(const Spectrum& source, const Spectrum& target, const Scalar& delta);

/// Empty iff the certificate is a delta-interleaving of m1 and m2.
/// Throws ShapeMismatch if a map has the wrong shape.
std::vector<std::string> verify_interleaving(const InterleavingCertificate& c, const SampledModule& m1,
                                             const SampledModule& m2);

/// Searches for a delta-interleaving at one delta by exhaustive enumeration.
std::optional<InterleavingCertificate> find_interleaving(const SampledModule& m1, const SampledModule& m2,
                                                         const Scalar& delta, const InterleavingOptions& opts = {});

/// Candidate deltas: 0, horizon widths, cross-spectrum differences and
/// half-differences within each spectrum.
std::vector<Scalar> interleaving_candidates(const SampledModule& m1, const SampledModule& m2);

/// Smallest candidate delta admitting an interleaving, found by exhaustive
/// search over Z/2 matrices. +inf if none exists. With opts.graded off the
/// certificate refers to ungraded(m1) and ungraded(m2). Throws TooLarge when a
/// sample exceeds opts.max_dim.
InterleavingResult interleaving_distance_bruteforce(const SampledModule& m1, const SampledModule& m2,
                                                    const InterleavingOptions& opts = {});

/// Forget the grading: every vector becomes even.
SampledModule ungraded(const SampledModule& m);

}  // namespace cpv

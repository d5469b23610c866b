#include "cpv/invariants.hpp"

#include "cpv/error.hpp"
#include "cpv/random.hpp"

#include <algorithm>

namespace cpv {

std::vector<std::size_t> ShClass::pi_span() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].kind == ShGenerator::Kind::FullyInfinite) out.push_back(i);
  }
  return out;
}

ShClass sh_class(const Barcode& b, bool include_truncated) {
  ShClass out;
  for (std::size_t i = 0; i < b.bars.size(); ++i) {
    const Bar& bar = b.bars[i];
    if (!bar.death.is_pos_inf() || (bar.truncated && !include_truncated)) continue;
    const auto kind = bar.birth.is_neg_inf() ? ShGenerator::Kind::FullyInfinite : ShGenerator::Kind::HalfInfinite;
    out.generators.push_back({bar.birth, kind, i});
  }
  return out;
}

Scalar spectral_invariant(const Barcode& b, std::size_t generator, bool include_truncated) {
  const ShClass sh = sh_class(b, include_truncated);
  if (generator >= sh.generators.size()) return Scalar::pos_inf();
  const ShGenerator& g = sh.generators[generator];
  if (g.kind == ShGenerator::Kind::FullyInfinite) {
    throw Error(ErrorKind::InPiSpan, "generator " + std::to_string(generator) + " is a fully infinite bar");
  }
  return g.birth;
}

Barcode translate_barcode(const Barcode& b, const Scalar& t) {
  if (!t.is_finite()) throw Error(ErrorKind::InvalidArgument, "translation must be finite");
  std::vector<Scalar> pts;
  for (const Scalar& p : b.spectrum.points()) pts.push_back(p + t);
  std::vector<Bar> bars = b.bars;
  for (Bar& bar : bars) {
    bar.birth += t;
    bar.death += t;
  }
  return {Spectrum(std::move(pts), b.spectrum.lo() + t, b.spectrum.hi() + t), std::move(bars)};
}

Scalar boundary_depth(const Barcode& b) {
  Scalar depth = 0;
  for (const Bar& bar : b.bars) {
    if (bar.is_finite()) depth = std::max(depth, bar.length());
  }
  return depth;
}

Cover covering_number(std::vector<Scalar> points, const Scalar& delta) {
  if (!delta.is_finite() || !(Scalar(0) < delta)) throw Error(ErrorKind::InvalidArgument, "delta must be positive");
  for (const Scalar& p : points) {
    if (!p.is_finite()) throw Error(ErrorKind::InvalidArgument, "cannot cover an infinite point");
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  Cover cover;
  // A ball of radius delta/2 covers a run of points iff their spread is < delta.
  for (std::size_t i = 0; i < points.size();) {
    std::size_t j = i;
    while (j + 1 < points.size() && points[j + 1] - points[i] < delta) ++j;
    cover.centers.push_back(midpoint(points[i], points[j]));
    i = j + 1;
  }
  cover.count = cover.centers.size();
  return cover;
}

std::vector<Scalar> long_bar_endpoints(const Barcode& b, const Scalar& delta) {
  std::vector<Scalar> out;
  for (const Bar& bar : effective_bars(b, {})) {
    const Scalar len = bar.is_finite() ? bar.length() : Scalar::pos_inf();
    if (len < delta) continue;
    if (bar.birth.is_finite()) out.push_back(bar.birth);
    if (bar.death.is_finite()) out.push_back(bar.death);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t translated_point_lower_bound(const Barcode& b_id, const Scalar& delta) {
  return covering_number(long_bar_endpoints(b_id, delta), delta).count;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::False: return "false";
    case Verdict::True: return "true";
    case Verdict::Unknown: return "unknown under truncation";
  }
  return "unknown";
}

VanishingFlags vanishing_predicates(const Barcode& b) {
  VanishingFlags f;
  bool truncated = false;
  for (const Bar& bar : b.bars) {
    if (bar.birth == Scalar(0)) f.has_bar_at_zero = true;
    if (bar.truncated) {
      truncated = true;
    } else if (bar.birth.is_finite() && bar.death.is_pos_inf()) {
      f.has_half_infinite = true;
    }
  }
  if (f.has_half_infinite) {
    f.forces_sh_zero = Verdict::False;
  } else {
    f.forces_sh_zero = truncated ? Verdict::Unknown : Verdict::True;
  }
  return f;
}

PerturbationBall::PerturbationBall(Scalar r) : radius(std::move(r)) {
  if (!radius.is_finite() || radius < Scalar(0)) throw Error(ErrorKind::InvalidArgument, "radius must be >= 0");
}

Barcode perturb_barcode(const Barcode& b, const Scalar& radius, std::uint64_t seed) {
  if (!radius.is_finite() || radius < Scalar(0)) throw Error(ErrorKind::InvalidArgument, "radius must be >= 0");
  if (radius == Scalar(0)) return b;
  constexpr std::int64_t kSteps = 8;
  Rng rng(seed);
  auto jiggle = [&](const Scalar& x) {
    if (!x.is_finite()) return x;
    return x + radius * Scalar(rng.uniform(-kSteps, kSteps), kSteps);
  };

  std::vector<Bar> bars;
  for (const Bar& bar : b.bars) {
    Bar moved = bar;
    moved.birth = jiggle(bar.birth);
    moved.death = jiggle(bar.death);
    if (bar.is_finite()) {
      // Bars of length <= 2 * radius may also vanish into the diagonal.
      const bool short_bar = bar.length() <= radius + radius;
      if (!(moved.birth < moved.death) || (short_bar && rng.chance(1, 4))) continue;
    }
    bars.push_back(std::move(moved));
  }
  const Scalar lo = b.spectrum.lo() - radius;
  const Scalar hi = b.spectrum.hi() + radius;
  const std::int64_t inserts = rng.uniform(0, 2);
  for (std::int64_t n = 0; n < inserts; ++n) {
    const Scalar width = b.spectrum.hi() - b.spectrum.lo();
    const Scalar center = b.spectrum.lo() + width * Scalar(rng.uniform(0, kSteps), kSteps);
    const Scalar half = radius * Scalar(rng.uniform(1, kSteps), kSteps);
    bars.push_back({center - half, center + half, rng.chance(1, 2) ? Parity::Odd : Parity::Even, false});
  }
  std::vector<Scalar> pts;
  for (const Bar& bar : bars) {
    if (bar.birth.is_finite()) pts.push_back(bar.birth);
    if (bar.death.is_finite()) pts.push_back(bar.death);
  }
  return {Spectrum::from_unsorted(std::move(pts), lo, hi), std::move(bars)};
}

LipschitzReport check_lipschitz(const Barcode& b, const PerturbationBall& ball, std::size_t trials,
                                std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorKind::InvalidArgument, "need at least one trial");
  LipschitzReport report;
  report.trials = trials;
  const BottleneckOptions opts{false, true};
  const ShClass sh = sh_class(b, true);
  for (std::size_t t = 0; t < trials; ++t) {
    const Barcode moved = perturb_barcode(b, ball.radius, mix_seed(seed, t));
    const BottleneckResult d = bottleneck_distance(b, moved, opts);
    report.max_distance = std::max(report.max_distance, d.delta);
    if (ball.radius < d.delta) {
      report.violations.push_back({t, "bottleneck distance " + d.delta.str() + " exceeds radius " + ball.radius.str()});
      continue;
    }
    const ShClass moved_sh = sh_class(moved, true);
    for (std::size_t g = 0; g < sh.generators.size(); ++g) {
      if (sh.generators[g].kind == ShGenerator::Kind::FullyInfinite) continue;
      const auto pair = std::find_if(d.matching.pairs.begin(), d.matching.pairs.end(),
                                     [&](const MatchedPair& p) { return p.left == sh.generators[g].bar_index; });
      if (pair == d.matching.pairs.end() || !pair->right) {
        report.violations.push_back({t, "generator " + std::to_string(g) + " has no matched partner"});
        continue;
      }
      const auto partner = std::find_if(moved_sh.generators.begin(), moved_sh.generators.end(),
                                        [&](const ShGenerator& x) { return x.bar_index == *pair->right; });
      if (partner == moved_sh.generators.end()) {
        report.violations.push_back({t, "generator " + std::to_string(g) + " matched to a finite bar"});
        continue;
      }
      const Scalar before = spectral_invariant(b, g, true);
      const Scalar after =
          spectral_invariant(moved, static_cast<std::size_t>(partner - moved_sh.generators.begin()), true);
      const Scalar deviation = abs(after - before);
      report.max_deviation = std::max(report.max_deviation, deviation);
      if (ball.radius < deviation) {
        report.violations.push_back({t, "spectral invariant moved by " + deviation.str()});
      }
    }
  }
  return report;
}

}  // namespace cpv

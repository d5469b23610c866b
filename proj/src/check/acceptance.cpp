#include "cpv/check/acceptance.hpp"

#include "cpv/check/generators.hpp"
#include "cpv/check/oracles.hpp"
#include "cpv/distances.hpp"
#include "cpv/ellipsoid.hpp"
#include "cpv/invariants.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace cpv::check {

namespace {

/// Collects every barcode produced during the battery and checks that its
/// finite endpoints are spectrum points.
class EndpointAudit {
 public:
  void record(const Barcode& b, const std::string& origin) {
    ++audited_;
    for (const Scalar& e : off_spectrum_endpoints(b)) {
      if (failures_.size() < 5) failures_.push_back(origin + ": endpoint " + e.str() + " not in spectrum");
      ++failure_count_;
    }
  }
  std::size_t audited() const { return audited_; }
  std::size_t failure_count() const { return failure_count_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::size_t audited_ = 0;
  std::size_t failure_count_ = 0;
  std::vector<std::string> failures_;
};

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (passed) detail << why;
    passed = false;
  }
};

CriterionResult timed(int id, std::string name, double limit, const std::function<void(Outcome&)>& body) {
  CriterionResult r{id, std::move(name), false, 0, limit, {}};
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.passed = out.passed;
  r.detail = out.detail.str();
  if (r.passed && r.seconds >= limit) {
    r.passed = false;
    r.detail += " (time limit exceeded)";
  }
  return r;
}

std::string bar_list(const Barcode& b) {
  std::ostringstream os;
  for (const Bar& bar : b.bars) {
    os << '(' << bar.birth << ',' << bar.death << (bar.truncated ? " trunc" : "") << " p" << to_int(bar.parity) << ')';
  }
  return os.str();
}

void ellipsoid_criterion(Outcome& out, EndpointAudit& audit) {
  const EllipsoidParams p({Scalar(1), Scalar(1)}, Scalar(5));
  const Barcode b = ellipsoid_barcode(p);
  audit.record(b, "ellipsoid (1,1) T=5");
  std::vector<Bar> expected;
  for (int k = 0; k < 4; ++k) expected.push_back({Scalar(k), Scalar(k + 1), Parity::Even, false});
  expected.push_back({Scalar(4), Scalar::pos_inf(), Parity::Even, true});
  if (b.bars != expected) out.fail("bars " + bar_list(b));
  const int expected_cz[] = {2, 6, 10, 14, 18};
  for (int k = 0; k < 5; ++k) {
    const CzIndex cz = cz_index(Scalar(2 * k + 1, 2), p);
    if (cz.index != expected_cz[k] || cz.parity != Parity::Even) {
      out.fail("CZ at " + std::to_string(2 * k + 1) + "/2 is " + cz.index.str());
    }
  }
  if (out.passed) out.detail << "5 bars, CZ 2,6,10,14,18";
}

void round_trip_criterion(Outcome& out, EndpointAudit& audit, std::uint64_t seed) {
  Rng rng(mix_seed(seed, 2));
  const BarcodeShape shape{8, 6, 10, 2, true};
  for (int t = 0; t < 500; ++t) {
    const Barcode b = random_barcode(rng, shape);
    audit.record(b, "random barcode");
    const int density = static_cast<int>(rng.uniform(1, 3));
    const SampledModule m = module_from_barcode(b, density);
    if (!validate_module(m).empty()) {
      out.fail("generated module invalid at trial " + std::to_string(t));
      return;
    }
    const Barcode back = decompose(m);
    audit.record(back, "round trip");
    if (!(back == b)) {
      out.fail("trial " + std::to_string(t) + ": " + bar_list(b) + " came back as " + bar_list(back));
      return;
    }
  }
  out.detail << "500/500 exact";
}

void oracle_criterion(Outcome& out, EndpointAudit& audit, std::uint64_t seed) {
  Rng rng(mix_seed(seed, 3));
  const ModuleShape shape{4, 4, 8, true, true};
  std::size_t bars = 0;
  for (int t = 0; t < 200; ++t) {
    const SampledModule m = random_module(rng, shape);
    const Barcode fast = decompose(m);
    const auto slow = brute_force_decompose(m);
    audit.record(fast, "decompose");
    if (!slow) {
      out.fail("brute force found no normal form at trial " + std::to_string(t));
      return;
    }
    audit.record(*slow, "brute force");
    if (!(fast == *slow)) {
      out.fail("trial " + std::to_string(t) + ": " + bar_list(fast) + " vs oracle " + bar_list(*slow));
      return;
    }
    bars += fast.bars.size();
  }
  out.detail << "200/200 agree (" << bars << " bars)";
}

void isometry_criterion(Outcome& out, EndpointAudit& audit, std::uint64_t seed) {
  Rng rng(mix_seed(seed, 4));
  const ModuleShape shape{4, 2, 6, true, true};
  std::size_t nonzero = 0;
  for (int t = 0; t < 200; ++t) {
    const SampledModule m1 = random_module(rng, shape);
    const SampledModule m2 = random_module(rng, shape);
    const Barcode b1 = decompose(m1);
    const Barcode b2 = decompose(m2);
    audit.record(b1, "isometry");
    audit.record(b2, "isometry");
    for (const bool graded : {true, false}) {
      const InterleavingResult il = interleaving_distance_bruteforce(m1, m2, {graded, 4});
      const BottleneckResult bn = bottleneck_distance(b1, b2, {graded, false});
      if (!(il.delta == bn.delta)) {
        out.fail("trial " + std::to_string(t) + (graded ? " graded" : " ungraded") + ": interleaving " +
                 il.delta.str() + " vs bottleneck " + bn.delta.str());
        return;
      }
      const bool verified = !il.certificate || (graded ? verify_interleaving(*il.certificate, m1, m2)
                                                       : verify_interleaving(*il.certificate, ungraded(m1), ungraded(m2)))
                                                          .empty();
      if (!verified) {
        out.fail("trial " + std::to_string(t) + ": certificate does not verify");
        return;
      }
      if (Scalar(0) < il.delta) ++nonzero;
    }
  }
  out.detail << "200 pairs x {graded, ungraded} equal (" << nonzero << " nonzero)";
}

void metric_criterion(Outcome& out, std::uint64_t seed) {
  Rng rng(mix_seed(seed, 5));
  for (int t = 0; t < 300; ++t) {
    const BarcodeShape shape{5, 5, 6, 2, rng.chance(1, 3)};
    const Barcode a = random_barcode(rng, shape);
    const Barcode b = random_barcode(rng, shape);
    const Barcode c = random_barcode(rng, shape);
    for (const bool graded : {false, true}) {
      const BottleneckOptions opts{graded, false};
      const Scalar ab = bottleneck_distance(a, b, opts).delta;
      const Scalar ba = bottleneck_distance(b, a, opts).delta;
      const Scalar bc = bottleneck_distance(b, c, opts).delta;
      const Scalar ac = bottleneck_distance(a, c, opts).delta;
      if (!(ab == ba)) out.fail("asymmetric at trial " + std::to_string(t));
      if (bc + ab < ac) out.fail("triangle inequality fails at trial " + std::to_string(t));
      if (!(bottleneck_distance(a, a, opts).delta == Scalar(0))) out.fail("d(a,a) != 0 at trial " + std::to_string(t));
      if (!out.passed) return;
    }
  }
  out.detail << "300 triples, graded and ungraded";
}

void stability_criterion(Outcome& out, std::uint64_t seed) {
  Rng rng(mix_seed(seed, 6));
  Scalar worst_ratio = 0;
  for (int t = 0; t < 100; ++t) {
    Barcode b = random_barcode(rng, {6, 6, 10, 2, true});
    const Scalar delta(rng.uniform(1, 16), 8);
    const Barcode moved = perturb_barcode(b, delta, mix_seed(seed, 1000 + static_cast<std::uint64_t>(t)));
    const Scalar d = bottleneck_distance(b, moved).delta;
    if (delta < d) {
      out.fail("trial " + std::to_string(t) + ": distance " + d.str() + " > delta " + delta.str());
      return;
    }
    const LipschitzReport report = check_lipschitz(b, PerturbationBall(delta), 1, mix_seed(seed, 2000 + static_cast<std::uint64_t>(t)));
    if (!report.ok()) {
      out.fail("trial " + std::to_string(t) + ": " + report.violations.front().detail);
      return;
    }
    worst_ratio = std::max(worst_ratio, report.max_deviation / delta);
  }
  out.detail << "100 perturbations; max |dc|/delta = " << worst_ratio;
}

void monotonicity_criterion(Outcome& out, std::uint64_t seed) {
  Rng rng(mix_seed(seed, 7));
  for (int t = 0; t < 100; ++t) {
    Barcode b = random_barcode(rng, {6, 6, 10, 2, true});
    // Make sure at least one half-infinite generator exists.
    std::vector<Bar> bars = b.bars;
    bars.push_back({b.spectrum.points().front(), Scalar::pos_inf(), Parity::Even, false});
    b = Barcode(b.spectrum, std::move(bars));
    const Scalar shift(rng.uniform(1, 40), rng.uniform(1, 7));
    const Barcode moved = translate_barcode(b, shift);
    const ShClass sh = sh_class(b);
    for (std::size_t g = 0; g < sh.generators.size(); ++g) {
      if (sh.generators[g].kind == ShGenerator::Kind::FullyInfinite) continue;
      const Scalar before = spectral_invariant(b, g);
      const Scalar after = spectral_invariant(moved, g);
      if (!(after == before + shift) || !(before < after)) {
        out.fail("trial " + std::to_string(t) + ": " + before.str() + " -> " + after.str() + " under shift " + shift.str());
        return;
      }
    }
  }
  out.detail << "100 shifts exact";
}

void covering_criterion(Outcome& out, std::uint64_t seed) {
  Rng rng(mix_seed(seed, 8));
  for (int t = 0; t < 100; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform(0, 8));
    std::vector<Scalar> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back(rng.rational(0, 6, 4));
    const Scalar delta(rng.uniform(1, 12), 4);
    const Cover greedy = covering_number(pts, delta);
    const std::size_t best = brute_force_cover(pts, delta);
    if (greedy.count != best) {
      out.fail("trial " + std::to_string(t) + ": greedy " + std::to_string(greedy.count) + " vs brute force " +
               std::to_string(best));
      return;
    }
  }
  const Barcode e = ellipsoid_barcode(EllipsoidParams({Scalar(1), Scalar(1)}, Scalar(5)));
  const std::size_t k = translated_point_lower_bound(e, Scalar(1));
  if (k != 6) {
    out.fail("ellipsoid (1,1) T=5 delta=1 gives K=" + std::to_string(k));
    return;
  }
  out.detail << "100/100 optimal; ellipsoid K=6";
}

void gap_criterion(Outcome& out) {
  const Scalar a2(1393, 985);
  const Scalar ell(9, 10);
  const auto g100 = gaps_longer_than(EllipsoidParams({Scalar(1), a2}, Scalar(100)), ell);
  const auto g200 = gaps_longer_than(EllipsoidParams({Scalar(1), a2}, Scalar(200)), ell);
  if (g100.size() < 5) out.fail("only " + std::to_string(g100.size()) + " gaps on [0,100]");
  if (g200.size() < g100.size()) out.fail("gap count decreased with the horizon");
  if (out.passed) out.detail << g100.size() << " gaps on [0,100], " << g200.size() << " on [0,200]";
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  EndpointAudit audit;
  std::vector<CriterionResult> results;
  results.push_back(timed(1, "ellipsoid barcode a=(1,1) T=5 with CZ grading", 1.0,
                          [&](Outcome& o) { ellipsoid_criterion(o, audit); }));
  results.push_back(timed(2, "decompose(module_from_barcode(b)) == b on 500 barcodes", 10.0,
                          [&](Outcome& o) { round_trip_criterion(o, audit, seed); }));
  results.push_back(timed(3, "decompose == brute-force basis change on 200 modules", 60.0,
                          [&](Outcome& o) { oracle_criterion(o, audit, seed); }));
  results.push_back(timed(4, "interleaving distance == bottleneck distance on 200 pairs", 300.0,
                          [&](Outcome& o) { isometry_criterion(o, audit, seed); }));
  results.push_back(timed(5, "bottleneck symmetry and triangle inequality on 300 triples", 30.0,
                          [&](Outcome& o) { metric_criterion(o, seed); }));
  results.push_back(timed(6, "stability: d(b,b') <= delta and |dc| <= delta on 100 perturbations", 30.0,
                          [&](Outcome& o) { stability_criterion(o, seed); }));
  results.push_back(timed(7, "spectral invariant shifts by exactly t > 0 on 100 translations", 5.0,
                          [&](Outcome& o) { monotonicity_criterion(o, seed); }));
  results.push_back(timed(8, "greedy covering optimal on 100 sets; ellipsoid K=6", 10.0,
                          [&](Outcome& o) { covering_criterion(o, seed); }));
  results.push_back(timed(9, "long gaps for a=(1,1393/985): >= 5 on [0,100], nondecreasing", 5.0,
                          [&](Outcome& o) { gap_criterion(o); }));
  results.push_back(timed(10, "every finite endpoint lies in its spectrum", 1.0, [&](Outcome& o) {
    if (audit.audited() == 0) o.fail("no barcodes audited");
    for (const std::string& f : audit.failures()) o.fail(f);
    if (o.passed) o.detail << audit.audited() << " barcodes audited, 0 violations";
  }));
  return results;
}

void print_results(std::ostream& os, const std::vector<CriterionResult>& results) {
  for (const CriterionResult& r : results) {
    os << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " (" << std::fixed << std::setprecision(3)
       << r.seconds << " s / " << std::setprecision(0) << r.time_limit << " s): " << r.detail << '\n';
  }
}

}  // namespace cpv::check

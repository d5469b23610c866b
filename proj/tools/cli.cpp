#include "cli.hpp"

#include "cpv/check/acceptance.hpp"
#include "cpv/ellipsoid.hpp"
#include "cpv/error.hpp"
#include "cpv/io.hpp"
#include "cpv/svg.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <ostream>

namespace cpv::cli {

namespace {

constexpr int kDomainError = 1;
constexpr int kIoError = 2;

Scalar rational_arg(const std::string& text, const char* what) {
  try {
    return Scalar::parse(text);
  } catch (const Error&) {
    throw Error(ErrorKind::Parse, std::string(what) + " must be an exact rational (p/q or integer), got '" + text + "'");
  }
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty()) {
    out << text;
  } else {
    io::write_text_file(path, text);
  }
}

std::uint64_t seed_from_env() {
  if (const char* env = std::getenv("CPV_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "CPV_SEED must be an unsigned integer");
    }
  }
  return 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact persistence barcodes for contact Reeb dynamics", "cpv"};
  app.require_subcommand(1);

  std::string input;
  std::string input2;
  std::string output;
  std::string svg_output;
  std::string delta_text;
  std::string radius_text = "1/4";
  std::vector<std::string> periods;
  std::string horizon_text;
  std::size_t class_index = 0;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  bool graded = false;
  bool ungraded = false;
  bool include_truncated = false;
  bool truncated_infinite = false;
  bool as_json = false;

  auto* ellipsoid = app.add_subcommand("ellipsoid", "Barcode of the ellipsoid with periods a_j on [0, T]");
  ellipsoid->add_option("-a", periods, "Reeb period a_j (repeatable, p/q)")->required();
  ellipsoid->add_option("-T", horizon_text, "Horizon T (p/q)")->required();
  ellipsoid->add_option("-o,--output", output, "Barcode JSON output (default stdout)");
  ellipsoid->add_option("--svg", svg_output, "Also write an SVG diagram");

  auto* reduce = app.add_subcommand("reduce", "Decompose a sampled module into its barcode");
  reduce->add_option("module", input, "Module JSON")->required();
  reduce->add_option("-o,--output", output, "Barcode JSON output (default stdout)");

  auto* distance = app.add_subcommand("distance", "Bottleneck distance between two barcodes");
  distance->add_option("b1", input, "First barcode JSON")->required();
  distance->add_option("b2", input2, "Second barcode JSON")->required();
  distance->add_flag("--graded", graded, "Only match bars of equal parity");
  distance->add_flag("--truncated-as-infinite", truncated_infinite, "Match truncated bars as (a, inf)");
  distance->add_flag("--json", as_json, "Print delta and witness matching as JSON");

  auto* interleave = app.add_subcommand("interleave", "Brute-force interleaving distance between two modules");
  interleave->add_option("m1", input, "First module JSON")->required();
  interleave->add_option("m2", input2, "Second module JSON")->required();
  interleave->add_flag("--ungraded", ungraded, "Allow maps that mix parities");
  interleave->add_flag("--json", as_json, "Print delta and certificate as JSON");

  auto* spectral = app.add_subcommand("spectral", "Spectral invariant of an SH generator");
  spectral->add_option("barcode", input, "Barcode JSON")->required();
  spectral->add_option("--class", class_index, "Generator index among the infinite bars")->required();
  spectral->add_flag("--include-truncated", include_truncated, "Count truncated bars as half-infinite");

  auto* depth = app.add_subcommand("depth", "Boundary depth (longest finite bar)");
  depth->add_option("barcode", input, "Barcode JSON")->required();

  auto* cover = app.add_subcommand("cover", "Covering of long-bar endpoints by delta/2-balls");
  cover->add_option("barcode", input, "Barcode JSON")->required();
  cover->add_option("--delta", delta_text, "delta (p/q)")->required();

  auto* bound = app.add_subcommand("bound", "Lower bound on the number of translated-point lengths");
  bound->add_option("barcode", input, "Barcode JSON")->required();
  bound->add_option("--delta", delta_text, "delta (p/q)")->required();

  auto* verify = app.add_subcommand("verify", "Check the sampled-module invariants");
  verify->add_option("module", input, "Module JSON")->required();

  auto* diagram = app.add_subcommand("diagram", "Render a barcode as SVG");
  diagram->add_option("barcode", input, "Barcode JSON")->required();
  diagram->add_option("-o,--output", output, "SVG output (default stdout)");

  auto* vanish = app.add_subcommand("vanish", "Vanishing predicates of a model identity barcode");
  vanish->add_option("barcode", input, "Barcode JSON")->required();

  auto* lipschitz = app.add_subcommand("lipschitz", "Spectral Lipschitz property over random perturbations");
  lipschitz->add_option("barcode", input, "Barcode JSON")->required();
  lipschitz->add_option("--radius", radius_text, "Perturbation radius (p/q)");
  lipschitz->add_option("--trials", trials, "Number of trials")->check(CLI::PositiveNumber);
  auto* lipschitz_seed = lipschitz->add_option("--seed", seed, "Random seed (falls back to CPV_SEED)");

  auto* suite = app.add_subcommand("suite", "Run the acceptance battery");
  auto* suite_seed = suite->add_option("--seed", seed, "Random seed (falls back to CPV_SEED)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kIoError;
  }

  try {
    if (*ellipsoid) {
      std::vector<Scalar> a;
      for (const std::string& t : periods) a.push_back(rational_arg(t, "-a"));
      const EllipsoidParams params(std::move(a), rational_arg(horizon_text, "-T"));
      const Barcode b = ellipsoid_barcode(params);
      emit(out, output, io::dump(io::to_json(b)));
      if (!svg_output.empty()) io::write_text_file(svg_output, barcode_svg(b));
    } else if (*reduce) {
      const SampledModule m = io::module_from_json(io::read_json_file(input));
      emit(out, output, io::dump(io::to_json(decompose(m))));
    } else if (*distance) {
      const Barcode b1 = io::barcode_from_json(io::read_json_file(input));
      const Barcode b2 = io::barcode_from_json(io::read_json_file(input2));
      const BottleneckResult r = bottleneck_distance(b1, b2, {graded, truncated_infinite});
      out << (as_json ? io::dump(io::to_json(r)) : r.delta.str() + "\n");
    } else if (*interleave) {
      const SampledModule m1 = io::module_from_json(io::read_json_file(input));
      const SampledModule m2 = io::module_from_json(io::read_json_file(input2));
      const InterleavingResult r = interleaving_distance_bruteforce(m1, m2, {!ungraded, 4});
      out << (as_json ? io::dump(io::to_json(r)) : r.delta.str() + "\n");
    } else if (*spectral) {
      const Barcode b = io::barcode_from_json(io::read_json_file(input));
      out << spectral_invariant(b, class_index, include_truncated).str() << '\n';
    } else if (*depth) {
      out << boundary_depth(io::barcode_from_json(io::read_json_file(input))).str() << '\n';
    } else if (*cover) {
      const Barcode b = io::barcode_from_json(io::read_json_file(input));
      const Scalar delta = rational_arg(delta_text, "--delta");
      out << io::dump(io::to_json(covering_number(long_bar_endpoints(b, delta), delta)));
    } else if (*bound) {
      const Barcode b = io::barcode_from_json(io::read_json_file(input));
      out << translated_point_lower_bound(b, rational_arg(delta_text, "--delta")) << '\n';
    } else if (*verify) {
      const auto violations = validate_module(io::module_from_json(io::read_json_file(input)));
      out << io::dump(io::to_json(violations));
      return violations.empty() ? 0 : kDomainError;
    } else if (*diagram) {
      emit(out, output, barcode_svg(io::barcode_from_json(io::read_json_file(input))));
    } else if (*vanish) {
      const VanishingFlags f = vanishing_predicates(io::barcode_from_json(io::read_json_file(input)));
      out << io::dump({{"has_bar_at_zero", f.has_bar_at_zero},
                       {"has_half_infinite", f.has_half_infinite},
                       {"forces_SH_zero", std::string(to_string(f.forces_sh_zero))}});
    } else if (*lipschitz) {
      if (lipschitz_seed->count() == 0) seed = seed_from_env();
      const Barcode b = io::barcode_from_json(io::read_json_file(input));
      const LipschitzReport r = check_lipschitz(b, PerturbationBall(rational_arg(radius_text, "--radius")), trials, seed);
      out << io::dump(io::to_json(r));
      return r.ok() ? 0 : kDomainError;
    } else if (*suite) {
      if (suite_seed->count() == 0) seed = seed_from_env();
      const auto results = check::run_acceptance(seed);
      check::print_results(out, results);
      for (const auto& r : results) {
        if (!r.passed) return kDomainError;
      }
    }
  } catch (const Error& e) {
    err << "cpv: " << e.what() << '\n';
    return e.kind() == ErrorKind::Parse ? kIoError : kDomainError;
  } catch (const std::exception& e) {
    err << "cpv: " << e.what() << '\n';
    return kIoError;
  }
  return 0;
}

}  // namespace cpv::cli

#include "smallsupport/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "smallsupport/errors.hpp"
#include "smallsupport/io.hpp"
#include "smallsupport/latin_square.hpp"
#include "smallsupport/lemma.hpp"
#include "smallsupport/steiner_design.hpp"

namespace smallsupport::cli {

namespace {

constexpr std::size_t kDefaultLimit = 6;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const HypothesisError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const PropertyViolation& e) {
    err << "property violation: " << e.what() << "\n";
    return 3;
  }
}

std::string cycle_type_string(const CycleStructure& cs) {
  std::string out;
  for (const auto& [len, points] : cs.points_per_length()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(len);
    const std::uint64_t mult = points / len;
    if (mult > 1) out += '^' + std::to_string(mult);
  }
  return out;
}

// splitmix64 step; gives every trial its own generator so results do not
// depend on how trials are partitioned across threads.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t z = seed + (trial + 1) * 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t k) {
  const std::uint64_t threshold = (0 - k) % k;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % k;
  }
}

Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>(i);
  for (std::size_t i = n - 1; i > 0; --i) {
    const std::uint64_t j = bounded(rng, i + 1);
    std::swap(images[i], images[j]);
  }
  return Permutation(std::move(images));
}

struct TrialTally {
  std::uint64_t performed = 0;
  std::uint64_t skipped = 0;
  std::uint64_t violations = 0;
  double max_ratio = 0.0;

  void merge(const TrialTally& other) {
    performed += other.performed;
    skipped += other.skipped;
    violations += other.violations;
    max_ratio = std::max(max_ratio, other.max_ratio);
  }
};

TrialTally run_trials(std::size_t n, std::uint64_t begin, std::uint64_t end,
                      std::uint64_t seed) {
  TrialTally tally;
  for (std::uint64_t t = begin; t < end; ++t) {
    std::mt19937_64 rng(mix_seed(seed, t));
    const Permutation pi = random_permutation(n, rng);
    if (pi.is_identity()) {
      ++tally.skipped;
      continue;
    }
    ++tally.performed;
    const CycleStructure cs = cycle_decomposition(pi);
    const WitnessReport report = best_witness(cs);
    const MinSupportResult brute = min_support_bruteforce(cs);
    const double ratio =
        static_cast<double>(report.support_size) * report.alpha / static_cast<double>(n);
    tally.max_ratio = std::max(tally.max_ratio, ratio);
    if (report.support_size != brute.support_size) ++tally.violations;
    if (ratio > 1.0 + 1e-9) ++tally.violations;
  }
  return tally;
}

std::size_t enumeration_limit() {
  const char* env = std::getenv("SMALLSUPPORT_LIMIT_N");
  if (env == nullptr || *env == '\0') return kDefaultLimit;
  char* end = nullptr;
  const unsigned long value = std::strtoul(env, &end, 10);
  if (end == env || *end != '\0' || value == 0) {
    throw InputError("SMALLSUPPORT_LIMIT_N must be a positive integer");
  }
  return static_cast<std::size_t>(value);
}

}  // namespace

int analyze_perm(const std::string& path, double alpha_override,
                 const std::string& format, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() {
    const Permutation pi = load_permutation(path);
    const CycleStructure cs = cycle_decomposition(pi);
    const WitnessReport report =
        alpha_override > 0.0 ? witness_power(cs, alpha_override) : best_witness(cs);
    const double alpha = max_alpha(cs);
    if (format == "kv") {
      out << to_kv(report);
      out << "cycle_type=" << cycle_type_string(cs) << "\n";
      out << "max_alpha=" << format_double(alpha) << "\n";
    } else {
      out << "points: " << pi.size() << "\n";
      out << "cycle type: " << cycle_type_string(cs) << "\n";
      out << "order: " << report.order.to_string();
      if (auto value = report.order.value()) {
        out << " (= " << *value << ")";
      } else {
        out << " (log10 = " << format_double(report.order.log() / std::log(10.0)) << ")";
      }
      out << "\n";
      out << "max alpha: " << format_double(alpha) << "\n";
      out << "witness: prime=" << report.prime << " q=" << report.prime_power
          << " exponent=" << report.exponent.to_string() << " support="
          << report.support_size << " bound=" << format_double(report.bound) << "\n";
    }
    return 0;
  });
}

int verify_lemma(std::size_t n, std::uint64_t trials, std::uint64_t seed, unsigned threads,
                 const std::string& format, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() {
    if (n < 2) throw HypothesisFailsError("n must be at least 2");
    if (trials < 1) throw InputError("trials must be at least 1");
    if (threads < 1) threads = 1;

    TrialTally tally;
    if (threads == 1) {
      tally = run_trials(n, 0, trials, seed);
    } else {
      // Chunked partitioning; per-trial seeding keeps the outcome identical
      // for every partitioning.
      std::vector<TrialTally> parts(threads);
      std::vector<std::thread> workers;
      const std::uint64_t chunk = (trials + threads - 1) / threads;
      for (unsigned w = 0; w < threads; ++w) {
        const std::uint64_t begin = std::min<std::uint64_t>(trials, w * chunk);
        const std::uint64_t end = std::min<std::uint64_t>(trials, begin + chunk);
        workers.emplace_back(
            [&, w, begin, end]() { parts[w] = run_trials(n, begin, end, seed); });
      }
      for (auto& worker : workers) worker.join();
      for (const auto& part : parts) tally.merge(part);
    }

    if (format == "kv") {
      out << "n=" << n << "\n";
      out << "trials=" << trials << "\n";
      out << "performed=" << tally.performed << "\n";
      out << "skipped=" << tally.skipped << "\n";
      out << "seed=" << seed << "\n";
      out << "max_ratio=" << format_double(tally.max_ratio) << "\n";
      out << "violations=" << tally.violations << "\n";
    } else {
      out << "verified " << tally.performed << " random permutations at n=" << n
          << " (skipped " << tally.skipped << " identity draws)\n";
      out << "max support*alpha/n = " << format_double(tally.max_ratio) << "\n";
      out << "violations: " << tally.violations << "\n";
    }
    if (tally.violations > 0) {
      throw PropertyViolation("witness bound or oracle equality failed");
    }
    return 0;
  });
}

namespace {

void print_automorphism_list(const std::vector<Permutation>& autos,
                             const std::string& format, std::ostream& out) {
  if (format == "kv") {
    out << "automorphism_count=" << autos.size() << "\n";
    for (std::size_t i = 0; i < autos.size(); ++i) {
      out << "automorphism_" << i << "=";
      const auto& images = autos[i].images();
      for (std::size_t j = 0; j < images.size(); ++j) {
        out << images[j] << (j + 1 == images.size() ? "" : " ");
      }
      out << "\n";
      out << "automorphism_" << i
          << "_order=" << permutation_order(autos[i]).value().value() << "\n";
    }
  } else {
    out << "automorphisms: " << autos.size() << "\n";
    for (const auto& pi : autos) {
      out << "  ";
      for (std::size_t j = 0; j < pi.images().size(); ++j) {
        out << pi.images()[j] << (j + 1 == pi.images().size() ? "" : " ");
      }
      out << "  (order " << permutation_order(pi).value().value() << ")\n";
    }
  }
}

}  // namespace

int latin_command(const std::string& path, const std::string& action,
                  const std::string& format, std::size_t limit, std::ostream& out,
                  std::ostream& err) {
  return guarded(err, [&]() {
    const LatinSquare square = load_latin_square(path);
    const std::size_t n = square.order();
    if (action == "validate") {
      if (format == "kv") {
        out << "n=" << n << "\n" << "valid=1\n";
      } else {
        out << "valid Latin square of order " << n << "\n";
      }
      return 0;
    }
    if (action == "autos") {
      print_automorphism_list(automorphisms(square), format, out);
      return 0;
    }
    if (action == "autotopisms" || action == "bounds") {
      if (n > limit) {
        throw TooLargeError("autotopism enumeration at order " + std::to_string(n) +
                            " exceeds the ceiling " + std::to_string(limit));
      }
    }
    if (action == "autotopisms") {
      const auto tops = autotopisms(square);
      std::uint64_t max_order = 1;
      for (const auto& t : tops) {
        max_order = std::max(max_order, t.order().value().value());
      }
      if (format == "kv") {
        out << "n=" << n << "\n";
        out << "autotopism_count=" << tops.size() << "\n";
        out << "max_autotopism_order=" << max_order << "\n";
      } else {
        out << "autotopisms: " << tops.size() << " (max order " << max_order << ")\n";
      }
      return 0;
    }
    if (action == "bounds") {
      const AutomorphismBoundReport autos = check_automorphism_bounds(square);
      const AutotopismBoundReport tops = check_autotopism_bounds(square);
      if (format == "kv") {
        out << "n=" << n << "\n";
        out << "automorphism_count=" << autos.automorphism_count << "\n";
        out << "max_automorphism_order=" << autos.max_order_value << "\n";
        out << "max_automorphism_order_factors=" << autos.max_order.to_string() << "\n";
        out << "quarter_bound=" << format_double(autos.quarter_bound) << "\n";
        out << "automorphism_quarter_ok=" << (autos.quarter_ok ? 1 : 0) << "\n";
        out << "automorphism_square_ok=" << (autos.square_ok ? 1 : 0) << "\n";
        out << "autotopism_count=" << tops.autotopism_count << "\n";
        out << "max_autotopism_order=" << tops.max_order_value << "\n";
        out << "autotopism_quarter_ok=" << (tops.quarter_ok ? 1 : 0) << "\n";
        out << "autotopism_4n2_ok=" << (tops.four_n2_ok ? 1 : 0) << "\n";
        out << "faithful_ok=" << (tops.faithful_ok ? 1 : 0) << "\n";
        out << "mmm_ok=" << (tops.mmm_ok ? 1 : 0) << "\n";
      } else {
        out << "order " << n << ": " << autos.automorphism_count
            << " automorphisms (max order " << autos.max_order_value << ", bound n^2/4 = "
            << format_double(autos.quarter_bound) << ", "
            << (autos.quarter_ok ? "ok" : "EXCEEDED") << ")\n";
        out << "  " << tops.autotopism_count << " autotopisms (max order "
            << tops.max_order_value << ", " << (tops.quarter_ok ? "ok" : "EXCEEDED")
            << "; 4n^2 " << (tops.four_n2_ok ? "ok" : "EXCEEDED") << ")\n";
        out << "  faithfulness " << (tops.faithful_ok ? "ok" : "VIOLATED")
            << ", fixed-point property " << (tops.mmm_ok ? "ok" : "VIOLATED") << "\n";
      }
      return 0;
    }
    throw InputError("unknown action \"" + action +
                     "\" (expected validate, autos, autotopisms, or bounds)");
  });
}

int fmax_command(std::size_t n_max, std::size_t limit, const std::string& format,
                 std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() {
    const auto table = f_max(n_max, limit);
    if (format == "kv") {
      for (const auto& entry : table) {
        out << "f_" << entry.n << "=" << entry.f_value << "\n";
        out << "bound_" << entry.n << "=" << format_double(entry.quarter_bound) << "\n";
      }
    } else {
      out << "n  f(n)  n^2/4\n";
      for (const auto& entry : table) {
        out << entry.n << "  " << entry.f_value << "  "
            << format_double(entry.quarter_bound) << "\n";
      }
    }
    return 0;
  });
}

int design_command(const std::string& path, const std::string& action,
                   const std::string& format, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() {
    const SteinerDesign design = load_design(path);
    if (action == "validate") {
      if (format == "kv") {
        out << "n=" << design.point_count() << "\n";
        out << "k=" << design.line_size() << "\n";
        out << "lines=" << design.lines().size() << "\n";
        out << "valid=1\n";
      } else {
        out << "valid 2-(" << design.point_count() << "," << design.line_size()
            << ",1) design with " << design.lines().size() << " lines\n";
      }
      return 0;
    }
    if (action == "autos") {
      const auto autos = design_automorphisms(design);
      std::map<std::uint64_t, std::size_t> order_histogram;
      for (const auto& pi : autos) {
        ++order_histogram[permutation_order(pi).value().value()];
      }
      if (format == "kv") {
        out << "automorphism_count=" << autos.size() << "\n";
        for (const auto& [order, count] : order_histogram) {
          out << "order_" << order << "_count=" << count << "\n";
        }
      } else {
        out << "automorphisms: " << autos.size() << "\n";
        for (const auto& [order, count] : order_histogram) {
          out << "  order " << order << ": " << count << "\n";
        }
      }
      return 0;
    }
    if (action == "bound") {
      const PropositionAReport report = check_proposition_a(design);
      if (format == "kv") {
        out << "n=" << report.n << "\n";
        out << "k=" << report.k << "\n";
        out << "automorphism_count=" << report.automorphism_count << "\n";
        out << "max_order=" << report.max_order_value << "\n";
        out << "max_order_factors=" << report.max_order.to_string() << "\n";
        out << "n_squared=" << report.n_squared << "\n";
        out << "bound_holds=" << (report.holds ? 1 : 0) << "\n";
        out << "reference_exponent_bound="
            << format_double(report.reference_exponent_bound) << "\n";
        if (report.witness) {
          std::istringstream kv(to_kv(*report.witness));
          std::string line;
          while (std::getline(kv, line)) out << "witness_" << line << "\n";
        }
      } else {
        out << "max automorphism order " << report.max_order_value << " ("
            << report.max_order.to_string() << ") over " << report.automorphism_count
            << " automorphisms; n^2 = " << report.n_squared << " ("
            << (report.holds ? "bound holds" : "BOUND EXCEEDED") << ")\n";
        out << "reference n^(1+1/(k-2)) = "
            << format_double(report.reference_exponent_bound) << "\n";
        if (report.witness) {
          out << "witness of extremal element: prime=" << report.witness->prime
              << " support=" << report.witness->support_size
              << " bound=" << format_double(report.witness->bound) << "\n";
        }
      }
      return 0;
    }
    throw InputError("unknown action \"" + action +
                     "\" (expected validate, autos, or bound)");
  });
}

int sts_convert(const std::string& path, const std::string& output_path, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&]() {
    const SteinerDesign design = load_design(path);
    const LatinSquare square = sts_to_quasigroup(design);
    if (output_path.empty()) {
      write_latin_square(out, square);
    } else {
      std::ofstream file(output_path);
      if (!file) throw InputError("cannot write file: " + output_path);
      write_latin_square(file, square);
    }
    return 0;
  });
}

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"permutation support witnesses, Latin square and Steiner design checks"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "kv"}))
      ->capture_default_str();

  std::string perm_path;
  double alpha = 0.0;
  auto* analyze = app.add_subcommand("analyze-perm", "cycle structure, order, witness");
  analyze->add_option("path", perm_path, "permutation file")->required();
  analyze->add_option("--alpha", alpha,
                      "witness at this exponent instead of the maximal one");

  std::size_t n = 0;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  auto* verify = app.add_subcommand("verify-lemma", "randomized witness-bound campaign");
  verify->add_option("--n", n, "degree")->required();
  verify->add_option("--trials", trials, "number of random draws")->capture_default_str();
  verify->add_option("--seed", seed, "PRNG seed")->capture_default_str();
  verify->add_option("--threads", threads, "worker threads")->capture_default_str();

  std::string latin_path, latin_action;
  auto* latin = app.add_subcommand("latin", "Latin square checks");
  latin->add_option("path", latin_path, "Latin square file")->required();
  latin->add_option("action", latin_action, "validate | autos | autotopisms | bounds")
      ->required();

  std::size_t n_max = 0;
  auto* fmax = app.add_subcommand("fmax", "max automorphism order per order");
  fmax->add_option("--n-max", n_max, "largest order to enumerate")->required();

  std::string design_path, design_action;
  auto* design = app.add_subcommand("design", "Steiner 2-design checks");
  design->add_option("path", design_path, "design file")->required();
  design->add_option("action", design_action, "validate | autos | bound")->required();

  std::string sts_path, sts_output;
  auto* convert = app.add_subcommand("sts-convert", "triple system to Latin square");
  convert->add_option("path", sts_path, "design file (k = 3)")->required();
  convert->add_option("-o,--output", sts_output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  return guarded(err, [&]() {
    const std::size_t limit = enumeration_limit();
    if (analyze->parsed()) return analyze_perm(perm_path, alpha, format, out, err);
    if (verify->parsed()) return verify_lemma(n, trials, seed, threads, format, out, err);
    if (latin->parsed())
      return latin_command(latin_path, latin_action, format, limit, out, err);
    if (fmax->parsed()) return fmax_command(n_max, limit, format, out, err);
    if (design->parsed())
      return design_command(design_path, design_action, format, out, err);
    if (convert->parsed()) return sts_convert(sts_path, sts_output, out, err);
    return 1;
  });
}

}  // namespace smallsupport::cli

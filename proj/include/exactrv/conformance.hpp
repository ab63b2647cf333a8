#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exactrv/creal.hpp"
#include "exactrv/entropy.hpp"

namespace exactrv {

// One check's outcome. Serializable to a text line, a CSV row, or a JSON
// object per line; reports are deterministic functions of (seed, spec,
// jobs).
struct conformance_report {
  std::string name;
  std::map<std::string, std::uint64_t> observed;
  double statistic = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::uint64_t undecided = 0;
};

std::string to_json_line(const conformance_report& r);
std::string to_text_line(const conformance_report& r);
std::string csv_header();
std::string to_csv_line(const conformance_report& r);

// CDF check: draws creal samples, compares each against a dyadic point,
// and z-tests the below-point frequency against the expected CDF value.
// Comparisons that stay undecided at max_precision are tracked in their
// own counter and budgeted; they are never folded into either side. The
// sampler callable must be a pure function of the source passed to it
// (shards call it concurrently).
struct cdf_check_spec {
  std::string name;
  std::function<creal(bit_source&)> sampler;
  dyadic point;
  double expected_cdf = 0.5;
  std::uint64_t trials = 10000;
  double z_threshold = 5.0;
  std::int64_t max_precision = 128;
  double undecided_budget = 0.001;
};

conformance_report cdf_check(const cdf_check_spec& spec, std::uint64_t seed, unsigned jobs = 1);

// Pearson chi-square against a discrete PMF over {0, 1, ...}. pmf[i] is
// the mass at outcome i, except the last entry, which carries the whole
// tail P[outcome >= pmf.size() - 1]. Bins merge from the right until the
// tail's expected count reaches 5; fewer than two surviving bins, or a
// surviving bin still under 5 expected, throws degenerate_binning. Pass
// iff the statistic stays below the alpha = 0.001 critical value for the
// surviving degrees of freedom.
struct chi_square_spec {
  std::string name;
  std::function<std::uint64_t(bit_source&)> sampler;
  std::vector<double> pmf;
  std::uint64_t trials = 100000;
};

conformance_report chi_square_check(const chi_square_spec& spec, std::uint64_t seed,
                                    unsigned jobs = 1);

// One-sample Kolmogorov-Smirnov over samples in [0,1] that carry
// `discretization_bits` binary places. Pass iff
//   D_n <= threshold_coeff / sqrt(n) + 2^-bits;
// the additive slack covers the worst distortion the discretization can
// introduce against the continuous CDF.
struct ks_spec {
  std::string name;
  std::function<double(bit_source&)> sampler;
  std::function<double(double)> cdf;
  int discretization_bits = 8;
  std::uint64_t trials = 10000;
  double threshold_coeff = 1.95;
};

conformance_report ks_check(const ks_spec& spec, std::uint64_t seed, unsigned jobs = 1);

// Frequency z-test for a boolean event.
struct rate_check_spec {
  std::string name;
  std::function<bool(bit_source&)> event;
  double expected = 0.5;
  std::uint64_t trials = 100000;
  double z_threshold = 5.0;
};

conformance_report rate_check(const rate_check_spec& spec, std::uint64_t seed, unsigned jobs = 1);

// Laplace tail bound: for the exact distribution,
// P[|sample - mu| > log(1/beta) / 2^eps_exp] equals beta. Exceedances
// are counted against cut points rounded outward to dyadics (the counted
// region is a subset of the true one, so rounding never inflates the
// count), and the check passes iff the exceedance frequency stays within
// beta + 5 sqrt(beta (1 - beta) / trials). radius_scale < 1 shrinks the
// radius, the negative control. mu_factory builds one mu handle per
// shard, keeping creal ownership single-threaded.
struct laplace_accuracy_spec {
  std::string name;
  std::int64_t eps_exp = 0;
  std::function<creal()> mu_factory;
  double beta = 0.1;
  std::uint64_t trials = 100000;
  double radius_scale = 1.0;
  std::int64_t max_precision = 128;
};

conformance_report laplace_accuracy_check(const laplace_accuracy_spec& spec, std::uint64_t seed,
                                          unsigned jobs = 1);

// Exact enumeration over every bit tape of the given depth, walking the
// shared-prefix tree depth-first and re-running the sampler on each
// finite tape. For each outcome, `lower` holds the exact completed mass
// in units of 2^-depth; `residual` is the mass of runs still alive at
// the depth cap. [lower, lower + residual] brackets the outcome's true
// probability exactly; nothing here is statistical.
struct enumeration_result {
  int depth = 0;
  std::map<std::int64_t, std::uint64_t> lower;
  std::uint64_t residual = 0;

  double lower_of(std::int64_t outcome) const;
  double upper_of(std::int64_t outcome) const;
  bool brackets(std::int64_t outcome, double p) const;

  // Completed plus residual mass; equals 2^depth by construction.
  std::uint64_t mass_total() const;
};

// Depth is capped at 28 so masses stay comfortably inside 64 bits. The
// run callable must be a pure function of its source.
enumeration_result enumerate_exact(const std::function<std::int64_t(bit_source&)>& run, int depth);

// Enumeration containment wrapped as a report: pass iff the bracket for
// `outcome` contains `expected`. statistic is the distance from expected
// to the bracket (0 when inside).
struct enum_check_spec {
  std::string name;
  std::function<std::int64_t(bit_source&)> run;
  std::int64_t outcome = 1;
  double expected = 0.5;
  int depth = 24;
};

conformance_report enum_check(const enum_check_spec& spec);

// A named, registered check. `run` takes the per-check seed, the shard
// count, and an optional trial override (ignored by enumeration checks).
struct suite_entry {
  std::string name;
  std::uint64_t recommended_trials = 0;
  std::function<conformance_report(std::uint64_t seed, unsigned jobs,
                                   std::optional<std::uint64_t> trials)>
      run;
};

// Every distributional check the acceptance gate runs, with recommended
// trial counts.
const std::vector<suite_entry>& default_suite();

// Deliberately broken targets. Each entry must FAIL its check; this is
// how the harness's statistical power is demonstrated.
const std::vector<suite_entry>& negative_control_suite();

struct suite_options {
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::optional<std::uint64_t> trials;
  std::string only;  // substring filter over names; empty selects all
  bool negative_controls = false;
};

// Runs the selected suite. Each entry's seed derives from the master
// seed and the entry's name, so adding or reordering checks does not
// perturb the others.
std::vector<conformance_report> run_suite(const suite_options& options);

}  // namespace exactrv

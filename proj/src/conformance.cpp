#include "exactrv/conformance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <span>
#include <stdexcept>
#include <thread>
#include <utility>

#include "json.hpp"

#include "exactrv/reference_constants.hpp"
#include "exactrv/samplers.hpp"

namespace exactrv {

namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct shard_plan {
  std::uint64_t count;
  std::uint64_t seed;
};

std::vector<shard_plan> plan_shards(std::uint64_t trials, std::uint64_t seed, unsigned jobs) {
  if (jobs == 0) jobs = 1;
  const std::uint64_t shards = std::max<std::uint64_t>(1, std::min<std::uint64_t>(jobs, trials ? trials : 1));
  std::vector<shard_plan> plan(shards);
  for (std::uint64_t i = 0; i < shards; ++i) {
    plan[i].count = trials / shards + (i < trials % shards ? 1 : 0);
    plan[i].seed = mix_seed(seed, i);
  }
  return plan;
}

// Runs fn(source, count) once per shard, each shard on its own seeded
// source, and returns the per-shard results in shard order. Results are
// deterministic given (trials, seed, jobs) regardless of scheduling.
template <typename Part, typename Fn>
std::vector<Part> run_sharded(std::uint64_t trials, std::uint64_t seed, unsigned jobs, Fn&& fn) {
  const auto plan = plan_shards(trials, seed, jobs);
  std::vector<Part> parts(plan.size());
  if (plan.size() == 1) {
    seeded_source src(plan[0].seed);
    parts[0] = fn(src, plan[0].count);
    return parts;
  }
  std::vector<std::exception_ptr> errors(plan.size());
  std::vector<std::thread> threads;
  threads.reserve(plan.size());
  for (std::size_t i = 0; i < plan.size(); ++i) {
    threads.emplace_back([&, i] {
      try {
        seeded_source src(plan[i].seed);
        parts[i] = fn(src, plan[i].count);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return parts;
}

double binomial_z(double freq, double expected, std::uint64_t trials) {
  const double sigma = std::sqrt(expected * (1.0 - expected) / static_cast<double>(trials));
  // Degenerate targets (expected 0 or 1) admit no deviation at all.
  if (sigma == 0.0) {
    return freq == expected ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return std::abs(freq - expected) / sigma;
}

creal dyadic_to_creal(const dyadic& d) {
  return scal_pow2(creal::of_int(d.num), d.exp);
}

dyadic dyadic_add(const dyadic& a, const dyadic& b) {
  const std::int64_t e = std::max(a.exp, b.exp);
  return {(a.num << (e - a.exp)) + (b.num << (e - b.exp)), e};
}

dyadic dyadic_neg(const dyadic& a) { return {-a.num, a.exp}; }

// Exact dyadic form of a finite double (binary64 values are dyadic).
dyadic double_to_dyadic(double v) {
  int e = 0;
  const double m = std::frexp(v, &e);
  const auto num = static_cast<std::int64_t>(std::ldexp(m, 53));
  return {bigint(num), 53 - e};
}

}  // namespace

std::string to_json_line(const conformance_report& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  nlohmann::ordered_json obs;
  for (const auto& [k, v] : r.observed) obs[k] = v;
  j["observed"] = std::move(obs);
  j["statistic"] = r.statistic;
  j["threshold"] = r.threshold;
  j["pass"] = r.pass;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["undecided"] = r.undecided;
  return j.dump();
}

std::string to_text_line(const conformance_report& r) {
  std::string obs;
  for (const auto& [k, v] : r.observed) {
    if (!obs.empty()) obs += ' ';
    obs += k + '=' + std::to_string(v);
  }
  return std::string(r.pass ? "PASS" : "FAIL") + "  " + r.name +
         "  statistic=" + fmt_double(r.statistic) + " threshold=" + fmt_double(r.threshold) +
         " trials=" + std::to_string(r.trials) + " undecided=" + std::to_string(r.undecided) +
         " seed=" + std::to_string(r.seed) + "  [" + obs + "]";
}

std::string csv_header() {
  return "name,pass,statistic,threshold,trials,undecided,seed,observed";
}

std::string to_csv_line(const conformance_report& r) {
  std::string obs;
  for (const auto& [k, v] : r.observed) {
    if (!obs.empty()) obs += '|';
    obs += k + '=' + std::to_string(v);
  }
  return r.name + ',' + (r.pass ? "true" : "false") + ',' + fmt_double(r.statistic) + ',' +
         fmt_double(r.threshold) + ',' + std::to_string(r.trials) + ',' +
         std::to_string(r.undecided) + ',' + std::to_string(r.seed) + ',' + obs;
}

conformance_report cdf_check(const cdf_check_spec& spec, std::uint64_t seed, unsigned jobs) {
  if (spec.trials < 100) throw std::invalid_argument("cdf_check: trials must be >= 100");
  struct counts {
    std::uint64_t below = 0, above = 0, undecided = 0;
  };
  const auto parts = run_sharded<counts>(
      spec.trials, seed, jobs, [&spec](bit_source& src, std::uint64_t n) {
        counts c;
        const creal point = dyadic_to_creal(spec.point);
        for (std::uint64_t t = 0; t < n; ++t) {
          const creal sample = spec.sampler(src);
          try {
            (cmp(sample, point, 0, spec.max_precision) < 0 ? c.below : c.above)++;
          } catch (const undecided_error&) {
            ++c.undecided;
          }
        }
        return c;
      });
  counts total;
  for (const auto& p : parts) {
    total.below += p.below;
    total.above += p.above;
    total.undecided += p.undecided;
  }
  const double freq = static_cast<double>(total.below) / static_cast<double>(spec.trials);
  conformance_report r;
  r.name = spec.name;
  r.observed = {{"above", total.above}, {"below", total.below}};
  r.statistic = binomial_z(freq, spec.expected_cdf, spec.trials);
  r.threshold = spec.z_threshold;
  r.seed = seed;
  r.trials = spec.trials;
  r.undecided = total.undecided;
  const double budget = spec.undecided_budget * static_cast<double>(spec.trials);
  r.pass = r.statistic <= r.threshold && static_cast<double>(total.undecided) <= budget;
  return r;
}

conformance_report chi_square_check(const chi_square_spec& spec, std::uint64_t seed,
                                    unsigned jobs) {
  if (spec.pmf.size() < 2) throw std::invalid_argument("chi_square_check: need >= 2 bins");
  const std::size_t nbins = spec.pmf.size();
  using counts = std::vector<std::uint64_t>;
  const auto parts = run_sharded<counts>(
      spec.trials, seed, jobs, [&spec, nbins](bit_source& src, std::uint64_t n) {
        counts c(nbins, 0);
        for (std::uint64_t t = 0; t < n; ++t) {
          const std::uint64_t v = spec.sampler(src);
          ++c[std::min<std::uint64_t>(v, nbins - 1)];
        }
        return c;
      });
  counts observed(nbins, 0);
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < nbins; ++i) observed[i] += p[i];
  }

  std::vector<double> expected(nbins);
  for (std::size_t i = 0; i < nbins; ++i) {
    expected[i] = spec.pmf[i] * static_cast<double>(spec.trials);
  }
  counts obs_bins = observed;
  // merge the tail leftward until its expected count clears 5
  while (obs_bins.size() > 1 && expected.back() < 5.0) {
    expected[expected.size() - 2] += expected.back();
    expected.pop_back();
    obs_bins[obs_bins.size() - 2] += obs_bins.back();
    obs_bins.pop_back();
  }
  if (obs_bins.size() < 2) throw degenerate_binning();
  for (const double e : expected) {
    if (e < 5.0) throw degenerate_binning();
  }
  const std::size_t dof = obs_bins.size() - 1;
  if (dof > 16) throw std::invalid_argument("chi_square_check: more than 16 dof unsupported");

  double stat = 0.0;
  for (std::size_t i = 0; i < obs_bins.size(); ++i) {
    const double d = static_cast<double>(obs_bins[i]) - expected[i];
    stat += d * d / expected[i];
  }

  conformance_report r;
  r.name = spec.name;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const std::string key = i + 1 == observed.size() ? "tail" : "bin" + std::to_string(i);
    r.observed[key] = observed[i];
  }
  r.statistic = stat;
  r.threshold = ref::chi2_crit_001[dof];
  r.pass = stat <= r.threshold;
  r.seed = seed;
  r.trials = spec.trials;
  return r;
}

conformance_report ks_check(const ks_spec& spec, std::uint64_t seed, unsigned jobs) {
  if (spec.trials < 100) throw std::invalid_argument("ks_check: trials must be >= 100");
  using samples = std::vector<double>;
  auto parts = run_sharded<samples>(spec.trials, seed, jobs,
                                    [&spec](bit_source& src, std::uint64_t n) {
                                      samples v;
                                      v.reserve(n);
                                      for (std::uint64_t t = 0; t < n; ++t) {
                                        v.push_back(spec.sampler(src));
                                      }
                                      return v;
                                    });
  samples all;
  all.reserve(spec.trials);
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  std::sort(all.begin(), all.end());

  const auto n = static_cast<double>(all.size());
  double d_stat = 0.0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const double f = spec.cdf(all[i]);
    d_stat = std::max(d_stat, f - static_cast<double>(i) / n);
    d_stat = std::max(d_stat, static_cast<double>(i + 1) / n - f);
  }
  const double slack = std::ldexp(1.0, -spec.discretization_bits);

  conformance_report r;
  r.name = spec.name;
  r.observed = {{"samples", all.size()}};
  r.statistic = d_stat;
  r.threshold = spec.threshold_coeff / std::sqrt(n) + slack;
  r.pass = d_stat <= r.threshold;
  r.seed = seed;
  r.trials = spec.trials;
  return r;
}

conformance_report rate_check(const rate_check_spec& spec, std::uint64_t seed, unsigned jobs) {
  if (spec.trials < 100) throw std::invalid_argument("rate_check: trials must be >= 100");
  const auto parts = run_sharded<std::uint64_t>(
      spec.trials, seed, jobs, [&spec](bit_source& src, std::uint64_t n) {
        std::uint64_t hits = 0;
        for (std::uint64_t t = 0; t < n; ++t) {
          if (spec.event(src)) ++hits;
        }
        return hits;
      });
  std::uint64_t hits = 0;
  for (const auto h : parts) hits += h;
  const double freq = static_cast<double>(hits) / static_cast<double>(spec.trials);

  conformance_report r;
  r.name = spec.name;
  r.observed = {{"hit", hits}, {"miss", spec.trials - hits}};
  r.statistic = binomial_z(freq, spec.expected, spec.trials);
  r.threshold = spec.z_threshold;
  r.pass = r.statistic <= r.threshold;
  r.seed = seed;
  r.trials = spec.trials;
  return r;
}

conformance_report laplace_accuracy_check(const laplace_accuracy_spec& spec, std::uint64_t seed,
                                          unsigned jobs) {
  if (spec.trials < 100) {
    throw std::invalid_argument("laplace_accuracy_check: trials must be >= 100");
  }
  if (!(spec.beta > 0.0 && spec.beta < 1.0)) {
    throw std::invalid_argument("laplace_accuracy_check: beta must be in (0,1)");
  }

  // Radius in double, then widened upward by a few ulps before the exact
  // dyadic conversion; the cut points land strictly outside the true
  // radius, so rounding can only under-count exceedances.
  double radius = std::log(1.0 / spec.beta) * spec.radius_scale /
                  std::ldexp(1.0, static_cast<int>(spec.eps_exp));
  for (int i = 0; i < 8; ++i) {
    radius = std::nextafter(radius, std::numeric_limits<double>::infinity());
  }
  const dyadic radius_dy = double_to_dyadic(radius);

  struct counts {
    std::uint64_t exceed = 0, within = 0, undecided = 0;
  };
  const auto parts = run_sharded<counts>(
      spec.trials, seed, jobs, [&spec, &radius_dy](bit_source& src, std::uint64_t n) {
        counts c;
        const creal mu = spec.mu_factory();
        // mu in [(A-1)/2^s, (A+1)/2^s]; both cut points take the outward
        // end of that interval before the radius offset.
        constexpr std::int64_t s = 48;
        const bigint a = mu.approx(s);
        const dyadic mu_hi{a + 1, s};
        const dyadic mu_lo{a - 1, s};
        const creal cut_hi = dyadic_to_creal(dyadic_add(mu_hi, radius_dy));
        const creal cut_lo = dyadic_to_creal(dyadic_add(mu_lo, dyadic_neg(radius_dy)));
        for (std::uint64_t t = 0; t < n; ++t) {
          const creal sample = laplace(src, spec.eps_exp, mu);
          try {
            if (cmp(sample, cut_lo, 0, spec.max_precision) < 0) {
              ++c.exceed;
            } else if (cmp(sample, cut_hi, 0, spec.max_precision) > 0) {
              ++c.exceed;
            } else {
              ++c.within;
            }
          } catch (const undecided_error&) {
            ++c.undecided;
          }
        }
        return c;
      });
  counts total;
  for (const auto& p : parts) {
    total.exceed += p.exceed;
    total.within += p.within;
    total.undecided += p.undecided;
  }
  const double freq = static_cast<double>(total.exceed) / static_cast<double>(spec.trials);

  conformance_report r;
  r.name = spec.name;
  r.observed = {{"exceed", total.exceed}, {"within", total.within}};
  r.statistic = freq;
  r.threshold = spec.beta + 5.0 * std::sqrt(spec.beta * (1.0 - spec.beta) /
                                            static_cast<double>(spec.trials));
  r.pass = freq <= r.threshold;
  r.seed = seed;
  r.trials = spec.trials;
  r.undecided = total.undecided;
  return r;
}

double enumeration_result::lower_of(std::int64_t outcome) const {
  const auto it = lower.find(outcome);
  const std::uint64_t num = it == lower.end() ? 0 : it->second;
  return std::ldexp(static_cast<double>(num), -depth);
}

double enumeration_result::upper_of(std::int64_t outcome) const {
  const auto it = lower.find(outcome);
  const std::uint64_t num = it == lower.end() ? 0 : it->second;
  return std::ldexp(static_cast<double>(num + residual), -depth);
}

bool enumeration_result::brackets(std::int64_t outcome, double p) const {
  return lower_of(outcome) <= p && p <= upper_of(outcome);
}

std::uint64_t enumeration_result::mass_total() const {
  std::uint64_t total = residual;
  for (const auto& [outcome, num] : lower) total += num;
  return total;
}

namespace {

struct enum_walker {
  const std::function<std::int64_t(bit_source&)>& run;
  int depth;
  enumeration_result& res;
  std::vector<std::uint8_t> prefix;

  void visit() {
    tape_source tape(std::span<const std::uint8_t>(prefix.data(), prefix.size()));
    bool alive = false;
    std::int64_t outcome = 0;
    try {
      outcome = run(tape);
    } catch (const tape_exhausted&) {
      alive = true;
    }
    if (!alive) {
      // A completed run consumed the whole prefix: the parent prefix
      // exhausted, so this extension was requested, and the replay is
      // deterministic.
      if (tape.consumed() != prefix.size()) {
        throw std::logic_error("enumerate_exact: sampler is not a pure function of its tape");
      }
      res.lower[outcome] += std::uint64_t{1} << (depth - static_cast<int>(prefix.size()));
      return;
    }
    if (static_cast<int>(prefix.size()) == depth) {
      res.residual += 1;
      return;
    }
    for (const std::uint8_t b : {0, 1}) {
      prefix.push_back(b);
      visit();
      prefix.pop_back();
    }
  }
};

}  // namespace

enumeration_result enumerate_exact(const std::function<std::int64_t(bit_source&)>& run,
                                   int depth) {
  if (depth < 0 || depth > 28) {
    throw std::invalid_argument("enumerate_exact: depth must be in [0, 28]");
  }
  enumeration_result res;
  res.depth = depth;
  enum_walker walker{run, depth, res, {}};
  walker.prefix.reserve(static_cast<std::size_t>(depth));
  walker.visit();
  return res;
}

conformance_report enum_check(const enum_check_spec& spec) {
  const enumeration_result res = enumerate_exact(spec.run, spec.depth);
  const double lo = res.lower_of(spec.outcome);
  const double hi = res.upper_of(spec.outcome);

  conformance_report r;
  r.name = spec.name;
  r.observed = {{"depth", static_cast<std::uint64_t>(spec.depth)},
                {"lower_num", res.lower.count(spec.outcome) ? res.lower.at(spec.outcome) : 0},
                {"residual_num", res.residual}};
  r.statistic = std::max({0.0, lo - spec.expected, spec.expected - hi});
  r.threshold = 0.0;
  r.pass = res.brackets(spec.outcome, spec.expected);
  r.seed = 0;
  r.trials = std::uint64_t{1} << spec.depth;
  return r;
}

namespace {

double uniform_8bit(bit_source& src) {
  lazy_uniform u(src);
  return static_cast<double>(get_bits(u, 8).convert_to<std::uint64_t>()) / 256.0;
}

double max2_8bit(bit_source& src) {
  lazy_uniform m = max2(src);
  return static_cast<double>(get_bits(m, 8).convert_to<std::uint64_t>()) / 256.0;
}

std::vector<suite_entry> build_default_suite() {
  std::vector<suite_entry> v;

  const auto add_cdf = [&v](std::string name, std::function<creal(bit_source&)> sampler,
                            dyadic point, double expected, std::uint64_t rec) {
    v.push_back({name, rec,
                 [name, sampler = std::move(sampler), point = std::move(point), expected, rec](
                     std::uint64_t seed, unsigned jobs, std::optional<std::uint64_t> trials) {
                   cdf_check_spec s;
                   s.name = name;
                   s.sampler = sampler;
                   s.point = point;
                   s.expected_cdf = expected;
                   s.trials = trials.value_or(rec);
                   return cdf_check(s, seed, jobs);
                 }});
  };

  add_cdf(
      "uniform-cdf@1/2",
      [](bit_source& src) { return creal::of_uniform(lazy_uniform(src)); }, dyadic{bigint(1), 1},
      0.5, 10000);

  v.push_back({"max2-ks", 10000,
               [](std::uint64_t seed, unsigned jobs, std::optional<std::uint64_t> trials) {
                 ks_spec s;
                 s.name = "max2-ks";
                 s.sampler = max2_8bit;
                 s.cdf = [](double x) { return x * x; };
                 s.trials = trials.value_or(10000);
                 return ks_check(s, seed, jobs);
               }});

  v.push_back({"half-exp-rate", 1000000,
               [](std::uint64_t seed, unsigned jobs, std::optional<std::uint64_t> trials) {
                 rate_check_spec s;
                 s.name = "half-exp-rate";
                 s.event = [](bit_source& src) { return bernoulli_half_exp(src); };
                 s.expected = ref::exp_neg_half;
                 s.trials = trials.value_or(1000000);
                 return rate_check(s, seed, jobs);
               }});

  v.push_back({"half-exp-enum", 0,
               [](std::uint64_t, unsigned, std::optional<std::uint64_t>) {
                 enum_check_spec s;
                 s.name = "half-exp-enum";
                 s.run = [](bit_source& src) {
                   return static_cast<std::int64_t>(bernoulli_half_exp(src));
                 };
                 s.outcome = 1;
                 s.expected = ref::exp_neg_half;
                 s.depth = 24;
                 return enum_check(s);
               }});

  v.push_back({"gaussian-int-chisq", 100000,
               [](std::uint64_t seed, unsigned jobs, std::optional<std::uint64_t> trials) {
                 chi_square_spec s;
                 s.name = "gaussian-int-chisq";
                 s.sampler = [](bit_source& src) { return gaussian_int(src); };
                 s.pmf = {ref::gauss_int_pmf_0, ref::gauss_int_pmf_1, ref::gauss_int_pmf_2,
                          ref::gauss_int_tail_ge_3};
                 s.trials = trials.value_or(100000);
                 return chi_square_check(s, seed, jobs);
               }});

  const auto gaussian_sampler = [](bit_source& src) { return gaussian(src); };
  add_cdf("gaussian-cdf@-2", gaussian_sampler, dyadic{bigint(-2), 0}, ref::std_normal_cdf_m2,
          10000);
  add_cdf("gaussian-cdf@-1", gaussian_sampler, dyadic{bigint(-1), 0}, ref::std_normal_cdf_m1,
          10000);
  add_cdf("gaussian-cdf@-1/2", gaussian_sampler, dyadic{bigint(-1), 1},
          ref::std_normal_cdf_mhalf, 10000);
  add_cdf("gaussian-cdf@0", gaussian_sampler, dyadic{bigint(0), 0}, ref::std_normal_cdf_zero,
          10000);
  add_cdf("gaussian-cdf@1/2", gaussian_sampler, dyadic{bigint(1), 1}, ref::std_normal_cdf_phalf,
          10000);
  add_cdf("gaussian-cdf@1", gaussian_sampler, dyadic{bigint(1), 0}, ref::std_normal_cdf_p1,
          10000);
  add_cdf("gaussian-cdf@2", gaussian_sampler, dyadic{bigint(2), 0}, ref::std_normal_cdf_p2,
          10000);

  v.push_back({"exp-k0-rate", 100000,
               [](std::uint64_t seed, unsigned jobs, std::optional<std::uint64_t> trials) {
                 rate_check_spec s;
                 s.name = "exp-k0-rate";
                 s.event = [](bit_source& src) { return neg_exponential(src).k == 0; };
                 s.expected = ref::one_minus_exp_neg_1;
                 s.trials = trials.value_or(100000);
                 return rate_check(s, seed, jobs);
               }});

  v.push_back({"exp-k-chisq", 100000,
               [](std::uint64_t seed, unsigned jobs, std::optional<std::uint64_t> trials) {
                 chi_square_spec s;
                 s.name = "exp-k-chisq";
                 s.sampler = [](bit_source& src) { return neg_exponential(src).k; };
                 const double head = ref::one_minus_exp_neg_1;
                 std::vector<double> pmf;
                 double mass = 1.0;
                 for (int j = 0; j < 5; ++j) {
                   const double pj = head * std::exp(-j);
                   pmf.push_back(pj);
                   mass -= pj;
                 }
                 pmf.push_back(mass);
                 s.pmf = std::move(pmf);
                 s.trials = trials.value_or(100000);
                 return chi_square_check(s, seed, jobs);
               }});

  const auto laplace0 = [](bit_source& src) {
    return laplace(src, 0, creal::of_int(0));
  };
  const auto laplace1 = [](bit_source& src) {
    return laplace(src, 1, creal::of_int(0));
  };
  add_cdf("laplace-cdf-e0@-1", laplace0, dyadic{bigint(-1), 0}, ref::laplace_cdf_e0_m1, 10000);
  add_cdf("laplace-cdf-e0@0", laplace0, dyadic{bigint(0), 0}, ref::laplace_cdf_e0_zero, 10000);
  add_cdf("laplace-cdf-e0@1", laplace0, dyadic{bigint(1), 0}, ref::laplace_cdf_e0_p1, 10000);
  add_cdf("laplace-cdf-e1@-1", laplace1, dyadic{bigint(-1), 0}, ref::laplace_cdf_e1_m1, 10000);
  add_cdf("laplace-cdf-e1@0", laplace1, dyadic{bigint(0), 0}, ref::laplace_cdf_e1_zero, 10000);
  add_cdf("laplace-cdf-e1@1", laplace1, dyadic{bigint(1), 0}, ref::laplace_cdf_e1_p1, 10000);

  const auto add_accuracy = [&v](std::string name, std::int64_t eps_exp, double beta,
                                 double radius_scale) {
    v.push_back({name, 100000,
                 [name, eps_exp, beta, radius_scale](std::uint64_t seed, unsigned jobs,
                                                     std::optional<std::uint64_t> trials) {
                   laplace_accuracy_spec s;
                   s.name = name;
                   s.eps_exp = eps_exp;
                   s.mu_factory = [] { return creal::of_int(0); };
                   s.beta = beta;
                   s.trials = trials.value_or(100000);
                   s.radius_scale = radius_scale;
                   return laplace_accuracy_check(s, seed, jobs);
                 }});
  };
  add_accuracy("laplace-accuracy-b0.1-e0", 0, 0.1, 1.0);
  add_accuracy("laplace-accuracy-b0.01-e1", 1, 0.01, 1.0);

  return v;
}

std::vector<suite_entry> build_negative_controls() {
  std::vector<suite_entry> v;

  v.push_back({"neg-half-exp-rate-wrong-target", 100000,
               [](std::uint64_t seed, unsigned jobs, std::optional<std::uint64_t> trials) {
                 rate_check_spec s;
                 s.name = "neg-half-exp-rate-wrong-target";
                 s.event = [](bit_source& src) { return bernoulli_half_exp(src); };
                 s.expected = ref::exp_neg_1;  // wrong on purpose
                 s.trials = trials.value_or(100000);
                 return rate_check(s, seed, jobs);
               }});

  v.push_back({"neg-gaussian-int-chisq-swapped", 100000,
               [](std::uint64_t seed, unsigned jobs, std::optional<std::uint64_t> trials) {
                 chi_square_spec s;
                 s.name = "neg-gaussian-int-chisq-swapped";
                 s.sampler = [](bit_source& src) { return gaussian_int(src); };
                 s.pmf = {ref::gauss_int_pmf_1, ref::gauss_int_pmf_0, ref::gauss_int_pmf_2,
                          ref::gauss_int_tail_ge_3};  // head masses swapped on purpose
                 s.trials = trials.value_or(100000);
                 return chi_square_check(s, seed, jobs);
               }});

  v.push_back({"neg-ks-uniform-vs-square", 10000,
               [](std::uint64_t seed, unsigned jobs, std::optional<std::uint64_t> trials) {
                 ks_spec s;
                 s.name = "neg-ks-uniform-vs-square";
                 s.sampler = uniform_8bit;  // uniform data against the max2 CDF
                 s.cdf = [](double x) { return x * x; };
                 s.trials = trials.value_or(10000);
                 return ks_check(s, seed, jobs);
               }});

  v.push_back({"neg-laplace-accuracy-halved-radius", 100000,
               [](std::uint64_t seed, unsigned jobs, std::optional<std::uint64_t> trials) {
                 laplace_accuracy_spec s;
                 s.name = "neg-laplace-accuracy-halved-radius";
                 s.eps_exp = 0;
                 s.mu_factory = [] { return creal::of_int(0); };
                 s.beta = 0.1;
                 s.trials = trials.value_or(100000);
                 s.radius_scale = 0.5;  // exceedance sqrt(beta) >> beta
                 return laplace_accuracy_check(s, seed, jobs);
               }});

  v.push_back({"neg-gaussian-cdf-shifted-point", 10000,
               [](std::uint64_t seed, unsigned jobs, std::optional<std::uint64_t> trials) {
                 cdf_check_spec s;
                 s.name = "neg-gaussian-cdf-shifted-point";
                 s.sampler = [](bit_source& src) { return gaussian(src); };
                 s.point = dyadic{bigint(0), 0};
                 s.expected_cdf = ref::std_normal_cdf_p1;  // expectation for the wrong point
                 s.trials = trials.value_or(10000);
                 return cdf_check(s, seed, jobs);
               }});

  v.push_back({"neg-half-exp-enum-wrong-target", 0,
               [](std::uint64_t, unsigned, std::optional<std::uint64_t>) {
                 enum_check_spec s;
                 s.name = "neg-half-exp-enum-wrong-target";
                 s.run = [](bit_source& src) {
                   return static_cast<std::int64_t>(bernoulli_half_exp(src));
                 };
                 s.outcome = 1;
                 s.expected = 0.9;  // far outside the true bracket
                 s.depth = 16;
                 return enum_check(s);
               }});

  return v;
}

}  // namespace

const std::vector<suite_entry>& default_suite() {
  static const std::vector<suite_entry> suite = build_default_suite();
  return suite;
}

const std::vector<suite_entry>& negative_control_suite() {
  static const std::vector<suite_entry> suite = build_negative_controls();
  return suite;
}

std::vector<conformance_report> run_suite(const suite_options& options) {
  const auto& entries = options.negative_controls ? negative_control_suite() : default_suite();
  std::vector<conformance_report> reports;
  for (const auto& entry : entries) {
    if (!options.only.empty() && entry.name.find(options.only) == std::string::npos) continue;
    const std::uint64_t seed = mix_seed(options.seed, fnv1a(entry.name));
    reports.push_back(entry.run(seed, options.jobs, options.trials));
  }
  return reports;
}

}  // namespace exactrv

#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "exactrv/conformance.hpp"
#include "exactrv/samplers.hpp"

namespace {

using namespace exactrv;

constexpr std::uint64_t k_default_seed = 1;
constexpr int k_frac_prefix_bits = 16;

struct sample_options {
  std::string dist = "gaussian";
  std::uint64_t count = 1;
  int digits = 12;
  std::uint64_t seed = k_default_seed;
  std::int64_t eps_exp = 0;
  std::string mu = "0";
  std::string record_path;
  std::string replay_path;
  std::string format = "text";
};

struct sample_row {
  std::string value;
  std::optional<std::uint64_t> k;
  std::optional<std::string> frac_prefix;
};

sample_row make_row(bit_source& src, const sample_options& o) {
  if (o.dist == "uniform") {
    return {creal::of_uniform(lazy_uniform(src)).to_decimal(o.digits), {}, {}};
  }
  if (o.dist == "max2") {
    return {creal::of_uniform(max2(src)).to_decimal(o.digits), {}, {}};
  }
  if (o.dist == "gaussian") {
    return {gaussian(src).to_decimal(o.digits), {}, {}};
  }
  if (o.dist == "exponential") {
    magnitude_sample s = neg_exponential(src);
    std::string prefix;
    prefix.reserve(k_frac_prefix_bits);
    for (int i = 0; i < k_frac_prefix_bits; ++i) prefix.push_back(s.frac.bit(i) ? '1' : '0');
    const std::uint64_t k = s.k;
    return {creal::of_bzu(0, k, std::move(s.frac)).to_decimal(o.digits), k, std::move(prefix)};
  }
  if (o.dist == "laplace") {
    return {laplace(src, o.eps_exp, creal::of_decimal(o.mu)).to_decimal(o.digits), {}, {}};
  }
  if (o.dist == "gaussian-int") {
    return {std::to_string(gaussian_int(src)), {}, {}};
  }
  // half-exp; the flag validator admits nothing else
  return {bernoulli_half_exp(src) ? "true" : "false", {}, {}};
}

void print_row(const sample_row& row, std::uint64_t index, const std::string& format) {
  if (format == "text") {
    std::cout << row.value;
    if (row.k) std::cout << " k=" << *row.k;
    if (row.frac_prefix) std::cout << " frac=" << *row.frac_prefix;
    std::cout << '\n';
    return;
  }
  if (format == "csv") {
    std::cout << index << ',' << row.value << ',' << (row.k ? std::to_string(*row.k) : "")
              << ',' << (row.frac_prefix ? *row.frac_prefix : "") << '\n';
    return;
  }
  nlohmann::ordered_json j;
  j["index"] = index;
  j["value"] = row.value;
  if (row.k) j["k"] = *row.k;
  if (row.frac_prefix) j["frac_prefix"] = *row.frac_prefix;
  std::cout << j.dump() << '\n';
}

int run_sample(const sample_options& o) {
  // mu is validated before any entropy is drawn
  if (o.dist == "laplace") creal::of_decimal(o.mu);

  std::unique_ptr<bit_source> base;
  if (!o.replay_path.empty()) {
    base = std::make_unique<tape_source>(load_tape(o.replay_path));
  } else {
    base = std::make_unique<seeded_source>(o.seed);
  }
  std::optional<recording_source> recorder;
  bit_source* src = base.get();
  if (!o.record_path.empty()) {
    recorder.emplace(*base);
    src = &*recorder;
  }

  if (o.format == "csv") std::cout << "index,value,k,frac_prefix\n";
  for (std::uint64_t i = 0; i < o.count; ++i) print_row(make_row(*src, o), i, o.format);

  if (recorder) save_tape(o.record_path, recorder->log());
  return 0;
}

struct check_options {
  std::string only;
  std::optional<std::uint64_t> trials;
  std::uint64_t seed = k_default_seed;
  unsigned jobs = 1;
  bool negative_controls = false;
  std::string format = "text";
};

int run_check(const check_options& o) {
  suite_options so;
  so.seed = o.seed;
  so.jobs = o.jobs;
  so.trials = o.trials;
  so.only = o.only;
  so.negative_controls = o.negative_controls;

  if (o.trials) {
    const auto& entries = o.negative_controls ? negative_control_suite() : default_suite();
    for (const auto& entry : entries) {
      if (!o.only.empty() && entry.name.find(o.only) == std::string::npos) continue;
      if (entry.recommended_trials > 0 && *o.trials < entry.recommended_trials) {
        std::cerr << "warning: " << entry.name << ": trials " << *o.trials
                  << " below recommended " << entry.recommended_trials << '\n';
      }
    }
  }

  const auto reports = run_suite(so);
  if (reports.empty()) {
    std::cerr << "error: no checks match '" << o.only << "'\n";
    return 2;
  }

  if (o.format == "csv") std::cout << csv_header() << '\n';
  bool all_ok = true;
  for (const auto& r : reports) {
    if (o.format == "text") {
      std::cout << to_text_line(r) << '\n';
    } else if (o.format == "csv") {
      std::cout << to_csv_line(r) << '\n';
    } else {
      std::cout << to_json_line(r) << '\n';
    }
    const bool ok = o.negative_controls ? !r.pass : r.pass;
    all_ok = all_ok && ok;
  }
  if (o.negative_controls) {
    std::size_t failed = 0;
    for (const auto& r : reports) failed += r.pass ? 0 : 1;
    std::cerr << "negative controls: " << failed << '/' << reports.size()
              << " failed as expected\n";
  }
  return all_ok ? 0 : 1;
}

struct enumerate_options {
  std::string dist = "half-exp";
  int depth = 16;
  std::uint64_t m = 4;
  std::string format = "text";
};

int run_enumerate(const enumerate_options& o) {
  std::function<std::int64_t(bit_source&)> run;
  if (o.dist == "half-exp") {
    run = [](bit_source& src) { return static_cast<std::int64_t>(bernoulli_half_exp(src)); };
  } else if (o.dist == "gaussian-int") {
    run = [](bit_source& src) { return static_cast<std::int64_t>(gaussian_int(src)); };
  } else if (o.dist == "choose3") {
    const std::uint64_t m = o.m;
    run = [m](bit_source& src) { return static_cast<std::int64_t>(choose3(src, m)); };
  } else {
    std::cerr << "error: enumeration supports half-exp, gaussian-int, choose3\n";
    return 2;
  }

  const enumeration_result res = enumerate_exact(run, o.depth);
  const std::string denom = "2^" + std::to_string(res.depth);
  if (o.format == "csv") {
    std::cout << "outcome,lower_num,denom_log2\n";
    for (const auto& [outcome, num] : res.lower) {
      std::cout << outcome << ',' << num << ',' << res.depth << '\n';
    }
    std::cout << "residual," << res.residual << ',' << res.depth << '\n';
  } else if (o.format == "json-lines") {
    for (const auto& [outcome, num] : res.lower) {
      nlohmann::ordered_json j;
      j["outcome"] = outcome;
      j["lower_num"] = num;
      j["depth"] = res.depth;
      std::cout << j.dump() << '\n';
    }
    nlohmann::ordered_json j;
    j["residual_num"] = res.residual;
    j["depth"] = res.depth;
    std::cout << j.dump() << '\n';
  } else {
    for (const auto& [outcome, num] : res.lower) {
      std::cout << "outcome " << outcome << ": " << num << '/' << denom << " ~ "
                << res.lower_of(outcome) << '\n';
    }
    std::cout << "residual: " << res.residual << '/' << denom << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact sampling for uniform, Gaussian, exponential, and Laplace variates"};
  app.require_subcommand(1);

  const std::vector<std::string> dists = {"uniform",  "max2",         "gaussian", "exponential",
                                          "laplace",  "gaussian-int", "half-exp"};
  const std::vector<std::string> formats = {"text", "csv", "json-lines"};

  sample_options so;
  auto* sample_cmd = app.add_subcommand("sample", "Draw variates and print them");
  sample_cmd->add_option("--dist", so.dist, "Distribution")
      ->check(CLI::IsMember(dists))
      ->required();
  sample_cmd->add_option("-n,--count", so.count, "Number of draws")->check(CLI::Range(1, 100000000));
  sample_cmd->add_option("--digits", so.digits, "Decimal digits per value")
      ->check(CLI::Range(0, 4096));
  sample_cmd->add_option("--seed", so.seed, "Source seed (default 1)");
  sample_cmd->add_option("--eps-exp", so.eps_exp, "Laplace rate exponent: rate = 2^eps-exp")
      ->check(CLI::Range(-62, 62));
  sample_cmd->add_option("--mu", so.mu, "Laplace location, an exact decimal like -2.5");
  auto* rec = sample_cmd->add_option("--record", so.record_path, "Write the consumed bits to this tape file");
  sample_cmd->add_option("--replay", so.replay_path, "Read bits from this tape file instead of a seed")
      ->excludes(rec);
  sample_cmd->add_option("--format", so.format, "Output format")->check(CLI::IsMember(formats));

  check_options co;
  auto* check_cmd = app.add_subcommand("check", "Run the conformance suite");
  check_cmd->add_option("--only", co.only, "Run only checks whose name contains this substring");
  std::uint64_t trials_flag = 0;
  auto* trials_opt = check_cmd->add_option("--trials", trials_flag, "Trial count override");
  check_cmd->add_option("--seed", co.seed, "Master seed (default 1)");
  check_cmd->add_option("--jobs", co.jobs, "Worker shards per check")->check(CLI::Range(1, 256));
  check_cmd->add_flag("--negative-controls", co.negative_controls,
                      "Run the broken-target suite; exit 0 iff every control fails");
  check_cmd->add_option("--format", co.format, "Output format")->check(CLI::IsMember(formats));

  enumerate_options eo;
  auto* enum_cmd = app.add_subcommand("enumerate", "Exact tape enumeration of a finite sampler");
  enum_cmd->add_option("--dist", eo.dist, "half-exp, gaussian-int, or choose3")->required();
  enum_cmd->add_option("--depth", eo.depth, "Tape depth in bits (max 28)")->required();
  enum_cmd->add_option("--m", eo.m, "choose3 outcome count")->check(CLI::Range(2, 1000000));
  enum_cmd->add_option("--format", eo.format, "Output format")->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*sample_cmd) return run_sample(so);
    if (*check_cmd) {
      if (trials_opt->count() > 0) co.trials = trials_flag;
      return run_check(co);
    }
    return run_enumerate(eo);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const tape_exhausted& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}

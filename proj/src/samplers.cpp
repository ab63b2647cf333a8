#include "exactrv/samplers.hpp"

#include <stdexcept>

namespace exactrv {

std::uint64_t decreasing_trial(bit_source& src, std::uint64_t n0, lazy_uniform& x) {
  std::uint64_t n = n0;
  lazy_uniform y(src);
  if (cmp_uniform(y, x) >= 0) return n;
  lazy_uniform prev = std::move(y);
  for (;;) {
    ++n;
    lazy_uniform next(src);
    if (cmp_uniform(next, prev) >= 0) return n;
    prev = std::move(next);
  }
}

bool bernoulli_half_exp(bit_source& src) {
  lazy_uniform x(src);
  if (!le_half(x)) return true;
  return decreasing_trial(src, 0, x) % 2 == 1;
}

std::uint64_t gaussian_int(bit_source& src) {
  for (;;) {
    const std::uint64_t k = geometric([&] { return bernoulli_half_exp(src); }, 0);
    const std::uint64_t extra = k == 0 ? 0 : k * (k - 1);
    if (all_of([&] { return bernoulli_half_exp(src); }, extra)) return k;
  }
}

int choose3(bit_source& src, std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("choose3: m must be >= 2");
  const std::uint64_t v = rand_uniform(src, m - 1);
  if (v == 0) return -1;
  if (v == 1) return 0;
  return 1;
}

bool thin_bernoulli(bit_source& src, std::uint64_t k, lazy_uniform& x) {
  const int f = choose3(src, 2 * k + 2);
  if (f == 0) return true;
  if (f == -1) {
    lazy_uniform r(src);
    return cmp_uniform(x, r) < 0;
  }
  return false;
}

std::uint64_t thinned_trial(bit_source& src, std::uint64_t k, lazy_uniform& x) {
  std::uint64_t n = 0;
  lazy_uniform z(src);
  if (cmp_uniform(x, z) < 0 || thin_bernoulli(src, k, x)) return n;
  lazy_uniform prev = std::move(z);
  for (;;) {
    ++n;
    lazy_uniform next(src);
    if (cmp_uniform(prev, next) < 0 || thin_bernoulli(src, k, x)) return n;
    prev = std::move(next);
  }
}

bool bernoulli_exp_frac(bit_source& src, std::uint64_t k, lazy_uniform& x) {
  return thinned_trial(src, k, x) % 2 == 0;
}

magnitude_sample half_gaussian(bit_source& src) {
  for (;;) {
    const std::uint64_t k = gaussian_int(src);
    lazy_uniform x(src);
    if (all_of([&] { return bernoulli_exp_frac(src, k, x); }, k + 1)) {
      return {k, std::move(x)};
    }
  }
}

creal gaussian(bit_source& src) {
  magnitude_sample s = half_gaussian(src);
  const std::uint8_t sign = src.next_bit();
  return creal::of_bzu(sign, s.k, std::move(s.frac));
}

magnitude_sample neg_exponential(bit_source& src) {
  std::uint64_t k = 0;
  for (;;) {
    lazy_uniform x(src);
    if (decreasing_trial(src, 0, x) % 2 == 0) return {k, std::move(x)};
    ++k;
  }
}

creal laplace(bit_source& src, std::int64_t eps_exp, const creal& mu) {
  magnitude_sample s = neg_exponential(src);
  const std::uint8_t sign = src.next_bit();
  return add(mu, scal_pow2(creal::of_bzu(sign, s.k, std::move(s.frac)), eps_exp));
}

}  // namespace exactrv

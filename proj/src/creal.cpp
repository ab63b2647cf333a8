#include "exactrv/creal.hpp"

#include <stdexcept>
#include <utility>

namespace exactrv {

namespace {

bool g_cache_enabled = true;

// round(a / 2^k), nearest, ties away from zero. k >= 1.
bigint shift_round(const bigint& a, std::int64_t k) {
  const bigint half = bigint(1) << (k - 1);
  if (a >= 0) return (a + half) >> k;
  return -((-a + half) >> k);
}

// round(num / den), nearest, ties away from zero. den > 0.
bigint div_round(const bigint& num, const bigint& den) {
  if (num >= 0) return (num * 2 + den) / (den * 2);
  return -((-num * 2 + den) / (den * 2));
}

}  // namespace

namespace detail {

class creal_node {
 public:
  virtual ~creal_node() = default;

  bigint approx(std::int64_t p) {
    if (g_cache_enabled && has_cache_) {
      if (p == cache_p_) return cache_a_;
      if (p < cache_p_) return shift_round(cache_a_, cache_p_ - p);
    }
    bigint a = eval(p);
    if (g_cache_enabled && (!has_cache_ || p > cache_p_)) {
      has_cache_ = true;
      cache_p_ = p;
      cache_a_ = a;
    }
    return a;
  }

 protected:
  virtual bigint eval(std::int64_t p) = 0;

 private:
  bool has_cache_ = false;
  std::int64_t cache_p_ = 0;
  bigint cache_a_;
};

namespace {

class int_node final : public creal_node {
 public:
  explicit int_node(bigint z) : z_(std::move(z)) {}

 protected:
  bigint eval(std::int64_t p) override {
    if (p >= 0) return z_ << p;
    return shift_round(z_, -p);
  }

 private:
  bigint z_;
};

class uniform_node final : public creal_node {
 public:
  explicit uniform_node(lazy_uniform u) : u_(std::move(u)) {}

 protected:
  bigint eval(std::int64_t p) override {
    if (p <= 0) return 0;
    return get_bits(u_, static_cast<std::size_t>(p));
  }

 private:
  lazy_uniform u_;
};

class rational_node final : public creal_node {
 public:
  rational_node(bigint num, bigint den) : num_(std::move(num)), den_(std::move(den)) {}

 protected:
  bigint eval(std::int64_t p) override {
    if (p >= 0) return div_round(num_ << p, den_);
    return div_round(num_, den_ << -p);
  }

 private:
  bigint num_;
  bigint den_;
};

class add_node final : public creal_node {
 public:
  add_node(std::shared_ptr<creal_node> x, std::shared_ptr<creal_node> y)
      : x_(std::move(x)), y_(std::move(y)) {}

 protected:
  bigint eval(std::int64_t p) override {
    return shift_round(x_->approx(p + 2) + y_->approx(p + 2), 2);
  }

 private:
  std::shared_ptr<creal_node> x_;
  std::shared_ptr<creal_node> y_;
};

class neg_node final : public creal_node {
 public:
  explicit neg_node(std::shared_ptr<creal_node> x) : x_(std::move(x)) {}

 protected:
  bigint eval(std::int64_t p) override { return -x_->approx(p); }

 private:
  std::shared_ptr<creal_node> x_;
};

class scale_node final : public creal_node {
 public:
  scale_node(std::shared_ptr<creal_node> x, std::int64_t k) : x_(std::move(x)), k_(k) {}

 protected:
  bigint eval(std::int64_t p) override { return x_->approx(p - k_); }

 private:
  std::shared_ptr<creal_node> x_;
  std::int64_t k_;
};

}  // namespace

}  // namespace detail

creal::creal(std::shared_ptr<detail::creal_node> node) : node_(std::move(node)) {}

creal creal::of_int(bigint z) {
  return creal(std::make_shared<detail::int_node>(std::move(z)));
}

creal creal::of_uniform(lazy_uniform u) {
  return creal(std::make_shared<detail::uniform_node>(std::move(u)));
}

creal creal::of_bzu(std::uint8_t sign_bit, bigint z, lazy_uniform u) {
  creal abs = add(of_int(std::move(z)), of_uniform(std::move(u)));
  return sign_bit ? neg(abs) : abs;
}

creal creal::of_rational(bigint num, bigint den) {
  if (den <= 0) throw std::invalid_argument("of_rational: denominator must be positive");
  return creal(std::make_shared<detail::rational_node>(std::move(num), std::move(den)));
}

creal creal::of_decimal(std::string_view text) {
  const auto fail = [&] {
    throw std::invalid_argument("of_decimal: not a plain decimal: '" + std::string(text) + "'");
  };
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  bigint num = 0;
  std::size_t int_digits = 0;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
    num = num * 10 + (text[i] - '0');
    ++i;
    ++int_digits;
  }
  if (int_digits == 0) fail();
  bigint den = 1;
  if (i < text.size() && text[i] == '.') {
    ++i;
    std::size_t frac_digits = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      num = num * 10 + (text[i] - '0');
      den *= 10;
      ++i;
      ++frac_digits;
    }
    if (frac_digits == 0) fail();
  }
  if (i != text.size()) fail();
  if (negative) num = -num;
  if (den == 1) return of_int(std::move(num));
  return of_rational(std::move(num), std::move(den));
}

bigint creal::approx(std::int64_t p) const { return node_->approx(p); }

std::string creal::to_decimal(int digits) const {
  if (digits < 0) throw std::invalid_argument("to_decimal: digits must be >= 0");
  // 2^-p <= 10^-digits / 8, so the approximant error stays under half an
  // output ulp and nearest rounding lands within 10^-digits of the real.
  const std::int64_t p = 4 * static_cast<std::int64_t>(digits) + 3;
  const bigint a = approx(p);
  bigint pow10 = 1;
  for (int i = 0; i < digits; ++i) pow10 *= 10;
  const bigint scaled = div_round(a * pow10, bigint(1) << p);
  const bool negative = scaled < 0;
  const bigint mag = negative ? bigint(-scaled) : scaled;
  std::string out;
  if (negative) out.push_back('-');
  out += bigint(mag / pow10).str();
  if (digits > 0) {
    const std::string frac = bigint(mag % pow10).str();
    out.push_back('.');
    out.append(static_cast<std::size_t>(digits) - frac.size(), '0');
    out += frac;
  }
  return out;
}

creal add(const creal& x, const creal& y) {
  return creal(std::make_shared<detail::add_node>(x.node_, y.node_));
}

creal neg(const creal& x) {
  return creal(std::make_shared<detail::neg_node>(x.node_));
}

creal scal_pow2(const creal& x, std::int64_t k) {
  return creal(std::make_shared<detail::scale_node>(x.node_, k));
}

int cmp(const creal& x, const creal& y, std::int64_t start_p, std::int64_t max_p) {
  if (start_p > max_p) throw std::invalid_argument("cmp: start_p must be <= max_p");
  for (std::int64_t p = start_p; p <= max_p; ++p) {
    const bigint n1 = x.approx(p);
    const bigint n2 = y.approx(p);
    if (n1 + 2 < n2) return -1;
    if (n2 + 2 < n1) return 1;
  }
  throw undecided_error(max_p);
}

int checker(const creal& sample, const dyadic& point, std::int64_t max_p) {
  return cmp(sample, scal_pow2(creal::of_int(point.num), point.exp), 0, max_p);
}

void set_creal_cache_enabled(bool enabled) noexcept { g_cache_enabled = enabled; }

bool creal_cache_enabled() noexcept { return g_cache_enabled; }

}  // namespace exactrv

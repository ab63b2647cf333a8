#include "exactrv/lazy_uniform.hpp"

#include <utility>

namespace exactrv {

bigint get_bits(lazy_uniform& u, std::size_t n) {
  bigint acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    acc <<= 1;
    acc += u.bit(i);
  }
  return acc;
}

int cmp_uniform(lazy_uniform& x, lazy_uniform& y, std::size_t max_bits) {
  if (&x == &y) return 0;
  for (std::size_t i = 0; i < max_bits; ++i) {
    const std::uint8_t bx = x.bit(i);
    const std::uint8_t by = y.bit(i);
    if (bx != by) return bx < by ? -1 : 1;
  }
  throw undecided_error(static_cast<long long>(max_bits));
}

bool le_half(lazy_uniform& u) { return u.bit(0) == 0; }

lazy_uniform max2(bit_source& src) {
  lazy_uniform x(src);
  lazy_uniform y(src);
  return cmp_uniform(x, y) < 0 ? std::move(y) : std::move(x);
}

}  // namespace exactrv

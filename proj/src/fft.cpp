#include "statekit/fft.hpp"

#include <cmath>

namespace statekit::fft {

namespace {

const std::vector<complexd>& twiddles(std::size_t n) {
  thread_local std::size_t cached_n = 0;
  thread_local std::vector<complexd> table;
  if (cached_n != n) {
    table.resize(n / 2);
    const double step = -2.0 * std::acos(-1.0) / double(n);
    for (std::size_t k = 0; k < n / 2; ++k)
      table[k] = std::polar(1.0, step * double(k));
    cached_n = n;
  }
  return table;
}

}  // namespace

void transform(std::vector<complexd>& a, bool inverse) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw ValidationError("fft: length must be a power of two");
  if (n == 1) return;

  // Bit-reversal permutation.
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  const auto& w = twiddles(n);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        complexd tw = w[k * stride];
        if (inverse) tw = std::conj(tw);
        const complexd u = a[i + k];
        const complexd v = a[i + k + len / 2] * tw;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }

  if (inverse)
    for (auto& x : a) x /= double(n);
}

}  // namespace statekit::fft

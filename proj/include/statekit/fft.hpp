#ifndef STATEKIT_FFT_HPP
#define STATEKIT_FFT_HPP

#include <vector>

#include "statekit/common.hpp"

namespace statekit::fft {

/// In-place radix-2 FFT. Forward: a_k <- sum_j a_j exp(-2 pi i j k / n);
/// inverse additionally scales by 1/n. The length must be a power of two.
void transform(std::vector<complexd>& a, bool inverse);

}  // namespace statekit::fft

#endif

#pragma once

#include <span>
#include <vector>

namespace emg::detail {

// |X[k]|^2 for k = 0..n/2 of the real DFT of `x`.
// Thread-safe; plans are cached per length.
std::vector<double> rfft_power(std::span<const double> x);

}  // namespace emg::detail

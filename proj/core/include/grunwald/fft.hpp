#pragma once

#include <complex>
#include <vector>

namespace grunwald {

/// In-place radix-2 FFT; size must be a power of two.
/// Forward: X_k = sum_m x_m e^{-2 pi i k m / n}.  Inverse includes the 1/n.
void fft_inplace(std::vector<std::complex<double>>& x, bool inverse = false);

bool is_power_of_two(std::size_t n);

} // namespace grunwald

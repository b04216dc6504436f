#pragma once

#include "hartogs/types.hpp"

namespace hartogs {

// In-place radix-2 decimation-in-time FFT; size must be a power of two.
// Forward transform, no normalization: X_k = sum_j x_j e^{-2*pi*i*j*k/n}.
void fft_radix2(ArrayXcd& data);

// Full spectrum of equispaced angular samples, normalized by 1/n:
// c_k = (1/n) sum_j v_j e^{-2*pi*i*j*k/n}, k = 0..n-1.
ArrayXcd angular_spectrum(const ArrayXcd& values);

// Fourier coefficient of mode n from the normalized spectrum, n in
// [-size/2, size/2 - 1].
Complex spectrum_mode(const ArrayXcd& spectrum, int n);

bool is_power_of_two(int n);
int next_power_of_two(int n);

}  // namespace hartogs

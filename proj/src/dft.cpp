#include "hartogs/dft.hpp"

#include <cmath>
#include <numbers>

namespace hartogs {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

int next_power_of_two(int n) {
  int p = 1;
  while (p < n) p <<= 1;
  return p;
}

void fft_radix2(ArrayXcd& data) {
  const int n = static_cast<int>(data.size());
  if (!is_power_of_two(n)) throw DomainError("fft: size must be a power of two");
  // Bit-reversal permutation.
  for (int i = 1, j = 0; i < n; ++i) {
    int bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }
  for (int len = 2; len <= n; len <<= 1) {
    const Scalar ang = -2 * std::numbers::pi / len;
    const Complex wlen(std::cos(ang), std::sin(ang));
    for (int i = 0; i < n; i += len) {
      Complex w = 1;
      for (int k = 0; k < len / 2; ++k) {
        const Complex u = data[i + k];
        const Complex v = data[i + k + len / 2] * w;
        data[i + k] = u + v;
        data[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

ArrayXcd angular_spectrum(const ArrayXcd& values) {
  ArrayXcd spec = values;
  fft_radix2(spec);
  spec /= static_cast<Scalar>(values.size());
  return spec;
}

Complex spectrum_mode(const ArrayXcd& spectrum, int n) {
  const int size = static_cast<int>(spectrum.size());
  if (n < -size / 2 || n > size / 2 - 1)
    throw AliasingError("spectrum mode outside Nyquist range");
  return spectrum[(n % size + size) % size];
}

}  // namespace hartogs

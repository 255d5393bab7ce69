#pragma once

// Fast discrete Fourier transform for any length: iterative radix-2 for
// powers of two, Bluestein's chirp-z convolution for everything else.
// Twiddle factors are computed per call; the functions hold no state.

#include "chebsig/types.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace chebsig {

namespace detail {

inline bool is_power_of_two(Index n) { return n > 0 && (n & (n - 1)) == 0; }

inline Index next_power_of_two(Index n) {
  Index m = 1;
  while (m < n) m <<= 1;
  return m;
}

// In-place radix-2 transform. sign = -1 forward, +1 inverse (unnormalized).
template <typename Scalar>
void radix2_inplace(std::complex<Scalar>* data, Index n, int sign) {
  using Complex = std::complex<Scalar>;
  for (Index i = 1, j = 0; i < n; ++i) {
    Index bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }

  // Table of exp(sign * 2 pi i k / n), k < n/2, each entry computed directly.
  std::vector<Complex> twiddle(static_cast<std::size_t>(n / 2));
  const Scalar base = Scalar(2) * std::numbers::pi_v<Scalar> / Scalar(n);
  for (Index k = 0; k < n / 2; ++k) {
    const Scalar angle = base * Scalar(k);
    twiddle[k] = Complex(std::cos(angle), Scalar(sign) * std::sin(angle));
  }

  for (Index len = 2; len <= n; len <<= 1) {
    const Index half = len / 2;
    const Index stride = n / len;
    for (Index start = 0; start < n; start += len) {
      for (Index k = 0; k < half; ++k) {
        const Complex w = twiddle[k * stride];
        const Complex u = data[start + k];
        const Complex v = data[start + k + half] * w;
        data[start + k] = u + v;
        data[start + k + half] = u - v;
      }
    }
  }
}

// Bluestein: X_k = conj(c_k) * sum_j (x_j conj(c_j)) c_{k-j}, c_m = exp(i pi m^2 / n).
template <typename Scalar>
ComplexVector<Scalar> bluestein(const ComplexVector<Scalar>& x, int sign) {
  using Complex = std::complex<Scalar>;
  const Index n = x.size();
  const Index m = next_power_of_two(2 * n - 1);

  // m^2 mod 2n keeps the chirp argument small and exact.
  std::vector<Complex> chirp(static_cast<std::size_t>(n));
  const auto two_n = static_cast<unsigned long long>(2 * n);
  for (Index k = 0; k < n; ++k) {
    const auto kk = static_cast<unsigned long long>(k);
    const unsigned long long r = (kk * kk) % two_n;
    const Scalar angle = std::numbers::pi_v<Scalar> * Scalar(r) / Scalar(n);
    chirp[k] = Complex(std::cos(angle), Scalar(-sign) * std::sin(angle));
  }

  std::vector<Complex> a(static_cast<std::size_t>(m), Complex(0));
  std::vector<Complex> b(static_cast<std::size_t>(m), Complex(0));
  for (Index k = 0; k < n; ++k) a[k] = x[k] * std::conj(chirp[k]);
  b[0] = chirp[0];
  for (Index k = 1; k < n; ++k) {
    b[k] = chirp[k];
    b[m - k] = chirp[k];
  }

  radix2_inplace(a.data(), m, -1);
  radix2_inplace(b.data(), m, -1);
  for (Index k = 0; k < m; ++k) a[k] *= b[k];
  radix2_inplace(a.data(), m, +1);

  ComplexVector<Scalar> out(n);
  const Scalar inv_m = Scalar(1) / Scalar(m);
  for (Index k = 0; k < n; ++k) out[k] = a[k] * inv_m * std::conj(chirp[k]);
  return out;
}

template <typename Scalar>
ComplexVector<Scalar> transform(const ComplexVector<Scalar>& x, int sign) {
  const Index n = x.size();
  if (n == 0) throw InvalidArgument("transform length must be at least 1");
  if (n == 1) return x;
  if (is_power_of_two(n)) {
    ComplexVector<Scalar> out = x;
    radix2_inplace(out.data(), n, sign);
    return out;
  }
  return bluestein(x, sign);
}

}  // namespace detail

/// Unnormalized forward DFT: X_k = sum_j x_j exp(-2 pi i j k / N).
template <typename Scalar>
ComplexVector<Scalar> dft_forward(const ComplexVector<Scalar>& values) {
  return detail::transform(values, -1);
}

/// Inverse DFT including the 1/N factor, so dft_inverse(dft_forward(x)) == x.
template <typename Scalar>
ComplexVector<Scalar> dft_inverse(const ComplexVector<Scalar>& spectrum) {
  ComplexVector<Scalar> out = detail::transform(spectrum, +1);
  out /= Scalar(spectrum.size());
  return out;
}

/// Forward DFT of real input.
template <typename Scalar>
ComplexVector<Scalar> dft_forward_real(const Vector<Scalar>& values) {
  return dft_forward<Scalar>(values.template cast<std::complex<Scalar>>());
}

}  // namespace chebsig

#pragma once

// Trigonometric interpolation on uniform grids: spectral zero-padding,
// explicit periodic cardinal functions and amplitude spectra.

#include "chebsig/fft.hpp"
#include "chebsig/types.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace chebsig {

template <typename Scalar>
struct UniformSignal {
  Scalar start;
  Scalar step;
  Vector<Scalar> values;

  UniformSignal(Scalar start_, Scalar step_, Vector<Scalar> values_)
      : start(start_), step(step_), values(std::move(values_)) {
    if (!(step > Scalar(0))) throw InvalidArgument("step must be positive");
    if (values.size() < 2) throw InvalidArgument("uniform signal needs >= 2 samples");
    if (!values.allFinite()) throw InvalidArgument("signal values must be finite");
  }

  Index size() const { return values.size(); }
  Scalar time(Index k) const { return start + Scalar(k) * step; }
};

template <typename Scalar>
struct SpectrumReport {
  Vector<Scalar> frequencies;  // k / (N step), k = 0..N-1
  Vector<Scalar> amplitudes;
  Vector<Scalar> phases;       // in (-pi, pi]
};

/// Thrown for sample grids that are not uniformly spaced.
class UnevenNodes : public InvalidArgument {
 public:
  UnevenNodes() : InvalidArgument("uneven nodes unsupported") {}
};

/// True when consecutive differences all match their mean to `rel_tol`.
template <typename Scalar>
bool is_uniform_grid(const Vector<Scalar>& x, Scalar rel_tol = Scalar(1e-9)) {
  const Index n = x.size();
  if (n < 2) return false;
  const Scalar mean = (x[n - 1] - x[0]) / Scalar(n - 1);
  if (!(mean > Scalar(0))) return false;
  for (Index k = 1; k < n; ++k) {
    if (std::abs((x[k] - x[k - 1]) - mean) > rel_tol * mean) return false;
  }
  return true;
}

/// Band-limited resampling to `new_count` points over the same period
/// (the interpft construction). The spectrum is zero-padded symmetrically;
/// for even input length the Nyquist bin is split between both halves.
template <typename Scalar>
UniformSignal<Scalar> resample_spectral(const UniformSignal<Scalar>& signal, Index new_count) {
  const Index m = signal.size();
  if (new_count < m) throw InvalidArgument("new_count must not be smaller than the input length");
  if (new_count == m) return signal;

  const ComplexVector<Scalar> a = dft_forward_real(signal.values);
  const Index nyquist = (m + 1 + 1) / 2;  // ceil((m + 1) / 2)
  ComplexVector<Scalar> b = ComplexVector<Scalar>::Zero(new_count);
  for (Index k = 0; k < nyquist; ++k) b[k] = a[k];
  for (Index k = nyquist; k < m; ++k) b[k + new_count - m] = a[k];
  if (m % 2 == 0) {
    b[nyquist - 1] *= Scalar(0.5);
    b[nyquist - 1 + new_count - m] = b[nyquist - 1];
  }

  const ComplexVector<Scalar> y = dft_inverse(b);
  Vector<Scalar> out(new_count);
  const Scalar scale = Scalar(new_count) / Scalar(m);
  for (Index k = 0; k < new_count; ++k) out[k] = y[k].real() * scale;
  return UniformSignal<Scalar>(signal.start, signal.step * Scalar(m) / Scalar(new_count),
                               std::move(out));
}

/// Periodic cardinal function of period 2 on N points:
/// sin(N pi x / 2) / (N sin(pi x / 2)) for odd N, with tan for even N.
/// Removable singularities at even integers take their limit value.
template <typename Scalar>
Scalar trig_cardinal(Scalar x, Index N) {
  if (N < 2) throw InvalidArgument("cardinal function needs N >= 2");
  const Scalar pi = std::numbers::pi_v<Scalar>;
  // Both variants have period 2; reducing first puts every removable
  // singularity at r == 0, where the limit is 1.
  const Scalar r = std::remainder(x, Scalar(2));
  if (r == Scalar(0)) return Scalar(1);
  const Scalar num = std::sin(Scalar(N) * pi * r / Scalar(2));
  if (N % 2 == 1) return num / (Scalar(N) * std::sin(pi * r / Scalar(2)));
  return num / (Scalar(N) * std::tan(pi * r / Scalar(2)));
}

/// Trigonometric interpolant through uniformly spaced samples. The grid is
/// rescaled so its spacing becomes h = 2/N, which treats the N samples as
/// one period of a 2-periodic function.
template <typename Scalar>
Vector<Scalar> trig_interpolate(const Vector<Scalar>& sample_x, const Vector<Scalar>& sample_y,
                                const Vector<Scalar>& query_x) {
  const Index n = sample_x.size();
  if (n != sample_y.size()) throw InvalidArgument("sample_x and sample_y differ in length");
  if (n < 2) throw InvalidArgument("need at least two samples");
  if (!is_uniform_grid(sample_x)) throw UnevenNodes();

  const Scalar h = Scalar(2) / Scalar(n);
  const Scalar scale = (sample_x[1] - sample_x[0]) / h;
  Vector<Scalar> out = Vector<Scalar>::Zero(query_x.size());
  for (Index q = 0; q < query_x.size(); ++q) {
    const Scalar xi = query_x[q] / scale;
    Scalar acc = Scalar(0);
    for (Index k = 0; k < n; ++k) acc += sample_y[k] * trig_cardinal(xi - sample_x[k] / scale, n);
    out[q] = acc;
  }
  return out;
}

/// |DFT|, arg(DFT) and the 0..(N-1)/(N step) frequency axis.
template <typename Scalar>
SpectrumReport<Scalar> amplitude_spectrum(const UniformSignal<Scalar>& signal) {
  const Index n = signal.size();
  const ComplexVector<Scalar> spec = dft_forward_real(signal.values);
  SpectrumReport<Scalar> report{Vector<Scalar>(n), Vector<Scalar>(n), Vector<Scalar>(n)};
  for (Index k = 0; k < n; ++k) {
    report.frequencies[k] = Scalar(k) / (Scalar(n) * signal.step);
    report.amplitudes[k] = std::abs(spec[k]);
    Scalar phase = std::arg(spec[k]);
    if (phase == -std::numbers::pi_v<Scalar>) phase = std::numbers::pi_v<Scalar>;
    report.phases[k] = phase;
  }
  return report;
}

}  // namespace chebsig

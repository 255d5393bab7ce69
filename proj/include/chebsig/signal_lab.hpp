#pragma once

// Synthetic tracer-curve signals: gamma-variate generation, seeded noise,
// random sampling grids, moving-average filtering and peak comparison.

#include "chebsig/types.hpp"

#include <cstdint>
#include <random>

namespace chebsig {

enum class Spacing { Even, Uneven };

/// Paired samples (t, y); t strictly increasing. `step` is meaningful
/// only for Spacing::Even.
struct Signal {
  Vector<double> t;
  Vector<double> y;
  Spacing spacing = Spacing::Uneven;
  double step = 0.0;

  Signal() = default;
  Signal(Vector<double> t_, Vector<double> y_);

  Index size() const { return t.size(); }
};

enum class GammaForm {
  Shifted,        // A (t - t0)^alpha exp(-(t - t0) / beta), zero for t < t0
  NormalizedPdf,  // beta^alpha t^(alpha - 1) exp(-beta t) / Gamma(alpha)
};

struct GammaParams {
  double amplitude = 1.0;
  double onset = 0.0;
  double alpha = 2.0;
  double beta = 1.0;
  GammaForm form = GammaForm::NormalizedPdf;
};

struct RngSeed {
  std::uint64_t value = 42;
};

/// Reproducible random source: std::mt19937_64 (its output sequence is
/// fixed by the C++ standard) with uniforms built from the top 53 bits and
/// normals from the Box-Muller transform, so draws do not depend on the
/// standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(RngSeed seed) : engine_(seed.value) {}

  /// Uniform on [0, 1).
  double uniform();
  /// Standard normal.
  double normal();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

Signal gamma_variate(const GammaParams& params, const Vector<double>& t);

/// Uniform grid start, start + step, ..., with `count` points.
Vector<double> even_grid(double start, double step, Index count);

enum class UnevenMode {
  Sorted,     // sorted uniform draws on [0, span]
  Modulated,  // even grid on [0, span] multiplied by sorted uniforms, re-sorted
};

/// `count` sorted random abscissae on [0, span]. Ties are separated by
/// 1e-12 * span so the result is strictly increasing.
Vector<double> uneven_grid(Index count, double span, RngSeed seed,
                           UnevenMode mode = UnevenMode::Sorted);

/// y + sigma * g with g i.i.d. standard normal (absolute, not relative, sigma).
Signal add_noise(const Signal& signal, double sigma, RngSeed seed);

enum class FilterAlignment {
  Causal,    // y'[k] = mean(y[k-w+1..k]), zeros before the first sample
  Centered,  // window centred on k, truncated at the edges
};

Signal moving_average(const Signal& signal, Index window,
                      FilterAlignment alignment = FilterAlignment::Causal);

struct PeakMetrics {
  double ref_max;
  double cand_max;
  double abs_gap;
};

PeakMetrics peak_metrics(const Signal& reference, const Signal& candidate);

/// Root-mean-square of a - b over equal-length signals.
double rms_difference(const Signal& a, const Signal& b);

}  // namespace chebsig

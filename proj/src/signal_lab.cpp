#include "chebsig/signal_lab.hpp"

#include "chebsig/fourier_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace chebsig {

Signal::Signal(Vector<double> t_, Vector<double> y_) : t(std::move(t_)), y(std::move(y_)) {
  if (t.size() != y.size()) throw InvalidArgument("t and y differ in length");
  if (t.size() < 2) throw InvalidArgument("signal needs at least two samples");
  for (Index k = 1; k < t.size(); ++k) {
    if (!(t[k - 1] < t[k])) throw InvalidArgument("t must be strictly increasing");
  }
  if (is_uniform_grid(t)) {
    spacing = Spacing::Even;
    step = (t[t.size() - 1] - t[0]) / double(t.size() - 1);
  }
}

double Rng::uniform() { return double(engine_() >> 11) * 0x1p-53; }

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // 1 - u lies in (0, 1], keeping the logarithm finite.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

Signal gamma_variate(const GammaParams& params, const Vector<double>& t) {
  if (!(params.alpha > 0.0) || !(params.beta > 0.0)) {
    throw InvalidArgument("gamma variate needs alpha > 0 and beta > 0");
  }
  if (params.form == GammaForm::Shifted && !(params.amplitude > 0.0)) {
    throw InvalidArgument("gamma variate needs amplitude > 0");
  }
  Vector<double> y(t.size());
  const double a = params.alpha;
  const double b = params.beta;
  for (Index k = 0; k < t.size(); ++k) {
    if (params.form == GammaForm::Shifted) {
      const double s = t[k] - params.onset;
      y[k] = (s < 0.0) ? 0.0 : params.amplitude * std::pow(s, a) * std::exp(-s / b);
    } else {
      const double s = t[k];
      y[k] = (s < 0.0) ? 0.0 : std::pow(b, a) * std::pow(s, a - 1.0) * std::exp(-b * s) / std::tgamma(a);
    }
  }
  return Signal(t, std::move(y));
}

Vector<double> even_grid(double start, double step, Index count) {
  Vector<double> t(count);
  for (Index k = 0; k < count; ++k) t[k] = start + double(k) * step;
  return t;
}

namespace {

void separate_ties(Vector<double>& t, double span) {
  const double nudge = 1e-12 * span;
  for (Index k = 1; k < t.size(); ++k) {
    if (!(t[k] > t[k - 1])) t[k] = t[k - 1] + nudge;
  }
}

}  // namespace

Vector<double> uneven_grid(Index count, double span, RngSeed seed, UnevenMode mode) {
  if (count < 2) throw InvalidArgument("uneven grid needs count >= 2");
  if (!(span > 0.0)) throw InvalidArgument("span must be positive");
  Rng rng(seed);
  Vector<double> u(count);
  for (Index k = 0; k < count; ++k) u[k] = rng.uniform();
  std::sort(u.begin(), u.end());

  Vector<double> t(count);
  if (mode == UnevenMode::Sorted) {
    t = u * span;
  } else {
    const double step = span / double(count - 1);
    for (Index k = 0; k < count; ++k) t[k] = double(k) * step * u[k];
    std::sort(t.begin(), t.end());
  }
  separate_ties(t, span);
  return t;
}

Signal add_noise(const Signal& signal, double sigma, RngSeed seed) {
  if (!(sigma >= 0.0)) throw InvalidArgument("sigma must be non-negative");
  Signal out = signal;
  if (sigma == 0.0) return out;
  Rng rng(seed);
  for (Index k = 0; k < out.y.size(); ++k) out.y[k] += sigma * rng.normal();
  return out;
}

Signal moving_average(const Signal& signal, Index window, FilterAlignment alignment) {
  if (window < 1) throw InvalidArgument("window must be at least 1");
  Signal out = signal;
  const Index n = signal.y.size();
  if (alignment == FilterAlignment::Causal) {
    const double scale = 1.0 / double(window);
    for (Index k = 0; k < n; ++k) {
      double acc = 0.0;
      for (Index i = 0; i < window && i <= k; ++i) acc += signal.y[k - i];
      out.y[k] = acc * scale;
    }
  } else {
    const Index left = (window - 1) / 2;
    const Index right = window - 1 - left;
    for (Index k = 0; k < n; ++k) {
      const Index lo = std::max<Index>(0, k - left);
      const Index hi = std::min<Index>(n - 1, k + right);
      out.y[k] = signal.y.segment(lo, hi - lo + 1).mean();
    }
  }
  return out;
}

PeakMetrics peak_metrics(const Signal& reference, const Signal& candidate) {
  if (reference.y.size() == 0 || candidate.y.size() == 0) {
    throw InvalidArgument("peak metrics need non-empty signals");
  }
  const double r = reference.y.maxCoeff();
  const double c = candidate.y.maxCoeff();
  return PeakMetrics{r, c, std::abs(c - r)};
}

double rms_difference(const Signal& a, const Signal& b) {
  if (a.y.size() != b.y.size()) throw InvalidArgument("signals differ in length");
  return std::sqrt((a.y - b.y).squaredNorm() / double(a.y.size()));
}

}  // namespace chebsig

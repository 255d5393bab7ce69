#include "chebsig/experiments.hpp"

#include "chebsig/basis_conditioning.hpp"
#include "chebsig/cheb_core.hpp"
#include "chebsig/fourier_core.hpp"
#include "chebsig/nodes_analysis.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <future>
#include <numbers>
#include <sstream>

namespace chebsig {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = 0x1p-52;

// Noise draws must not reuse the stream that placed the uneven grid.
RngSeed noise_seed(RngSeed seed) { return RngSeed{seed.value + 0x9E3779B97F4A7C15ULL}; }

std::vector<double> to_std(const Vector<double>& v) { return {v.data(), v.data() + v.size()}; }

Series make_series(std::string label, std::vector<std::string> header,
                   std::vector<Column> columns) {
  return Series{std::move(label), std::move(header), std::move(columns)};
}

Vector<double> linspace(double a, double b, Index count) {
  return Vector<double>::LinSpaced(count, a, b);
}

std::string seed_text(RngSeed seed) { return std::to_string(seed.value); }

GammaParams default_gamma() {
  GammaParams p;
  p.alpha = 2.0;
  p.beta = 1.0;
  p.form = GammaForm::NormalizedPdf;
  return p;
}

// 0 : 3 pi / 30 : 3 pi
Vector<double> gamma_even_grid(Index intervals) {
  return even_grid(0.0, 3.0 * kPi / double(intervals), intervals + 1);
}

struct ChebFitResult {
  Vector<double> nodes;         // abscissae the fit interpolates at
  Vector<double> data;          // values it interpolates
  Vector<double> at_nodes;      // barycentric evaluation at the nodes (exact)
  Vector<double> clenshaw;      // coefficient-form evaluation at the nodes
  ChebInterpolant<double> interpolant;
};

ChebFitResult chebyshev_fit(const Signal& samples, ChebFit fit, const GammaParams& params,
                            bool noise, RngSeed seed) {
  const Domain<double> domain(samples.t[0], samples.t[samples.size() - 1]);
  const Index n = samples.size() - 1;
  const auto nodes = cheb_points_second_kind<double>(n, domain);

  Vector<double> data;
  if (fit == ChebFit::NodeValues) {
    data = samples.y;
  } else {
    Signal at_nodes = gamma_variate(params, nodes.points());
    if (noise) at_nodes = add_noise(at_nodes, 0.02, noise_seed(seed));
    data = at_nodes.y;
  }
  auto p = interpolant_from_values(data, domain);
  Vector<double> bary(n + 1);
  for (Index j = 0; j <= n; ++j) bary[j] = evaluate_barycentric(data, nodes, nodes[j]);
  Vector<double> clen = evaluate(p, nodes.points());
  return ChebFitResult{nodes.points(), data, bary, clen, std::move(p)};
}

}  // namespace

const char* to_string(CoeffsFunction f) {
  switch (f) {
    case CoeffsFunction::Atan: return "atan";
    case CoeffsFunction::TanhSum: return "tanh_sum";
    case CoeffsFunction::Stripe: return "stripe";
  }
  return "unknown";
}

const char* to_string(ChebFit fit) {
  return fit == ChebFit::NodeValues ? "node-values" : "resample";
}

// ---------------------------------------------------------------------------

ExperimentReport run_random_values(const Vector<double>& values, const std::string& name) {
  ExperimentReport report(name);
  report.set_metadata("experiment", "random");
  report.set_metadata("points", std::to_string(values.size()));

  const auto start = std::chrono::steady_clock::now();
  const auto p = interpolant_from_values(values, Domain<double>::unit());
  const auto ext = min_and_max(p);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  report.add_scalar("min", ext.min);
  report.add_scalar("max", ext.max);
  report.add_scalar("argmin", ext.argmin);
  report.add_scalar("argmax", ext.argmax);
  report.add_scalar("elapsed_seconds", elapsed);
  report.set_metadata("elapsed_seconds", "informational only (monotonic clock)");

  const Vector<double> x = linspace(-1.0, 1.0, 2001);
  report.add_series(make_series("interpolant", {"x", "p"}, {to_std(x), to_std(evaluate(p, x))}));
  const Vector<double> xz = linspace(0.9999, 1.0, 201);
  report.add_series(make_series("zoom", {"x", "p"}, {to_std(xz), to_std(evaluate(p, xz))}));
  return report;
}

ExperimentReport run_random(Index points, RngSeed seed) {
  if (points < 2) throw InvalidArgument("random experiment needs at least two points");
  Rng rng(seed);
  Vector<double> values(points);
  for (Index j = 0; j < points; ++j) values[j] = 2.0 * rng.uniform() - 1.0;
  auto report = run_random_values(values, "random_n" + std::to_string(points));
  report.set_metadata("seed", seed_text(seed));
  report.set_metadata("data", "uniform(-1, 1) at second-kind nodes");
  return report;
}

// ---------------------------------------------------------------------------

ExperimentReport run_converge() {
  ExperimentReport report("converge");
  report.set_metadata("experiment", "converge");
  report.set_metadata("norm", "discrete L2 with Clenshaw-Curtis weights on 2048 second-kind points; "
                              "sup over the same grid");
  report.set_metadata("precision", "errors measured in long double; *_b64 columns repeat the "
                                   "measurement in double and flatten at the rounding floor");

  using Long = long double;
  const Index grid = 2048;
  const Vector<double> w = clenshaw_curtis_weights(grid);
  const Vector<Long> wl = w.cast<Long>();
  const auto xg = cheb_points_second_kind<Long>(grid - 1);
  const auto xg64 = cheb_points_second_kind<double>(grid - 1);

  auto exp_l = [](Long x) { return std::exp(x); };
  auto runge_l = [](Long x) { return Long(1) / (Long(1) + Long(25) * x * x); };
  auto exp_d = [](double x) { return std::exp(x); };
  auto runge_d = [](double x) { return 1.0 / (1.0 + 25.0 * x * x); };

  Vector<Long> fl[2] = {Vector<Long>(grid), Vector<Long>(grid)};
  Vector<double> fd[2] = {Vector<double>(grid), Vector<double>(grid)};
  for (Index k = 0; k < grid; ++k) {
    fl[0][k] = exp_l(xg[k]);
    fl[1][k] = runge_l(xg[k]);
    fd[0][k] = exp_d(xg64[k]);
    fd[1][k] = runge_d(xg64[k]);
  }
  double fnorm[2];
  for (int i = 0; i < 2; ++i) fnorm[i] = double(std::sqrt((wl.array() * fl[i].array().square()).sum()));

  const Index n_max = 300;
  std::vector<double> ns, l2[2], sup[2], l2_64[2];
  Index threshold = -1;
  Index threshold_sup = -1;
  Index threshold_64 = -1;
  const Domain<Long> unit_l = Domain<Long>::unit();
  const Domain<double> unit_d = Domain<double>::unit();
  for (Index n = 1; n <= n_max; ++n) {
    const ChebInterpolant<Long> pl[2] = {interpolant_from_function<Long>(exp_l, unit_l, FixedDegree{n}),
                                         interpolant_from_function<Long>(runge_l, unit_l, FixedDegree{n})};
    const ChebInterpolant<double> pd[2] = {interpolant_from_function<double>(exp_d, unit_d, FixedDegree{n}),
                                           interpolant_from_function<double>(runge_d, unit_d, FixedDegree{n})};
    bool below = true;
    bool below_sup = true;
    bool below_64 = true;
    for (int i = 0; i < 2; ++i) {
      const Vector<Long> diff = evaluate(pl[i], xg.points()) - fl[i];
      const double e2 = double(std::sqrt((wl.array() * diff.array().square()).sum()));
      const double es = double(diff.cwiseAbs().maxCoeff());
      const Vector<double> diff64 = evaluate(pd[i], xg64.points()) - fd[i];
      const double e64 = std::sqrt((w.array() * diff64.array().square()).sum());
      l2[i].push_back(e2);
      sup[i].push_back(es);
      l2_64[i].push_back(e64);
      below = below && (e2 < kEps * fnorm[i]);
      below_sup = below_sup && (es < kEps * double(fl[i].cwiseAbs().maxCoeff()));
      below_64 = below_64 && (e64 < kEps * fnorm[i]);
    }
    ns.push_back(double(n));
    if (threshold < 0 && below) threshold = n;
    if (threshold_sup < 0 && below_sup) threshold_sup = n;
    if (threshold_64 < 0 && below_64) threshold_64 = n;
  }

  report.add_scalar("threshold_n", double(threshold));
  report.add_scalar("threshold_n_sup", double(threshold_sup));
  report.add_scalar("threshold_n_b64", double(threshold_64));
  report.add_scalar("exp_error_n20", l2[0][19]);
  report.add_scalar("exp_error_n20_b64", l2_64[0][19]);

  // Runge error ratios over two degrees against rho^-2.
  const double rho = (1.0 + std::sqrt(26.0)) / 5.0;
  const double target = 1.0 / (rho * rho);
  double worst = 0.0;
  for (Index n = 60; n <= 120; ++n) {
    const double ratio = l2[1][n - 1] / l2[1][n - 3];
    worst = std::max(worst, std::abs(ratio / target - 1.0));
  }
  report.add_scalar("runge_rate_target", target);
  report.add_scalar("runge_ratio_max_rel_dev", worst);
  report.add_scalar("norm_exp", fnorm[0]);
  report.add_scalar("norm_runge", fnorm[1]);

  report.add_series(make_series("errors",
                                {"n", "err_exp_l2", "err_runge_l2", "err_exp_sup", "err_runge_sup",
                                 "err_exp_l2_b64", "err_runge_l2_b64"},
                                {ns, l2[0], l2[1], sup[0], sup[1], l2_64[0], l2_64[1]}));
  return report;
}

// ---------------------------------------------------------------------------

ExperimentReport run_scale() {
  ExperimentReport report("scale");
  report.set_metadata("experiment", "scale");
  const auto f = [](double x) { return std::sin(x); };
  const Domain<double> wide(-6.0, 6.0);
  const Domain<double> half(0.0, 6.0);
  const auto p_wide = interpolant_from_function(f, wide, FixedDegree{9});
  const auto p_half = interpolant_from_function(f, half, FixedDegree{9});

  const Vector<double> x = linspace(-6.0, 6.0, 1000);
  std::vector<double> s, pw, ph, ew, eh;
  double max_wide = 0.0;
  double max_half_in = 0.0;
  for (Index i = 0; i < x.size(); ++i) {
    const double fx = f(x[i]);
    const double a = evaluate(p_wide, x[i]);
    const double b = evaluate(p_half, x[i]);
    s.push_back(fx);
    pw.push_back(a);
    ph.push_back(b);
    ew.push_back(std::abs(fx - a));
    eh.push_back(std::abs(fx - b));
    max_wide = std::max(max_wide, ew.back());
    if (half.contains(x[i])) max_half_in = std::max(max_half_in, eh.back());
  }

  const auto nodes = cheb_points_second_kind<double>(9, wide);
  double node_err = 0.0;
  for (Index j = 0; j < nodes.size(); ++j) {
    node_err = std::max(node_err, std::abs(evaluate(p_wide, nodes[j]) - f(nodes[j])));
  }

  report.add_scalar("max_error_wide", max_wide);
  report.add_scalar("max_error_half_in_domain", max_half_in);
  report.add_scalar("node_error_wide", node_err);
  report.add_scalar("half_error_at_minus6", std::abs(evaluate(p_half, -6.0) - f(-6.0)));

  report.add_series(make_series("interpolants", {"x", "sin", "p_wide", "p_half"},
                                {to_std(x), s, pw, ph}));
  report.add_series(make_series("errors", {"x", "abs_err_wide", "abs_err_half"}, {to_std(x), ew, eh}));
  report.add_series(make_series("unit_nodes", {"x"},
                                {to_std(cheb_points_second_kind<double>(9).points())}));
  return report;
}

// ---------------------------------------------------------------------------

ExperimentReport run_wavelen() {
  ExperimentReport report("wavelen");
  report.set_metadata("experiment", "wavelen");
  report.set_metadata("length", "number of coefficients kept by the adaptive constructor; -1 when unresolved");

  std::vector<double> ks, lsin, lrunge;
  std::vector<std::string> ssin, srunge;
  auto length_of = [](const auto& fn, std::vector<double>& len, std::vector<std::string>& status) {
    try {
      const auto p = interpolant_from_function<double>(fn, Domain<double>::unit(), Adaptive{});
      len.push_back(double(p.length()));
      status.emplace_back("resolved");
    } catch (const Unresolved<double>&) {
      len.push_back(-1.0);
      status.emplace_back("unresolved");
    }
  };
  for (int e = 0; e <= 10; ++e) {
    const double k = std::ldexp(1.0, e);
    ks.push_back(k);
    length_of([k](double x) { return std::sin(k * x); }, lsin, ssin);
    length_of([k](double x) { return 1.0 / (1.0 + (k * x) * (k * x)); }, lrunge, srunge);
  }
  report.add_series(make_series("lengths", {"k", "L_sin", "L_runge", "status_sin", "status_runge"},
                                {ks, lsin, lrunge, ssin, srunge}));
  return report;
}

// ---------------------------------------------------------------------------

namespace {

Series coeff_series(const std::string& label, const Vector<double>& c) {
  std::vector<double> k, a, s;
  for (Index i = 0; i < c.size(); ++i) {
    k.push_back(double(i));
    a.push_back(std::abs(c[i]));
    s.push_back(c[i]);
  }
  return make_series(label, {"k", "abs_coeff", "coeff"}, {k, a, s});
}

}  // namespace

ExperimentReport run_coeffs(CoeffsFunction function) {
  ExperimentReport report(std::string("coeffs_") + to_string(function));
  report.set_metadata("experiment", "coeffs");
  report.set_metadata("function", to_string(function));
  report.set_metadata("order", "ascending degree, a_0 first");
  const auto unit = Domain<double>::unit();

  switch (function) {
    case CoeffsFunction::Atan: {
      const auto p = interpolant_from_function<double>([](double x) { return std::atan(x); }, unit, Adaptive{});
      report.add_scalar("length", double(p.length()));
      report.add_scalar("a1", p.coeffs()[1]);
      report.add_scalar("a3", p.coeffs()[3]);
      report.add_scalar("a5", p.coeffs()[5]);
      report.add_series(coeff_series("atan", p.coeffs()));
      break;
    }
    case CoeffsFunction::TanhSum: {
      const auto f = interpolant_from_function<double>([](double x) { return std::tanh(x); }, unit, Adaptive{});
      const auto g = interpolant_from_function<double>([](double x) { return 1e-5 * std::tanh(10.0 * x); }, unit, Adaptive{});
      const auto h = interpolant_from_function<double>([](double x) { return 1e-10 * std::tanh(100.0 * x); }, unit, Adaptive{});
      const Index len = std::max({f.length(), g.length(), h.length()});
      Vector<double> sum = Vector<double>::Zero(len);
      sum.head(f.length()) += f.coeffs();
      sum.head(g.length()) += g.coeffs();
      sum.head(h.length()) += h.coeffs();
      const ChebInterpolant<double> s(sum, unit);
      const auto simplified = truncate(s, kEps);
      report.set_metadata("truncation_tol_rel", format_real(kEps));
      report.add_scalar("length_f", double(f.length()));
      report.add_scalar("length_g", double(g.length()));
      report.add_scalar("length_h", double(h.length()));
      report.add_scalar("length_s", double(s.length()));
      report.add_scalar("length_s_truncated", double(simplified.length()));
      report.add_series(coeff_series("f", f.coeffs()));
      report.add_series(coeff_series("g", g.coeffs()));
      report.add_series(coeff_series("h", h.coeffs()));
      report.add_series(coeff_series("s", s.coeffs()));
      report.add_series(coeff_series("s_truncated", simplified.coeffs()));
      break;
    }
    case CoeffsFunction::Stripe: {
      const auto p = interpolant_from_function<double>(
          [](double x) { return std::exp(x) / (1.0 + 10000.0 * x * x); }, unit, Adaptive{});
      double max_even = 0.0;
      double max_odd = 0.0;
      for (Index k = 0; k <= std::min<Index>(50, p.degree()); ++k) {
        double& slot = (k % 2 == 0) ? max_even : max_odd;
        slot = std::max(slot, std::abs(p.coeffs()[k]));
      }
      report.add_scalar("length", double(p.length()));
      report.add_scalar("max_even_coeff_k50", max_even);
      report.add_scalar("max_odd_coeff_k50", max_odd);
      report.add_series(coeff_series("stripe", p.coeffs()));
      break;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

ExperimentReport run_gamma(const GammaOptions& opt) {
  const bool even = opt.spacing == Spacing::Even;
  std::string name = std::string("gamma_") + (even ? "even" : "uneven") + (opt.noise ? "_noise" : "_clean");
  ExperimentReport report(name);
  report.set_metadata("experiment", "gamma");
  report.set_metadata("spacing", even ? "even" : "uneven");
  report.set_metadata("noise", opt.noise ? "on" : "off");
  report.set_metadata("noise_sigma", opt.noise ? "0.02" : "0");
  report.set_metadata("seed", seed_text(opt.seed));
  report.set_metadata("cheb_fit", to_string(opt.cheb_fit));
  report.set_metadata("gamma", "normalized pdf, alpha=2, beta=1");

  const GammaParams params = default_gamma();
  const Index intervals = 30;
  const double span = 3.0 * kPi;
  Vector<double> t;
  if (even) {
    t = gamma_even_grid(intervals);
  } else {
    t = uneven_grid(intervals + 1, span, opt.seed, opt.uneven_mode);
    report.set_metadata("uneven_mode", opt.uneven_mode == UnevenMode::Sorted ? "sorted" : "modulated");
  }
  const Signal clean = gamma_variate(params, t);
  const Signal samples = opt.noise ? add_noise(clean, 0.02, noise_seed(opt.seed)) : clean;

  // Chebyshev path.
  const ChebFitResult fit = chebyshev_fit(samples, opt.cheb_fit, params, opt.noise, opt.seed);
  const Signal fit_data(fit.nodes, fit.data);
  const Signal fit_nodes(fit.nodes, fit.at_nodes);
  const PeakMetrics cheb_peak = peak_metrics(fit_data, fit_nodes);
  report.add_scalar("cheb_sample_error_barycentric", (fit.at_nodes - fit.data).cwiseAbs().maxCoeff());
  report.add_scalar("cheb_sample_error_clenshaw", (fit.clenshaw - fit.data).cwiseAbs().maxCoeff());
  report.add_scalar("cheb_ref_max", cheb_peak.ref_max);
  report.add_scalar("cheb_max", cheb_peak.cand_max);
  report.add_scalar("cheb_peak_gap", cheb_peak.abs_gap);

  report.add_series(make_series("samples", {"t", "clean", "y"},
                                {to_std(t), to_std(clean.y), to_std(samples.y)}));
  report.add_series(make_series("cheb_fit", {"node", "data", "cheb_at_node"},
                                {to_std(fit.nodes), to_std(fit.data), to_std(fit.at_nodes)}));
  const Vector<double> dense = linspace(fit.nodes[0], fit.nodes[fit.nodes.size() - 1], 1000);
  report.add_series(make_series("cheb_dense", {"x", "p"}, {to_std(dense), to_std(evaluate(fit.interpolant, dense))}));

  // Fourier path.
  if (!even) {
    try {
      (void)trig_interpolate(samples.t, samples.y, samples.t);
      report.set_metadata("fourier_status", "ok");
      report.add_scalar("fourier_supported", 1.0);
    } catch (const UnevenNodes& e) {
      report.set_metadata("fourier_status", e.what());
      report.add_scalar("fourier_supported", 0.0);
    }
    return report;
  }

  report.set_metadata("fourier_status", "ok");
  report.add_scalar("fourier_supported", 1.0);
  const double step = t[1] - t[0];
  const UniformSignal<double> uniform(t[0], step, samples.y);

  // Integer upsampling lands on the original abscissae every `factor` points.
  const Index factor = 32;
  const auto fine = resample_spectral(uniform, factor * uniform.size());
  double reproduce = 0.0;
  for (Index j = 0; j < uniform.size(); ++j) {
    reproduce = std::max(reproduce, std::abs(fine.values[j * factor] - samples.y[j]));
  }
  report.add_scalar("fourier_sample_error", reproduce);

  // Dense curve as plotted: 1000 points, cut at the last sample time.
  const auto resampled = resample_spectral(uniform, 1000);
  std::vector<double> ft, fy;
  for (Index k = 0; k < resampled.size(); ++k) {
    const double tk = resampled.time(k);
    if (tk > t[t.size() - 1] * (1.0 + 1e-12)) break;
    ft.push_back(tk);
    fy.push_back(resampled.values[k]);
  }
  const Signal fourier_dense(Vector<double>::Map(ft.data(), Index(ft.size())),
                             Vector<double>::Map(fy.data(), Index(fy.size())));
  const PeakMetrics fourier_peak = peak_metrics(samples, fourier_dense);
  report.add_scalar("fourier_max", fourier_peak.cand_max);
  report.add_scalar("fourier_peak_gap", fourier_peak.abs_gap);
  report.add_series(make_series("fourier_dense", {"t", "y"}, {ft, fy}));
  return report;
}

// ---------------------------------------------------------------------------

ExperimentReport run_spectrum() {
  ExperimentReport report("spectrum");
  report.set_metadata("experiment", "spectrum");
  report.set_metadata("frequency_axis", "k / (N * step), k = 0..N-1 (not centred)");
  report.set_metadata("polar", "theta = 2 pi frequency, rho = amplitude");

  const Vector<double> t = gamma_even_grid(30);
  const Signal clean = gamma_variate(default_gamma(), t);
  const UniformSignal<double> uniform(t[0], t[1] - t[0], clean.y);
  const auto spec = amplitude_spectrum(uniform);

  const double energy = clean.y.squaredNorm();
  const double spec_energy = spec.amplitudes.squaredNorm() / double(spec.amplitudes.size());
  report.add_scalar("length", double(spec.amplitudes.size()));
  report.add_scalar("dc_amplitude", spec.amplitudes[0]);
  report.add_scalar("sum_y", clean.y.sum());
  report.add_scalar("parseval_rel_error", std::abs(energy - spec_energy) / energy);

  const Vector<double> theta = 2.0 * kPi * spec.frequencies;
  report.add_series(make_series("spectrum", {"frequency", "amplitude", "phase", "theta", "rho"},
                                {to_std(spec.frequencies), to_std(spec.amplitudes), to_std(spec.phases),
                                 to_std(theta), to_std(spec.amplitudes)}));
  return report;
}

// ---------------------------------------------------------------------------

ExperimentReport run_deviation(ChebFit fit_mode) {
  ExperimentReport report("deviation");
  report.set_metadata("experiment", "deviation");
  report.set_metadata("cheb_fit", to_string(fit_mode));

  const Vector<double> t = gamma_even_grid(30);
  const Signal clean = gamma_variate(default_gamma(), t);
  const ChebFitResult fit = chebyshev_fit(clean, fit_mode, default_gamma(), false, RngSeed{});
  const Vector<double> dev = (fit.clenshaw - fit.data).cwiseAbs();

  report.add_scalar("mean_abs_deviation", dev.mean());
  report.add_scalar("max_abs_deviation", dev.maxCoeff());
  report.add_series(make_series("deviation", {"t", "node", "f", "p", "abs_dev"},
                                {to_std(t), to_std(fit.nodes), to_std(fit.data), to_std(fit.clenshaw),
                                 to_std(dev)}));
  return report;
}

// ---------------------------------------------------------------------------

ExperimentReport run_filter(RngSeed seed, Index window, FilterAlignment alignment) {
  ExperimentReport report("filter");
  report.set_metadata("experiment", "filter");
  report.set_metadata("seed", seed_text(seed));
  report.set_metadata("window", std::to_string(window));
  report.set_metadata("alignment", alignment == FilterAlignment::Causal ? "causal" : "centered");
  report.set_metadata("noise_sigma", "0.02");

  const Vector<double> t = gamma_even_grid(300);
  const Signal clean = gamma_variate(default_gamma(), t);
  const Signal noisy = add_noise(clean, 0.02, seed);
  const Signal filtered = moving_average(noisy, window, alignment);

  report.add_scalar("rms_raw", rms_difference(noisy, clean));
  report.add_scalar("rms_filtered", rms_difference(filtered, clean));
  report.add_series(make_series("filter", {"t", "clean", "noisy", "filtered"},
                                {to_std(t), to_std(clean.y), to_std(noisy.y), to_std(filtered.y)}));
  return report;
}

// ---------------------------------------------------------------------------

ExperimentReport run_nodes(Index n) {
  if (n < 2) throw InvalidArgument("nodes experiment needs n >= 2");
  ExperimentReport report("nodes");
  report.set_metadata("experiment", "nodes");
  report.set_metadata("n", std::to_string(n));
  report.set_metadata("cheb_second", "cos(j pi / (n - 1)), j = 0..n-1");

  const auto first = cheb_points_first_kind<double>(n);
  const auto second = cheb_points_second_kind<double>(n - 1);
  const auto legendre = legendre_points<double>(n);
  const Vector<double> uniform = linspace(-1.0, 1.0, n);

  std::vector<double> idx;
  for (Index j = 0; j < n; ++j) idx.push_back(double(j));
  report.add_series(make_series("nodes", {"index", "cheb_first", "cheb_second", "legendre", "uniform"},
                                {idx, to_std(first.points()), to_std(second.points()),
                                 to_std(legendre.points()), to_std(uniform)}));

  report.add_scalar("compare_first_kind_legendre", compare_nodes(first, legendre));
  report.add_scalar("compare_second_kind_legendre", compare_nodes(second, legendre));
  report.add_scalar("smallest_nonzero_midpoint", double(smallest_nonzero_midpoint()));

  for (Index m : {Index(5), Index(10), Index(20)}) {
    std::vector<double> xs, gm;
    std::vector<std::string> kind;
    auto append = [&](const Vector<double>& pts, NodeKind k) {
      const auto prof = mean_distance(pts);
      for (Index j = 0; j < pts.size(); ++j) {
        xs.push_back(prof.points[j]);
        gm.push_back(prof.gm_distance[j]);
        kind.emplace_back(to_string(k));
      }
    };
    append(cheb_points_second_kind<double>(m - 1).points(), NodeKind::ChebSecond);
    append(legendre_points<double>(m).points(), NodeKind::Legendre);
    append(linspace(-1.0, 1.0, m), NodeKind::Uniform);
    report.add_series(make_series("mean_distance_" + std::to_string(m), {"x", "gm_distance", "node_kind"},
                                  {xs, gm, kind}));
  }
  return report;
}

// ---------------------------------------------------------------------------

ExperimentReport run_condition() {
  ExperimentReport report("condition");
  report.set_metadata("experiment", "condition");
  report.set_metadata("discretization", "1024 second-kind points, rows scaled by sqrt(Clenshaw-Curtis weight)");

  const auto unit = Domain<double>::unit();
  const auto cheb = conditioning_sweep(Basis::Chebyshev, unit, 10);
  const auto mono = conditioning_sweep(Basis::Monomial, unit, 10);
  const auto mono01 = conditioning_sweep(Basis::Monomial, Domain<double>(0.0, 1.0), 10);
  const Vector<double> sv = singular_values(build_basis_matrix(Basis::Chebyshev, unit, 10));

  report.add_scalar("cond_chebyshev_10", cheb.back());
  report.add_scalar("cond_monomial_10", mono.back());
  report.add_scalar("cond_monomial_01_10", mono01.back());
  report.add_scalar("sigma_max_chebyshev", sv[0]);
  report.add_scalar("sigma_min_chebyshev", sv[sv.size() - 1]);

  std::vector<double> deg;
  for (Index n = 0; n <= 10; ++n) deg.push_back(double(n));
  report.add_series(make_series("condition", {"degree", "cond_chebyshev", "cond_monomial", "cond_monomial_01"},
                                {deg, cheb, mono, mono01}));
  std::vector<double> idx;
  for (Index i = 0; i < sv.size(); ++i) idx.push_back(double(i + 1));
  report.add_series(make_series("singular_values", {"index", "sigma"}, {idx, to_std(sv)}));
  return report;
}

// ---------------------------------------------------------------------------

std::vector<ExperimentReport> run_all(const RunAllOptions& o) {
  std::vector<std::function<ExperimentReport()>> jobs;
  for (Index points : {Index(10), Index(100), Index(1000), Index(10000)}) {
    jobs.emplace_back([=] { return run_random(points, o.seed); });
  }
  jobs.emplace_back([] { return run_converge(); });
  jobs.emplace_back([] { return run_scale(); });
  jobs.emplace_back([] { return run_wavelen(); });
  for (auto f : {CoeffsFunction::Atan, CoeffsFunction::TanhSum, CoeffsFunction::Stripe}) {
    jobs.emplace_back([=] { return run_coeffs(f); });
  }
  for (auto spacing : {Spacing::Even, Spacing::Uneven}) {
    for (bool noise : {false, true}) {
      GammaOptions g{spacing, noise, o.seed, o.uneven_mode, o.cheb_fit};
      jobs.emplace_back([=] { return run_gamma(g); });
    }
  }
  jobs.emplace_back([] { return run_spectrum(); });
  jobs.emplace_back([=] { return run_deviation(o.cheb_fit); });
  jobs.emplace_back([=] { return run_filter(o.seed, o.window, o.alignment); });
  jobs.emplace_back([] { return run_nodes(100); });
  jobs.emplace_back([] { return run_condition(); });

  std::vector<ExperimentReport> out;
  out.reserve(jobs.size());
  if (!o.parallel) {
    for (auto& job : jobs) out.push_back(job());
    return out;
  }
  std::vector<std::future<ExperimentReport>> futures;
  futures.reserve(jobs.size());
  for (auto& job : jobs) futures.push_back(std::async(std::launch::async, job));
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

// ---------------------------------------------------------------------------
// Golden checks

namespace {

class Checker {
 public:
  explicit Checker(const ExperimentReport& r) : report_(r) {}

  void near(const std::string& name, const std::string& scalar, double expected, double abs_tol) {
    const double v = report_.scalar(scalar);
    std::ostringstream d;
    d << scalar << " = " << format_real(v) << ", expected " << format_real(expected) << " +/- " << abs_tol;
    add(name, std::abs(v - expected) <= abs_tol, d.str());
  }
  void rel(const std::string& name, const std::string& scalar, double expected, double rel_tol) {
    near(name, scalar, expected, rel_tol * std::abs(expected));
  }
  void less(const std::string& name, const std::string& scalar, double bound) {
    const double v = report_.scalar(scalar);
    add(name, v < bound, scalar + " = " + format_real(v) + " < " + format_real(bound));
  }
  void greater(const std::string& name, const std::string& scalar, double bound) {
    const double v = report_.scalar(scalar);
    add(name, v > bound, scalar + " = " + format_real(v) + " > " + format_real(bound));
  }
  void in_range(const std::string& name, const std::string& scalar, double lo, double hi) {
    const double v = report_.scalar(scalar);
    add(name, lo <= v && v <= hi,
        scalar + " = " + format_real(v) + " in [" + format_real(lo) + ", " + format_real(hi) + "]");
  }
  void add(std::string name, bool ok, std::string detail) {
    results_.push_back(CheckResult{std::move(name), ok, std::move(detail)});
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  const ExperimentReport& report_;
  std::vector<CheckResult> results_;
};

const std::vector<double>& numeric(const Series& s, std::size_t col) {
  return std::get<std::vector<double>>(s.columns.at(col));
}

}  // namespace

std::vector<CheckResult> golden_checks(const ExperimentReport& r) {
  Checker c(r);
  for (const auto& s : r.all_series()) {
    std::string why;
    c.add("schema:" + s.label, validate_series(s, &why), why.empty() ? "header and finite values" : why);
  }

  const std::string kind = r.metadata().count("experiment") ? r.metadata().at("experiment") : "";
  if (kind == "random") {
    c.add("random:schema", r.has_scalar("min") && r.has_scalar("max") && r.has_scalar("elapsed_seconds") &&
                               r.all_series().size() == 2,
          "scalars {min, max, elapsed_seconds} and two series");
    const auto& p = numeric(r.series("interpolant"), 1);
    const double dense_max = *std::max_element(p.begin(), p.end());
    const double dense_min = *std::min_element(p.begin(), p.end());
    c.add("random:extrema_bound_grid", r.scalar("max") >= dense_max - 1e-12 && r.scalar("min") <= dense_min + 1e-12,
          "min_and_max encloses the 2001-point evaluation");
  } else if (kind == "converge") {
    c.in_range("converge:threshold", "threshold_n", 180, 260);
    c.less("converge:exp_n20", "exp_error_n20", 1e-14);
    c.less("converge:runge_rate", "runge_ratio_max_rel_dev", 0.05);
  } else if (kind == "scale") {
    c.less("scale:nodes_exact", "node_error_wide", 1e-13);
    c.greater("scale:wide_imperfect", "max_error_wide", 1e-3);
    c.greater("scale:extrapolation_blowup", "half_error_at_minus6", 1.0);
  } else if (kind == "wavelen") {
    const auto& s = r.series("lengths");
    const auto& k = numeric(s, 0);
    const auto& l = numeric(s, 1);
    bool monotone = true;
    for (std::size_t i = 1; i < l.size(); ++i) monotone = monotone && l[i] >= l[i - 1] && l[i - 1] > 0;
    c.add("wavelen:sin_nondecreasing", monotone, "L(k) nondecreasing for sin(kx)");
    c.add("wavelen:sin_L1", l[0] > 0 && l[0] <= 20, "L(1) = " + format_real(l[0]) + " <= 20");
    bool ratios = true;
    std::string detail;
    for (std::size_t i = 0; i + 1 < l.size(); ++i) {
      if (k[i] < 64) continue;
      const double ratio = l[i + 1] / l[i];
      detail += format_real(ratio) + " ";
      ratios = ratios && ratio >= 1.6 && ratio <= 2.4;
    }
    c.add("wavelen:sin_doubling_k64", ratios, "L(2k)/L(k) for k >= 64: " + detail);
  } else if (kind == "coeffs") {
    const std::string fn = r.metadata().at("function");
    if (fn == "atan") {
      c.near("coeffs:a1", "a1", 0.828427124746190, 1e-12);
      c.near("coeffs:a3", "a3", -0.047378541243650, 1e-12);
      c.near("coeffs:a5", "a5", 0.004877323527903, 1e-12);
    } else if (fn == "tanh_sum") {
      c.add("coeffs:simplify_shortens", r.scalar("length_s_truncated") < r.scalar("length_s"),
            format_real(r.scalar("length_s_truncated")) + " < " + format_real(r.scalar("length_s")));
    } else {
      c.greater("coeffs:stripe_even", "max_even_coeff_k50", 1e-14);
      c.greater("coeffs:stripe_odd", "max_odd_coeff_k50", 1e-14);
    }
  } else if (kind == "gamma") {
    c.less("gamma:cheb_reproduces", "cheb_sample_error_clenshaw", 1e-10);
    c.add("gamma:cheb_peak_gap_zero", r.scalar("cheb_peak_gap") == 0.0,
          "cheb_peak_gap = " + format_real(r.scalar("cheb_peak_gap")));
    if (r.metadata().at("spacing") == "even") {
      c.less("gamma:fourier_reproduces", "fourier_sample_error", 1e-10);
      if (r.metadata().at("noise") == "on") c.greater("gamma:fourier_peak_gap", "fourier_peak_gap", 0.0);
    } else {
      c.add("gamma:fourier_unsupported", r.metadata().at("fourier_status") == "uneven nodes unsupported",
            "fourier_status = " + r.metadata().at("fourier_status"));
    }
  } else if (kind == "spectrum") {
    c.near("spectrum:length", "length", 31, 0);
    c.near("spectrum:dc", "dc_amplitude", std::abs(r.scalar("sum_y")), 1e-12);
    c.less("spectrum:parseval", "parseval_rel_error", 1e-9);
  } else if (kind == "deviation") {
    c.less("deviation:mean", "mean_abs_deviation", 1e-10);
    c.less("deviation:max", "max_abs_deviation", 1e-9);
    c.add("deviation:length", r.series("deviation").rows() == 31, "31 rows");
  } else if (kind == "filter") {
    const double raw = r.scalar("rms_raw");
    const double filt = r.scalar("rms_filtered");
    c.add("filter:rms_improves", filt < raw, format_real(filt) + " < " + format_real(raw));
    c.add("filter:metadata", r.metadata().count("window") && r.metadata().count("seed"), "window and seed recorded");
  } else if (kind == "nodes") {
    if (r.metadata().at("n") == "100") {
      c.near("nodes:second_kind_vs_legendre", "compare_second_kind_legendre", 0.0084, 0.0005);
    }
    const auto& s = r.series("nodes");
    bool sorted = true;
    for (std::size_t col = 1; col < s.columns.size(); ++col) {
      const auto& v = numeric(s, col);
      sorted = sorted && std::is_sorted(v.begin(), v.end());
    }
    c.add("nodes:sorted", sorted, "node tables ascending");
    c.near("nodes:midpoint", "smallest_nonzero_midpoint", double(smallest_nonzero_midpoint()), 0);
  } else if (kind == "condition") {
    c.rel("condition:chebyshev", "cond_chebyshev_10", 3.712641510134901, 0.01);
    c.rel("condition:monomial", "cond_monomial_10", 3.072959852624380e3, 0.02);
    c.rel("condition:monomial_01", "cond_monomial_01_10", 2.2871e7, 0.05);
    c.rel("condition:sigma_max", "sigma_max_chebyshev", 1.523832995601609, 0.01);
    c.rel("condition:sigma_min", "sigma_min_chebyshev", 0.410444421159920, 0.01);
  }
  return c.take();
}

}  // namespace chebsig

// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.
// Usage: acceptance <scratch dir> [path to chebsig CLI]

#include "chebsig/basis_conditioning.hpp"
#include "chebsig/cheb_core.hpp"
#include "chebsig/experiments.hpp"
#include "chebsig/fourier_core.hpp"
#include "chebsig/nodes_analysis.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

using namespace chebsig;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double time_limit;  // seconds
  std::function<Outcome()> run;
};

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

// Collects sub-checks into one outcome.
class Tally {
 public:
  void check(const std::string& name, bool ok, const std::string& detail = "") {
    all_ &= ok;
    if (!detail_.empty()) detail_ += "; ";
    detail_ += name + (ok ? " ok" : " FAILED");
    if (!detail.empty()) detail_ += " (" + detail + ")";
  }
  void note(const std::string& text) { detail_ += "; [info] " + text; }
  Outcome outcome() const { return {all_, detail_}; }

 private:
  bool all_ = true;
  std::string detail_;
};

Outcome from_golden(const ExperimentReport& r, Tally& t) {
  for (const auto& c : golden_checks(r)) {
    if (c.name.rfind("schema:", 0) == 0 && c.passed) continue;
    t.check(r.name() + "/" + c.name, c.passed, c.detail);
  }
  return t.outcome();
}

Outcome criterion_atan() {
  Tally t;
  const auto r = run_coeffs(CoeffsFunction::Atan);
  t.check("a1", std::abs(r.scalar("a1") - 0.828427124746190) < 1e-12, fmt(r.scalar("a1")));
  t.check("a3", std::abs(r.scalar("a3") + 0.047378541243650) < 1e-12, fmt(r.scalar("a3")));
  t.check("a5", std::abs(r.scalar("a5") - 0.004877323527903) < 1e-12, fmt(r.scalar("a5")));
  return t.outcome();
}

Outcome criterion_degree9_nodes() {
  const double expected[] = {-1.0000, -0.9397, -0.7660, -0.5000, -0.1736, 0.1736, 0.5000, 0.7660, 0.9397, 1.0000};
  const auto x = cheb_points_second_kind<double>(9);
  double worst = 0.0;
  for (Index j = 0; j < 10; ++j) worst = std::max(worst, std::abs(x[j] - expected[j]));
  return {worst <= 5e-5, "max deviation from the 4-decimal table " + fmt(worst)};
}

Outcome criterion_compare_nodes() {
  Tally t;
  const auto leg = legendre_points<double>(100);
  // 100 points cos(j pi / 99), j = 0..99.
  const double second = compare_nodes(cheb_points_second_kind<double>(99), leg);
  t.check("cos(j pi/99) vs Legendre(100) in 0.0084 +/- 0.0005", std::abs(second - 0.0084) <= 0.0005, fmt(second));
  const double roots = compare_nodes(cheb_points_first_kind<double>(100), leg);
  t.note("roots of T_100 vs Legendre(100) = " + fmt(roots));
  return t.outcome();
}

Outcome criterion_conditioning() {
  Tally t;
  return from_golden(run_condition(), t);
}

Outcome criterion_convergence() {
  Tally t;
  const auto r = run_converge();
  from_golden(r, t);
  t.note("threshold_n = " + fmt(r.scalar("threshold_n")));
  return t.outcome();
}

Outcome criterion_gamma_even() {
  Tally t;
  for (bool noise : {false, true}) {
    GammaOptions g;
    g.spacing = Spacing::Even;
    g.noise = noise;
    const auto r = run_gamma(g);
    t.check(r.name() + " cheb samples <= 1e-10", r.scalar("cheb_sample_error_clenshaw") <= 1e-10,
            fmt(r.scalar("cheb_sample_error_clenshaw")));
    t.check(r.name() + " cheb peak gap == 0", r.scalar("cheb_peak_gap") == 0.0, fmt(r.scalar("cheb_peak_gap")));
    if (!noise) {
      t.check(r.name() + " fourier samples <= 1e-10", r.scalar("fourier_sample_error") <= 1e-10,
              fmt(r.scalar("fourier_sample_error")));
    } else {
      t.check(r.name() + " fourier peak gap > 0", r.scalar("fourier_peak_gap") > 0.0,
              fmt(r.scalar("fourier_peak_gap")));
    }
  }
  return t.outcome();
}

Outcome criterion_uneven() {
  Tally t;
  for (auto mode : {UnevenMode::Sorted, UnevenMode::Modulated}) {
    for (bool noise : {false, true}) {
      GammaOptions g;
      g.spacing = Spacing::Uneven;
      g.noise = noise;
      g.uneven_mode = mode;
      const auto r = run_gamma(g);
      const std::string tag = r.name() + (mode == UnevenMode::Sorted ? "/sorted" : "/modulated");
      t.check(tag + " fourier status", r.metadata().at("fourier_status") == "uneven nodes unsupported",
              r.metadata().at("fourier_status"));
      t.check(tag + " cheb samples <= 1e-10", r.scalar("cheb_sample_error_clenshaw") <= 1e-10,
              fmt(r.scalar("cheb_sample_error_clenshaw")));
    }
  }
  return t.outcome();
}

Outcome criterion_properties() {
  Tally t;
  const double pi = std::numbers::pi;

  bool mirror = true;
  for (Index n = 1; n <= 300; ++n) {
    const auto a = cheb_points_second_kind<double>(n);
    for (Index j = 0; j <= n; ++j) mirror &= a[j] == -a[n - j];
    const auto b = cheb_points_first_kind<double>(n);
    for (Index j = 0; j < n; ++j) mirror &= b[j] == -b[n - 1 - j];
  }
  t.check("node symmetry", mirror);

  std::mt19937_64 g(2024);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double round_trip = 0.0;
  for (Index count : {2, 3, 10, 17, 100, 1025, 4097}) {
    Vector<double> v(count);
    for (auto& x : v) x = u(g);
    round_trip = std::max(round_trip, (coeffs_to_values(values_to_coeffs(v)) - v).cwiseAbs().maxCoeff());
    round_trip = std::max(round_trip, (values_to_coeffs(coeffs_to_values(v)) - v).cwiseAbs().maxCoeff());
  }
  t.check("transform round trip < 1e-12", round_trip < 1e-12, fmt(round_trip));

  double delta = 0.0;
  for (Index N = 2; N <= 64; ++N) {
    const double h = 2.0 / double(N);
    for (Index k = 0; k < N; ++k) delta = std::max(delta, std::abs(trig_cardinal(double(k) * h, N) - (k == 0 ? 1.0 : 0.0)));
  }
  t.check("cardinal Kronecker delta < 1e-13", delta < 1e-13, fmt(delta));

  double parseval = 0.0;
  for (Index n : {2, 31, 64, 301, 1000}) {
    Vector<double> y(n);
    for (auto& x : y) x = u(g);
    const auto s = amplitude_spectrum(UniformSignal<double>(0.0, 0.1, y));
    parseval = std::max(parseval, std::abs(s.amplitudes.squaredNorm() / double(n) - y.squaredNorm()) / y.squaredNorm());
  }
  t.check("Parseval < 1e-9 relative", parseval < 1e-9, fmt(parseval));

  const auto f = [](double x) { return std::sin(3 * x) * std::exp(x / 2); };
  const auto p = interpolant_from_function<double>(f, Domain<double>(-2.0, 2.0), Adaptive{});
  const auto dp = derivative(p);
  double fd = 0.0;
  for (double x = -1.9; x <= 1.9; x += 0.1) {
    const double h = 1e-5;
    const double diff = (p(x + h) - p(x - h)) / (2 * h);
    fd = std::max(fd, std::abs(dp(x) - diff) / std::max(1.0, std::abs(diff)));
  }
  t.check("derivative vs finite difference < 1e-7", fd < 1e-7, fmt(fd));

  double residual = 0.0;
  Index worst_n = 0;
  for (Index n = 1; n <= 500; ++n) {
    const auto x = legendre_points<double>(n);
    for (Index j = 0; j < n; ++j) {
      const double r = std::abs(legendre_eval(n, x[j]).first);
      if (r > residual) {
        residual = r;
        worst_n = n;
      }
    }
  }
  t.check("Legendre residual < 1e-13 for n <= 500 (binary64)", residual < 1e-13,
          "max " + fmt(residual) + " at n = " + std::to_string(worst_n));
  long double residual_ld = 0.0L;
  for (Index n : {100, 250, 500}) {
    const auto x = legendre_points<long double>(n);
    for (Index j = 0; j < n; ++j) residual_ld = std::max(residual_ld, std::abs(legendre_eval(n, x[j]).first));
  }
  t.note("long double roots, n in {100, 250, 500}: max residual " + fmt(double(residual_ld)));

  const Vector<double> tt = even_grid(0.0, 0.1, 50);
  const Signal constant(tt, Vector<double>::Constant(50, 0.7));
  bool dc = true;
  for (Index w : {1, 2, 5, 9}) {
    const auto c = moving_average(constant, w, FilterAlignment::Causal);
    for (Index k = w - 1; k < 50; ++k) dc &= std::abs(c.y[k] - 0.7) < 1e-15;
    const auto m = moving_average(constant, w, FilterAlignment::Centered);
    for (Index k = 0; k < 50; ++k) dc &= std::abs(m.y[k] - 0.7) < 1e-15;
  }
  t.check("filter DC gain 1", dc);

  int improved = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto r = run_filter(RngSeed{seed}, 5);
    improved += r.scalar("rms_filtered") < r.scalar("rms_raw") ? 1 : 0;
  }
  t.check("RMS improvement in >= 18/20 seeds", improved >= 18, std::to_string(improved) + "/20");

  double refine = 0.0;
  for (auto [basis, dom] : {std::pair{Basis::Chebyshev, Domain<double>::unit()},
                            std::pair{Basis::Monomial, Domain<double>::unit()},
                            std::pair{Basis::Monomial, Domain<double>(0.0, 1.0)}}) {
    const auto coarse = conditioning_sweep(basis, dom, 10, 512);
    const auto fine = conditioning_sweep(basis, dom, 10, 1024);
    for (std::size_t i = 0; i < fine.size(); ++i) refine = std::max(refine, std::abs(coarse[i] / fine[i] - 1.0));
  }
  t.check("grid refinement < 0.1%", refine < 1e-3, fmt(refine));
  return t.outcome();
}

std::map<std::string, std::string> csv_tree(const fs::path& root) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (e.path().extension() != ".csv") continue;
    std::ifstream in(e.path(), std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    out[fs::relative(e.path(), root).string()] = s.str();
  }
  return out;
}

Outcome criterion_determinism(const fs::path& scratch, const std::string& cli) {
  const fs::path a = scratch / "run_a";
  const fs::path b = scratch / "run_b";
  fs::remove_all(a);
  fs::remove_all(b);
  if (!cli.empty()) {
    for (const auto& dir : {a, b}) {
      const std::string cmd = "\"" + cli + "\" run-all --seed 42 --out \"" + dir.string() + "\" > /dev/null";
      if (std::system(cmd.c_str()) != 0) return {false, "CLI run failed: " + cmd};
    }
  } else {
    RunAllOptions o;
    o.seed = RngSeed{42};
    for (const auto& dir : {a, b}) {
      for (const auto& r : run_all(o)) write_report(r, dir);
    }
  }
  const auto ta = csv_tree(a);
  const auto tb = csv_tree(b);
  if (ta.empty()) return {false, "no CSV output"};
  if (ta != tb) return {false, "CSV trees differ"};
  return {true, std::to_string(ta.size()) + " CSV files byte-identical" + (cli.empty() ? " (in-process)" : " (via CLI)")};
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path scratch = argc > 1 ? fs::path(argv[1]) : fs::temp_directory_path() / "chebsig_acceptance";
  const std::string cli = argc > 2 ? argv[2] : "";
  fs::create_directories(scratch);

  const std::vector<Criterion> criteria{
      {1, "arctan coefficients", 1.0, criterion_atan},
      {2, "degree-9 second-kind nodes", 1.0, criterion_degree9_nodes},
      {3, "Chebyshev vs Legendre node distance", 1.0, criterion_compare_nodes},
      {4, "basis conditioning", 5.0, criterion_conditioning},
      {5, "convergence threshold", 30.0, criterion_convergence},
      {6, "gamma reconstruction, even nodes", 2.0, criterion_gamma_even},
      {7, "uneven nodes", 2.0, criterion_uneven},
      {8, "property suites", 120.0, criterion_properties},
      {9, "run-all determinism", 120.0, [&] { return criterion_determinism(scratch, cli); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.time_limit;
    const bool ok = o.passed && in_time;
    failures += ok ? 0 : 1;
    std::cout << "criterion " << c.id << " [" << (ok ? "PASS" : "FAIL") << "] " << c.title << ": " << o.detail
              << "; runtime " << fmt(secs) << " s (limit " << fmt(c.time_limit) << " s"
              << (in_time ? "" : ", EXCEEDED") << ")\n";
  }
  std::cout << (9 - failures) << "/9 criteria passed\n";
  return failures == 0 ? 0 : 1;
}

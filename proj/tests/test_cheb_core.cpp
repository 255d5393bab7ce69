#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chebsig/cheb_core.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace chebsig;

namespace {

constexpr double eps = 0x1p-52;
const double pi = std::numbers::pi;

// O(n^2) cosine-sum oracle for the DCT-I coefficients.
Vector<double> direct_coeffs(const Vector<double>& ascending_values) {
  const Index n = ascending_values.size() - 1;
  Vector<double> c = Vector<double>::Zero(n + 1);
  for (Index k = 0; k <= n; ++k) {
    double acc = 0.0;
    for (Index j = 0; j <= n; ++j) {
      const double w = (j == 0 || j == n) ? 0.5 : 1.0;
      acc += w * ascending_values[n - j] * std::cos(pi * double(j * k) / double(n));
    }
    c[k] = acc * 2.0 / double(n);
  }
  c[0] *= 0.5;
  c[n] *= 0.5;
  return c;
}

Vector<double> random_values(Index count, unsigned seed) {
  std::mt19937_64 g(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Vector<double> v(count);
  for (auto& x : v) x = u(g);
  return v;
}

}  // namespace

TEST_CASE("second-kind points: symmetry, endpoints, closed form") {
  for (Index n : {1, 2, 3, 7, 16, 99, 1000}) {
    const auto x = cheb_points_second_kind<double>(n);
    CHECK(x.size() == n + 1);
    CHECK(x[0] == -1.0);
    CHECK(x[n] == 1.0);
    for (Index j = 0; j <= n; ++j) {
      CHECK(x[j] == -x[n - j]);
      CHECK(std::abs(x[j] - std::cos(pi * double(n - j) / double(n))) < 4 * eps);
    }
  }
  const auto mapped = cheb_points_second_kind<double>(8, Domain<double>(0.0, 3.0));
  CHECK(mapped[0] == 0.0);
  CHECK(mapped[8] == 3.0);
  CHECK(mapped[4] == doctest::Approx(1.5));
  CHECK_THROWS_AS(cheb_points_second_kind<double>(0), InvalidArgument);
}

TEST_CASE("first-kind points are roots of T_n and interior") {
  for (Index n : {1, 2, 5, 64}) {
    const auto x = cheb_points_first_kind<double>(n);
    for (Index j = 0; j < n; ++j) {
      CHECK(std::abs(eval_cheb_poly(n, x[j])) < 1e-13);
      CHECK(std::abs(x[j]) < 1.0);
      CHECK(x[j] == -x[n - 1 - j]);
    }
  }
  const auto ext = cheb_extrema_nodes<double>(6);
  CHECK(ext[0] == 1.0);
  CHECK(ext[6] == -1.0);
  for (Index k = 0; k <= 6; ++k) CHECK(std::abs(std::abs(eval_cheb_poly(6, ext[k])) - 1.0) < 1e-14);
  CHECK(cheb_root_nodes<double>(5) == cheb_points_first_kind<double>(5).points());
}

TEST_CASE("T_k recurrence matches cos(k acos x)") {
  for (Index k = 0; k <= 30; ++k) {
    for (double x : {-1.0, -0.7, 0.0, 0.3, 0.999, 1.0}) {
      CHECK(eval_cheb_poly(k, x) == doctest::Approx(std::cos(double(k) * std::acos(x))).epsilon(1e-12));
    }
  }
  CHECK(eval_cheb_poly(3, 2.0) == doctest::Approx(26.0));
}

TEST_CASE("values_to_coeffs matches direct cosine sums") {
  for (Index count : {2, 3, 5, 17, 33, 100, 257}) {
    const auto v = random_values(count, unsigned(count));
    const Vector<double> fast = values_to_coeffs(v);
    const Vector<double> slow = direct_coeffs(v);
    CHECK((fast - slow).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("transform round trip and node reproduction") {
  for (Index count : {2, 9, 64, 513, 4097}) {
    const auto v = random_values(count, 7u + unsigned(count));
    const Vector<double> back = coeffs_to_values(values_to_coeffs(v));
    CHECK((back - v).cwiseAbs().maxCoeff() <= 50 * eps);
  }
  // Clenshaw at the nodes: rounding in the nodes grows like n^2 eps for
  // rough data, so the tight bound is asserted only for small n and for
  // smooth data.
  for (Index count : {2, 5, 9, 17}) {
    const auto v = random_values(count, 3u);
    const auto p = interpolant_from_values(v, Domain<double>::unit());
    const auto nodes = cheb_points_second_kind<double>(count - 1);
    CHECK((evaluate(p, nodes.points()) - v).cwiseAbs().maxCoeff() <= 50 * eps);
  }
  const auto smooth = interpolant_from_function([](double x) { return std::exp(x); },
                                                Domain<double>::unit(), FixedDegree{1000});
  const auto nodes = cheb_points_second_kind<double>(1000);
  for (Index j = 0; j <= 1000; ++j) CHECK(std::abs(smooth(nodes[j]) - std::exp(nodes[j])) <= 50 * eps * std::exp(1.0));
}

TEST_CASE("interpolant is exact for polynomials (Vandermonde oracle)") {
  // Coefficients of the monomial 1 + 2x - 3x^3 + x^5 in the Chebyshev basis.
  auto f = [](double x) { return 1 + 2 * x - 3 * x * x * x + std::pow(x, 5); };
  const auto p = interpolant_from_function(f, Domain<double>::unit(), FixedDegree{5});
  // Solve the Chebyshev-Vandermonde system on first-kind points independently.
  const auto xs = cheb_points_first_kind<double>(6);
  Eigen::MatrixXd V(6, 6);
  Eigen::VectorXd rhs(6);
  for (Index i = 0; i < 6; ++i) {
    for (Index k = 0; k < 6; ++k) V(i, k) = eval_cheb_poly(k, xs[i]);
    rhs[i] = f(xs[i]);
  }
  const Eigen::VectorXd c = V.colPivHouseholderQr().solve(rhs);
  CHECK((p.coeffs() - c).cwiseAbs().maxCoeff() < 1e-13);
  for (double x : {-0.9, -0.1, 0.42, 0.77}) CHECK(p(x) == doctest::Approx(f(x)).epsilon(1e-14));
}

TEST_CASE("atan coefficients against quadrature") {
  const auto p = interpolant_from_function<double>([](double x) { return std::atan(x); },
                                                   Domain<double>::unit(), Adaptive{});
  // a_k = (2/pi) int_0^pi atan(cos t) cos(k t) dt, by a 4000-point midpoint rule
  // (spectrally accurate for periodic integrands).
  for (Index k : {1, 3, 5}) {
    const int m = 4000;
    double acc = 0.0;
    for (int i = 0; i < m; ++i) {
      const double t = pi * (i + 0.5) / m;
      acc += std::atan(std::cos(t)) * std::cos(double(k) * t);
    }
    const double ak = 2.0 / pi * acc * pi / m;
    CHECK(std::abs(p.coeffs()[k] - ak) < 1e-14);
  }
  CHECK(std::abs(p.coeffs()[1] - 0.828427124746190) < 1e-12);
  CHECK(std::abs(p.coeffs()[3] + 0.047378541243650) < 1e-12);
  CHECK(std::abs(p.coeffs()[5] - 0.004877323527903) < 1e-12);
  for (Index k = 0; k < p.length(); k += 2) CHECK(std::abs(p.coeffs()[k]) < 1e-15);
}

TEST_CASE("barycentric evaluation") {
  const auto nodes = cheb_points_second_kind<double>(40, Domain<double>(1.0, 4.0));
  Vector<double> v(41);
  for (Index j = 0; j <= 40; ++j) v[j] = std::sin(nodes[j]);
  for (Index j = 0; j <= 40; ++j) CHECK(evaluate_barycentric(v, nodes, nodes[j]) == v[j]);
  for (double x : {1.1, 2.5, 3.99}) CHECK(evaluate_barycentric(v, nodes, x) == doctest::Approx(std::sin(x)).epsilon(1e-13));
  const auto p = interpolant_from_values(v, nodes.domain());
  CHECK(evaluate_barycentric(v, nodes, 2.2) == doctest::Approx(p(2.2)).epsilon(1e-13));
  const auto first = cheb_points_first_kind<double>(41);
  CHECK_THROWS_AS(evaluate_barycentric(v, first, 0.0), InvalidArgument);
}

TEST_CASE("derivative against finite differences and exact rules") {
  const Domain<double> dom(-2.0, 3.0);
  const auto p = interpolant_from_function<double>([](double x) { return std::sin(2 * x) * std::exp(x / 3); }, dom, Adaptive{});
  const auto dp = derivative(p);
  for (double x : {-1.5, 0.0, 1.3, 2.7}) {
    const double h = 1e-5;
    const double fd = (p(x + h) - p(x - h)) / (2 * h);
    CHECK(dp(x) == doctest::Approx(fd).epsilon(1e-8));
    const double exact = 2 * std::cos(2 * x) * std::exp(x / 3) + std::sin(2 * x) * std::exp(x / 3) / 3;
    CHECK(dp(x) == doctest::Approx(exact).epsilon(1e-11));
  }
  // T_n' = n U_{n-1}; at x = 1 this is n^2.
  for (Index n : {1, 2, 7, 20}) {
    Vector<double> c = Vector<double>::Zero(n + 1);
    c[n] = 1.0;
    const auto d = derivative(ChebInterpolant<double>(c, Domain<double>::unit()));
    CHECK(d(1.0) == doctest::Approx(double(n * n)));
    CHECK(d.length() == n);
  }
  const auto constant = derivative(ChebInterpolant<double>(Vector<double>::Constant(1, 5.0), Domain<double>::unit()));
  CHECK(constant.coeffs()[0] == 0.0);
}

TEST_CASE("min_and_max against dense grid") {
  for (Index count : {10, 100, 1000}) {
    const auto v = random_values(count, 42u);
    const auto p = interpolant_from_values(v, Domain<double>::unit());
    const auto ext = min_and_max(p);
    // Dense cosine grid, then golden-section refinement around the best cell.
    const int m = 200000;
    int imin = 0, imax = 0;
    for (int i = 0; i <= m; ++i) {
      const double y = p(std::cos(pi * i / m));
      if (y < p(std::cos(pi * imin / m))) imin = i;
      if (y > p(std::cos(pi * imax / m))) imax = i;
    }
    auto refine = [&](int i, double sign) {
      double lo = std::cos(pi * std::min(i + 1, m) / m), hi = std::cos(pi * std::max(i - 1, 0) / m);
      const double g = (std::sqrt(5.0) - 1) / 2;
      for (int it = 0; it < 100; ++it) {
        const double a = hi - g * (hi - lo), b = lo + g * (hi - lo);
        if (sign * p(a) > sign * p(b)) hi = b; else lo = a;
      }
      return std::max(sign * p(0.5 * (lo + hi)), sign * p(std::cos(pi * i / m))) * sign;
    };
    const double gmin = refine(imin, -1.0);
    const double gmax = refine(imax, 1.0);
    CHECK(ext.max >= gmax - 1e-12);
    CHECK(ext.min <= gmin + 1e-12);
    CHECK(ext.max - gmax < 1e-12);
    CHECK(gmin - ext.min < 1e-12);
    CHECK(ext.max >= v.maxCoeff() - 1e-12);
    CHECK(ext.min <= v.minCoeff() + 1e-12);
    CHECK(p(ext.argmax) == doctest::Approx(ext.max));
  }
  const auto parabola = interpolant_from_function([](double x) { return (x - 0.3) * (x - 0.3); },
                                                  Domain<double>(-1.0, 2.0), FixedDegree{2});
  const auto e = min_and_max(parabola);
  CHECK(e.argmin == doctest::Approx(0.3).epsilon(1e-10));
  CHECK(std::abs(e.min) < 1e-14);
  CHECK(e.max == doctest::Approx(2.89));
  CHECK(e.argmax == 2.0);
}

TEST_CASE("adaptive construction") {
  const auto unit = Domain<double>::unit();
  const auto c = interpolant_from_function<double>([](double) { return 3.0; }, unit, Adaptive{});
  CHECK(c.length() == 1);
  const auto e = interpolant_from_function<double>([](double x) { return std::exp(x); }, unit, Adaptive{});
  CHECK(e.length() >= 14);
  CHECK(e.length() <= 18);
  for (double x : {-0.99, 0.1, 0.87}) CHECK(std::abs(e(x) - std::exp(x)) < 1e-14);
  // sin(kx) lengths increase with k.
  Index prev = 0;
  for (double k : {1.0, 4.0, 16.0, 64.0, 256.0}) {
    const auto p = interpolant_from_function<double>([k](double x) { return std::sin(k * x); }, unit, Adaptive{});
    CHECK(p.length() > prev);
    prev = p.length();
  }
  // Non-smooth data cannot be resolved; the best attempt comes back with the error.
  bool thrown = false;
  try {
    interpolant_from_function<double>([](double x) { return std::sqrt(std::abs(x)); }, unit, Adaptive{1e-16, 3, 8});
  } catch (const Unresolved<double>& u) {
    thrown = true;
    CHECK(u.best().length() == 257);
  }
  CHECK(thrown);
  CHECK_THROWS_AS(interpolant_from_function<double>([](double x) { return 1.0 / x; }, unit, FixedDegree{2}),
                  InvalidArgument);
}

TEST_CASE("standard_chop and truncate") {
  Vector<double> c(80);
  for (Index k = 0; k < 80; ++k) c[k] = std::pow(0.3, double(k));
  for (Index k = 30; k < 80; ++k) c[k] = 1e-17 * (1.0 + 0.5 * std::sin(double(k)));
  const Index keep = standard_chop(c, eps);
  CHECK(keep >= 28);
  CHECK(keep <= 32);
  CHECK(standard_chop(Vector<double>(Vector<double>::Ones(40)), eps) == 40);
  CHECK(standard_chop(Vector<double>(Vector<double>::Ones(5)), eps) == 5);

  Vector<double> t(6);
  t << 1.0, 0.5, 1e-3, 1e-20, 1e-19, 0.0;
  const auto p = truncate(ChebInterpolant<double>(t, Domain<double>::unit()), 1e-16);
  CHECK(p.length() == 3);
  const auto zero = truncate(ChebInterpolant<double>(Vector<double>::Zero(4), Domain<double>::unit()), 1e-16);
  CHECK(zero.length() == 4);
  CHECK_THROWS_AS(truncate(p, 0.0), InvalidArgument);
}

TEST_CASE("domain mapping and argument validation") {
  CHECK_THROWS_AS(Domain<double>(1.0, 1.0), InvalidArgument);
  const Domain<double> d(2.0, 6.0);
  CHECK(d.from_unit(-1.0) == 2.0);
  CHECK(d.to_unit(4.0) == 0.0);
  CHECK_THROWS_AS(interpolant_from_values(Vector<double>(Vector<double>::Ones(1)), Domain<double>::unit()), InvalidArgument);
  Vector<double> bad(3);
  bad << 1.0, NAN, 2.0;
  CHECK_THROWS_AS(interpolant_from_values(bad, Domain<double>::unit()), InvalidArgument);
  Vector<double> unsorted(3);
  unsorted << 0.0, 0.5, 0.2;
  CHECK_THROWS_AS(NodeSet<double>(NodeKind::Custom, unsorted, Domain<double>::unit()), InvalidArgument);
}

TEST_CASE("long double instantiation") {
  const auto p = interpolant_from_function<long double>([](long double x) { return std::exp(x); },
                                                        Domain<long double>::unit(), FixedDegree{20});
  CHECK(std::abs(p(0.5L) - std::exp(0.5L)) < 1e-17L);
}

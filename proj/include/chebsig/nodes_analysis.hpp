#pragma once

// Legendre nodes, node-set comparison and geometric mean distances.

#include "chebsig/types.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

namespace chebsig {

template <typename Scalar>
struct DistanceProfile {
  Vector<Scalar> points;
  Vector<Scalar> gm_distance;
};

/// P_n(x) and P_n'(x) from the three-term recurrence.
template <typename Scalar>
std::pair<Scalar, Scalar> legendre_eval(Index n, Scalar x) {
  if (n == 0) return {Scalar(1), Scalar(0)};
  Scalar p0 = Scalar(1);
  Scalar p1 = x;
  for (Index k = 1; k < n; ++k) {
    const Scalar p2 = (Scalar(2 * k + 1) * x * p1 - Scalar(k) * p0) / Scalar(k + 1);
    p0 = p1;
    p1 = p2;
  }
  // (1 - x^2) P_n' = n (P_{n-1} - x P_n)
  const Scalar dp = Scalar(n) * (p0 - x * p1) / (Scalar(1) - x * x);
  return {p1, dp};
}

/// Roots of P_n, ascending. Newton from cos(pi (4k - 1) / (4n + 2)) on the
/// positive half, mirrored to the negative half; x = 0 is exact for odd n.
template <typename Scalar = double>
NodeSet<Scalar> legendre_points(Index n) {
  if (n < 1) throw InvalidArgument("Legendre points need n >= 1");
  const Scalar pi = std::numbers::pi_v<Scalar>;
  const Scalar tol = Scalar(1e-15);
  Vector<Scalar> x(n);
  const Index half = n / 2;
  for (Index k = 1; k <= half; ++k) {
    Scalar r = std::cos(pi * Scalar(4 * k - 1) / Scalar(4 * n + 2));
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
      const auto [p, dp] = legendre_eval(n, r);
      const Scalar dx = p / dp;
      r -= dx;
      if (std::abs(dx) < tol) {
        converged = true;
        break;
      }
    }
    if (!converged) throw NumericalError("Newton iteration for Legendre roots did not converge");
    x[n - k] = r;
    x[k - 1] = -r;
  }
  if (n % 2 == 1) x[half] = Scalar(0);
  return NodeSet<Scalar>(NodeKind::Legendre, std::move(x), Domain<Scalar>::unit());
}

/// max_j |a_j - b_j|. NodeSet points are already ascending.
template <typename Scalar>
Scalar compare_nodes(const NodeSet<Scalar>& a, const NodeSet<Scalar>& b) {
  if (a.size() != b.size()) throw InvalidArgument("node sets differ in size");
  return (a.points() - b.points()).cwiseAbs().maxCoeff();
}

/// Geometric mean of the distances from each point to the other points:
/// (prod_{i != j} |x_j - x_i|)^(1 / (count - 1)), accumulated in logs.
template <typename Scalar>
DistanceProfile<Scalar> mean_distance(const Vector<Scalar>& points) {
  const Index n = points.size();
  if (n < 2) throw InvalidArgument("mean distance needs at least two points");
  DistanceProfile<Scalar> out{points, Vector<Scalar>(n)};
  for (Index j = 0; j < n; ++j) {
    Scalar log_sum = Scalar(0);
    for (Index i = 0; i < n; ++i) {
      if (i == j) continue;
      const Scalar d = std::abs(points[j] - points[i]);
      if (d == Scalar(0)) throw InvalidArgument("duplicate points");
      log_sum += std::log(d);
    }
    out.gm_distance[j] = std::exp(log_sum / Scalar(n - 1));
  }
  return out;
}

/// Smallest even n >= 2 for which cos(j pi / n) at j = n/2, computed in
/// binary64 as cos((j * pi) / n), is not exactly zero.
inline int smallest_nonzero_midpoint(int search_cap = 1'000'000) {
  for (int n = 2; n <= search_cap; n += 2) {
    const double j = n / 2;
    const double x = std::cos((j * std::numbers::pi) / double(n));
    if (x != 0.0) return n;
  }
  throw NumericalError("no nonzero midpoint below the search cap");
}

}  // namespace chebsig

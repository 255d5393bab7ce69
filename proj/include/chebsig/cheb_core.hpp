#pragma once

// Chebyshev series kernel: node families, coefficient transforms, Clenshaw
// and barycentric evaluation, differentiation, extrema and truncation.
//
// Coefficients are stored in ascending degree order, a_0 first. Values
// passed to or returned from the transforms are ordered like the nodes,
// i.e. ascending in x.

#include "chebsig/fft.hpp"
#include "chebsig/types.hpp"

#include <algorithm>
#include <cmath>
#include <concepts>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

namespace chebsig {

/// Series sum_k a_k T_k(u) with u the affine image of x in [-1, 1].
template <typename Scalar>
class ChebInterpolant {
 public:
  ChebInterpolant(Vector<Scalar> coeffs, Domain<Scalar> domain)
      : coeffs_(std::move(coeffs)), domain_(domain) {
    if (coeffs_.size() == 0) {
      throw InvalidArgument("interpolant needs at least one coefficient");
    }
  }

  const Vector<Scalar>& coeffs() const { return coeffs_; }
  const Domain<Scalar>& domain() const { return domain_; }
  Index length() const { return coeffs_.size(); }
  Index degree() const { return coeffs_.size() - 1; }

  Scalar operator()(Scalar x) const;

 private:
  Vector<Scalar> coeffs_;
  Domain<Scalar> domain_;
};

/// Thrown by the adaptive constructor when 2^16 + 1 samples do not resolve
/// the function; carries the finest interpolant that was built.
template <typename Scalar>
class Unresolved : public NumericalError {
 public:
  explicit Unresolved(ChebInterpolant<Scalar> best)
      : NumericalError("unresolved: adaptive construction did not converge"),
        best_(std::move(best)) {}
  const ChebInterpolant<Scalar>& best() const { return best_; }

 private:
  ChebInterpolant<Scalar> best_;
};

// ---------------------------------------------------------------------------
// Nodes

/// n+1 points cos(j pi / n) in ascending order, mapped to `domain`.
/// Built as sin(pi m / 2n), m = -n, -n+2, ..., n, with the upper half
/// mirrored from the lower so that x_j == -x_{n-j} exactly on [-1, 1].
template <typename Scalar = double>
NodeSet<Scalar> cheb_points_second_kind(Index n,
                                        Domain<Scalar> domain = Domain<Scalar>::unit()) {
  if (n < 1) throw InvalidArgument("second-kind points need degree n >= 1");
  Vector<Scalar> x(n + 1);
  const Scalar pi = std::numbers::pi_v<Scalar>;
  for (Index j = 0; 2 * j < n; ++j) {
    const Scalar m = Scalar(-n + 2 * j);
    x[j] = std::sin(pi * m / Scalar(2 * n));
    x[n - j] = -x[j];
  }
  if (n % 2 == 0) x[n / 2] = Scalar(0);
  x[0] = Scalar(-1);
  x[n] = Scalar(1);

  if (!domain.is_unit()) {
    for (Index j = 0; j <= n; ++j) x[j] = domain.from_unit(x[j]);
    x[0] = domain.a();
    x[n] = domain.b();
  }
  return NodeSet<Scalar>(NodeKind::ChebSecond, std::move(x), domain);
}

/// `count` points cos((2j+1) pi / 2count), ascending, strictly interior.
template <typename Scalar = double>
NodeSet<Scalar> cheb_points_first_kind(Index count,
                                       Domain<Scalar> domain = Domain<Scalar>::unit()) {
  if (count < 1) throw InvalidArgument("first-kind points need count >= 1");
  Vector<Scalar> x(count);
  const Scalar pi = std::numbers::pi_v<Scalar>;
  for (Index j = 0; 2 * j < count; ++j) {
    const Scalar m = Scalar(-count + 1 + 2 * j);
    x[j] = std::sin(pi * m / Scalar(2 * count));
    x[count - 1 - j] = -x[j];
  }
  if (count % 2 == 1) x[count / 2] = Scalar(0);

  if (!domain.is_unit()) {
    for (Index j = 0; j < count; ++j) x[j] = domain.from_unit(x[j]);
  }
  return NodeSet<Scalar>(NodeKind::ChebFirst, std::move(x), domain);
}

/// Extrema of T_n: cos(k pi / n), k = 0..n, in that (descending) order.
template <typename Scalar = double>
Vector<Scalar> cheb_extrema_nodes(Index n) {
  if (n < 1) throw InvalidArgument("extrema need degree n >= 1");
  return cheb_points_second_kind<Scalar>(n).points().reverse();
}

/// Roots of T_n: cos((2k+1) pi / 2n), ascending. Same values as the
/// first-kind points.
template <typename Scalar = double>
Vector<Scalar> cheb_root_nodes(Index n) {
  if (n < 1) throw InvalidArgument("roots need degree n >= 1");
  return cheb_points_first_kind<Scalar>(n).points();
}

// ---------------------------------------------------------------------------
// Evaluation

/// T_k(x) by the three-term recurrence. |x| > 1 extrapolates.
template <typename Scalar>
Scalar eval_cheb_poly(Index k, Scalar x) {
  if (k == 0) return Scalar(1);
  Scalar prev = Scalar(1);
  Scalar curr = x;
  for (Index j = 1; j < k; ++j) {
    const Scalar next = Scalar(2) * x * curr - prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

namespace detail {

template <typename Scalar>
Scalar clenshaw(const Vector<Scalar>& c, Scalar u) {
  Scalar b1 = Scalar(0);
  Scalar b2 = Scalar(0);
  const Scalar two_u = Scalar(2) * u;
  for (Index k = c.size() - 1; k >= 1; --k) {
    const Scalar b0 = c[k] + two_u * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return c[0] + u * b1 - b2;
}

}  // namespace detail

/// Clenshaw evaluation at x. Points outside the domain are extrapolated.
template <typename Scalar>
Scalar evaluate(const ChebInterpolant<Scalar>& p, Scalar x) {
  return detail::clenshaw(p.coeffs(), p.domain().to_unit(x));
}

template <typename Scalar, typename Derived>
Vector<Scalar> evaluate(const ChebInterpolant<Scalar>& p,
                        const Eigen::DenseBase<Derived>& xs) {
  Vector<Scalar> out(xs.size());
  for (Index i = 0; i < xs.size(); ++i) out[i] = evaluate(p, Scalar(xs(i)));
  return out;
}

template <typename Scalar>
Scalar ChebInterpolant<Scalar>::operator()(Scalar x) const {
  return evaluate(*this, x);
}

/// Barycentric interpolation through values at second-kind nodes.
/// Weights (-1)^j, halved at both ends. Returns values[j] exactly when
/// x == nodes[j].
template <typename Scalar>
Scalar evaluate_barycentric(const Vector<Scalar>& values,
                            const NodeSet<Scalar>& nodes, Scalar x) {
  if (nodes.kind() != NodeKind::ChebSecond) {
    throw InvalidArgument("barycentric weights assume second-kind nodes");
  }
  if (values.size() != nodes.size()) {
    throw InvalidArgument("values and nodes differ in length");
  }
  const Index n = nodes.size() - 1;
  if (n == 0) return values[0];

  Scalar numer = Scalar(0);
  Scalar denom = Scalar(0);
  for (Index j = 0; j <= n; ++j) {
    const Scalar diff = x - nodes[j];
    if (diff == Scalar(0)) return values[j];
    Scalar w = (j % 2 == 0) ? Scalar(1) : Scalar(-1);
    if (j == 0 || j == n) w *= Scalar(0.5);
    const Scalar t = w / diff;
    numer += t * values[j];
    denom += t;
  }
  return numer / denom;
}

// ---------------------------------------------------------------------------
// Transforms

/// Coefficients from values at the n+1 second-kind nodes (ascending order),
/// via a type-I cosine transform computed as a length-2n FFT of the even
/// extension.
template <typename Scalar>
Vector<Scalar> values_to_coeffs(const Vector<Scalar>& values) {
  const Index count = values.size();
  if (count == 0) throw InvalidArgument("no values");
  if (count == 1) return values;
  const Index n = count - 1;

  // Reorder to x_j = cos(j pi / n), then extend evenly.
  ComplexVector<Scalar> ext(2 * n);
  for (Index j = 0; j <= n; ++j) ext[j] = values[n - j];
  for (Index j = 1; j < n; ++j) ext[2 * n - j] = ext[j];

  const ComplexVector<Scalar> spec = dft_forward(ext);
  Vector<Scalar> c(count);
  for (Index k = 0; k <= n; ++k) c[k] = spec[k].real() / Scalar(n);
  c[0] *= Scalar(0.5);
  c[n] *= Scalar(0.5);
  return c;
}

/// Inverse of values_to_coeffs: values at the len(coeffs) second-kind nodes.
template <typename Scalar>
Vector<Scalar> coeffs_to_values(const Vector<Scalar>& coeffs) {
  const Index count = coeffs.size();
  if (count == 0) throw InvalidArgument("no coefficients");
  if (count == 1) return coeffs;
  const Index n = count - 1;

  ComplexVector<Scalar> ext(2 * n);
  ext[0] = coeffs[0];
  ext[n] = coeffs[n];
  for (Index k = 1; k < n; ++k) {
    ext[k] = Scalar(0.5) * coeffs[k];
    ext[2 * n - k] = ext[k];
  }
  const ComplexVector<Scalar> spec = dft_forward(ext);
  Vector<Scalar> v(count);
  for (Index j = 0; j <= n; ++j) v[j] = spec[n - j].real();
  return v;
}

/// Interpolant through `values` sampled at the second-kind nodes of `domain`.
template <typename Scalar>
ChebInterpolant<Scalar> interpolant_from_values(const Vector<Scalar>& values,
                                                Domain<Scalar> domain) {
  if (values.size() < 2) throw InvalidArgument("need at least two values");
  if (!values.allFinite()) throw InvalidArgument("values must be finite");
  return ChebInterpolant<Scalar>(values_to_coeffs(values), domain);
}

/// Values of p at the second-kind nodes of its own domain, through the
/// inverse transform.
template <typename Scalar>
Vector<Scalar> values_at_nodes(const ChebInterpolant<Scalar>& p) {
  return coeffs_to_values(p.coeffs());
}

// ---------------------------------------------------------------------------
// Truncation

/// Number of coefficients worth keeping, found by locating the plateau
/// where the monotone envelope of |a_k| flattens into rounding noise and
/// cutting just before it. Returns coeffs.size() when no plateau exists,
/// which means the series is not yet resolved. Needs at least 17
/// coefficients to decide.
template <typename Scalar>
Index standard_chop(const Vector<Scalar>& coeffs, Scalar tol) {
  using std::log;
  using std::log10;
  const Index n = coeffs.size();
  if (tol >= Scalar(1)) return 1;
  if (n < 17) return n;

  std::vector<Scalar> env(static_cast<std::size_t>(n));
  env[n - 1] = std::abs(coeffs[n - 1]);
  for (Index j = n - 2; j >= 0; --j) env[j] = std::max(std::abs(coeffs[j]), env[j + 1]);
  if (env[0] == Scalar(0)) return 1;
  const Scalar top = env[0];
  for (auto& e : env) e /= top;

  // 1-based indices follow the usual statement of the rule.
  Index plateau = 0;
  Index j2 = 0;
  for (Index j = 2; j <= n; ++j) {
    j2 = static_cast<Index>(std::lround(1.25 * double(j) + 5.0));
    if (j2 > n) return n;
    const Scalar e1 = env[j - 1];
    const Scalar e2 = env[j2 - 1];
    if (e1 == Scalar(0)) {
      plateau = j - 1;
      break;
    }
    const Scalar r = Scalar(3) * (Scalar(1) - log(e1) / log(tol));
    if (e2 / e1 > r) {
      plateau = j - 1;
      break;
    }
  }
  if (env[plateau - 1] == Scalar(0)) return plateau;

  const Scalar floor = std::pow(tol, Scalar(7) / Scalar(6));
  Index j3 = 0;
  for (Index j = 0; j < n; ++j) j3 += (env[j] >= floor) ? 1 : 0;
  if (j3 < j2) {
    j2 = j3 + 1;
    env[j2 - 1] = floor;
  }
  // Minimise log10(envelope) plus a linear tilt to pick the cutoff.
  Index best = 0;
  Scalar best_val = std::numeric_limits<Scalar>::infinity();
  const Scalar tilt = (Scalar(-1) / Scalar(3)) * log10(tol);
  for (Index j = 0; j < j2; ++j) {
    const Scalar ramp = (j2 > 1) ? tilt * Scalar(j) / Scalar(j2 - 1) : Scalar(0);
    const Scalar val = log10(env[j]) + ramp;
    if (val < best_val) {
      best_val = val;
      best = j;
    }
  }
  return std::max<Index>(best, 1);
}

/// Drops trailing coefficients with |a_k| < tol_rel * max|a_j|; keeps a_0.
template <typename Scalar>
ChebInterpolant<Scalar> truncate(const ChebInterpolant<Scalar>& p, Scalar tol_rel) {
  if (!(tol_rel > Scalar(0))) throw InvalidArgument("tolerance must be positive");
  const Vector<Scalar>& c = p.coeffs();
  const Scalar threshold = tol_rel * c.cwiseAbs().maxCoeff();
  Index keep = c.size();
  while (keep > 1 && std::abs(c[keep - 1]) < threshold) --keep;
  return ChebInterpolant<Scalar>(c.head(keep), p.domain());
}

// ---------------------------------------------------------------------------
// Construction from a callable

struct FixedDegree {
  Index n;
};

struct Adaptive {
  double tol_rel = 0x1p-52;
  int min_level = 3;
  int max_level = 16;
};

template <typename F, typename Scalar>
concept RealFunction = requires(const F& f, Scalar x) {
  { f(x) } -> std::convertible_to<Scalar>;
};

namespace detail {

template <typename Scalar, typename F>
Vector<Scalar> sample(const F& f, const NodeSet<Scalar>& nodes) {
  Vector<Scalar> v(nodes.size());
  for (Index j = 0; j < nodes.size(); ++j) v[j] = static_cast<Scalar>(f(nodes[j]));
  if (!v.allFinite()) throw InvalidArgument("function returned non-finite values");
  return v;
}

}  // namespace detail

/// Degree-n interpolant of f at the second-kind nodes of `domain`.
template <typename Scalar, RealFunction<Scalar> F>
ChebInterpolant<Scalar> interpolant_from_function(const F& f, Domain<Scalar> domain,
                                                  FixedDegree mode) {
  const auto nodes = cheb_points_second_kind<Scalar>(mode.n, domain);
  return interpolant_from_values(detail::sample(f, nodes), domain);
}

/// Samples f on 2^k + 1 second-kind nodes for k = min_level..max_level and
/// stops at the first level whose coefficients reach a noise plateau below
/// tol_rel (see standard_chop). The result is cut at the plateau, so its
/// length() is the number of significant coefficients.
template <typename Scalar, RealFunction<Scalar> F>
ChebInterpolant<Scalar> interpolant_from_function(const F& f, Domain<Scalar> domain,
                                                  Adaptive mode) {
  const Scalar tol = static_cast<Scalar>(mode.tol_rel);
  Vector<Scalar> coeffs;
  for (int level = mode.min_level; level <= mode.max_level; ++level) {
    const Index n = Index(1) << level;
    const auto nodes = cheb_points_second_kind<Scalar>(n, domain);
    coeffs = values_to_coeffs(detail::sample(f, nodes));
    const Index keep = standard_chop(coeffs, tol);
    if (keep < coeffs.size()) {
      return ChebInterpolant<Scalar>(coeffs.head(keep), domain);
    }
  }
  throw Unresolved<Scalar>(ChebInterpolant<Scalar>(std::move(coeffs), domain));
}

// ---------------------------------------------------------------------------
// Calculus

/// Derivative series via b_{k-1} = b_{k+1} + 2k a_k, scaled by 2/(b-a).
template <typename Scalar>
ChebInterpolant<Scalar> derivative(const ChebInterpolant<Scalar>& p) {
  const Vector<Scalar>& a = p.coeffs();
  const Index n = a.size() - 1;
  if (n == 0) return ChebInterpolant<Scalar>(Vector<Scalar>::Zero(1), p.domain());

  Vector<Scalar> b = Vector<Scalar>::Zero(n);
  Scalar next = Scalar(0);  // b_{k+1}
  Scalar curr = Scalar(0);  // b_k
  for (Index k = n; k >= 1; --k) {
    const Scalar prev = next + Scalar(2 * k) * a[k];  // b_{k-1}
    b[k - 1] = prev;
    next = curr;
    curr = prev;
  }
  b[0] *= Scalar(0.5);
  b *= Scalar(2) / p.domain().length();
  return ChebInterpolant<Scalar>(std::move(b), p.domain());
}

template <typename Scalar>
struct Extrema {
  Scalar min;
  Scalar max;
  Scalar argmin;
  Scalar argmax;
};

/// Global minimum and maximum over the domain. p and p' are tabulated on a
/// cosine-spaced grid of 8*degree + 16 points by the inverse transform.
/// Brackets where p' changes sign are bisected to 1e-13 (in the unit
/// variable) when a linear model of p' says the bracket could beat the
/// best grid value.
template <typename Scalar>
Extrema<Scalar> min_and_max(const ChebInterpolant<Scalar>& p) {
  const Domain<Scalar>& dom = p.domain();
  Extrema<Scalar> ext{std::numeric_limits<Scalar>::infinity(),
                      -std::numeric_limits<Scalar>::infinity(), dom.a(), dom.a()};
  auto take = [&](Scalar u, Scalar v) {
    if (v < ext.min) {
      ext.min = v;
      ext.argmin = dom.from_unit(u);
    }
    if (v > ext.max) {
      ext.max = v;
      ext.argmax = dom.from_unit(u);
    }
  };
  auto consider = [&](Scalar u) { take(u, detail::clenshaw(p.coeffs(), u)); };

  consider(Scalar(-1));
  consider(Scalar(1));
  if (p.degree() == 0) return ext;

  // p' in the unit variable; the domain scale factor does not move roots.
  const Vector<Scalar> dc = derivative(ChebInterpolant<Scalar>(p.coeffs(), Domain<Scalar>::unit())).coeffs();
  const Index grid = 8 * p.degree() + 16;
  const auto nodes = cheb_points_second_kind<Scalar>(grid - 1);
  Vector<Scalar> padded = Vector<Scalar>::Zero(grid);
  padded.head(p.length()) = p.coeffs();
  const Vector<Scalar> pv = coeffs_to_values(padded);
  padded.setZero();
  padded.head(dc.size()) = dc;
  const Vector<Scalar> dv = coeffs_to_values(padded);

  for (Index i = 1; i + 1 < grid; ++i) take(nodes[i], pv[i]);

  for (Index i = 1; i < grid; ++i) {
    const Scalar d0 = dv[i - 1];
    const Scalar d1 = dv[i];
    if (d0 == Scalar(0) || d1 == Scalar(0) || (d0 < Scalar(0)) == (d1 < Scalar(0))) continue;
    const Scalar h = nodes[i] - nodes[i - 1];
    const Scalar slack = Scalar(4) * h * std::max(std::abs(d0), std::abs(d1));
    const bool may_max = std::max(pv[i - 1], pv[i]) + slack >= ext.max;
    const bool may_min = std::min(pv[i - 1], pv[i]) - slack <= ext.min;
    if (!may_max && !may_min) continue;

    Scalar lo = nodes[i - 1];
    Scalar hi = nodes[i];
    Scalar d_lo = detail::clenshaw(dc, lo);
    while (hi - lo > Scalar(1e-13)) {
      const Scalar mid = Scalar(0.5) * (lo + hi);
      const Scalar d_mid = detail::clenshaw(dc, mid);
      if (d_mid == Scalar(0)) {
        lo = hi = mid;
        break;
      }
      if ((d_mid < Scalar(0)) == (d_lo < Scalar(0))) {
        lo = mid;
        d_lo = d_mid;
      } else {
        hi = mid;
      }
    }
    consider(Scalar(0.5) * (lo + hi));
  }
  return ext;
}

}  // namespace chebsig

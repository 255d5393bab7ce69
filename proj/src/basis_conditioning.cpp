#include "chebsig/basis_conditioning.hpp"

#include "chebsig/cheb_core.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace chebsig {

const char* to_string(Basis basis) {
  return basis == Basis::Chebyshev ? "chebyshev" : "monomial";
}

Vector<double> clenshaw_curtis_weights(Index count) {
  if (count < 2) throw InvalidArgument("Clenshaw-Curtis rule needs at least two points");
  const Index n = count - 1;
  const double pi = std::numbers::pi;
  Vector<double> w(count);

  // Waldvogel's closed form, evaluated directly; O(n^2) is fine at these sizes.
  const bool even = (n % 2 == 0);
  const double end = even ? 1.0 / (double(n) * double(n) - 1.0) : 1.0 / (double(n) * double(n));
  w[0] = end;
  w[n] = end;
  for (Index j = 1; j < n; ++j) {
    const double theta = pi * double(j) / double(n);
    double v = 1.0;
    if (even) {
      for (Index k = 1; k < n / 2; ++k) {
        v -= 2.0 * std::cos(2.0 * double(k) * theta) / (4.0 * double(k) * double(k) - 1.0);
      }
      v -= std::cos(double(n) * theta) / (double(n) * double(n) - 1.0);
    } else {
      for (Index k = 1; k <= (n - 1) / 2; ++k) {
        v -= 2.0 * std::cos(2.0 * double(k) * theta) / (4.0 * double(k) * double(k) - 1.0);
      }
    }
    w[j] = 2.0 * v / double(n);
  }
  // Symmetric rule; theta_j and theta_{n-j} give the same weight.
  for (Index j = 1; j < n / 2 + 1; ++j) w[n - j] = w[j];
  return w;
}

BasisMatrix build_basis_matrix(Basis basis, Domain<double> domain, Index max_degree,
                               Index grid_size) {
  if (max_degree < 0) throw InvalidArgument("max_degree must be non-negative");
  if (grid_size < 4 * (max_degree + 1)) {
    throw InvalidArgument("grid_size must be at least 4 (max_degree + 1)");
  }
  const auto nodes = cheb_points_second_kind<double>(grid_size - 1);
  Vector<double> weights = clenshaw_curtis_weights(grid_size) * (domain.length() / 2.0);

  Eigen::MatrixXd entries(grid_size, max_degree + 1);
  for (Index i = 0; i < grid_size; ++i) {
    const double u = nodes[i];
    const double x = domain.from_unit(u);
    const double sw = std::sqrt(weights[i]);
    double power = 1.0;
    for (Index j = 0; j <= max_degree; ++j) {
      if (basis == Basis::Chebyshev) {
        entries(i, j) = sw * eval_cheb_poly(j, u);
      } else {
        entries(i, j) = sw * power;
        power *= x;
      }
    }
  }
  return BasisMatrix{basis, domain, max_degree, grid_size, std::move(entries)};
}

Vector<double> singular_values(const Eigen::MatrixXd& m) {
  // JacobiSVD returns them sorted in decreasing order.
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  return svd.singularValues();
}

Vector<double> singular_values(const BasisMatrix& m) { return singular_values(m.entries); }

double condition_number(const Eigen::MatrixXd& m) {
  const Vector<double> s = singular_values(m);
  const double smax = s[0];
  const double smin = s[s.size() - 1];
  if (!(smin > 1e3 * std::numeric_limits<double>::epsilon() * smax)) {
    throw NumericallySingular();
  }
  return smax / smin;
}

double condition_number(const BasisMatrix& m) { return condition_number(m.entries); }

std::vector<double> conditioning_sweep(Basis basis, Domain<double> domain, Index max_degree,
                                       Index grid_size) {
  if (max_degree < 0) throw InvalidArgument("max_degree must be non-negative");
  const BasisMatrix full = build_basis_matrix(basis, domain, max_degree, grid_size);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(max_degree + 1));
  for (Index n = 0; n <= max_degree; ++n) {
    out.push_back(condition_number(Eigen::MatrixXd(full.entries.leftCols(n + 1))));
  }
  return out;
}

}  // namespace chebsig

#pragma once

// Discrete stand-in for an infinity-by-n quasimatrix: basis functions
// sampled on a fine Chebyshev grid, rows weighted by sqrt of the
// Clenshaw-Curtis weights so that column inner products reproduce L2
// inner products over the domain.

#include "chebsig/types.hpp"

#include <vector>

namespace chebsig {

enum class Basis { Chebyshev, Monomial };

const char* to_string(Basis basis);

struct BasisMatrix {
  Basis basis;
  Domain<double> domain;
  Index max_degree;
  Index grid_size;
  Eigen::MatrixXd entries;
};

/// Clenshaw-Curtis weights for `count` second-kind points on [-1, 1],
/// ascending order.
Vector<double> clenshaw_curtis_weights(Index count);

/// grid_size x (max_degree + 1) weighted sample matrix.
/// Requires grid_size >= 4 (max_degree + 1).
BasisMatrix build_basis_matrix(Basis basis, Domain<double> domain, Index max_degree,
                               Index grid_size = 1024);

/// Singular values in descending order.
Vector<double> singular_values(const Eigen::MatrixXd& m);
Vector<double> singular_values(const BasisMatrix& m);

/// sigma_max / sigma_min. Throws NumericallySingular when sigma_min falls
/// below 1e3 * eps * sigma_max.
double condition_number(const Eigen::MatrixXd& m);
double condition_number(const BasisMatrix& m);

/// Condition numbers of the leading 1, 2, ..., max_degree + 1 columns.
std::vector<double> conditioning_sweep(Basis basis, Domain<double> domain, Index max_degree,
                                       Index grid_size = 1024);

class NumericallySingular : public NumericalError {
 public:
  NumericallySingular() : NumericalError("numerically singular") {}
};

}  // namespace chebsig

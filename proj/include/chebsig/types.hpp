#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace chebsig {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using ComplexVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

/// Raised when an argument violates an operation's precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computation cannot produce a trustworthy result.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Closed interval [a, b] with a < b.
template <typename Scalar>
class Domain {
 public:
  Domain() = default;
  Domain(Scalar a, Scalar b) : a_(a), b_(b) {
    if (!(a < b)) {
      throw InvalidArgument("domain requires a < b");
    }
  }

  static Domain unit() { return Domain(Scalar(-1), Scalar(1)); }

  Scalar a() const { return a_; }
  Scalar b() const { return b_; }
  Scalar length() const { return b_ - a_; }
  bool is_unit() const { return a_ == Scalar(-1) && b_ == Scalar(1); }
  bool contains(Scalar x) const { return a_ <= x && x <= b_; }

  // Affine maps between [-1, 1] and [a, b]. The unit domain maps exactly.
  Scalar from_unit(Scalar u) const {
    if (is_unit()) return u;
    return Scalar(0.5) * (b_ + a_) + Scalar(0.5) * (b_ - a_) * u;
  }
  Scalar to_unit(Scalar x) const {
    if (is_unit()) return x;
    return (Scalar(2) * x - (a_ + b_)) / (b_ - a_);
  }

  friend bool operator==(const Domain&, const Domain&) = default;

 private:
  Scalar a_ = Scalar(-1);
  Scalar b_ = Scalar(1);
};

enum class NodeKind { ChebFirst, ChebSecond, Legendre, Uniform, Custom };

inline const char* to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::ChebFirst: return "cheb_first";
    case NodeKind::ChebSecond: return "cheb_second";
    case NodeKind::Legendre: return "legendre";
    case NodeKind::Uniform: return "uniform";
    case NodeKind::Custom: return "custom";
  }
  return "unknown";
}

/// Strictly increasing sample abscissae tagged with their family and domain.
template <typename Scalar>
class NodeSet {
 public:
  NodeSet(NodeKind kind, Vector<Scalar> points, Domain<Scalar> domain)
      : kind_(kind), points_(std::move(points)), domain_(domain) {
    if (points_.size() == 0) {
      throw InvalidArgument("node set must not be empty");
    }
    for (Index j = 0; j < points_.size(); ++j) {
      if (!domain_.contains(points_[j])) {
        throw InvalidArgument("node outside of domain");
      }
      if (j > 0 && !(points_[j - 1] < points_[j])) {
        throw InvalidArgument("nodes must be strictly increasing");
      }
    }
  }

  NodeKind kind() const { return kind_; }
  const Vector<Scalar>& points() const { return points_; }
  const Domain<Scalar>& domain() const { return domain_; }
  Index size() const { return points_.size(); }
  Scalar operator[](Index j) const { return points_[j]; }

 private:
  NodeKind kind_;
  Vector<Scalar> points_;
  Domain<Scalar> domain_;
};

}  // namespace chebsig

#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace yamabe {

/// Truncated second-order multivariate Taylor polynomial.
///
/// Stores the value, the gradient with respect to `dim()` seeded chart
/// coordinates, and the packed upper triangle of the Hessian. Arithmetic
/// propagates all three exactly, so evaluating a smooth rule on seeded
/// variables yields its first and second partials to machine precision.
///
/// A jet with `dim() == 0` is a plain constant and combines with jets of any
/// dimension.
class Jet2 {
 public:
  Jet2() = default;
  Jet2(double value) : dim_(0), coeffs_{value} {}  // NOLINT: implicit on purpose

  static Jet2 constant(double value, int dim);
  static Jet2 variable(double value, int dim, int index);

  int dim() const { return dim_; }
  double value() const { return coeffs_[0]; }
  double d(int i) const { return dim_ == 0 ? 0.0 : coeffs_[1 + i]; }
  double d2(int i, int j) const {
    return dim_ == 0 ? 0.0 : coeffs_[1 + dim_ + packed(i, j)];
  }

  Jet2& operator+=(const Jet2& o);
  Jet2& operator-=(const Jet2& o);
  Jet2& operator*=(const Jet2& o);
  Jet2& operator/=(const Jet2& o);

  friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
  friend Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
  friend Jet2 operator*(Jet2 a, const Jet2& b) { return a *= b; }
  friend Jet2 operator/(Jet2 a, const Jet2& b) { return a /= b; }
  friend Jet2 operator-(Jet2 a);

  /// Chain rule for a scalar function with value f0 and derivatives f1, f2
  /// at value().
  Jet2 compose(double f0, double f1, double f2) const;

 private:
  int packed(int i, int j) const {
    if (i > j) std::swap(i, j);
    // row-major upper triangle
    return i * dim_ - i * (i - 1) / 2 + (j - i);
  }
  void promote(int dim);

  int dim_ = 0;
  std::vector<double> coeffs_{0.0};
};

Jet2 sin(const Jet2& a);
Jet2 cos(const Jet2& a);
Jet2 exp(const Jet2& a);
Jet2 log(const Jet2& a);
Jet2 sqrt(const Jet2& a);
Jet2 sinh(const Jet2& a);
Jet2 cosh(const Jet2& a);
Jet2 pow(const Jet2& a, double p);
Jet2 square(const Jet2& a);

}  // namespace yamabe

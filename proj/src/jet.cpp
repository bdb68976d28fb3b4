#include "yamabe/jet.hpp"

#include <algorithm>
#include <utility>

namespace yamabe {

Jet2 Jet2::constant(double value, int dim) {
  Jet2 j;
  j.dim_ = dim;
  j.coeffs_.assign(1 + dim + dim * (dim + 1) / 2, 0.0);
  j.coeffs_[0] = value;
  return j;
}

Jet2 Jet2::variable(double value, int dim, int index) {
  Jet2 j = constant(value, dim);
  j.coeffs_[1 + index] = 1.0;
  return j;
}

void Jet2::promote(int dim) {
  if (dim <= dim_) return;
  // only constants are ever promoted; mixing two seeded dimensions is a bug
  *this = constant(value(), dim);
}

Jet2& Jet2::operator+=(const Jet2& o) {
  promote(o.dim_);
  if (o.dim_ == 0) {
    coeffs_[0] += o.coeffs_[0];
  } else {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  }
  return *this;
}

Jet2& Jet2::operator-=(const Jet2& o) {
  promote(o.dim_);
  if (o.dim_ == 0) {
    coeffs_[0] -= o.coeffs_[0];
  } else {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  }
  return *this;
}

Jet2& Jet2::operator*=(const Jet2& o) {
  if (o.dim_ == 0) {
    for (double& c : coeffs_) c *= o.coeffs_[0];
    return *this;
  }
  if (dim_ == 0) {
    const double s = coeffs_[0];
    *this = o;
    for (double& c : coeffs_) c *= s;
    return *this;
  }
  const int n = dim_;
  const double a0 = value();
  const double b0 = o.value();
  std::vector<double> out(coeffs_.size());
  out[0] = a0 * b0;
  for (int i = 0; i < n; ++i) out[1 + i] = a0 * o.d(i) + b0 * d(i);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const int k = 1 + n + packed(i, j);
      out[k] = a0 * o.coeffs_[k] + b0 * coeffs_[k] + d(i) * o.d(j) + o.d(i) * d(j);
    }
  }
  coeffs_ = std::move(out);
  return *this;
}

Jet2& Jet2::operator/=(const Jet2& o) {
  const double b0 = o.value();
  return *this *= o.compose(1.0 / b0, -1.0 / (b0 * b0), 2.0 / (b0 * b0 * b0));
}

Jet2 operator-(Jet2 a) {
  for (double& c : a.coeffs_) c = -c;
  return a;
}

Jet2 Jet2::compose(double f0, double f1, double f2) const {
  Jet2 r = *this;
  r.coeffs_[0] = f0;
  const int n = dim_;
  for (int i = 0; i < n; ++i) r.coeffs_[1 + i] = f1 * d(i);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const int k = 1 + n + packed(i, j);
      r.coeffs_[k] = f1 * coeffs_[k] + f2 * d(i) * d(j);
    }
  }
  return r;
}

Jet2 sin(const Jet2& a) {
  const double s = std::sin(a.value()), c = std::cos(a.value());
  return a.compose(s, c, -s);
}

Jet2 cos(const Jet2& a) {
  const double s = std::sin(a.value()), c = std::cos(a.value());
  return a.compose(c, -s, -c);
}

Jet2 exp(const Jet2& a) {
  const double e = std::exp(a.value());
  return a.compose(e, e, e);
}

Jet2 log(const Jet2& a) {
  const double v = a.value();
  return a.compose(std::log(v), 1.0 / v, -1.0 / (v * v));
}

Jet2 sqrt(const Jet2& a) {
  const double s = std::sqrt(a.value());
  return a.compose(s, 0.5 / s, -0.25 / (s * a.value()));
}

Jet2 sinh(const Jet2& a) {
  const double s = std::sinh(a.value()), c = std::cosh(a.value());
  return a.compose(s, c, s);
}

Jet2 cosh(const Jet2& a) {
  const double s = std::sinh(a.value()), c = std::cosh(a.value());
  return a.compose(c, s, c);
}

Jet2 pow(const Jet2& a, double p) {
  const double v = a.value();
  return a.compose(std::pow(v, p), p * std::pow(v, p - 1.0),
                   p * (p - 1.0) * std::pow(v, p - 2.0));
}

Jet2 square(const Jet2& a) { return a * a; }

}  // namespace yamabe

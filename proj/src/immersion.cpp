#include "yamabe/immersion.hpp"

#include <cmath>
#include <sstream>

#include "yamabe/errors.hpp"

namespace yamabe {

namespace {

std::string format_point(const Vector& u) {
  std::ostringstream os;
  os.precision(17);
  os << "(";
  for (Eigen::Index i = 0; i < u.size(); ++i) os << (i ? ", " : "") << u[i];
  os << ")";
  return os.str();
}

void check_finite(const Immersion& imm, const Vector& u, double v) {
  if (!std::isfinite(v)) {
    throw GeometryError(ErrorKind::kNonFinite, imm.name() +
                                                   ": non-finite evaluation at " +
                                                   format_point(u));
  }
}

}  // namespace

bool Box::contains(const Vector& u) const {
  if (u.size() != lower.size()) return false;
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    if (!(u[i] >= lower[i] && u[i] <= upper[i])) return false;
  }
  return true;
}

Box Box::shrunk(double margin) const {
  Box b{lower.array() + margin, upper.array() - margin};
  for (Eigen::Index i = 0; i < b.lower.size(); ++i) {
    if (b.lower[i] > b.upper[i]) {
      throw GeometryError(ErrorKind::kInvalidArgument,
                          "box too small for margin");
    }
  }
  return b;
}

Immersion::Immersion(std::string name, int chart_dim, int ambient_dim,
                     ImmersionRule rule, Box domain)
    : name_(std::move(name)),
      chart_dim_(chart_dim),
      ambient_dim_(ambient_dim),
      rule_(std::move(rule)),
      domain_(std::move(domain)) {
  if (chart_dim_ < 1 || ambient_dim_ <= chart_dim_) {
    throw GeometryError(ErrorKind::kInvalidArgument,
                        name_ + ": need ambient dim > chart dim >= 1");
  }
  if (domain_.dim() != chart_dim_ || domain_.upper.size() != chart_dim_) {
    throw GeometryError(ErrorKind::kInvalidArgument,
                        name_ + ": domain box dimension mismatch");
  }
  if ((domain_.lower.array() > domain_.upper.array()).any()) {
    throw GeometryError(ErrorKind::kInvalidArgument,
                        name_ + ": domain box lower > upper");
  }
  if (!rule_) {
    throw GeometryError(ErrorKind::kInvalidArgument, name_ + ": empty rule");
  }
}

void Immersion::check_in_domain(const Vector& u) const {
  if (u.size() != chart_dim_) {
    throw GeometryError(ErrorKind::kInvalidArgument,
                        name_ + ": parameter point has wrong dimension");
  }
  if (!u.allFinite()) {
    throw GeometryError(ErrorKind::kInvalidArgument,
                        name_ + ": non-finite parameter point");
  }
  if (!domain_.contains(u)) {
    throw GeometryError(ErrorKind::kDomainViolation,
                        name_ + ": point " + format_point(u) + " outside domain");
  }
}

Vector Immersion::position(const Vector& u) const {
  check_in_domain(u);
  std::vector<Jet2> chart(u.data(), u.data() + u.size());
  const std::vector<Jet2> out = rule_(chart);
  Vector x(ambient_dim_);
  for (int a = 0; a < ambient_dim_; ++a) {
    x[a] = out[a].value();
    check_finite(*this, u, x[a]);
  }
  return x;
}

ImmersionJet2 evaluate_jet2(const Immersion& imm, const Vector& u) {
  imm.check_in_domain(u);
  const int n = imm.chart_dim();
  const int m = imm.ambient_dim();
  std::vector<Jet2> chart;
  chart.reserve(n);
  for (int i = 0; i < n; ++i) chart.push_back(Jet2::variable(u[i], n, i));
  const std::vector<Jet2> out = imm.apply(chart);
  if (static_cast<int>(out.size()) != m) {
    throw GeometryError(ErrorKind::kInvalidArgument,
                        imm.name() + ": rule returned wrong ambient dimension");
  }

  ImmersionJet2 jet;
  jet.value.resize(m);
  jet.d1.resize(m, n);
  jet.d2.assign(n, Matrix(m, n));
  for (int a = 0; a < m; ++a) {
    jet.value[a] = out[a].value();
    check_finite(imm, u, jet.value[a]);
    for (int i = 0; i < n; ++i) {
      jet.d1(a, i) = out[a].d(i);
      check_finite(imm, u, jet.d1(a, i));
      for (int j = 0; j < n; ++j) {
        jet.d2[i](a, j) = out[a].d2(i, j);
        check_finite(imm, u, jet.d2[i](a, j));
      }
    }
  }
  return jet;
}

ImmersionJet2 finite_difference_jet2(const Immersion& imm, const Vector& u,
                                     double step) {
  if (!(step > 0.0)) {
    throw GeometryError(ErrorKind::kInvalidArgument, "FD step must be positive");
  }
  const int n = imm.chart_dim();
  const int m = imm.ambient_dim();
  imm.check_in_domain(u);
  auto at = [&](const Vector& p) {
    if (!imm.domain().contains(p)) {
      throw GeometryError(ErrorKind::kDomainViolation,
                          imm.name() + ": FD stencil leaves domain at " +
                              format_point(p));
    }
    return imm.position(p);
  };
  auto shifted = [&](int i, double si, int j, double sj) {
    Vector p = u;
    p[i] += si * step;
    if (j >= 0) p[j] += sj * step;
    return p;
  };

  ImmersionJet2 jet;
  jet.value = at(u);
  jet.d1.resize(m, n);
  jet.d2.assign(n, Matrix(m, n));
  const double h2 = step * step;
  for (int i = 0; i < n; ++i) {
    const Vector fp = at(shifted(i, 1, -1, 0));
    const Vector fm = at(shifted(i, -1, -1, 0));
    jet.d1.col(i) = (fp - fm) / (2.0 * step);
    jet.d2[i].col(i) = (fp - 2.0 * jet.value + fm) / h2;
    for (int j = i + 1; j < n; ++j) {
      const Vector fpp = at(shifted(i, 1, j, 1));
      const Vector fpm = at(shifted(i, 1, j, -1));
      const Vector fmp = at(shifted(i, -1, j, 1));
      const Vector fmm = at(shifted(i, -1, j, -1));
      const Vector mixed = (fpp - fpm - fmp + fmm) / (4.0 * h2);
      jet.d2[i].col(j) = mixed;
      jet.d2[j].col(i) = mixed;
    }
  }
  return jet;
}

Vector directional_derivative_field(const AmbientField& field, const Vector& u,
                                    const Vector& dir, double step,
                                    const Box& domain) {
  if (!(step > 0.0)) {
    throw GeometryError(ErrorKind::kInvalidArgument, "FD step must be positive");
  }
  if (!(dir.norm() > 0.0)) {
    throw GeometryError(ErrorKind::kInvalidArgument,
                        "direction must be nonzero");
  }
  const Vector p1 = u + step * dir;
  const Vector m1 = u - step * dir;
  if (domain.contains(p1) && domain.contains(m1)) {
    return (field(p1) - field(m1)) / (2.0 * step);
  }
  const Vector p2 = u + 2.0 * step * dir;
  if (domain.contains(u) && domain.contains(p1) && domain.contains(p2)) {
    return (-3.0 * field(u) + 4.0 * field(p1) - field(p2)) / (2.0 * step);
  }
  const Vector m2 = u - 2.0 * step * dir;
  if (domain.contains(u) && domain.contains(m1) && domain.contains(m2)) {
    return (3.0 * field(u) - 4.0 * field(m1) + field(m2)) / (2.0 * step);
  }
  throw GeometryError(ErrorKind::kDomainViolation,
                      "derivative stencil leaves domain at " + format_point(u));
}

Vector directional_derivative_field(const AmbientField& field, const Vector& u,
                                    const Vector& dir, double step) {
  if (!(step > 0.0)) {
    throw GeometryError(ErrorKind::kInvalidArgument, "FD step must be positive");
  }
  if (!(dir.norm() > 0.0)) {
    throw GeometryError(ErrorKind::kInvalidArgument,
                        "direction must be nonzero");
  }
  return (field(u + step * dir) - field(u - step * dir)) / (2.0 * step);
}

}  // namespace yamabe

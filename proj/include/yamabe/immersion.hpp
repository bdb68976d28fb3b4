#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "yamabe/jet.hpp"
#include "yamabe/types.hpp"

namespace yamabe {

inline constexpr double kDefaultFdStep = 1e-4;

/// Closed axis-aligned parameter box.
struct Box {
  Vector lower;
  Vector upper;

  int dim() const { return static_cast<int>(lower.size()); }
  bool contains(const Vector& u) const;
  /// Box pulled in by `margin` on every side.
  Box shrunk(double margin) const;
};

/// Maps chart jets to ambient jets. Must be C^2 on the declared domain.
using ImmersionRule = std::function<std::vector<Jet2>(std::span<const Jet2>)>;

/// A parametrized immersion of an n-dimensional chart box into E^m.
///
/// Immutable after construction; safe to share between threads.
class Immersion {
 public:
  Immersion(std::string name, int chart_dim, int ambient_dim, ImmersionRule rule,
            Box domain);

  const std::string& name() const { return name_; }
  int chart_dim() const { return chart_dim_; }
  int ambient_dim() const { return ambient_dim_; }
  const Box& domain() const { return domain_; }

  /// Ambient position at u. Throws on domain violation or non-finite output.
  Vector position(const Vector& u) const;

  /// Raw rule application, no checks.
  std::vector<Jet2> apply(std::span<const Jet2> chart) const { return rule_(chart); }

  void check_in_domain(const Vector& u) const;

 private:
  std::string name_;
  int chart_dim_;
  int ambient_dim_;
  ImmersionRule rule_;
  Box domain_;
};

/// Value plus first and second chart partials of the immersion at a point.
struct ImmersionJet2 {
  Vector value;             // m
  Matrix d1;                // m x n, column i = d_i x
  std::vector<Matrix> d2;   // n entries of m x n; d2[i].col(j) = d_i d_j x

  int chart_dim() const { return static_cast<int>(d1.cols()); }
  int ambient_dim() const { return static_cast<int>(d1.rows()); }
};

/// Exact value/d1/d2 by second-order jet arithmetic.
ImmersionJet2 evaluate_jet2(const Immersion& imm, const Vector& u);

/// Central-difference oracle for evaluate_jet2; O(step^2) truncation error.
/// Throws kDomainViolation if any stencil point leaves the domain.
ImmersionJet2 finite_difference_jet2(const Immersion& imm, const Vector& u,
                                     double step);

using AmbientField = std::function<Vector(const Vector&)>;

/// Derivative of an ambient-valued field along chart direction `dir`.
/// Central difference when the stencil fits in `domain`, otherwise a
/// second-order one-sided stencil.
Vector directional_derivative_field(const AmbientField& field, const Vector& u,
                                    const Vector& dir, double step,
                                    const Box& domain);

/// Unbounded variant: always central.
Vector directional_derivative_field(const AmbientField& field, const Vector& u,
                                    const Vector& dir, double step);

}  // namespace yamabe

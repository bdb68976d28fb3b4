#include "yamabe/catalog.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "yamabe/errors.hpp"

namespace yamabe {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPoleMargin = 0.1;

[[noreturn]] void invalid(const SurfaceSpec& spec, const std::string& what) {
  throw GeometryError(ErrorKind::kInvalidArgument,
                      std::string(to_string(spec.kind)) + " '" + spec.name + "': " + what);
}

/// Point of the unit sphere S^k from k angles (theta_1..theta_{k-1}, phi).
std::vector<Jet2> unit_sphere(std::span<const Jet2> angles) {
  const std::size_t k = angles.size();
  std::vector<Jet2> y(k + 1);
  Jet2 prod(1.0);
  for (std::size_t j = 0; j + 1 < k; ++j) {
    y[k - j] = prod * cos(angles[j]);
    prod = prod * sin(angles[j]);
  }
  y[0] = prod * cos(angles[k - 1]);
  y[1] = prod * sin(angles[k - 1]);
  return y;
}

/// Box for k sphere angles, optionally followed by extra axes.
Box sphere_angle_box(int k, std::vector<std::pair<double, double>> extra = {}) {
  const int dim = k + static_cast<int>(extra.size());
  Box b{Vector(dim), Vector(dim)};
  for (int j = 0; j < k; ++j) {
    b.lower[j] = kPoleMargin;
    b.upper[j] = kPi - kPoleMargin;
  }
  b.lower[k - 1] = -kPi;
  b.upper[k - 1] = kPi;
  for (std::size_t j = 0; j < extra.size(); ++j) {
    b.lower[k + j] = extra[j].first;
    b.upper[k + j] = extra[j].second;
  }
  return b;
}

Box uniform_box(int dim, double lo, double hi) {
  return Box{Vector::Constant(dim, lo), Vector::Constant(dim, hi)};
}

std::pair<double, double> profile_range(Profile p) {
  switch (p) {
    case Profile::kCatenary: return {0.2, 1.0};
    case Profile::kParabola: return {0.1, 0.8};
    default: return {0.5, 2.0};
  }
}

Jet2 profile_value(Profile p, double c, const Jet2& u) {
  switch (p) {
    case Profile::kConstant: return Jet2(c);
    case Profile::kLinear: return c * u;
    case Profile::kCatenary: return cosh(u);
    case Profile::kParabola: return 1.0 + square(u);
  }
  return Jet2(0.0);
}

struct ProfileDerivs {
  double g, dg, ddg;
};

ProfileDerivs profile_derivs(Profile p, double c, double u) {
  switch (p) {
    case Profile::kConstant: return {c, 0.0, 0.0};
    case Profile::kLinear: return {c * u, c, 0.0};
    case Profile::kCatenary: return {std::cosh(u), std::sinh(u), std::cosh(u)};
    case Profile::kParabola: return {1.0 + u * u, 2.0 * u, 2.0};
  }
  return {0, 0, 0};
}

/// Scalar curvature of x = (g(u) y, u): meridian curvature k_m, sphere-direction
/// curvature k_s with multiplicity n - 1.
double rotational_scalar(Profile p, double c, int n, double u) {
  const ProfileDerivs d = profile_derivs(p, c, u);
  const double w = std::sqrt(1.0 + d.dg * d.dg);
  const double km = d.ddg / (w * w * w);
  const double ks = -1.0 / (d.g * w);
  return (n - 1) * (n - 2) * ks * ks + 2.0 * (n - 1) * km * ks;
}

PointFunction constant_fn(double v) {
  return [v](const Vector&) { return v; };
}

ConformalFlatness flat_if_applicable(int n) {
  return n >= 4 ? ConformalFlatness::kFlat : ConformalFlatness::kNotApplicable;
}

bool is_origin(const Vector& center) { return center.size() == 0 || center.isZero(0.0); }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

const char* to_string(SurfaceKind k) {
  switch (k) {
    case SurfaceKind::kHyperplane: return "hyperplane";
    case SurfaceKind::kSphere: return "sphere";
    case SurfaceKind::kCylinder: return "cylinder";
    case SurfaceKind::kCone: return "cone";
    case SurfaceKind::kRotational: return "rotational";
    case SurfaceKind::kCliffordTorus: return "clifford_torus";
    case SurfaceKind::kSphericalCurve: return "spherical_curve";
  }
  return "?";
}

const char* to_string(Profile p) {
  switch (p) {
    case Profile::kConstant: return "constant";
    case Profile::kLinear: return "linear";
    case Profile::kCatenary: return "catenary";
    case Profile::kParabola: return "parabola";
  }
  return "?";
}

const char* to_string(QuasiOutcome q) {
  switch (q) {
    case QuasiOutcome::kSoliton: return "quasi_yamabe";
    case QuasiOutcome::kNotASoliton: return "not_a_soliton";
    case QuasiOutcome::kUndefined: return "undefined";
    case QuasiOutcome::kUnderdetermined: return "underdetermined";
  }
  return "?";
}

std::optional<SurfaceKind> parse_surface_kind(const std::string& s) {
  for (SurfaceKind k : {SurfaceKind::kHyperplane, SurfaceKind::kSphere, SurfaceKind::kCylinder,
                        SurfaceKind::kCone, SurfaceKind::kRotational, SurfaceKind::kCliffordTorus,
                        SurfaceKind::kSphericalCurve}) {
    if (s == to_string(k)) return k;
  }
  return std::nullopt;
}

std::optional<Profile> parse_profile(const std::string& s) {
  for (Profile p : {Profile::kConstant, Profile::kLinear, Profile::kCatenary, Profile::kParabola}) {
    if (s == to_string(p)) return p;
  }
  return std::nullopt;
}

void validate(const SurfaceSpec& spec) {
  auto finite = [&](double v, const char* field) {
    if (!std::isfinite(v)) invalid(spec, std::string(field) + " must be finite");
  };
  switch (spec.kind) {
    case SurfaceKind::kHyperplane:
      if (spec.n < 1) invalid(spec, "n must be >= 1");
      finite(spec.offset, "offset");
      break;
    case SurfaceKind::kSphere:
      if (spec.n < 2) invalid(spec, "n must be >= 2");
      if (!(spec.r > 0.0) || !std::isfinite(spec.r)) invalid(spec, "r must be > 0");
      if (spec.center.size() != 0 && spec.center.size() != spec.n + 1) {
        invalid(spec, "center must have n + 1 = " + std::to_string(spec.n + 1) + " components");
      }
      if (!spec.center.allFinite()) invalid(spec, "center must be finite");
      break;
    case SurfaceKind::kCylinder:
    case SurfaceKind::kCliffordTorus:
      if (!(spec.r > 0.0) || !std::isfinite(spec.r)) invalid(spec, "r must be > 0");
      break;
    case SurfaceKind::kCone:
      finite(spec.slope, "slope");
      if (spec.slope == 0.0) invalid(spec, "slope must be nonzero");
      break;
    case SurfaceKind::kRotational:
      if (spec.n < 2) invalid(spec, "n must be >= 2");
      finite(spec.c, "c");
      if ((spec.profile == Profile::kConstant || spec.profile == Profile::kLinear) &&
          !(spec.c > 0.0)) {
        invalid(spec, "profile constant c must be > 0 so that g(u) > 0");
      }
      break;
    case SurfaceKind::kSphericalCurve:
      if (!(spec.r > 0.0) || !std::isfinite(spec.r)) invalid(spec, "r must be > 0");
      finite(spec.theta0, "theta0");
      finite(spec.amplitude, "amplitude");
      if (spec.theta0 - std::abs(spec.amplitude) <= 0.0 ||
          spec.theta0 + std::abs(spec.amplitude) >= kPi) {
        invalid(spec, "theta0 +- amplitude must stay inside (0, pi)");
      }
      if (spec.frequency < 0) invalid(spec, "frequency must be >= 0");
      break;
  }
}

Immersion make_surface(const SurfaceSpec& spec) {
  validate(spec);
  const std::string name = spec.name.empty() ? to_string(spec.kind) : spec.name;
  switch (spec.kind) {
    case SurfaceKind::kHyperplane: {
      const int n = spec.n;
      const double offset = spec.offset;
      return Immersion(
          name, n, n + 1,
          [offset](std::span<const Jet2> c) {
            std::vector<Jet2> x(c.begin(), c.end());
            x.emplace_back(offset);
            return x;
          },
          uniform_box(n, -2.0, 2.0));
    }
    case SurfaceKind::kSphere: {
      const double r = spec.r;
      const Vector center = is_origin(spec.center) ? Vector::Zero(spec.n + 1) : spec.center;
      return Immersion(
          name, spec.n, spec.n + 1,
          [r, center](std::span<const Jet2> c) {
            std::vector<Jet2> x = unit_sphere(c);
            for (std::size_t i = 0; i < x.size(); ++i) x[i] = r * x[i] + center[i];
            return x;
          },
          sphere_angle_box(spec.n));
    }
    case SurfaceKind::kCylinder: {
      const double r = spec.r;
      return Immersion(
          name, 2, 3,
          [r](std::span<const Jet2> c) {
            return std::vector<Jet2>{r * cos(c[0]), r * sin(c[0]), c[1]};
          },
          sphere_angle_box(1, {{0.5, 2.0}}));
    }
    case SurfaceKind::kCone: {
      const double s = spec.slope;
      return Immersion(
          name, 2, 3,
          [s](std::span<const Jet2> c) {
            return std::vector<Jet2>{s * c[1] * cos(c[0]), s * c[1] * sin(c[0]), c[1]};
          },
          sphere_angle_box(1, {{0.5, 2.0}}));
    }
    case SurfaceKind::kRotational: {
      const int n = spec.n;
      const Profile p = spec.profile;
      const double pc = spec.c;
      return Immersion(
          name, n, n + 1,
          [n, p, pc](std::span<const Jet2> c) {
            const Jet2& u = c[n - 1];
            const Jet2 g = profile_value(p, pc, u);
            std::vector<Jet2> x = unit_sphere(c.first(n - 1));
            for (Jet2& xi : x) xi = g * xi;
            x.push_back(u);
            return x;
          },
          sphere_angle_box(n - 1, {profile_range(p)}));
    }
    case SurfaceKind::kCliffordTorus: {
      const double k = spec.r / std::sqrt(2.0);
      return Immersion(
          name, 2, 4,
          [k](std::span<const Jet2> c) {
            return std::vector<Jet2>{k * cos(c[0]), k * sin(c[0]), k * cos(c[1]), k * sin(c[1])};
          },
          uniform_box(2, -kPi, kPi));
    }
    case SurfaceKind::kSphericalCurve: {
      const double r = spec.r, t0 = spec.theta0, a = spec.amplitude;
      const double f = spec.frequency;
      return Immersion(
          name, 1, 3,
          [r, t0, a, f](std::span<const Jet2> c) {
            const Jet2 th = t0 + a * sin(f * c[0]);
            return std::vector<Jet2>{r * sin(th) * cos(c[0]), r * sin(th) * sin(c[0]),
                                     r * cos(th)};
          },
          uniform_box(1, -kPi, kPi));
    }
  }
  invalid(spec, "unknown kind");
}

std::string describe(const SurfaceSpec& spec) {
  std::ostringstream os;
  switch (spec.kind) {
    case SurfaceKind::kHyperplane:
      os << "hyperplane x = (u_1, ..., u_" << spec.n << ", " << fmt(spec.offset) << ") in E^"
         << spec.n + 1;
      break;
    case SurfaceKind::kSphere:
      os << "sphere S^" << spec.n << "(" << fmt(spec.r) << ") x = r y + c, c = ";
      if (is_origin(spec.center)) {
        os << "origin";
      } else {
        os << "(";
        for (Eigen::Index i = 0; i < spec.center.size(); ++i)
          os << (i ? ", " : "") << fmt(spec.center[i]);
        os << ")";
      }
      break;
    case SurfaceKind::kCylinder:
      os << "cylinder x = (" << fmt(spec.r) << " cos phi, " << fmt(spec.r) << " sin phi, z)";
      break;
    case SurfaceKind::kCone:
      os << "cone through the origin x = (" << fmt(spec.slope) << " u cos phi, "
         << fmt(spec.slope) << " u sin phi, u)";
      break;
    case SurfaceKind::kRotational:
      os << "rotational hypersurface x = (g(u) y, u), y in S^" << spec.n - 1 << ", g(u) = ";
      switch (spec.profile) {
        case Profile::kConstant: os << fmt(spec.c); break;
        case Profile::kLinear: os << fmt(spec.c) << " u"; break;
        case Profile::kCatenary: os << "cosh u"; break;
        case Profile::kParabola: os << "1 + u^2"; break;
      }
      break;
    case SurfaceKind::kCliffordTorus:
      os << "Clifford torus x = (r / sqrt 2)(cos s, sin s, cos t, sin t), r = " << fmt(spec.r);
      break;
    case SurfaceKind::kSphericalCurve:
      os << "curve on S^2(" << fmt(spec.r) << "), theta(t) = " << fmt(spec.theta0) << " + "
         << fmt(spec.amplitude) << " sin(" << spec.frequency << " t)";
      break;
  }
  return os.str();
}

Expectation expected(const SurfaceSpec& spec) {
  validate(spec);
  Expectation e;
  auto yamabe = [&e](double lambda) {
    e.yamabe_verdict = SolitonVerdict::kYamabe;
    e.yamabe_lambda = lambda;
    e.yamabe_sign = sign_of(lambda, 0.0);
  };
  auto quasi = [&e](double lambda, PointFunction mu) {
    e.quasi = QuasiOutcome::kSoliton;
    e.quasi_lambda = lambda;
    e.quasi_mu = std::move(mu);
  };

  switch (spec.kind) {
    case SurfaceKind::kHyperplane:
      e.position_type = spec.offset == 0.0 ? PositionType::kConic : PositionType::kProper;
      yamabe(-1.0);
      quasi(-1.0, constant_fn(0.0));
      e.hypersurface_class = HypersurfaceClass::kHyperplane;
      e.quasi_umbilical = true;
      e.torse = TorseVerdict::kConcircular;
      e.conformal = flat_if_applicable(spec.n);
      e.scalar_curvature = constant_fn(0.0);
      e.basis = {"h = 0, so <h, x^N> = 0 = (R - lambda - 1) g with R = 0: lambda = -1",
                 "nabla x^T = A_{x^N} + I = I: concircular with phi = 1",
                 spec.offset == 0.0 ? "hyperplane through the origin: x^N = 0 (conic)"
                                    : "offset hyperplane: x^N = (0, ..., offset) nowhere zero"};
      break;

    case SurfaceKind::kSphere: {
      const int n = spec.n;
      const double r_scalar = n * (n - 1) / (spec.r * spec.r);
      e.scalar_curvature = constant_fn(r_scalar);
      e.quasi_umbilical = true;
      e.conformal = flat_if_applicable(n);
      if (is_origin(spec.center)) {
        e.position_type = PositionType::kSpherical;
        yamabe(r_scalar);
        e.quasi = QuasiOutcome::kUndefined;
        e.hypersurface_class = HypersurfaceClass::kOriginCenteredSphere;
        e.basis = {"origin-centered sphere: x = x^N and <h, x^N> = -g, so lambda = R = n(n-1)/r^2",
                   "x^T = 0 identically: quasi fit and torse-forming fit are undefined",
                   "all principal curvatures equal: umbilical, no distinguished direction"};
      } else {
        e.position_type = PositionType::kProper;
        e.torse = TorseVerdict::kConcircular;
        e.basis = {"off-center sphere: <h, x^N> = -(<x, N> / r) g with <x, N> nonconstant, so "
                   "the per-point lambda varies",
                   "umbilical: A_{x^N} is a multiple of I, so x^T is concircular"};
      }
      break;
    }

    case SurfaceKind::kCylinder:
      e.position_type = PositionType::kProper;
      quasi(0.0, [](const Vector& u) { return 1.0 / (u[1] * u[1]); });
      e.quasi_umbilical = true;
      e.distinguished_direction = true;
      e.torse = TorseVerdict::kProperTorseForming;
      e.scalar_curvature = constant_fn(0.0);
      e.basis = {"A_{x^N} = diag(-1, 0) in (d_phi, d_z): trace-free part nonzero, not Yamabe",
                 "d_phi direction gives R - lambda - 1 = -1 with R = 0: lambda = 0",
                 "d_z direction gives mu z^2 = 1: mu = 1/z^2",
                 "x^T = z d_z is a principal direction; nabla x^T = phi I + alpha x^T with "
                 "phi = 0, |alpha| = 1/z"};
      break;

    case SurfaceKind::kCone:
      e.position_type = PositionType::kConic;
      yamabe(-1.0);
      quasi(-1.0, constant_fn(0.0));
      e.hypersurface_class = HypersurfaceClass::kOther;
      e.theorem_violation = true;
      e.quasi_umbilical = true;
      e.torse = TorseVerdict::kConcircular;
      e.scalar_curvature = constant_fn(0.0);
      e.basis = {"rulings pass through the origin: x^N = 0 (conic)",
                 "flat with x^N = 0: Yamabe with lambda = -1, yet not totally geodesic, so "
                 "the hyperplane/sphere dichotomy is flagged as violated"};
      break;

    case SurfaceKind::kRotational: {
      const int n = spec.n;
      const Profile p = spec.profile;
      const double c = spec.c;
      e.scalar_curvature = [p, c, n](const Vector& u) {
        return rotational_scalar(p, c, n, u[n - 1]);
      };
      e.quasi_umbilical = true;
      e.conformal = flat_if_applicable(n);
      switch (p) {
        case Profile::kConstant:
          e.position_type = PositionType::kProper;
          quasi((n - 1) * (n - 2) / (c * c), [n](const Vector& u) {
            return 1.0 / (u[n - 1] * u[n - 1]);
          });
          e.distinguished_direction = true;
          e.torse = TorseVerdict::kProperTorseForming;
          e.basis = {"spherical cylinder S^{n-1}(c) x R: A_{x^N} = -1 on the sphere factor, 0 "
                     "along u",
                     "lambda = R = (n-1)(n-2)/c^2, mu = 1/u^2"};
          break;
        case Profile::kLinear:
          e.position_type = PositionType::kConic;
          e.torse = TorseVerdict::kConcircular;
          if (n == 2) {
            yamabe(-1.0);
            quasi(-1.0, constant_fn(0.0));
            e.hypersurface_class = HypersurfaceClass::kOther;
            e.theorem_violation = true;
          }
          e.basis = {"spherical cone: x^N = 0, A_{x^N} = 0, nabla x^T = I",
                     n == 2 ? "flat cone: lambda = R - 1 = -1"
                            : "R = (n-1)(n-2) / (c^2 (1 + c^2) u^2) is nonconstant: no soliton"};
          break;
        case Profile::kCatenary:
        case Profile::kParabola:
          e.position_type = PositionType::kProper;
          e.distinguished_direction = true;
          e.torse = TorseVerdict::kProperTorseForming;
          e.basis = {"x^T lies along the meridian, a principal direction; the sphere directions "
                     "share one principal curvature",
                     "R - 1 - <x, N> k_s varies with u: neither Yamabe nor quasi-Yamabe"};
          break;
      }
      break;
    }

    case SurfaceKind::kCliffordTorus:
      e.position_type = PositionType::kSpherical;
      yamabe(0.0);
      e.quasi = QuasiOutcome::kUndefined;
      e.normal_section = NormalSection::kParallel;
      e.scalar_curvature = constant_fn(0.0);
      e.basis = {"lies in the origin-centered S^3(r): x = x^N, <h, x^N> = -g",
                 "flat: lambda = R = 0 (steady)",
                 "x^N / |x^N| = x / r has tangential ambient derivative: parallel"};
      break;

    case SurfaceKind::kSphericalCurve:
      e.position_type = PositionType::kSpherical;
      yamabe(0.0);
      e.quasi = QuasiOutcome::kUndefined;
      e.normal_section = NormalSection::kParallel;
      e.scalar_curvature = constant_fn(0.0);
      e.basis = {"on the origin-centered S^2(r): <x'', x> = -|x'|^2, so <h, x^N> = -g",
                 "n = 1: R = 0, lambda = 0"};
      break;
  }
  return e;
}

const std::vector<SurfaceSpec>& catalog() {
  static const std::vector<SurfaceSpec> entries = [] {
    std::vector<SurfaceSpec> v;
    auto add = [&v](std::string name, SurfaceKind kind, auto&& configure) {
      SurfaceSpec s;
      s.name = std::move(name);
      s.kind = kind;
      configure(s);
      v.push_back(s);
    };
    auto rotational = [](int n, Profile p, double c) {
      return [=](SurfaceSpec& s) {
        s.n = n;
        s.profile = p;
        s.c = c;
      };
    };
    add("plane_origin", SurfaceKind::kHyperplane, [](SurfaceSpec& s) { s.offset = 0.0; });
    add("plane_offset", SurfaceKind::kHyperplane, [](SurfaceSpec& s) { s.offset = 1.0; });
    add("hyperplane4", SurfaceKind::kHyperplane, [](SurfaceSpec& s) {
      s.n = 4;
      s.offset = 1.0;
    });
    add("sphere_unit", SurfaceKind::kSphere, [](SurfaceSpec&) {});
    add("sphere_r2", SurfaceKind::kSphere, [](SurfaceSpec& s) { s.r = 2.0; });
    add("sphere3_unit", SurfaceKind::kSphere, [](SurfaceSpec& s) { s.n = 3; });
    add("sphere3_half", SurfaceKind::kSphere, [](SurfaceSpec& s) {
      s.n = 3;
      s.r = 0.5;
    });
    add("sphere4_unit", SurfaceKind::kSphere, [](SurfaceSpec& s) { s.n = 4; });
    add("sphere_offcenter", SurfaceKind::kSphere, [](SurfaceSpec& s) {
      s.center = Vector::Zero(3);
      s.center[2] = 2.0;
    });
    add("cylinder", SurfaceKind::kCylinder, [](SurfaceSpec&) {});
    add("cone", SurfaceKind::kCone, [](SurfaceSpec&) {});
    add("clifford_torus", SurfaceKind::kCliffordTorus, [](SurfaceSpec&) {});
    add("rotational_cylinder3", SurfaceKind::kRotational, rotational(3, Profile::kConstant, 1.0));
    add("rotational_cylinder4", SurfaceKind::kRotational, rotational(4, Profile::kConstant, 1.0));
    add("rotational_cone3", SurfaceKind::kRotational, rotational(3, Profile::kLinear, 1.0));
    add("rotational_catenary", SurfaceKind::kRotational, rotational(2, Profile::kCatenary, 1.0));
    add("rotational_parabola", SurfaceKind::kRotational, rotational(3, Profile::kParabola, 1.0));
    add("spherical_curve", SurfaceKind::kSphericalCurve, [](SurfaceSpec&) {});
    return v;
  }();
  return entries;
}

std::optional<SurfaceSpec> find_catalog_entry(const std::string& name) {
  for (const SurfaceSpec& s : catalog())
    if (s.name == name) return s;
  return std::nullopt;
}

std::string explain(const SurfaceSpec& spec) {
  const Immersion imm = make_surface(spec);
  const Expectation e = expected(spec);
  std::ostringstream os;
  os << spec.name << ": " << describe(spec) << "\n";
  os << "  chart dimension " << imm.chart_dim() << ", ambient E^" << imm.ambient_dim()
     << ", domain";
  for (int i = 0; i < imm.chart_dim(); ++i)
    os << " [" << fmt(imm.domain().lower[i]) << ", " << fmt(imm.domain().upper[i]) << "]";
  os << "\n";
  os << "  position type:        " << to_string(e.position_type) << "\n";
  os << "  yamabe:               " << to_string(e.yamabe_verdict);
  if (e.yamabe_lambda) {
    os << ", lambda = " << fmt(*e.yamabe_lambda) << " (" << to_string(*e.yamabe_sign) << ")";
  }
  os << "\n  quasi-yamabe:         " << to_string(e.quasi);
  if (e.quasi_lambda) os << ", lambda = " << fmt(*e.quasi_lambda);
  os << "\n  hypersurface class:   " << to_string(e.hypersurface_class);
  if (e.theorem_violation) os << " (dichotomy violation expected)";
  os << "\n  quasi-umbilical:      "
     << (e.quasi_umbilical ? (*e.quasi_umbilical ? "yes" : "no") : "not_applicable");
  if (e.distinguished_direction) os << ", distinguished direction along x^T";
  os << "\n  torse-forming:        " << (e.torse ? to_string(*e.torse) : "undefined");
  os << "\n  normal section:       " << to_string(e.normal_section);
  os << "\n  conformal flatness:   " << to_string(e.conformal) << "\n";
  os << "  basis:\n";
  for (const std::string& b : e.basis) os << "    - " << b << "\n";
  return os.str();
}

}  // namespace yamabe

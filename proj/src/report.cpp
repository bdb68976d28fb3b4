#include "yamabe/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "yamabe/errors.hpp"
#include "yamabe/sampling.hpp"

namespace yamabe {

namespace {

constexpr double kAlignmentSlack = 1e-6;

Json vector_json(const Vector& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(x);
  return a;
}

Json optional_json(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

Json parameters_json(const SurfaceSpec& s) {
  Json p = Json::object();
  switch (s.kind) {
    case SurfaceKind::kHyperplane:
      p["n"] = s.n;
      p["offset"] = s.offset;
      break;
    case SurfaceKind::kSphere:
      p["n"] = s.n;
      p["r"] = s.r;
      p["center"] = s.center.size() ? vector_json(s.center) : vector_json(Vector::Zero(s.n + 1));
      break;
    case SurfaceKind::kCylinder:
    case SurfaceKind::kCliffordTorus:
      p["r"] = s.r;
      break;
    case SurfaceKind::kCone:
      p["slope"] = s.slope;
      break;
    case SurfaceKind::kRotational:
      p["n"] = s.n;
      p["profile"] = to_string(s.profile);
      p["c"] = s.c;
      break;
    case SurfaceKind::kSphericalCurve:
      p["r"] = s.r;
      p["theta0"] = s.theta0;
      p["amplitude"] = s.amplitude;
      p["frequency"] = s.frequency;
      break;
  }
  return p;
}

class Comparisons {
 public:
  void add(const std::string& field, Json expected, Json observed, bool pass) {
    Json c;
    c["field"] = field;
    c["expected"] = std::move(expected);
    c["observed"] = std::move(observed);
    c["pass"] = pass;
    list_.push_back(std::move(c));
    ++count_;
    if (!pass) ++failures_;
  }
  void same(const std::string& field, const std::string& expected, const std::string& observed) {
    add(field, expected, observed, expected == observed);
  }
  void near(const std::string& field, double expected, double observed, double tol) {
    add(field, expected, observed, std::abs(observed - expected) <= tol);
  }
  void below(const std::string& field, double bound, double observed) {
    add(field, "< " + format_bound(bound), observed, observed < bound);
  }

  Json take() { return std::move(list_); }
  int count() const { return count_; }
  int failures() const { return failures_; }

 private:
  static std::string format_bound(double b) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", b);
    return buf;
  }
  Json list_ = Json::array();
  int count_ = 0;
  int failures_ = 0;
};

bool wants(const RunConfig& cfg, Check c) {
  for (Check x : cfg.checks)
    if (x == c) return true;
  return false;
}

std::string error_text(const std::exception& e) {
  if (const auto* g = dynamic_cast<const GeometryError*>(&e)) {
    return std::string(to_string(g->kind())) + ": " + g->what();
  }
  return e.what();
}

class SurfaceRun {
 public:
  SurfaceRun(const RunConfig& cfg, const SurfaceSpec& spec) : cfg_(cfg), spec_(spec) {}

  Json run(SurfaceOutcome& outcome) {
    const auto start = std::chrono::steady_clock::now();
    out_["name"] = spec_.name;
    out_["kind"] = to_string(spec_.kind);
    out_["parameters"] = parameters_json(spec_);
    try {
      body();
    } catch (const std::exception& e) {
      fail_surface(error_text(e));
    }
    outcome.name = spec_.name;
    outcome.comparisons = cmp_.count();
    outcome.failures = cmp_.failures();
    outcome.errored = errored_;
    outcome.error = error_;
    out_["expectations"] = cmp_.take();
    out_["status"] = errored_ ? "error" : (outcome.failures ? "fail" : "pass");
    if (errored_) out_["error"] = error_;
    outcome.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out_["wall_time_s"] = outcome.wall_time_s;
    return std::move(out_);
  }

 private:
  void fail_surface(const std::string& msg) {
    if (!errored_) error_ = msg;
    errored_ = true;
  }

  // Runs one check section; an unexpected exception is recorded in the
  // section and marks the surface as errored without stopping other checks.
  template <typename F>
  void section(const char* key, F&& f) {
    Json j = Json::object();
    try {
      f(j);
    } catch (const std::exception& e) {
      j["error"] = error_text(e);
      fail_surface(std::string(key) + ": " + error_text(e));
    }
    out_[key] = std::move(j);
  }

  void body() {
    out_["description"] = describe(spec_);
    imm_ = std::make_shared<const Immersion>(make_surface(spec_));
    exp_ = expected(spec_);
    out_["chart_dim"] = imm_->chart_dim();
    out_["ambient_dim"] = imm_->ambient_dim();
    const std::vector<Vector> pts =
        sample_points(imm_->domain(), cfg_.grid_resolution, cfg_.random_count, cfg_.seed);
    Json sampling;
    sampling["grid_resolution"] = cfg_.grid_resolution;
    sampling["random_count"] = cfg_.random_count;
    sampling["seed"] = cfg_.seed;
    sampling["points"] = pts.size();
    out_["sampling"] = sampling;
    if (cfg_.checks.empty()) return;

    set_ = make_sample_set(imm_, pts);
    if (wants(cfg_, Check::kIdentities)) section("identities", [&](Json& j) { identities(j); });
    if (wants(cfg_, Check::kYamabe)) section("yamabe", [&](Json& j) { yamabe(j); });
    if (wants(cfg_, Check::kQuasiYamabe)) section("quasi_yamabe", [&](Json& j) { quasi(j); });
    if (wants(cfg_, Check::kClassify)) section("classification", [&](Json& j) { classify(j); });
    if (wants(cfg_, Check::kTorse)) section("torse", [&](Json& j) { torse(j); });
    if (wants(cfg_, Check::kWeyl)) section("weyl", [&](Json& j) { weyl(j); });
  }

  void identities(Json& j) {
    IdentityReport worst;
    for (const SamplePoint& p : set_.points) {
      const IdentityReport r = verify_structural_identities(*imm_, p.u);
      worst.split_reconstruction = std::max(worst.split_reconstruction, r.split_reconstruction);
      worst.concurrence_fd = std::max(worst.concurrence_fd, r.concurrence_fd);
      worst.tangent_derivative = std::max(worst.tangent_derivative, r.tangent_derivative);
      worst.normal_derivative = std::max(worst.normal_derivative, r.normal_derivative);
      worst.normal_derivative_fd = std::max(worst.normal_derivative_fd, r.normal_derivative_fd);
      worst.lie_derivative = std::max(worst.lie_derivative, r.lie_derivative);
    }
    j["split_reconstruction"] = worst.split_reconstruction;
    j["concurrence_fd"] = worst.concurrence_fd;
    j["tangent_derivative"] = worst.tangent_derivative;
    j["normal_derivative"] = worst.normal_derivative;
    j["normal_derivative_fd"] = worst.normal_derivative_fd;
    j["lie_derivative"] = worst.lie_derivative;
    j["max_exact"] = worst.max_exact();
    j["max_fd"] = worst.max_fd();
    cmp_.below("identities.max_exact", cfg_.tol.exact, worst.max_exact());
    cmp_.below("identities.max_fd", cfg_.tol.fd, worst.max_fd());
  }

  const SolitonFit& yamabe_result() {
    if (!yamabe_) yamabe_ = yamabe_fit(set_, cfg_.tol.exact);
    return *yamabe_;
  }

  void yamabe(Json& j) {
    const SolitonFit& fit = yamabe_result();
    j["verdict"] = to_string(fit.verdict);
    j["lambda"] = fit.lambda;
    j["lambda_stddev"] = fit.lambda_stddev;
    j["lambda_spread"] = fit.lambda_spread;
    j["max_residual"] = fit.max_residual;
    j["sign"] = fit.soliton_sign ? Json(to_string(*fit.soliton_sign)) : Json(nullptr);

    double r_min = INFINITY, r_max = -INFINITY, r_dev = 0.0;
    for (const SamplePoint& p : set_.points) {
      r_min = std::min(r_min, p.curvature.scalar);
      r_max = std::max(r_max, p.curvature.scalar);
      r_dev = std::max(r_dev, std::abs(p.curvature.scalar - exp_.scalar_curvature(p.u)));
    }
    j["scalar_curvature"] = {{"min", r_min}, {"max", r_max}, {"max_closed_form_deviation", r_dev}};

    cmp_.same("yamabe.verdict", to_string(exp_.yamabe_verdict), to_string(fit.verdict));
    if (exp_.yamabe_lambda) cmp_.near("yamabe.lambda", *exp_.yamabe_lambda, fit.lambda, cfg_.tol.exact);
    if (exp_.yamabe_sign) {
      cmp_.same("yamabe.sign", to_string(*exp_.yamabe_sign),
                fit.soliton_sign ? to_string(*fit.soliton_sign) : "none");
    }
    cmp_.below("scalar_curvature.max_closed_form_deviation", cfg_.tol.exact, r_dev);
  }

  void quasi(Json& j) {
    std::string outcome;
    std::optional<SolitonFit> fit;
    try {
      fit = quasi_yamabe_fit(set_, cfg_.tol.exact);
      outcome = fit->underdetermined ? to_string(QuasiOutcome::kUnderdetermined)
                                     : to_string(fit->verdict);
    } catch (const GeometryError& e) {
      if (e.kind() != ErrorKind::kUndefined) throw;
      outcome = to_string(QuasiOutcome::kUndefined);
      j["reason"] = e.what();
    }
    j["outcome"] = outcome;
    cmp_.same("quasi_yamabe.outcome", to_string(exp_.quasi), outcome);
    if (!fit) return;

    j["lambda"] = fit->lambda;
    j["lambda_stddev"] = fit->lambda_stddev;
    j["max_residual"] = fit->max_residual;
    j["fitted_points"] = fit->fitted_points;
    j["sign"] = fit->soliton_sign ? Json(to_string(*fit->soliton_sign)) : Json(nullptr);
    Json table = Json::array();
    double mu_dev = 0.0;
    for (std::size_t k = 0; k < set_.points.size() && !fit->underdetermined; ++k) {
      Json row;
      row["u"] = vector_json(set_.points[k].u);
      row["mu"] = optional_json(fit->mu_values[k]);
      if (exp_.quasi_mu) {
        const double want = exp_.quasi_mu(set_.points[k].u);
        row["expected"] = want;
        if (fit->mu_values[k]) mu_dev = std::max(mu_dev, std::abs(*fit->mu_values[k] - want));
      }
      table.push_back(std::move(row));
    }
    j["mu"] = std::move(table);
    if (exp_.quasi_lambda) {
      cmp_.near("quasi_yamabe.lambda", *exp_.quasi_lambda, fit->lambda, cfg_.tol.exact);
    }
    if (exp_.quasi_mu) {
      j["mu_max_deviation"] = mu_dev;
      cmp_.below("quasi_yamabe.mu_max_deviation", cfg_.tol.exact, mu_dev);
    }
  }

  void classify(Json& j) {
    const PositionType type = classify_position_type(set_);
    double max_xt = 0.0, max_xn = 0.0;
    for (const SamplePoint& p : set_.points) {
      max_xt = std::max(max_xt, p.split.xt_norm);
      max_xn = std::max(max_xn, p.split.xn_norm);
    }
    j["position_type"] = to_string(type);
    j["max_xt"] = max_xt;
    j["max_xn"] = max_xn;
    cmp_.same("classification.position_type", to_string(exp_.position_type), to_string(type));

    if (set_.codim() == 1) {
      const HypersurfaceClassification hc =
          classify_yamabe_hypersurface(set_, yamabe_result(), cfg_.tol.exact);
      j["hypersurface_class"] = to_string(hc.cls);
      j["theorem_violation"] = hc.theorem_violation;
      j["detail"] = hc.detail;
      cmp_.same("classification.hypersurface_class", to_string(exp_.hypersurface_class),
                to_string(hc.cls));
      cmp_.add("classification.theorem_violation", exp_.theorem_violation, hc.theorem_violation,
               exp_.theorem_violation == hc.theorem_violation);

      const QuasiUmbilicalReport q = quasi_umbilical_check(set_, cfg_.tol.exact);
      j["quasi_umbilical"] = q.quasi_umbilical;
      j["alignment"] = optional_json(q.alignment);
      j["shape_fit_residual"] = q.shape_fit_residual;
      if (exp_.quasi_umbilical) {
        cmp_.add("classification.quasi_umbilical", *exp_.quasi_umbilical, q.quasi_umbilical,
                 *exp_.quasi_umbilical == q.quasi_umbilical);
      }
      if (exp_.distinguished_direction) {
        cmp_.add("classification.alignment", "> 1 - 1e-6", optional_json(q.alignment),
                 q.alignment && *q.alignment > 1.0 - kAlignmentSlack);
      } else if (exp_.quasi_umbilical.value_or(false)) {
        cmp_.add("classification.alignment", nullptr, optional_json(q.alignment),
                 !q.alignment.has_value());
      }
    } else {
      j["hypersurface_class"] = to_string(HypersurfaceClass::kNotApplicable);
      j["quasi_umbilical"] = nullptr;
    }

    std::string section_verdict;
    try {
      const NormalSectionReport ns = normal_section_parallelism(set_, cfg_.tol.fd);
      section_verdict = to_string(ns.verdict);
      j["normal_section_max_derivative"] = ns.max_derivative;
    } catch (const GeometryError& e) {
      section_verdict = std::string("error: ") + to_string(e.kind());
      j["normal_section_error"] = e.what();
    }
    j["normal_section"] = section_verdict;
    cmp_.same("classification.normal_section", to_string(exp_.normal_section), section_verdict);
  }

  void torse(Json& j) {
    std::string verdict;
    try {
      const TorseFormingFit f = torse_forming_fit(set_, cfg_.tol.exact);
      verdict = to_string(f.verdict);
      j["max_residual"] = f.max_residual;
      j["nonzero_alpha_fraction"] = f.nonzero_alpha_fraction;
      j["fitted_points"] = f.fitted_points;
    } catch (const GeometryError& e) {
      if (e.kind() != ErrorKind::kUndefined) throw;
      verdict = "undefined";
      j["reason"] = e.what();
    }
    j["verdict"] = verdict;
    cmp_.same("torse.verdict", exp_.torse ? to_string(*exp_.torse) : "undefined", verdict);
  }

  void weyl(Json& j) {
    const ConformalFlatnessReport w = conformal_flatness_check(set_, cfg_.tol.exact);
    j["conformal_flatness"] = to_string(w.verdict);
    j["max_weyl_norm"] = w.max_weyl_norm;
    cmp_.same("weyl.conformal_flatness", to_string(exp_.conformal), to_string(w.verdict));
  }

  const RunConfig& cfg_;
  const SurfaceSpec& spec_;
  std::shared_ptr<const Immersion> imm_;
  Expectation exp_;
  SampleSet set_;
  std::optional<SolitonFit> yamabe_;
  Comparisons cmp_;
  Json out_ = Json::object();
  bool errored_ = false;
  std::string error_;
};

Json config_json(const RunConfig& cfg) {
  Json c;
  c["grid_resolution"] = cfg.grid_resolution;
  c["random_count"] = cfg.random_count;
  c["seed"] = cfg.seed;
  Json checks = Json::array();
  for (Check k : cfg.checks) checks.push_back(to_string(k));
  c["checks"] = checks;
  c["tolerances"] = {{"exact", cfg.tol.exact}, {"fd", cfg.tol.fd}};
  Json names = Json::array();
  for (const SurfaceSpec& s : cfg.surfaces) names.push_back(s.name);
  c["surfaces"] = names;
  return c;
}

void write_value(std::ostringstream& os, const Json& j, int indent) {
  const std::string pad(indent + 2, ' ');
  const std::string close(indent, ' ');
  switch (j.type()) {
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        os << "null";
      } else {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        os << buf;
      }
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      os << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        os << pad;
        write_value(os, j[i], indent + 2);
        os << (i + 1 < j.size() ? ",\n" : "\n");
      }
      os << close << "]";
      return;
    }
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      std::size_t i = 0;
      for (const auto& [key, value] : j.items()) {
        os << pad << Json(key).dump() << ": ";
        write_value(os, value, indent + 2);
        os << (++i < j.size() ? ",\n" : "\n");
      }
      os << close << "}";
      return;
    }
    default:
      os << j.dump();
  }
}

}  // namespace

bool RunResult::passed() const {
  for (const SurfaceOutcome& o : outcomes)
    if (!o.passed()) return false;
  return true;
}

int RunResult::exit_code() const { return passed() ? 0 : 1; }

RunResult run(const RunConfig& config) {
  RunResult result;
  Json& r = result.report;
  r["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  r["config"] = config_json(config);
  Json surfaces = Json::array();
  int comparisons = 0, failures = 0, errored = 0, passed = 0;
  for (const SurfaceSpec& spec : config.surfaces) {
    SurfaceOutcome outcome;
    surfaces.push_back(SurfaceRun(config, spec).run(outcome));
    comparisons += outcome.comparisons;
    failures += outcome.failures;
    errored += outcome.errored ? 1 : 0;
    passed += outcome.passed() ? 1 : 0;
    result.outcomes.push_back(std::move(outcome));
  }
  r["surfaces"] = std::move(surfaces);
  r["summary"] = {{"surfaces", config.surfaces.size()},
                  {"passed", passed},
                  {"failed", static_cast<int>(config.surfaces.size()) - passed - errored},
                  {"errored", errored},
                  {"comparisons", comparisons},
                  {"failed_comparisons", failures},
                  {"status", result.passed() ? "pass" : "fail"}};
  return result;
}

std::string to_json_text(const Json& j) {
  std::ostringstream os;
  write_value(os, j, 0);
  os << "\n";
  return os.str();
}

std::string summary_text(const RunResult& r) {
  std::ostringstream os;
  int passed = 0;
  for (const SurfaceOutcome& o : r.outcomes) {
    const char* status = o.errored ? "ERROR" : (o.failures ? "FAIL " : "PASS ");
    char line[256];
    std::snprintf(line, sizeof line, "%s %-24s %3d/%-3d expectations  %8.3f s", status,
                  o.name.c_str(), o.comparisons - o.failures, o.comparisons, o.wall_time_s);
    os << line;
    if (o.errored) os << "  " << o.error;
    os << "\n";
    passed += o.passed() ? 1 : 0;
  }
  os << passed << "/" << r.outcomes.size() << " surfaces passed\n";
  return os.str();
}

}  // namespace yamabe

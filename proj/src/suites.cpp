#include "qst/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "qst/event_state.hpp"
#include "qst/field_parser.hpp"
#include "qst/light_ray.hpp"
#include "qst/phase_function.hpp"
#include "qst/sampling.hpp"
#include "qst/shifts.hpp"

namespace qst {

namespace {

using PF = PhaseFunction;

constexpr std::size_t kDefaultRays = 1000;
constexpr std::size_t kDefaultStates = 100;
constexpr std::size_t kDefaultCombinations = 100;
constexpr std::size_t kTransformRays = 20;
constexpr double kOrderTarget = 2.0;
constexpr double kOrderTolerance = 0.1;

class Recorder {
 public:
  explicit Recorder(SuiteResult& r) : r_(r) {}

  void pass(const std::string& check) { ++tally(check).cases; }

  void fail(const std::string& check, std::string message, json payload = json::object()) {
    auto& t = tally(check);
    ++t.cases;
    ++t.failures;
    ++r_.failure_count;
    if (r_.failures.size() < kMaxFailureRecords) r_.failures.push_back({check, std::move(message), std::move(payload)});
  }

  void expect(bool ok, const std::string& check, const std::function<std::string()>& message,
              const std::function<json()>& payload) {
    if (ok)
      pass(check);
    else
      fail(check, message(), payload());
  }

 private:
  CheckTally& tally(const std::string& check) {
    ++r_.cases;
    for (auto& t : r_.checks)
      if (t.name == check) return t;
    r_.checks.push_back({check, 0, 0});
    return r_.checks.back();
  }

  SuiteResult& r_;
};

std::array<VectorField, kGeneratorCount> basis() {
  std::array<VectorField, kGeneratorCount> out;
  for (auto k : all_generator_kinds()) out[index_of(k)] = standard_generator(k);
  return out;
}

std::string gname(GeneratorKind k) { return std::string(name(k)); }

// Zero exactly, or within the float tolerance relative to the magnitude
// of the terms that produced it.
bool negligible(const Scalar& residual, double scale) {
  if (residual.is_exact()) return residual.is_zero();
  return std::abs(residual.to_double()) <= kFloatTolerance * std::max(1.0, scale);
}

bool close(const FourVector& a, const FourVector& b, double scale) {
  for (std::size_t mu = 0; mu < 4; ++mu)
    if (!negligible(a[mu] - b[mu], scale)) return false;
  return true;
}

double max_abs(const FourVector& v) {
  double m = 0;
  for (std::size_t mu = 0; mu < 4; ++mu) m = std::max(m, std::abs(v[mu].to_double()));
  return m;
}

// sum |p_nu delta^nu| at the ray point.
double generator_scale(const LightRay& r, const VectorField& f, const Scalar& sigma) {
  FourVector d = f.evaluate(propagate(r, sigma));
  double s = 0;
  for (std::size_t nu = 0; nu < 4; ++nu) s += std::abs(r.momentum()[nu].to_double() * d[nu].to_double());
  return s;
}

// Magnitude of the terms in (P D - P J) / M^2, including the relative
// error of M^2 itself.
double position_scale(const EventState& s, const FourVector& x) {
  double p = max_abs(s.total_momentum());
  double j = 0;
  for (const auto& row : s.angular_momentum())
    for (const auto& v : row) j = std::max(j, std::abs(v.to_double()));
  double m2 = std::abs(s.mass_squared().to_double());
  return (p * (std::abs(s.dilatation().to_double()) + 4 * j) + 4 * max_abs(x) * p * p) / m2;
}

Scalar in_mode(const Scalar& v, EngineMode mode) {
  return mode == EngineMode::floating && v.is_exact() ? Scalar::real(v.to_double()) : v;
}

std::vector<Scalar> alpha_set(const SuiteConfig& c) {
  std::vector<Scalar> out{Scalar(0), Scalar(1), Scalar::ratio(7, 3)};
  if (std::find(out.begin(), out.end(), c.alpha) == out.end()) out.push_back(c.alpha);
  return out;
}

json phase_vector_json(const PhaseVector& v) {
  json out = json::array();
  for (const auto& f : v) out.push_back(f.str());
  return out;
}

json phase_matrix_json(const PhaseMatrix& m) {
  json out = json::array();
  for (const auto& row : m) out.push_back(phase_vector_json(row));
  return out;
}

bool all_zero(const PhaseMatrix& m) {
  for (const auto& row : m)
    for (const auto& f : row)
      if (!f.is_zero()) return false;
  return true;
}

// --- algebra ---------------------------------------------------------------

void run_algebra(const SuiteConfig& c, SuiteResult& out) {
  Recorder rec(out);
  const auto fields = basis();
  std::array<std::array<VectorField, kGeneratorCount>, kGeneratorCount> comm;
  for (std::size_t i = 0; i < kGeneratorCount; ++i)
    for (std::size_t j = 0; j < kGeneratorCount; ++j) comm[i][j] = lie_commutator(fields[i], fields[j]);

  for (std::size_t i = 0; i < kGeneratorCount; ++i)
    for (std::size_t j = i + 1; j < kGeneratorCount; ++j) {
      const auto a = generator_at(i), b = generator_at(j);
      json pair = {gname(a), gname(b)};
      BasisCoefficients coef;
      try {
        coef = decompose_in_basis(comm[i][j]);
      } catch (const NotInSpan& e) {
        rec.fail("closure", "commutator of (" + gname(a) + ", " + gname(b) + ") is outside the basis span",
                 {{"pair", pair},
                  {"commutator", render_vector_field(comm[i][j])},
                  {"residual", render_vector_field(e.residual())}});
        continue;
      }
      if (c.inject_fault && ((c.inject_fault->first == a && c.inject_fault->second == b) ||
                             (c.inject_fault->first == b && c.inject_fault->second == a)))
        coef[0] += Scalar(1);

      VectorField residual = comm[i][j] - combine_basis(coef);
      rec.expect(
          residual.is_zero(), "closure",
          [&] { return "structure constants of (" + gname(a) + ", " + gname(b) + ") do not reproduce the commutator"; },
          [&] {
            json sc = json::object();
            for (std::size_t k = 0; k < kGeneratorCount; ++k)
              if (!coef[k].is_zero()) sc[gname(generator_at(k))] = coef[k];
            return json{{"pair", pair},
                        {"commutator", render_vector_field(comm[i][j])},
                        {"structure_constants", sc},
                        {"residual", render_vector_field(residual)}};
          });
    }

  for (std::size_t i = 0; i < kGeneratorCount; ++i)
    for (std::size_t j = i + 1; j < kGeneratorCount; ++j)
      for (std::size_t k = j + 1; k < kGeneratorCount; ++k) {
        VectorField sum = lie_commutator(fields[i], comm[j][k]) + lie_commutator(fields[j], comm[k][i]) +
                          lie_commutator(fields[k], comm[i][j]);
        rec.expect(
            sum.is_zero(), "jacobi",
            [&] {
              return "Jacobi sum of (" + gname(generator_at(i)) + ", " + gname(generator_at(j)) + ", " +
                     gname(generator_at(k)) + ") is not zero";
            },
            [&] {
              return json{{"triple", {gname(generator_at(i)), gname(generator_at(j)), gname(generator_at(k))}},
                          {"residual", render_vector_field(sum)}};
            });
      }
}

// --- killing ---------------------------------------------------------------

Polynomial expected_factor(GeneratorKind k) {
  switch (family(k)) {
    case GeneratorFamily::dilatation:
      return Polynomial(Scalar(-1));
    case GeneratorFamily::special_conformal:
      return lowered_coordinate(vector_index(k)) * Scalar(-2);
    default:
      return Polynomial();
  }
}

void check_conformal(Recorder& rec, const std::string& label, const VectorField& f, const Polynomial& expected) {
  Polynomial lambda;
  try {
    lambda = conformal_factor(f);
  } catch (const NotConformal& e) {
    rec.fail("conformal-factor", label + " is reported as not conformal",
             {{"field", label}, {"residual", tensor_to_json(e.residual())}});
    rec.fail("metric-variation", label + " has no conformal factor", {{"field", label}});
    return;
  }
  rec.expect(
      lambda == expected, "conformal-factor", [&] { return "conformal factor of " + label + " is wrong"; },
      [&] {
        return json{{"field", label},
                    {"expected", render_polynomial(expected)},
                    {"actual", render_polynomial(lambda)}};
      });

  SymmetricTensorField s = metric_variation(f);
  bool ok = true;
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = mu; nu < 4; ++nu)
      if (s(mu, nu) != lambda * Scalar(2 * eta(mu, nu))) ok = false;
  rec.expect(
      ok, "metric-variation", [&] { return "metric variation of " + label + " is not 2 lambda eta"; },
      [&] { return json{{"field", label}, {"variation", tensor_to_json(s)}}; });
}

void run_killing(const SuiteConfig& c, SuiteResult& out) {
  Recorder rec(out);
  const auto fields = basis();
  for (auto k : all_generator_kinds()) check_conformal(rec, gname(k), fields[index_of(k)], expected_factor(k));

  Sampler s(c.seed);
  const std::size_t n = c.count.value_or(kDefaultCombinations);
  for (std::size_t i = 0; i < n; ++i) {
    BasisCoefficients coef;
    Polynomial lambda;
    for (auto k : all_generator_kinds()) {
      coef[index_of(k)] = s.rational();
      lambda += expected_factor(k) * coef[index_of(k)];
    }
    VectorField f = combine_basis(coef);
    check_conformal(rec, render_vector_field(f), f, lambda);

    // any conformal field plus a shear is not conformal
    std::size_t m = i % 4, k = (i / 4 + 1 + m) % 4;
    Scalar w = s.positive_rational();
    VectorField shear = f;
    shear[k] += coordinate(m) * w;
    bool rejected = false;
    try {
      (void)conformal_factor(shear);
    } catch (const NotConformal&) {
      rejected = true;
    }
    rec.expect(
        rejected, "non-conformal-rejected", [&] { return "sheared field was accepted as conformal"; },
        [&] { return json{{"field", render_vector_field(shear)}}; });
  }
}

// --- rays ------------------------------------------------------------------

void run_rays(const SuiteConfig& c, SuiteResult& out) {
  Recorder rec(out);
  out.mode = c.mode;
  const auto fields = basis();
  Sampler s(c.seed, c.mode);
  const std::size_t n = c.count.value_or(kDefaultRays);

  for (std::size_t i = 0; i < n; ++i) {
    LightRay r = s.ray();
    std::array<Scalar, 3> sigmas{s.rational(), s.rational(), s.rational()};
    for (auto k : all_generator_kinds())
      for (const auto& sigma : sigmas) {
        const auto& f = fields[index_of(k)];
        Scalar res = conservation_residual(r, f, sigma);
        double scale = generator_scale(r, f, sigma) + generator_scale(r, f, Scalar(0));
        rec.expect(
            negligible(res, scale), "conservation",
            [&] { return "generator " + gname(k) + " is not conserved along ray " + std::to_string(i); },
            [&] {
              return json{{"ray", ray_to_json(r)}, {"generator", gname(k)}, {"sigma", sigma}, {"residual", res}};
            });
      }
  }

  // First-order action: transporting a ray along a moves the value of b by
  // eps times the value of (b, a). The remainder must shrink as eps^2.
  std::array<std::array<VectorField, kGeneratorCount>, kGeneratorCount> comm;
  for (std::size_t a = 0; a < kGeneratorCount; ++a)
    for (std::size_t b = 0; b < kGeneratorCount; ++b) comm[b][a] = lie_commutator(fields[b], fields[a]);

  std::vector<LightRay> rays;
  for (std::size_t i = 0; i < std::min(n, kTransformRays); ++i) rays.push_back(s.ray());

  std::vector<Scalar> ladder = c.eps.empty()
                                   ? std::vector<Scalar>{Scalar::ratio(1, 100), Scalar::ratio(1, 200), Scalar::ratio(1, 400)}
                                   : c.eps;
  json eps_json = json::array(), residual_json = json::array(), order_json = json::array();
  std::vector<double> norms;
  for (const auto& e : ladder) {
    Scalar eps = in_mode(e, c.mode);
    double sum = 0;
    for (const auto& r : rays)
      for (std::size_t a = 0; a < kGeneratorCount; ++a) {
        LightRay moved = infinitesimal_transform(r, fields[a], eps);
        for (std::size_t b = 0; b < kGeneratorCount; ++b) {
          Scalar res = generator_value(moved, fields[b], 0) - generator_value(r, fields[b], 0) -
                       eps * generator_value(r, comm[b][a], 0);
          double d = res.to_double();
          sum += d * d;
        }
      }
    norms.push_back(std::sqrt(sum));
    eps_json.push_back(eps.to_double());
    residual_json.push_back(norms.back());
  }
  for (std::size_t i = 0; i + 1 < ladder.size(); ++i) {
    double order = std::log(norms[i] / norms[i + 1]) / std::log(ladder[i].to_double() / ladder[i + 1].to_double());
    order_json.push_back(std::isfinite(order) ? json(order) : json(nullptr));
    rec.expect(
        std::isfinite(order) && std::abs(order - kOrderTarget) <= kOrderTolerance, "transform-order",
        [&] { return "remainder of the first-order transform does not scale as eps^2"; },
        [&] {
          return json{{"eps", {ladder[i].to_double(), ladder[i + 1].to_double()}},
                      {"residual", {norms[i], norms[i + 1]}},
                      {"order", std::isfinite(order) ? json(order) : json(nullptr)}};
        });
  }
  out.metrics["transform_eps"] = eps_json;
  out.metrics["transform_residual"] = residual_json;
  out.metrics["transform_order"] = order_json;
  out.metrics["transform_rays"] = rays.size();
}

// --- canonical -------------------------------------------------------------

void run_canonical(const SuiteConfig&, SuiteResult& out) {
  Recorder rec(out);
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = 0; nu < 4; ++nu) {
      PF bracket = poisson_bracket(PF::momentum_upper(mu), PF::position(nu));
      PF expected(Scalar(-eta(mu, nu)));
      rec.expect(
          bracket == expected, "canonical",
          [&] { return "(P^" + std::to_string(mu) + ", X^" + std::to_string(nu) + ") is not -eta"; },
          [&] {
            return json{{"mu", mu}, {"nu", nu}, {"bracket", bracket.str()}, {"expected", expected.str()}};
          });
    }
}

// --- event -----------------------------------------------------------------

void run_event(const SuiteConfig& c, SuiteResult& out) {
  Recorder rec(out);
  out.mode = c.mode;
  Sampler s(c.seed, c.mode);
  const std::size_t n = c.count.value_or(kDefaultStates);
  double worst = 0;

  auto fail_all = [&](std::size_t i, const std::string& what) {
    for (const char* check : {"position", "sigma-invariance", "translation-equivariance"})
      rec.fail(check, "state " + std::to_string(i) + ": " + what, {{"state", i}});
  };

  for (std::size_t i = 0; i < n; ++i) {
    FourVector x = s.point();
    std::vector<LightRay> rays = s.rays_through(x, 2);
    std::vector<LightRay> slid;
    for (const auto& r : rays) slid.push_back(r.reparametrized(s.rational()));
    FourVector d = s.point();
    std::vector<LightRay> shifted;
    for (const auto& r : rays) shifted.push_back(LightRay(r.origin() + d, r.momentum()));

    try {
      auto state = EventState::from_rays(rays, in_mode(c.alpha, c.mode));
      FourVector X = extract_position(state);
      double scale = position_scale(state, x);
      for (std::size_t mu = 0; mu < 4; ++mu) worst = std::max(worst, std::abs((X[mu] - x[mu]).to_double()));
      rec.expect(
          close(X, x, scale), "position", [&] { return "state " + std::to_string(i) + " misplaces its event"; },
          [&] {
            return json{{"state", state_to_json(state)},
                        {"expected", four_vector_to_json(x)},
                        {"actual", four_vector_to_json(X)}};
          });

      auto other = EventState::from_rays(slid, in_mode(c.alpha, c.mode));
      FourVector Y = extract_position(other);
      rec.expect(
          close(Y, X, std::max(scale, position_scale(other, x))), "sigma-invariance",
          [&] { return "state " + std::to_string(i) + " depends on where its rays start"; },
          [&] {
            return json{{"state", state_to_json(other)},
                        {"expected", four_vector_to_json(X)},
                        {"actual", four_vector_to_json(Y)}};
          });

      auto moved = EventState::from_rays(shifted, in_mode(c.alpha, c.mode));
      FourVector Z = extract_position(moved);
      rec.expect(
          close(Z, x + d, position_scale(moved, x + d)), "translation-equivariance",
          [&] { return "state " + std::to_string(i) + " does not follow a translation"; },
          [&] {
            return json{{"state", state_to_json(moved)},
                        {"translation", four_vector_to_json(d)},
                        {"expected", four_vector_to_json(x + d)},
                        {"actual", four_vector_to_json(Z)}};
          });
    } catch (const Error& e) {
      fail_all(i, e.what());
    }
  }
  if (c.mode == EngineMode::floating) out.metrics["max_position_error"] = worst;
}

// --- shifts ----------------------------------------------------------------

PhaseVector expected_correction(GeneratorKind k, const Scalar& alpha) {
  PhaseVector v;
  if (family(k) != GeneratorFamily::special_conformal) return v;
  std::size_t nu = vector_index(k);
  for (std::size_t mu = 0; mu < 4; ++mu) {
    PF term = PF::momentum_upper(mu) * PF::momentum(nu) * PF::inverse_mass_squared(2) * Scalar(2);
    if (mu == nu) term -= PF::inverse_mass_squared(1);
    v[mu] = term * alpha;
  }
  return v;
}

void run_shifts(const SuiteConfig& c, SuiteResult& out) {
  Recorder rec(out);
  for (auto k : all_generator_kinds()) {
    const PhaseVector p0 = momentum_shift(k, 0), x0 = position_shift(k, 0);
    for (const auto& alpha : alpha_set(c)) {
      PhaseVector p = momentum_shift(k, alpha), x = position_shift(k, alpha);
      PhaseVector expected = expected_correction(k, alpha);
      bool p_ok = true, x_ok = true;
      PhaseVector diff;
      for (std::size_t mu = 0; mu < 4; ++mu) {
        if (p[mu] != p0[mu]) p_ok = false;
        diff[mu] = x[mu] - x0[mu];
        if (diff[mu] != expected[mu]) x_ok = false;
      }
      rec.expect(
          p_ok, "momentum-alpha-independent",
          [&] { return "momentum shift of " + gname(k) + " depends on alpha"; },
          [&] {
            return json{{"generator", gname(k)},
                        {"alpha", alpha},
                        {"at_alpha", phase_vector_json(p)},
                        {"at_zero", phase_vector_json(p0)}};
          });
      rec.expect(
          x_ok, "position-correction", [&] { return "position-shift correction of " + gname(k) + " is wrong"; },
          [&] {
            return json{{"generator", gname(k)},
                        {"alpha", alpha},
                        {"expected", phase_vector_json(expected)},
                        {"actual", phase_vector_json(diff)}};
          });
    }
  }

  FourVector X = FourVector::zero(IndexPosition::upper);
  FourVector P({Scalar(2), Scalar(0), Scalar(0), Scalar(0)}, IndexPosition::lower);
  Scalar worked = (position_shift(GeneratorKind::C0, 1)[0] - position_shift(GeneratorKind::C0, 0)[0]).evaluate(X, P);
  rec.expect(
      worked == Scalar::ratio(1, 4), "worked-point",
      [&] { return "C0 correction at X = 0, P = (2,0,0,0), alpha = 1 is not 1/4"; },
      [&] { return json{{"actual", worked}}; });
}

// --- consistency -----------------------------------------------------------

void run_consistency(const SuiteConfig& c, SuiteResult& out) {
  Recorder rec(out);
  for (auto k : all_generator_kinds())
    for (const auto& alpha : alpha_set(c)) {
      auto r = shift_gradient_consistency(k, alpha);
      rec.expect(
          all_zero(r.sides_residual) && all_zero(r.expected_residual), "shift-gradient",
          [&] { return "shift gradients of " + gname(k) + " do not equal d^mu delta^nu"; },
          [&] {
            return json{{"generator", gname(k)},
                        {"alpha", alpha},
                        {"sides_residual", phase_matrix_json(r.sides_residual)},
                        {"expected_residual", phase_matrix_json(r.expected_residual)}};
          });
    }
}

// --- conformal-factor ------------------------------------------------------

void run_conformal_factor(const SuiteConfig& c, SuiteResult& out) {
  Recorder rec(out);
  for (auto k : all_generator_kinds()) {
    PF lambda = PF::lift(conformal_factor(standard_generator(k)));
    for (const auto& alpha : alpha_set(c)) {
      try {
        auto f = conformal_factor_from_shifts(k, alpha);
        rec.expect(
            f.position_side == f.momentum_side && f.position_side == lambda, "shift-conformal-factor",
            [&] { return "conformal factor of " + gname(k) + " from shifts is wrong"; },
            [&] {
              return json{{"generator", gname(k)},
                          {"alpha", alpha},
                          {"expected", lambda.str()},
                          {"position_side", f.position_side.str()},
                          {"momentum_side", f.momentum_side.str()}};
            });
      } catch (const NotProportional& e) {
        rec.fail("shift-conformal-factor", gname(k) + ": " + e.what(),
                 {{"generator", gname(k)}, {"alpha", alpha}});
      }
    }
  }
}

using SuiteFn = void (*)(const SuiteConfig&, SuiteResult&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"algebra", run_algebra},         {"killing", run_killing},
      {"rays", run_rays},               {"canonical", run_canonical},
      {"event", run_event},             {"shifts", run_shifts},
      {"consistency", run_consistency}, {"conformal-factor", run_conformal_factor},
  };
  return r;
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

}  // namespace

void validate(const SuiteConfig& c) {
  if (c.count && *c.count == 0) throw ConfigError("count must be positive");
  if (c.alpha.sign() < 0) throw ConfigError("alpha must be non-negative");
  if (!c.eps.empty()) {
    if (c.eps.size() < 2) throw ConfigError("eps ladder needs at least two steps");
    for (std::size_t i = 0; i < c.eps.size(); ++i) {
      if (c.eps[i].sign() <= 0) throw ConfigError("eps steps must be positive");
      if (i && !(c.eps[i] < c.eps[i - 1])) throw ConfigError("eps ladder must be strictly decreasing");
    }
  }
  if (c.inject_fault && c.inject_fault->first == c.inject_fault->second)
    throw ConfigError("fault pair needs two distinct generators");
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, fn] : registry()) v.push_back(n);
    v.push_back("all");
    return v;
  }();
  return names;
}

SuiteResult run_suite(std::string_view name, const SuiteConfig& config) {
  validate(config);
  auto start = std::chrono::steady_clock::now();
  SuiteResult out;
  out.suite = std::string(name);
  out.seed = config.seed;

  if (name == "all") {
    out.mode = config.mode;
    for (const auto& [n, fn] : registry()) {
      SuiteResult part = run_suite(n, config);
      out.cases += part.cases;
      out.failure_count += part.failure_count;
      out.checks.push_back({n, part.cases, part.failure_count});
      for (const auto& f : part.failures)
        if (out.failures.size() < kMaxFailureRecords) out.failures.push_back({n + "/" + f.check, f.message, f.payload});
      out.parts.push_back(std::move(part));
    }
    out.wall_seconds = seconds_since(start);
    return out;
  }

  for (const auto& [n, fn] : registry())
    if (n == name) {
      fn(config, out);
      out.wall_seconds = seconds_since(start);
      return out;
    }
  throw UnknownSuite("unknown suite '" + std::string(name) + "'");
}

ReportFormat parse_report_format(std::string_view text) {
  if (text == "text") return ReportFormat::text;
  if (text == "json") return ReportFormat::json;
  throw ConfigError("unknown report format '" + std::string(text) + "'");
}

json suite_result_to_json(const SuiteResult& r, bool include_timing) {
  json checks = json::array();
  for (const auto& t : r.checks) checks.push_back({{"name", t.name}, {"cases", t.cases}, {"failures", t.failures}});
  json failures = json::array();
  for (const auto& f : r.failures) failures.push_back({{"check", f.check}, {"message", f.message}, {"payload", f.payload}});
  json parts = json::array();
  for (const auto& p : r.parts) parts.push_back(suite_result_to_json(p, include_timing));

  json out{{"suite", r.suite},
           {"mode", std::string(to_string(r.mode))},
           {"seed", r.seed},
           {"cases", r.cases},
           {"passed", r.passed()},
           {"failure_count", r.failure_count},
           {"checks", checks},
           {"failures", failures},
           {"metrics", r.metrics},
           {"parts", parts}};
  if (include_timing) out["wall_seconds"] = r.wall_seconds;
  return out;
}

namespace {

std::string row(const std::string& name, const std::string& mode, std::size_t cases, std::size_t failures,
                const std::string& status) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-26s %-6s %8zu %8zu  %s", name.c_str(), mode.c_str(), cases, failures,
                status.c_str());
  return buf;
}

}  // namespace

std::string suite_result_to_text(const SuiteResult& r, bool include_timing) {
  std::ostringstream os;
  const std::string mode(to_string(r.mode));
  os << "suite " << r.suite << "  mode " << mode << "  seed " << r.seed << '\n';
  char head[160];
  std::snprintf(head, sizeof head, "%-26s %-6s %8s %8s  %s\n", "check", "mode", "cases", "failures", "status");
  os << head;
  if (r.parts.empty()) {
    for (const auto& t : r.checks) os << row(t.name, mode, t.cases, t.failures, t.failures ? "FAIL" : "pass") << '\n';
  } else {
    for (const auto& p : r.parts)
      os << row(p.suite, std::string(to_string(p.mode)), p.cases, p.failure_count, p.passed() ? "pass" : "FAIL")
         << '\n';
  }
  os << row("total", mode, r.cases, r.failure_count, r.passed() ? "PASS" : "FAIL") << '\n';

  auto metrics = [&](const SuiteResult& s) {
    for (const auto& [k, v] : s.metrics.items()) os << "metric " << s.suite << '.' << k << " = " << v.dump() << '\n';
  };
  metrics(r);
  for (const auto& p : r.parts) metrics(p);

  for (const auto& f : r.failures) {
    os << "FAIL " << f.check << ": " << f.message << '\n';
    os << "  " << f.payload.dump() << '\n';
  }
  if (r.failure_count > r.failures.size())
    os << "(" << r.failure_count - r.failures.size() << " more failures not shown)\n";
  if (include_timing) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "wall time %.3f s\n", r.wall_seconds);
    os << buf;
  }
  return os.str();
}

void emit_report(const SuiteResult& r, ReportFormat format, std::ostream& out, bool include_timing) {
  if (format == ReportFormat::json)
    out << suite_result_to_json(r, include_timing).dump(2) << '\n';
  else
    out << suite_result_to_text(r, include_timing);
  out.flush();
  if (!out) throw IoError("failed to write report");
}

}  // namespace qst

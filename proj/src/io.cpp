#include "qst/io.hpp"

#include <fstream>

namespace qst {

void to_json(json& j, const Scalar& s) {
  if (s.is_exact()) j = s.str();
  else j = s.to_double();
}

void from_json(const json& j, Scalar& s) {
  if (j.is_string()) {
    s = Scalar::parse(j.get<std::string>());
  } else if (j.is_number_integer()) {
    s = Scalar(j.get<long long>());
  } else if (j.is_number()) {
    s = Scalar::real(j.get<double>());
  } else {
    throw FormatError("expected a number or a \"p/q\" string, got " + j.dump());
  }
}

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

const json& require_array(const json& j, std::size_t size, const char* what) {
  if (!j.is_array() || j.size() != size)
    throw FormatError(std::string(what) + " must be an array of " + std::to_string(size) + " entries");
  return j;
}

Scalar scalar_from(const json& j) {
  Scalar s;
  from_json(j, s);
  return s;
}

template <std::size_t N>
typename BasicPolynomial<N>::Exponents exponents_from(const json& j, const char* what) {
  require_array(j, N, what);
  typename BasicPolynomial<N>::Exponents e{};
  for (std::size_t i = 0; i < N; ++i) {
    if (!j[i].is_number_unsigned() && !(j[i].is_number_integer() && j[i].get<long long>() >= 0))
      throw FormatError(std::string(what) + " entries must be non-negative integers");
    e[i] = j[i].get<std::uint16_t>();
  }
  return e;
}

}  // namespace

json four_vector_to_json(const FourVector& v) {
  json out = json::array();
  for (const auto& c : v.components()) out.push_back(c);
  return out;
}

FourVector four_vector_from_json(const json& j, IndexPosition pos) {
  require_array(j, 4, "four-vector");
  std::array<Scalar, 4> c;
  for (std::size_t i = 0; i < 4; ++i) c[i] = scalar_from(j[i]);
  return FourVector(c, pos);
}

json polynomial_to_json(const Polynomial& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"exps", e}, {"coef", c}});
  return out;
}

Polynomial polynomial_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("polynomial must be an array of terms");
  Polynomial p;
  for (const auto& term : j) p.add_term(exponents_from<4>(require(term, "exps"), "exps"), scalar_from(require(term, "coef")));
  return p;
}

json vector_field_to_json(const VectorField& f) {
  json comps = json::array();
  for (const auto& c : f.components()) comps.push_back(polynomial_to_json(c));
  return {{"label", f.label()}, {"components", comps}};
}

VectorField vector_field_from_json(const json& j) {
  const json& comps = require_array(require(j, "components"), 4, "components");
  std::array<Polynomial, 4> c;
  for (std::size_t mu = 0; mu < 4; ++mu) c[mu] = polynomial_from_json(comps[mu]);
  std::string label = j.contains("label") ? j.at("label").get<std::string>() : std::string();
  return VectorField(c, label);
}

json tensor_to_json(const SymmetricTensorField& t) {
  json rows = json::array();
  for (std::size_t mu = 0; mu < 4; ++mu) {
    json row = json::array();
    for (std::size_t nu = 0; nu < 4; ++nu) row.push_back(polynomial_to_json(t(mu, nu)));
    rows.push_back(row);
  }
  return rows;
}

json ray_to_json(const LightRay& r) {
  return {{"origin", four_vector_to_json(r.origin())}, {"momentum", four_vector_to_json(r.momentum())}};
}

LightRay ray_from_json(const json& j) {
  return LightRay(four_vector_from_json(require(j, "origin")), four_vector_from_json(require(j, "momentum")));
}

json state_to_json(const EventState& s) {
  json rays = json::array();
  for (const auto& r : s.rays()) rays.push_back(ray_to_json(r));
  return {{"alpha", s.alpha()}, {"rays", rays}};
}

EventState state_from_json(const json& j) {
  const json& rays_json = require(j, "rays");
  if (!rays_json.is_array()) throw FormatError("'rays' must be an array");
  std::vector<LightRay> rays;
  for (std::size_t i = 0; i < rays_json.size(); ++i) {
    try {
      rays.push_back(ray_from_json(rays_json[i]));
    } catch (const InvalidRay& e) {
      throw InvalidRay("ray " + std::to_string(i) + ": " + e.what(), e.null_residual());
    }
  }
  Scalar alpha = j.contains("alpha") ? scalar_from(j.at("alpha")) : Scalar(1);
  return EventState::from_rays(std::move(rays), alpha);
}

EventState load_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open state file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw FormatError("state file '" + path + "' is not valid JSON: " + e.what());
  }
  return state_from_json(j);
}

json state_report(const EventState& s) {
  json angular = json::array();
  for (const auto& row : s.angular_momentum()) {
    json r = json::array();
    for (const auto& v : row) r.push_back(v);
    angular.push_back(r);
  }
  json decomposition = json::object();
  for (auto k : all_generator_kinds()) {
    auto d = decompose_generator(s, k);
    decomposition[std::string(name(k))] = {{"classical", d.classical}, {"correction", d.correction}};
  }
  return {
      {"alpha", s.alpha()},
      {"ray_count", s.rays().size()},
      {"P", four_vector_to_json(s.total_momentum())},
      {"M2", s.mass_squared()},
      {"J", angular},
      {"D", s.dilatation()},
      {"X", four_vector_to_json(extract_position(s))},
      {"intersection_residual", s.intersection_residual()},
      {"correction_closed_form", s.correction_is_closed_form()},
      {"quantum_correction", four_vector_to_json(quantum_correction(s))},
      {"decomposition", decomposition},
  };
}

json phase_function_to_json(const PhaseFunction& f) {
  json out = json::array();
  for (const auto& [k, poly] : f.parts())
    for (const auto& [e, c] : poly.terms()) {
      std::array<std::uint16_t, 4> x{e[0], e[1], e[2], e[3]}, p{e[4], e[5], e[6], e[7]};
      out.push_back({{"x", x}, {"p", p}, {"inv_m2", k}, {"coef", c}});
    }
  return out;
}

PhaseFunction phase_function_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("phase function must be an array of terms");
  PhaseFunction f;
  for (const auto& term : j) {
    auto x = exponents_from<4>(require(term, "x"), "x");
    auto p = exponents_from<4>(require(term, "p"), "p");
    PhasePolynomial::Exponents e{};
    for (std::size_t i = 0; i < 4; ++i) {
      e[i] = x[i];
      e[4 + i] = p[i];
    }
    unsigned k = term.contains("inv_m2") ? term.at("inv_m2").get<unsigned>() : 0u;
    f += PhaseFunction(PhasePolynomial::monomial(e, scalar_from(require(term, "coef"))), k);
  }
  return f;
}

namespace {

json phase_vector_to_json(const PhaseVector& v) {
  json out = json::array();
  for (const auto& f : v) out.push_back(phase_function_to_json(f));
  return out;
}

json evaluated(const PhaseVector& v, const FourVector& x, const FourVector& p) {
  json out = json::array();
  for (const auto& f : v) out.push_back(f.evaluate(x, p));
  return out;
}

}  // namespace

json shift_report_to_json(const ShiftReport& r) {
  return {
      {"kind", name(r.kind)},
      {"alpha", r.alpha},
      {"momentum_shift", phase_vector_to_json(r.momentum)},
      {"position_shift",
       {{"classical", phase_vector_to_json(r.position_classical)},
        {"correction", phase_vector_to_json(r.position_correction)}}},
  };
}

json shift_report_to_json(const ShiftReport& r, const FourVector& position, const FourVector& momentum) {
  json out = shift_report_to_json(r);
  out["evaluated"] = {
      {"X", four_vector_to_json(position)},
      {"P", four_vector_to_json(momentum)},
      {"momentum_shift", evaluated(r.momentum, position, momentum)},
      {"position_shift",
       {{"classical", evaluated(r.position_classical, position, momentum)},
        {"correction", evaluated(r.position_correction, position, momentum)}}},
  };
  return out;
}

}  // namespace qst

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "qst/errors.hpp"
#include "qst/event_state.hpp"
#include "qst/light_ray.hpp"
#include "qst/phase_function.hpp"
#include "qst/shifts.hpp"
#include "qst/vector_field.hpp"

namespace qst {

using nlohmann::json;

// Malformed JSON document or a value of the wrong shape.
class FormatError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Exact scalars serialize as "p" or "p/q" strings, float scalars as numbers.
void to_json(json& j, const Scalar& s);
void from_json(const json& j, Scalar& s);

// Four-vectors are plain 4-element arrays; the index position is implied by
// the field they are stored under.
json four_vector_to_json(const FourVector& v);
FourVector four_vector_from_json(const json& j, IndexPosition pos = IndexPosition::upper);

// [{"exps": [e0, e1, e2, e3], "coef": "p/q"}, ...]
json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

// {"label": ..., "components": [poly, poly, poly, poly]}
json vector_field_to_json(const VectorField& f);
VectorField vector_field_from_json(const json& j);

json tensor_to_json(const SymmetricTensorField& t);

// {"origin": [...], "momentum": [...]}. Loading throws InvalidRay for
// non-null or past-pointing momenta.
json ray_to_json(const LightRay& r);
LightRay ray_from_json(const json& j);

// {"alpha": "p/q", "rays": [ray, ...]}
json state_to_json(const EventState& s);
EventState state_from_json(const json& j);
EventState load_state_file(const std::string& path);

// P, M^2, J, D, X, intersection residual, correction and per-generator
// decomposition of a state.
json state_report(const EventState& s);

// [{"x": [...], "p": [...], "inv_m2": k, "coef": "p/q"}, ...]
json phase_function_to_json(const PhaseFunction& f);
PhaseFunction phase_function_from_json(const json& j);

// Symbolic shifts, optionally evaluated at (X upper, P lower).
json shift_report_to_json(const ShiftReport& r);
json shift_report_to_json(const ShiftReport& r, const FourVector& position, const FourVector& momentum);

}  // namespace qst

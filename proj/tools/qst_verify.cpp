// qst-verify: run verification suites, or inspect a single field or state.
//
// Exit codes: 0 all checks pass, 1 some check failed, 2 usage or input error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qst/event_state.hpp"
#include "qst/field_parser.hpp"
#include "qst/io.hpp"
#include "qst/shifts.hpp"
#include "qst/suites.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

qst::GeneratorKind generator_or_throw(const std::string& text) {
  auto k = qst::parse_generator_kind(text);
  if (!k) throw qst::ConfigError("unknown generator '" + text + "'");
  return *k;
}

void print_text(const qst::json& j, std::ostream& out, const std::string& prefix = "") {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() || (v.is_array() && !v.empty() && v[0].is_object())) {
        out << prefix << k << ":\n";
        print_text(v, out, prefix + "  ");
      } else {
        out << prefix << k << ": " << v.dump() << '\n';
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      out << prefix << "-\n";
      print_text(v, out, prefix + "  ");
    }
  } else {
    out << prefix << j.dump() << '\n';
  }
}

void emit(const qst::json& j, qst::ReportFormat format) {
  if (format == qst::ReportFormat::json)
    std::cout << j.dump(2) << '\n';
  else
    print_text(j, std::cout);
  std::cout.flush();
  if (!std::cout) throw qst::IoError("failed to write report");
}

qst::json rendered_tensor(const qst::SymmetricTensorField& t) {
  qst::json out = qst::json::array();
  for (std::size_t mu = 0; mu < 4; ++mu) {
    qst::json row = qst::json::array();
    for (std::size_t nu = 0; nu < 4; ++nu) row.push_back(qst::render_polynomial(t(mu, nu)));
    out.push_back(row);
  }
  return out;
}

qst::json rendered_phase_vector(const qst::PhaseVector& v) {
  qst::json out = qst::json::array();
  for (const auto& f : v) out.push_back(f.str());
  return out;
}

int field_report(const std::string& text, qst::ReportFormat format) {
  auto parsed = qst::parse_vector_field(text);
  for (const auto& w : parsed.warnings) std::cerr << "warning: " << w << '\n';
  const auto& f = parsed.field;
  const bool structured = format == qst::ReportFormat::json;
  auto tensor = [&](const qst::SymmetricTensorField& t) {
    return structured ? qst::tensor_to_json(t) : rendered_tensor(t);
  };

  qst::json out{{"field", qst::render_vector_field(f)}};
  if (structured) out["components"] = qst::vector_field_to_json(f)["components"];
  out["warnings"] = parsed.warnings;
  out["metric_variation"] = tensor(qst::metric_variation(f));
  int code = kPass;
  try {
    out["conformal_factor"] = qst::render_polynomial(qst::conformal_factor(f));
    out["conformal"] = true;
  } catch (const qst::NotConformal& e) {
    out["conformal"] = false;
    out["conformal_residual"] = tensor(e.residual());
    code = kFail;
  }
  try {
    auto c = qst::decompose_in_basis(f);
    qst::json coef = qst::json::object();
    for (auto k : qst::all_generator_kinds())
      if (!c[qst::index_of(k)].is_zero()) coef[std::string(qst::name(k))] = c[qst::index_of(k)];
    out["basis_coefficients"] = coef;
  } catch (const qst::NotInSpan& e) {
    out["basis_coefficients"] = nullptr;
    out["span_residual"] = qst::render_vector_field(e.residual());
    code = kFail;
  }
  emit(out, format);
  return code;
}

int state_report(const std::string& path, const std::optional<qst::Scalar>& alpha, qst::ReportFormat format) {
  auto state = qst::load_state_file(path);
  if (alpha) state = qst::EventState::from_rays(state.rays(), *alpha);
  qst::json out = qst::state_report(state);
  qst::FourVector X = qst::extract_position(state);
  qst::json shifts = qst::json::array();
  for (auto k : qst::all_generator_kinds()) {
    auto r = qst::shift_report(k, state.alpha());
    qst::json j = qst::shift_report_to_json(r, X, state.total_momentum());
    if (format == qst::ReportFormat::text) {
      j["momentum_shift"] = rendered_phase_vector(r.momentum);
      j["position_shift"] = {{"classical", rendered_phase_vector(r.position_classical)},
                             {"correction", rendered_phase_vector(r.position_correction)}};
    }
    shifts.push_back(j);
  }
  out["shifts"] = shifts;
  emit(out, format);
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify conformal-algebra, light-ray and event-state identities"};
  app.set_help_flag("-h,--help", "Print this help and exit");

  std::string suite, field, state_path, alpha_text, eps_text, fault_text;
  std::string mode_text = "exact", format_text = "text";
  std::uint64_t seed = 1;
  std::size_t count = 0;
  bool timing = false;

  auto* suite_opt = app.add_option("--suite", suite, "Suite to run: algebra, killing, rays, canonical, event, "
                                                     "shifts, consistency, conformal-factor or all");
  auto* field_opt = app.add_option("--field", field, "Report on a vector field: a keyword such as C0, or "
                                                     "[expr, expr, expr, expr] in x0..x3");
  auto* state_opt = app.add_option("--state", state_path, "Report on an event state read from a JSON file");
  suite_opt->excludes(field_opt, state_opt);
  field_opt->excludes(state_opt);
  app.add_option("--seed", seed, "Random seed")->capture_default_str();
  auto* count_opt = app.add_option("--count", count, "Sample count (suite default when omitted)")
                        ->check(CLI::PositiveNumber);
  auto* alpha_opt = app.add_option("--alpha", alpha_text, "Casimir invariant alpha, e.g. 7/3");
  app.add_option("--mode", mode_text, "Engine mode")->check(CLI::IsMember({"exact", "float"}))->capture_default_str();
  app.add_option("--format", format_text, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--eps", eps_text, "Comma-separated step ladder for the transform scaling check, "
                                    "largest first");
  app.add_option("--inject-fault", fault_text, "Corrupt the structure constants of one pair, e.g. P0,C1");
  app.add_flag("--timing", timing, "Include wall time in suite reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    auto format = qst::parse_report_format(format_text);
    std::optional<qst::Scalar> alpha;
    if (*alpha_opt) alpha = qst::Scalar::parse(alpha_text);

    if (*field_opt) return field_report(field, format);
    if (*state_opt) return state_report(state_path, alpha, format);
    if (!*suite_opt) {
      std::cerr << "error: one of --suite, --field or --state is required\n\n" << app.help();
      return kUsage;
    }

    qst::SuiteConfig config;
    config.seed = seed;
    if (*count_opt) config.count = count;
    if (alpha) config.alpha = *alpha;
    config.mode = qst::parse_engine_mode(mode_text);
    if (!eps_text.empty())
      for (const auto& s : split(eps_text, ',')) config.eps.push_back(qst::Scalar::parse(s));
    if (!fault_text.empty()) {
      auto names = split(fault_text, ',');
      if (names.size() != 2) throw qst::ConfigError("--inject-fault expects two generators, e.g. P0,C1");
      config.inject_fault = std::pair{generator_or_throw(names[0]), generator_or_throw(names[1])};
    }

    auto result = qst::run_suite(suite, config);
    qst::emit_report(result, format, std::cout, timing);
    return result.passed() ? kPass : kFail;
  } catch (const qst::UnknownSuite& e) {
    std::cerr << "error: " << e.what() << "\nknown suites:";
    for (const auto& n : qst::suite_names()) std::cerr << ' ' << n;
    std::cerr << "\n\n" << app.help();
    return kUsage;
  } catch (const qst::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const qst::ParseError& e) {
    std::cerr << "error: field expression " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}

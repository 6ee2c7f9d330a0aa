#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qst/errors.hpp"
#include "qst/io.hpp"
#include "qst/scalar.hpp"
#include "qst/vector_field.hpp"

namespace qst {

class UnknownSuite : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

struct SuiteConfig {
  std::uint64_t seed = 1;
  // Sample count; each suite has its own default when unset.
  std::optional<std::size_t> count;
  // Step sizes for the transform scaling check, largest first. Empty means
  // {1/100, 1/200, 1/400}.
  std::vector<Scalar> eps;
  Scalar alpha = Scalar(1);
  EngineMode mode = EngineMode::exact;
  // Corrupts the computed structure constants of one basis pair in the
  // algebra suite, so the reporting path can be exercised.
  std::optional<std::pair<GeneratorKind, GeneratorKind>> inject_fault;
};

// Throws ConfigError.
void validate(const SuiteConfig& config);

struct SuiteFailure {
  std::string check;
  std::string message;
  json payload;
};

struct CheckTally {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
};

struct SuiteResult {
  std::string suite;
  // Mode the checks actually ran in. The symbolic suites are always exact.
  EngineMode mode = EngineMode::exact;
  std::uint64_t seed = 1;
  std::size_t cases = 0;
  std::size_t failure_count = 0;
  std::vector<CheckTally> checks;
  // First kMaxFailureRecords failures, in case order.
  std::vector<SuiteFailure> failures;
  json metrics = json::object();
  // Sub-results of the "all" suite.
  std::vector<SuiteResult> parts;
  double wall_seconds = 0;

  bool passed() const { return failure_count == 0; }
};

inline constexpr std::size_t kMaxFailureRecords = 100;

const std::vector<std::string>& suite_names();

// Deterministic given (name, config). Throws UnknownSuite, ConfigError.
SuiteResult run_suite(std::string_view name, const SuiteConfig& config);

enum class ReportFormat { text, json };

ReportFormat parse_report_format(std::string_view text);

// Wall time is left out unless requested, so reports of identical runs are
// byte-identical.
json suite_result_to_json(const SuiteResult& r, bool include_timing = false);
std::string suite_result_to_text(const SuiteResult& r, bool include_timing = false);

// Writes the report and a trailing newline. Throws IoError when the stream
// fails.
void emit_report(const SuiteResult& r, ReportFormat format, std::ostream& out, bool include_timing = false);

}  // namespace qst

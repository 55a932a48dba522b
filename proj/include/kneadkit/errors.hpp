#pragma once

#include <stdexcept>
#include <string>

namespace kneadkit {

enum class errc {
  invalid_config,
  not_periodic,
  not_extremal,
  not_admissible,
  invalid_exponent,
  minimal_word,
  precondition,
  resource_bound,
  search_exhausted,
  certification_failure,
  degenerate_kernel,
  convergence_failure,
  internal,
};

inline const char* errc_name(errc k) {
  switch (k) {
    case errc::invalid_config: return "InvalidConfig";
    case errc::not_periodic: return "NotPeriodic";
    case errc::not_extremal: return "NotExtremal";
    case errc::not_admissible: return "NotAdmissible";
    case errc::invalid_exponent: return "InvalidExponent";
    case errc::minimal_word: return "MinimalWord";
    case errc::precondition: return "PreconditionViolation";
    case errc::resource_bound: return "ResourceBound";
    case errc::search_exhausted: return "SearchExhausted";
    case errc::certification_failure: return "CertificationFailure";
    case errc::degenerate_kernel: return "DegenerateKernel";
    case errc::convergence_failure: return "ConvergenceFailure";
    case errc::internal: return "InternalError";
  }
  return "UnknownError";
}

/// All library failures are reported through this exception type; `kind`
/// distinguishes contract violations (bad inputs) from internal failures.
class error : public std::runtime_error {
 public:
  error(errc kind, const std::string& what)
      : std::runtime_error(std::string(errc_name(kind)) + ": " + what), kind_(kind) {}

  errc kind() const noexcept { return kind_; }

  /// Precondition-class errors map to CLI exit code 1, the rest to 2.
  bool is_precondition() const noexcept {
    switch (kind_) {
      case errc::certification_failure:
      case errc::convergence_failure:
      case errc::degenerate_kernel:
      case errc::internal:
        return false;
      default:
        return true;
    }
  }

 private:
  errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& what) { throw error(kind, what); }

inline void require(bool cond, errc kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace kneadkit

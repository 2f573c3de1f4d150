#ifndef PHOTOEFFECT_ERROR_HPP
#define PHOTOEFFECT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace photoeffect
{

enum class ErrorCode
{
  invalid_argument,
  unsupported_dimension,
  below_threshold,
  threshold_frequency,
  quadrature_nonconvergence,
  nonconvergent_fit,
  eigensolver_nonconvergence,
  grid_too_coarse,
  instability_detected,
  window_too_short,
  fit_residual_dominant,
};

constexpr std::string_view to_string(ErrorCode code)
{
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::unsupported_dimension: return "unsupported-dimension";
    case ErrorCode::below_threshold: return "below-threshold";
    case ErrorCode::threshold_frequency: return "threshold-frequency";
    case ErrorCode::quadrature_nonconvergence: return "quadrature-nonconvergence";
    case ErrorCode::nonconvergent_fit: return "nonconvergent-fit";
    case ErrorCode::eigensolver_nonconvergence: return "eigensolver-nonconvergence";
    case ErrorCode::grid_too_coarse: return "grid-too-coarse";
    case ErrorCode::instability_detected: return "instability-detected";
    case ErrorCode::window_too_short: return "window-too-short";
    case ErrorCode::fit_residual_dominant: return "fit-residual-dominant";
  }
  return "unknown";
}

/// True for failures of a numerical method (as opposed to bad input).
constexpr bool is_numerical(ErrorCode code)
{
  switch (code) {
    case ErrorCode::quadrature_nonconvergence:
    case ErrorCode::nonconvergent_fit:
    case ErrorCode::eigensolver_nonconvergence:
    case ErrorCode::instability_detected:
    case ErrorCode::fit_residual_dominant:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error
{
public:
  Error(ErrorCode code, const std::string& what)
  : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
  {
  }

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace photoeffect

#endif

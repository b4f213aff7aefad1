#pragma once

#include <stdexcept>
#include <string>

namespace oae {

enum class ErrorCode {
  invalid_input,
  stream_too_short,
  overlapping_epochs,
  all_epochs_rejected,
  window_out_of_range,
  nfft_too_small,
  insufficient_snr,
  degenerate_input,
  length_mismatch,
  degenerate_variance,
  zero_variance_feature,
  k_too_large,
  feature_mismatch,
  missing_frequency,
  missing_recording,
  infeasible_draw,
  packet_outside_window,
  io_failure,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_input:         return "invalid-input";
    case ErrorCode::stream_too_short:      return "stream-too-short";
    case ErrorCode::overlapping_epochs:    return "overlapping-epochs";
    case ErrorCode::all_epochs_rejected:   return "all-epochs-rejected";
    case ErrorCode::window_out_of_range:   return "window-out-of-range";
    case ErrorCode::nfft_too_small:        return "nfft-too-small";
    case ErrorCode::insufficient_snr:      return "insufficient-snr";
    case ErrorCode::degenerate_input:      return "degenerate-input";
    case ErrorCode::length_mismatch:       return "length-mismatch";
    case ErrorCode::degenerate_variance:   return "degenerate-variance";
    case ErrorCode::zero_variance_feature: return "zero-variance-feature";
    case ErrorCode::k_too_large:           return "k-too-large";
    case ErrorCode::feature_mismatch:      return "feature-mismatch";
    case ErrorCode::missing_frequency:     return "missing-frequency";
    case ErrorCode::missing_recording:     return "missing-recording";
    case ErrorCode::infeasible_draw:       return "infeasible-draw";
    case ErrorCode::packet_outside_window: return "packet-outside-window";
    case ErrorCode::io_failure:            return "io-failure";
  }
  return "unknown";
}

// Whether a failure reflects bad input (CLI exit 2) or a numerical/data
// pathology discovered while processing (CLI exit 3).
inline bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::all_epochs_rejected:
    case ErrorCode::insufficient_snr:
    case ErrorCode::degenerate_input:
    case ErrorCode::degenerate_variance:
    case ErrorCode::zero_variance_feature:
    case ErrorCode::infeasible_draw:
      return false;
    default:
      return true;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace oae

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace emg {

enum class ErrorCode {
  WindowTooLong,
  InvalidOverlap,
  TooShort,
  InconsistentSubbands,
  InvalidArgument,
  LengthMismatch,
  EmptySpectrum,
  TooFewRows,
  WidthMismatch,
  EmptyDataset,
  LabelMismatch,
  TooFewSamples,
  ShapeMismatch,
  TooFew,
  LabelOutOfRange,
  EmptyMatrix,
  TooFewReps,
  MissingFile,
  BadHeader,
  NonUniformSampling,
  NonFiniteValue,
  BadModel,
  MissingInput,
};

std::string_view to_string(ErrorCode code) noexcept;

// All library failures are reported through this type; `code()` is the
// stable part, the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace emg

#include "emg/errors.hpp"

namespace emg {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::WindowTooLong: return "WindowTooLong";
    case ErrorCode::InvalidOverlap: return "InvalidOverlap";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::InconsistentSubbands: return "InconsistentSubbands";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::EmptySpectrum: return "EmptySpectrum";
    case ErrorCode::TooFewRows: return "TooFewRows";
    case ErrorCode::WidthMismatch: return "WidthMismatch";
    case ErrorCode::EmptyDataset: return "EmptyDataset";
    case ErrorCode::LabelMismatch: return "LabelMismatch";
    case ErrorCode::TooFewSamples: return "TooFewSamples";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::TooFew: return "TooFew";
    case ErrorCode::LabelOutOfRange: return "LabelOutOfRange";
    case ErrorCode::EmptyMatrix: return "EmptyMatrix";
    case ErrorCode::TooFewReps: return "TooFewReps";
    case ErrorCode::MissingFile: return "MissingFile";
    case ErrorCode::BadHeader: return "BadHeader";
    case ErrorCode::NonUniformSampling: return "NonUniformSampling";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::BadModel: return "BadModel";
    case ErrorCode::MissingInput: return "MissingInput";
  }
  return "Unknown";
}

}  // namespace emg

#pragma once

#include <stdexcept>

namespace ngcl {

/// Base class of every error the library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dimension or length mismatch between tensors.
struct ShapeError : Error { using Error::Error; };

/// Class label outside the valid range.
struct LabelError : Error { using Error::Error; };

/// Fisher estimation asked to run over no data.
struct EstimationError : Error { using Error::Error; };

/// A damped Fisher entry is non-positive; the inverse metric does not exist.
struct SingularCurvatureError : Error { using Error::Error; };

/// Invalid configuration key, value, or range.
struct ConfigError : Error { using Error::Error; };

/// Task trained or evaluated out of stream order.
struct ProtocolError : Error { using Error::Error; };

/// Malformed binary or text payload.
struct FormatError : Error { using Error::Error; };

/// Two inputs that must describe the same data disagree.
struct ConsistencyError : Error { using Error::Error; };

/// Underlying stream or filesystem failure.
struct IoError : Error { using Error::Error; };

/// The two arms of a comparison were produced under different configs.
struct ComparisonError : Error { using Error::Error; };

}  // namespace ngcl

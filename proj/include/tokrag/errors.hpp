#pragma once

#include <stdexcept>
#include <string>

namespace tokrag {

// Base class for every error the library throws on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-finite or otherwise malformed numeric input.
struct InvalidInputError : Error {
  using Error::Error;
};

// Mismatched vector / matrix dimensions.
struct ShapeError : Error {
  using Error::Error;
};

// KL against a distribution with zeros on the reference support.
struct SupportError : Error {
  using Error::Error;
};

// Zero vectors, constant series, and similar degenerate inputs.
struct DegenerateInputError : Error {
  using Error::Error;
};

// Too few samples for the requested statistic.
struct InsufficientDataError : Error {
  using Error::Error;
};

// World or model parameters that violate the documented bounds.
struct ConstraintError : Error {
  using Error::Error;
};

// Enumeration or context limits exceeded.
struct CapacityError : Error {
  using Error::Error;
};

// Every latent concept assigns zero probability to the evidence.
struct DegenerateEvidenceError : Error {
  using Error::Error;
};

// Malformed binary file. Message names the byte offset where known.
struct FormatError : Error {
  using Error::Error;
};

// Malformed text input (JSONL corpora). Message names the line.
struct ParseError : Error {
  using Error::Error;
};

// Duplicate document ids and similar uniqueness violations.
struct ConflictError : Error {
  using Error::Error;
};

// Index out of the valid range (spans, layers).
struct RangeError : Error {
  using Error::Error;
};

// Fusion-layer / matching detection failed (no crossing, empty span).
struct DetectionError : Error {
  using Error::Error;
};

// Metric undefined for the given label set.
struct MetricError : Error {
  using Error::Error;
};

}  // namespace tokrag

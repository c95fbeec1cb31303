#pragma once

#include <stdexcept>
#include <string>

namespace chordgeom {

/// Base class for every failure raised by the analysis routines.
class AnalysisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Catalog parameters that would produce a curve with f'' <= 0 somewhere.
class ConvexityError : public AnalysisError {
 public:
  using AnalysisError::AnalysisError;
};

class DomainError : public AnalysisError {
 public:
  using AnalysisError::AnalysisError;
};

/// The offset line does not meet the curve on both sides inside the domain.
class NoChordError : public AnalysisError {
 public:
  using AnalysisError::AnalysisError;
};

/// Geometry that strict convexity rules out: parallel tangents, zero frame
/// slopes, or an arc that is not a graph over the tangent at P.
class DegenerateError : public AnalysisError {
 public:
  using AnalysisError::AnalysisError;
};

class QuadratureError : public AnalysisError {
 public:
  using AnalysisError::AnalysisError;
};

/// Malformed curve spec text. `position()` is the byte offset of the problem.
class ParseError : public AnalysisError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : AnalysisError(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace chordgeom

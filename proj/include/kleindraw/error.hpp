#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kleindraw {

enum class ErrorCode {
  DuplicateEdge,
  SelfLoop,
  VertexOutOfRange,
  UnknownName,
  BadDimensions,
  DegreeTooLow,
  DisconnectedGraph,
  TooLarge,
  NotASubdivision,
  NotAChainVertex,
  GraphIsPlanar,
  NotThreeConnected,
  NotKleinSystem,
  NoBaseMatch,
  InvalidRotationSystem,
  NoConvergence,
  NotIncident,
  DegenerateAngles,
  MissingDrawing,
  DrawingInvalid,
  ParseError,
  SignMismatch,
  AdjacencyMismatch,
};

// Stable kebab-case identifier, used for the CLI's machine-readable reasons.
std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kleindraw

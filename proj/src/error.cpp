#include "kleindraw/error.hpp"

namespace kleindraw {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateEdge: return "duplicate-edge";
    case ErrorCode::SelfLoop: return "self-loop";
    case ErrorCode::VertexOutOfRange: return "vertex-out-of-range";
    case ErrorCode::UnknownName: return "unknown-name";
    case ErrorCode::BadDimensions: return "bad-dimensions";
    case ErrorCode::DegreeTooLow: return "degree-too-low";
    case ErrorCode::DisconnectedGraph: return "disconnected-graph";
    case ErrorCode::TooLarge: return "too-large";
    case ErrorCode::NotASubdivision: return "not-a-subdivision";
    case ErrorCode::NotAChainVertex: return "not-a-chain-vertex";
    case ErrorCode::GraphIsPlanar: return "graph-is-planar";
    case ErrorCode::NotThreeConnected: return "not-three-connected";
    case ErrorCode::NotKleinSystem: return "not-klein-system";
    case ErrorCode::NoBaseMatch: return "no-base-match";
    case ErrorCode::InvalidRotationSystem: return "invalid-rotation-system";
    case ErrorCode::NoConvergence: return "no-convergence";
    case ErrorCode::NotIncident: return "not-incident";
    case ErrorCode::DegenerateAngles: return "degenerate-angles";
    case ErrorCode::MissingDrawing: return "missing-drawing";
    case ErrorCode::DrawingInvalid: return "drawing-invalid";
    case ErrorCode::ParseError: return "parse-error";
    case ErrorCode::SignMismatch: return "sign-mismatch";
    case ErrorCode::AdjacencyMismatch: return "adjacency-mismatch";
  }
  return "unknown";
}

}  // namespace kleindraw

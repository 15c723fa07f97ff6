#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "kleindraw/drawing.hpp"
#include "kleindraw/enumeration.hpp"
#include "kleindraw/rotation.hpp"

namespace kleindraw {

enum class BaseKind { K5, K33 };

std::string_view base_kind_name(BaseKind kind) noexcept;

/// One base embedding: a canonical Klein-bottle rotation system of K5 or
/// K3,3 and a convex straight-line drawing realizing it.
struct EmbeddingRecord {
  int id = 0;
  BaseKind kind = BaseKind::K5;
  RotationSystem system;
  Drawing drawing;
};

/// Checks one record: Euler characteristic 0, unbalanced, crossing-free and
/// a drawing whose angular orders are switch-equivalent to the stored system
/// without relabelling. Throws DrawingInvalid naming the failed check.
void validate_record(const EmbeddingRecord& record);

// Hand-authored convex drawings, one per base embedding.
std::span<const EmbeddingRecord> authored_omega();

/// Pairs every enumerated Klein-bottle embedding of K5 and K3,3 with its
/// authored drawing, validating each. Ids follow K5 then K3,3, each in key
/// order. Throws MissingDrawing or DrawingInvalid.
std::vector<EmbeddingRecord> build_omega(std::span<const EmbeddingRecord> authored,
                                         const EnumerationResult& k5, const EnumerationResult& k33);
std::vector<EmbeddingRecord> build_omega(std::span<const EmbeddingRecord> authored);

}  // namespace kleindraw

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kleindraw/drawing.hpp"
#include "kleindraw/error.hpp"
#include "kleindraw/omega.hpp"
#include "kleindraw/rotation.hpp"

namespace kleindraw {

// Rotation-system document (.krs):
//
//   # comment
//   graph K5
//   vertices 5
//   rs 0: 1 2 3 4
//   rs 1: 0 4- 3 2
//
// A trailing '-' marks a twisted edge and must appear on both endpoint lines.
struct KrsDocument {
  std::string name;
  RotationSystem system;
};

// Errors carry 1-based line numbers: ParseError, SignMismatch, AdjacencyMismatch.
KrsDocument parse_krs(std::string_view text);
std::string write_krs(const KrsDocument& doc);

// Drawing document (.kdr): `vertex <v> <x> <y>` and `edge <u> <v> <a> <b>`
// lines with u < v; coordinates in [0, 1).
Drawing parse_kdr(std::string_view text);
std::string write_kdr(const Drawing& d);

// Database of base embeddings: records of the form
//
//   embedding <id> <K5|K33>
//   <krs lines>
//   <kdr lines>
//   end
std::vector<EmbeddingRecord> parse_omega(std::string_view text);
std::string write_omega(const std::vector<EmbeddingRecord>& records);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace kleindraw

// Turns hand-placed base drawings (kdr blocks, each closed by `end`) into
// database records: every drawing is checked, its rotation system
// canonicalized, and the drawing relabelled to match the canonical labels.
#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "kleindraw/enumeration.hpp"
#include "kleindraw/error.hpp"
#include "kleindraw/io.hpp"
#include "kleindraw/omega.hpp"

using namespace kleindraw;

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: author_omega <drawings.txt>\n";
    return 2;
  }
  std::istringstream in(read_file(argv[1]));
  std::vector<std::string> blocks(1);
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("drawing", 0) == 0) continue;
    if (line == "end") {
      blocks.emplace_back();
      continue;
    }
    blocks.back() += line + "\n";
  }
  if (blocks.back().empty()) blocks.pop_back();

  std::vector<EmbeddingRecord> records;
  int status = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    try {
      Drawing d = parse_kdr(blocks[i]);
      RotationSystem drawn = extract_rotation_system(d);
      RotationSystem canonical = canonical_form(drawn);
      auto eq = equivalent(drawn, canonical, true);
      if (!eq) throw Error(ErrorCode::DrawingInvalid, "canonical form not reachable");
      EmbeddingRecord rec{static_cast<int>(i), d.graph.vertex_count() == 5 ? BaseKind::K5 : BaseKind::K33, canonical,
                          relabel(d, eq->mapping)};
      validate_record(rec);
      for (const auto& other : records)
        if (other.system == canonical) std::cerr << "drawing " << i << " duplicates record " << other.id << "\n";
      records.push_back(std::move(rec));
    } catch (const std::exception& e) {
      std::cerr << "drawing " << i << ": " << e.what() << "\n";
      status = 1;
    }
  }
  std::stable_sort(records.begin(), records.end(), [](const EmbeddingRecord& a, const EmbeddingRecord& b) {
    if (a.kind != b.kind) return a.kind == BaseKind::K5;
    return system_key(a.system) < system_key(b.system);
  });
  for (std::size_t i = 0; i < records.size(); ++i) records[i].id = static_cast<int>(i);
  std::cout << write_omega(records);
  return status;
}

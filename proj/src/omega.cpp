#include "kleindraw/omega.hpp"

#include <string>

#include "kleindraw/error.hpp"
#include "kleindraw/io.hpp"

namespace kleindraw {

extern const std::string_view kAuthoredOmega;

std::string_view base_kind_name(BaseKind kind) noexcept { return kind == BaseKind::K5 ? "K5" : "K33"; }

void validate_record(const EmbeddingRecord& record) {
  const std::string label = "embedding " + std::to_string(record.id) + ": ";
  auto reject = [&](const std::string& why) { throw Error(ErrorCode::DrawingInvalid, label + why); };
  const RotationSystem& rs = record.system;
  if (euler_characteristic(rs) != 0) reject("Euler characteristic is not 0");
  if (is_balanced(rs)) reject("rotation system is balanced");
  const Drawing& d = record.drawing;
  if (!(d.graph == rs.graph())) reject("drawing and rotation system describe different graphs");
  for (const Point& p : d.gamma)
    if (!(p.x >= 0 && p.x < 1 && p.y >= 0 && p.y < 1)) reject("vertex outside the unit square");
  if (auto hits = crossings(d); !hits.empty())
    reject(std::to_string(hits.size()) + " crossing edge pair(s)");
  RotationSystem drawn;
  try {
    drawn = extract_rotation_system(d);
  } catch (const Error& e) {
    reject(e.what());
  }
  if (!equivalent(drawn, rs, false)) reject("drawing does not realize the rotation system");
}

std::span<const EmbeddingRecord> authored_omega() {
  static const std::vector<EmbeddingRecord> records = parse_omega(kAuthoredOmega);
  return records;
}

std::vector<EmbeddingRecord> build_omega(std::span<const EmbeddingRecord> authored,
                                         const EnumerationResult& k5, const EnumerationResult& k33) {
  std::vector<EmbeddingRecord> out;
  auto add = [&](const EnumerationResult& found, BaseKind kind) {
    for (const RotationSystem& canonical : found.klein()) {
      const EmbeddingRecord* match = nullptr;
      for (const auto& rec : authored)
        if (rec.system == canonical) match = &rec;
      if (!match)
        throw Error(ErrorCode::MissingDrawing, "no authored drawing for a " + std::string(base_kind_name(kind)) +
                                                   " embedding (record " + std::to_string(out.size()) + ")");
      EmbeddingRecord rec{static_cast<int>(out.size()), kind, canonical, match->drawing};
      validate_record(rec);
      out.push_back(std::move(rec));
    }
  };
  add(k5, BaseKind::K5);
  add(k33, BaseKind::K33);
  return out;
}

std::vector<EmbeddingRecord> build_omega(std::span<const EmbeddingRecord> authored) {
  return build_omega(authored, enumerate_embeddings(make_named("K5")), enumerate_embeddings(make_named("K33")));
}

}  // namespace kleindraw

#include "kleindraw/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <thread>

#include "kleindraw/error.hpp"

namespace kleindraw {

SystemKey system_key(const RotationSystem& rs) {
  SystemKey key;
  const Graph& g = rs.graph();
  key.reserve(static_cast<std::size_t>(g.vertex_count() + 2 * g.edge_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    key.push_back(g.degree(v));
    auto order = rs.rotation(v);
    for (std::size_t k = 0; k < order.size(); ++k)
      key.push_back(2 * order[k] + (rs.sign(rs.rotation_edge(v, k)) < 0 ? 1 : 0));
  }
  return key;
}

RotationSystem canonical_form(const RotationSystem& rs) {
  const int n = rs.vertex_count();
  if (n > 8) throw Error(ErrorCode::TooLarge, "canonical form tries every relabelling; at most 8 vertices");
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  RotationSystem best = format(rs).system;
  SystemKey best_key = system_key(best);
  while (std::next_permutation(perm.begin(), perm.end())) {
    RotationSystem candidate = format(relabel(rs, perm)).system;
    SystemKey key = system_key(candidate);
    if (key < best_key) {
      best_key = std::move(key);
      best = std::move(candidate);
    }
  }
  return best;
}

std::uint64_t labelled_upper_bound(const Graph& g) {
  auto mul = [](std::uint64_t x, std::uint64_t y) {
    if (y != 0 && x > std::numeric_limits<std::uint64_t>::max() / y)
      throw Error(ErrorCode::TooLarge, "labelled upper bound overflows 64 bits");
    return x * y;
  };
  std::uint64_t total = 1;
  for (int i = 0; i < g.edge_count(); ++i) total = mul(total, 2);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (int f = 2; f < g.degree(v); ++f) total = mul(total, static_cast<std::uint64_t>(f));
  return total;
}

std::vector<RotationSystem> EnumerationResult::klein() const {
  std::vector<RotationSystem> out;
  for (const auto& rs : all) {
    bool toroidal = std::any_of(false_positives.begin(), false_positives.end(),
                                [&](const RotationSystem& f) { return f == rs; });
    if (!toroidal) out.push_back(rs);
  }
  return out;
}

namespace {

using KeyedSystems = std::map<SystemKey, RotationSystem>;

struct WorkerOutput {
  KeyedSystems all;
  KeyedSystems false_positives;
};

// Scans sign masks in [first, last).
WorkerOutput scan_masks(const Graph& g, std::uint64_t first, std::uint64_t last, bool half_masks) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  const int popcount_cap = (m + 1) / 2;

  // Per vertex: every order of the neighbours after the smallest one.
  std::vector<std::vector<std::vector<Vertex>>> choices(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    auto nbrs = g.neighbors(v);
    std::vector<Vertex> rest(nbrs.begin() + 1, nbrs.end());
    do {
      std::vector<Vertex> order{nbrs.front()};
      order.insert(order.end(), rest.begin(), rest.end());
      choices[v].push_back(std::move(order));
    } while (std::next_permutation(rest.begin(), rest.end()));
  }

  WorkerOutput out;
  // Canonical form depends only on the switch class, i.e. on format().
  std::map<SystemKey, KeyedSystems::iterator> memo;
  std::vector<char> scratch;
  RotationSystem rs = RotationSystem::sorted(g);
  std::vector<std::size_t> digit(static_cast<std::size_t>(n), 0);

  for (std::uint64_t mask = first; mask < last; ++mask) {
    if (half_masks && std::popcount(mask) > popcount_cap) continue;
    for (int i = 0; i < m; ++i) rs.set_sign(static_cast<std::size_t>(i), ((mask >> i) & 1u) ? -1 : 1);
    std::fill(digit.begin(), digit.end(), 0);
    for (Vertex v = 0; v < n; ++v) rs.set_rotation(v, choices[v][0]);
    while (true) {
      if (n - m + count_face_orbits(rs, scratch) / 2 == 0) {
        SystemKey formatted = system_key(format(rs).system);
        auto hit = memo.find(formatted);
        if (hit == memo.end()) {
          RotationSystem c = canonical_form(rs);
          SystemKey key = system_key(c);
          auto it = out.all.try_emplace(std::move(key), std::move(c)).first;
          hit = memo.emplace(std::move(formatted), it).first;
        }
        if (mask == 0) out.false_positives.try_emplace(hit->second->first, hit->second->second);
      }
      // Odometer over the per-vertex order choices.
      Vertex v = 0;
      for (; v < n; ++v) {
        if (++digit[v] < choices[v].size()) {
          rs.set_rotation(v, choices[v][digit[v]]);
          break;
        }
        digit[v] = 0;
        rs.set_rotation(v, choices[v][0]);
      }
      if (v == n) break;
    }
  }
  return out;
}

}  // namespace

EnumerationResult enumerate_embeddings(const Graph& g, const EnumerationOptions& options) {
  if (g.vertex_count() > 8) throw Error(ErrorCode::TooLarge, "enumeration is limited to 8 vertices");
  if (g.edge_count() >= 63) throw Error(ErrorCode::TooLarge, "too many edges for a 64-bit sign mask");
  if (g.min_degree() < 3) throw Error(ErrorCode::DegreeTooLow, "enumeration needs minimum degree 3");
  if (!is_connected(g)) throw Error(ErrorCode::DisconnectedGraph, "enumeration needs a connected graph");

  const std::uint64_t masks = std::uint64_t{1} << g.edge_count();
  const int workers = std::max(1, std::min<int>(options.threads, static_cast<int>(masks)));
  std::vector<WorkerOutput> parts(static_cast<std::size_t>(workers));
  {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      std::uint64_t first = masks * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(workers);
      std::uint64_t last = masks * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(workers);
      if (workers == 1) {
        parts[0] = scan_masks(g, first, last, options.half_masks);
      } else {
        pool.emplace_back([&, w, first, last] { parts[w] = scan_masks(g, first, last, options.half_masks); });
      }
    }
  }

  KeyedSystems all, false_positives;
  for (auto& part : parts) {
    all.merge(part.all);
    false_positives.merge(part.false_positives);
  }
  EnumerationResult result;
  for (auto& [key, rs] : all) result.all.push_back(std::move(rs));
  for (auto& [key, rs] : false_positives) result.false_positives.push_back(std::move(rs));
  return result;
}

}  // namespace kleindraw

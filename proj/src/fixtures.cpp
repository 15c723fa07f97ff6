#include "kleindraw/fixtures.hpp"

#include <string>
#include <utility>

#include "kleindraw/error.hpp"

namespace kleindraw {

GridEmbedding klein_grid(int m, int n) {
  const std::string dims = std::to_string(m) + "x" + std::to_string(n);
  if (m < 2 || n < 2) throw Error(ErrorCode::BadDimensions, "grid " + dims + " needs m, n >= 2");
  if (n < 3 || (m == 2 && n % 2 == 1))
    throw Error(ErrorCode::BadDimensions, "grid " + dims + " would not be a simple graph");

  auto id = [n](int i, int j) { return i * n + j; };
  // Neighbour in each direction, with the sign of the connecting edge.
  auto right = [&](int i, int j) { return i + 1 < m ? std::pair{id(i + 1, j), 1} : std::pair{id(0, n - 1 - j), -1}; };
  auto left = [&](int i, int j) { return i > 0 ? std::pair{id(i - 1, j), 1} : std::pair{id(m - 1, n - 1 - j), -1}; };
  auto up = [&](int i, int j) { return std::pair{id(i, (j + 1) % n), 1}; };
  auto down = [&](int i, int j) { return std::pair{id(i, (j + n - 1) % n), 1}; };

  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      edges.emplace_back(id(i, j), right(i, j).first);
      edges.emplace_back(id(i, j), up(i, j).first);
    }
  Graph g = build_graph(m * n, edges);

  std::vector<std::vector<Vertex>> orders(static_cast<std::size_t>(m * n));
  std::vector<int> signs(static_cast<std::size_t>(g.edge_count()), 1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      Vertex v = id(i, j);
      for (auto [u, s] : {right(i, j), up(i, j), left(i, j), down(i, j)}) {
        orders[v].push_back(u);
        signs[*g.edge_index(v, u)] = s;
      }
    }
  return {g, RotationSystem(g, std::move(orders), std::move(signs))};
}

}  // namespace kleindraw

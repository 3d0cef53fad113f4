#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ricci/complex.hpp"
#include "ricci/metric.hpp"

namespace ricci {

// A graph Laplacian-type operator: row x holds Delta_xy for y = x and the
// neighbors of x.  The axioms required of such an operator are
//   (a) Delta_xy > 0 exactly when x ~ y,
//   (b) Delta_xy = 0 whenever y is neither x nor a neighbor of x (locality),
//   (c) every row sums to zero (hence Delta_xx < 0 unless x is isolated).
struct Laplacian {
  std::vector<std::map<VertexId, Rat>> rows;

  Rat entry(VertexId x, VertexId y) const {
    const auto& row = rows.at(static_cast<std::size_t>(x));
    auto it = row.find(y);
    return it == row.end() ? Rat(0) : it->second;
  }
};

inline void validate_laplacian(const Complex2& c, const Laplacian& L) {
  if (static_cast<int>(L.rows.size()) != c.vertex_count())
    fail(ErrorCode::InvalidLaplacian, "row count does not match vertex count");
  for (VertexId x = 0; x < c.vertex_count(); ++x) {
    Rat sum(0);
    for (const auto& [y, value] : L.rows[x]) {
      c.check_vertex(y);
      sum += value;
      if (y == x) {
        continue;
      }
      if (!c.has_edge(x, y))
        fail(ErrorCode::InvalidLaplacian,
             "entry at non-adjacent pair " + std::to_string(x) + "," + std::to_string(y));
      if (value <= 0)
        fail(ErrorCode::InvalidLaplacian,
             "off-diagonal entry not positive at " + std::to_string(x) + "," +
                 std::to_string(y));
    }
    for (VertexId y : c.neighbors(x))
      if (L.entry(x, y) <= 0)
        fail(ErrorCode::InvalidLaplacian,
             "missing positive entry for edge " + std::to_string(x) + "-" +
                 std::to_string(y));
    if (sum != 0)
      fail(ErrorCode::InvalidLaplacian, "row " + std::to_string(x) + " does not sum to 0");
  }
}

// Harmonic (combinatorial) Laplacian: Delta_xy = 1/deg(x), Delta_xx = -1.
inline Laplacian harmonic_laplacian(const Complex2& c) {
  Laplacian L;
  L.rows.resize(c.vertex_count());
  for (VertexId x = 0; x < c.vertex_count(); ++x) {
    const int d = degree(c, x);
    if (d == 0)
      fail(ErrorCode::IsolatedVertex, "vertex " + std::to_string(x) + " has no neighbors");
    for (VertexId y : c.neighbors(x)) L.rows[x][y] = Rat(1, d);
    L.rows[x][x] = Rat(-1);
  }
  return L;
}

// Symmetric positive edge weights keyed by the canonical (min, max) pair.
using EdgeWeights = std::map<std::pair<VertexId, VertexId>, Rat>;

// Weighted Laplacian: Delta_xy = w_xy / sum_z w_xz, Delta_xx = -1.
inline Laplacian weighted_laplacian(const Complex2& c, const EdgeWeights& weights) {
  Laplacian L;
  L.rows.resize(c.vertex_count());
  auto weight = [&](VertexId u, VertexId v) -> Rat {
    const auto key = std::minmax(u, v);
    auto it = weights.find({key.first, key.second});
    if (it == weights.end())
      fail(ErrorCode::MissingWeight, "edge " + std::to_string(u) + "-" + std::to_string(v));
    if (it->second <= 0)
      fail(ErrorCode::NonPositiveWeight,
           "edge " + std::to_string(u) + "-" + std::to_string(v));
    return it->second;
  };
  for (VertexId x = 0; x < c.vertex_count(); ++x) {
    const auto& nbrs = c.neighbors(x);
    if (nbrs.empty())
      fail(ErrorCode::IsolatedVertex, "vertex " + std::to_string(x) + " has no neighbors");
    Rat total(0);
    for (VertexId y : nbrs) total += weight(x, y);
    for (VertexId y : nbrs) L.rows[x][y] = weight(x, y) / total;
    L.rows[x][x] = Rat(-1);
  }
  return L;
}

namespace detail {

// Combinatorial rectangular box on vertices 0..7: four edges of each length
// class.  Vertex 0 is a corner; 1 = a-neighbor, 3 = b-neighbor, 4 = c-neighbor.
struct BoxEdge {
  VertexId u, v;
  int axis;  // 0 = a, 1 = b, 2 = c
};

inline const std::vector<BoxEdge>& box_edges() {
  static const std::vector<BoxEdge> edges = {
      {0, 1, 0}, {2, 3, 0}, {4, 5, 0}, {6, 7, 0},   // a-edges
      {0, 3, 1}, {1, 2, 1}, {4, 7, 1}, {5, 6, 1},   // b-edges
      {0, 4, 2}, {1, 5, 2}, {2, 6, 2}, {3, 7, 2}};  // c-edges
  return edges;
}

inline const std::vector<Face>& box_faces() {
  static const std::vector<Face> faces = {{0, 1, 2, 3}, {4, 5, 6, 7}, {0, 1, 5, 4},
                                          {3, 2, 6, 7}, {0, 3, 7, 4}, {1, 2, 6, 5}};
  return faces;
}

}  // namespace detail

// Cotangent (Delaunay) Laplacian of the rectangular parallelepiped with edge
// lengths a, b, c: the coefficient across an a-edge is (b+c)/(2a), and
// cyclically for the other two classes.  Rows sum to zero by construction.
inline Laplacian parallelepiped_laplacian(const Rat& a, const Rat& b, const Rat& c) {
  if (a <= 0 || b <= 0 || c <= 0)
    fail(ErrorCode::NonPositiveLength, "parallelepiped lengths must be positive");
  const Rat coeff[3] = {(b + c) / (2 * a), (c + a) / (2 * b), (a + b) / (2 * c)};
  Laplacian L;
  L.rows.resize(8);
  for (const auto& e : detail::box_edges()) {
    L.rows[e.u][e.v] = coeff[e.axis];
    L.rows[e.v][e.u] = coeff[e.axis];
  }
  const Rat diag = -(coeff[0] + coeff[1] + coeff[2]);
  for (VertexId x = 0; x < 8; ++x) L.rows[x][x] = diag;
  return L;
}

// Normalizer sum_{z ~ x} d(x, z) Delta_xz of the time-scaled walk at x.
// Positive for any valid Laplacian on a complex with positive edge lengths.
inline Rat jump_normalizer(const Complex2& c, const Laplacian& L, VertexId x) {
  const auto& nbrs = c.neighbors(x);
  if (nbrs.empty())
    fail(ErrorCode::IsolatedVertex, "vertex " + std::to_string(x) + " has no neighbors");
  const auto dist = shortest_distances(c, {x}, nbrs);
  Rat total(0);
  for (std::size_t k = 0; k < nbrs.size(); ++k)
    total += dist.d[0][k] * L.entry(x, nbrs[k]);
  if (total <= 0)
    fail(ErrorCode::ZeroNormalizer,
         "normalizer not positive at vertex " + std::to_string(x) +
             " (operator violates the Laplacian axioms)");
  return total;
}

}  // namespace ricci

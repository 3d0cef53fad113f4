#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ricci/error.hpp"
#include "ricci/rational.hpp"

namespace ricci {

using VertexId = int;
using Face = std::vector<VertexId>;

struct EdgeSpec {
  VertexId u = 0;
  VertexId v = 0;
  std::optional<Rat> length;  // absent means 1
};

// A finite polyhedral complex of dimension <= 2: a graph with positive
// rational edge lengths and an optional list of faces given as vertex cycles.
// Vertices are dense ids 0..n-1.  Instances are immutable once built.
class Complex2 {
 public:
  friend Complex2 build_complex(int, const std::vector<EdgeSpec>&,
                                std::optional<std::vector<Face>>);

  int vertex_count() const { return n_; }

  // Neighbor ids of x in increasing order.
  const std::vector<VertexId>& neighbors(VertexId x) const {
    check_vertex(x);
    return neighbor_ids_[x];
  }

  // Neighbors of x paired with the incident edge lengths.
  const std::vector<std::pair<VertexId, Rat>>& incident(VertexId x) const {
    check_vertex(x);
    return adj_[x];
  }

  bool has_edge(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    const auto& ids = neighbor_ids_[u];
    return std::binary_search(ids.begin(), ids.end(), v);
  }

  const Rat& edge_length(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& row = adj_[u];
    auto it = std::lower_bound(row.begin(), row.end(), v,
                               [](const auto& p, VertexId id) { return p.first < id; });
    if (it == row.end() || it->first != v)
      fail(ErrorCode::NotAnEdge, "no edge " + std::to_string(u) + "-" + std::to_string(v));
    return it->second;
  }

  // Canonical (u < v) edge list in lexicographic order.
  const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

  bool unit_lengths() const { return unit_; }

  const std::optional<std::vector<Face>>& faces() const { return faces_; }

  void check_vertex(VertexId x) const {
    if (x < 0 || x >= n_)
      fail(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(x) +
                                           " outside 0.." + std::to_string(n_ - 1));
  }

 private:
  int n_ = 0;
  std::vector<std::vector<std::pair<VertexId, Rat>>> adj_;
  std::vector<std::vector<VertexId>> neighbor_ids_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::optional<std::vector<Face>> faces_;
  bool unit_ = true;
};

// Validates and assembles a complex.  Rejects loops, duplicate edges,
// non-positive lengths, out-of-range indices, and faces that are shorter than
// 3 vertices, repeat a vertex, or traverse a missing edge.
inline Complex2 build_complex(int n, const std::vector<EdgeSpec>& edges,
                              std::optional<std::vector<Face>> faces = std::nullopt) {
  if (n < 0) fail(ErrorCode::IndexOutOfRange, "negative vertex count");
  Complex2 c;
  c.n_ = n;
  c.adj_.assign(n, {});
  c.neighbor_ids_.assign(n, {});
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const auto& e : edges) {
    c.check_vertex(e.u);
    c.check_vertex(e.v);
    if (e.u == e.v)
      fail(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(e.u));
    const Rat len = e.length.value_or(Rat(1));
    if (len <= 0)
      fail(ErrorCode::NonPositiveLength, "edge " + std::to_string(e.u) + "-" +
                                             std::to_string(e.v));
    const auto key = std::minmax(e.u, e.v);
    if (!seen.insert(key).second)
      fail(ErrorCode::DuplicateEdge, "edge " + std::to_string(e.u) + "-" +
                                         std::to_string(e.v) + " listed twice");
    c.adj_[e.u].push_back({e.v, len});
    c.adj_[e.v].push_back({e.u, len});
    if (len != 1) c.unit_ = false;
  }
  for (auto& row : c.adj_) std::sort(row.begin(), row.end());
  for (int x = 0; x < n; ++x) {
    c.neighbor_ids_[x].reserve(c.adj_[x].size());
    for (const auto& [y, len] : c.adj_[x]) c.neighbor_ids_[x].push_back(y);
  }
  c.edges_.assign(seen.begin(), seen.end());
  if (faces) {
    for (const auto& f : *faces) {
      if (f.size() < 3)
        fail(ErrorCode::InvalidFace, "face with fewer than 3 vertices");
      std::set<VertexId> distinct(f.begin(), f.end());
      if (distinct.size() != f.size())
        fail(ErrorCode::InvalidFace, "face repeats a vertex");
      for (std::size_t i = 0; i < f.size(); ++i) {
        const VertexId u = f[i];
        const VertexId v = f[(i + 1) % f.size()];
        c.check_vertex(u);
        c.check_vertex(v);
        if (!c.has_edge(u, v))
          fail(ErrorCode::FaceUsesMissingEdge, "face edge " + std::to_string(u) +
                                                   "-" + std::to_string(v));
      }
    }
    c.faces_ = std::move(faces);
  }
  return c;
}

inline int degree(const Complex2& c, VertexId x) {
  return static_cast<int>(c.neighbors(x).size());
}

// Sphere S(x): the neighbors of x, increasing.
inline std::vector<VertexId> sphere(const Complex2& c, VertexId x) {
  return c.neighbors(x);
}

// Ball B(x) = {x} followed by the neighbors of x in increasing order.
inline std::vector<VertexId> ball(const Complex2& c, VertexId x) {
  std::vector<VertexId> b;
  b.reserve(c.neighbors(x).size() + 1);
  b.push_back(x);
  for (VertexId y : c.neighbors(x)) b.push_back(y);
  return b;
}

// Number of triangles containing the edge {x, x'}, read off the adjacency
// structure as |S(x) n S(x')|.
inline int triangles_on_edge(const Complex2& c, VertexId x, VertexId xp) {
  if (!c.has_edge(x, xp))
    fail(ErrorCode::NotAnEdge, "no edge " + std::to_string(x) + "-" + std::to_string(xp));
  const auto& a = c.neighbors(x);
  const auto& b = c.neighbors(xp);
  std::vector<VertexId> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(common));
  return static_cast<int>(common.size());
}

}  // namespace ricci

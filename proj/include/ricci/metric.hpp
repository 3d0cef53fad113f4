#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "ricci/complex.hpp"

namespace ricci {

// Exact shortest-path distances between two ordered vertex lists.
struct DistanceMatrix {
  std::vector<VertexId> sources;
  std::vector<VertexId> targets;
  std::vector<std::vector<Rat>> d;  // d[i][j] = dist(sources[i], targets[j])

  const Rat& at(std::size_t i, std::size_t j) const { return d[i][j]; }
};

namespace detail {

// Single-source distances to every vertex; nullopt marks unreachable ones.
// Unit-length complexes use breadth-first search; otherwise a linear-scan
// Dijkstra with exact rational comparisons (the complexes here are small).
inline std::vector<std::optional<Rat>> single_source(const Complex2& c, VertexId s) {
  c.check_vertex(s);
  const int n = c.vertex_count();
  std::vector<std::optional<Rat>> dist(n);
  if (c.unit_lengths()) {
    std::deque<VertexId> queue{s};
    dist[s] = Rat(0);
    while (!queue.empty()) {
      const VertexId x = queue.front();
      queue.pop_front();
      for (VertexId y : c.neighbors(x))
        if (!dist[y]) {
          dist[y] = *dist[x] + 1;
          queue.push_back(y);
        }
    }
    return dist;
  }
  std::vector<char> done(n, 0);
  dist[s] = Rat(0);
  for (int round = 0; round < n; ++round) {
    int best = -1;
    for (int x = 0; x < n; ++x)
      if (!done[x] && dist[x] && (best < 0 || *dist[x] < *dist[best])) best = x;
    if (best < 0) break;
    done[best] = 1;
    for (const auto& [y, len] : c.incident(best)) {
      const Rat candidate = *dist[best] + len;
      if (!dist[y] || candidate < *dist[y]) dist[y] = candidate;
    }
  }
  return dist;
}

}  // namespace detail

inline DistanceMatrix shortest_distances(const Complex2& c,
                                         const std::vector<VertexId>& sources,
                                         const std::vector<VertexId>& targets) {
  for (VertexId t : targets) c.check_vertex(t);
  DistanceMatrix m;
  m.sources = sources;
  m.targets = targets;
  m.d.reserve(sources.size());
  for (VertexId s : sources) {
    const auto dist = detail::single_source(c, s);
    std::vector<Rat> row;
    row.reserve(targets.size());
    for (VertexId t : targets) {
      if (!dist[t])
        fail(ErrorCode::Unreachable, "vertex " + std::to_string(t) +
                                         " unreachable from " + std::to_string(s));
      row.push_back(*dist[t]);
    }
    m.d.push_back(std::move(row));
  }
  return m;
}

inline Rat distance(const Complex2& c, VertexId x, VertexId y) {
  return shortest_distances(c, {x}, {y}).d[0][0];
}

// Largest pairwise distance; requires a connected complex.
inline Rat diameter(const Complex2& c) {
  Rat best(0);
  for (VertexId s = 0; s < c.vertex_count(); ++s) {
    const auto dist = detail::single_source(c, s);
    for (VertexId t = 0; t < c.vertex_count(); ++t) {
      if (!dist[t])
        fail(ErrorCode::Unreachable, "vertex " + std::to_string(t) +
                                         " unreachable from " + std::to_string(s));
      if (*dist[t] > best) best = *dist[t];
    }
  }
  return best;
}

// The balls around x and x' (each listed center-first) together with the
// distance matrix between them.  This is the ambient data every transport
// problem between one-step walk measures lives on.
struct LocalSupport {
  std::vector<VertexId> around_x;
  std::vector<VertexId> around_xp;
  DistanceMatrix dist;
};

inline LocalSupport local_support(const Complex2& c, VertexId x, VertexId xp) {
  if (x == xp) fail(ErrorCode::SameVertex, "local support needs two distinct vertices");
  LocalSupport ls;
  ls.around_x = ball(c, x);
  ls.around_xp = ball(c, xp);
  ls.dist = shortest_distances(c, ls.around_x, ls.around_xp);
  return ls;
}

}  // namespace ricci

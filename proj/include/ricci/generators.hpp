#pragma once

#include <array>
#include <deque>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ricci/complex.hpp"
#include "ricci/laplacian.hpp"

namespace ricci {

// A distinguished edge of a generated complex, labeled by its type so tests
// and the CLI never hand-pick interior vertices by magic index.
struct ProbeEdge {
  VertexId u = 0;
  VertexId v = 0;
  std::string label;
};

struct Generated {
  Complex2 complex;
  std::string name;
  std::vector<ProbeEdge> probes;
};

// ----------------------------------------------------------- platonic solids

namespace detail {

// The twelve box edges as EdgeSpecs with the three class lengths.
inline std::vector<EdgeSpec> box_edge_specs(const Rat& a, const Rat& b, const Rat& c) {
  const Rat lengths[3] = {a, b, c};
  std::vector<EdgeSpec> edges;
  for (const auto& e : box_edges())
    edges.push_back({e.u, e.v, lengths[e.axis]});
  return edges;
}

}  // namespace detail

inline Generated platonic(const std::string& name) {
  std::vector<EdgeSpec> edges;
  std::vector<Face> faces;
  int n = 0;
  std::vector<ProbeEdge> probes;
  auto edge = [&](VertexId u, VertexId v) { edges.push_back({u, v, Rat(1)}); };

  if (name == "tetrahedron") {
    n = 4;
    for (VertexId u = 0; u < 4; ++u)
      for (VertexId v = u + 1; v < 4; ++v) edge(u, v);
    faces = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    probes = {{0, 1, "edge"}};
  } else if (name == "cube") {
    n = 8;
    edges = detail::box_edge_specs(Rat(1), Rat(1), Rat(1));
    faces = detail::box_faces();
    probes = {{0, 1, "edge"}};
  } else if (name == "octahedron") {
    // Vertices 0,1 / 2,3 / 4,5 are the three antipodal axis pairs.
    n = 6;
    for (VertexId u = 0; u < 6; ++u)
      for (VertexId v = u + 1; v < 6; ++v)
        if (!(u / 2 == v / 2)) edge(u, v);
    for (VertexId a : {0, 1})
      for (VertexId b : {2, 3})
        for (VertexId c : {4, 5}) faces.push_back({a, b, c});
    probes = {{0, 2, "edge"}};
  } else if (name == "icosahedron") {
    // 0 apex, 1..5 upper ring, 6..10 lower ring, 11 bottom.
    n = 12;
    auto up = [](int k) { return VertexId(1 + (k % 5 + 5) % 5); };
    auto lo = [](int k) { return VertexId(6 + (k % 5 + 5) % 5); };
    for (int k = 0; k < 5; ++k) {
      edge(0, up(k));
      edge(up(k), up(k + 1));
      edge(lo(k), lo(k + 1));
      edge(11, lo(k));
      edge(up(k), lo(k));
      edge(up(k + 1), lo(k));
      faces.push_back({0, up(k), up(k + 1)});
      faces.push_back({11, lo(k), lo(k + 1)});
      faces.push_back({up(k), up(k + 1), lo(k)});
      faces.push_back({up(k + 1), lo(k), lo(k + 1)});
    }
    probes = {{0, 1, "edge"}};
  } else if (name == "dodecahedron") {
    // Four rings of five: A = 0..4 (top face), B = 5..9, C = 10..14,
    // D = 15..19 (bottom face).
    n = 20;
    auto A = [](int k) { return VertexId((k % 5 + 5) % 5); };
    auto B = [](int k) { return VertexId(5 + (k % 5 + 5) % 5); };
    auto C = [](int k) { return VertexId(10 + (k % 5 + 5) % 5); };
    auto D = [](int k) { return VertexId(15 + (k % 5 + 5) % 5); };
    for (int k = 0; k < 5; ++k) {
      edge(A(k), A(k + 1));
      edge(A(k), B(k));
      edge(B(k), C(k));
      edge(C(k), B(k + 1));
      edge(C(k), D(k));
      edge(D(k), D(k + 1));
      faces.push_back({A(k), A(k + 1), B(k + 1), C(k), B(k)});
      faces.push_back({D(k), D(k + 1), C(k + 1), B(k + 1), C(k)});
    }
    faces.push_back({0, 1, 2, 3, 4});
    faces.push_back({15, 16, 17, 18, 19});
    probes = {{0, 1, "edge"}};
  } else {
    fail(ErrorCode::UnknownName, "unknown solid '" + name + "'");
  }
  return {build_complex(n, edges, faces), "platonic:" + name, probes};
}

// ------------------------------------------------------------- star pairs

// The local configuration of two adjacent vertices x, x' of degrees d, d' on
// a triangulated surface with no extra chords: x = 0 and x' = 1 share the
// neighbors 2 and 3, the d-3 vertices exclusive to x chain from 2 to 3 along
// the boundary of star(x), and the d'-3 vertices exclusive to x' chain from
// 3 back to 2.  For d = 3 the shared neighbors are NOT adjacent (their
// distance is 2), since the link of x is just the path 2, x', 3.
inline Generated generic_star_pair(int d, int dp) {
  if (d < 3 || dp < 3)
    fail(ErrorCode::DegreeTooSmall, "star pairs need both degrees >= 3");
  const int n = d + dp - 2;
  std::vector<EdgeSpec> edges;
  std::vector<Face> faces;
  auto edge = [&](int u, int v) { edges.push_back({VertexId(u), VertexId(v), Rat(1)}); };
  edge(0, 1);
  edge(0, 2);
  edge(0, 3);
  edge(1, 2);
  edge(1, 3);
  faces.push_back({0, 1, 2});
  faces.push_back({0, 1, 3});
  if (d >= 4) {
    for (int k = 4; k <= d; ++k) edge(0, k);
    edge(2, 4);
    for (int k = 4; k < d; ++k) edge(k, k + 1);
    edge(d, 3);
    faces.push_back({0, 2, 4});
    for (int k = 4; k < d; ++k) faces.push_back({0, k, k + 1});
    faces.push_back({0, d, 3});
  }
  if (dp >= 4) {
    for (int k = d + 1; k <= n - 1; ++k) edge(1, k);
    edge(3, d + 1);
    for (int k = d + 1; k < n - 1; ++k) edge(k, k + 1);
    edge(n - 1, 2);
    faces.push_back({1, 3, d + 1});
    for (int k = d + 1; k < n - 1; ++k) faces.push_back({1, k, k + 1});
    faces.push_back({1, n - 1, 2});
  }
  return {build_complex(n, edges, faces),
          "star_pair:" + std::to_string(d) + "," + std::to_string(dp),
          {{0, 1, "edge"}}};
}

// ---------------------------------------------------------- parallelepiped

// Rectangular box with edge lengths a, b, c along the three axis classes and
// six quadrilateral faces.  Probe edges expose one representative per class.
inline Generated parallelepiped(const Rat& a, const Rat& b, const Rat& c) {
  if (a <= 0 || b <= 0 || c <= 0)
    fail(ErrorCode::NonPositiveLength, "box edge lengths must be positive");
  Generated g{build_complex(8, detail::box_edge_specs(a, b, c), detail::box_faces()),
              "parallelepiped:" + rat_to_string(a) + "," + rat_to_string(b) + "," +
                  rat_to_string(c),
              {{0, 1, "a"}, {0, 3, "b"}, {0, 4, "c"}}};
  return g;
}

// -------------------------------------------------------------- tilings

namespace detail {

// Abstract lattice coordinate: (i, j, site).  Simple tilings use site = 0;
// the snub square tiling uses sites 0..3 (the four corners of a square cell)
// and the trihexagonal tiling sites 0..2 (the three vertices of a unit cell).
using Cell = std::array<int, 3>;

struct TilingRules {
  std::function<std::vector<Cell>(const Cell&)> neighbors;
  // Candidate faces anchored at lattice cell (i, j); kept only when every
  // vertex survived the radius cut.
  std::function<std::vector<std::vector<Cell>>(int, int)> faces_at;
  std::vector<std::pair<std::pair<Cell, Cell>, std::string>> probes;
};

inline TilingRules triangular_rules() {
  TilingRules r;
  r.neighbors = [](const Cell& c) -> std::vector<Cell> {
    const int x = c[0], y = c[1];
    return {{x + 1, y, 0}, {x - 1, y, 0}, {x, y + 1, 0},
            {x, y - 1, 0}, {x + 1, y - 1, 0}, {x - 1, y + 1, 0}};
  };
  r.faces_at = [](int x, int y) -> std::vector<std::vector<Cell>> {
    return {{{x, y, 0}, {x + 1, y, 0}, {x, y + 1, 0}},
            {{x, y, 0}, {x + 1, y - 1, 0}, {x + 1, y, 0}}};
  };
  r.probes = {{{{0, 0, 0}, {1, 0, 0}}, "edge"}};
  return r;
}

inline TilingRules square_rules() {
  TilingRules r;
  r.neighbors = [](const Cell& c) -> std::vector<Cell> {
    const int x = c[0], y = c[1];
    return {{x + 1, y, 0}, {x - 1, y, 0}, {x, y + 1, 0}, {x, y - 1, 0}};
  };
  r.faces_at = [](int x, int y) -> std::vector<std::vector<Cell>> {
    return {{{x, y, 0}, {x + 1, y, 0}, {x + 1, y + 1, 0}, {x, y + 1, 0}}};
  };
  r.probes = {{{{0, 0, 0}, {1, 0, 0}}, "edge"}};
  return r;
}

// Brick-wall coordinates: horizontal edges everywhere, vertical edge from
// (x, y) up to (x, y+1) exactly when x + y is even; every vertex gets
// degree 3 and the hexagons are anchored at even-parity vertices.
inline TilingRules hexagonal_rules() {
  TilingRules r;
  auto even = [](int x, int y) { return ((x + y) % 2 + 2) % 2 == 0; };
  r.neighbors = [even](const Cell& c) -> std::vector<Cell> {
    const int x = c[0], y = c[1];
    std::vector<Cell> out = {{x + 1, y, 0}, {x - 1, y, 0}};
    if (even(x, y))
      out.push_back({x, y + 1, 0});
    else
      out.push_back({x, y - 1, 0});
    return out;
  };
  r.faces_at = [even](int x, int y) -> std::vector<std::vector<Cell>> {
    if (!even(x, y)) return {};
    return {{{x, y, 0},
             {x + 1, y, 0},
             {x + 2, y, 0},
             {x + 2, y + 1, 0},
             {x + 1, y + 1, 0},
             {x, y + 1, 0}}};
  };
  r.probes = {{{{0, 0, 0}, {1, 0, 0}}, "edge"}};
  return r;
}

// Snub square tiling (vertex type 3.3.4.3.4).  Each lattice cell (i, j)
// carries a tilted square with corners 0..3; squares touch corner-to-corner
// and the gaps are filled by pairs of triangles whose diagonals alternate
// orientation, giving every vertex two squares and three triangles.
inline TilingRules snub_square_rules() {
  TilingRules r;
  r.neighbors = [](const Cell& c) -> std::vector<Cell> {
    const int i = c[0], j = c[1];
    switch (c[2]) {
      case 0:
        return {{i, j, 1}, {i, j, 3}, {i - 1, j, 1}, {i, j - 1, 3}, {i - 1, j, 2}};
      case 1:
        return {{i, j, 0}, {i, j, 2}, {i + 1, j, 0}, {i, j - 1, 2}, {i, j - 1, 3}};
      case 2:
        return {{i, j, 1}, {i, j, 3}, {i, j + 1, 1}, {i + 1, j, 3}, {i + 1, j, 0}};
      default:
        return {{i, j, 0}, {i, j, 2}, {i - 1, j, 2}, {i, j + 1, 0}, {i, j + 1, 1}};
    }
  };
  r.faces_at = [](int i, int j) -> std::vector<std::vector<Cell>> {
    return {
        // the cell's own square and the square between four cells
        {{i, j, 0}, {i, j, 1}, {i, j, 2}, {i, j, 3}},
        {{i, j, 0}, {i - 1, j, 1}, {i - 1, j - 1, 2}, {i, j - 1, 3}},
        // two triangles below the cell
        {{i, j, 0}, {i, j, 1}, {i, j - 1, 3}},
        {{i, j, 1}, {i, j - 1, 2}, {i, j - 1, 3}},
        // two triangles left of the cell
        {{i, j, 0}, {i, j, 3}, {i - 1, j, 2}},
        {{i, j, 0}, {i - 1, j, 2}, {i - 1, j, 1}},
    };
  };
  r.probes = {{{{0, 0, 0}, {-1, 0, 2}}, "triangle-triangle"},
              {{{0, 0, 0}, {0, 0, 1}}, "triangle-square"}};
  return r;
}

// Trihexagonal (kagome) tiling, vertex type 3.6.3.6: sites a=0, b=1, c=2 per
// cell; up- and down-triangles alternate with hexagons.
inline TilingRules trihexagonal_rules() {
  TilingRules r;
  r.neighbors = [](const Cell& cc) -> std::vector<Cell> {
    const int i = cc[0], j = cc[1];
    switch (cc[2]) {
      case 0:
        return {{i, j, 1}, {i, j, 2}, {i + 1, j - 1, 1}, {i, j - 1, 2}};
      case 1:
        return {{i, j, 0}, {i, j, 2}, {i - 1, j + 1, 0}, {i - 1, j, 2}};
      default:
        return {{i, j, 0}, {i, j, 1}, {i + 1, j, 1}, {i, j + 1, 0}};
    }
  };
  r.faces_at = [](int i, int j) -> std::vector<std::vector<Cell>> {
    return {
        {{i, j, 0}, {i, j, 1}, {i, j, 2}},
        {{i, j, 2}, {i + 1, j, 1}, {i, j + 1, 0}},
        {{i, j, 0}, {i, j, 1}, {i - 1, j, 2}, {i - 1, j, 0}, {i, j - 1, 1}, {i, j - 1, 2}},
    };
  };
  r.probes = {{{{0, 0, 0}, {0, 0, 1}}, "edge"}};
  return r;
}

}  // namespace detail

// A finite patch of an infinite tiling, grown far enough around its probe
// edges that every distance relevant to their curvature is realized as in
// the infinite tiling (boundary at combinatorial distance > radius).
inline Generated tiling_patch(const std::string& kind, int radius) {
  if (radius < 4)
    fail(ErrorCode::RadiusTooSmall, "tiling patches need radius >= 4");
  detail::TilingRules rules;
  if (kind == "triangular")
    rules = detail::triangular_rules();
  else if (kind == "square")
    rules = detail::square_rules();
  else if (kind == "hexagonal")
    rules = detail::hexagonal_rules();
  else if (kind == "snub_square")
    rules = detail::snub_square_rules();
  else if (kind == "trihexagonal")
    rules = detail::trihexagonal_rules();
  else
    fail(ErrorCode::UnknownName, "unknown tiling '" + kind + "'");

  // Keep everything within graph distance radius+1 of a probe endpoint.
  std::map<detail::Cell, int> id;
  std::vector<detail::Cell> order;
  std::deque<std::pair<detail::Cell, int>> queue;
  auto visit = [&](const detail::Cell& c, int depth) {
    if (id.count(c)) return;
    id[c] = static_cast<int>(order.size());
    order.push_back(c);
    queue.emplace_back(c, depth);
  };
  for (const auto& [pair, label] : rules.probes) {
    visit(pair.first, 0);
    visit(pair.second, 0);
  }
  while (!queue.empty()) {
    auto [c, depth] = queue.front();
    queue.pop_front();
    if (depth == radius + 1) continue;
    for (const auto& nb : rules.neighbors(c)) visit(nb, depth + 1);
  }

  std::vector<EdgeSpec> edges;
  for (const auto& c : order)
    for (const auto& nb : rules.neighbors(c)) {
      auto it = id.find(nb);
      if (it != id.end() && id[c] < it->second)
        edges.push_back({VertexId(id[c]), VertexId(it->second), Rat(1)});
    }

  std::vector<Face> faces;
  int lo_i = 0, hi_i = 0, lo_j = 0, hi_j = 0;
  for (const auto& c : order) {
    lo_i = std::min(lo_i, c[0]);
    hi_i = std::max(hi_i, c[0]);
    lo_j = std::min(lo_j, c[1]);
    hi_j = std::max(hi_j, c[1]);
  }
  for (int i = lo_i - 2; i <= hi_i + 2; ++i)
    for (int j = lo_j - 2; j <= hi_j + 2; ++j)
      for (const auto& candidate : rules.faces_at(i, j)) {
        Face face;
        for (const auto& c : candidate) {
          auto it = id.find(c);
          if (it == id.end()) break;
          face.push_back(VertexId(it->second));
        }
        if (face.size() == candidate.size()) faces.push_back(std::move(face));
      }

  std::vector<ProbeEdge> probes;
  for (const auto& [pair, label] : rules.probes)
    probes.push_back({VertexId(id.at(pair.first)), VertexId(id.at(pair.second)), label});
  return {build_complex(static_cast<int>(order.size()), edges, faces),
          "tiling:" + kind + "," + std::to_string(radius), probes};
}

}  // namespace ricci

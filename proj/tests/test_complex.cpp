#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ricci/complex.hpp"
#include "ricci/generators.hpp"
#include "ricci/metric.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using ricci::build_complex;
using ricci::Complex2;
using ricci::EdgeSpec;
using ricci::Error;
using ricci::ErrorCode;
using ricci::Rat;
using ricci::VertexId;

namespace {

void expect_error(ErrorCode code, const std::function<void()>& body) {
  try {
    body();
    FAIL("expected error " << ricci::error_code_name(code));
  } catch (const Error& e) {
    CHECK(e.code() == code);
  }
}

Complex2 path3() { return build_complex(3, {{0, 1, {}}, {1, 2, {}}}); }

}  // namespace

TEST_CASE("construction validates its input") {
  SECTION("well-formed complexes build") {
    const Complex2 c = path3();
    CHECK(c.vertex_count() == 3);
    CHECK(c.edges().size() == 2);
    CHECK(c.unit_lengths());
    CHECK_FALSE(c.faces().has_value());
  }
  SECTION("vertices out of range") {
    expect_error(ErrorCode::IndexOutOfRange, [] { build_complex(2, {{0, 2, {}}}); });
    expect_error(ErrorCode::IndexOutOfRange, [] { build_complex(2, {{-1, 0, {}}}); });
    expect_error(ErrorCode::IndexOutOfRange, [] { build_complex(-1, {}); });
  }
  SECTION("loops rejected") {
    expect_error(ErrorCode::LoopEdge, [] { build_complex(2, {{1, 1, {}}}); });
  }
  SECTION("duplicates rejected in either orientation") {
    expect_error(ErrorCode::DuplicateEdge,
                 [] { build_complex(2, {{0, 1, {}}, {0, 1, Rat(2)}}); });
    expect_error(ErrorCode::DuplicateEdge, [] { build_complex(2, {{0, 1, {}}, {1, 0, {}}}); });
  }
  SECTION("non-positive lengths rejected") {
    expect_error(ErrorCode::NonPositiveLength, [] { build_complex(2, {{0, 1, Rat(0)}}); });
    expect_error(ErrorCode::NonPositiveLength, [] { build_complex(2, {{0, 1, Rat(-1, 2)}}); });
  }
  SECTION("faces must be genuine cycles of edges") {
    expect_error(ErrorCode::InvalidFace, [] {
      build_complex(3, {{0, 1, {}}, {1, 2, {}}, {0, 2, {}}},
                    std::vector<ricci::Face>{{0, 1}});
    });
    expect_error(ErrorCode::InvalidFace, [] {
      build_complex(3, {{0, 1, {}}, {1, 2, {}}, {0, 2, {}}},
                    std::vector<ricci::Face>{{0, 1, 1}});
    });
    expect_error(ErrorCode::FaceUsesMissingEdge, [] {
      build_complex(4, {{0, 1, {}}, {1, 2, {}}, {2, 3, {}}, {0, 3, {}}},
                    std::vector<ricci::Face>{{0, 1, 2}});
    });
    const Complex2 square =
        build_complex(4, {{0, 1, {}}, {1, 2, {}}, {2, 3, {}}, {0, 3, {}}},
                      std::vector<ricci::Face>{{0, 1, 2, 3}});
    REQUIRE(square.faces().has_value());
    CHECK(square.faces()->size() == 1);
  }
}

TEST_CASE("adjacency accessors") {
  const Complex2 c = build_complex(4, {{2, 0, Rat(3, 2)}, {0, 1, {}}, {1, 2, {}}});
  CHECK(ricci::degree(c, 0) == 2);
  CHECK(ricci::degree(c, 3) == 0);
  CHECK(c.neighbors(0) == std::vector<VertexId>{1, 2});
  CHECK(c.has_edge(0, 2));
  CHECK(c.has_edge(2, 0));
  CHECK_FALSE(c.has_edge(0, 3));
  CHECK_FALSE(c.has_edge(1, 1));
  CHECK(c.edge_length(0, 2) == Rat(3, 2));
  CHECK(c.edge_length(2, 0) == Rat(3, 2));
  CHECK_FALSE(c.unit_lengths());
  expect_error(ErrorCode::NotAnEdge, [&] { (void)c.edge_length(0, 3); });
  expect_error(ErrorCode::IndexOutOfRange, [&] { (void)c.neighbors(4); });

  SECTION("edge list is canonical and sorted") {
    const auto& e = c.edges();
    REQUIRE(e.size() == 3);
    CHECK(e[0] == std::make_pair(0, 1));
    CHECK(e[1] == std::make_pair(0, 2));
    CHECK(e[2] == std::make_pair(1, 2));
  }
}

TEST_CASE("sphere and ball orderings") {
  const Complex2 c = build_complex(5, {{3, 1, {}}, {1, 0, {}}, {1, 4, {}}, {2, 4, {}}});
  CHECK(ricci::sphere(c, 1) == std::vector<VertexId>{0, 3, 4});
  CHECK(ricci::ball(c, 1) == std::vector<VertexId>{1, 0, 3, 4});
  CHECK(ricci::ball(c, 2) == std::vector<VertexId>{2, 4});
}

TEST_CASE("triangle counting on edges") {
  const auto octa = ricci::platonic("octahedron").complex;
  for (const auto& [u, v] : octa.edges()) CHECK(ricci::triangles_on_edge(octa, u, v) == 2);
  const auto cube = ricci::platonic("cube").complex;
  for (const auto& [u, v] : cube.edges()) CHECK(ricci::triangles_on_edge(cube, u, v) == 0);
  expect_error(ErrorCode::NotAnEdge, [&] { ricci::triangles_on_edge(cube, 0, 2); });
}

TEST_CASE("distances agree with exhaustive path enumeration") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    std::vector<EdgeSpec> edges;
    std::vector<oracles::RawEdge> raw;
    // a random spanning tree keeps the graph connected...
    for (int v = 1; v < n; ++v) {
      const int u = static_cast<int>(rng() % static_cast<unsigned>(v));
      const Rat len = Rat(1 + static_cast<long>(rng() % 5)) / (1 + static_cast<long>(rng() % 3));
      edges.push_back({u, v, len});
      raw.push_back({u, v, len});
    }
    // ...plus a few random chords
    for (int extra = 0; extra < n; ++extra) {
      const int u = static_cast<int>(rng() % static_cast<unsigned>(n));
      const int v = static_cast<int>(rng() % static_cast<unsigned>(n));
      if (u == v) continue;
      bool dup = false;
      for (const auto& e : raw)
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) dup = true;
      if (dup) continue;
      const Rat len = Rat(1 + static_cast<long>(rng() % 5)) / (1 + static_cast<long>(rng() % 3));
      edges.push_back({u, v, len});
      raw.push_back({u, v, len});
    }
    const Complex2 c = build_complex(n, edges);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        const auto expected = oracles::path_enum_distance(n, raw, u, v);
        REQUIRE(expected.has_value());
        CHECK(ricci::distance(c, u, v) == *expected);
      }
  }
}

TEST_CASE("unit-length distances take the BFS fast path consistently") {
  const auto dodeca = ricci::platonic("dodecahedron").complex;
  std::vector<oracles::RawEdge> raw;
  for (const auto& [u, v] : dodeca.edges()) raw.push_back({u, v, Rat(1)});
  for (VertexId u = 0; u < 20; u += 3)
    for (VertexId v = 0; v < 20; v += 4)
      CHECK(ricci::distance(dodeca, u, v) ==
            *oracles::path_enum_distance(20, raw, u, v));
}

TEST_CASE("triangle inequality holds across random triples") {
  const auto icosa = ricci::platonic("icosahedron").complex;
  const auto snub = ricci::tiling_patch("snub_square", 4).complex;
  std::mt19937 rng(7);
  for (const Complex2* c : {&icosa, &snub}) {
    const int n = c->vertex_count();
    for (int trial = 0; trial < 1000; ++trial) {
      const VertexId x = static_cast<VertexId>(rng() % static_cast<unsigned>(n));
      const VertexId y = static_cast<VertexId>(rng() % static_cast<unsigned>(n));
      const VertexId z = static_cast<VertexId>(rng() % static_cast<unsigned>(n));
      CHECK(ricci::distance(*c, x, z) <=
            ricci::distance(*c, x, y) + ricci::distance(*c, y, z));
    }
  }
}

TEST_CASE("distance basics") {
  const Complex2 c = path3();
  CHECK(ricci::distance(c, 0, 0) == 0);
  CHECK(ricci::distance(c, 0, 2) == 2);
  CHECK(ricci::diameter(c) == 2);
  SECTION("symmetry") {
    const auto box = ricci::parallelepiped(Rat(2), Rat(1), Rat(3)).complex;
    for (VertexId u = 0; u < 8; ++u)
      for (VertexId v = 0; v < 8; ++v)
        CHECK(ricci::distance(box, u, v) == ricci::distance(box, v, u));
  }
  SECTION("unreachable vertices are an error") {
    const Complex2 disconnected = build_complex(4, {{0, 1, {}}, {2, 3, {}}});
    expect_error(ErrorCode::Unreachable, [&] { ricci::distance(disconnected, 0, 3); });
    expect_error(ErrorCode::Unreachable, [&] { ricci::diameter(disconnected); });
  }
}

TEST_CASE("solid diameters") {
  CHECK(ricci::diameter(ricci::platonic("tetrahedron").complex) == 1);
  CHECK(ricci::diameter(ricci::platonic("cube").complex) == 3);
  CHECK(ricci::diameter(ricci::platonic("octahedron").complex) == 2);
  CHECK(ricci::diameter(ricci::platonic("dodecahedron").complex) == 5);
  CHECK(ricci::diameter(ricci::platonic("icosahedron").complex) == 3);
}

TEST_CASE("local support pairs the two balls with their distance matrix") {
  const auto tetra = ricci::platonic("tetrahedron").complex;
  const auto ls = ricci::local_support(tetra, 0, 1);
  CHECK(ls.around_x == std::vector<VertexId>{0, 1, 2, 3});
  CHECK(ls.around_xp == std::vector<VertexId>{1, 0, 2, 3});
  const auto expected = fixtures::tetra_distances();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      // both orderings enumerate the same vertex set, so compare by id
      const auto a = static_cast<std::size_t>(ls.around_x[i]);
      const auto b = static_cast<std::size_t>(ls.around_xp[j]);
      CHECK(ls.dist.d[i][j] == expected[a][b]);
    }
  expect_error(ErrorCode::SameVertex, [&] { ricci::local_support(tetra, 2, 2); });
}

TEST_CASE("parallelepiped local distances match the closed form") {
  const Rat a(5, 3), b(1, 2), c(7);
  const auto box = ricci::parallelepiped(a, b, c).complex;
  // fixture order: a-edge endpoints, then the b- and c-neighbors of both
  const auto expected = fixtures::parallelepiped_distances6(a, b, c);
  for (VertexId i = 0; i < 6; ++i)
    for (VertexId j = 0; j < 6; ++j)
      CHECK(ricci::distance(box, i, j) ==
            expected[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  CHECK(ricci::distance(box, 0, 6) == a + b + c);
}

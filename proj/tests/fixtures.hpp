#pragma once

// Frozen reference data for the test suite: distance matrices, optimal
// couplings, Kuhn-Tucker multipliers and curvature tables for the built-in
// families.  Everything here was worked out by hand, independently of the
// library code, and is used to pin the implementation down.

#include <gmpxx.h>

#include <vector>

namespace fixtures {

using Rat = mpq_class;
using Mat = std::vector<std::vector<Rat>>;

// ---------------------------------------------------------------- tetrahedron

// Vertex order 1,2,3,4 (0-based: 0,1,2,3).  All pairwise distances are 1.
inline Mat tetra_distances() {
  Mat d(4, std::vector<Rat>(4, 1));
  for (int i = 0; i < 4; ++i) d[i][i] = 0;
  return d;
}

// Unique optimal coupling from mu_1^t to mu_2^t for t <= 3/4: keep t/3 on the
// diagonal, shift 1 - 4t/3 from vertex 1 to vertex 2.  Cost 1 - 4t/3.
inline Mat tetra_coupling(const Rat& t) {
  Mat xi(4, std::vector<Rat>(4, 0));
  for (int i = 0; i < 4; ++i) xi[i][i] = t / 3;
  xi[0][1] = 1 - 4 * t / 3;
  return xi;
}
inline Rat tetra_cost(const Rat& t) { return 1 - 4 * t / 3; }

// Multipliers certifying the coupling above: D = C_2 - L_2 + nu, i.e.
// lambda = (0,-1,0,0), lambda' = (0,1,0,0), nu as below.
inline std::vector<Rat> tetra_lambda() { return {0, -1, 0, 0}; }
inline std::vector<Rat> tetra_lambda_prime() { return {0, 1, 0, 0}; }
inline Mat tetra_nu() {
  return {{0, 0, 1, 1},
          {2, 0, 2, 2},
          {1, 0, 0, 1},
          {1, 0, 1, 0}};
}

// The t = 1 transference plan (mass 1/3 at (2,1), (3,3), (4,4)), certified by
// D = L_2 - C_2 + nu.  Cost 1/3, hence kappa^1 = 2/3.
inline Mat tetra_coupling_t1() {
  Mat xi(4, std::vector<Rat>(4, 0));
  xi[1][0] = Rat(1, 3);
  xi[2][2] = Rat(1, 3);
  xi[3][3] = Rat(1, 3);
  return xi;
}
inline std::vector<Rat> tetra_lambda_t1() { return {0, 1, 0, 0}; }
inline std::vector<Rat> tetra_lambda_prime_t1() { return {0, -1, 0, 0}; }
inline Mat tetra_nu_t1() {
  return {{0, 2, 1, 1},
          {0, 0, 0, 0},
          {1, 2, 0, 1},
          {1, 2, 1, 0}};
}

// ------------------------------------------------- generic star pair distances
//
// Expected (d+1) x (d'+1) distance submatrix between B(x) = (1,...,d+1) and
// the column set (1,2,3,4,d+2,...,n), n = d+d'-2, for the star-pair family
// with x = 1, x' = 2, shared neighbors 3,4.  Valid for d >= 3, d' >= max(d,5)
// (for d >= 5 this is the generic template; d = 4 and d = 3 have their own
// shapes).  Column order here is 1,2,3,4,d+2..n.
inline Mat star_pair_dtilde(int d, int dp) {
  const int rows = d + 1;
  const int cols = dp + 1;
  const int excl = dp - 3;  // exclusive neighbors of x', columns 4..cols-1
  Mat D(rows, std::vector<Rat>(cols, 0));
  auto row = [&](int i, Rat c1, Rat c2, Rat c3, Rat c4, Rat first, Rat mid, Rat last) {
    D[i][0] = c1; D[i][1] = c2; D[i][2] = c3; D[i][3] = c4;
    for (int k = 0; k < excl; ++k) {
      Rat v = mid;
      if (k == 0) v = first;
      if (k == excl - 1) v = last;
      D[i][4 + k] = v;
    }
  };
  row(0, 0, 1, 1, 1, 2, 2, 2);  // x
  row(1, 1, 0, 1, 1, 1, 1, 1);  // x'
  row(2, 1, 1, 0, 2, 2, 2, 1);  // shared neighbor 3
  row(3, 1, 1, 2, 0, 1, 2, 2);  // shared neighbor 4
  if (d == 3) return D;
  if (d == 4) {
    row(4, 1, 2, 1, 1, 2, 3, 2);  // the single exclusive neighbor of x
    return D;
  }
  row(4, 1, 2, 1, 2, 3, 3, 2);          // first exclusive neighbor (hooked to 3)
  for (int i = 5; i < d; ++i) row(i, 1, 2, 2, 2, 3, 3, 3);
  row(d, 1, 2, 2, 1, 2, 3, 3);          // last exclusive neighbor (hooked to 4)
  return D;
}

// ------------------------------------------------------------- parallelepiped
//
// Vertex order 1..6 (0-based 0..5) where 1,2 are the endpoints of an a-edge,
// 3 = b-neighbor of 2, 4 = b-neighbor of 1, 5 = c-neighbor of 1,
// 6 = c-neighbor of 2.
inline Mat parallelepiped_distances6(const Rat& a, const Rat& b, const Rat& c) {
  const Rat s = a + b + c;
  return {{0, a, a + b, b, c, c + a},
          {a, 0, b, a + b, c + a, c},
          {a + b, b, 0, a, s, b + c},
          {b, a + b, a, 0, b + c, s},
          {c, c + a, s, b + c, 0, a},
          {c + a, c, b + c, s, a, 0}};
}

// Optimal coupling between the normalized walk measures at the two endpoints
// of an a-edge; cost a(1 - t(1/a - 1/(a+b+c))).
inline Mat parallelepiped_coupling6(const Rat& a, const Rat& b, const Rat& c,
                                    const Rat& t) {
  const Rat N = a + b + c;
  Mat xi(6, std::vector<Rat>(6, 0));
  xi[0][0] = t / 2 * (1 / a - 1 / N);
  xi[0][1] = 1 - t / 2 * (2 / a + 1 / b + 1 / c - 4 / N);
  xi[1][1] = t / 2 * (1 / a - 1 / N);
  xi[3][2] = t / 2 * (1 / b - 1 / N);
  xi[4][5] = t / 2 * (1 / c - 1 / N);
  return xi;
}
inline Rat parallelepiped_cost(const Rat& a, const Rat& b, const Rat& c, const Rat& t) {
  return a * (1 - t * (1 / a - 1 / (a + b + c)));
}

// Multipliers: D - a L_1 - a L_4 - a L_5 + a C_1 + a C_4 + a C_5 = nu >= 0,
// i.e. lambda = (a,0,0,a,a,0), lambda' = (-a,0,0,-a,-a,0).
inline std::vector<Rat> parallelepiped_lambda(const Rat& a) {
  return {a, 0, 0, a, a, 0};
}
inline std::vector<Rat> parallelepiped_lambda_prime(const Rat& a) {
  return {-a, 0, 0, -a, -a, 0};
}
inline Mat parallelepiped_nu(const Rat& a, const Rat& b, const Rat& c) {
  return {{0, 0, b, b, c, c},
          {2 * a, 0, b, 2 * a + b, 2 * a + c, c},
          {2 * a + b, b, 0, 2 * a, 2 * a + b + c, b + c},
          {b, b, 0, 0, b + c, b + c},
          {c, c, b + c, b + c, 0, 0},
          {2 * a + c, c, b + c, 2 * a + b + c, 2 * a, 0}};
}

// --------------------------------------------------------------- value tables

struct PlatonicRow {
  const char* name;
  Rat ric;        // coarse Ricci curvature per edge
  Rat kappa1;     // kappa at t = 1
  Rat forman3;    // Forman curvature / 3
};

inline std::vector<PlatonicRow> platonic_table() {
  return {{"tetrahedron", Rat(4, 3), Rat(2, 3), Rat(4, 3)},
          {"cube", Rat(2, 3), Rat(0), Rat(2, 3)},
          {"octahedron", Rat(1), Rat(1, 2), Rat(2, 3)},
          {"dodecahedron", Rat(0), Rat(-1, 3), Rat(0)},
          {"icosahedron", Rat(2, 5), Rat(1, 5), Rat(0)}};
}

struct DegreeRow {
  int d;
  int dp;
  Rat ric;
  Rat kappa1;
};

// Explicit low-degree values for triangulated surfaces; beyond these,
// ric = 4/d + 8/d' - 2 (d' >= 6).
inline std::vector<DegreeRow> degree_table() {
  return {{3, 3, Rat(4, 3), Rat(2, 3)},
          {4, 4, Rat(3, 4), Rat(1, 2)},
          {4, 5, Rat(11, 20), Rat(7, 20)},
          {4, 6, Rat(1, 3), Rat(1, 4)},
          {5, 5, Rat(2, 5), Rat(1, 5)},
          {5, 6, Rat(2, 15), Rat(1, 10)}};
}

inline Rat degree_general_ric(int d, int dp) {
  return Rat(4) / d + Rat(8) / dp - 2;
}

// kappa^1 closed forms beyond the explicit table: 4/d + 8/d' - 2 for d >= 4
// (d' >= 7 when d <= 5, d' >= 6 when d >= 6), and 7/d' - 2/3 for d = 3, d' >= 8.
inline Rat degree_general_kappa1(int d, int dp) {
  if (d == 3) return Rat(7) / dp - Rat(2, 3);
  return Rat(4) / d + Rat(8) / dp - 2;
}

// Jost-Liu style lower bound on kappa^1 for degrees (d, d') and sharp(e)
// triangles containing the edge.
inline Rat jost_liu_reference(int d, int dp, int tri) {
  auto pos = [](const Rat& x) { return x > 0 ? x : Rat(0); };
  Rat s(tri);
  return s / dp - pos(1 - Rat(1, d) - Rat(1, dp) - s / Rat(d)) -
         pos(1 - Rat(1, d) - Rat(1, dp) - s / Rat(dp));
}

}  // namespace fixtures

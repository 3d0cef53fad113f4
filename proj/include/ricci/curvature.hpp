#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ricci/laplacian.hpp"
#include "ricci/measure.hpp"
#include "ricci/transport.hpp"

namespace ricci {

// ------------------------------------------------------------------- walks

enum class WalkKind { Uniform, Laplacian };

// Which one-step random walk drives the curvature: the lazy uniform walk, or
// a walk generated by a Laplacian-type operator (normalized so jump = t).
struct WalkSpec {
  WalkKind kind = WalkKind::Uniform;
  std::optional<Laplacian> op;

  static WalkSpec uniform() { return {}; }
  static WalkSpec laplacian(Laplacian L) {
    WalkSpec w;
    w.kind = WalkKind::Laplacian;
    w.op = std::move(L);
    return w;
  }
};

inline Measure walk_measure(const Complex2& c, const WalkSpec& walk, VertexId x,
                            const Time& t) {
  if (walk.kind == WalkKind::Uniform) return lazy_walk(c, x, t);
  return laplacian_walk(c, *walk.op, x, t);
}

// Largest admissible time before the mass at x would go negative.
inline Rat walk_max_time(const Complex2& c, const WalkSpec& walk, VertexId x) {
  if (walk.kind == WalkKind::Uniform) return Rat(1);
  return std::min(Rat(1), laplacian_max_time(c, *walk.op, x));
}

// ---------------------------------------------------------------- curvature

// A curvature evaluation on one vertex pair, bundled with the transport run
// that produced it so callers can audit the certificate.
struct EdgeCurvature {
  VertexId x = 0;
  VertexId xp = 0;
  Rat value;        // kappa^t, kappa^1 or ric, depending on the call
  Rat t_used;       // walk time of the underlying transport problem
  Rat dist;         // d(x, x')
  Rat wasserstein;  // W1 between the walk measures at t_used
  TransportRun run;
};

// kappa^t(x, x') = 1 - W1(mu_x^t, mu_{x'}^t) / d(x, x').
inline EdgeCurvature kappa_t(const Complex2& c, VertexId x, VertexId xp, const Time& t,
                             const WalkSpec& walk = WalkSpec::uniform()) {
  if (x == xp) fail(ErrorCode::SameVertex, "curvature needs two distinct vertices");
  EdgeCurvature result;
  result.x = x;
  result.xp = xp;
  result.t_used = t;
  result.dist = distance(c, x, xp);
  result.run = wasserstein1(c, walk_measure(c, walk, x, t), walk_measure(c, walk, xp, t));
  result.wasserstein = result.run.solution.value;
  result.value = 1 - result.wasserstein / result.dist;
  return result;
}

inline EdgeCurvature kappa_one(const Complex2& c, VertexId x, VertexId xp,
                               const WalkSpec& walk = WalkSpec::uniform()) {
  return kappa_t(c, x, xp, Rat(1), walk);
}

// Coarse Ricci curvature ric(x, x') = kappa^t / t for small t.  Evaluates at
// t0 and t0/2 and insists the two quotients agree, which pins the linear
// regime; if they differ the caller must pass a smaller t0.  The default t0
// is 1/4, shrunk for Laplacian walks so both endpoint masses stay >= 3/4.
inline EdgeCurvature ollivier_ricci(const Complex2& c, VertexId x, VertexId xp,
                                    const WalkSpec& walk = WalkSpec::uniform(),
                                    std::optional<Time> t0 = std::nullopt) {
  Time t = t0.value_or(Rat(1, 4));
  if (!t0 && walk.kind == WalkKind::Laplacian) {
    const Rat quarter =
        Rat(std::min(walk_max_time(c, walk, x), walk_max_time(c, walk, xp)) / 4);
    t = std::min(t, quarter);
  }
  if (t <= 0) fail(ErrorCode::InvalidTime, "ric needs a positive time");
  EdgeCurvature at_t = kappa_t(c, x, xp, t, walk);
  const EdgeCurvature at_half = kappa_t(c, x, xp, t / 2, walk);
  const Rat ric = at_t.value / t;
  if (at_half.value / (t / 2) != ric)
    fail(ErrorCode::NotInLinearRegime,
         "kappa^t/t differs between t = " + rat_to_string(t) + " and t/2; pass a smaller t0");
  at_t.value = ric;
  return at_t;
}

// Closed-form ric table for edges of triangulated surfaces by degree pair.
// Beyond the tabulated low-degree pairs the general law 4/d + 8/d' - 2 holds
// once d' >= 6; the pairs (3,4) and (3,5) admit no closed form here.
inline Rat degree_table_ric(int d, int dp) {
  if (d > dp) std::swap(d, dp);
  if (d < 3) fail(ErrorCode::DegreeTooSmall, "triangulated surfaces need degrees >= 3");
  if (d == 3 && dp == 3) return Rat(4, 3);
  if (d == 4 && dp == 4) return Rat(3, 4);
  if (d == 4 && dp == 5) return Rat(11, 20);
  if (d == 4 && dp == 6) return Rat(1, 3);
  if (d == 5 && dp == 5) return Rat(2, 5);
  if (d == 5 && dp == 6) return Rat(2, 15);
  if (dp >= 6) return Rat(4) / d + Rat(8) / dp - 2;
  fail(ErrorCode::UnsupportedDegreePair,
       "(" + std::to_string(d) + "," + std::to_string(dp) + ") has no tabulated value");
}

// Lower bound on kappa^1 from degrees and triangle count alone:
//   #/d' - (1 - 1/d - 1/d' - #/d)_+ - (1 - 1/d - 1/d' - #/d')_+, d <= d'.
inline Rat jost_liu_bound(const Complex2& c, VertexId x, VertexId xp) {
  const Rat tri(triangles_on_edge(c, x, xp));  // also validates the edge
  int d = degree(c, x), dp = degree(c, xp);
  if (d > dp) std::swap(d, dp);
  auto positive_part = [](const Rat& v) { return v > 0 ? v : Rat(0); };
  return tri / dp - positive_part(1 - Rat(1, d) - Rat(1, dp) - tri / d) -
         positive_part(1 - Rat(1, d) - Rat(1, dp) - tri / dp);
}

// Forman curvature of an edge in a 2-complex with unit weights:
//   F(e) = #faces containing e + 2 - #edges parallel to e,
// where e' is parallel to e when they share a vertex but no face, or a face
// but no vertex.
inline Rat forman_curvature(const Complex2& c, VertexId x, VertexId xp) {
  if (!c.has_edge(x, xp))
    fail(ErrorCode::NotAnEdge, "no edge " + std::to_string(x) + "-" + std::to_string(xp));
  if (!c.faces())
    fail(ErrorCode::FacesMissing, "Forman curvature needs the face list");
  const auto& faces = *c.faces();
  auto face_has_edge = [&](const Face& f, VertexId u, VertexId v) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      const VertexId a = f[i], b = f[(i + 1) % f.size()];
      if ((a == u && b == v) || (a == v && b == u)) return true;
    }
    return false;
  };
  std::set<int> my_faces;
  for (int k = 0; k < static_cast<int>(faces.size()); ++k)
    if (face_has_edge(faces[k], x, xp)) my_faces.insert(k);

  int parallel = 0;
  for (const auto& [u, v] : c.edges()) {
    if ((u == x && v == xp) || (u == xp && v == x)) continue;
    const bool shares_vertex = (u == x || u == xp || v == x || v == xp);
    bool shares_face = false;
    for (int k : my_faces)
      if (face_has_edge(faces[k], u, v)) shares_face = true;
    if (shares_vertex != shares_face) ++parallel;
  }
  return Rat(static_cast<int>(my_faces.size()) + 2 - parallel);
}

// ------------------------------------------------------------ global checks

struct MyersReport {
  Rat rho;                   // minimum edge ric
  std::optional<Rat> bound;  // 2/rho when rho > 0
  Rat diameter;
  bool holds = false;  // diameter <= bound (vacuously true when rho <= 0)
  bool sharp = false;  // diameter == bound exactly
};

// Discrete Bonnet-Myers check: if every edge has ric >= rho > 0 then the
// diameter is at most 2/rho.
inline MyersReport myers_check(const Complex2& c, const WalkSpec& walk = WalkSpec::uniform(),
                               std::optional<Time> t0 = std::nullopt) {
  MyersReport report;
  bool first = true;
  for (const auto& [u, v] : c.edges()) {
    const Rat ric = ollivier_ricci(c, u, v, walk, t0).value;
    if (first || ric < report.rho) report.rho = ric;
    first = false;
  }
  if (first) fail(ErrorCode::NotAnEdge, "complex has no edges");
  report.diameter = diameter(c);
  if (report.rho > 0) {
    report.bound = 2 / report.rho;
    report.holds = report.diameter <= *report.bound;
    report.sharp = report.diameter == *report.bound;
  } else {
    report.holds = true;
    report.sharp = false;
  }
  return report;
}

struct ConcavityReport {
  Rat lhs;  // kappa^t(x_0, x_n) * d(x_0, x_n)
  Rat rhs;  // sum of d(x_{i-1}, x_i) * kappa^t(x_{i-1}, x_i)
  bool holds = false;
};

// Concavity of kappa^t * d along geodesics: for a geodesic vertex path
// x_0, ..., x_n the endpoint term dominates the sum over the pieces.
inline ConcavityReport concavity_check(const Complex2& c, const WalkSpec& walk,
                                       const Time& t, const std::vector<VertexId>& path) {
  if (path.size() < 2) fail(ErrorCode::NotAGeodesic, "path needs at least two vertices");
  Rat length(0);
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (path[i] == path[i - 1]) fail(ErrorCode::SameVertex, "repeated path vertex");
    length += distance(c, path[i - 1], path[i]);
  }
  const Rat direct = distance(c, path.front(), path.back());
  if (length != direct)
    fail(ErrorCode::NotAGeodesic, "path length " + rat_to_string(length) +
                                      " exceeds the distance " + rat_to_string(direct));
  ConcavityReport report;
  report.lhs = kappa_t(c, path.front(), path.back(), t, walk).value * direct;
  report.rhs = 0;
  for (std::size_t i = 1; i < path.size(); ++i)
    report.rhs += kappa_t(c, path[i - 1], path[i], t, walk).value *
                  distance(c, path[i - 1], path[i]);
  report.holds = report.lhs >= report.rhs;
  return report;
}

// Coarse curvature between two conical singularities of a flat surface with
// nonnegative angular defects alpha, alpha' (defect 0 = flat, approaching
// 2*pi = degenerate cone); the only floating-point computation in the
// library.
inline double cone_curvature(double alpha, double alpha_prime) {
  constexpr double two_pi = 2 * std::numbers::pi;
  if (!(alpha >= 0 && alpha < two_pi) || !(alpha_prime >= 0 && alpha_prime < two_pi))
    fail(ErrorCode::AngleOutOfRange, "angular defects must lie in [0, 2*pi)");
  return (4.0 / 3.0) * (std::sin(alpha_prime / 2) / (two_pi - alpha_prime) +
                        std::sin(alpha / 2) / (two_pi - alpha));
}

}  // namespace ricci

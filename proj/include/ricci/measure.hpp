#pragma once

#include <map>
#include <string>
#include <vector>

#include "ricci/complex.hpp"
#include "ricci/laplacian.hpp"
#include "ricci/metric.hpp"

namespace ricci {

// Walk times are exact rationals in [0, 1].
using Time = Rat;

inline void check_time(const Time& t) {
  if (t < 0 || t > 1)
    fail(ErrorCode::InvalidTime, "time " + rat_to_string(t) + " outside [0,1]");
}

// A finitely supported probability measure on the vertices.  Masses are
// strictly positive (zero-mass entries are pruned) and sum to exactly 1.
class Measure {
 public:
  static Measure from_masses(std::map<VertexId, Rat> masses) {
    Measure m;
    Rat total(0);
    for (auto it = masses.begin(); it != masses.end();) {
      if (it->second < 0)
        fail(ErrorCode::NegativeMass, "mass at vertex " + std::to_string(it->first));
      total += it->second;
      if (it->second == 0)
        it = masses.erase(it);
      else
        ++it;
    }
    if (total != 1)
      fail(ErrorCode::InvalidMeasure, "masses sum to " + rat_to_string(total));
    m.masses_ = std::move(masses);
    return m;
  }

  Rat mass(VertexId y) const {
    auto it = masses_.find(y);
    return it == masses_.end() ? Rat(0) : it->second;
  }

  // Support vertices in increasing order.
  std::vector<VertexId> support() const {
    std::vector<VertexId> s;
    s.reserve(masses_.size());
    for (const auto& [y, mass] : masses_) s.push_back(y);
    return s;
  }

  const std::map<VertexId, Rat>& entries() const { return masses_; }

  Rat total() const {
    Rat t(0);
    for (const auto& [y, mass] : masses_) t += mass;
    return t;
  }

 private:
  std::map<VertexId, Rat> masses_;
};

inline Measure dirac(VertexId x) { return Measure::from_masses({{x, Rat(1)}}); }

// Uniform measure on the neighbors of x.
inline Measure sphere_uniform(const Complex2& c, VertexId x) {
  const auto& nbrs = c.neighbors(x);
  if (nbrs.empty())
    fail(ErrorCode::IsolatedVertex, "vertex " + std::to_string(x) + " has no neighbors");
  std::map<VertexId, Rat> masses;
  for (VertexId y : nbrs) masses[y] = Rat(1, static_cast<int>(nbrs.size()));
  return Measure::from_masses(std::move(masses));
}

// Uniform measure on {x} together with the neighbors of x.
inline Measure ball_uniform(const Complex2& c, VertexId x) {
  c.check_vertex(x);
  const auto b = ball(c, x);
  std::map<VertexId, Rat> masses;
  for (VertexId y : b) masses[y] = Rat(1, static_cast<int>(b.size()));
  return Measure::from_masses(std::move(masses));
}

// Lazy uniform walk: (1-t) delta_x + t * uniform(S(x)).
inline Measure lazy_walk(const Complex2& c, VertexId x, const Time& t) {
  check_time(t);
  const auto& nbrs = c.neighbors(x);
  if (nbrs.empty())
    fail(ErrorCode::IsolatedVertex, "vertex " + std::to_string(x) + " has no neighbors");
  std::map<VertexId, Rat> masses;
  masses[x] = 1 - t;
  for (VertexId y : nbrs) masses[y] += t / static_cast<int>(nbrs.size());
  return Measure::from_masses(std::move(masses));
}

// Largest admissible walk time at x: 1 for the uniform walk; for a Laplacian
// walk the time where the mass at x hits zero.
inline Rat laplacian_max_time(const Complex2& c, const Laplacian& L, VertexId x) {
  const Rat norm = jump_normalizer(c, L, x);
  const Rat diag = L.entry(x, x);
  if (diag >= 0)
    fail(ErrorCode::InvalidLaplacian, "diagonal not negative at " + std::to_string(x));
  return norm / -diag;
}

// Walk driven by a Laplacian, normalized so the expected travelled distance
// (the jump) equals t: mu(y) = delta_x(y) + t * Delta_xy / normalizer.
inline Measure laplacian_walk(const Complex2& c, const Laplacian& L, VertexId x,
                              const Time& t) {
  check_time(t);
  const Rat norm = jump_normalizer(c, L, x);
  const Rat at_x = 1 + t * L.entry(x, x) / norm;
  if (at_x < 0) {
    const Rat max_t = laplacian_max_time(c, L, x);
    fail(ErrorCode::NegativeMass,
         "time " + rat_to_string(t) + " too large at vertex " + std::to_string(x) +
             "; largest admissible time is " + rat_to_string(max_t));
  }
  std::map<VertexId, Rat> masses;
  masses[x] = at_x;
  for (VertexId y : c.neighbors(x)) masses[y] = t * L.entry(x, y) / norm;
  return Measure::from_masses(std::move(masses));
}

// Expected distance to x under mu: sum_y d(x, y) mu(y).
inline Rat jump(const Complex2& c, const Measure& mu, VertexId x) {
  const auto support = mu.support();
  if (support.empty()) return Rat(0);
  const auto dist = shortest_distances(c, {x}, support);
  Rat total(0);
  for (std::size_t k = 0; k < support.size(); ++k)
    total += dist.d[0][k] * mu.mass(support[k]);
  return total;
}

}  // namespace ricci

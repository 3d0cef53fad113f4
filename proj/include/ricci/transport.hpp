#pragma once

#include <algorithm>
#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "ricci/measure.hpp"
#include "ricci/metric.hpp"

namespace ricci {

// A balanced transportation problem: move the row marginal mu onto the column
// marginal nu at minimal total cost.  rows/cols record which vertex each index
// stands for; cost[i][j] is the unit cost from rows[i] to cols[j].
struct TransportInstance {
  std::vector<VertexId> rows;
  std::vector<VertexId> cols;
  std::vector<Rat> mu;
  std::vector<Rat> nu;
  std::vector<std::vector<Rat>> cost;

  std::size_t m() const { return rows.size(); }
  std::size_t n() const { return cols.size(); }
};

inline void validate_instance(const TransportInstance& inst) {
  if (inst.mu.size() != inst.m() || inst.nu.size() != inst.n() ||
      inst.cost.size() != inst.m())
    fail(ErrorCode::ShapeMismatch, "marginal/cost sizes disagree");
  for (const auto& row : inst.cost)
    if (row.size() != inst.n()) fail(ErrorCode::ShapeMismatch, "ragged cost matrix");
  if (inst.m() == 0 || inst.n() == 0)
    fail(ErrorCode::ShapeMismatch, "empty marginal");
  Rat total_mu(0), total_nu(0);
  for (const auto& v : inst.mu) {
    if (v < 0) fail(ErrorCode::NegativeMass, "negative row marginal");
    total_mu += v;
  }
  for (const auto& v : inst.nu) {
    if (v < 0) fail(ErrorCode::NegativeMass, "negative column marginal");
    total_nu += v;
  }
  if (total_mu != total_nu)
    fail(ErrorCode::InfeasibleMarginals, "marginals sum to " + rat_to_string(total_mu) +
                                             " and " + rat_to_string(total_nu));
}

// Cost matrix = shortest-path distances between the two supports.
inline TransportInstance make_transport_instance(const Complex2& c, const Measure& mu,
                                                 const Measure& nu) {
  TransportInstance inst;
  inst.rows = mu.support();
  inst.cols = nu.support();
  for (VertexId y : inst.rows) inst.mu.push_back(mu.mass(y));
  for (VertexId y : inst.cols) inst.nu.push_back(nu.mass(y));
  inst.cost = shortest_distances(c, inst.rows, inst.cols).d;
  validate_instance(inst);
  return inst;
}

// Kuhn-Tucker data for an optimal coupling xi: the cost matrix decomposes as
// cost[i][j] = lambda[i] + lambda_prime[j] + nu_slack[i][j] with nu_slack >= 0
// vanishing wherever xi is positive.
struct DualCertificate {
  std::vector<Rat> lambda;
  std::vector<Rat> lambda_prime;
  std::vector<std::vector<Rat>> nu_slack;
};

struct TransportSolution {
  Rat value;                               // optimal total cost
  std::vector<std::vector<Rat>> coupling;  // m x n optimal plan (a vertex of the polytope)
  DualCertificate dual;
};

// ------------------------------------------------------------------- solver

namespace detail {

// Primal simplex specialized to the transportation polytope.  The basis is a
// spanning tree of the bipartite row/column graph with exactly m+n-1 cells;
// pivots follow Bland's rule (lowest-index entering variable, lowest-index
// leaving among the ratio ties), which precludes cycling even on the highly
// degenerate instances walk measures produce.  All arithmetic is exact.
class TransportSimplex {
 public:
  explicit TransportSimplex(const TransportInstance& inst)
      : inst_(inst),
        m_(static_cast<int>(inst.m())),
        n_(static_cast<int>(inst.n())),
        xi_(inst.m(), std::vector<Rat>(inst.n(), 0)),
        basic_(inst.m(), std::vector<char>(inst.n(), 0)) {}

  TransportSolution run() {
    northwest_corner();
    // Generous pivot budget: exceeding it can only mean the invariant
    // maintenance is broken, not that the instance is hard.
    const long budget = 1000L + 50L * m_ * n_ * (m_ + n_);
    for (long pivots = 0;; ++pivots) {
      if (pivots > budget)
        fail(ErrorCode::NumericOverflow, "pivot budget exhausted; solver invariant broken");
      compute_duals();
      const auto entering = find_entering();
      if (!entering.first) break;
      pivot(entering.second.first, entering.second.second);
    }
    TransportSolution sol;
    sol.coupling = xi_;
    sol.value = 0;
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < n_; ++j) sol.value += xi_[i][j] * inst_.cost[i][j];
    sol.dual.lambda = u_;
    sol.dual.lambda_prime = v_;
    sol.dual.nu_slack.assign(m_, std::vector<Rat>(n_, 0));
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < n_; ++j)
        sol.dual.nu_slack[i][j] = inst_.cost[i][j] - u_[i] - v_[j];
    return sol;
  }

 private:
  void northwest_corner() {
    std::vector<Rat> supply = inst_.mu;
    std::vector<Rat> demand = inst_.nu;
    int i = 0, j = 0;
    while (true) {
      const Rat q = std::min(supply[i], demand[j]);
      xi_[i][j] = q;
      basic_[i][j] = 1;
      supply[i] -= q;
      demand[j] -= q;
      if (i == m_ - 1 && j == n_ - 1) break;
      if (supply[i] == 0 && i < m_ - 1)
        ++i;
      else
        ++j;
    }
  }

  // Node ids: rows are 0..m-1, columns m..m+n-1.
  void compute_duals() {
    std::vector<std::vector<std::pair<int, std::pair<int, int>>>> tree(m_ + n_);
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < n_; ++j)
        if (basic_[i][j]) {
          tree[i].push_back({m_ + j, {i, j}});
          tree[m_ + j].push_back({i, {i, j}});
        }
    u_.assign(m_, Rat(0));
    v_.assign(n_, Rat(0));
    std::vector<char> seen(m_ + n_, 0);
    std::deque<int> queue{0};  // root at the first source row, lambda = 0
    seen[0] = 1;
    while (!queue.empty()) {
      const int node = queue.front();
      queue.pop_front();
      for (const auto& [next, cell] : tree[node]) {
        if (seen[next]) continue;
        seen[next] = 1;
        const auto [i, j] = cell;
        if (next >= m_)
          v_[j] = inst_.cost[i][j] - u_[i];
        else
          u_[i] = inst_.cost[i][j] - v_[j];
        queue.push_back(next);
      }
    }
  }

  std::pair<bool, std::pair<int, int>> find_entering() const {
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < n_; ++j)
        if (!basic_[i][j] && inst_.cost[i][j] - u_[i] - v_[j] < 0)
          return {true, {i, j}};
    return {false, {0, 0}};
  }

  void pivot(int ei, int ej) {
    // Unique tree path from the entering row node to the entering column node.
    std::vector<std::vector<std::pair<int, std::pair<int, int>>>> tree(m_ + n_);
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < n_; ++j)
        if (basic_[i][j]) {
          tree[i].push_back({m_ + j, {i, j}});
          tree[m_ + j].push_back({i, {i, j}});
        }
    std::vector<int> parent(m_ + n_, -1);
    std::vector<std::pair<int, int>> via(m_ + n_, {-1, -1});
    std::deque<int> queue{ei};
    parent[ei] = ei;
    while (!queue.empty()) {
      const int node = queue.front();
      queue.pop_front();
      if (node == m_ + ej) break;
      for (const auto& [next, cell] : tree[node])
        if (parent[next] < 0) {
          parent[next] = node;
          via[next] = cell;
          queue.push_back(next);
        }
    }
    // Walk back from the column node; cells along the path alternate signs,
    // starting with '-' for the cell adjacent to the entering one.
    std::vector<std::pair<int, int>> minus, plus;
    bool negative = true;
    for (int node = m_ + ej; node != ei; node = parent[node]) {
      (negative ? minus : plus).push_back(via[node]);
      negative = !negative;
    }
    // Ratio test over the '-' cells: smallest mass, ties to the lowest index.
    const std::pair<int, int>* leave = nullptr;
    for (const auto& cell : minus) {
      const Rat& value = xi_[cell.first][cell.second];
      if (!leave || value < xi_[leave->first][leave->second] ||
          (value == xi_[leave->first][leave->second] &&
           cell.first * n_ + cell.second < leave->first * n_ + leave->second))
        leave = &cell;
    }
    const Rat theta = xi_[leave->first][leave->second];
    for (const auto& [i, j] : minus) xi_[i][j] -= theta;
    for (const auto& [i, j] : plus) xi_[i][j] += theta;
    xi_[ei][ej] += theta;
    basic_[leave->first][leave->second] = 0;
    basic_[ei][ej] = 1;
  }

  const TransportInstance& inst_;
  int m_, n_;
  std::vector<std::vector<Rat>> xi_;
  std::vector<std::vector<char>> basic_;
  std::vector<Rat> u_, v_;
};

}  // namespace detail

// Solves the transportation problem exactly.  The returned coupling is a
// vertex (basic feasible solution) of the transportation polytope, and the
// certificate proves optimality; verify_certificate re-checks it from scratch.
inline TransportSolution solve_transport(const TransportInstance& inst) {
  validate_instance(inst);
  return detail::TransportSimplex(inst).run();
}

// ----------------------------------------------------------------- verifier

// One boolean per Kuhn-Tucker condition.  Pairs lying in a zero-mass row or
// column are exempt from the dual conditions: those variables are fixed to
// zero by feasibility and play no role in the optimum.
struct CertificateReport {
  bool marginal_feasibility = false;
  bool nonnegativity = false;
  bool dual_feasibility = false;
  bool complementary_slackness = false;
  bool strong_duality = false;

  bool valid() const {
    return marginal_feasibility && nonnegativity && dual_feasibility &&
           complementary_slackness && strong_duality;
  }
};

// Checks a claimed solution against its instance using nothing but the
// Kuhn-Tucker conditions; deliberately shares no logic with the solver.
inline CertificateReport verify_certificate(const TransportInstance& inst,
                                            const TransportSolution& sol) {
  validate_instance(inst);
  const std::size_t m = inst.m(), n = inst.n();
  if (sol.coupling.size() != m || sol.dual.lambda.size() != m ||
      sol.dual.lambda_prime.size() != n || sol.dual.nu_slack.size() != m)
    fail(ErrorCode::ShapeMismatch, "solution shape does not match instance");
  for (std::size_t i = 0; i < m; ++i)
    if (sol.coupling[i].size() != n || sol.dual.nu_slack[i].size() != n)
      fail(ErrorCode::ShapeMismatch, "solution shape does not match instance");

  CertificateReport report;
  report.nonnegativity = true;
  for (const auto& row : sol.coupling)
    for (const auto& value : row)
      if (value < 0) report.nonnegativity = false;

  report.marginal_feasibility = true;
  for (std::size_t i = 0; i < m; ++i) {
    Rat sum(0);
    for (std::size_t j = 0; j < n; ++j) sum += sol.coupling[i][j];
    if (sum != inst.mu[i]) report.marginal_feasibility = false;
  }
  for (std::size_t j = 0; j < n; ++j) {
    Rat sum(0);
    for (std::size_t i = 0; i < m; ++i) sum += sol.coupling[i][j];
    if (sum != inst.nu[j]) report.marginal_feasibility = false;
  }

  report.dual_feasibility = true;
  report.complementary_slackness = true;
  for (std::size_t i = 0; i < m; ++i) {
    if (inst.mu[i] == 0) continue;  // absent row
    for (std::size_t j = 0; j < n; ++j) {
      if (inst.nu[j] == 0) continue;  // absent column
      const Rat& slack = sol.dual.nu_slack[i][j];
      if (slack < 0) report.dual_feasibility = false;
      if (inst.cost[i][j] != sol.dual.lambda[i] + sol.dual.lambda_prime[j] + slack)
        report.dual_feasibility = false;
      if (slack * sol.coupling[i][j] != 0) report.complementary_slackness = false;
    }
  }

  Rat primal(0), dual_value(0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) primal += sol.coupling[i][j] * inst.cost[i][j];
  for (std::size_t i = 0; i < m; ++i) dual_value += sol.dual.lambda[i] * inst.mu[i];
  for (std::size_t j = 0; j < n; ++j) dual_value += sol.dual.lambda_prime[j] * inst.nu[j];
  report.strong_duality = (primal == sol.value && dual_value == sol.value);
  return report;
}

// -------------------------------------------------------------- brute force

// Exhaustive minimum over every coupling whose entries are multiples of
// 1/lattice_q.  Exponential; admissible only for m*n <= 20.  Because the
// constraint matrix is totally unimodular, this lattice minimum equals the
// true LP optimum whenever the marginals themselves lie on the lattice.
inline Rat brute_force_transport(const TransportInstance& inst, long lattice_q) {
  validate_instance(inst);
  const int m = static_cast<int>(inst.m()), n = static_cast<int>(inst.n());
  if (m * n > 20)
    fail(ErrorCode::TooLarge, "brute force limited to m*n <= 20");
  if (lattice_q <= 0) fail(ErrorCode::BadParameter, "lattice_q must be positive");
  auto to_units = [&](const Rat& mass) -> long {
    const Rat scaled = mass * lattice_q;
    if (!is_integer(scaled))
      fail(ErrorCode::MarginalsOffLattice,
           rat_to_string(mass) + " is not a multiple of 1/" + std::to_string(lattice_q));
    return scaled.get_num().get_si();
  };
  std::vector<long> row_units, col_units;
  for (const auto& v : inst.mu) row_units.push_back(to_units(v));
  for (const auto& v : inst.nu) col_units.push_back(to_units(v));

  std::vector<long> col_left = col_units;
  bool found = false;
  Rat best(0);
  auto fill = [&](auto&& self, int i, int j, long row_left, const Rat& acc) -> void {
    if (found && acc >= best) return;
    if (i == m) {
      best = acc;
      found = true;
      return;
    }
    if (j == n - 1) {
      if (row_left > col_left[j]) return;
      col_left[j] -= row_left;
      self(self, i + 1, 0, (i + 1 < m) ? row_units[i + 1] : 0,
           acc + Rat(row_left) * inst.cost[i][j]);
      col_left[j] += row_left;
      return;
    }
    long slack = 0;
    for (int k = j; k < n; ++k) slack += col_left[k];
    if (slack < row_left) return;
    const long hi = std::min(row_left, col_left[j]);
    for (long put = 0; put <= hi; ++put) {
      col_left[j] -= put;
      self(self, i, j + 1, row_left - put, acc + Rat(put) * inst.cost[i][j]);
      col_left[j] += put;
    }
  };
  fill(fill, 0, 0, row_units[0], Rat(0));
  // Balanced marginals always admit at least one coupling.
  if (!found) fail(ErrorCode::InfeasibleMarginals, "no lattice coupling found");
  return best / lattice_q;
}

// ------------------------------------------------------------- Wasserstein-1

struct TransportRun {
  TransportInstance instance;
  TransportSolution solution;
};

// W1 distance between two measures on the complex, with plan and certificate.
inline TransportRun wasserstein1(const Complex2& c, const Measure& mu,
                                 const Measure& nu) {
  TransportRun run;
  run.instance = make_transport_instance(c, mu, nu);
  run.solution = solve_transport(run.instance);
  return run;
}

}  // namespace ricci

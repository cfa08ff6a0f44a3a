#include "rmc/hungarian.hpp"

#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace rmc {

namespace {

struct DualSolution {
  std::vector<int> row_to_col;
  std::vector<double> u;  // row potentials
  std::vector<double> v;  // column potentials
};

// Shortest augmenting path Hungarian method, O(n^3). Potentials stay
// feasible (u_i + v_j <= c_ij) and are tight on the final matching, so they
// are an optimal dual.
DualSolution solve_with_potentials(const CostMatrix& cost) {
  const int n = static_cast<int>(cost.rows());
  const double inf = std::numeric_limits<double>::infinity();
  // 1-based with a virtual column 0, as in the classic formulation.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), min_slack(n + 1);
  std::vector<int> col_owner(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1);

  for (int i = 1; i <= n; ++i) {
    col_owner[0] = i;
    int j0 = 0;
    std::fill(min_slack.begin(), min_slack.end(), inf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const int i0 = col_owner[j0];
      double delta = inf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double slack = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (slack < min_slack[j]) {
          min_slack[j] = slack;
          way[j] = j0;
        }
        if (min_slack[j] < delta) {
          delta = min_slack[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[col_owner[j]] += delta;
          v[j] -= delta;
        } else {
          min_slack[j] -= delta;
        }
      }
      j0 = j1;
    } while (col_owner[j0] != 0);
    do {
      const int j1 = way[j0];
      col_owner[j0] = col_owner[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  DualSolution out;
  out.row_to_col.assign(n, -1);
  for (int j = 1; j <= n; ++j) out.row_to_col[col_owner[j] - 1] = j - 1;
  out.u.assign(u.begin() + 1, u.end());
  out.v.assign(v.begin() + 1, v.end());
  return out;
}

// Rewrites an optimal matching into the lexicographically smallest one.
// Every optimal assignment is a perfect matching on the tight edges of an
// optimal dual, so it suffices to search that subgraph: row i moves to a
// lower tight column c when the current owner of c can be re-routed along an
// alternating path of tight edges that ends at i's old column.
void make_lexicographic(const CostMatrix& cost, DualSolution& sol) {
  const int n = static_cast<int>(cost.rows());
  const double tol = 1e-9 * (1.0 + cost.cwiseAbs().maxCoeff());

  std::vector<std::vector<int>> tight_cols(n), tight_rows(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (cost(i, j) - sol.u[i] - sol.v[j] <= tol) {
        tight_cols[i].push_back(j);
        tight_rows[j].push_back(i);
      }
    }
  }

  std::vector<int>& row_to_col = sol.row_to_col;
  std::vector<int> col_to_row(n);
  for (int i = 0; i < n; ++i) col_to_row[row_to_col[i]] = i;

  std::vector<int> next_col(n);
  std::vector<char> good_row(n), seen_col(n);
  for (int i = 0; i < n; ++i) {
    const int target = row_to_col[i];
    if (tight_cols[i].empty() || tight_cols[i].front() == target) continue;

    // Rows (> i) that can hand their column over and still reach `target`.
    std::fill(good_row.begin(), good_row.end(), 0);
    std::fill(seen_col.begin(), seen_col.end(), 0);
    std::queue<int> frontier;
    frontier.push(target);
    seen_col[target] = 1;
    while (!frontier.empty()) {
      const int c = frontier.front();
      frontier.pop();
      for (int r : tight_rows[c]) {
        if (r <= i || good_row[r]) continue;
        good_row[r] = 1;
        next_col[r] = c;
        const int owned = row_to_col[r];
        if (!seen_col[owned]) {
          seen_col[owned] = 1;
          frontier.push(owned);
        }
      }
    }

    for (int c : tight_cols[i]) {
      if (c >= target) break;
      const int owner = col_to_row[c];
      if (!good_row[owner]) continue;

      row_to_col[i] = c;
      col_to_row[c] = i;
      int row = owner;
      while (true) {
        const int nc = next_col[row];
        const int displaced = col_to_row[nc];
        row_to_col[row] = nc;
        col_to_row[nc] = row;
        if (nc == target) break;
        row = displaced;
      }
      break;
    }
  }
}

}  // namespace

Assignment hungarian(const CostMatrix& cost) {
  if (cost.rows() != cost.cols()) {
    throw std::invalid_argument("assignment needs a square cost matrix");
  }
  if (!cost.allFinite()) {
    throw std::invalid_argument("cost matrix has a non-finite entry");
  }
  Assignment out;
  const auto n = cost.rows();
  if (n == 0) return out;

  DualSolution sol = solve_with_potentials(cost);
  make_lexicographic(cost, sol);

  out.mapping.reserve(n);
  out.row_costs.reserve(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const int j = sol.row_to_col[i];
    out.mapping.push_back(static_cast<NodeId>(j));
    out.row_costs.push_back(cost(i, j));
    out.total_cost += cost(i, j);
  }
  return out;
}

}  // namespace rmc

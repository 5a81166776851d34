#include "blackwell/lp.hpp"

#include <algorithm>
#include <limits>

namespace blackwell {
namespace {

template <class T>
struct Tableau {
  // rows x (cols + 1); last column is the rhs. basis[i] is the variable
  // occupying row i. allowed[j] marks columns phase 2 may pivot on.
  std::vector<std::vector<T>> a;
  std::vector<std::size_t> basis;
  std::vector<bool> allowed;
  std::size_t cols = 0;

  void pivot(std::size_t pr, std::size_t pc) {
    T inv = a[pr][pc];
    for (auto& v : a[pr]) v /= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == pr) continue;
      T f = a[i][pc];
      if (f == T{}) continue;
      for (std::size_t j = 0; j <= cols; ++j) a[i][j] -= f * a[pr][j];
    }
    basis[pr] = pc;
  }
};

// Runs simplex iterations for the given costs (maximization). Returns false
// when unbounded. Bland's rule on both the entering and leaving choice.
template <class T>
bool run_simplex(Tableau<T>& t, const std::vector<T>& cost, const T& tol) {
  const std::size_t m = t.a.size();
  for (;;) {
    // Reduced costs z_j - c_j, computed fresh each iteration; problems are
    // tiny and this avoids drift in the incremental objective row.
    std::size_t enter = t.cols;
    for (std::size_t j = 0; j < t.cols; ++j) {
      if (!t.allowed[j]) continue;
      bool basic = false;
      for (std::size_t i = 0; i < m && !basic; ++i) basic = t.basis[i] == j;
      if (basic) continue;
      T zj{};
      for (std::size_t i = 0; i < m; ++i) zj += cost[t.basis[i]] * t.a[i][j];
      if (zj - cost[j] < -tol) {
        enter = j;
        break;  // Bland: first improving index
      }
    }
    if (enter == t.cols) return true;  // optimal
    std::size_t leave = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (t.a[i][enter] <= tol) continue;
      if (leave == m) {
        leave = i;
        continue;
      }
      T lhs = t.a[i][t.cols] * t.a[leave][enter];
      T rhs = t.a[leave][t.cols] * t.a[i][enter];
      if (lhs < rhs || (lhs == rhs && t.basis[i] < t.basis[leave])) leave = i;
    }
    if (leave == m) return false;  // unbounded direction
    t.pivot(leave, enter);
  }
}

}  // namespace

template <class T>
LpSolution<T> solve_lp(const LpProblem<T>& problem, const T& tol) {
  const std::size_t n = problem.num_vars;
  BW_ASSERT(problem.objective.size() == n, "lp: objective length mismatch");
  BW_ASSERT(problem.nonneg.empty() || problem.nonneg.size() == n,
            "lp: nonneg flags length mismatch");
  for (const auto& row : problem.rows) {
    BW_ASSERT(row.coeffs.size() == n, "lp: row length mismatch");
  }

  // Column layout: for each original variable, one column (nonneg) or a
  // (plus, minus) pair (free). Then one slack/surplus column per inequality,
  // then artificials.
  std::vector<std::size_t> pos_col(n), neg_col(n, SIZE_MAX);
  std::size_t cols = 0;
  for (std::size_t j = 0; j < n; ++j) {
    bool nn = problem.nonneg.empty() ? false : problem.nonneg[j];
    pos_col[j] = cols++;
    if (!nn) neg_col[j] = cols++;
  }
  const std::size_t m = problem.rows.size();
  std::vector<std::size_t> slack_col(m, SIZE_MAX);
  // Row sign normalization so every rhs is >= 0.
  std::vector<bool> flip(m, false);
  std::vector<LpRel> rel(m);
  for (std::size_t i = 0; i < m; ++i) {
    rel[i] = problem.rows[i].rel;
    if (problem.rows[i].rhs < T{}) {
      flip[i] = true;
      if (rel[i] == LpRel::Le)
        rel[i] = LpRel::Ge;
      else if (rel[i] == LpRel::Ge)
        rel[i] = LpRel::Le;
    }
    if (rel[i] != LpRel::Eq) slack_col[i] = cols++;
  }
  std::vector<std::size_t> art_col(m, SIZE_MAX);
  for (std::size_t i = 0; i < m; ++i) {
    // '<=' rows get a basic slack; '>=' and '=' rows need an artificial.
    if (rel[i] != LpRel::Le) art_col[i] = cols++;
  }

  Tableau<T> t;
  t.cols = cols;
  t.allowed.assign(cols, true);
  t.a.assign(m, std::vector<T>(cols + 1, T{}));
  t.basis.assign(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = problem.rows[i];
    T sign = flip[i] ? T{-1} : T{1};
    for (std::size_t j = 0; j < n; ++j) {
      T c = sign * row.coeffs[j];
      t.a[i][pos_col[j]] = c;
      if (neg_col[j] != SIZE_MAX) t.a[i][neg_col[j]] = -c;
    }
    t.a[i][cols] = sign * row.rhs;
    if (slack_col[i] != SIZE_MAX) t.a[i][slack_col[i]] = rel[i] == LpRel::Le ? T{1} : T{-1};
    if (art_col[i] != SIZE_MAX) {
      t.a[i][art_col[i]] = T{1};
      t.basis[i] = art_col[i];
    } else {
      t.basis[i] = slack_col[i];
    }
  }

  LpSolution<T> sol;
  bool need_phase1 = false;
  for (std::size_t i = 0; i < m; ++i) need_phase1 = need_phase1 || art_col[i] != SIZE_MAX;
  if (need_phase1) {
    std::vector<T> cost(cols, T{});
    for (std::size_t i = 0; i < m; ++i) {
      if (art_col[i] != SIZE_MAX) cost[art_col[i]] = T{-1};
    }
    bool bounded = run_simplex(t, cost, tol);
    BW_ASSERT(bounded, "lp: phase 1 cannot be unbounded");
    T infeas{};
    for (std::size_t i = 0; i < m; ++i) {
      if (art_col[i] != SIZE_MAX && t.basis[i] == art_col[i]) infeas += t.a[i][cols];
    }
    if (infeas > tol) {
      sol.status = LpStatus::Infeasible;
      return sol;
    }
    // Pivot residual artificials out; a row with no eligible pivot is
    // redundant and can stay (its rhs is ~0 and the column gets frozen).
    for (std::size_t i = 0; i < m; ++i) {
      if (art_col[i] == SIZE_MAX || t.basis[i] != art_col[i]) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        bool is_art = false;
        for (std::size_t k = 0; k < m; ++k) is_art = is_art || art_col[k] == j;
        if (is_art) continue;
        if (t.a[i][j] > tol || t.a[i][j] < -tol) {
          t.pivot(i, j);
          break;
        }
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (art_col[i] != SIZE_MAX) t.allowed[art_col[i]] = false;
    }
  }

  std::vector<T> cost(cols, T{});
  for (std::size_t j = 0; j < n; ++j) {
    cost[pos_col[j]] = problem.objective[j];
    if (neg_col[j] != SIZE_MAX) cost[neg_col[j]] = -problem.objective[j];
  }
  if (!run_simplex(t, cost, tol)) {
    sol.status = LpStatus::Unbounded;
    return sol;
  }

  sol.status = LpStatus::Optimal;
  sol.x.assign(n, T{});
  std::vector<T> col_val(cols, T{});
  for (std::size_t i = 0; i < m; ++i) col_val[t.basis[i]] = t.a[i][cols];
  for (std::size_t j = 0; j < n; ++j) {
    sol.x[j] = col_val[pos_col[j]];
    if (neg_col[j] != SIZE_MAX) sol.x[j] -= col_val[neg_col[j]];
  }
  sol.objective = T{};
  for (std::size_t j = 0; j < n; ++j) sol.objective += problem.objective[j] * sol.x[j];
  return sol;
}

template LpSolution<double> solve_lp<double>(const LpProblem<double>&, const double&);
template LpSolution<Rational> solve_lp<Rational>(const LpProblem<Rational>&, const Rational&);

}  // namespace blackwell

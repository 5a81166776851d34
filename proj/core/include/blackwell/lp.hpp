#pragma once

#include <cstddef>
#include <vector>

#include "blackwell/errors.hpp"
#include "blackwell/rational.hpp"

namespace blackwell {

// Dense two-phase simplex with Bland's rule. Small problems only (tens of
// rows); every pivot is O(rows * cols). The same code runs on double
// (tolerance 1e-9) and Rational (tolerance 0, exact answers).

enum class LpStatus { Optimal, Infeasible, Unbounded };

enum class LpRel { Le, Ge, Eq };

template <class T>
struct LpRow {
  std::vector<T> coeffs;
  LpRel rel = LpRel::Le;
  T rhs{};
};

template <class T>
struct LpProblem {
  std::size_t num_vars = 0;
  std::vector<T> objective;    // maximize objective . x
  std::vector<LpRow<T>> rows;
  std::vector<bool> nonneg;    // per variable: true -> x >= 0, false -> free

  void add_row(std::vector<T> coeffs, LpRel rel, T rhs) {
    rows.push_back(LpRow<T>{std::move(coeffs), rel, std::move(rhs)});
  }
};

template <class T>
struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<T> x;
  T objective{};
};

template <class T>
LpSolution<T> solve_lp(const LpProblem<T>& problem, const T& tol);

inline LpSolution<double> solve_lp(const LpProblem<double>& p) { return solve_lp(p, 1e-9); }
inline LpSolution<Rational> solve_lp(const LpProblem<Rational>& p) {
  return solve_lp(p, Rational(0));
}

extern template LpSolution<double> solve_lp<double>(const LpProblem<double>&, const double&);
extern template LpSolution<Rational> solve_lp<Rational>(const LpProblem<Rational>&,
                                                        const Rational&);

}  // namespace blackwell

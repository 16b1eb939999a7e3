#include "tverberg/feasibility.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace tverberg {

void FeasibilitySystem::validate() const {
  if (matrix.size() != rhs.size())
    throw std::invalid_argument("FeasibilitySystem: row count does not match rhs length");
  const std::size_t cols = matrix.empty() ? 0 : matrix.front().size();
  for (const auto& row : matrix) {
    if (row.size() != cols)
      throw std::invalid_argument("FeasibilitySystem: ragged constraint matrix");
  }
}

namespace {

/// Dense simplex tableau over exact rationals.
///
/// Columns are [structural | artificial | rhs]. The artificial block starts
/// as the identity, so after any pivot sequence it holds the current basis
/// inverse; phase-I duals (the Farkas vector on infeasibility) are read off
/// from it directly.
class Tableau {
 public:
  explicit Tableau(const FeasibilitySystem& sys)
      : rows_(sys.constraint_count()),
        structural_(sys.variable_count()),
        row_sign_(static_cast<std::size_t>(rows_), 1) {
    t_.reserve(static_cast<std::size_t>(rows_));
    basis_.reserve(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) {
      std::vector<Rational> row;
      row.reserve(static_cast<std::size_t>(structural_ + rows_ + 1));
      const bool flip = sys.rhs[static_cast<std::size_t>(i)].sign() < 0;
      if (flip) row_sign_[static_cast<std::size_t>(i)] = -1;
      for (int j = 0; j < structural_; ++j) {
        const auto& a = sys.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        row.push_back(flip ? -a : a);
      }
      for (int k = 0; k < rows_; ++k) row.push_back(Rational(k == i ? 1 : 0));
      const auto& b = sys.rhs[static_cast<std::size_t>(i)];
      row.push_back(flip ? -b : b);
      t_.push_back(std::move(row));
      basis_.push_back(structural_ + i);
    }
  }

  /// Minimizes the sum of artificials with Bland's rule. Returns true when
  /// the optimum is zero (original system feasible).
  bool phase_one() {
    for (;;) {
      int entering = -1;
      for (int j = 0; j < structural_ + rows_; ++j) {
        if (is_basic(j)) continue;
        if (reduced_cost_phase_one(j).sign() < 0) {
          entering = j;
          break;
        }
      }
      if (entering < 0) break;
      const int leaving = select_leaving(entering);
      // The phase-I objective is bounded below by zero, so a leaving row
      // always exists.
      if (leaving < 0) throw std::logic_error("simplex: phase one reported unbounded");
      pivot(leaving, entering);
    }
    return phase_one_value().is_zero();
  }

  Rational phase_one_value() const {
    Rational v;
    for (int i = 0; i < live_rows(); ++i)
      if (basis_[static_cast<std::size_t>(i)] >= structural_) v += rhs(i);
    return v;
  }

  /// Phase-I dual vector mapped back to the caller's row order and signs.
  std::vector<Rational> farkas() const {
    std::vector<Rational> y(static_cast<std::size_t>(rows_));
    for (int k = 0; k < rows_; ++k) {
      Rational yk;
      for (int i = 0; i < live_rows(); ++i) {
        if (basis_[static_cast<std::size_t>(i)] >= structural_)
          yk += t_[static_cast<std::size_t>(i)][static_cast<std::size_t>(structural_ + k)];
      }
      if (row_sign_[static_cast<std::size_t>(k)] < 0) yk = -yk;
      y[static_cast<std::size_t>(k)] = yk;
    }
    return y;
  }

  /// Pivots basic artificials out on zero rows; drops rows of redundant
  /// constraints entirely. Only valid after a successful phase one.
  void drive_out_artificials() {
    for (int i = live_rows() - 1; i >= 0; --i) {
      if (basis_[static_cast<std::size_t>(i)] < structural_) continue;
      assert(rhs(i).is_zero());
      int col = -1;
      for (int j = 0; j < structural_; ++j) {
        if (!t_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].is_zero()) {
          col = j;
          break;
        }
      }
      if (col >= 0) {
        pivot(i, col);
      } else {
        t_.erase(t_.begin() + i);
        basis_.erase(basis_.begin() + i);
      }
    }
  }

  /// Minimizes cost·x from the current feasible basis; artificials are
  /// barred from entering. Returns false on unboundedness.
  bool phase_two(const std::vector<Rational>& cost) {
    for (;;) {
      int entering = -1;
      for (int j = 0; j < structural_; ++j) {
        if (is_basic(j)) continue;
        if (reduced_cost(cost, j).sign() < 0) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return true;
      const int leaving = select_leaving(entering);
      if (leaving < 0) return false;
      pivot(leaving, entering);
    }
  }

  std::vector<Rational> assignment() const {
    std::vector<Rational> x(static_cast<std::size_t>(structural_));
    for (int i = 0; i < live_rows(); ++i) {
      const int j = basis_[static_cast<std::size_t>(i)];
      if (j < structural_) x[static_cast<std::size_t>(j)] = rhs(i);
    }
    return x;
  }

  Rational objective_value(const std::vector<Rational>& cost) const {
    Rational v;
    for (int i = 0; i < live_rows(); ++i) {
      const int j = basis_[static_cast<std::size_t>(i)];
      if (j < structural_) v += cost[static_cast<std::size_t>(j)] * rhs(i);
    }
    return v;
  }

 private:
  int live_rows() const { return static_cast<int>(t_.size()); }

  const Rational& rhs(int i) const {
    return t_[static_cast<std::size_t>(i)].back();
  }

  bool is_basic(int col) const {
    for (int i = 0; i < live_rows(); ++i)
      if (basis_[static_cast<std::size_t>(i)] == col) return true;
    return false;
  }

  Rational reduced_cost_phase_one(int col) const {
    // c_j is 1 for artificials, 0 for structurals; basic cost is 1 exactly
    // on rows whose basic variable is artificial.
    Rational r(col >= structural_ ? 1 : 0);
    for (int i = 0; i < live_rows(); ++i) {
      if (basis_[static_cast<std::size_t>(i)] >= structural_)
        r -= t_[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
    }
    return r;
  }

  Rational reduced_cost(const std::vector<Rational>& cost, int col) const {
    Rational r = cost[static_cast<std::size_t>(col)];
    for (int i = 0; i < live_rows(); ++i) {
      const int j = basis_[static_cast<std::size_t>(i)];
      if (j < structural_) {
        const auto& coeff = cost[static_cast<std::size_t>(j)];
        if (!coeff.is_zero())
          r -= coeff * t_[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
      }
    }
    return r;
  }

  /// Minimum-ratio row; ties broken by the smallest basic variable index
  /// (the second half of Bland's rule). Returns -1 when no entry is
  /// positive (unbounded direction).
  int select_leaving(int entering) const {
    int best = -1;
    Rational best_ratio;
    for (int i = 0; i < live_rows(); ++i) {
      const auto& e = t_[static_cast<std::size_t>(i)][static_cast<std::size_t>(entering)];
      if (e.sign() <= 0) continue;
      Rational ratio = rhs(i) / e;
      if (best < 0 || ratio < best_ratio ||
          (ratio == best_ratio &&
           basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(best)])) {
        best = i;
        best_ratio = std::move(ratio);
      }
    }
    return best;
  }

  void pivot(int row, int col) {
    auto& prow = t_[static_cast<std::size_t>(row)];
    const Rational p = prow[static_cast<std::size_t>(col)];
    assert(!p.is_zero());
    for (auto& v : prow) v /= p;
    for (int i = 0; i < live_rows(); ++i) {
      if (i == row) continue;
      auto& r = t_[static_cast<std::size_t>(i)];
      const Rational f = r[static_cast<std::size_t>(col)];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < r.size(); ++j) {
        if (!prow[j].is_zero()) r[j] -= f * prow[j];
      }
    }
    basis_[static_cast<std::size_t>(row)] = col;
  }

  int rows_;
  int structural_;
  std::vector<int> row_sign_;
  std::vector<std::vector<Rational>> t_;
  std::vector<int> basis_;
};

}  // namespace

FeasibilityResult solve_feasibility(const FeasibilitySystem& system) {
  system.validate();
  FeasibilityResult result;
  Tableau tab(system);
  if (!tab.phase_one()) {
    result.feasible = false;
    result.farkas = tab.farkas();
    return result;
  }
  result.feasible = true;
  result.assignment = tab.assignment();
  return result;
}

OptimizeResult optimize_linear(const FeasibilitySystem& system,
                               const std::vector<Rational>& objective,
                               OptDirection direction) {
  system.validate();
  if (static_cast<int>(objective.size()) != system.variable_count())
    throw std::invalid_argument("optimize_linear: objective length does not match variable count");

  OptimizeResult result;
  Tableau tab(system);
  if (!tab.phase_one()) {
    result.status = OptStatus::infeasible;
    return result;
  }
  tab.drive_out_artificials();

  std::vector<Rational> cost = objective;
  if (direction == OptDirection::maximize)
    for (auto& c : cost) c = -c;

  if (!tab.phase_two(cost)) {
    result.status = OptStatus::unbounded;
    return result;
  }
  result.status = OptStatus::optimal;
  result.assignment = tab.assignment();
  result.value = tab.objective_value(cost);
  if (direction == OptDirection::maximize) result.value = -result.value;
  return result;
}

}  // namespace tverberg

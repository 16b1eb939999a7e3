#pragma once

#include "tverberg/rational.hpp"

#include <vector>

namespace tverberg {

/// Equality-constrained linear system A x = b over variables x >= 0.
/// Rows are constraints, columns are variables.
struct FeasibilitySystem {
  std::vector<std::vector<Rational>> matrix;
  std::vector<Rational> rhs;

  int constraint_count() const { return static_cast<int>(matrix.size()); }
  int variable_count() const {
    return matrix.empty() ? 0 : static_cast<int>(matrix.front().size());
  }

  /// Throws std::invalid_argument on ragged rows or a rhs length mismatch.
  void validate() const;
};

struct FeasibilityResult {
  bool feasible = false;
  /// Nonnegative assignment satisfying every equality exactly (feasible case).
  std::vector<Rational> assignment;
  /// Farkas vector y with yᵀA <= 0 componentwise and yᵀb > 0 (infeasible
  /// case). Substituting it proves no nonnegative solution exists.
  std::vector<Rational> farkas;
};

/// Exact phase-I simplex with Bland's rule; terminates on every input,
/// including the fully degenerate systems this library produces.
FeasibilityResult solve_feasibility(const FeasibilitySystem& system);

enum class OptDirection { minimize, maximize };

enum class OptStatus { optimal, infeasible, unbounded };

struct OptimizeResult {
  OptStatus status = OptStatus::infeasible;
  Rational value;                     // set when optimal
  std::vector<Rational> assignment;   // witness attaining the optimum
};

/// Exact optimum of objective·x over {A x = b, x >= 0}.
/// Throws std::invalid_argument when objective length != variable count.
OptimizeResult optimize_linear(const FeasibilitySystem& system,
                               const std::vector<Rational>& objective,
                               OptDirection direction);

}  // namespace tverberg

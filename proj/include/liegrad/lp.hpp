#pragma once

#include <optional>
#include <vector>

#include "liegrad/rational.hpp"

namespace liegrad {

enum class Relation { Le, Eq, Ge };
enum class Sense { Maximize, Minimize };

struct Constraint {
  RatVec coeffs;
  Relation rel;
  Rat rhs;
};

/// Variables default to the box [0, +inf); use set_free / bounds to change.
class LinearProgram {
 public:
  explicit LinearProgram(std::size_t num_vars = 0)
      : objective(num_vars, Rat(0)), lower(num_vars, Rat(0)), upper(num_vars) {}

  std::size_t num_vars() const { return objective.size(); }
  /// Appends a variable with bounds [lo, hi] and returns its index.
  std::size_t add_var(std::optional<Rat> lo = Rat(0), std::optional<Rat> hi = std::nullopt);
  void set_free(std::size_t j) { lower[j].reset(); upper[j].reset(); }
  void add(RatVec coeffs, Relation rel, Rat rhs);
  /// Throws DimensionMismatch on inconsistent lengths.
  void check() const;

  Sense sense = Sense::Maximize;
  RatVec objective;
  std::vector<Constraint> constraints;
  std::vector<std::optional<Rat>> lower, upper;
};

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rat value;
  RatVec point;
  /// Reduced costs of the final phase-two tableau over the internal
  /// standard-form columns, in the maximization convention; at an optimum all
  /// are <= 0.
  RatVec reduced_costs;
  bool certificate_ok() const;
};

LpResult simplex_solve(const LinearProgram& lp);

/// True when `x` satisfies every constraint and bound of `lp`.
bool is_feasible(const LinearProgram& lp, const RatVec& x);
Rat objective_value(const LinearProgram& lp, const RatVec& x);

struct IntegerProgram {
  LinearProgram lp;
  std::vector<bool> integral;  // empty means all integral
  std::vector<bool> binary;    // binary implies integral with bounds [0,1]

  /// Applies binary flags to the bounds and integrality; throws on
  /// unbounded variables.
  void check() const;
};

enum class IlpStatus { Optimal, Infeasible };

struct IlpResult {
  IlpStatus status = IlpStatus::Infeasible;
  Rat value;
  IntVec point;
  std::size_t nodes = 0;  // branch-and-bound nodes explored
};

IlpResult ilp_solve(const IntegerProgram& ip);

}  // namespace liegrad

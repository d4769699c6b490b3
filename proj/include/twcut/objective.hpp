#pragma once

#include <functional>
#include <optional>
#include <string>

#include "twcut/cut_value.hpp"
#include "twcut/rational.hpp"

namespace twcut {

enum class Problem {
  MaxCut,
  MaxBisection,
  MinBisection,
  BalancedMinCut,
  MinEdgeExpansion,
  SparsestCut,
  DensestCut,
};

// Behavior of s -> f(count, s) for every fixed count.
enum class Direction { Monotone, Antitone };

// A cut problem as the framework sees it: a score f over (|S|, alpha(dS))
// tuples to be maximized, a feasibility predicate on |S|, and the transform
// that turns max f back into the problem's optimum in its natural sign.
// Pure function bundle; shareable and thread-safe.
struct Objective {
  std::string name;
  int n = 0;
  Direction direction = Direction::Monotone;
  bool negate_report = false;  // minimization presets report -f(phi)
  std::function<ExtendedRational(int count, const Rational& weight)> f;
  std::function<bool(int count)> valid;
  std::optional<Rational> beta;

  ExtendedRational report(const ExtendedRational& phi_value) const {
    return negate_report ? -phi_value : phi_value;
  }
};

// CLI spellings: max-cut, max-bisection, min-bisection, balanced-min-cut,
// min-edge-expansion, sparsest-cut, densest-cut.
Problem problem_from_name(const std::string& name);
std::string problem_name(Problem p);

// The seven presets. Requires n >= 1; balanced-min-cut requires a beta with
// 0 < beta <= 1/2, and beta must be absent for every other problem.
Objective make_objective(Problem p, int n, std::optional<Rational> beta = std::nullopt);

// f applied to a non-bottom cut value; throws std::invalid_argument on bottom.
ExtendedRational evaluate_f(const Objective& obj, const MaybeCutValue& cv);

// The problem's optimum in its natural sign; empty result means infeasible
// (no subset cardinality satisfies the validator).
std::optional<ExtendedRational> report_value(const Objective& obj, const MaybeCutValue& phi);

}  // namespace twcut

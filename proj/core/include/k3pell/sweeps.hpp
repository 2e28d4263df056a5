#pragma once

// Desk-scale verification sweeps over discriminants, traces and radicands.
// Each sweep is deterministic and reports every failure it finds.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "k3pell/arith.hpp"

namespace k3pell::sweeps {

struct SweepResult {
  explicit SweepResult(std::string sweep_name) : name(std::move(sweep_name)) {}

  std::string name;
  /// Units of work examined (lattices, (g, eps) pairs, radicands, ...).
  std::size_t checked = 0;
  /// Positive events seen, e.g. realizable triples found.
  std::size_t hits = 0;
  std::vector<std::string> failures;
  double seconds = 0.0;

  bool passed() const { return failures.empty(); }
  void fail(std::string message);
};

/// witness(eps, alpha) passes every check with trace alpha^2 - 2 eps, for both
/// eps and all alpha in A_eps up to alpha_max.
SweepResult soundness(long alpha_max);

/// Every realizable (L, g, eps) with D <= d_max and tr(g) <= trace_max has
/// trace alpha^2 - 2 eps with alpha in A_eps.
SweepResult completeness(long d_max, const Int& trace_max);

/// h+(alpha^2 + 4) = 1 exactly on {1, 3, 5, 7, 13, 17} for odd alpha <= alpha_max.
SweepResult biro(long alpha_max);

/// acts_eps(L, g, eps) iff decompose_alpha_beta(L, g, eps) succeeds, for all
/// classes with D <= d_max and generator powers 1..max_power.
SweepResult alpha_beta_equivalence(long d_max, unsigned long max_power);

/// mollin_criterion(delta) equals "period of sqrt(delta) is even".
SweepResult mollin(long delta_max);

/// For fundamental D <= d_max: a class without norm -2 vectors exists iff h+(D) > 1.
SweepResult class_number_criterion(long d_max);

/// classify_trace(alpha^2 - 2 eps, eps) is nonempty exactly for alpha in A_eps.
SweepResult trace_classification(long alpha_max);

/// Index of the realizable powers inside SO+(L): 1 when u^2 - D w^2 = -4 is
/// solvable, else 2. Primitive classes, D <= d_max, first `powers` powers.
SweepResult gamma_index(long d_max, unsigned long powers);

}  // namespace k3pell::sweeps

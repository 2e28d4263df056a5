#pragma once

// Continued fractions of quadratic irrationals and the equations
// u^2 - D w^2 = +-4 over the quadratic order of discriminant D.

#include <optional>
#include <vector>

#include "k3pell/arith.hpp"

namespace k3pell {

/// sqrt(delta) = [a0; period, period, ...] with the minimal period.
struct CFExpansion {
  Int a0;
  std::vector<Int> period;
  Int delta;
};

enum class Parity { kEven, kOdd };

/// The unit (u + (w/k) sqrt(D)) / 2 of the order of discriminant D / k^2.
///
/// Solutions are normalized to u > 0 and w >= 0; the conjugate unit is (u, -w).
/// The scaling denominator k is 1 except where a solution is reinterpreted
/// for an imprimitive lattice of content k.
struct PellSolution {
  Int u;
  Int w;
  Int D;
  Int k{1};

  /// u^2 - (D/k^2) w^2, which is +4 or -4 for a valid solution.
  Int pell_value() const;
  /// +1 or -1.
  int norm() const;

  static PellSolution identity(const Int& D) { return {2, 0, D, 1}; }

  /// Equal as units: same D, same u, same rational v = w/k.
  friend bool operator==(const PellSolution& x, const PellSolution& y) {
    return x.D == y.D && x.u == y.u && x.w * y.k == y.w * x.k;
  }
};

namespace pell {

/// Continued fraction of sqrt(delta) via the (P, Q) recurrence P0 = 0, Q0 = 1.
/// Throws PreconditionError for delta < 2 or perfect squares.
CFExpansion cf_sqrt(const Int& delta);

Parity period_parity(const Int& delta);

/// Minimal (u, w), u, w > 0, with u^2 - D w^2 = +-4: the fundamental unit of
/// the order of discriminant D. Expands (sigma + sqrt(D)) / 2, sigma = D mod 2.
PellSolution fundamental_unit_pm4(const Int& D);

/// Minimal positive solution of u^2 - D w^2 = 4.
PellSolution solve_pell4(const Int& D);

/// Minimal positive solution of u^2 - D w^2 = -4, if one exists.
std::optional<PellSolution> solve_pell_neg4(const Int& D);

/// Product of units. Both arguments must have k = 1 and the same D.
PellSolution compose(const PellSolution& s1, const PellSolution& s2);

/// s^e by repeated squaring; power(s, 0) is the identity (2, 0).
PellSolution power(const PellSolution& s, unsigned long e);

/// Whether delta = a*b admits a solution of a x^2 - b y^2 = +-1 (1 < a < b)
/// or of a x^2 - b y^2 = +-2 with x*y odd (1 <= a < b). Requires delta > 2
/// non-square. By Mollin's theorem this holds iff sqrt(delta) has an even
/// period; the implementation never looks at that period.
bool mollin_criterion(const Int& delta);

/// Decides whether a x^2 - b y^2 = n (a*b non-square) has an integer solution, optionally with
/// x*y odd. Valid when n^2 < a*b (every primitive solution is then a
/// convergent of sqrt(b/a) or sqrt(a/b)) and gcd(x, y) = 1 is forced, which
/// holds for |n| <= 2 under the oddness requirement or for |n| = 1.
bool solvable_by_convergents(const Int& a, const Int& b, const Int& n, bool require_xy_odd);

/// Exhaustive search over 0 <= y <= bound. Used only where the convergent
/// method does not apply.
bool solvable_by_search(const Int& a, const Int& b, const Int& n, bool require_xy_odd,
                        const Int& bound);

/// Validates D > 0, D = 0,1 mod 4 and D non-square.
void require_order_discriminant(const Int& D);

}  // namespace pell
}  // namespace k3pell

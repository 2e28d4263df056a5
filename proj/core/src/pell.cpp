#include "k3pell/pell.hpp"

#include <set>
#include <tuple>
#include <utility>

namespace k3pell {

Int PellSolution::pell_value() const {
  // u^2 - (D/k^2) w^2; k^2 | D is part of the type's contract.
  const Int k2 = k * k;
  if (D % k2 != 0) throw InvariantError("PellSolution: k^2 does not divide D");
  return u * u - (D / k2) * w * w;
}

int PellSolution::norm() const {
  const Int value = pell_value();
  if (value == 4) return 1;
  if (value == -4) return -1;
  throw InvariantError("PellSolution: u^2 - D v^2 is not +-4 (value " + value.get_str() + ")");
}

namespace pell {
namespace {

// Complete quotients (P + sqrt(d)) / Q of a quadratic irrational with
// Q | d - P^2, stepped by the standard (P, Q) recurrence.
class QuadraticIrrational {
 public:
  QuadraticIrrational(Int P, Int Q, Int d) : P_(std::move(P)), Q_(std::move(Q)), d_(std::move(d)) {
    root_ = isqrt(d_);
    if (Q_ == 0 || (d_ - P_ * P_) % Q_ != 0) {
      throw PreconditionError("quadratic irrational: Q must divide d - P^2");
    }
  }

  Int partial_quotient() const {
    // sqrt(d) is irrational, so floor((P + sqrt d)/Q) is exact from isqrt.
    if (Q_ > 0) return floor_div(P_ + root_, Q_);
    return floor_div(P_ + root_ + 1, Q_);
  }

  /// Advances to the next complete quotient; returns the partial quotient used.
  Int step() {
    Int a = partial_quotient();
    Int next_P = a * Q_ - P_;
    Int next_Q = (d_ - next_P * next_P) / Q_;
    P_ = std::move(next_P);
    Q_ = std::move(next_Q);
    return a;
  }

  std::pair<Int, Int> state() const { return {P_, Q_}; }

 private:
  Int P_, Q_, d_, root_;
};

// Convergent recurrence p_n = a_n p_{n-1} + p_{n-2}, seeded with the
// virtual convergents p_{-1}/q_{-1} = 1/0 and p_{-2}/q_{-2} = 0/1.
struct Convergents {
  Int p{1}, q{0};            // newest
  Int p_before{0}, q_before{1};

  void push(const Int& a) {
    Int next_p = a * p + p_before;
    Int next_q = a * q + q_before;
    p_before = std::move(p);
    q_before = std::move(q);
    p = std::move(next_p);
    q = std::move(next_q);
  }
};

void require_radicand(const Int& delta) {
  if (delta < 2) throw PreconditionError("radicand must be at least 2");
  if (is_square(delta)) throw PreconditionError("radicand must not be a perfect square");
}

}  // namespace

void require_order_discriminant(const Int& D) {
  if (D <= 0) throw PreconditionError("discriminant D must be positive");
  const Int r = mod_floor(D, 4);
  if (r != 0 && r != 1) throw PreconditionError("discriminant D must be 0 or 1 mod 4");
  if (is_square(D)) throw PreconditionError("discriminant D must not be a perfect square");
}

CFExpansion cf_sqrt(const Int& delta) {
  require_radicand(delta);
  QuadraticIrrational xi(0, 1, delta);
  CFExpansion out;
  out.delta = delta;
  out.a0 = xi.step();
  // sqrt(delta) - a0 has conjugate in (-1, 0) after one inversion, so the
  // expansion is purely periodic from index 1.
  const auto start = xi.state();
  do {
    out.period.push_back(xi.step());
  } while (xi.state() != start);
  return out;
}

Parity period_parity(const Int& delta) {
  return cf_sqrt(delta).period.size() % 2 == 0 ? Parity::kEven : Parity::kOdd;
}

PellSolution fundamental_unit_pm4(const Int& D) {
  require_order_discriminant(D);
  const Int sigma = mod_floor(D, 2);
  // omega = (sigma + sqrt D)/2 generates the order; its expansion is purely
  // periodic from index 1 with period l, and p_{l-1} - q_{l-1} * conj(omega)
  // is the fundamental unit.
  QuadraticIrrational omega(sigma, 2, D);
  Convergents conv;
  conv.push(omega.step());
  const auto start = omega.state();
  do {
    conv.push(omega.step());
  } while (omega.state() != start);

  PellSolution s{2 * conv.p_before - sigma * conv.q_before, conv.q_before, D, 1};
  if (s.u <= 0 || s.w <= 0) throw InvariantError("fundamental_unit_pm4: non-positive unit");
  s.norm();  // throws unless u^2 - D w^2 = +-4
  return s;
}

PellSolution solve_pell4(const Int& D) {
  PellSolution unit = fundamental_unit_pm4(D);
  if (unit.norm() == 1) return unit;
  return compose(unit, unit);
}

std::optional<PellSolution> solve_pell_neg4(const Int& D) {
  PellSolution unit = fundamental_unit_pm4(D);
  if (unit.norm() == -1) return unit;
  return std::nullopt;
}

PellSolution compose(const PellSolution& s1, const PellSolution& s2) {
  if (s1.D != s2.D) throw PreconditionError("compose: mismatched discriminants");
  if (s1.k != 1 || s2.k != 1) throw PreconditionError("compose: scaled solutions are not composable");
  const Int u2x = s1.u * s2.u + s1.D * s1.w * s2.w;
  const Int w2x = s1.u * s2.w + s2.u * s1.w;
  if (mpz_odd_p(u2x.get_mpz_t()) || mpz_odd_p(w2x.get_mpz_t())) {
    throw InvariantError("compose: product of units is not half-integral");
  }
  return {u2x / 2, w2x / 2, s1.D, 1};
}

PellSolution power(const PellSolution& s, unsigned long e) {
  if (s.k != 1) throw PreconditionError("power: scaled solutions are not composable");
  PellSolution result = PellSolution::identity(s.D);
  PellSolution base = s;
  while (e > 0) {
    if (e & 1UL) result = compose(result, base);
    e >>= 1;
    if (e > 0) base = compose(base, base);
  }
  return result;
}

bool solvable_by_convergents(const Int& a, const Int& b, const Int& n, bool require_xy_odd) {
  if (a <= 0 || b <= 0 || n == 0) throw PreconditionError("solvable_by_convergents: bad arguments");
  const Int delta = a * b;
  if (n * n >= delta) throw PreconditionError("solvable_by_convergents: requires n^2 < a*b");
  if (is_square(delta)) throw PreconditionError("solvable_by_convergents: a*b must be non-square");
  // n > 0: x/y is a convergent of sqrt(b/a) = sqrt(delta)/a.
  // n < 0: y/x is a convergent of sqrt(a/b) = sqrt(delta)/b.
  const bool positive = n > 0;
  QuadraticIrrational xi(0, positive ? a : b, delta);
  Convergents conv;
  std::set<std::tuple<Int, Int, int>> seen;
  for (int parity = 0;; parity ^= 1) {
    auto [P, Q] = xi.state();
    if (!seen.emplace(P, Q, parity).second) return false;
    conv.push(xi.step());
    const Int& x = positive ? conv.p : conv.q;
    const Int& y = positive ? conv.q : conv.p;
    if (a * x * x - b * y * y != n) continue;
    if (!require_xy_odd || (mpz_odd_p(x.get_mpz_t()) && mpz_odd_p(y.get_mpz_t()))) return true;
  }
}

bool solvable_by_search(const Int& a, const Int& b, const Int& n, bool require_xy_odd,
                        const Int& bound) {
  for (Int y = 0; y <= bound; ++y) {
    const Int rhs = n + b * y * y;
    if (rhs < 0 || rhs % a != 0) continue;
    auto x = exact_sqrt(rhs / a);
    if (!x) continue;
    if (!require_xy_odd || (mpz_odd_p(x->get_mpz_t()) && mpz_odd_p(y.get_mpz_t()))) return true;
  }
  return false;
}

bool mollin_criterion(const Int& delta) {
  if (delta <= 2) throw PreconditionError("mollin_criterion: requires delta > 2");
  require_radicand(delta);
  std::optional<Int> search_bound;
  for (Int a = 1; a * a < delta; ++a) {
    if (delta % a != 0) continue;
    const Int b = delta / a;
    if (a > 1) {
      if (solvable_by_convergents(a, b, 1, false) || solvable_by_convergents(a, b, -1, false)) {
        return true;
      }
    }
    for (const int n : {2, -2}) {
      bool hit;
      if (delta > 4) {
        hit = solvable_by_convergents(a, b, n, true);
      } else {
        if (!search_bound) search_bound = solve_pell4(4 * delta).u;
        hit = solvable_by_search(a, b, n, true, *search_bound);
      }
      if (hit) return true;
    }
  }
  return false;
}

}  // namespace pell
}  // namespace k3pell

#pragma once

// Exact integer helpers shared by every module: arbitrary-precision
// integers, exact square roots and a small 2x2 integer matrix.

#include <gmpxx.h>

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

namespace k3pell {

using Int = mpz_class;

/// Raised when a caller violates an operation's documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal consistency check fails. Seeing one means a bug
/// (or a counterexample to a theorem the library relies on).
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// floor(sqrt(n)) for n >= 0.
Int isqrt(const Int& n);
bool is_square(const Int& n);
/// Exact square root when n is a perfect square.
std::optional<Int> exact_sqrt(const Int& n);

/// Floor division (rounds toward negative infinity).
Int floor_div(const Int& a, const Int& b);
/// Least non-negative residue of a modulo |m|.
Int mod_floor(const Int& a, const Int& m);

Int gcd(const Int& a, const Int& b);
int sign(const Int& a);

bool is_squarefree(const Int& n);
/// Largest n with n^2 | value (value > 0).
Int square_part_root(const Int& value);

/// Row-major 2x2 integer matrix ((m00 m01) (m10 m11)).
struct Mat2 {
  Int m00{1}, m01{0}, m10{0}, m11{1};

  static Mat2 identity() { return {}; }
  static Mat2 scalar(const Int& s) { return {s, 0, 0, s}; }

  Int det() const { return m00 * m11 - m01 * m10; }
  Int trace() const { return m00 + m11; }
  Mat2 transpose() const { return {m00, m10, m01, m11}; }
  /// Adjugate; equals det * inverse.
  Mat2 adjugate() const { return {m11, -m01, -m10, m00}; }
  /// Inverse of a unimodular matrix. Throws if det is not +-1.
  Mat2 inverse_unimodular() const;

  bool is_identity() const { return m00 == 1 && m01 == 0 && m10 == 0 && m11 == 1; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.m00 * y.m00 + x.m01 * y.m10, x.m00 * y.m01 + x.m01 * y.m11,
            x.m10 * y.m00 + x.m11 * y.m10, x.m10 * y.m01 + x.m11 * y.m11};
  }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) {
    return {x.m00 - y.m00, x.m01 - y.m01, x.m10 - y.m10, x.m11 - y.m11};
  }
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.m00 == y.m00 && x.m01 == y.m01 && x.m10 == y.m10 && x.m11 == y.m11;
  }

  /// Every entry divisible by d (d != 0).
  bool divisible_by(const Int& d) const;
  std::array<std::array<Int, 2>, 2> rows() const { return {{{m00, m01}, {m10, m11}}}; }
  std::string to_string() const;
};

Mat2 mat_pow(const Mat2& m, unsigned long k);

}  // namespace k3pell

#include "k3pell/arith.hpp"

namespace k3pell {

Int isqrt(const Int& n) {
  if (n < 0) throw PreconditionError("isqrt: negative argument");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const Int& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::optional<Int> exact_sqrt(const Int& n) {
  if (!is_square(n)) return std::nullopt;
  return isqrt(n);
}

Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw PreconditionError("floor_div: division by zero");
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int mod_floor(const Int& a, const Int& m) {
  if (m == 0) throw PreconditionError("mod_floor: zero modulus");
  Int r;
  Int am = abs(m);
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), am.get_mpz_t());
  return r;
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

int sign(const Int& a) { return sgn(a); }

Int square_part_root(const Int& value) {
  if (value <= 0) throw PreconditionError("square_part_root: non-positive argument");
  Int rest = value;
  Int root = 1;
  for (Int p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      root *= p;
    }
    while (rest % p == 0) rest /= p;
  }
  return root;
}

bool is_squarefree(const Int& n) { return n > 0 && square_part_root(n) == 1; }

Mat2 Mat2::inverse_unimodular() const {
  const Int d = det();
  if (d == 1) return adjugate();
  if (d == -1) {
    Mat2 a = adjugate();
    return {-a.m00, -a.m01, -a.m10, -a.m11};
  }
  throw PreconditionError("inverse_unimodular: determinant is not +-1");
}

bool Mat2::divisible_by(const Int& d) const {
  if (d == 0) throw PreconditionError("divisible_by: zero divisor");
  return mpz_divisible_p(m00.get_mpz_t(), d.get_mpz_t()) &&
         mpz_divisible_p(m01.get_mpz_t(), d.get_mpz_t()) &&
         mpz_divisible_p(m10.get_mpz_t(), d.get_mpz_t()) &&
         mpz_divisible_p(m11.get_mpz_t(), d.get_mpz_t());
}

std::string Mat2::to_string() const {
  return "(" + m00.get_str() + " " + m01.get_str() + "; " + m10.get_str() + " " +
         m11.get_str() + ")";
}

Mat2 mat_pow(const Mat2& m, unsigned long k) {
  Mat2 result;
  Mat2 base = m;
  while (k > 0) {
    if (k & 1UL) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

}  // namespace k3pell

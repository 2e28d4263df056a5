#include "k3pell/isometry.hpp"

#include <cmath>

namespace k3pell {

Rational Rational::make(const Int& num, const Int& den) {
  if (den == 0) throw PreconditionError("Rational: zero denominator");
  Int g = gcd(num, den);
  if (g == 0) g = 1;
  Rational r{num / g, den / g};
  if (r.den < 0) {
    r.num = -r.num;
    r.den = -r.den;
  }
  return r;
}

std::string to_string(Orientation o) {
  switch (o) {
    case Orientation::kSOPlus: return "SO+";
    case Orientation::kSOMinus: return "SO\\SO+";
    case Orientation::kOPlusNotSO: return "O+\\SO+";
    case Orientation::kOMinusNotSO: return "O\\(SO u O+)";
  }
  return "?";
}

namespace isometry {
namespace {

// Some x with F(x) > 0; requires D > 0.
std::pair<Int, Int> positive_vector(const EvenLattice& L) {
  if (L.a > 0) return {1, 0};
  if (L.c > 0) return {0, 1};
  if (L.a < 0) return {L.b, -2 * L.a};  // F = -a D
  return {(abs(L.c) + 1) * sign(L.b), 1};
}

Int bilinear(const EvenLattice& L, const Int& x1, const Int& y1, const Int& x2, const Int& y2) {
  return 2 * L.a * x1 * x2 + L.b * (x1 * y2 + x2 * y1) + 2 * L.c * y1 * y2;
}

}  // namespace

Isometry g_from_pell(const EvenLattice& L, const PellSolution& s) {
  if (s.D != L.D()) throw PreconditionError("g_from_pell: solution discriminant differs from D(L)");
  if (s.norm() != 1) throw PreconditionError("g_from_pell: solution has norm -1, not +1");
  const Int& k = s.k;
  const Int two_k = 2 * k;
  const Int e00 = s.u * k - L.b * s.w;
  const Int e01 = -L.c * s.w;
  const Int e10 = L.a * s.w;
  const Int e11 = s.u * k + L.b * s.w;
  if (e00 % two_k != 0 || e11 % two_k != 0 || e01 % k != 0 || e10 % k != 0) {
    throw PreconditionError("g_from_pell: non-integral entries; (u, v) is invalid for this lattice");
  }
  Isometry g{{e00 / two_k, e01 / k, e10 / k, e11 / two_k}, L};
  if (!is_isometry(L, g.m)) throw InvariantError("g_from_pell: result is not an isometry");
  return g;
}

PellSolution pell_from_isometry(const Isometry& g) {
  const EvenLattice& L = g.lattice;
  const Int k = qform::content(L);
  Int kv_num;
  Int kv_den;
  if (L.a != 0) {
    kv_num = k * g.m.m10;
    kv_den = L.a;
  } else if (L.c != 0) {
    kv_num = -k * g.m.m01;
    kv_den = L.c;
  } else {
    kv_num = k * (g.m.m11 - g.m.m00);
    kv_den = L.b;
  }
  if (kv_num % kv_den != 0) throw PreconditionError("pell_from_isometry: not an SO+(L) element");
  PellSolution s{g.m.trace(), kv_num / kv_den, L.D(), k};
  if (g_from_pell(L, s).m != g.m) throw PreconditionError("pell_from_isometry: not an SO+(L) element");
  return s;
}

Rational v_of(const PellSolution& s) { return Rational::make(s.w, s.k); }

bool is_isometry(const EvenLattice& L, const Mat2& m) {
  const Int d = m.det();
  if (d != 1 && d != -1) return false;
  const Mat2 q = L.gram();
  return m.transpose() * q * m == q;
}

Orientation orientation(const EvenLattice& L, const Mat2& m) {
  if (L.D() <= 0) throw PreconditionError("orientation: lattice is not of signature (1,1)");
  if (!is_isometry(L, m)) throw PreconditionError("orientation: matrix is not an isometry");
  if (m.det() == 1) return m.trace() > 0 ? Orientation::kSOPlus : Orientation::kSOMinus;
  // Positive vectors x, y lie in the same cone iff <x, y> > 0.
  const auto [x, y] = positive_vector(L);
  const Int mx = m.m00 * x + m.m01 * y;
  const Int my = m.m10 * x + m.m11 * y;
  return bilinear(L, x, y, mx, my) > 0 ? Orientation::kOPlusNotSO : Orientation::kOMinusNotSO;
}

bool in_so_plus(const EvenLattice& L, const Mat2& m) {
  return is_isometry(L, m) && orientation(L, m) == Orientation::kSOPlus;
}

std::optional<Isometry> so_plus_generator(const EvenLattice& L) {
  const Int D = L.D();
  if (D <= 0) throw PreconditionError("so_plus_generator: lattice is not of signature (1,1)");
  if (is_square(D)) return std::nullopt;
  const Int k = qform::content(L);
  // u^2 - D (w/k)^2 = 4 with u, w integral is the ordinary equation for D/k^2.
  const PellSolution base = pell::solve_pell4(D / (k * k));
  return g_from_pell(L, PellSolution{base.u, base.w, D, k});
}

bool acts_eps_on_disc_group(const EvenLattice& L, const Mat2& g, int eps) {
  if (eps != 1 && eps != -1) throw PreconditionError("eps must be +1 or -1");
  const Mat2 q = L.gram();
  const Int det = q.det();
  if (det == 0) throw PreconditionError("acts_eps_on_disc_group: degenerate lattice");
  // (g - eps I) Q^{-1} = (g - eps I) adj(Q) / det(Q)
  return ((g - Mat2::scalar(eps)) * q.adjugate()).divisible_by(det);
}

std::optional<AlphaBeta> decompose_alpha_beta(const EvenLattice& L, const Mat2& g, int eps) {
  if (eps != 1 && eps != -1) throw PreconditionError("eps must be +1 or -1");
  if (!in_so_plus(L, g)) throw PreconditionError("decompose_alpha_beta: g is not in SO+(L)");
  if (g.is_identity()) throw PreconditionError("decompose_alpha_beta: g is the identity");
  const PellSolution s = pell_from_isometry(Isometry{g, L});
  const Int D = L.D();
  const Int shifted = s.u - 2 * eps;  // -det(g - eps I)
  if (shifted % D != 0) return std::nullopt;
  const auto n = exact_sqrt(shifted / D);
  if (!n) return std::nullopt;
  const auto alpha = exact_sqrt(*n * *n * D + 4 * eps);
  if (!alpha) return std::nullopt;
  const Rational v = v_of(s);
  if (!v.is_integer() || v.num % *alpha != 0) return std::nullopt;
  AlphaBeta out{*alpha, v.num / *alpha};
  if (out.alpha * out.alpha - 2 * eps != s.u ||
      out.alpha * out.alpha - D * out.beta * out.beta != 4 * eps) {
    throw InvariantError("decompose_alpha_beta: identities fail for " + g.to_string());
  }
  return out;
}

SpectralRadius spectral_radius(const Mat2& g) {
  const Int u = g.trace();
  SpectralRadius r{u, u * u - 4, {}};
  if (r.radicand < 0) throw PreconditionError("spectral_radius: |trace| < 2");
  const mp_bitcnt_t prec = 128 + 2 * mpz_sizeinbase(u.get_mpz_t(), 2);
  mpf_class value(r.radicand, prec);
  value = sqrt(value);
  value = (value + mpf_class(abs(u), prec)) / 2;
  mp_exp_t exp10 = 0;
  std::string digits = value.get_str(exp10, 10, 20);
  if (digits.empty()) digits = "0";
  // Render as d.ddd...e+N, or plain when the exponent is small.
  if (exp10 > 0 && exp10 <= 20) {
    std::string whole = digits.substr(0, std::min<std::size_t>(digits.size(), exp10));
    whole.append(exp10 > static_cast<mp_exp_t>(whole.size()) ? exp10 - whole.size() : 0, '0');
    std::string frac = digits.size() > static_cast<std::size_t>(exp10) ? digits.substr(exp10) : "";
    r.decimal = frac.empty() ? whole : whole + "." + frac;
  } else {
    r.decimal = digits.substr(0, 1) + "." + digits.substr(1) + "e" + std::to_string(exp10 - 1);
  }
  return r;
}

double entropy(const Mat2& g) {
  const Int u = abs(g.trace());
  if (u < 2) throw PreconditionError("entropy: |trace| < 2");
  if (u == 2) return 0.0;
  // log((u + sqrt(u^2 - 4)) / 2) = log u + log((1 + sqrt(1 - 4/u^2)) / 2)
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, u.get_mpz_t());
  const double log_u = std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
  const double inv = std::exp(-log_u);
  return log_u + std::log1p(std::sqrt(1.0 - 4.0 * inv * inv)) - std::log(2.0);
}

SalemData salem_data(const Mat2& g) {
  const Int t = g.trace();
  return SalemData{t, {1, -t, 1}, spectral_radius(g), entropy(g)};
}

}  // namespace isometry
}  // namespace k3pell

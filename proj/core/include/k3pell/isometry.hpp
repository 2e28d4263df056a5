#pragma once

// Isometries of rank-2 even lattices of signature (1,1): the Pell
// parametrization of SO+(L), orientation, action on the discriminant group
// and the (alpha, beta) square-root decomposition.

#include <array>
#include <optional>
#include <string>

#include "k3pell/arith.hpp"
#include "k3pell/pell.hpp"
#include "k3pell/qform.hpp"

namespace k3pell {

/// An exact rational num/den with den > 0.
struct Rational {
  Int num;
  Int den{1};

  static Rational make(const Int& num, const Int& den);
  bool is_integer() const { return den == 1; }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// g with g^T Q g = Q for the Gram matrix Q of `lattice`.
struct Isometry {
  Mat2 m;
  EvenLattice lattice;
};

enum class Orientation {
  kSOPlus,        // det +1, preserves the positive cone
  kSOMinus,       // det +1, swaps the two cones
  kOPlusNotSO,    // det -1, preserves the positive cone
  kOMinusNotSO,   // det -1, swaps the two cones
};

std::string to_string(Orientation o);

/// The exact spectral radius (u + sqrt(radicand)) / 2, radicand = u^2 - 4.
struct SpectralRadius {
  Int u;
  Int radicand;
  /// Decimal rendering with 20 significant digits.
  std::string decimal;
};

struct SalemData {
  Int trace;
  /// Coefficients of x^2 - t x + 1, highest degree first.
  std::array<Int, 3> coeffs;
  SpectralRadius radius;
  /// log of the spectral radius.
  double entropy;
};

struct AlphaBeta {
  Int alpha;
  Int beta;
};

namespace isometry {

/// g = ((u - b v)/2, -c v; a v, (u + b v)/2) with v = s.w / s.k.
/// Requires s.D = D(L), norm +1 and integral entries.
Isometry g_from_pell(const EvenLattice& L, const PellSolution& s);

/// Reads (u, v) back from an SO+(L) element; v is expressed over
/// k = content(L) so that w = k v is integral.
PellSolution pell_from_isometry(const Isometry& g);

/// v = w/k as a reduced rational.
Rational v_of(const PellSolution& s);

bool is_isometry(const EvenLattice& L, const Mat2& m);

/// Requires is_isometry(L, m) and D(L) > 0.
Orientation orientation(const EvenLattice& L, const Mat2& m);

bool in_so_plus(const EvenLattice& L, const Mat2& m);

/// Generator g0 of SO+(L) with v0 > 0; nullopt when D is a square (SO+(L) is
/// trivial).
std::optional<Isometry> so_plus_generator(const EvenLattice& L);

/// (g - eps I) Q^{-1} is integral, i.e. g acts on L^*/L as eps * id.
bool acts_eps_on_disc_group(const EvenLattice& L, const Mat2& g, int eps);

/// alpha, beta with (u, v) = (alpha^2 - 2 eps, alpha beta) and
/// alpha^2 - D beta^2 = 4 eps, when they exist. Requires g in SO+(L), g != 1.
std::optional<AlphaBeta> decompose_alpha_beta(const EvenLattice& L, const Mat2& g, int eps);

SalemData salem_data(const Mat2& g);
SpectralRadius spectral_radius(const Mat2& g);
double entropy(const Mat2& g);

}  // namespace isometry
}  // namespace k3pell

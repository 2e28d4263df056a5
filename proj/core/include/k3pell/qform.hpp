#pragma once

// Rank-2 even lattices, viewed as binary quadratic forms a x^2 + b xy + c y^2
// with Gram matrix (2a b; b 2c), and the reduction theory of the indefinite
// ones: reduced forms, cycles, class inventories and class numbers.

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k3pell/arith.hpp"

namespace k3pell {

struct EvenLattice {
  Int a, b, c;

  /// From Gram entries (2a b; b 2c). Throws on an odd diagonal entry.
  static EvenLattice from_gram(const Int& g00, const Int& g01, const Int& g11);

  /// D = b^2 - 4ac; disc(L) = -D.
  Int D() const { return b * b - 4 * a * c; }
  Int disc() const { return -D(); }
  Mat2 gram() const { return {2 * a, b, b, 2 * c}; }
  /// Form value F(x, y); the vector norm is 2 F(x, y).
  Int value(const Int& x, const Int& y) const { return a * x * x + b * x * y + c * y * y; }

  /// F(M (x, y)^T); Gram becomes M^T G M.
  EvenLattice transformed(const Mat2& m) const;
  EvenLattice scaled(const Int& k) const { return {k * a, k * b, k * c}; }
  EvenLattice mirror() const { return {a, -b, c}; }

  std::string to_string() const;

  friend bool operator==(const EvenLattice&, const EvenLattice&) = default;
  friend bool operator<(const EvenLattice& x, const EvenLattice& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    return x.c < y.c;
  }
};

/// A det +1 change of basis: target = source.transformed(matrix).
struct FormTransform {
  Mat2 matrix;
};

using Cycle = std::vector<EvenLattice>;

/// One SL2-class of forms of discriminant D, given by its cycle of reduced
/// forms. The cycle is rotated to start at its canonical representative.
struct FormClass {
  Cycle cycle;
  bool primitive = false;
  bool represents_zero = false;
  bool represents_minus_one = false;
  bool in_L_prime = false;
  /// Index of the mirror (a, -b, c) class within the inventory; equal to the
  /// own index when the class is ambiguous.
  std::size_t mirror_index = 0;
  /// Index of the GL2-class (lattice isomorphism class) this belongs to.
  std::size_t gl2_index = 0;

  const EvenLattice& representative() const { return cycle.front(); }
};

struct ClassInventory {
  Int D;
  std::vector<FormClass> classes;

  std::size_t narrow_class_number() const;
  /// Number of lattice isomorphism classes (SL2 classes merged with mirrors),
  /// primitive or not.
  std::size_t gl2_class_count() const;
  /// Primitive GL2 classes.
  std::size_t primitive_gl2_class_count() const;
  /// Indices of one SL2 class per GL2 class, in inventory order.
  std::vector<std::size_t> gl2_representatives() const;
};

namespace qform {

Int content(const EvenLattice& L);

/// 0 < b < sqrt(D) and sqrt(D) - b < 2|a| < sqrt(D) + b. Requires non-square D > 0.
bool is_reduced(const EvenLattice& L);

/// Right neighbour (a, b, c) -> (c, b', c') with b' = -b mod 2c. Requires c != 0.
std::pair<EvenLattice, FormTransform> rho_step(const EvenLattice& L);

/// Reduces L: the returned transform maps L to a reduced form.
std::pair<EvenLattice, FormTransform> reduce(const EvenLattice& L);

/// The cycle of reduced forms equivalent to L, starting at the first reduced
/// form reached from L.
Cycle cycle_of(const EvenLattice& L);

/// The canonical representative of a cycle: the least form with a > 0 in
/// lexicographic (a, b, c) order.
EvenLattice canonical_form(const Cycle& cycle);

/// All reduced forms of discriminant D, primitive or not, sorted.
std::vector<EvenLattice> enumerate_reduced(const Int& D);

/// Cycles partitioning enumerate_reduced(D), with per-class flags, sorted by
/// canonical representative.
ClassInventory class_inventory(const Int& D);

/// h+(D): the number of primitive SL2 classes.
std::size_t narrow_class_number(const Int& D);

/// Ordinary class number h(D): h+(D), halved when u^2 - D w^2 = -4 has no
/// solution.
std::size_t class_number(const Int& D);

/// Whether F(x, y) = n for some integers. n = 0 is decided by squareness of D;
/// otherwise requires 4 n^2 < D and non-square D.
bool represents(const EvenLattice& L, const Int& n);

/// A vector (x, y) with F(x, y) = n, when represents(L, n) holds.
std::optional<std::pair<Int, Int>> representation(const EvenLattice& L, const Int& n);

/// No vectors of norm 0 or -2.
bool in_L_prime(const EvenLattice& L);

/// A det +1 transform taking L1 to L2 when they are SL2-equivalent.
std::optional<FormTransform> sl2_equivalent(const EvenLattice& L1, const EvenLattice& L2);

/// A det +-1 transform taking L1 to L2 when they are isomorphic lattices.
std::optional<Mat2> gl2_equivalent(const EvenLattice& L1, const EvenLattice& L2);

/// The lattice (-2 delta; delta (D - delta^2)/2), delta = D mod 2.
EvenLattice l0_lattice(const Int& D);

/// D is a fundamental discriminant.
bool is_fundamental(const Int& D);

}  // namespace qform
}  // namespace k3pell

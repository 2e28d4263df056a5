#pragma once

// Traces of infinite-order symplectic (eps = +1) and anti-symplectic
// (eps = -1) automorphisms of projective K3 surfaces with Picard number 2.
//
// An isometry g of the Picard lattice L is realized by such an automorphism
// iff L has no vectors of norm 0 or -2, g is a nontrivial element of SO+(L),
// and g acts on the discriminant group as eps * id (the transcendental action
// is then eps * id). The realizable traces are exactly alpha^2 - 2 eps with
// alpha in A_eps, where A_{+1} = {alpha >= 4} and A_{-1} additionally omits
// {5, 7, 13, 17}.

#include <optional>
#include <string>
#include <vector>

#include "k3pell/arith.hpp"
#include "k3pell/isometry.hpp"
#include "k3pell/qform.hpp"

namespace k3pell {

struct RealizabilityReport {
  bool in_L_prime = false;
  bool nontrivial_so_plus = false;
  bool acts_eps = false;
  /// The transcendental action is eps * id; fixed by construction, no data.
  bool transcendental_eps_id = true;

  bool ok() const { return in_L_prime && nontrivial_so_plus && acts_eps; }
  /// Name of the first failing condition, or empty.
  std::string first_failure() const;
};

struct WitnessReport {
  int epsilon = 1;
  Int alpha;
  EvenLattice lattice;
  Isometry g;
  Int trace;
  /// Which construction produced the lattice.
  std::string construction;
  RealizabilityReport checks;
};

struct TraceCandidate {
  Int D;
  Int beta;
  /// Canonical representative of the GL2 class.
  EvenLattice lattice;
  bool primitive = false;
  bool in_L_prime = false;
  /// A vector of norm -2 when in_L_prime fails.
  std::optional<std::pair<Int, Int>> minus_two_vector;
  std::optional<Isometry> g;
  std::optional<RealizabilityReport> checks;
  bool realizable = false;
};

struct TraceClassification {
  Int u;
  int epsilon = 1;
  /// sqrt(u + 2 eps) when it is an integer.
  std::optional<Int> alpha;
  std::vector<TraceCandidate> candidates;

  std::vector<const TraceCandidate*> realizable() const;
};

struct BiroRow {
  Int alpha;
  Int D;
  std::size_t narrow_class_number = 0;
};

struct BiroSlice {
  Int alpha_max;
  std::vector<BiroRow> rows;
  /// alpha with h+(alpha^2 + 4) = 1, ascending.
  std::vector<Int> class_number_one;
  /// class_number_one equals {1, 3, 5, 7, 13, 17} restricted to [1, alpha_max].
  bool matches_theorem = false;
};

struct RejectedClass {
  EvenLattice lattice;
  /// Isomorphic display form the classification is compared against.
  EvenLattice display;
  std::string failed_condition;
  std::optional<std::pair<Int, Int>> minus_two_vector;
};

struct OguisoReport {
  EvenLattice lattice;
  Mat2 U;
  Mat2 U_inverse;
  Mat2 V;
  Orientation V_orientation = Orientation::kOPlusNotSO;
  bool conjugation_holds = false;
  Int fixed_points;
  std::vector<RejectedClass> rejected;
  TraceClassification classification;
};

namespace k3class {

/// The alpha values with an exceptional class number outside the computed
/// slice; taken from Biro's theorem rather than recomputed.
inline constexpr int kBiroExceptions[] = {1, 3, 5, 7, 13, 17};

bool in_A_eps(int eps, const Int& alpha);

/// An explicit lattice and isometry realizing trace alpha^2 - 2 eps. Every
/// check is recomputed; any failure throws InvariantError.
WitnessReport witness(int eps, const Int& alpha);

RealizabilityReport realizable(const EvenLattice& L, const Mat2& g, int eps);

/// All lattice classes (up to isomorphism) carrying a realizable isometry of
/// trace u. Requires u > 2.
TraceClassification classify_trace(const Int& u, int eps);

BiroSlice biro_slice(const Int& alpha_max);

/// Lefschetz number alpha^2 + 18 eps + 2. Requires alpha in A_eps.
Int fixed_point_count(int eps, const Int& alpha);

/// The unique trace-18 anti-symplectic class and its conjugation symmetry.
/// Throws InvariantError on any deviation.
OguisoReport oguiso_classification();

}  // namespace k3class
}  // namespace k3pell

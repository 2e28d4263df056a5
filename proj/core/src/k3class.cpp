#include "k3pell/k3class.hpp"

#include <algorithm>

#include "k3pell/pell.hpp"

namespace k3pell {

std::string RealizabilityReport::first_failure() const {
  if (!in_L_prime) return "in_L_prime";
  if (!nontrivial_so_plus) return "nontrivial_so_plus";
  if (!acts_eps) return "acts_eps";
  return "";
}

std::vector<const TraceCandidate*> TraceClassification::realizable() const {
  std::vector<const TraceCandidate*> out;
  for (const auto& c : candidates) {
    if (c.realizable) out.push_back(&c);
  }
  return out;
}

namespace k3class {
namespace {

void require_eps(int eps) {
  if (eps != 1 && eps != -1) throw PreconditionError("eps must be +1 or -1");
}

bool is_biro_exception(const Int& alpha) {
  return std::any_of(std::begin(kBiroExceptions), std::end(kBiroExceptions),
                     [&](int e) { return alpha == e; });
}

}  // namespace

bool in_A_eps(int eps, const Int& alpha) {
  require_eps(eps);
  if (alpha < 4) return false;
  return eps == 1 || !is_biro_exception(alpha);
}

RealizabilityReport realizable(const EvenLattice& L, const Mat2& g, int eps) {
  require_eps(eps);
  RealizabilityReport r;
  const Int D = L.D();
  if (D <= 0) return r;
  r.in_L_prime = qform::in_L_prime(L);
  r.nontrivial_so_plus = isometry::in_so_plus(L, g) && !g.is_identity();
  r.acts_eps = isometry::is_isometry(L, g) && isometry::acts_eps_on_disc_group(L, g, eps);
  return r;
}

WitnessReport witness(int eps, const Int& alpha) {
  require_eps(eps);
  if (!in_A_eps(eps, alpha)) {
    throw PreconditionError("witness: alpha = " + alpha.get_str() + " is not in A_eps for eps = " +
                            std::to_string(eps));
  }
  WitnessReport rep;
  rep.epsilon = eps;
  rep.alpha = alpha;
  rep.trace = alpha * alpha - 2 * eps;
  const Int D = alpha * alpha - 4 * eps;

  if (eps == 1) {
    rep.lattice = {1, alpha, 1};  // Gram (2 alpha; alpha 2)
    rep.construction = "symplectic: Gram (2 alpha; alpha 2)";
  } else if (mpz_even_p(alpha.get_mpz_t())) {
    rep.lattice = {alpha / 2, 2, -alpha / 2};  // Gram (alpha 2; 2 -alpha)
    rep.construction = "anti-symplectic, even alpha: Gram (alpha 2; 2 -alpha)";
  } else if (const Int n = square_part_root(D); n > 1) {
    const Int D0 = D / (n * n);
    rep.lattice = {n, n, -n * (D0 - 1) / 4};  // Gram (2n n; n -n(D0-1)/2)
    rep.construction = "anti-symplectic, odd alpha, alpha^2+4 = n^2 D0 with n = " + n.get_str();
  } else {
    const ClassInventory inv = qform::class_inventory(D);
    const auto it = std::find_if(inv.classes.begin(), inv.classes.end(),
                                 [](const FormClass& c) { return c.primitive && c.in_L_prime; });
    if (it == inv.classes.end()) {
      throw InvariantError("witness: no class without norm -2 vectors for D = " + D.get_str());
    }
    rep.lattice = it->representative();
    rep.construction = "anti-symplectic, odd alpha, alpha^2+4 squarefree: first class with h+ > 1";
  }

  rep.g = isometry::g_from_pell(rep.lattice, PellSolution{rep.trace, alpha, D, 1});
  rep.checks = realizable(rep.lattice, rep.g.m, eps);
  if (!rep.checks.ok()) {
    throw InvariantError("witness: check '" + rep.checks.first_failure() + "' failed for alpha = " +
                         alpha.get_str());
  }
  if (rep.g.m.trace() != rep.trace) throw InvariantError("witness: trace mismatch");
  return rep;
}

TraceClassification classify_trace(const Int& u, int eps) {
  require_eps(eps);
  if (u <= 2) throw PreconditionError("classify_trace: requires u > 2");
  TraceClassification out;
  out.u = u;
  out.epsilon = eps;
  out.alpha = exact_sqrt(u + 2 * eps);
  if (!out.alpha) return out;
  const Int& alpha = *out.alpha;
  const Int N = alpha * alpha - 4 * eps;  // > 0 because u > 2

  for (Int beta = 1; beta * beta <= N; ++beta) {
    if (N % (beta * beta) != 0) continue;
    const Int D = N / (beta * beta);
    const Int r = mod_floor(D, 4);
    if ((r != 0 && r != 1) || is_square(D)) continue;
    const ClassInventory inv = qform::class_inventory(D);
    for (std::size_t idx : inv.gl2_representatives()) {
      const FormClass& cls = inv.classes[idx];
      TraceCandidate cand;
      cand.D = D;
      cand.beta = beta;
      cand.lattice = cls.representative();
      cand.primitive = cls.primitive;
      cand.in_L_prime = cls.in_L_prime;
      if (!cls.in_L_prime) {
        cand.minus_two_vector = qform::representation(cand.lattice, -1);
      } else {
        try {
          cand.g = isometry::g_from_pell(cand.lattice, PellSolution{u, alpha * beta, D, 1});
        } catch (const PreconditionError&) {
          cand.g.reset();
        }
        if (cand.g) {
          cand.checks = realizable(cand.lattice, cand.g->m, eps);
          cand.realizable = cand.checks->ok();
        }
      }
      out.candidates.push_back(std::move(cand));
    }
  }
  return out;
}

BiroSlice biro_slice(const Int& alpha_max) {
  if (alpha_max < 1) throw PreconditionError("biro_slice: alpha_max must be at least 1");
  BiroSlice out;
  out.alpha_max = alpha_max;
  for (Int alpha = 1; alpha <= alpha_max; alpha += 2) {
    const Int D = alpha * alpha + 4;
    if (!is_squarefree(D)) continue;
    BiroRow row{alpha, D, qform::narrow_class_number(D)};
    if (row.narrow_class_number == 1) out.class_number_one.push_back(alpha);
    out.rows.push_back(std::move(row));
  }
  std::vector<Int> expected;
  for (int e : kBiroExceptions) {
    if (e <= alpha_max) expected.emplace_back(e);
  }
  out.matches_theorem = out.class_number_one == expected;
  return out;
}

Int fixed_point_count(int eps, const Int& alpha) {
  if (!in_A_eps(eps, alpha)) throw PreconditionError("fixed_point_count: alpha is not in A_eps");
  return alpha * alpha + 18 * eps + 2;
}

OguisoReport oguiso_classification() {
  OguisoReport rep;
  rep.classification = classify_trace(18, -1);
  const auto hits = rep.classification.realizable();
  if (hits.size() != 1) {
    throw InvariantError("oguiso: expected exactly one realizable class, found " +
                         std::to_string(hits.size()));
  }
  rep.lattice = hits.front()->lattice;
  if (rep.lattice != EvenLattice{2, 2, -2}) {
    throw InvariantError("oguiso: unexpected lattice " + rep.lattice.to_string());
  }
  rep.U = hits.front()->g->m;
  if (rep.U != Mat2{5, 8, 8, 13}) throw InvariantError("oguiso: unexpected isometry " + rep.U.to_string());
  rep.U_inverse = rep.U.inverse_unimodular();
  if (!realizable(rep.lattice, rep.U_inverse, -1).ok()) {
    throw InvariantError("oguiso: U^-1 is not realizable");
  }

  rep.V = Mat2{1, 0, 1, -1};
  if (!isometry::is_isometry(rep.lattice, rep.V)) throw InvariantError("oguiso: V is not an isometry");
  rep.V_orientation = isometry::orientation(rep.lattice, rep.V);
  if (rep.V_orientation != Orientation::kOPlusNotSO) throw InvariantError("oguiso: V is not in O+ \\ SO+");
  rep.conjugation_holds = rep.V.inverse_unimodular() * rep.U_inverse * rep.V == rep.U;
  if (!rep.conjugation_holds) throw InvariantError("oguiso: V^-1 U^-1 V != U");

  rep.fixed_points = fixed_point_count(-1, 4);
  if (rep.fixed_points != 0) throw InvariantError("oguiso: nonzero fixed point count");

  const EvenLattice displays[] = {EvenLattice{-1, 0, 5}, EvenLattice{1, 1, -1}};
  std::vector<bool> matched(std::size(displays), false);
  for (const auto& cand : rep.classification.candidates) {
    if (cand.realizable) continue;
    RejectedClass rej;
    rej.lattice = cand.lattice;
    rej.failed_condition = cand.checks ? cand.checks->first_failure() : "in_L_prime";
    rej.minus_two_vector = cand.minus_two_vector;
    bool found = false;
    for (std::size_t i = 0; i < std::size(displays); ++i) {
      if (displays[i].D() != cand.lattice.D() || !qform::gl2_equivalent(cand.lattice, displays[i])) continue;
      if (matched[i]) throw InvariantError("oguiso: two rejected classes match one display");
      matched[i] = true;
      rej.display = displays[i];
      found = true;
    }
    if (!found) throw InvariantError("oguiso: unexpected rejected class " + cand.lattice.to_string());
    rep.rejected.push_back(std::move(rej));
  }
  if (std::find(matched.begin(), matched.end(), false) != matched.end()) {
    throw InvariantError("oguiso: a displayed rejected class was not produced");
  }
  return rep;
}

}  // namespace k3class
}  // namespace k3pell

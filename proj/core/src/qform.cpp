#include "k3pell/qform.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "k3pell/pell.hpp"

namespace k3pell {

EvenLattice EvenLattice::from_gram(const Int& g00, const Int& g01, const Int& g11) {
  if (mpz_odd_p(g00.get_mpz_t()) || mpz_odd_p(g11.get_mpz_t())) {
    throw PreconditionError("Gram matrix has an odd diagonal entry; not an even lattice");
  }
  return {g00 / 2, g01, g11 / 2};
}

EvenLattice EvenLattice::transformed(const Mat2& m) const {
  // F(p x + q y, r x + s y) with m = (p q; r s).
  const Int& p = m.m00;
  const Int& q = m.m01;
  const Int& r = m.m10;
  const Int& s = m.m11;
  return {a * p * p + b * p * r + c * r * r,
          2 * a * p * q + b * (p * s + q * r) + 2 * c * r * s,
          a * q * q + b * q * s + c * s * s};
}

std::string EvenLattice::to_string() const {
  return "(" + a.get_str() + "," + b.get_str() + "," + c.get_str() + ")";
}

std::size_t ClassInventory::narrow_class_number() const {
  return static_cast<std::size_t>(
      std::count_if(classes.begin(), classes.end(), [](const FormClass& f) { return f.primitive; }));
}

std::size_t ClassInventory::gl2_class_count() const { return gl2_representatives().size(); }

std::size_t ClassInventory::primitive_gl2_class_count() const {
  std::size_t n = 0;
  for (std::size_t i : gl2_representatives()) n += classes[i].primitive ? 1 : 0;
  return n;
}

std::vector<std::size_t> ClassInventory::gl2_representatives() const {
  std::vector<std::size_t> out;
  std::set<std::size_t> seen;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (seen.insert(classes[i].gl2_index).second) out.push_back(i);
  }
  return out;
}

namespace qform {
namespace {

void require_indefinite_nonsquare(const Int& D) {
  if (D <= 0) throw PreconditionError("form is not indefinite (D <= 0)");
  if (is_square(D)) throw PreconditionError("square discriminant is unsupported for reduction");
}

// Cycle of a reduced form together with the transform from the first form to
// each member.
std::vector<std::pair<EvenLattice, Mat2>> walk_cycle(const EvenLattice& reduced) {
  std::vector<std::pair<EvenLattice, Mat2>> out;
  EvenLattice cur = reduced;
  Mat2 acc;
  do {
    out.emplace_back(cur, acc);
    auto [next, t] = rho_step(cur);
    acc = acc * t.matrix;
    cur = std::move(next);
    if (!is_reduced(cur)) throw InvariantError("rho step left the set of reduced forms");
  } while (cur != reduced);
  return out;
}

}  // namespace

Int content(const EvenLattice& L) { return gcd(gcd(L.a, L.b), L.c); }

bool is_reduced(const EvenLattice& L) {
  const Int D = L.D();
  require_indefinite_nonsquare(D);
  if (L.b <= 0 || L.b * L.b >= D) return false;
  const Int twice_a = 2 * abs(L.a);
  // sqrt(D) - b < 2|a|  <=>  (2|a| + b)^2 > D
  const Int lower = twice_a + L.b;
  if (lower * lower <= D) return false;
  // 2|a| < sqrt(D) + b  <=>  2|a| - b <= 0 or (2|a| - b)^2 < D
  const Int upper = twice_a - L.b;
  return upper <= 0 || upper * upper < D;
}

std::pair<EvenLattice, FormTransform> rho_step(const EvenLattice& L) {
  if (L.c == 0) throw PreconditionError("rho_step: c = 0 (square discriminant)");
  const Int D = L.D();
  require_indefinite_nonsquare(D);
  const Int root = isqrt(D);
  const Int modulus = 2 * abs(L.c);
  Int b_next;
  if (abs(L.c) <= root) {
    // largest b' < sqrt(D) with b' = -b mod 2|c|
    b_next = root - mod_floor(root + L.b, modulus);
  } else {
    // -|c| < b' <= |c|
    b_next = mod_floor(-L.b, modulus);
    if (b_next > abs(L.c)) b_next -= modulus;
  }
  const Int t = (L.b + b_next) / (2 * L.c);
  const Mat2 m{0, -1, 1, t};
  EvenLattice next = L.transformed(m);
  if (next.b != b_next) throw InvariantError("rho_step: transform bookkeeping mismatch");
  return {next, FormTransform{m}};
}

std::pair<EvenLattice, FormTransform> reduce(const EvenLattice& L) {
  require_indefinite_nonsquare(L.D());
  EvenLattice cur = L;
  Mat2 acc;
  // Reduction takes O(log |coefficients|) steps; the cap only guards bugs.
  const std::size_t cap = 64 * (mpz_sizeinbase(L.a.get_mpz_t(), 2) +
                                mpz_sizeinbase(L.b.get_mpz_t(), 2) +
                                mpz_sizeinbase(L.c.get_mpz_t(), 2)) +
                          1024;
  for (std::size_t i = 0; !is_reduced(cur); ++i) {
    if (i > cap) throw InvariantError("reduce: no reduced form reached");
    if (cur.c == 0) throw InvariantError("reduce: hit c = 0 on a non-square discriminant");
    auto [next, t] = rho_step(cur);
    acc = acc * t.matrix;
    cur = std::move(next);
  }
  return {cur, FormTransform{acc}};
}

Cycle cycle_of(const EvenLattice& L) {
  Cycle out;
  for (auto& [form, _] : walk_cycle(reduce(L).first)) out.push_back(form);
  return out;
}

EvenLattice canonical_form(const Cycle& cycle) {
  const EvenLattice* best = nullptr;
  for (const auto& f : cycle) {
    if (f.a > 0 && (best == nullptr || f < *best)) best = &f;
  }
  if (best == nullptr) throw InvariantError("cycle without a positive leading coefficient");
  return *best;
}

std::vector<EvenLattice> enumerate_reduced(const Int& D) {
  pell::require_order_discriminant(D);
  const Int root = isqrt(D);
  std::vector<EvenLattice> out;
  for (Int b = mod_floor(D, 2) == 0 ? Int(2) : Int(1); b <= root; b += 2) {
    const Int minus_ac = (D - b * b) / 4;
    if (minus_ac == 0) continue;
    const Int a_max = (root + b) / 2 + 1;
    for (Int abs_a = 1; abs_a <= a_max; ++abs_a) {
      if (minus_ac % abs_a != 0) continue;
      for (const int s : {-1, 1}) {
        EvenLattice f{s * abs_a, b, -s * (minus_ac / abs_a)};
        if (is_reduced(f)) out.push_back(f);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ClassInventory class_inventory(const Int& D) {
  const auto reduced = enumerate_reduced(D);
  std::set<EvenLattice> assigned;
  ClassInventory inv{D, {}};
  for (const auto& f : reduced) {
    if (assigned.count(f)) continue;
    Cycle cycle;
    for (auto& [g, _] : walk_cycle(f)) {
      if (!assigned.insert(g).second) throw InvariantError("reduced form lies on two cycles");
      cycle.push_back(g);
    }
    const EvenLattice canon = canonical_form(cycle);
    std::rotate(cycle.begin(), std::find(cycle.begin(), cycle.end(), canon), cycle.end());
    FormClass cls;
    cls.primitive = content(canon) == 1;
    cls.represents_zero = false;
    cls.represents_minus_one =
        std::any_of(cycle.begin(), cycle.end(), [](const EvenLattice& g) { return g.a == -1; });
    cls.in_L_prime = !cls.represents_minus_one;
    cls.cycle = std::move(cycle);
    inv.classes.push_back(std::move(cls));
  }
  if (assigned.size() != reduced.size()) throw InvariantError("cycles left reduced forms uncovered");
  std::sort(inv.classes.begin(), inv.classes.end(), [](const FormClass& x, const FormClass& y) {
    return x.representative() < y.representative();
  });

  std::map<EvenLattice, std::size_t> index_of;
  for (std::size_t i = 0; i < inv.classes.size(); ++i) index_of[inv.classes[i].representative()] = i;
  std::size_t next_gl2 = 0;
  for (std::size_t i = 0; i < inv.classes.size(); ++i) {
    auto& cls = inv.classes[i];
    const auto it = index_of.find(canonical_form(cycle_of(cls.representative().mirror())));
    if (it == index_of.end()) throw InvariantError("mirror class missing from inventory");
    cls.mirror_index = it->second;
    cls.gl2_index = cls.mirror_index < i ? inv.classes[cls.mirror_index].gl2_index : next_gl2++;
  }
  return inv;
}

std::size_t narrow_class_number(const Int& D) { return class_inventory(D).narrow_class_number(); }

std::size_t class_number(const Int& D) {
  const std::size_t narrow = narrow_class_number(D);
  return pell::solve_pell_neg4(D) ? narrow : narrow / 2;
}

std::optional<std::pair<Int, Int>> representation(const EvenLattice& L, const Int& n) {
  const Int D = L.D();
  if (D <= 0) throw PreconditionError("represents: form is not indefinite (D <= 0)");
  if (n == 0) {
    const auto root = exact_sqrt(D);
    if (!root) return std::nullopt;
    if (L.a == 0) return std::make_pair(Int(1), Int(0));
    // a x^2 + b x y + c y^2 = 0 at x/y = (-b + sqrt D) / (2a)
    Int x = -L.b + *root;
    Int y = 2 * L.a;
    const Int g = gcd(x, y);
    return std::make_pair(Int(x / g), Int(y / g));
  }
  if (is_square(D)) throw PreconditionError("represents: square discriminant only supports n = 0");
  if (4 * n * n >= D) throw PreconditionError("represents: requires |2n| < sqrt(D)");
  const auto [reduced, to_reduced] = reduce(L);
  for (const auto& [g, along] : walk_cycle(reduced)) {
    if (g.a != n) continue;
    const Mat2 total = to_reduced.matrix * along;
    return std::make_pair(total.m00, total.m10);
  }
  return std::nullopt;
}

bool represents(const EvenLattice& L, const Int& n) { return representation(L, n).has_value(); }

bool in_L_prime(const EvenLattice& L) {
  const Int D = L.D();
  if (D <= 0) throw PreconditionError("in_L_prime: lattice does not have signature (1,1)");
  if (is_square(D)) return false;
  return !represents(L, -1);
}

std::optional<FormTransform> sl2_equivalent(const EvenLattice& L1, const EvenLattice& L2) {
  if (L1.D() != L2.D()) throw PreconditionError("sl2_equivalent: mismatched discriminants");
  if (L1 == L2) return FormTransform{Mat2::identity()};
  const auto [r1, m1] = reduce(L1);
  const auto [r2, m2] = reduce(L2);
  for (const auto& [g, along] : walk_cycle(r1)) {
    if (g != r2) continue;
    const Mat2 t = m1.matrix * along * m2.matrix.inverse_unimodular();
    if (L1.transformed(t) != L2) throw InvariantError("sl2_equivalent: transform check failed");
    return FormTransform{t};
  }
  return std::nullopt;
}

std::optional<Mat2> gl2_equivalent(const EvenLattice& L1, const EvenLattice& L2) {
  if (auto t = sl2_equivalent(L1, L2)) return t->matrix;
  const Mat2 flip{1, 0, 0, -1};
  if (auto t = sl2_equivalent(L1, L2.mirror())) {
    const Mat2 m = t->matrix * flip;
    if (L1.transformed(m) != L2) throw InvariantError("gl2_equivalent: transform check failed");
    return m;
  }
  return std::nullopt;
}

EvenLattice l0_lattice(const Int& D) {
  if (D <= 0) throw PreconditionError("l0_lattice: D must be positive");
  const Int r = mod_floor(D, 4);
  if (r != 0 && r != 1) throw PreconditionError("l0_lattice: D must be 0 or 1 mod 4");
  const Int delta = r;
  return {-1, delta, (D - delta * delta) / 4};
}

bool is_fundamental(const Int& D) {
  if (D <= 1) return false;
  const Int r = mod_floor(D, 4);
  if (r == 1) return is_squarefree(D);
  if (r != 0) return false;
  const Int m = D / 4;
  const Int rm = mod_floor(m, 4);
  return (rm == 2 || rm == 3) && is_squarefree(m);
}

}  // namespace qform
}  // namespace k3pell

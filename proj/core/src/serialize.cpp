#include "k3pell/serialize.hpp"

namespace k3pell::json {
namespace {

json vector_pair(const std::optional<std::pair<Int, Int>>& v) {
  if (!v) return nullptr;
  return json::array({integer(v->first), integer(v->second)});
}

}  // namespace

json integer(const Int& n) {
  if (mpz_fits_slong_p(n.get_mpz_t())) return static_cast<std::int64_t>(n.get_si());
  return n.get_str();
}

Int parse_integer(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    Int out;
    if (out.set_str(j.get<std::string>(), 10) != 0) throw PreconditionError("malformed integer string");
    return out;
  }
  throw PreconditionError("expected an integer");
}

json matrix(const Mat2& m) {
  return json::array({json::array({integer(m.m00), integer(m.m01)}),
                      json::array({integer(m.m10), integer(m.m11)})});
}

json lattice(const EvenLattice& L) { return {{"gram", matrix(L.gram())}}; }

EvenLattice parse_lattice(const json& j) {
  const json& g = j.at("gram");
  if (!g.is_array() || g.size() != 2 || g[0].size() != 2 || g[1].size() != 2) {
    throw PreconditionError("gram must be a 2x2 array");
  }
  const Int g01 = parse_integer(g[0][1]);
  if (g01 != parse_integer(g[1][0])) throw PreconditionError("gram must be symmetric");
  return EvenLattice::from_gram(parse_integer(g[0][0]), g01, parse_integer(g[1][1]));
}

json isometry(const Isometry& g) {
  json out{{"matrix", matrix(g.m)}, {"gram", matrix(g.lattice.gram())}};
  if (g.lattice.D() > 0 && isometry::in_so_plus(g.lattice, g.m)) {
    const PellSolution s = isometry::pell_from_isometry(g);
    const Rational v = isometry::v_of(s);
    out["u"] = integer(s.u);
    out["v_num"] = integer(v.num);
    out["v_den"] = integer(v.den);
  }
  return out;
}

json pell_solution(const PellSolution& s) {
  const Rational v = isometry::v_of(s);
  return {{"u", integer(s.u)},       {"w", integer(s.w)},         {"D", integer(s.D)},
          {"k", integer(s.k)},       {"v_num", integer(v.num)},   {"v_den", integer(v.den)},
          {"norm", s.norm()},        {"pell_value", integer(s.pell_value())}};
}

json cf_expansion(const CFExpansion& cf) {
  json period = json::array();
  for (const auto& a : cf.period) period.push_back(integer(a));
  return {{"radicand", integer(cf.delta)},
          {"a0", integer(cf.a0)},
          {"period", period},
          {"period_length", cf.period.size()}};
}

json inventory(const ClassInventory& inv) {
  json classes = json::array();
  for (std::size_t i = 0; i < inv.classes.size(); ++i) {
    const FormClass& c = inv.classes[i];
    json cycle = json::array();
    for (const auto& f : c.cycle) cycle.push_back(matrix(f.gram()));
    classes.push_back({{"gram", matrix(c.representative().gram())},
                       {"primitive", c.primitive},
                       {"in_L_prime", c.in_L_prime},
                       {"represents_zero", c.represents_zero},
                       {"represents_minus_one", c.represents_minus_one},
                       {"content", integer(qform::content(c.representative()))},
                       {"mirror", c.mirror_index},
                       {"gl2_class", c.gl2_index},
                       {"cycle", cycle}});
  }
  return {{"D", integer(inv.D)},
          {"classes", classes},
          {"narrow_class_number", inv.narrow_class_number()},
          {"gl2_class_count", inv.gl2_class_count()},
          {"primitive_gl2_class_count", inv.primitive_gl2_class_count()}};
}

json realizability(const RealizabilityReport& r) {
  return {{"in_L_prime", r.in_L_prime},
          {"nontrivial_so_plus", r.nontrivial_so_plus},
          {"acts_eps", r.acts_eps},
          {"transcendental_eps_id", "holds by construction"},
          {"realizable", r.ok()}};
}

json salem(const SalemData& s) {
  return {{"trace", integer(s.trace)},
          {"salem_polynomial", json::array({integer(s.coeffs[0]), integer(s.coeffs[1]),
                                            integer(s.coeffs[2])})},
          {"spectral_radius",
           {{"exact", "(" + s.radius.u.get_str() + " + sqrt(" + s.radius.radicand.get_str() + "))/2"},
            {"u", integer(s.radius.u)},
            {"radicand", integer(s.radius.radicand)},
            {"decimal", s.radius.decimal},
            {"significant_digits", 20}}},
          {"entropy", s.entropy}};
}

json witness(const WitnessReport& w) {
  return {{"epsilon", w.epsilon},
          {"alpha", integer(w.alpha)},
          {"trace", integer(w.trace)},
          {"lattice", lattice(w.lattice)},
          {"disc", integer(w.lattice.disc())},
          {"g", isometry(w.g)},
          {"construction", w.construction},
          {"checks", realizability(w.checks)},
          {"valid", w.checks.ok()}};
}

json classification(const TraceClassification& c) {
  json cands = json::array();
  for (const auto& cand : c.candidates) {
    json j{{"D", integer(cand.D)},
           {"beta", integer(cand.beta)},
           {"lattice", lattice(cand.lattice)},
           {"primitive", cand.primitive},
           {"in_L_prime", cand.in_L_prime},
           {"norm_minus_two_vector", vector_pair(cand.minus_two_vector)},
           {"realizable", cand.realizable}};
    if (cand.g) j["g"] = isometry(*cand.g);
    if (cand.checks) j["checks"] = realizability(*cand.checks);
    cands.push_back(std::move(j));
  }
  json out{{"u", integer(c.u)},
           {"epsilon", c.epsilon},
           {"alpha", c.alpha ? integer(*c.alpha) : json(nullptr)},
           {"candidates", cands},
           {"realizable_count", c.realizable().size()}};
  return out;
}

json biro(const BiroSlice& b) {
  json rows = json::array();
  for (const auto& r : b.rows) {
    rows.push_back({{"alpha", integer(r.alpha)},
                    {"D", integer(r.D)},
                    {"narrow_class_number", r.narrow_class_number}});
  }
  json ones = json::array();
  for (const auto& a : b.class_number_one) ones.push_back(integer(a));
  return {{"alpha_max", integer(b.alpha_max)},
          {"rows", rows},
          {"class_number_one", ones},
          {"matches_theorem", b.matches_theorem}};
}

json oguiso(const OguisoReport& r) {
  json rejected = json::array();
  for (const auto& rej : r.rejected) {
    rejected.push_back({{"lattice", lattice(rej.lattice)},
                        {"isomorphic_to", lattice(rej.display)},
                        {"failed_condition", rej.failed_condition},
                        {"norm_minus_two_vector", vector_pair(rej.minus_two_vector)}});
  }
  return {{"gram", matrix(r.lattice.gram())},
          {"matrix", matrix(r.U)},
          {"inverse", matrix(r.U_inverse)},
          {"conjugator", matrix(r.V)},
          {"conjugator_orientation", to_string(r.V_orientation)},
          {"conjugation_holds", r.conjugation_holds},
          {"fixed_points", integer(r.fixed_points)},
          {"rejected", rejected},
          {"classification", classification(r.classification)}};
}

json sweep(const sweeps::SweepResult& r) {
  return {{"name", r.name},
          {"checked", r.checked},
          {"hits", r.hits},
          {"passed", r.passed()},
          {"failures", r.failures}};
}

}  // namespace k3pell::json

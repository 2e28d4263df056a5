// k3pell: command-line access to the trace classification.
//
// Every successful command prints one JSON envelope
//   {"command", "inputs", "result", "citations"}
// on stdout. Errors go to stderr with exit status 2; a failing `verify`
// prints its report and exits with status 1.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "k3pell/isometry.hpp"
#include "k3pell/k3class.hpp"
#include "k3pell/pell.hpp"
#include "k3pell/qform.hpp"
#include "k3pell/serialize.hpp"
#include "k3pell/sweeps.hpp"

using namespace k3pell;
using Json = nlohmann::json;
namespace kj = k3pell::json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitVerifyFailed = 1;

Int parse_int(const std::string& text, const std::string& what) {
  Int out;
  if (text.empty() || out.set_str(text, 10) != 0) {
    throw PreconditionError(what + ": '" + text + "' is not an integer");
  }
  return out;
}

std::vector<Int> parse_triple(const std::string& text, const std::string& what) {
  std::vector<Int> out;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) out.push_back(parse_int(part, what));
  if (out.size() != 3) throw PreconditionError(what + ": expected three comma-separated integers");
  return out;
}

int parse_eps(const std::string& text) {
  const Int e = parse_int(text, "--eps");
  if (e != 1 && e != -1) throw PreconditionError("--eps must be 1 or -1");
  return static_cast<int>(e.get_si());
}

/// D > 0 from a lattice discriminant disc(L) = -D entered as a negative number.
Int order_disc_from_lattice_disc(const Int& disc) {
  if (disc >= 0) {
    throw PreconditionError("--disc takes disc(L) = -D, which is negative for signature (1,1)");
  }
  const Int D = -disc;
  const Int r = mod_floor(D, 4);
  if (r != 0 && r != 1) {
    throw PreconditionError("D = -disc(L) must be 0 or 1 mod 4; no even lattice has this discriminant");
  }
  if (is_square(D)) throw PreconditionError("D = -disc(L) is a perfect square; the class inventory is unsupported");
  return D;
}

std::pair<Int, Int> isotropic_vector(const EvenLattice& L) {
  if (L.a == 0) return {1, 0};
  const Int r = *exact_sqrt(L.D());
  Int x = -L.b + r, y = 2 * L.a;
  const Int g = gcd(x, y);
  return {x / g, y / g};
}

Json lprime_report(const EvenLattice& L) {
  const Int D = L.D();
  Json out{{"lattice", kj::lattice(L)}, {"disc", kj::integer(L.disc())}};
  if (D <= 0) throw PreconditionError("lattice is not of signature (1,1): disc(L) must be negative");
  const bool ok = qform::in_L_prime(L);
  out["in_L_prime"] = ok;
  out["norm_zero_vector"] = nullptr;
  out["norm_minus_two_vector"] = nullptr;
  if (is_square(D)) {
    const auto [x, y] = isotropic_vector(L);
    out["norm_zero_vector"] = Json::array({kj::integer(x), kj::integer(y)});
  } else if (!ok) {
    const auto v = qform::representation(L, -1);
    out["norm_minus_two_vector"] = Json::array({kj::integer(v->first), kj::integer(v->second)});
  }
  return out;
}

struct Envelope {
  std::string command;
  Json inputs = Json::object();
  Json result;
  std::vector<std::string> citations;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Traces of infinite-order automorphisms of Picard rank 2 K3 surfaces"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indent the JSON output");

  std::string disc, radicand, gram, form, u_text, eps_text, alpha_text, sweep = "all";
  std::string dmax_text = "2000", alphamax_text = "99", trace_max_text = "1000000";
  bool neg = false;

  auto* pell_cmd = app.add_subcommand("pell", "Minimal solution of u^2 - D w^2 = 4 (or -4 with --neg)");
  pell_cmd->add_option("--disc", disc, "Discriminant D > 0 of the quadratic order")->required();
  pell_cmd->add_flag("--neg", neg, "Solve u^2 - D w^2 = -4");

  auto* cf_cmd = app.add_subcommand("cf", "Continued fraction of sqrt(N) and the period parity criteria");
  cf_cmd->add_option("--radicand", radicand, "Non-square N >= 2")->required();

  auto* classes_cmd = app.add_subcommand("classes", "Class inventory for lattices of discriminant disc(L) = -D");
  classes_cmd->add_option("--disc", disc, "disc(L), a negative integer")->required();

  auto* lprime_cmd = app.add_subcommand("lprime", "Whether a lattice has no vectors of norm 0 or -2");
  auto* gram_opt = lprime_cmd->add_option("--gram", gram, "Gram entries 2a,b,2c");
  auto* form_opt = lprime_cmd->add_option("--form", form, "Form coefficients a,b,c");
  gram_opt->excludes(form_opt);
  lprime_cmd->require_option(1);

  auto* trace_cmd = app.add_subcommand("trace", "All lattice classes realizing trace u");
  trace_cmd->add_option("--u", u_text, "Trace u > 2")->required();
  trace_cmd->add_option("--eps", eps_text, "1 (symplectic) or -1 (anti-symplectic)")->required();

  auto* witness_cmd = app.add_subcommand("witness", "Explicit lattice and isometry for trace alpha^2 - 2 eps");
  witness_cmd->add_option("--alpha", alpha_text, "alpha in A_eps")->required();
  witness_cmd->add_option("--eps", eps_text, "1 or -1")->required();

  auto* fixed_cmd = app.add_subcommand("fixed-points", "Lefschetz number, spectral radius and entropy");
  fixed_cmd->add_option("--alpha", alpha_text, "alpha in A_eps")->required();
  fixed_cmd->add_option("--eps", eps_text, "1 or -1")->required();

  auto* oguiso_cmd = app.add_subcommand("oguiso", "The fixed-point-free anti-symplectic classification");

  auto* verify_cmd = app.add_subcommand("verify", "Soundness, completeness and class number sweeps");
  verify_cmd->add_option("--sweep", sweep, "soundness, completeness, biro or all")
      ->check(CLI::IsMember({"soundness", "completeness", "biro", "all"}));
  verify_cmd->add_option("--dmax", dmax_text, "Largest D for the completeness sweep");
  verify_cmd->add_option("--alphamax", alphamax_text, "Largest alpha for soundness and the class number slice");
  verify_cmd->add_option("--trace-max", trace_max_text, "Largest trace in the completeness sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  Envelope env;
  int status = 0;
  try {
    if (*pell_cmd) {
      env.command = "pell";
      const Int D = parse_int(disc, "--disc");
      env.inputs = {{"disc", kj::integer(D)}, {"neg", neg}};
      pell::require_order_discriminant(D);
      if (neg) {
        const auto s = pell::solve_pell_neg4(D);
        env.result = {{"solvable", s.has_value()},
                      {"solution", s ? kj::pell_solution(*s) : Json(nullptr)}};
      } else {
        env.result = {{"solvable", true}, {"solution", kj::pell_solution(pell::solve_pell4(D))}};
      }
      env.result["fundamental_unit"] = kj::pell_solution(pell::fundamental_unit_pm4(D));
      env.citations = {"Pell parametrization of SO+(L)", "fundamental unit of the order of discriminant D"};
    } else if (*cf_cmd) {
      env.command = "cf";
      const Int N = parse_int(radicand, "--radicand");
      env.inputs = {{"radicand", kj::integer(N)}};
      const CFExpansion cf = pell::cf_sqrt(N);
      const bool even = pell::period_parity(N) == Parity::kEven;
      env.result = kj::cf_expansion(cf);
      env.result["period_parity"] = even ? "even" : "odd";
      if (N > 2) {
        const bool mollin = pell::mollin_criterion(N);
        env.result["factorization_criterion"] = mollin;
        env.result["criteria_agree"] = mollin == even;
      }
      env.citations = {"period parity and factorization criterion"};
    } else if (*classes_cmd) {
      env.command = "classes";
      const Int d = parse_int(disc, "--disc");
      env.inputs = {{"disc", kj::integer(d)}};
      const Int D = order_disc_from_lattice_disc(d);
      const ClassInventory inv = qform::class_inventory(D);
      env.result = kj::inventory(inv);
      env.result["class_number"] = qform::class_number(D);
      env.result["fundamental"] = qform::is_fundamental(D);
      env.citations = {"narrow class number and lattices without norm -2 vectors"};
    } else if (*lprime_cmd) {
      env.command = "lprime";
      EvenLattice L;
      if (!gram.empty()) {
        const auto g = parse_triple(gram, "--gram");
        env.inputs = {{"gram", gram}};
        L = EvenLattice::from_gram(g[0], g[1], g[2]);
      } else {
        const auto f = parse_triple(form, "--form");
        env.inputs = {{"form", form}};
        L = EvenLattice{f[0], f[1], f[2]};
      }
      env.result = lprime_report(L);
      env.citations = {"lattices with no vectors of norm 0 or -2"};
    } else if (*trace_cmd) {
      env.command = "trace";
      const Int u = parse_int(u_text, "--u");
      const int eps = parse_eps(eps_text);
      env.inputs = {{"u", kj::integer(u)}, {"eps", eps}};
      env.result = kj::classification(k3class::classify_trace(u, eps));
      env.citations = {"realizability criterion", "discriminant of a realizing lattice"};
    } else if (*witness_cmd) {
      env.command = "witness";
      const Int alpha = parse_int(alpha_text, "--alpha");
      const int eps = parse_eps(eps_text);
      env.inputs = {{"alpha", kj::integer(alpha)}, {"eps", eps}};
      const WitnessReport w = k3class::witness(eps, alpha);
      env.result = kj::witness(w);
      env.result["salem"] = kj::salem(isometry::salem_data(w.g.m));
      env.citations = {"main theorem: traces alpha^2 - 2 eps", "realizability criterion"};
    } else if (*fixed_cmd) {
      env.command = "fixed-points";
      const Int alpha = parse_int(alpha_text, "--alpha");
      const int eps = parse_eps(eps_text);
      env.inputs = {{"alpha", kj::integer(alpha)}, {"eps", eps}};
      const WitnessReport w = k3class::witness(eps, alpha);
      env.result = {{"fixed_points", kj::integer(k3class::fixed_point_count(eps, alpha))},
                    {"salem", kj::salem(isometry::salem_data(w.g.m))}};
      env.citations = {"topological Lefschetz fixed point formula"};
    } else if (*oguiso_cmd) {
      env.command = "oguiso";
      env.result = kj::oguiso(k3class::oguiso_classification());
      env.citations = {"Cayley-Oguiso automorphism", "uniqueness of the fixed-point-free case"};
    } else if (*verify_cmd) {
      env.command = "verify";
      const Int dmax = parse_int(dmax_text, "--dmax");
      const Int alphamax = parse_int(alphamax_text, "--alphamax");
      const Int trace_max = parse_int(trace_max_text, "--trace-max");
      if (dmax < 5 || !dmax.fits_slong_p()) throw PreconditionError("--dmax must be between 5 and 2^63");
      if (alphamax < 1 || !alphamax.fits_slong_p()) throw PreconditionError("--alphamax must be at least 1");
      env.inputs = {{"sweep", sweep},
                    {"dmax", kj::integer(dmax)},
                    {"alphamax", kj::integer(alphamax)},
                    {"trace_max", kj::integer(trace_max)}};
      std::vector<sweeps::SweepResult> results;
      if (sweep == "soundness" || sweep == "all") results.push_back(sweeps::soundness(alphamax.get_si()));
      if (sweep == "completeness" || sweep == "all") {
        results.push_back(sweeps::completeness(dmax.get_si(), trace_max));
      }
      if (sweep == "biro" || sweep == "all") results.push_back(sweeps::biro(alphamax.get_si()));
      Json arr = Json::array();
      bool all_ok = true;
      for (const auto& r : results) {
        arr.push_back(kj::sweep(r));
        all_ok = all_ok && r.passed();
      }
      env.result = {{"sweeps", arr}, {"passed", all_ok}};
      env.citations = {"main theorem: traces alpha^2 - 2 eps", "class number one for alpha^2 + 4"};
      if (!all_ok) status = kExitVerifyFailed;
    }
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitUsage;
  }

  const Json out{{"command", env.command},
                 {"inputs", env.inputs},
                 {"result", env.result},
                 {"citations", env.citations}};
  std::cout << (pretty ? out.dump(2) : out.dump()) << '\n';
  return status;
}

#pragma once

// JSON renderings of the library's values. Field names are part of the
// external interface and stay stable.
//
//   EvenLattice      {"gram": [[2a, b], [b, 2c]]}
//   ClassInventory   {"D": D, "classes": [{"gram", "primitive", "in_L_prime", ...}]}
//   Isometry         {"matrix": [[..]], "gram": [[..]], "u": u, "v_num": n, "v_den": d}
//
// Integers that fit in a signed 64-bit value are JSON numbers; larger ones
// are emitted as decimal strings.

#include <nlohmann/json.hpp>

#include "k3pell/arith.hpp"
#include "k3pell/isometry.hpp"
#include "k3pell/k3class.hpp"
#include "k3pell/pell.hpp"
#include "k3pell/qform.hpp"
#include "k3pell/sweeps.hpp"

namespace k3pell::json {

using nlohmann::json;

json integer(const Int& n);
/// Inverse of integer(): accepts a JSON number or a decimal string.
Int parse_integer(const json& j);

json matrix(const Mat2& m);
json lattice(const EvenLattice& L);
/// The isometry schema; (u, v) are read back from the matrix when g is in
/// SO+(L), otherwise omitted.
json isometry(const Isometry& g);
json pell_solution(const PellSolution& s);
json cf_expansion(const CFExpansion& cf);
json inventory(const ClassInventory& inv);
json realizability(const RealizabilityReport& r);
json witness(const WitnessReport& w);
json salem(const SalemData& s);
json classification(const TraceClassification& c);
json biro(const BiroSlice& b);
json oguiso(const OguisoReport& r);
json sweep(const sweeps::SweepResult& r);

/// Parses {"gram": [[2a, b], [b, 2c]]}; rejects asymmetric or odd-diagonal input.
EvenLattice parse_lattice(const json& j);

}  // namespace k3pell::json

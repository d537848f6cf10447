#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "luinv/counting.hpp"
#include "luinv/invariants.hpp"
#include "luinv/perm.hpp"
#include "luinv/states.hpp"
#include "luinv/verify.hpp"

namespace luinv {

using Json = nlohmann::json;

// Orbit document: {"k": parties, "m": degree, "perms": [[...], ...]} with
// 1-based one-line notation; k-1 arrays on the pure side, k on the mixed.
Json tuple_to_json(const PermTuple& t, int parties);
Json orbit_to_json(const OrbitKey& key, int parties);

struct ParsedOrbit {
  PermTuple tuple;
  int parties;
  InvariantKind kind;
};

// Accepts any representative; kind is inferred from the array count
// against "k" unless the document carries an explicit "kind".
ParsedOrbit orbit_from_json(const Json& doc);

Json spec_to_json(const InvariantSpec& spec, int parties);

// State document: {"dims": [...], "coeffs": [[re, im], ...]}, row-major
// with the last party fastest; mixed states add "kind": "mixed".
Json state_to_json(const PureState& psi);
Json state_to_json(const MixedState& rho);
bool is_mixed_state_json(const Json& doc);
PureState pure_from_json(const Json& doc);
MixedState mixed_from_json(const Json& doc);

Json count_table_to_json(const CountTable& table);
std::string count_table_to_csv(const CountTable& table);

Json report_to_json(const CheckReport& report);

std::string covering_to_dot(const CoveringGraph& g, const std::string& name);

// Decimal JSON number when it fits a 64-bit signed integer, string beyond.
Json bigint_to_json(const BigInt& v);

}  // namespace luinv

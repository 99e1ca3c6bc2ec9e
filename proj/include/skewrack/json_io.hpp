#pragma once

#include <string>

#include "skewrack/braid.hpp"
#include "skewrack/cocycle.hpp"
#include "skewrack/group.hpp"
#include "skewrack/skew_rack.hpp"
#include "skewrack/weights.hpp"

#include "json.hpp"

namespace skewrack {

using json = nlohmann::ordered_json;

// {"size": n, "op": [[...]], "kappa": [...], "rho": [...]?}
json rack_to_json(const SkewRack& X);
SkewRack rack_from_json(const json& j);

// {"coeff": [m1,...], "table": [[[...],...],...]}; the rack is supplied by
// the caller (the format carries no rack).
json cocycle_to_json(const BirackCocycle& phi);
BirackCocycle cocycle_from_json(const json& j, const SkewRack& rack);

// {"size": n, "mult": [[...]], "labels": [...]?}
json group_to_json(const FiniteGroup& G);
FiniteGroup group_from_json(const json& j);

// {"components": c, "framings": [...], "linking": [[...]]}
json stats_to_json(const DiagramStats& st);

// {"ann": m, "components": c, "coeffs": {"(a1,...,ak)": "p/q", ...}}
json polynomial_to_json(const WeightPolynomial& P);

json report_to_json(const CheckReport& r);

SkewRack load_rack_file(const std::string& path);
BirackCocycle load_cocycle_file(const std::string& path, const SkewRack& rack);

// Canonical text: stable key order, reduced "p/q" rationals.
std::string dump_canonical(const json& j);

} // namespace skewrack

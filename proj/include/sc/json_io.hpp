#pragma once

#include <json.hpp>

#include "sc/superfield.hpp"
#include "sc/verdict.hpp"

namespace sc {

// Series schema: {q_order, z_min, z_max, terms: [{z_exp, monomial, lambda_exp,
// q_coeffs: ["p/q", ...]}]} with monomial in {"1","theta","phi","thetaphi"}.
// Each (z_exp, monomial) slot is split into one entry per lambda power.
nlohmann::json superfield_to_json(const SuperField& f);

nlohmann::json verdict_to_json(const Verdict& v);

}  // namespace sc

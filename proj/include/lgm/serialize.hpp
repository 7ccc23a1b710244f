#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lgm/alignment.hpp"
#include "lgm/continuation.hpp"
#include "lgm/laurent.hpp"
#include "lgm/quiver.hpp"
#include "lgm/solver.hpp"

namespace lgm {

// Laurent polynomials serialize as a list of {exponents, re, im}, one
// element per term.
nlohmann::json to_json(const LaurentPoly& f);
LaurentPoly laurent_from_json(const nlohmann::json& j);

// Critical sets serialize as {points: [{coords: [[re, im], ...],
// residual, min_singular}]}.
nlohmann::json to_json(const CritSet& cs);
CritSet critset_from_json(const nlohmann::json& j);

// Permutations serialize as {divisor, epsilon, mapping: {"0": 2, ...},
// cycles} with cycles in index form, singletons kept.
nlohmann::json to_json(const MonodromyPermutation& perm,
                       const std::vector<std::string>& ray_names = {});

// Quivers serialize with their type fields: {vertices, edges:
// [{source, target, label, name}]} where label is the coefficient list.
nlohmann::json to_json(const LabeledQuiver& q);

nlohmann::json to_json(const AlignmentReport& report);

}  // namespace lgm

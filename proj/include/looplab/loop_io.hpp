#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "looplab/laurent_loop.hpp"

namespace looplab {

/// {dim, n_min, n_max, coeffs: [[re, im], ...]} with modes ascending from n_min and each
/// mode's matrix stored row-major. Doubles are written in shortest round-trip form.
nlohmann::json loop_to_json(const LaurentLoop& g);
LaurentLoop loop_from_json(const nlohmann::json& j);

std::string dump_loop(const LaurentLoop& g);
LaurentLoop parse_loop(const std::string& text);

}  // namespace looplab

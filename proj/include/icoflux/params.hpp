#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "icoflux/energy.hpp"

namespace icoflux {

// Flat key=value parameter file: the nine coefficients a, b, c, d, c1..c5
// (required) plus an optional seed. '#' starts a comment. Decimal values are
// parsed into exact rationals; anything else falls back to a double.
struct ParamsFile {
  EnergyParams params;
  std::optional<uint64_t> seed;
};

ParamValue parse_param_value(const std::string& text);  // throws on garbage

ParamsFile parse_params_text(const std::string& text);  // throws with message
ParamsFile load_params_file(const std::string& path);

}  // namespace icoflux

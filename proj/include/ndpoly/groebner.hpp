#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "ndpoly/fp.hpp"

namespace ndpoly {

// Sparse polynomial in F_p[x,y,t], exponents nonnegative.
using GPoly = std::map<std::array<int, 3>, std::int64_t>;

// Buchberger completion in degrevlex order, early exit on reaching a unit.
// Returns true iff the generated ideal is (1).
bool ideal_is_unit(const Fp& fp, std::vector<GPoly> gens);

}  // namespace ndpoly

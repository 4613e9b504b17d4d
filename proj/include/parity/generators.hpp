#pragma once

#include <optional>
#include <string_view>

#include "parity/core.hpp"
#include "parity/result.hpp"

namespace parity {

enum class Family { simplex, cube, glob };

std::optional<Family> family_from_name(std::string_view name);
std::string_view family_name(Family f);

// Size caps keep the exhaustive relation closures cheap.
inline constexpr unsigned kSimplexCap = 6;
inline constexpr unsigned kCubeCap = 4;
inline constexpr unsigned kGlobCap = 32;

// Elements are the non-empty subsets of {0..n}, written as digit strings;
// dimension is cardinality minus one, faces delete one entry, odd positions
// giving negative faces and even positions positive ones.
Result<Complex> simplex(unsigned n);

// Elements are length-n strings over {-, o, +} with dimension the number of
// o's. The i-th face pair rewrites the i-th o (1-based, left to right):
// negative faces use - at odd i and + at even i, positive faces the
// interchange.
Result<Complex> cube(unsigned n);

// Two elements per dimension 0..n, written m<k> and p<k>; every element of
// dimension k+1 has m<k> as its only negative face and p<k> as its only
// positive face.
Result<Complex> glob(unsigned n);

Result<Complex> generate(Family family, unsigned n);

}  // namespace parity

#pragma once

namespace qsg {

// Absolute tolerance used by unit-norm and membership preconditions when the
// caller does not pass one.
inline constexpr double kDefaultTol = 1e-9;

}  // namespace qsg

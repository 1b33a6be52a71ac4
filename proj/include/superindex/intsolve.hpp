#pragma once

#include <optional>
#include <vector>

#include "superindex/epsint.hpp"

namespace superindex {

using IntMatrix = std::vector<std::vector<Int>>;

// Some integer solution x of A x = b, or nullopt when none exists.  Column
// Hermite reduction with a unimodular transform; the candidate is verified
// against the original system before returning.
std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const std::vector<Int>& b);

}  // namespace superindex

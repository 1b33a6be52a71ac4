#pragma once

#include <utility>
#include <vector>

#include "superindex/group.hpp"

namespace superindex {

// Root data of a single gl(p|q) block in the distinguished Borel (all
// epsilon's before all delta's).  Root entries are (i, j) index pairs,
// 0-based.
struct RootSystem {
    int p = 0;
    int q = 0;
    std::vector<std::pair<int, int>> even_pos_x;  // eps_i - eps_j, i < j
    std::vector<std::pair<int, int>> even_pos_y;  // del_i - del_j, i < j
    std::vector<std::pair<int, int>> odd_pos;     // eps_i - del_j
    std::vector<int> delta_x;                     // (p-1, ..., 1, 0)
    std::vector<int> delta_y;                     // (q-1, ..., 1, 0)

    static RootSystem of(const GroupBlock& b);
};

bool is_dominant(const Weight& w);

// All odd positive roots (i, j), 1-based, with
//   a_ij = lam_i + mu_j + p + 1 - i - j == 0.
// The weight is typical iff the result is empty.  Single gl(p|q) block only.
std::vector<std::pair<int, int>> atypical_roots(const GroupBlock& b, const BlockWeight& w);

inline bool is_typical(const GroupBlock& b, const BlockWeight& w) {
    return atypical_roots(b, w).empty();
}

// Typical in every block.
bool is_typical(const GroupSpec& g, const Weight& w);

}  // namespace superindex

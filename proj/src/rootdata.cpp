#include "superindex/rootdata.hpp"

namespace superindex {

RootSystem RootSystem::of(const GroupBlock& b) {
    RootSystem rs;
    rs.p = b.p;
    rs.q = b.q;
    for (int i = 0; i < b.p; ++i)
        for (int j = i + 1; j < b.p; ++j) rs.even_pos_x.emplace_back(i, j);
    for (int i = 0; i < b.q; ++i)
        for (int j = i + 1; j < b.q; ++j) rs.even_pos_y.emplace_back(i, j);
    for (int i = 0; i < b.p; ++i)
        for (int j = 0; j < b.q; ++j) rs.odd_pos.emplace_back(i, j);
    for (int i = 0; i < b.p; ++i) rs.delta_x.push_back(b.p - 1 - i);
    for (int i = 0; i < b.q; ++i) rs.delta_y.push_back(b.q - 1 - i);
    return rs;
}

bool is_dominant(const Weight& w) {
    return w.dominant();
}

std::vector<std::pair<int, int>> atypical_roots(const GroupBlock& b, const BlockWeight& w) {
    std::vector<std::pair<int, int>> roots;
    for (int i = 1; i <= b.p; ++i) {
        for (int j = 1; j <= b.q; ++j) {
            long long a = static_cast<long long>(w.lam[i - 1]) + w.mu[j - 1] + b.p + 1 - i - j;
            if (a == 0) roots.emplace_back(i, j);
        }
    }
    return roots;
}

bool is_typical(const GroupSpec& g, const Weight& w) {
    for (size_t k = 0; k < g.num_blocks(); ++k)
        if (!atypical_roots(g.block(k), w.block(k)).empty()) return false;
    return true;
}

}  // namespace superindex

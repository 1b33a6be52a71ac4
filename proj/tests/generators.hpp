#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "superindex/epsint.hpp"
#include "superindex/errors.hpp"
#include "superindex/group.hpp"
#include "superindex/poly.hpp"

namespace superindex::testgen {

// Runs fn and returns the code of the superindex::Error it throws ("" when
// nothing is thrown).
template <typename Fn>
inline std::string thrown_code(Fn&& fn) {
    try {
        fn();
    } catch (const superindex::Error& e) {
        return e.code();
    }
    return "";
}

inline std::mt19937& rng() {
    static std::mt19937 gen(20240817);
    return gen;
}

inline int rand_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng());
}

inline EpsInt rand_coeff(int bound = 5) {
    EpsInt c(Int(rand_int(-bound, bound)), Int(rand_int(-bound, bound)));
    if (c.is_zero()) c = EpsInt(1);
    return c;
}

inline Monomial rand_monomial(const GroupSpec& g, int exp_bound = 3) {
    Monomial m(g.num_vars());
    for (auto& e : m) e = rand_int(-exp_bound, exp_bound);
    return m;
}

inline LaurentPoly rand_poly(const GroupSpec& g, int max_terms = 8, int exp_bound = 3) {
    LaurentPoly p(g);
    int terms = rand_int(0, max_terms);
    for (int i = 0; i < terms; ++i) p.add_term(rand_monomial(g, exp_bound), rand_coeff());
    return p;
}

inline LaurentPoly rand_nonzero_poly(const GroupSpec& g, int max_terms = 8, int exp_bound = 3) {
    while (true) {
        LaurentPoly p = rand_poly(g, max_terms, exp_bound);
        if (!p.is_zero()) return p;
    }
}

// Nonzero in both eps -> +-1 components (a non-zero-divisor, so exact
// division round trips are well defined).
inline LaurentPoly rand_regular_poly(const GroupSpec& g, int max_terms = 4, int exp_bound = 2) {
    while (true) {
        LaurentPoly p = rand_poly(g, max_terms, exp_bound);
        bool plus = false, minus = false;
        EpsInt acc_p, acc_m;
        for (const auto& [m, c] : p.terms()) {
            if (c.at_plus() != 0) plus = true;
            if (c.at_minus() != 0) minus = true;
        }
        // leading coefficients of the components must be nonzero too, which
        // term-level nonzeroness already guarantees for a random support
        if (plus && minus) return p;
    }
}

// Random permutation preserving each block's x- and y-part.
inline std::vector<int> rand_block_permutation(const GroupSpec& g) {
    std::vector<int> perm(g.num_vars());
    int off = 0;
    for (const auto& b : g.blocks()) {
        std::vector<int> xs(b.p), ys(b.q);
        for (int i = 0; i < b.p; ++i) xs[i] = off + i;
        for (int j = 0; j < b.q; ++j) ys[j] = off + b.p + j;
        auto xi = xs, yi = ys;
        std::shuffle(xi.begin(), xi.end(), rng());
        std::shuffle(yi.begin(), yi.end(), rng());
        for (int i = 0; i < b.p; ++i) perm[xs[i]] = xi[i];
        for (int j = 0; j < b.q; ++j) perm[ys[j]] = yi[j];
        off += b.p + b.q;
    }
    return perm;
}

inline std::vector<int> rand_dominant_vector(int len, int bound) {
    std::vector<int> v(len);
    for (auto& x : v) x = rand_int(-bound, bound);
    std::sort(v.rbegin(), v.rend());
    return v;
}

inline Weight rand_dominant_weight(const GroupSpec& g, int bound = 3) {
    std::vector<BlockWeight> blocks;
    for (const auto& b : g.blocks())
        blocks.push_back({rand_dominant_vector(b.p, bound), rand_dominant_vector(b.q, bound)});
    return Weight(std::move(blocks));
}

}  // namespace superindex::testgen

#include "superindex/characters.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "superindex/errors.hpp"
#include "superindex/rootdata.hpp"

namespace superindex {
namespace {

bool non_increasing(const std::vector<int>& v) {
    return std::is_sorted(v.rbegin(), v.rend());
}

template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        fn(perm, inversions % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

// sum_{sigma in S_n} sgn(sigma) v^{sigma(exps)} over the given variable
// positions of g.
LaurentPoly alternant(const GroupSpec& g, const std::vector<int>& positions,
                      const std::vector<int>& exps) {
    const int n = static_cast<int>(positions.size());
    LaurentPoly out(g);
    Monomial m(g.num_vars(), 0);
    for_each_permutation(n, [&](const std::vector<int>& perm, int sign) {
        std::fill(m.begin(), m.end(), 0);
        for (int i = 0; i < n; ++i) m[positions[i]] = exps[perm[i]];
        out.add_term(m, EpsInt(sign));
    });
    return out;
}

std::vector<int> delta_shift(int n) {
    std::vector<int> d(n);
    for (int i = 0; i < n; ++i) d[i] = n - 1 - i;
    return d;
}

// Rational Schur character in the given variable positions.
LaurentPoly schur_in_vars(const GroupSpec& g, const std::vector<int>& positions,
                          const std::vector<int>& w) {
    const int n = static_cast<int>(positions.size());
    if (static_cast<int>(w.size()) != n)
        fail("GroupMismatch", "weight length does not match variable count");
    if (!non_increasing(w)) fail("NotDominant", "Schur weight must be non-increasing");
    if (n == 0) return LaurentPoly::one(g);

    const int m = w.back();
    std::vector<int> shifted = delta_shift(n);
    for (int i = 0; i < n; ++i) shifted[i] += w[i] - m;

    LaurentPoly num = alternant(g, positions, shifted);
    LaurentPoly den = alternant(g, positions, delta_shift(n));
    LaurentPoly s = exact_div(num, den);
    if (m != 0) {
        Monomial twist(g.num_vars(), 0);
        for (int pos : positions) twist[pos] = m;
        s = s * LaurentPoly::monomial(g, twist);
    }
    return s;
}

std::vector<int> block_x_positions(const GroupSpec& g, size_t k) {
    std::vector<int> pos(g.block(k).p);
    std::iota(pos.begin(), pos.end(), g.block_offset(k));
    return pos;
}

std::vector<int> block_y_positions(const GroupSpec& g, size_t k) {
    std::vector<int> pos(g.block(k).q);
    std::iota(pos.begin(), pos.end(), g.block_offset(k) + g.block(k).p);
    return pos;
}

void require_single(const GroupSpec& g, const char* op) {
    if (!g.single()) fail("GroupMismatch", std::string(op) + " expects a single gl(p|q) block");
}

void require_dominant(const Weight& w, const GroupSpec& g) {
    if (!w.matches(g)) fail("GroupMismatch", "weight " + w.str() + " does not fit " + g.str());
    if (!w.dominant()) fail("NotDominant", "weight " + w.str() + " is not dominant");
}

// Kac character of block k of g placed in g's variables.
LaurentPoly kac_char_block(const GroupSpec& g, size_t k, const BlockWeight& w) {
    LaurentPoly ch = schur_in_vars(g, block_x_positions(g, k), w.lam) *
                     schur_in_vars(g, block_y_positions(g, k), w.mu);
    auto xs = block_x_positions(g, k);
    auto ys = block_y_positions(g, k);
    for (int xi : xs) {
        for (int yj : ys) {
            Monomial m(g.num_vars(), 0);
            m[xi] = -1;
            m[yj] = 1;
            LaurentPoly factor = LaurentPoly::one(g);
            factor.add_term(m, EpsInt::eps());
            ch = ch * factor;
        }
    }
    return ch;
}

// Bernstein-Leites character of a singly atypical block (min(p,q) == 1).
LaurentPoly bl_char_block(const GroupSpec& g, size_t k, const BlockWeight& w,
                          std::pair<int, int> root) {
    const GroupBlock& b = g.block(k);
    auto xs = block_x_positions(g, k);
    auto ys = block_y_positions(g, k);

    // Variables permuted by the Weyl sum and their opposite side.
    const bool permute_y = (b.p == 1);
    const std::vector<int>& moving = permute_y ? ys : xs;
    const std::vector<int>& fixed = permute_y ? xs : ys;
    const std::vector<int>& moving_weight = permute_y ? w.mu : w.lam;
    const std::vector<int>& fixed_weight = permute_y ? w.lam : w.mu;
    const int n = static_cast<int>(moving.size());
    const int excluded = permute_y ? root.second - 1 : root.first - 1;

    // base = (fixed var)^(its weight) * moving^(weight + delta)
    //        * prod_{k != excluded} (1 + eps * y/x)
    Monomial base_m(g.num_vars(), 0);
    base_m[fixed[0]] = fixed_weight[0];
    auto delta = delta_shift(n);
    for (int i = 0; i < n; ++i) base_m[moving[i]] = moving_weight[i] + delta[i];
    LaurentPoly base = LaurentPoly::monomial(g, base_m);
    for (int i = 0; i < n; ++i) {
        if (i == excluded) continue;
        Monomial m(g.num_vars(), 0);
        if (permute_y) {
            m[xs[0]] = -1;
            m[ys[i]] = 1;
        } else {
            m[xs[i]] = -1;
            m[ys[0]] = 1;
        }
        LaurentPoly factor = LaurentPoly::one(g);
        factor.add_term(m, EpsInt::eps());
        base = base * factor;
    }

    LaurentPoly num(g);
    std::vector<int> var_perm(g.num_vars());
    for_each_permutation(n, [&](const std::vector<int>& perm, int sign) {
        std::iota(var_perm.begin(), var_perm.end(), 0);
        for (int i = 0; i < n; ++i) var_perm[moving[i]] = moving[perm[i]];
        LaurentPoly image = base.permute_vars(var_perm);
        num += sign > 0 ? image : -image;
    });

    LaurentPoly den = alternant(g, moving, delta_shift(n));
    LaurentPoly ch = exact_div(num, den);
    for (const auto& [m, c] : ch.terms()) {
        if (c.even < 0 || c.odd < 0)
            fail("NegativeCharacter",
                 "Bernstein-Leites output has a negative coefficient component");
    }
    return ch;
}

LaurentPoly irr_char_block(const GroupSpec& g, size_t k, const BlockWeight& w) {
    const GroupBlock& b = g.block(k);
    if (b.q == 0) return schur_in_vars(g, block_x_positions(g, k), w.lam);
    if (b.p == 0) return schur_in_vars(g, block_y_positions(g, k), w.mu);
    CharKind kind = classify(b, w);
    switch (kind.tag) {
        case CharKindTag::Typical:
            return kac_char_block(g, k, w);
        case CharKindTag::AtypicalBL:
            return bl_char_block(g, k, w, kind.root);
        case CharKindTag::UnsupportedAtypical:
        default:
            fail("UnsupportedAtypical",
                 "atypical weight " + Weight({w}).str() + " of gl(" + std::to_string(b.p) + "|" +
                     std::to_string(b.q) + ") with min(p,q) >= 2 is not supported");
    }
}

// SSYT-based Schur character (independent oracle path), with the rational
// twist for negative dominant weights.
void fill_tableau(const std::vector<int>& shape, int n, std::vector<std::vector<int>>& rows,
                  size_t r, size_t c, std::vector<int>& content,
                  const std::function<void(const std::vector<int>&)>& emit) {
    if (r == shape.size()) {
        emit(content);
        return;
    }
    size_t nr = r, nc = c + 1;
    if (static_cast<int>(nc) >= shape[r]) {
        nr = r + 1;
        nc = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[r][c - 1]);        // weakly increasing rows
    if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);    // strictly increasing columns
    for (int v = lo; v <= n; ++v) {
        rows[r][c] = v;
        ++content[v - 1];
        fill_tableau(shape, n, rows, nr, nc, content, emit);
        --content[v - 1];
    }
}

LaurentPoly ssyt_in_vars(const GroupSpec& g, const std::vector<int>& positions,
                         const std::vector<int>& w) {
    const int n = static_cast<int>(positions.size());
    if (!non_increasing(w)) fail("NotDominant", "weight must be non-increasing");
    if (n == 0) return LaurentPoly::one(g);

    const int m = w.back();
    std::vector<int> shape;
    for (int wi : w)
        if (wi - m > 0) shape.push_back(wi - m);

    LaurentPoly out(g);
    Monomial mono(g.num_vars(), 0);
    auto emit = [&](const std::vector<int>& content) {
        std::fill(mono.begin(), mono.end(), 0);
        for (int i = 0; i < n; ++i) mono[positions[i]] = content[i] + m;
        out.add_term(mono, EpsInt(1));
    };
    if (shape.empty()) {
        std::vector<int> content(n, 0);
        emit(content);
    } else {
        std::vector<std::vector<int>> rows;
        for (int len : shape) rows.emplace_back(len, 0);
        std::vector<int> content(n, 0);
        fill_tableau(shape, n, rows, 0, 0, content, emit);
    }
    return out;
}

struct IrrCache {
    std::mutex mu;
    std::unordered_map<std::string, LaurentPoly> map;
};

IrrCache& irr_cache() {
    static IrrCache cache;
    return cache;
}

}  // namespace

CharKind classify(const GroupBlock& b, const BlockWeight& w) {
    auto roots = atypical_roots(b, w);
    if (roots.empty()) return {CharKindTag::Typical};
    if (std::min(b.p, b.q) <= 1) {
        if (roots.size() != 1)
            fail("NotSinglyAtypical", "expected exactly one atypical root for gl(1|n)/gl(n|1)");
        return {CharKindTag::AtypicalBL, roots.front()};
    }
    return {CharKindTag::UnsupportedAtypical};
}

LaurentPoly schur_char(int n, const std::vector<int>& w, bool y_block) {
    GroupSpec g = y_block ? GroupSpec::gl(0, n) : GroupSpec::gl(n, 0);
    std::vector<int> positions(n);
    std::iota(positions.begin(), positions.end(), 0);
    return schur_in_vars(g, positions, w);
}

LaurentPoly kac_char(const GroupSpec& g, const Weight& w) {
    require_single(g, "kac_char");
    require_dominant(w, g);
    return kac_char_block(g, 0, w.block(0));
}

LaurentPoly bl_char(const GroupSpec& g, const Weight& w) {
    require_single(g, "bl_char");
    require_dominant(w, g);
    const GroupBlock& b = g.block(0);
    if (std::min(b.p, b.q) != 1)
        fail("NotSinglyAtypical", "bl_char expects gl(1|n) or gl(n|1)");
    auto roots = atypical_roots(b, w.block(0));
    if (roots.size() != 1)
        fail("NotSinglyAtypical",
             "weight " + w.str() + " has " + std::to_string(roots.size()) + " atypical roots");
    return bl_char_block(g, 0, w.block(0), roots.front());
}

LaurentPoly irr_char(const GroupSpec& g, const Weight& w) {
    require_dominant(w, g);

    std::string key = g.str() + "/" + w.str();
    {
        auto& cache = irr_cache();
        std::lock_guard<std::mutex> lock(cache.mu);
        auto it = cache.map.find(key);
        if (it != cache.map.end()) return it->second;
    }

    LaurentPoly ch = LaurentPoly::one(g);
    for (size_t k = 0; k < g.num_blocks(); ++k) ch = ch * irr_char_block(g, k, w.block(k));

    auto& cache = irr_cache();
    std::lock_guard<std::mutex> lock(cache.mu);
    return cache.map.emplace(key, std::move(ch)).first->second;
}

std::vector<std::pair<Weight, EpsInt>> decompose(const LaurentPoly& c) {
    const GroupSpec& g = c.group();
    std::vector<std::pair<Weight, EpsInt>> out;
    LaurentPoly rest = c;

    auto max_abs_exp = [](const LaurentPoly& p) {
        int m = 0;
        for (const auto& [mono, coeff] : p.terms())
            for (int e : mono) m = std::max(m, std::abs(e));
        return m;
    };
    int guard = max_abs_exp(rest);

    while (!rest.is_zero()) {
        const auto [mono, coeff] = *rest.terms().begin();
        Weight w = Weight::from_exponents(g, mono);
        if (!w.dominant())
            fail("NonDominantLeadingTerm",
                 "leading weight " + w.str() + " is not dominant; input is not a virtual character");
        out.emplace_back(w, coeff);
        rest -= irr_char(g, w).scaled(coeff);
        int now = max_abs_exp(rest);
        if (now > guard)
            fail("NonTermination", "remainder exponent bound grew during peeling");
        guard = now;
    }
    return out;
}

LaurentPoly ssyt_oracle(int n, const std::vector<int>& partition, bool y_block) {
    for (int part : partition)
        if (part < 0) fail("NotDominant", "partition entries must be nonnegative");
    std::vector<int> w = partition;
    for (size_t i = n; i < w.size(); ++i) {
        // more than n positive rows: no tableaux with entries in 1..n
        if (w[i] > 0) return LaurentPoly(y_block ? GroupSpec::gl(0, n) : GroupSpec::gl(n, 0));
    }
    w.resize(n, 0);
    if (!non_increasing(w)) fail("NotDominant", "partition must be non-increasing");
    GroupSpec g = y_block ? GroupSpec::gl(0, n) : GroupSpec::gl(n, 0);
    std::vector<int> positions(n);
    std::iota(positions.begin(), positions.end(), 0);
    return ssyt_in_vars(g, positions, w);
}

LaurentPoly kac_weights_oracle(const GroupSpec& g, const Weight& w) {
    require_single(g, "kac_weights_oracle");
    require_dominant(w, g);
    const GroupBlock& b = g.block(0);

    LaurentPoly even_part = ssyt_in_vars(g, block_x_positions(g, 0), w.block(0).lam) *
                            ssyt_in_vars(g, block_y_positions(g, 0), w.block(0).mu);

    // Explicit subset enumeration over the odd positive roots.
    auto rs = RootSystem::of(b);
    const size_t nroots = rs.odd_pos.size();
    LaurentPoly odd_part(g);
    for (size_t s = 0; s < (size_t{1} << nroots); ++s) {
        Monomial m(g.num_vars(), 0);
        int count = 0;
        for (size_t r = 0; r < nroots; ++r) {
            if (!(s & (size_t{1} << r))) continue;
            ++count;
            m[rs.odd_pos[r].first] -= 1;          // subtract eps_i
            m[b.p + rs.odd_pos[r].second] += 1;   // add del_j
        }
        odd_part.add_term(m, count % 2 == 0 ? EpsInt(1) : EpsInt::eps());
    }
    return even_part * odd_part;
}

}  // namespace superindex

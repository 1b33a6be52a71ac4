#include "superindex/index.hpp"

#include <algorithm>

#include "superindex/characters.hpp"
#include "superindex/errors.hpp"
#include "superindex/intsolve.hpp"
#include "superindex/rootdata.hpp"

namespace superindex {

Symbol::Symbol(LeviEmbedding e, VirtualModule c) : embedding(std::move(e)), cls(std::move(c)) {
    if (cls.group() != embedding.levi())
        fail("GroupMismatch", "symbol class must live over " + embedding.levi().str());
}

FormalSeries refined_index(const Symbol& s, const TruncationBox& box) {
    return induce(s.cls, s.embedding, box);
}

namespace {

std::vector<IndexClass> support_of(const FormalSeries& chi) {
    std::vector<IndexClass> out;
    for (const auto& [w, c] : chi.coeffs) {
        bool atypical = !is_typical(chi.group, w);
        out.push_back(IndexClass{w, c, atypical});
    }
    return out;
}

EpsInt numeric_of(const FormalSeries& chi) {
    EpsInt total;
    for (const auto& [w, c] : chi.coeffs) total += c * irr_char(chi.group, w).specialize();
    return total;
}

}  // namespace

IndexReport numeric_index_report(const Symbol& s, const TruncationBox& box) {
    IndexReport rep;
    rep.chi = refined_index(s, box);
    TruncationBox next = box.enlarged(2);
    FormalSeries chi_next = refined_index(s, next);

    rep.numeric = numeric_of(rep.chi);
    rep.super_index = rep.numeric.at_minus();
    rep.super_index_next = numeric_of(chi_next).at_minus();
    rep.box_bound = box.bound;
    rep.box_bound_next = next.bound;
    rep.stable = rep.super_index == rep.super_index_next;
    rep.support = support_of(rep.chi);
    return rep;
}

IndexReport numeric_index(const Symbol& s, const TruncationBox& box) {
    IndexReport rep = numeric_index_report(s, box);
    if (!rep.stable)
        fail("UnstableTruncation", "superdimension " + rep.super_index.str() + " at box " +
                                       std::to_string(rep.box_bound) + " vs " +
                                       rep.super_index_next.str() + " at box " +
                                       std::to_string(rep.box_bound_next));
    return rep;
}

Symbol euler_symbol(const LeviEmbedding& e) {
    const GroupSpec& parent = e.parent();
    const GroupBlock& pb = parent.block(0);
    if (pb.q != 0)
        fail("OddCosetUnsupported", "Euler symbol needs a purely even coset (q = 0)");
    for (const auto& b : e.levi().blocks())
        if (b.q != 0) fail("OddCosetUnsupported", "Euler symbol needs purely even Levi blocks");

    // Block index of each parent x-variable inside the Levi.
    std::vector<size_t> block_of(pb.p);
    {
        size_t k = 0;
        int off = 0;
        for (int i = 0; i < pb.p; ++i) {
            while (i >= off + e.levi().block(k).p) {
                off += e.levi().block(k).p;
                ++k;
            }
            block_of[i] = k;
        }
    }

    LaurentPoly ch = LaurentPoly::one(parent);
    for (int i = 0; i < pb.p; ++i) {
        for (int j = i + 1; j < pb.p; ++j) {
            if (block_of[i] == block_of[j]) continue;
            LaurentPoly factor = LaurentPoly::one(parent);
            Monomial m(parent.num_vars(), 0);
            m[i] = -1;
            m[j] = 1;
            factor.add_term(m, EpsInt(-1));  // 1 - x_j/x_i
            ch = ch * factor;
        }
    }

    // Reinterpret in Levi variables (identity layout for q = 0) and decompose.
    VirtualModule cls(e.levi());
    LaurentPoly levi_poly(e.levi());
    for (const auto& [m, c] : ch.terms()) {
        Monomial ml(m.size());
        for (size_t i = 0; i < m.size(); ++i) ml[i] = m[e.levi_to_parent()[i]];
        levi_poly.add_term(ml, c);
    }
    for (const auto& [w, c] : decompose(levi_poly)) cls.add(w, c);
    return Symbol(e, std::move(cls));
}

bool bott_verify(const Weight& lambda, const LeviEmbedding& e, const TruncationBox& box) {
    Symbol euler = euler_symbol(e);
    VirtualModule restricted = restrict_to(VirtualModule::basis(e.parent(), lambda), e);
    Symbol s(e, tensor(restricted, euler.cls));
    FormalSeries chi = refined_index(s, box);
    VirtualModule expected = VirtualModule::basis(e.parent(), lambda);
    return chi.as_virtual() == expected;
}

Symbol find_symbol_for_module(const VirtualModule& m, const LeviEmbedding& e,
                              const TruncationBox& box_h, const TruncationBox& box_g) {
    if (m.group() != e.parent())
        fail("GroupMismatch", "target module must live over " + e.parent().str());

    std::vector<Weight> h_weights = enumerate_dominant(e.levi(), box_h.bound);
    std::vector<Weight> g_weights = enumerate_dominant(e.parent(), box_g.bound);

    std::map<Weight, size_t, WeightOrder> g_row;
    for (size_t i = 0; i < g_weights.size(); ++i) g_row.emplace(g_weights[i], i);
    for (const auto& [w, c] : m.coeffs())
        if (!g_row.count(w))
            fail("NoSolutionInBox", "target class " + w.str() + " lies outside box_g");

    // Two unknowns per H-weight (plain and eps-multiplied class), two rows
    // per G-weight (even and odd coefficient components).
    const size_t rows = 2 * g_weights.size();
    const size_t cols = 2 * h_weights.size();
    IntMatrix a(rows, std::vector<Int>(cols, 0));
    for (size_t j = 0; j < h_weights.size(); ++j) {
        FormalSeries fs = induce(VirtualModule::basis(e.levi(), h_weights[j]), e, box_g);
        for (const auto& [w, c] : fs.coeffs) {
            size_t r = 2 * g_row.at(w);
            a[r][2 * j] = c.even;
            a[r + 1][2 * j] = c.odd;
            // eps * class swaps the components
            a[r][2 * j + 1] = c.odd;
            a[r + 1][2 * j + 1] = c.even;
        }
    }
    std::vector<Int> b(rows, 0);
    for (const auto& [w, c] : m.coeffs()) {
        size_t r = 2 * g_row.at(w);
        b[r] = c.even;
        b[r + 1] = c.odd;
    }

    auto x = solve_integer(a, b);
    if (!x) fail("NoSolutionInBox", "no integral symbol in box_h=" + std::to_string(box_h.bound) +
                                        ", box_g=" + std::to_string(box_g.bound));

    VirtualModule cls(e.levi());
    for (size_t j = 0; j < h_weights.size(); ++j) {
        EpsInt c((*x)[2 * j], (*x)[2 * j + 1]);
        if (!c.is_zero()) cls.add(h_weights[j], c);
    }
    return Symbol(e, std::move(cls));
}

AtypicalReport atypical_report(const LeviEmbedding& e, const TruncationBox& box_h,
                               const TruncationBox& box_g) {
    const GroupBlock& pb = e.parent().block(0);
    if (std::min(pb.p, pb.q) > 1)
        fail("UnsupportedAtypical", "atypical report needs min(p,q) <= 1");

    AtypicalReport report{e, box_h, box_g, {}};
    for (const auto& w : enumerate_dominant(e.levi(), box_h.bound)) {
        Symbol s(e, VirtualModule::basis(e.levi(), w));
        IndexReport rep = numeric_index_report(s, box_g);
        AtypicalReportRow row;
        row.symbol_weight = w;
        row.super_index = rep.super_index;
        row.stable = rep.stable;
        row.support = rep.support;
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace superindex

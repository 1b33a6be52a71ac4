#pragma once

#include <string>
#include <vector>

#include "superindex/repring.hpp"

namespace superindex {

// Homogeneous symbol s(D) = [K] - [L] as a virtual H-module.
struct Symbol {
    LeviEmbedding embedding;
    VirtualModule cls;

    Symbol(LeviEmbedding e, VirtualModule c);
};

struct IndexClass {
    Weight weight;
    EpsInt coeff;
    bool atypical;
};

struct IndexReport {
    FormalSeries chi;                  // refined index at the smaller box
    EpsInt numeric;                    // sum coeff * dims([L(w)]) over chi
    Int super_index;                   // numeric at eps -> -1
    Int super_index_next;              // same, recomputed at box B+2
    int box_bound = 0;                 // B
    int box_bound_next = 0;            // B+2
    bool stable = false;
    std::vector<IndexClass> support;   // chi's support with typicality flags
};

// chi(D) = i_*(s(D)), truncated to the box.
FormalSeries refined_index(const Symbol& s, const TruncationBox& box);

// Superdimension of the refined index with a double-truncation stability
// check at B and B+2.  Never throws on instability; stable flag reports it.
IndexReport numeric_index_report(const Symbol& s, const TruncationBox& box);

// As above but raises UnstableTruncation (carrying both values in the
// message) when the two boxes disagree.
IndexReport numeric_index(const Symbol& s, const TruncationBox& box);

// Classical Euler symbol of the purely even coset G/H: the alternating sum
// of exterior powers of the off-diagonal directions, with character
// prod_{cross-block i<j} (1 - x_j/x_i).  OddCosetUnsupported when q > 0.
Symbol euler_symbol(const LeviEmbedding& e);

// Checks refined_index(restrict([L(lam)]) (x) euler_symbol) == [L(lam)]
// exactly within the box.  Classical (q = 0) case only.
bool bott_verify(const Weight& lambda, const LeviEmbedding& e, const TruncationBox& box);

// Integer-linear search for a symbol with refined_index == m in the given
// boxes.  Columns are refined indices of basis H-classes (plain and
// eps-shifted) over weights in box_h; throws NoSolutionInBox on failure.
Symbol find_symbol_for_module(const VirtualModule& m, const LeviEmbedding& e,
                              const TruncationBox& box_h, const TruncationBox& box_g);

struct AtypicalReportRow {
    Weight symbol_weight;       // basis H-class
    Int super_index;
    bool stable;
    std::vector<IndexClass> support;
};

struct AtypicalReport {
    LeviEmbedding embedding;
    TruncationBox box_h;
    TruncationBox box_g;
    std::vector<AtypicalReportRow> rows;
};

// For every basis H-class in box_h: the numeric index and the atypical
// G-classes carrying it.  Demonstrates that nonzero indices arise exactly
// from atypical classes.
AtypicalReport atypical_report(const LeviEmbedding& e, const TruncationBox& box_h,
                               const TruncationBox& box_g);

}  // namespace superindex

#pragma once

#include <utility>
#include <vector>

#include "superindex/group.hpp"
#include "superindex/poly.hpp"

namespace superindex {

enum class CharKindTag { Typical, AtypicalBL, UnsupportedAtypical };

struct CharKind {
    CharKindTag tag;
    std::pair<int, int> root{0, 0};  // the single atypical root, 1-based, AtypicalBL only
};

// Classifies a dominant weight of one gl(p|q) block.  AtypicalBL requires
// min(p,q) <= 1; atypical weights with min(p,q) >= 2 are unsupported.
CharKind classify(const GroupBlock& b, const BlockWeight& w);

// Rational Schur character of gl(n) in n fresh variables: with m = w_n,
// (v1..vn)^m * s_{w-m}(v), computed as a bialternant quotient.  The ambient
// group is gl(n|0) for the x block and gl(0|n) for the y block.
LaurentPoly schur_char(int n, const std::vector<int>& w, bool y_block = false);

// Kac-module character of a single gl(p|q) block:
//   ch L0(lam) * ch L0(mu) * prod_{i,j} (1 + eps * y_j / x_i).
LaurentPoly kac_char(const GroupSpec& g, const Weight& w);

// Bernstein-Leites character for a singly atypical dominant weight of
// gl(1|n) or gl(n|1): the alternant sum with the atypical odd-root factor
// removed (the excluded factor index follows the Weyl permutation), divided
// exactly by the Vandermonde alternant.
LaurentPoly bl_char(const GroupSpec& g, const Weight& w);

// Irreducible character; products of blocks multiply.  Typical blocks use
// kac_char, singly atypical gl(1|n)/gl(n|1) blocks use bl_char; atypical
// blocks with min(p,q) >= 2 raise UnsupportedAtypical.  Memoized.
LaurentPoly irr_char(const GroupSpec& g, const Weight& w);

// Greedy peeling of a virtual character into irreducible classes: repeatedly
// take the graded-lex maximal monomial (must be a dominant weight), emit its
// coefficient, subtract that multiple of irr_char.
std::vector<std::pair<Weight, EpsInt>> decompose(const LaurentPoly& c);

// Schur polynomial by direct enumeration of semistandard Young tableaux with
// entries in 1..n; independent oracle for schur_char.
LaurentPoly ssyt_oracle(int n, const std::vector<int>& partition, bool y_block = false);

// Kac character by enumeration of odd-root subsets and tableau-based even
// weight multiplicities; independent oracle for kac_char.
LaurentPoly kac_weights_oracle(const GroupSpec& g, const Weight& w);

}  // namespace superindex

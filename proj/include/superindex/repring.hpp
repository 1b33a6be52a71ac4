#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superindex/epsint.hpp"
#include "superindex/group.hpp"
#include "superindex/poly.hpp"

namespace superindex {

// Element of R(G): finitely supported Z[eps]-combination of irreducible
// classes [L(w)].  Zero coefficients are never stored.
class VirtualModule {
public:
    using CoeffMap = std::map<Weight, EpsInt, WeightOrder>;

    VirtualModule() = default;
    explicit VirtualModule(GroupSpec g) : group_(std::move(g)) {}

    static VirtualModule zero(const GroupSpec& g) { return VirtualModule(g); }
    static VirtualModule basis(const GroupSpec& g, const Weight& w, EpsInt c = EpsInt(1));

    // Grammar: "coeff*[l1,..|m1,..] + ...", coeff in a+be notation ("2",
    // "e", "1+e", "(1-2e)"); a bare "[w]" has coefficient 1.
    static VirtualModule parse(std::string_view text, const GroupSpec& g);

    const GroupSpec& group() const { return group_; }
    const CoeffMap& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    EpsInt coeff(const Weight& w) const;
    void add(const Weight& w, const EpsInt& c);

    VirtualModule& operator+=(const VirtualModule& r);
    VirtualModule& operator-=(const VirtualModule& r);
    friend VirtualModule operator+(VirtualModule a, const VirtualModule& b) { return a += b; }
    friend VirtualModule operator-(VirtualModule a, const VirtualModule& b) { return a -= b; }
    VirtualModule scaled(const EpsInt& c) const;

    std::string str() const;
    bool operator==(const VirtualModule&) const = default;

private:
    GroupSpec group_;
    CoeffMap coeffs_;
};

// Block-diagonal Levi subgroup H = gl(p_1|q_1) x ... x gl(p_r|q_r) of a
// single-block parent gl(p|q); block k's variables are the k-th contiguous
// slices of the parent's x- and y-variables.
class LeviEmbedding {
public:
    LeviEmbedding(GroupSpec parent, GroupSpec levi);

    static LeviEmbedding parse(const GroupSpec& parent, std::string_view levi_text);

    const GroupSpec& parent() const { return parent_; }
    const GroupSpec& levi() const { return levi_; }

    // levi variable position -> parent variable position
    const std::vector<int>& levi_to_parent() const { return levi_to_parent_; }

private:
    GroupSpec parent_;
    GroupSpec levi_;
    std::vector<int> levi_to_parent_;
};

struct TruncationBox {
    int bound = 1;                    // max |weight entry|
    std::optional<int> degree;        // optional total-degree filter

    TruncationBox() = default;
    explicit TruncationBox(int b) : bound(b) {}
    TruncationBox enlarged(int by) const;
};

// Truncated element of the completion R^(G): support restricted to the box.
struct FormalSeries {
    GroupSpec group;
    TruncationBox box;
    VirtualModule::CoeffMap coeffs;

    VirtualModule as_virtual() const;
    std::string str() const;  // virtual-module form plus " @box=B"
};

LaurentPoly char_of(const VirtualModule& v);
VirtualModule tensor(const VirtualModule& v, const VirtualModule& w);
VirtualModule parity_shift(const VirtualModule& v);
EpsInt dims(const VirtualModule& v);
Int super_dim(const VirtualModule& v);

// i^*: reinterpret the character in the Levi's variables and decompose.
VirtualModule restrict_to(const VirtualModule& v, const LeviEmbedding& e);

// <.,.>: eps-bilinear extension of <[L(w)], [L(w')]> = delta_{w,w'}.
EpsInt pair(const VirtualModule& a, const VirtualModule& b);

// Formal inducing i_*: coefficient of [L(lam)] is <i^*[L(lam)], a>_H, for
// every dominant lam in the box.  Restriction preserves the total weight
// degree, so only lam whose degree matches a graded component of a are
// enumerated.
FormalSeries induce(const VirtualModule& a, const LeviEmbedding& e, const TruncationBox& box);

// All dominant weights of g with every entry in [-bound, bound], sorted
// graded-lex descending.
std::vector<Weight> enumerate_dominant(const GroupSpec& g, int bound);

}  // namespace superindex

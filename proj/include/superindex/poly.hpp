#pragma once

#include <map>
#include <string>
#include <vector>

#include "superindex/epsint.hpp"
#include "superindex/group.hpp"

namespace superindex {

// Exponent vector in the group's variable layout; entries may be negative.
using Monomial = std::vector<int>;

int total_degree(const Monomial& m);

// Graded-lexicographic order, x1 > ... > xP > y1 > ... > yQ, descending.
// map<Monomial, ..., GradedLexGreater>::begin() is the leading term.
struct GradedLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Finitely supported Laurent polynomial over Z[eps]/(eps^2-1).  Zero terms
// are never stored; the zero polynomial has an empty term map.
class LaurentPoly {
public:
    using TermMap = std::map<Monomial, EpsInt, GradedLexGreater>;

    LaurentPoly() = default;
    explicit LaurentPoly(GroupSpec g) : group_(std::move(g)) {}

    static LaurentPoly zero(const GroupSpec& g) { return LaurentPoly(g); }
    static LaurentPoly one(const GroupSpec& g);
    static LaurentPoly monomial(const GroupSpec& g, Monomial m, EpsInt c = EpsInt(1));
    // Convenience: x_pos^e as a polynomial.
    static LaurentPoly variable(const GroupSpec& g, int pos, int exp = 1);

    const GroupSpec& group() const { return group_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t num_terms() const { return terms_.size(); }

    EpsInt coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const EpsInt& c);

    LaurentPoly& operator+=(const LaurentPoly& r);
    LaurentPoly& operator-=(const LaurentPoly& r);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;

    LaurentPoly scaled(const EpsInt& c) const;

    // All variables -> 1; a ring homomorphism to Z[eps]/(eps^2-1).
    EpsInt specialize() const;
    // specialize followed by eps -> -1 (superdimension of a character).
    Int super_eval() const;

    // perm[i] is the image position of variable i; must preserve each
    // block's x-part and y-part (BlockViolation otherwise).
    LaurentPoly permute_vars(const std::vector<int>& perm) const;

    // Canonical text form: terms in graded-lex descending order.
    std::string str() const;

    bool operator==(const LaurentPoly&) const = default;

private:
    GroupSpec group_;
    TermMap terms_;
};

// Exact quotient q with q*b == a.  Division is leading-term elimination on
// the two eps -> +-1 integer components; throws NotDivisible when no exact
// quotient exists and DivisionByZero when b == 0.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace superindex

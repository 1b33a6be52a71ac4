#include "superindex/poly.hpp"

#include <algorithm>
#include <numeric>

#include "superindex/errors.hpp"

namespace superindex {

int total_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), 0);
}

bool GradedLexGreater::operator()(const Monomial& a, const Monomial& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return b < a;
}

LaurentPoly LaurentPoly::one(const GroupSpec& g) {
    return monomial(g, Monomial(g.num_vars(), 0));
}

LaurentPoly LaurentPoly::monomial(const GroupSpec& g, Monomial m, EpsInt c) {
    if (static_cast<int>(m.size()) != g.num_vars())
        fail("GroupMismatch", "monomial length does not fit " + g.str());
    LaurentPoly p(g);
    p.add_term(m, c);
    return p;
}

LaurentPoly LaurentPoly::variable(const GroupSpec& g, int pos, int exp) {
    Monomial m(g.num_vars(), 0);
    m.at(pos) = exp;
    return monomial(g, std::move(m));
}

EpsInt LaurentPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? EpsInt() : it->second;
}

void LaurentPoly::add_term(const Monomial& m, const EpsInt& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(m.size()) != group_.num_vars())
        fail("GroupMismatch", "monomial length does not fit " + group_.str());
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& r) {
    if (group_ != r.group_) fail("GroupMismatch", group_.str() + " vs " + r.group_.str());
    for (const auto& [m, c] : r.terms_) add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& r) {
    if (group_ != r.group_) fail("GroupMismatch", group_.str() + " vs " + r.group_.str());
    for (const auto& [m, c] : r.terms_) add_term(m, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.group_ != b.group_) fail("GroupMismatch", a.group_.str() + " vs " + b.group_.str());
    LaurentPoly out(a.group_);
    const int n = a.group_.num_vars();
    Monomial m(n);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (int i = 0; i < n; ++i) m[i] = ma[i] + mb[i];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(group_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

LaurentPoly LaurentPoly::scaled(const EpsInt& c) const {
    LaurentPoly out(group_);
    if (c.is_zero()) return out;
    for (const auto& [m, coeff] : terms_) out.add_term(m, coeff * c);
    return out;
}

EpsInt LaurentPoly::specialize() const {
    EpsInt s;
    for (const auto& [m, c] : terms_) s += c;
    return s;
}

Int LaurentPoly::super_eval() const {
    return specialize().at_minus();
}

LaurentPoly LaurentPoly::permute_vars(const std::vector<int>& perm) const {
    const int n = group_.num_vars();
    if (static_cast<int>(perm.size()) != n)
        fail("BlockViolation", "permutation length does not fit " + group_.str());
    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; ++i) {
        int j = perm[i];
        if (j < 0 || j >= n || seen[j]) fail("BlockViolation", "not a permutation");
        seen[j] = true;
        auto a = group_.var_info(i);
        auto b = group_.var_info(j);
        if (a.block != b.block || a.is_y != b.is_y)
            fail("BlockViolation", "permutation mixes variable blocks");
    }
    LaurentPoly out(group_);
    Monomial nm(n);
    for (const auto& [m, c] : terms_) {
        for (int i = 0; i < n; ++i) nm[perm[i]] = m[i];
        out.add_term(nm, c);
    }
    return out;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        std::string mono;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += group_.var_name(static_cast<int>(i));
            if (m[i] != 1) mono += "^" + std::to_string(m[i]);
        }
        std::string term;
        if (c.even != 0 && c.odd != 0) {
            if (c.even < 0 && c.odd < 0)
                term = "-(" + (-c).str() + ")";
            else
                term = "(" + c.str() + ")";
            if (!mono.empty()) term += "*" + mono;
        } else if (mono.empty()) {
            term = c.str();
        } else if (c.is_one()) {
            term = mono;
        } else if (c == EpsInt(-1)) {
            term = "-" + mono;
        } else if (c == EpsInt::eps()) {
            term = "e*" + mono;
        } else if (c == -EpsInt::eps()) {
            term = "-e*" + mono;
        } else {
            term = c.str() + "*" + mono;
        }
        if (out.empty()) {
            out = term;
        } else if (term.front() == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

namespace {

using IntTermMap = std::map<Monomial, Int, GradedLexGreater>;

// Division of integer Laurent polynomials by leading-term elimination.
// Every quotient monomial must lie in the Newton-polytope difference box of
// a and b; a step leaving the box proves there is no exact quotient.
IntTermMap divide_component(const IntTermMap& a0, const IntTermMap& b) {
    IntTermMap q;
    if (a0.empty()) return q;
    if (b.empty()) fail("NotDivisible", "nonzero component divided by zero component");

    const size_t n = a0.begin()->first.size();
    std::vector<int> qmin(n), qmax(n);
    for (size_t v = 0; v < n; ++v) {
        int amin = a0.begin()->first[v], amax = amin;
        for (const auto& [m, c] : a0) {
            amin = std::min(amin, m[v]);
            amax = std::max(amax, m[v]);
        }
        int bmin = b.begin()->first[v], bmax = bmin;
        for (const auto& [m, c] : b) {
            bmin = std::min(bmin, m[v]);
            bmax = std::max(bmax, m[v]);
        }
        qmin[v] = amin - bmax;
        qmax[v] = amax - bmin;
    }

    IntTermMap r = a0;
    const Monomial& ltb = b.begin()->first;
    const Int& cb = b.begin()->second;
    Monomial t(n);
    while (!r.empty()) {
        const Monomial& ltr = r.begin()->first;
        const Int& cr = r.begin()->second;
        for (size_t v = 0; v < n; ++v) {
            t[v] = ltr[v] - ltb[v];
            if (t[v] < qmin[v] || t[v] > qmax[v])
                fail("NotDivisible", "no exact quotient (leading term escapes quotient box)");
        }
        if (cr % cb != 0) fail("NotDivisible", "no exact quotient (coefficient remainder)");
        Int ct = cr / cb;
        q[t] = ct;
        Monomial shifted(n);
        for (const auto& [m, c] : b) {
            for (size_t v = 0; v < n; ++v) shifted[v] = m[v] + t[v];
            auto [it, inserted] = r.try_emplace(shifted, Int(-ct * c));
            if (!inserted) {
                it->second -= ct * c;
                if (it->second == 0) r.erase(it);
            }
        }
    }
    return q;
}

}  // namespace

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.group() != b.group())
        fail("GroupMismatch", a.group().str() + " vs " + b.group().str());
    if (b.is_zero()) fail("DivisionByZero", "division by the zero polynomial");

    IntTermMap ap, am, bp, bm;
    for (const auto& [m, c] : a.terms()) {
        if (Int v = c.at_plus(); v != 0) ap.emplace(m, v);
        if (Int v = c.at_minus(); v != 0) am.emplace(m, v);
    }
    for (const auto& [m, c] : b.terms()) {
        if (Int v = c.at_plus(); v != 0) bp.emplace(m, v);
        if (Int v = c.at_minus(); v != 0) bm.emplace(m, v);
    }

    IntTermMap qp, qm;
    if (bp.empty()) {
        if (!ap.empty()) fail("NotDivisible", "eps->+1 component has no quotient");
        qm = divide_component(am, bm);
        qp = qm;  // underdetermined component; verified below
    } else if (bm.empty()) {
        if (!am.empty()) fail("NotDivisible", "eps->-1 component has no quotient");
        qp = divide_component(ap, bp);
        qm = qp;
    } else {
        qp = divide_component(ap, bp);
        qm = divide_component(am, bm);
    }

    LaurentPoly q(a.group());
    for (const auto& [m, cp] : qp) {
        auto it = qm.find(m);
        Int cm = it == qm.end() ? Int(0) : it->second;
        if ((cp - cm) % 2 != 0) fail("NotDivisible", "quotient has half-integer coefficients");
        q.add_term(m, EpsInt((cp + cm) / 2, (cp - cm) / 2));
    }
    for (const auto& [m, cm] : qm) {
        if (qp.count(m)) continue;
        if (cm % 2 != 0) fail("NotDivisible", "quotient has half-integer coefficients");
        q.add_term(m, EpsInt(cm / 2, -cm / 2));
    }

    if (q * b != a) fail("NotDivisible", "no exact quotient");
    return q;
}

}  // namespace superindex

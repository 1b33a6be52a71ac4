#include "superindex/repring.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <mutex>
#include <set>
#include <unordered_map>

#include "superindex/characters.hpp"
#include "superindex/errors.hpp"

namespace superindex {

VirtualModule VirtualModule::basis(const GroupSpec& g, const Weight& w, EpsInt c) {
    VirtualModule v(g);
    v.add(w, c);
    return v;
}

EpsInt VirtualModule::coeff(const Weight& w) const {
    auto it = coeffs_.find(w);
    return it == coeffs_.end() ? EpsInt() : it->second;
}

void VirtualModule::add(const Weight& w, const EpsInt& c) {
    if (c.is_zero()) return;
    if (!w.matches(group_))
        fail("GroupMismatch", "weight " + w.str() + " does not fit " + group_.str());
    if (!w.dominant()) fail("NotDominant", "weight " + w.str() + " is not dominant");
    auto [it, inserted] = coeffs_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

VirtualModule& VirtualModule::operator+=(const VirtualModule& r) {
    if (group_ != r.group_) fail("GroupMismatch", group_.str() + " vs " + r.group_.str());
    for (const auto& [w, c] : r.coeffs_) add(w, c);
    return *this;
}

VirtualModule& VirtualModule::operator-=(const VirtualModule& r) {
    if (group_ != r.group_) fail("GroupMismatch", group_.str() + " vs " + r.group_.str());
    for (const auto& [w, c] : r.coeffs_) add(w, -c);
    return *this;
}

VirtualModule VirtualModule::scaled(const EpsInt& c) const {
    VirtualModule out(group_);
    if (c.is_zero()) return out;
    for (const auto& [w, coeff] : coeffs_) out.add(w, coeff * c);
    return out;
}

namespace {

std::string render_class_term(const Weight& w, const EpsInt& c) {
    std::string bracket = "[" + w.str() + "]";
    if (c.is_one()) return bracket;
    if (c == EpsInt(-1)) return "-" + bracket;
    if (c == EpsInt::eps()) return "e*" + bracket;
    if (c == -EpsInt::eps()) return "-e*" + bracket;
    if (c.even != 0 && c.odd != 0) {
        if (c.even < 0 && c.odd < 0) return "-(" + (-c).str() + ")*" + bracket;
        return "(" + c.str() + ")*" + bracket;
    }
    return c.str() + "*" + bracket;
}

std::string render_classes(const VirtualModule::CoeffMap& coeffs) {
    if (coeffs.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : coeffs) {
        std::string term = render_class_term(w, c);
        if (out.empty())
            out = term;
        else if (term.front() == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
    }
    return out;
}

}  // namespace

std::string VirtualModule::str() const {
    return render_classes(coeffs_);
}

VirtualModule VirtualModule::parse(std::string_view text, const GroupSpec& g) {
    VirtualModule out(g);
    std::string s(text);
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    skip_ws();
    if (i < s.size() && s.compare(i, 1, "0") == 0 && i + 1 == s.size()) return out;

    bool negate = false;
    bool first = true;
    while (i < s.size()) {
        skip_ws();
        if (!first || s[i] == '+' || s[i] == '-') {
            if (i >= s.size() || (s[i] != '+' && s[i] != '-'))
                fail("ParseError", "expected '+' or '-' in module literal");
            negate = s[i] == '-';
            ++i;
            skip_ws();
        }
        first = false;
        // term: [w]  or  coeff*[w]
        size_t bracket = s.find('[', i);
        if (bracket == std::string::npos) fail("ParseError", "expected '[' in module literal");
        EpsInt c(1);
        if (bracket > i) {
            std::string coeff_text = s.substr(i, bracket - i);
            while (!coeff_text.empty() &&
                   (std::isspace(static_cast<unsigned char>(coeff_text.back())) ||
                    coeff_text.back() == '*'))
                coeff_text.pop_back();
            if (!coeff_text.empty()) c = EpsInt::parse(coeff_text);
        }
        size_t close = s.find(']', bracket);
        if (close == std::string::npos) fail("ParseError", "unterminated '[' in module literal");
        Weight w = Weight::parse(s.substr(bracket + 1, close - bracket - 1), g);
        out.add(w, negate ? -c : c);
        i = close + 1;
        skip_ws();
    }
    return out;
}

LeviEmbedding::LeviEmbedding(GroupSpec parent, GroupSpec levi)
    : parent_(std::move(parent)), levi_(std::move(levi)) {
    if (!parent_.single())
        fail("GroupMismatch", "Levi embedding expects a single-block parent");
    if (levi_.total_p() != parent_.total_p() || levi_.total_q() != parent_.total_q())
        fail("GroupMismatch", "Levi blocks " + levi_.str() + " do not partition " + parent_.str());
    const int p = parent_.block(0).p;
    int gx = 0, gy = 0;
    for (const auto& b : levi_.blocks()) {
        for (int i = 0; i < b.p; ++i) levi_to_parent_.push_back(gx + i);
        for (int j = 0; j < b.q; ++j) levi_to_parent_.push_back(p + gy + j);
        gx += b.p;
        gy += b.q;
    }
}

LeviEmbedding LeviEmbedding::parse(const GroupSpec& parent, std::string_view levi_text) {
    return LeviEmbedding(parent, GroupSpec::parse(levi_text));
}

TruncationBox TruncationBox::enlarged(int by) const {
    TruncationBox out = *this;
    out.bound += by;
    return out;
}

VirtualModule FormalSeries::as_virtual() const {
    VirtualModule v(group);
    for (const auto& [w, c] : coeffs) v.add(w, c);
    return v;
}

std::string FormalSeries::str() const {
    return render_classes(coeffs) + " @box=" + std::to_string(box.bound);
}

LaurentPoly char_of(const VirtualModule& v) {
    LaurentPoly ch(v.group());
    for (const auto& [w, c] : v.coeffs()) ch += irr_char(v.group(), w).scaled(c);
    return ch;
}

VirtualModule tensor(const VirtualModule& v, const VirtualModule& w) {
    if (v.group() != w.group())
        fail("GroupMismatch", v.group().str() + " vs " + w.group().str());
    VirtualModule out(v.group());
    for (const auto& [ww, c] : decompose(char_of(v) * char_of(w))) out.add(ww, c);
    return out;
}

VirtualModule parity_shift(const VirtualModule& v) {
    return v.scaled(EpsInt::eps());
}

EpsInt dims(const VirtualModule& v) {
    return char_of(v).specialize();
}

Int super_dim(const VirtualModule& v) {
    return char_of(v).super_eval();
}

namespace {

struct RestrictCache {
    std::mutex mu;
    std::unordered_map<std::string, VirtualModule> map;
};

RestrictCache& restrict_cache() {
    static RestrictCache cache;
    return cache;
}

VirtualModule restrict_poly(const LaurentPoly& parent_poly, const LeviEmbedding& e) {
    const auto& l2p = e.levi_to_parent();
    LaurentPoly levi_poly(e.levi());
    Monomial ml(l2p.size());
    for (const auto& [mp, c] : parent_poly.terms()) {
        for (size_t i = 0; i < l2p.size(); ++i) ml[i] = mp[l2p[i]];
        levi_poly.add_term(ml, c);
    }
    VirtualModule out(e.levi());
    for (const auto& [w, c] : decompose(levi_poly)) out.add(w, c);
    return out;
}

}  // namespace

VirtualModule restrict_to(const VirtualModule& v, const LeviEmbedding& e) {
    if (v.group() != e.parent())
        fail("GroupMismatch", "restriction expects a module over " + e.parent().str());

    // Basis classes are memoized; general modules expand linearly.
    if (v.coeffs().size() == 1 && v.coeffs().begin()->second.is_one()) {
        const Weight& w = v.coeffs().begin()->first;
        std::string key = e.parent().str() + ">" + e.levi().str() + "/" + w.str();
        {
            auto& cache = restrict_cache();
            std::lock_guard<std::mutex> lock(cache.mu);
            auto it = cache.map.find(key);
            if (it != cache.map.end()) return it->second;
        }
        VirtualModule r = restrict_poly(char_of(v), e);
        auto& cache = restrict_cache();
        std::lock_guard<std::mutex> lock(cache.mu);
        return cache.map.emplace(key, std::move(r)).first->second;
    }

    VirtualModule out(e.levi());
    for (const auto& [w, c] : v.coeffs())
        out += restrict_to(VirtualModule::basis(v.group(), w), e).scaled(c);
    return out;
}

EpsInt pair(const VirtualModule& a, const VirtualModule& b) {
    if (a.group() != b.group())
        fail("GroupMismatch", a.group().str() + " vs " + b.group().str());
    EpsInt s;
    const VirtualModule& small = a.coeffs().size() <= b.coeffs().size() ? a : b;
    const VirtualModule& large = a.coeffs().size() <= b.coeffs().size() ? b : a;
    for (const auto& [w, c] : small.coeffs()) s += c * large.coeff(w);
    return s;
}

namespace {

void enumerate_non_increasing(int len, int lo, int hi, std::vector<int>& cur,
                              const std::function<void(const std::vector<int>&)>& emit) {
    if (static_cast<int>(cur.size()) == len) {
        emit(cur);
        return;
    }
    int top = cur.empty() ? hi : cur.back();
    for (int v = top; v >= lo; --v) {
        cur.push_back(v);
        enumerate_non_increasing(len, lo, hi, cur, emit);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> non_increasing_vectors(int len, int bound) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    enumerate_non_increasing(len, -bound, bound, cur,
                             [&](const std::vector<int>& v) { out.push_back(v); });
    return out;
}

}  // namespace

std::vector<Weight> enumerate_dominant(const GroupSpec& g, int bound) {
    std::vector<std::vector<BlockWeight>> block_choices;
    for (const auto& b : g.blocks()) {
        std::vector<BlockWeight> choices;
        for (auto& lam : non_increasing_vectors(b.p, bound))
            for (auto& mu : non_increasing_vectors(b.q, bound))
                choices.push_back(BlockWeight{lam, mu});
        block_choices.push_back(std::move(choices));
    }
    std::vector<Weight> out;
    std::vector<BlockWeight> cur(g.num_blocks());
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == g.num_blocks()) {
            out.emplace_back(cur);
            return;
        }
        for (const auto& bw : block_choices[k]) {
            cur[k] = bw;
            rec(k + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end(), WeightOrder{});
    return out;
}

FormalSeries induce(const VirtualModule& a, const LeviEmbedding& e, const TruncationBox& box) {
    if (a.group() != e.levi())
        fail("GroupMismatch", "induction expects a module over " + e.levi().str());
    if (box.bound < 1) fail("ParseError", "truncation box bound must be >= 1");

    // Restriction preserves the total weight degree, so only parent weights
    // whose degree occurs in `a` can pair nontrivially.
    std::set<int> degrees;
    for (const auto& [w, c] : a.coeffs()) degrees.insert(w.total_degree());

    FormalSeries out{e.parent(), box, {}};
    for (const auto& lam : enumerate_dominant(e.parent(), box.bound)) {
        if (!degrees.count(lam.total_degree())) continue;
        if (box.degree && lam.total_degree() != *box.degree) continue;
        VirtualModule restricted = restrict_to(VirtualModule::basis(e.parent(), lam), e);
        EpsInt c = pair(restricted, a);
        if (!c.is_zero()) out.coeffs.emplace(lam, c);
    }
    return out;
}

}  // namespace superindex

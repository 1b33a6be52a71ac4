#include "superindex/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "superindex/errors.hpp"

namespace superindex {
namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    size_t start = 0;
    while (true) {
        size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view s, const char* what) {
    s = trim(s);
    int value = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || s.empty())
        fail("ParseError", std::string("bad ") + what + " '" + std::string(s) + "'");
    return value;
}

std::vector<int> parse_int_list(std::string_view s, const char* what) {
    s = trim(s);
    std::vector<int> out;
    if (s.empty()) return out;
    for (auto part : split(s, ',')) out.push_back(parse_int(part, what));
    return out;
}

}  // namespace

GroupSpec::GroupSpec(std::vector<GroupBlock> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) fail("ParseError", "group needs at least one block");
    for (const auto& b : blocks_) {
        if (b.p < 0 || b.q < 0 || b.p + b.q < 1)
            fail("ParseError", "each gl(p|q) block needs p, q >= 0 and p + q >= 1");
    }
}

GroupSpec GroupSpec::parse(std::string_view text) {
    std::vector<GroupBlock> blocks;
    for (auto part : split(text, 'x')) {
        part = trim(part);
        if (part.size() < 6 || part.substr(0, 3) != "gl(" || part.back() != ')')
            fail("ParseError", "expected gl(p|q), got '" + std::string(part) + "'");
        auto inner = part.substr(3, part.size() - 4);
        auto pq = split(inner, '|');
        if (pq.size() != 2) fail("ParseError", "expected gl(p|q), got '" + std::string(part) + "'");
        blocks.push_back({parse_int(pq[0], "p"), parse_int(pq[1], "q")});
    }
    return GroupSpec(std::move(blocks));
}

int GroupSpec::total_p() const {
    return std::accumulate(blocks_.begin(), blocks_.end(), 0,
                           [](int acc, const GroupBlock& b) { return acc + b.p; });
}

int GroupSpec::total_q() const {
    return std::accumulate(blocks_.begin(), blocks_.end(), 0,
                           [](int acc, const GroupBlock& b) { return acc + b.q; });
}

int GroupSpec::block_offset(size_t k) const {
    int off = 0;
    for (size_t i = 0; i < k; ++i) off += blocks_[i].p + blocks_[i].q;
    return off;
}

GroupSpec::VarInfo GroupSpec::var_info(int pos) const {
    int off = 0, gx = 0, gy = 0;
    for (size_t k = 0; k < blocks_.size(); ++k) {
        const auto& b = blocks_[k];
        if (pos < off + b.p) return {k, false, pos - off, gx + (pos - off)};
        if (pos < off + b.p + b.q) return {k, true, pos - off - b.p, gy + (pos - off - b.p)};
        off += b.p + b.q;
        gx += b.p;
        gy += b.q;
    }
    fail("ParseError", "variable position out of range");
}

std::string GroupSpec::var_name(int pos) const {
    auto info = var_info(pos);
    return (info.is_y ? "y" : "x") + std::to_string(info.global_index + 1);
}

std::string GroupSpec::str() const {
    std::string s;
    for (size_t k = 0; k < blocks_.size(); ++k) {
        if (k) s += "x";
        s += "gl(" + std::to_string(blocks_[k].p) + "|" + std::to_string(blocks_[k].q) + ")";
    }
    return s;
}

Weight Weight::single(std::vector<int> lam, std::vector<int> mu) {
    return Weight({BlockWeight{std::move(lam), std::move(mu)}});
}

Weight Weight::parse(std::string_view text, const GroupSpec& g) {
    auto parse_block = [](std::string_view part, const GroupBlock& b) -> BlockWeight {
        auto halves = split(part, '|');
        std::vector<int> lam, mu;
        if (halves.size() == 2) {
            lam = parse_int_list(halves[0], "weight entry");
            mu = parse_int_list(halves[1], "weight entry");
        } else if (halves.size() == 1) {
            // bar may be omitted when one side is empty
            auto entries = parse_int_list(halves[0], "weight entry");
            if (b.q == 0)
                lam = std::move(entries);
            else if (b.p == 0)
                mu = std::move(entries);
            else
                fail("ParseError", "weight needs a '|' for gl(p|q) with p,q > 0");
        } else {
            fail("ParseError", "too many '|' in weight '" + std::string(part) + "'");
        }
        if (static_cast<int>(lam.size()) != b.p || static_cast<int>(mu.size()) != b.q)
            fail("ParseError", "weight '" + std::string(part) + "' does not fit gl(" +
                                   std::to_string(b.p) + "|" + std::to_string(b.q) + ")");
        return {std::move(lam), std::move(mu)};
    };

    auto parts = split(text, ';');
    std::vector<BlockWeight> blocks;
    if (parts.size() == g.num_blocks()) {
        for (size_t k = 0; k < parts.size(); ++k)
            blocks.push_back(parse_block(trim(parts[k]), g.block(k)));
        return Weight(std::move(blocks));
    }
    if (parts.size() != 1)
        fail("ParseError", "weight has " + std::to_string(parts.size()) + " blocks, group " +
                               g.str() + " has " + std::to_string(g.num_blocks()));

    // flat form: all lams | all mus, distributed over the blocks
    auto halves = split(trim(text), '|');
    std::vector<int> lam, mu;
    if (halves.size() == 2) {
        lam = parse_int_list(halves[0], "weight entry");
        mu = parse_int_list(halves[1], "weight entry");
    } else if (halves.size() == 1 && g.total_q() == 0) {
        lam = parse_int_list(halves[0], "weight entry");
    } else if (halves.size() == 1 && g.total_p() == 0) {
        mu = parse_int_list(halves[0], "weight entry");
    } else {
        fail("ParseError", "bad weight '" + std::string(text) + "'");
    }
    if (static_cast<int>(lam.size()) != g.total_p() || static_cast<int>(mu.size()) != g.total_q())
        fail("ParseError", "weight '" + std::string(text) + "' does not fit " + g.str());
    size_t li = 0, mi = 0;
    for (const auto& b : g.blocks()) {
        BlockWeight bw;
        bw.lam.assign(lam.begin() + li, lam.begin() + li + b.p);
        bw.mu.assign(mu.begin() + mi, mu.begin() + mi + b.q);
        li += b.p;
        mi += b.q;
        blocks.push_back(std::move(bw));
    }
    return Weight(std::move(blocks));
}

Weight Weight::from_exponents(const GroupSpec& g, const std::vector<int>& exps) {
    if (static_cast<int>(exps.size()) != g.num_vars())
        fail("ParseError", "exponent vector does not fit " + g.str());
    std::vector<BlockWeight> blocks;
    int off = 0;
    for (const auto& b : g.blocks()) {
        BlockWeight bw;
        bw.lam.assign(exps.begin() + off, exps.begin() + off + b.p);
        bw.mu.assign(exps.begin() + off + b.p, exps.begin() + off + b.p + b.q);
        off += b.p + b.q;
        blocks.push_back(std::move(bw));
    }
    return Weight(std::move(blocks));
}

std::vector<int> Weight::to_exponents(const GroupSpec& g) const {
    if (!matches(g)) fail("GroupMismatch", "weight " + str() + " does not fit " + g.str());
    std::vector<int> exps;
    exps.reserve(g.num_vars());
    for (const auto& b : blocks_) {
        exps.insert(exps.end(), b.lam.begin(), b.lam.end());
        exps.insert(exps.end(), b.mu.begin(), b.mu.end());
    }
    return exps;
}

bool Weight::matches(const GroupSpec& g) const {
    if (blocks_.size() != g.num_blocks()) return false;
    for (size_t k = 0; k < blocks_.size(); ++k) {
        if (static_cast<int>(blocks_[k].lam.size()) != g.block(k).p) return false;
        if (static_cast<int>(blocks_[k].mu.size()) != g.block(k).q) return false;
    }
    return true;
}

bool Weight::dominant() const {
    auto non_increasing = [](const std::vector<int>& v) {
        return std::is_sorted(v.rbegin(), v.rend());
    };
    for (const auto& b : blocks_)
        if (!non_increasing(b.lam) || !non_increasing(b.mu)) return false;
    return true;
}

int Weight::total_degree() const {
    int d = 0;
    for (const auto& b : blocks_) {
        d = std::accumulate(b.lam.begin(), b.lam.end(), d);
        d = std::accumulate(b.mu.begin(), b.mu.end(), d);
    }
    return d;
}

std::string Weight::str() const {
    std::string lam, mu;
    auto join = [](std::string& s, const std::vector<int>& v) {
        for (int x : v) {
            if (!s.empty()) s += ",";
            s += std::to_string(x);
        }
    };
    for (const auto& b : blocks_) {
        join(lam, b.lam);
        join(mu, b.mu);
    }
    return lam + "|" + mu;
}

bool WeightOrder::operator()(const Weight& a, const Weight& b) const {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    // lexicographic on the flattened entries, larger first
    auto flat = [](const Weight& w) {
        std::vector<int> v;
        for (const auto& bl : w.blocks()) {
            v.insert(v.end(), bl.lam.begin(), bl.lam.end());
            v.insert(v.end(), bl.mu.begin(), bl.mu.end());
        }
        return v;
    };
    return flat(b) < flat(a);
}

}  // namespace superindex

#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace superindex {

// One gl(p|q) factor of a (product) group.
struct GroupBlock {
    int p = 0;
    int q = 0;
    auto operator<=>(const GroupBlock&) const = default;
};

// U(p_1|q_1) x ... x U(p_r|q_r).  Variable layout is block by block, within
// a block the p even variables first, then the q odd ones.  Variable names
// (x1..xP, y1..yQ) number the even/odd variables globally across blocks, so
// a Levi subgroup of gl(p|q) keeps the parent's names.
class GroupSpec {
public:
    GroupSpec() = default;
    explicit GroupSpec(std::vector<GroupBlock> blocks);

    static GroupSpec gl(int p, int q) { return GroupSpec({GroupBlock{p, q}}); }
    // Grammar: "gl(p|q)" joined by "x", e.g. "gl(1|1)xgl(0|1)".
    static GroupSpec parse(std::string_view text);

    const std::vector<GroupBlock>& blocks() const { return blocks_; }
    const GroupBlock& block(size_t k) const { return blocks_[k]; }
    size_t num_blocks() const { return blocks_.size(); }
    bool single() const { return blocks_.size() == 1; }

    int total_p() const;
    int total_q() const;
    int num_vars() const { return total_p() + total_q(); }

    // First variable position of block k.
    int block_offset(size_t k) const;

    struct VarInfo {
        size_t block;
        bool is_y;
        int index_in_part;   // 0-based within the block's x- or y-part
        int global_index;    // 0-based within all x's (or all y's)
    };
    VarInfo var_info(int pos) const;
    std::string var_name(int pos) const;  // "x1".."xP", "y1".."yQ"

    std::string str() const;
    bool operator==(const GroupSpec&) const = default;

private:
    std::vector<GroupBlock> blocks_;
};

// Highest weight data, one (lam|mu) pair per group block.
struct BlockWeight {
    std::vector<int> lam;
    std::vector<int> mu;
    auto operator<=>(const BlockWeight&) const = default;
};

class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<BlockWeight> blocks) : blocks_(std::move(blocks)) {}

    static Weight single(std::vector<int> lam, std::vector<int> mu);

    // Grammar: "l1,..,lp|m1,..,mq"; product blocks joined by ";".  A flat
    // "all-lams|all-mus" form is accepted for product groups as well and is
    // what str() emits (the group's compositions make it unambiguous).
    static Weight parse(std::string_view text, const GroupSpec& g);

    static Weight from_exponents(const GroupSpec& g, const std::vector<int>& exps);
    std::vector<int> to_exponents(const GroupSpec& g) const;

    const std::vector<BlockWeight>& blocks() const { return blocks_; }
    const BlockWeight& block(size_t k) const { return blocks_[k]; }

    bool matches(const GroupSpec& g) const;
    bool dominant() const;  // every lam and mu vector non-increasing
    int total_degree() const;

    std::string str() const;

    bool operator==(const Weight&) const = default;

private:
    std::vector<BlockWeight> blocks_;
};

// Graded-lex descending order on flattened weights (largest first), used for
// canonical rendering and deterministic map iteration.
struct WeightOrder {
    bool operator()(const Weight& a, const Weight& b) const;
};

}  // namespace superindex

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "superindex/errors.hpp"
#include "superindex/poly.hpp"

using namespace superindex;
namespace gen = superindex::testgen;

namespace {

const GroupSpec g11 = GroupSpec::gl(1, 1);
const GroupSpec g21 = GroupSpec::gl(2, 1);
const GroupSpec g22 = GroupSpec::gl(2, 2);

LaurentPoly var(const GroupSpec& g, int pos, int exp = 1) {
    return LaurentPoly::variable(g, pos, exp);
}

}  // namespace

TEST_CASE("EpsInt arithmetic folds eps^2 to 1") {
    EpsInt a(Int(1), Int(2)), b(Int(3), Int(-1));
    CHECK(a * b == EpsInt(Int(1), Int(5)));  // (1+2e)(3-e) = 3-e+6e-2e^2 = 1+5e
    CHECK(EpsInt::eps() * EpsInt::eps() == EpsInt(1));
    CHECK(a * EpsInt(1) == a);
    CHECK(a + EpsInt() == a);
    CHECK((a - a).is_zero());
}

TEST_CASE("EpsInt string round trip") {
    for (int e = -3; e <= 3; ++e) {
        for (int o = -3; o <= 3; ++o) {
            EpsInt c{Int(e), Int(o)};
            CHECK(EpsInt::parse(c.str()) == c);
        }
    }
    CHECK(EpsInt::parse("1+e") == EpsInt(Int(1), Int(1)));
    CHECK(EpsInt::parse("(2-3e)") == EpsInt(Int(2), Int(-3)));
}

TEST_CASE("poly_add examples") {
    LaurentPoly x = var(g11, 0), y = var(g11, 1);
    CHECK((x + (-x)).is_zero());
    CHECK((x + y.scaled(EpsInt::eps())) + x == x.scaled(EpsInt(2)) + y.scaled(EpsInt::eps()));
    for (int i = 0; i < 20; ++i) {
        LaurentPoly p = gen::rand_poly(g21);
        CHECK(p + LaurentPoly::zero(g21) == p);
    }
}

TEST_CASE("poly_add rejects mismatched groups") {
    CHECK(gen::thrown_code([&] { var(g11, 0) + var(g21, 0); }) == "GroupMismatch");
}

TEST_CASE("poly_mul examples") {
    LaurentPoly x = var(g11, 0), y = var(g11, 1);
    LaurentPoly std_char = x + y.scaled(EpsInt::eps());
    LaurentPoly sq = std_char * std_char;
    LaurentPoly expected = var(g11, 0, 2) + var(g11, 1, 2) +
                           (x * y).scaled(EpsInt(Int(0), Int(2)));
    CHECK(sq == expected);  // x^2 + y^2 + 2e*x*y

    LaurentPoly one = LaurentPoly::one(g11);
    CHECK((one - var(g11, 0, -1)) * (one + var(g11, 0, -1)) == one - var(g11, 0, -2));
    for (int i = 0; i < 20; ++i) {
        LaurentPoly a = gen::rand_poly(g22);
        CHECK(a * LaurentPoly::one(g22) == a);
    }
}

TEST_CASE("ring laws on random triples") {
    for (int i = 0; i < 60; ++i) {
        LaurentPoly a = gen::rand_poly(g21), b = gen::rand_poly(g21), c = gen::rand_poly(g21);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("exact_div examples") {
    GroupSpec g20 = GroupSpec::gl(2, 0);
    LaurentPoly x1 = var(g20, 0), x2 = var(g20, 1);
    CHECK(exact_div(var(g20, 0, 2) - var(g20, 1, 2), x1 - x2) == x1 + x2);

    GroupSpec g02 = GroupSpec::gl(0, 2);
    LaurentPoly y1 = var(g02, 0), y2 = var(g02, 1);
    CHECK(gen::thrown_code([&] { exact_div(y1 - y2 + LaurentPoly::one(g02), y1 - y2); }) ==
          "NotDivisible");
}

TEST_CASE("exact_div round trips on random products") {
    for (int i = 0; i < 20; ++i) {
        LaurentPoly a = gen::rand_poly(g21, 5, 2);
        LaurentPoly b = gen::rand_regular_poly(g21);
        if (a.is_zero()) {
            CHECK(exact_div(a * b, b).is_zero());
            continue;
        }
        CHECK(exact_div(a * b, b) == a);
    }
}

TEST_CASE("exact_div rejects the zero divisor") {
    CHECK(gen::thrown_code([&] { exact_div(var(g11, 0), LaurentPoly::zero(g11)); }) ==
          "DivisionByZero");
}

TEST_CASE("specialize and super_eval") {
    LaurentPoly std_char = var(g11, 0) + var(g11, 1).scaled(EpsInt::eps());
    CHECK(std_char.specialize() == EpsInt(Int(1), Int(1)));
    CHECK(std_char.super_eval() == 0);
    CHECK(LaurentPoly::zero(g11).specialize() == EpsInt());
    CHECK(LaurentPoly::one(g11).super_eval() == 1);

    GroupSpec g12 = GroupSpec::gl(1, 2);
    LaurentPoly std12 = var(g12, 0) + (var(g12, 1) + var(g12, 2)).scaled(EpsInt::eps());
    CHECK(std12.super_eval() == -1);

    for (int i = 0; i < 20; ++i) {
        LaurentPoly a = gen::rand_poly(g22), b = gen::rand_poly(g22);
        CHECK((a * b).specialize() == a.specialize() * b.specialize());
        CHECK((a + b).specialize() == a.specialize() + b.specialize());
        CHECK((a * b).super_eval() == a.super_eval() * b.super_eval());
    }
}

TEST_CASE("permute_vars") {
    GroupSpec g12 = GroupSpec::gl(1, 2);
    std::vector<int> swap_y = {0, 2, 1};
    CHECK(var(g12, 1).permute_vars(swap_y) == var(g12, 2));

    std::vector<int> id = {0, 1, 2};
    for (int i = 0; i < 10; ++i) {
        LaurentPoly p = gen::rand_poly(g12);
        CHECK(p.permute_vars(id) == p);
    }

    for (int i = 0; i < 20; ++i) {
        LaurentPoly a = gen::rand_poly(g22), b = gen::rand_poly(g22);
        auto w = gen::rand_block_permutation(g22);
        CHECK((a * b).permute_vars(w) == a.permute_vars(w) * b.permute_vars(w));
        CHECK((a + b).permute_vars(w) == a.permute_vars(w) + b.permute_vars(w));
        CHECK(a.permute_vars(w).specialize() == a.specialize());
    }

    std::vector<int> mixing = {1, 0, 2};  // x1 <-> y1 in gl(1|2)
    CHECK(gen::thrown_code([&] { var(g12, 0).permute_vars(mixing); }) == "BlockViolation");
}

TEST_CASE("canonical text form") {
    LaurentPoly std_char = var(g11, 0) + var(g11, 1).scaled(EpsInt::eps());
    CHECK(std_char.str() == "x1 + e*y1");
    CHECK(LaurentPoly::zero(g11).str() == "0");
    LaurentPoly p = var(g11, 0, 2) - var(g11, 1, -1).scaled(EpsInt(Int(0), Int(3)));
    CHECK(p.str() == "x1^2 - 3e*y1^-1");
    LaurentPoly mixed = LaurentPoly::one(g11).scaled(EpsInt(Int(1), Int(1))) * var(g11, 0);
    CHECK(mixed.str() == "(1+e)*x1");
}

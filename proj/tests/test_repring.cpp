#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "superindex/characters.hpp"
#include "superindex/repring.hpp"
#include "superindex/rootdata.hpp"

using namespace superindex;
namespace gen = superindex::testgen;

namespace {

const GroupSpec g11 = GroupSpec::gl(1, 1);
const GroupSpec g12 = GroupSpec::gl(1, 2);
const GroupSpec g21 = GroupSpec::gl(2, 1);

VirtualModule vm(const GroupSpec& g, std::string_view text) {
    return VirtualModule::parse(text, g);
}

VirtualModule rand_module(const GroupSpec& g, int bound = 2, int max_terms = 3) {
    VirtualModule v(g);
    int terms = gen::rand_int(1, max_terms);
    for (int t = 0; t < terms; ++t)
        v.add(gen::rand_dominant_weight(g, bound), gen::rand_coeff(2));
    return v;
}

}  // namespace

TEST_CASE("module literal round trip") {
    VirtualModule v = vm(g11, "[2|0] + e*[1|1]");
    CHECK(v.coeff(Weight::single({2}, {0})) == EpsInt(1));
    CHECK(v.coeff(Weight::single({1}, {1})) == EpsInt::eps());
    CHECK(v.str() == "[2|0] + e*[1|1]");
    CHECK(VirtualModule::parse(v.str(), g11) == v);

    CHECK(vm(g11, "0").is_zero());
    CHECK(vm(g11, "2*[1|0] - (1+e)*[0|0]").str() == "2*[1|0] - (1+e)*[0|0]");
    CHECK(gen::thrown_code([&] { vm(g11, "[1|0] ["); }) == "ParseError");
    CHECK(gen::thrown_code([&] { vm(g21, "[0,1|0]"); }) == "NotDominant");
}

TEST_CASE("char_of examples") {
    LaurentPoly x = LaurentPoly::variable(g11, 0), y = LaurentPoly::variable(g11, 1);
    CHECK(char_of(vm(g11, "[1|0]")) == x + y.scaled(EpsInt::eps()));
    CHECK(char_of(vm(g11, "e*[0|0]")) ==
          irr_char(g11, Weight::single({0}, {0})).scaled(EpsInt::eps()));
    // EpsInt linearity with eps^2 = 1
    CHECK(char_of(vm(g11, "(1+e)*[1|0]")) ==
          (x + y) + (x + y).scaled(EpsInt::eps()));
}

TEST_CASE("tensor examples") {
    CHECK(tensor(vm(g11, "[1|0]"), vm(g11, "[1|0]")) == vm(g11, "[2|0] + e*[1|1]"));
    CHECK(tensor(vm(g11, "[1|-1]"), vm(g11, "[-1|1]")) == vm(g11, "[0|0]"));
    VirtualModule triv = vm(g11, "[0|0]");
    for (int i = 0; i < 10; ++i) {
        VirtualModule v = rand_module(g11);
        CHECK(tensor(v, triv) == v);
        VirtualModule w = rand_module(g11);
        CHECK(tensor(v, w) == tensor(w, v));
    }
    CHECK(gen::thrown_code([&] { tensor(vm(g11, "[0|0]"), vm(g12, "[0|0,0]")); }) ==
          "GroupMismatch");
}

TEST_CASE("parity_shift") {
    CHECK(dims(parity_shift(vm(g11, "[0|0]"))) == EpsInt::eps());
    for (int i = 0; i < 20; ++i) {
        VirtualModule v = rand_module(g11);
        CHECK(parity_shift(parity_shift(v)) == v);
        CHECK(super_dim(parity_shift(v)) == -super_dim(v));
    }
}

TEST_CASE("dims and super_dim") {
    CHECK(dims(vm(g12, "[1|0,0]")) == EpsInt(Int(1), Int(2)));
    CHECK(super_dim(vm(g12, "[1|0,0]")) == -1);
    for (int i = 0; i < 10; ++i) {
        Weight w = gen::rand_dominant_weight(g21, 3);
        if (is_typical(g21, w)) CHECK(super_dim(VirtualModule::basis(g21, w)) == 0);
        VirtualModule v = rand_module(g11), u = rand_module(g11);
        CHECK(dims(tensor(v, u)) == dims(v) * dims(u));
    }
}

TEST_CASE("restrict examples") {
    LeviEmbedding torus = LeviEmbedding::parse(g11, "gl(1|0)xgl(0|1)");
    CHECK(restrict_to(vm(g11, "[1|0]"), torus) ==
          VirtualModule::parse("[1|0] + e*[0|1]", torus.levi()));
    CHECK(restrict_to(vm(g11, "[0|0]"), torus) ==
          VirtualModule::parse("[0|0]", torus.levi()));

    LeviEmbedding maximal = LeviEmbedding::parse(g12, "gl(1|1)xgl(0|1)");
    // standard gl(1|2) module: x + e*(y1 + y2) = std_{gl(1|1)} (+) e*std_{gl(0|1)}
    VirtualModule r = restrict_to(vm(g12, "[1|0,0]"), maximal);
    CHECK(r == VirtualModule::parse("[1|0;|0] + e*[0|0;|1]", maximal.levi()));
    CHECK(r.str() == "[1|0,0] + e*[0|0,1]");

    CHECK(gen::thrown_code([&] { restrict_to(vm(g12, "[0|0,0]"), torus); }) == "GroupMismatch");
}

TEST_CASE("restrict is a ring homomorphism") {
    LeviEmbedding torus = LeviEmbedding::parse(g11, "gl(1|0)xgl(0|1)");
    for (int i = 0; i < 10; ++i) {
        VirtualModule v = rand_module(g11), w = rand_module(g11);
        CHECK(restrict_to(tensor(v, w), torus) ==
              tensor(restrict_to(v, torus), restrict_to(w, torus)));
        CHECK(restrict_to(v + w, torus) == restrict_to(v, torus) + restrict_to(w, torus));
        CHECK(restrict_to(parity_shift(v), torus) == parity_shift(restrict_to(v, torus)));
        CHECK(dims(restrict_to(v, torus)) == dims(v));
    }

    LeviEmbedding levi = LeviEmbedding::parse(g21, "gl(1|1)xgl(1|0)");
    for (int i = 0; i < 5; ++i) {
        VirtualModule v = rand_module(g21, 2, 2);
        CHECK(dims(restrict_to(v, levi)) == dims(v));
    }
}

TEST_CASE("pair") {
    Weight w = Weight::single({1}, {0}), w2 = Weight::single({0}, {1});
    VirtualModule a = VirtualModule::basis(g11, w);
    CHECK(pair(a, a) == EpsInt(1));
    CHECK(pair(a, VirtualModule::basis(g11, w2)) == EpsInt());
    CHECK(pair(parity_shift(a), a) == EpsInt::eps());
    for (int i = 0; i < 20; ++i) {
        VirtualModule u = rand_module(g11), v = rand_module(g11);
        CHECK(pair(u, v) == pair(v, u));
        EpsInt c = gen::rand_coeff();
        CHECK(pair(u.scaled(c), v) == c * pair(u, v));
        CHECK(pair(u + v, u) == pair(u, u) + pair(v, u));
    }
}

TEST_CASE("induce examples") {
    LeviEmbedding torus = LeviEmbedding::parse(g11, "gl(1|0)xgl(0|1)");

    FormalSeries s0 = induce(VirtualModule::parse("[0|0]", torus.levi()), torus,
                             TruncationBox(2));
    CHECK(s0.as_virtual() == vm(g11, "[0|0]"));
    CHECK(s0.str() == "[0|0] @box=2");

    FormalSeries s1 = induce(VirtualModule::parse("[1|0]", torus.levi()), torus,
                             TruncationBox(3));
    CHECK(s1.as_virtual() == vm(g11, "[1|0] + e*[2|-1]"));

    CHECK(induce(VirtualModule::zero(torus.levi()), torus, TruncationBox(2)).coeffs.empty());
}

TEST_CASE("Frobenius reciprocity") {
    for (const auto& [parent, levi_text] :
         std::vector<std::pair<GroupSpec, std::string>>{
             {g11, "gl(1|0)xgl(0|1)"}, {g12, "gl(1|1)xgl(0|1)"}}) {
        LeviEmbedding e = LeviEmbedding::parse(parent, levi_text);
        TruncationBox box(2);
        for (const auto& aw : enumerate_dominant(e.levi(), 1)) {
            VirtualModule a = VirtualModule::basis(e.levi(), aw);
            VirtualModule ind = induce(a, e, box).as_virtual();
            for (const auto& lam : enumerate_dominant(parent, box.bound)) {
                VirtualModule basis = VirtualModule::basis(parent, lam);
                CHECK(pair(ind, basis) == pair(a, restrict_to(basis, e)));
            }
        }
    }
}

TEST_CASE("box monotonicity of induce") {
    LeviEmbedding torus = LeviEmbedding::parse(g11, "gl(1|0)xgl(0|1)");
    for (const auto& aw : enumerate_dominant(torus.levi(), 2)) {
        VirtualModule a = VirtualModule::basis(torus.levi(), aw);
        FormalSeries small = induce(a, torus, TruncationBox(2));
        FormalSeries large = induce(a, torus, TruncationBox(4));
        for (const auto& [w, c] : small.coeffs) {
            auto it = large.coeffs.find(w);
            REQUIRE(it != large.coeffs.end());
            CHECK(it->second == c);
        }
    }
}

TEST_CASE("levi embedding validation") {
    CHECK(gen::thrown_code([&] { LeviEmbedding::parse(g11, "gl(1|0)"); }) == "GroupMismatch");
    CHECK(gen::thrown_code([&] {
              LeviEmbedding(GroupSpec::parse("gl(1|1)xgl(1|0)"), GroupSpec::gl(2, 1));
          }) == "GroupMismatch");
    LeviEmbedding e = LeviEmbedding::parse(GroupSpec::gl(2, 1), "gl(1|1)xgl(1|0)");
    CHECK(e.levi_to_parent() == std::vector<int>{0, 2, 1});
}

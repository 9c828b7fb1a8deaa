#include <random>
#include <set>

#include "doctest.h"
#include "gdet/groups.hpp"

using namespace gdet;

TEST_SUITE("groups") {

TEST_CASE("spec parsing") {
    const GroupSpec ab = parse_group_spec("C2xC6");
    CHECK(ab.kind == GroupKind::AbelianProduct);
    CHECK(ab.params == std::vector<long>{2, 6});

    const GroupSpec d3 = parse_group_spec("d3");
    CHECK(d3.kind == GroupKind::Dihedral);
    CHECK(FiniteGroup::make(d3)->order() == 6);

    const GroupSpec q2 = parse_group_spec("Q2");
    CHECK(q2.kind == GroupKind::GenQuaternion);
    CHECK(FiniteGroup::make(q2)->order() == 8);

    CHECK_THROWS_AS(parse_group_spec("D2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_group_spec("Q1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_group_spec("C0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_group_spec("Cx"), std::invalid_argument);
    CHECK_THROWS_AS(parse_group_spec(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_group_spec("Z5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_group_spec("C2yC3"), std::invalid_argument);
}

TEST_CASE("spec round-trip") {
    for (const char* s : {"C2", "C2xC6", "C3xC3xC3", "D3", "D10", "Q2", "Q7"}) {
        const GroupSpec spec = parse_group_spec(s);
        CHECK(spec.str() == s);
        CHECK(parse_group_spec(spec.str()) == spec);
    }
    CHECK(parse_group_spec("c2Xc6").str() == "C2xC6");
}

TEST_CASE("multiplication examples") {
    auto d3 = FiniteGroup::make("D3");
    // (a^2 b)(a b) = a^2 (b a) b = a^2 a^-1 b^2 = a
    CHECK(d3->mul(GroupElement{{2, 1}}, GroupElement{{1, 1}}) == GroupElement{{1, 0}});

    auto q2 = FiniteGroup::make("Q2");
    CHECK(q2->mul(GroupElement{{0, 1}}, GroupElement{{0, 1}}) == GroupElement{{2, 0}});

    for (auto g : d3->elements()) {
        CHECK(d3->mul(d3->identity(), g) == g);
        CHECK(d3->mul(g, d3->identity()) == g);
    }
}

TEST_CASE("inverse examples") {
    auto d3 = FiniteGroup::make("D3");
    CHECK(d3->inv(GroupElement{{1, 0}}) == GroupElement{{2, 0}});

    auto q2 = FiniteGroup::make("Q2");
    CHECK(q2->inv(GroupElement{{0, 1}}) == GroupElement{{2, 1}});

    auto c22 = FiniteGroup::make("C2xC2");
    CHECK(c22->inv(GroupElement{{1, 1}}) == GroupElement{{1, 1}});

    for (auto G : {FiniteGroup::make("D4"), FiniteGroup::make("Q3"), FiniteGroup::make("C2xC3")})
        for (auto g : G->elements()) CHECK(G->mul(g, G->inv(g)) == G->identity());
}

TEST_CASE("element enumeration and naming") {
    auto d3 = FiniteGroup::make("D3");
    std::vector<std::string> names;
    for (long i = 0; i < d3->order(); ++i) names.push_back(d3->element_name(i));
    CHECK(names == std::vector<std::string>{"e", "a", "a^2", "b", "a*b", "a^2*b"});

    CHECK(FiniteGroup::make("Q3")->order() == 12);
    auto c1 = FiniteGroup::make("C1");
    CHECK(c1->order() == 1);
    CHECK(c1->element_name(0) == "e");

    auto c22 = FiniteGroup::make("C2xC2");
    CHECK(c22->element_name(0) == "(0,0)");
    CHECK(c22->element_name(3) == "(1,1)");
    CHECK(c22->element_by_name("(1,0)") == GroupElement{{1, 0}});

    // name round-trip
    for (auto G : {FiniteGroup::make("D4"), FiniteGroup::make("Q2"), FiniteGroup::make("C6"),
                   FiniteGroup::make("C2xC4")})
        for (long i = 0; i < G->order(); ++i)
            CHECK(G->index_of(G->element_by_name(G->element_name(i))) == i);

    CHECK_THROWS_AS(d3->element_by_name("a^9"), std::invalid_argument);
    CHECK_THROWS_AS(d3->element_by_name("c"), std::invalid_argument);
}

TEST_CASE("index bijection") {
    for (auto G : {FiniteGroup::make("C2xC6"), FiniteGroup::make("D5"), FiniteGroup::make("Q4")}) {
        std::set<GroupElement> seen;
        for (long i = 0; i < G->order(); ++i) {
            CHECK(G->index_of(G->element(i)) == i);
            seen.insert(G->element(i));
        }
        CHECK(static_cast<long>(seen.size()) == G->order());
    }
}

TEST_CASE("associativity") {
    // exhaustive for order <= 16
    for (auto G : {FiniteGroup::make("D4"), FiniteGroup::make("Q2"), FiniteGroup::make("Q4"),
                   FiniteGroup::make("C2xC8"), FiniteGroup::make("D8")}) {
        REQUIRE(G->order() <= 16);
        for (auto x : G->elements())
            for (auto y : G->elements())
                for (auto z : G->elements())
                    CHECK(G->mul(G->mul(x, y), z) == G->mul(x, G->mul(y, z)));
    }
    // sampled for larger groups
    std::mt19937_64 rng(5);
    for (auto G : {FiniteGroup::make("D9"), FiniteGroup::make("Q5")}) {
        for (int t = 0; t < 1000; ++t) {
            auto pick = [&]() { return G->element(static_cast<long>(rng() % G->order())); };
            const GroupElement x = pick(), y = pick(), z = pick();
            CHECK(G->mul(G->mul(x, y), z) == G->mul(x, G->mul(y, z)));
        }
    }
}

TEST_CASE("rotation subgroup") {
    for (auto G : {FiniteGroup::make("D5"), FiniteGroup::make("Q3")}) {
        long inside = 0;
        for (auto g : G->elements())
            if (G->in_rotation_subgroup(g)) ++inside;
        CHECK(inside == G->rotation_order());
        CHECK(2 * inside == G->order());

        // defining relation b g = g^-1 b on <a>
        const GroupElement b = G->reflection(0);
        for (long k = 0; k < G->rotation_order(); ++k) {
            const GroupElement g = G->rotation(k);
            CHECK(G->mul(b, g) == G->mul(G->inv(g), b));
        }
    }
    CHECK_THROWS_AS(FiniteGroup::make("C4")->rotation_order(), std::domain_error);
}

TEST_CASE("invalid elements are rejected") {
    auto d3 = FiniteGroup::make("D3");
    CHECK_THROWS_AS(d3->mul(GroupElement{{3, 0}}, GroupElement{{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(d3->inv(GroupElement{{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(d3->index_of(GroupElement{{0}}), std::invalid_argument);
}

TEST_CASE("conductors") {
    CHECK(FiniteGroup::make("C2xC6")->conductor() == 6);
    CHECK(FiniteGroup::make("C1")->conductor() == 1);
    CHECK(FiniteGroup::make("D3")->conductor() == 6);
    CHECK(FiniteGroup::make("D4")->conductor() == 4);
    CHECK(FiniteGroup::make("Q2")->conductor() == 4);
    CHECK(FiniteGroup::make("Q3")->conductor() == 12);
}

}  // TEST_SUITE

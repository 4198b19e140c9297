#include <catch2/catch_amalgamated.hpp>

#include "carlitzlab/gf.hpp"
#include "oracles.hpp"

using namespace carlitzlab;

TEST_CASE("prime field arithmetic") {
    auto f3 = FieldSpec::make(3, 1);
    GFElem two{f3, 2};
    REQUIRE((two * two).v == 1);
    REQUIRE((two + two).v == 1);
    REQUIRE((two - two).v == 0);

    auto f5 = FieldSpec::make(5, 1);
    GFElem three{f5, 3};
    REQUIRE((three / three).v == 1);
}

TEST_CASE("extension field arithmetic matches naive reduction") {
    auto f4 = FieldSpec::make(2, 2);  // w^2+w+1
    GFElem w{f4, 2};
    GFElem wp1{f4, 3};
    REQUIRE(w * w == wp1);
    for (const GFElem& a : gf_enumerate(f4))
        for (const GFElem& b : gf_enumerate(f4)) REQUIRE(a * b == oracles::naive_gf_mul(a, b));

    auto f9 = FieldSpec::make(3, 2);
    for (const GFElem& a : gf_enumerate(f9))
        for (const GFElem& b : gf_enumerate(f9)) REQUIRE(a * b == oracles::naive_gf_mul(a, b));
}

TEST_CASE("frobenius x -> x^q fixes F_q") {
    for (std::uint64_t q : {2, 3, 4, 5, 8, 9, 25}) {
        unsigned p = q == 4 || q == 8 ? 2 : (q == 9 ? 3 : (q == 25 ? 5 : static_cast<unsigned>(q)));
        unsigned nu = q == 4 || q == 9 || q == 25 ? 2 : (q == 8 ? 3 : 1);
        auto spec = FieldSpec::make(p, nu);
        for (const GFElem& a : gf_enumerate(spec)) REQUIRE(gf_frobenius_q(a) == a);
    }
}

TEST_CASE("frobenius p-power substep in F_4") {
    auto f4 = FieldSpec::make(2, 2);
    GFElem w{f4, 2};
    REQUIRE(f4->pow(w.v, 2) == 3);  // w^2 = w+1
}

TEST_CASE("multiplicative group has order q-1") {
    for (unsigned q : {3u, 4u, 5u, 8u, 9u}) {
        unsigned p = q == 4 || q == 8 ? 2 : (q == 9 ? 3 : q);
        unsigned nu = q == 4 || q == 9 ? 2 : (q == 8 ? 3 : 1);
        auto spec = FieldSpec::make(p, nu);
        for (const GFElem& a : gf_enumerate(spec)) {
            if (a.v == 0) continue;
            REQUIRE(spec->pow(a.v, q - 1) == 1);
        }
    }
}

TEST_CASE("ring laws on exhaustive triples for q <= 9") {
    for (auto [p, nu] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {5, 1},
                                                                   {7, 1}, {2, 2}, {2, 3}, {3, 2}}) {
        auto spec = FieldSpec::make(p, nu);
        auto all = gf_enumerate(spec);
        for (const GFElem& a : all)
            for (const GFElem& b : all) {
                REQUIRE(a + b == b + a);
                REQUIRE(a * b == b * a);
                for (const GFElem& c : all) {
                    REQUIRE((a + b) + c == a + (b + c));
                    REQUIRE((a * b) * c == a * (b * c));
                    REQUIRE(a * (b + c) == a * b + a * c);
                }
            }
    }
}

TEST_CASE("enumeration is deterministic and lexicographic") {
    auto f2 = FieldSpec::make(2, 1);
    auto e2 = gf_enumerate(f2);
    REQUIRE(e2.size() == 2);
    REQUIRE(e2[0].v == 0);
    REQUIRE(e2[1].v == 1);

    auto f4 = FieldSpec::make(2, 2);
    auto e4 = gf_enumerate(f4);
    REQUIRE(e4.size() == 4);
    // 0, 1, w, w+1
    REQUIRE(e4[0].coords() == std::vector<unsigned>{0, 0});
    REQUIRE(e4[1].coords() == std::vector<unsigned>{1, 0});
    REQUIRE(e4[2].coords() == std::vector<unsigned>{0, 1});
    REQUIRE(e4[3].coords() == std::vector<unsigned>{1, 1});
}

TEST_CASE("error paths") {
    auto f3 = FieldSpec::make(3, 1);
    auto f5 = FieldSpec::make(5, 1);
    GFElem a{f3, 1}, b{f5, 1};
    REQUIRE_THROWS_AS(a + b, SpecMismatch);
    REQUIRE_THROWS_AS(a / GFElem(f3, 0), DivByZero);
    REQUIRE_THROWS_AS(FieldSpec::make(4, 1), Error);                      // 4 not prime
    REQUIRE_THROWS_AS(FieldSpec::make(3, 2, {2, 0, 1}), Error);           // w^2+2 reducible
    REQUIRE_NOTHROW(FieldSpec::make(3, 2, {1, 0, 1}));                    // w^2+1 irreducible
    {
        Caps c = caps();
        c.max_q = 8;
        ScopedCaps sc(c);
        REQUIRE_THROWS_AS(FieldSpec::make(3, 2), TooLarge);
    }
}

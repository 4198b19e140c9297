#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "carlitzlab/poly.hpp"
#include "carlitzlab/textio.hpp"
#include "oracles.hpp"

using namespace carlitzlab;

namespace {
Poly rand_poly(const FieldSpecPtr& spec, int max_deg, std::mt19937& rng) {
    std::uniform_int_distribution<int> d(0, max_deg);
    int deg = d(rng);
    std::uniform_int_distribution<gf_code> c(0, static_cast<gf_code>(spec->q() - 1));
    std::vector<gf_code> v(static_cast<std::size_t>(deg) + 1);
    for (auto& x : v) x = c(rng);
    return Poly(spec, std::move(v));
}
}  // namespace

TEST_CASE("ring arithmetic basics") {
    auto f3 = FieldSpec::make(3, 1);
    Poly t = Poly::t(f3);
    Poly one = Poly::one(f3);
    REQUIRE(to_text((t + one) * (t + Poly::constant(f3, 2))) == "T^2+2");
    auto [q, r] = poly_divrem(t * t, t);
    REQUIRE(q == t);
    REQUIRE(r.is_zero());

    auto f2 = FieldSpec::make(2, 1);
    Poly s = Poly::t(f2) + Poly::one(f2);
    REQUIRE((s + s).is_zero());

    REQUIRE_THROWS_AS(poly_divrem(t, Poly::zero(f3)), DivByZero);
}

TEST_CASE("extended gcd and Bezout identity") {
    auto f3 = FieldSpec::make(3, 1);
    Poly t = Poly::t(f3);
    Poly one = Poly::one(f3);
    {
        auto [g, s1, s2] = poly_xgcd(t, t + one);
        REQUIRE(g.is_one());
        REQUIRE(s1 == Poly::constant(f3, 2));
        REQUIRE(s2 == one);
    }
    {
        auto [g, s1, s2] = poly_xgcd(t * t, t);
        REQUIRE(g == t);
        REQUIRE(s1.is_zero());
        REQUIRE(s2 == one);
    }
    {
        Poly m = t * t + one;
        auto [g, s1, s2] = poly_xgcd(m.scaled(2), m.scaled(2));
        REQUIRE(g == m.monic());
        REQUIRE(m.scaled(2) * s1 + m.scaled(2) * s2 == g);
    }
    std::mt19937 rng(12345);
    for (int i = 0; i < 200; ++i) {
        Poly a = rand_poly(f3, 5, rng), b = rand_poly(f3, 5, rng);
        auto [g, s1, s2] = poly_xgcd(a, b);
        REQUIRE(a * s1 + b * s2 == g);
        if (!g.is_zero()) {
            REQUIRE(g.is_monic());
            REQUIRE((a % g).is_zero());
            REQUIRE((b % g).is_zero());
        }
    }
}

TEST_CASE("factorization recomposes and finds irreducibles") {
    auto f3 = FieldSpec::make(3, 1);
    Poly t = Poly::t(f3);
    Poly one = Poly::one(f3);
    {
        auto f = poly_factor(t * t + Poly::constant(f3, 2));
        REQUIRE(f.factors.size() == 2);
        REQUIRE(f.factors[0].first == t + one);
        REQUIRE(f.factors[1].first == t + Poly::constant(f3, 2));
    }
    auto f2 = FieldSpec::make(2, 1);
    Poly s = Poly::t(f2);
    REQUIRE(poly_is_irreducible(s * s + s + Poly::one(f2)));

    std::mt19937 rng(777);
    for (int i = 0; i < 100; ++i) {
        Poly m = rand_poly(f3, 6, rng);
        if (m.is_zero()) continue;
        auto f = poly_factor(m);
        REQUIRE(factorization_product(f, f3) == m);
        for (auto& [p, e] : f.factors) REQUIRE(poly_is_irreducible(p));
    }
    REQUIRE_THROWS_AS(poly_factor(Poly::zero(f3)), ZeroInput);
    {
        Caps c = caps();
        c.factor_deg = 3;
        ScopedCaps sc(c);
        REQUIRE_THROWS_AS(poly_factor(poly_pow(t, 4)), TooLarge);
    }
}

TEST_CASE("phi examples and brute-force oracle") {
    auto f3 = FieldSpec::make(3, 1);
    Poly t = Poly::t(f3);
    REQUIRE(phi(t) == 2);
    REQUIRE(phi(t * t) == 6);

    auto f2 = FieldSpec::make(2, 1);
    Poly s = Poly::t(f2);
    REQUIRE(phi(s * s + s + Poly::one(f2)) == 3);

    REQUIRE_THROWS_AS(phi(Poly::zero(f3)), ZeroInput);
    REQUIRE(phi(Poly::constant(f3, 2)) == 1);

    // oracle: coprime-residue count, monic polys of degree <= 3
    for (auto [p, nu] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
        auto spec = FieldSpec::make(p, nu);
        for (unsigned d = 1; d <= 3; ++d)
            for (const Poly& low : poly_enumerate_below(spec, d)) {
                std::vector<gf_code> v(low.coeffs());
                v.resize(d + 1, 0);
                v[d] = 1;
                Poly m(spec, std::move(v));
                REQUIRE(phi(m) == BigInt(oracles::brute_phi(m)));
            }
    }
}

TEST_CASE("phi is multiplicative on coprime arguments") {
    auto f3 = FieldSpec::make(3, 1);
    std::mt19937 rng(4242);
    int tested = 0;
    while (tested < 60) {
        Poly a = rand_poly(f3, 4, rng), b = rand_poly(f3, 4, rng);
        if (a.is_zero() || b.is_zero() || !poly_gcd(a, b).is_one()) continue;
        REQUIRE(phi(a * b) == phi(a) * phi(b));
        ++tested;
    }
}

TEST_CASE("unit residues") {
    auto f3 = FieldSpec::make(3, 1);
    Poly t = Poly::t(f3);
    {
        auto u = unit_residues(t);
        REQUIRE(u.size() == 2);
        REQUIRE(to_text(u[0]) == "1");
        REQUIRE(to_text(u[1]) == "2");
    }
    {
        auto u = unit_residues(t * t);
        REQUIRE(u.size() == 6);
        for (const Poly& r : u) REQUIRE(r.coeff(0) != 0);  // coprime to T^2 <=> nonzero constant
    }
    auto f2 = FieldSpec::make(2, 1);
    auto u2 = unit_residues(Poly::t(f2));
    REQUIRE(u2.size() == 1);
    REQUIRE(u2[0].is_one());
}

TEST_CASE("moebius function") {
    auto f3 = FieldSpec::make(3, 1);
    Poly t = Poly::t(f3);
    Poly one = Poly::one(f3);
    REQUIRE(poly_mobius(one) == 1);
    REQUIRE(poly_mobius(t * t) == 0);
    REQUIRE(poly_mobius(t * (t + one)) == 1);
    REQUIRE(poly_mobius(t) == -1);
}

TEST_CASE("polynomial text grammar") {
    auto f3 = FieldSpec::make(3, 1);
    Poly p = parse_poly("T^2+2*T+1", f3);
    REQUIRE(to_text(p) == "T^2+2*T+1");
    REQUIRE(parse_poly("1+T", f3) == parse_poly("T+1", f3));
    REQUIRE(to_text(parse_poly("0", f3)) == "0");
    REQUIRE(to_text(parse_poly("2*T^3 + T + 2", f3)) == "2*T^3+T+2");
    REQUIRE_THROWS_AS(parse_poly("T^^2", f3), ParseError);
    REQUIRE_THROWS_AS(parse_poly("w*T", f3), ParseError);  // no w when nu = 1

    auto f4 = FieldSpec::make(2, 2);
    Poly pw = parse_poly("(w+1)*T^2+w*T+1", f4);
    REQUIRE(to_text(pw) == "(w+1)*T^2+w*T+1");
    REQUIRE(parse_poly("w^1*T", f4) == parse_poly("w*T", f4));

    std::mt19937 rng(99);
    for (int i = 0; i < 100; ++i) {
        auto spec = (i % 2) ? f3 : FieldSpecPtr(f4);
        Poly a = rand_poly(spec, 6, rng);
        REQUIRE(parse_poly(to_text(a), spec) == a);
    }
}

TEST_CASE("divisor enumeration") {
    auto f3 = FieldSpec::make(3, 1);
    Poly t = Poly::t(f3);
    Poly one = Poly::one(f3);
    auto ds = monic_divisors(t * t * (t + one));
    REQUIRE(ds.size() == 6);  // 1, T, T+1, T^2, T(T+1), T^2(T+1)
    for (const Poly& d : ds) REQUIRE(((t * t * (t + one)) % d).is_zero());
}

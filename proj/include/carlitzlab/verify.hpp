#ifndef CARLITZLAB_VERIFY_HPP
#define CARLITZLAB_VERIFY_HPP

#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "carlitzlab/kummer.hpp"
#include "carlitzlab/textio.hpp"

namespace carlitzlab {

// Named worked-example suites, runnable from the CLI (verify-paper) and from
// the acceptance tests. Each check records expected vs computed.

struct Check {
    std::string what;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct ExampleReport {
    std::string name;
    std::vector<Check> checks;

    bool pass() const {
        for (const Check& c : checks)
            if (!c.pass) return false;
        return true;
    }

    template <class T, class U>
    void expect(const std::string& what, const T& expected, const U& computed) {
        std::ostringstream e, c;
        e << expected;
        c << computed;
        checks.push_back({what, e.str(), c.str(), e.str() == c.str()});
    }
    void expect_true(const std::string& what, bool computed) {
        checks.push_back({what, "true", computed ? "true" : "false", computed});
    }
};

namespace verify_detail {

inline FieldSpecPtr prime_field(std::uint64_t q, const std::string& need) {
    // q must be a prime power; examples that require q = p pass need = "q = p".
    for (unsigned p = 2; p <= q; ++p) {
        if (q % p != 0) continue;
        unsigned nu = 0;
        std::uint64_t x = q;
        while (x % p == 0) {
            x /= p;
            ++nu;
        }
        if (x != 1) throw HypothesisNotMet("q must be a prime power");
        if (nu > 1 && need == "q = p") throw HypothesisNotMet(need + " required for this example");
        return FieldSpec::make(p, nu);
    }
    throw HypothesisNotMet("q must be a prime power");
}

/// All subgroups of a given subgroup of the Galois group, by incremental
/// closure. Used by the suitable-q scan in the noredes example.
inline std::vector<Subgroup> subgroups_of(const CycFieldPtr& E, const Subgroup& g) {
    std::set<Subgroup> seen;
    std::vector<Subgroup> frontier{Subgroup::trivial(E)};
    seen.insert(frontier.front());
    while (!frontier.empty()) {
        Subgroup s = std::move(frontier.back());
        frontier.pop_back();
        for (const Poly& a : g.elements()) {
            if (s.contains(a)) continue;
            std::vector<Poly> gens = s.elements();
            gens.push_back(a);
            Subgroup bigger = Subgroup::from_generators(E, gens);
            if (seen.insert(bigger).second) frontier.push_back(bigger);
        }
    }
    return std::vector<Subgroup>(seen.begin(), seen.end());
}

inline bool quotient_is_cyclic(const CycFieldPtr& E, const Subgroup& upper,
                               const Subgroup& lower) {
    ActingGroup g = quotient_acting_group(E, upper, lower, Poly::one(E->spec()));
    for (std::size_t i = 0; i < g.size(); ++i)
        if (detail::element_order(g, static_cast<int>(i)) == g.size()) return true;
    return g.size() == 1;
}

}  // namespace verify_detail

/// The degree obstructions behind purity of the Kummer extension of
/// k(Lambda_T): for irreducible N of degree n >= 2 the cyclotomic degree
/// Phi(N) = q^n - 1 exceeds [L:k] = q(q-1), and for degree-1 polynomials a
/// proper root would force a minimal polynomial of degree p on a divisor of
/// X^{q-1} + (T+c).
struct PurityObstruction {
    bool higher_degree_ok = false;  // q^n - 1 > q(q-1) for all 2 <= n <= checked
    unsigned checked_up_to = 0;
    bool degree_one_ok = false;  // q - 1 < p
};

inline PurityObstruction purity_obstruction_check(const FieldSpecPtr& spec, unsigned max_n = 8) {
    PurityObstruction r;
    const std::uint64_t q = spec->q();
    r.higher_degree_ok = true;
    for (unsigned n = 2; n <= max_n; ++n) {
        BigInt lhs = bigint_pow(BigInt(q), n) - 1;
        if (lhs <= BigInt(q) * (q - 1)) r.higher_degree_ok = false;
        if (n <= 3)  // Phi(N) = q^n - 1 verified on the actual irreducibles
            for (const Poly& irr : monic_irreducibles(spec, n))
                if (phi(irr) != lhs) r.higher_degree_ok = false;
    }
    r.checked_up_to = max_n;
    r.degree_one_ok = q - 1 < spec->p();
    return r;
}

/// q = p odd: the splitting field L of X^q + TX - 1 over k(Lambda_T) is a
/// degree-p radical cyclotomic extension; the polynomial has no root in
/// k(Lambda_T) itself.
inline ExampleReport run_ejemplo4(std::uint64_t q) {
    ExampleReport r{("ejemplo4 (q=" + std::to_string(q) + ")"), {}};
    auto spec = verify_detail::prime_field(q, "q = p");
    if (spec->p() == 2) throw HypothesisNotMet("ejemplo4 needs odd q");
    Poly t = Poly::t(spec);
    auto K = CycField::make(t);

    // F(X) = X^q + T X - 1 over k(Lambda_T)
    std::vector<CycElem> F(static_cast<std::size_t>(q) + 1, CycElem::zero(K));
    F[0] = CycElem::from_ratfn(K, RatFn(-Poly::one(spec)));
    F[1] = CycElem::from_ratfn(K, RatFn(t));
    F[static_cast<std::size_t>(q)] = CycElem::one(K);
    auto roots = rational_root_in_cyclotomic(F, K);
    r.expect("roots of X^q+TX-1 in k(Lambda_T)", 0, roots.size());

    r.expect("[L:k(Lambda_T)] = p", spec->p(), kummer_splitting_degree(t, Poly::one(spec)));

    auto obs = purity_obstruction_check(spec);
    r.expect_true("purity obstruction, deg N >= 2 (Phi(N) > q(q-1))", obs.higher_degree_ok);
    r.expect_true("purity obstruction, deg N = 1 (q-1 < p)", obs.degree_one_ok);
    return r;
}

/// k(Lambda_{T^n})/k(Lambda_T) is pure, hence radical cyclotomic (q > 2).
inline ExampleReport run_ejemplo5(std::uint64_t q) {
    ExampleReport r{("ejemplo5 (q=" + std::to_string(q) + ")"), {}};
    auto spec = verify_detail::prime_field(q, "");
    if (q <= 2) throw HypothesisNotMet("ejemplo5 needs q > 2");
    Poly t = Poly::t(spec);
    Poly one = Poly::one(spec);
    for (unsigned n = 2; n <= 3; ++n) {
        auto E = CycField::make(poly_pow(t, n));
        std::vector<Poly> gens;
        for (unsigned k = 1; k < n; ++k)
            for (gf_code a = 1; a < spec->q(); ++a)
                gens.push_back(one + Poly::monomial(spec, a, k));
        auto h_t = Subgroup::from_generators(E, gens);  // Gal(E/k(Lambda_T))
        SubextSpec s(E, h_t, Subgroup::trivial(E));
        r.expect_true("k(Lambda_{T^" + std::to_string(n) + "})/k(Lambda_T) pure",
                      purity_check(s));
        if (n == 2)
            r.expect_true("k(Lambda_{T^2})/k(Lambda_T) radical cyclotomic",
                          is_radical_cyclotomic(s));
    }
    // contrast: k(Lambda_{T^2})/k is not pure
    auto E = CycField::make(t * t);
    SubextSpec whole(E, Subgroup::full_group(E), Subgroup::trivial(E));
    r.expect_true("k(Lambda_{T^2})/k not pure", !purity_check(whole));
    return r;
}

/// M = P^2 Q^2, sigma = 1 + PQ of order p; lambda_{PQ} lands in the fixed
/// field while lambda_{P^2}, lambda_{Q^2} do not, so cog(L/K) has elements
/// of order P and of order Q.
inline ExampleReport run_ejemplo6_1(std::uint64_t q) {
    ExampleReport r{("ejemplo6_1 (q=" + std::to_string(q) + ")"), {}};
    auto spec = verify_detail::prime_field(q, "");
    Poly t = Poly::t(spec);
    Poly one = Poly::one(spec);
    Poly P = t, Q = t + one;
    Poly M = P * P * Q * Q;
    auto E = CycField::make(M);
    auto sigma = Subgroup::from_generators(E, {one + P * Q});
    r.expect("order of sigma = 1+PQ", spec->p(), sigma.order());

    auto x_pq = torsion_point(E, P * Q);
    auto x_p2 = torsion_point(E, Q * Q);  // lambda_{P^2} = lambda^{Q^2}_M
    auto x_q2 = torsion_point(E, P * P);
    r.expect_true("lambda_{PQ} in K", fixed_by(x_pq, sigma));
    r.expect_true("lambda_{P^2} not in K", !fixed_by(x_p2, sigma));
    r.expect_true("lambda_{Q^2} not in K", !fixed_by(x_q2, sigma));

    SubextSpec s(E, sigma, Subgroup::trivial(E));
    r.expect("[L:K]", spec->p(), s.degree());
    r.expect("cog order of lambda_{P^2}", to_text(P), to_text(cog_element_order(s, TorsionElem(M, Q * Q))));
    r.expect("cog order of lambda_{Q^2}", to_text(Q), to_text(cog_element_order(s, TorsionElem(M, P * P))));
    return r;
}

/// M = P^3, sigma = 1 + P of order p; lambda^{P^2} is fixed, lambda^{P} is
/// not, and the class of lambda_{P^3} in cog(L/K) has order P^2.
inline ExampleReport run_ejemplo7_1(std::uint64_t q) {
    ExampleReport r{("ejemplo7_1 (q=" + std::to_string(q) + ")"), {}};
    auto spec = verify_detail::prime_field(q, "");
    if (spec->p() < 3) throw HypothesisNotMet("ejemplo7_1 needs p >= 3");
    Poly t = Poly::t(spec);
    Poly one = Poly::one(spec);
    Poly M = poly_pow(t, 3);
    auto E = CycField::make(M);
    auto sigma = Subgroup::from_generators(E, {one + t});
    r.expect("order of sigma = 1+P", spec->p(), sigma.order());

    auto x2 = torsion_point(E, t * t);  // lambda^{P^2}_{P^3}
    auto x1 = torsion_point(E, t);      // lambda^{P}_{P^3}
    r.expect_true("lambda^{P^2}_{P^3} in K", fixed_by(x2, sigma));
    r.expect_true("lambda^{P}_{P^3} not in K", !fixed_by(x1, sigma));

    SubextSpec s(E, sigma, Subgroup::trivial(E));
    r.expect("[L:K]", spec->p(), s.degree());
    r.expect("cog order of lambda_{P^3}", to_text(t * t),
             to_text(cog_element_order(s, TorsionElem::generator(M))));
    return r;
}

/// The splitting field L of X^T - 1 over k(Lambda_T): mu(L) = Lambda_T from
/// the worked argument, Gal(L/k(Lambda_T)) = C_p, and |cog| = q equals the
/// degree. Also exercises the matrix embedding theta.
inline ExampleReport run_ejemplo_schultheis(std::uint64_t q) {
    ExampleReport r{("ejemplo_schultheis (q=" + std::to_string(q) + ")"), {}};
    auto spec = verify_detail::prime_field(q, "q = p");
    if (spec->p() < 3) throw HypothesisNotMet("ejemplo_schultheis needs q = p >= 3");
    Poly t = Poly::t(spec);
    Poly one = Poly::one(spec);

    r.expect("[L:k(Lambda_T)] = p", spec->p(), kummer_splitting_degree(t, one));
    // mu(L) = Lambda_T is the example's derived input; cog through Hom
    BigInt cog = cog_order_trivial_action({spec->p()}, t);
    r.expect("|cog(L/k(Lambda_T))| = q", q, cog);
    r.expect("|cog| equals the degree", spec->p(), cog);

    r.expect("card G(T) = q*Phi(T)", BigInt(q) * (q - 1), theta_group_order(t));
    MatrixRep id = MatrixRep::identity(t);
    MatrixRep g(t, one, Poly::constant(spec, 2));
    r.expect_true("theta identity is neutral",
                  theta_compose(id, g) == g && theta_compose(g, id) == g);
    return r;
}

/// |cog(k(Lambda_{T^2})/k(Lambda_T))| = [k(Lambda_{T^2}):k(Lambda_T)]^2,
/// with ker N = Lambda_{T^2}, D Lambda_{T^2} = Lambda_T, |B^1| = q/..., all
/// through the cyclic-group homology of H_{T^2} = <1+T>.
inline ExampleReport run_ejemplo_entre_ciclotomicos(std::uint64_t q) {
    ExampleReport r{("ejemplo_entre_ciclotomicos (q=" + std::to_string(q) + ")"), {}};
    auto spec = verify_detail::prime_field(q, "q = p");
    if (spec->p() < 3) throw HypothesisNotMet("needs q = p > 2");
    const unsigned p = spec->p();
    Poly t = Poly::t(spec);
    Poly one = Poly::one(spec);
    Poly M = t * t;
    auto E = CycField::make(M);
    auto h_t2 = Subgroup::from_generators(E, {one + t});
    r.expect("card H_{T^2} = q^{d(n-1)} = p", p, h_t2.order());

    ActingGroup g = subgroup_acting_group(E, h_t2, M);
    CocycleGroup z = z1_group(g);
    r.expect("|Z^1(H_{T^2}, Lambda_{T^2})| = [L:K]^2", BigInt(p) * p, z.z1_order);

    // ker N = Lambda_{T^2}: the norm polynomial vanishes mod T^2
    Poly norm = Poly::zero(spec);
    Poly x = one;
    for (unsigned i = 0; i < p; ++i) {
        norm = (norm + x) % M;
        x = (x * (one + t)) % M;
    }
    r.expect("ker N = Lambda_{T^2} (norm = 0 mod T^2)", "0", to_text(norm));

    // D Lambda_{T^2} = Lambda_T: image of sigma - 1 is multiplication by T
    Poly image_level = (M / poly_gcd(M, (one + t) - one)).monic();
    r.expect("im(sigma-1) = Lambda_T", to_text(t), to_text(image_level));
    r.expect("|B^1| = |Lambda_{T^2}/Lambda_T|", BigInt(p), z.b1_order);
    r.expect("|H^1|", BigInt(p), z.h1_order);

    SubextSpec s(E, h_t2, Subgroup::trivial(E));
    r.expect("|cog(k(Lambda_{T^2})/k(Lambda_T))|", BigInt(p) * p, cog_order(s));
    auto bc = bound_check(s);
    r.expect_true("bound attained (mu differs but the bound is met exactly)",
                  bc.ok && bc.order == bc.bound);
    return r;
}

/// L = k(Lambda_{P^{2p-1}}), sigma = 1+P^2: |cog(L/E)| = q^{d(2p-2)} sits
/// strictly below the bound q^{d(2p-1)}.
inline ExampleReport run_ejemplo_no_se_alcanza_cota(std::uint64_t q) {
    ExampleReport r{("ejemplo_no_se_alcanza_cota (q=" + std::to_string(q) + ")"), {}};
    auto spec = verify_detail::prime_field(q, "q = p");
    if (spec->p() < 3) throw HypothesisNotMet("needs odd p");
    const unsigned p = spec->p();
    Poly t = Poly::t(spec);
    Poly one = Poly::one(spec);
    Poly M = poly_pow(t, 2 * p - 1);
    auto E = CycField::make(M);
    auto sigma = Subgroup::from_generators(E, {one + t * t});
    r.expect("order of sigma = 1+P^2", p, sigma.order());
    r.expect("mu(E) = Lambda_{P^2}", to_text(t * t), to_text(mu_of_fixed_field(E, sigma)));

    ActingGroup g = subgroup_acting_group(E, sigma, M);
    CocycleGroup z = z1_group(g);
    r.expect("ker N = Lambda_{P^{2p-2}}", bigint_pow(BigInt(q), 2 * p - 2), z.z1_order);
    r.expect("|B^1| = q^{d(2p-3)}", bigint_pow(BigInt(q), 2 * p - 3), z.b1_order);
    r.expect("|H^1| = q^d", BigInt(q), z.h1_order);

    SubextSpec s(E, sigma, Subgroup::trivial(E));
    BigInt cog = cog_order(s);
    r.expect("|cog(L/E)| = q^{d(2p-2)}", bigint_pow(BigInt(q), 2 * p - 2), cog);
    auto bc = bound_check(s);
    r.expect("bound = q^{d(2p-1)}", bigint_pow(BigInt(q), 2 * p - 1), bc.bound);
    r.expect_true("strict inequality |cog| < bound", bc.ok && bc.order < bc.bound);
    return r;
}

/// Radicality is not hereditary: inside k(Lambda_{T^5}) over k(Lambda_T),
/// a subextension with group C_{p^2} and mu(L') = mu(K) is not radical.
/// <1+T> has order p^2 in H_{T^5} for any q of characteristic p = 3; the
/// C_{p^2}/mu-equal instance needs a suitable q (nu >= 2) and is built at
/// q = 9, while at q = 3 an exhaustive scan confirms no instance exists.
inline ExampleReport run_noredes_cogalois(std::uint64_t q) {
    ExampleReport r{("noredes_cogalois (q=" + std::to_string(q) + ")"), {}};
    auto spec = verify_detail::prime_field(q, "");
    if (spec->p() != 3) throw HypothesisNotMet("this example is pinned to characteristic 3");
    const unsigned p = spec->p();
    {
        Poly t = Poly::t(spec);
        Poly one = Poly::one(spec);
        Poly M = poly_pow(t, 5);
        auto E = CycField::make(M);
        std::vector<Poly> upg;
        for (unsigned k = 1; k <= 4; ++k)
            for (gf_code a = 1; a < spec->q(); ++a)
                upg.push_back(one + Poly::monomial(spec, a, k));
        auto h_m = Subgroup::from_generators(E, upg);
        r.expect("card H_{T^5} = q^4", bigint_pow(BigInt(q), 4), h_m.order());
        auto cyc = Subgroup::from_generators(E, {one + t});
        r.expect("order of 1+T in H_{T^5} = p^2", p * p, cyc.order());

        if (spec->nu() == 1) {
            // suitable-q scan: no order-9 subgroup yields both a cyclic
            // C_9 quotient and mu(L') = Lambda_T
            std::size_t qualifying = 0;
            for (const Subgroup& h : verify_detail::subgroups_of(E, h_m)) {
                if (h.order() != static_cast<std::size_t>(p) * p) continue;
                if (!verify_detail::quotient_is_cyclic(E, h_m, h)) continue;
                if (mu_of_fixed_field(E, h) == t) ++qualifying;
            }
            r.expect("C_9 subextensions with mu = Lambda_T at q = 3", 0, qualifying);
        }
    }
    {
        // the suitable-q instance, q = 9
        auto spec9 = FieldSpec::make(3, 2);
        Poly t = Poly::t(spec9);
        Poly one = Poly::one(spec9);
        Poly w = Poly::constant(spec9, static_cast<gf_code>(spec9->p()));
        Poly M = poly_pow(t, 5);
        auto E = CycField::make(M);
        std::vector<Poly> upg;
        for (unsigned k = 1; k <= 4; ++k) {
            upg.push_back(one + poly_pow(t, k));
            upg.push_back(one + w * poly_pow(t, k));
        }
        auto h_up = Subgroup::from_generators(E, upg);
        auto h_low = Subgroup::from_generators(
            E, {one + w * t, one + t * t, one + w * t * t, one + poly_pow(t, 4),
                one + w * poly_pow(t, 4)});
        SubextSpec s(E, h_up, h_low);
        r.expect("q=9: [L':K] = p^2", p * p, s.degree());
        r.expect_true("q=9: Gal(L'/K) cyclic",
                      verify_detail::quotient_is_cyclic(E, h_up, h_low));
        r.expect("q=9: mu(L')", to_text(t), to_text(mu_of_fixed_field(E, h_low)));
        r.expect("q=9: mu(K)", to_text(t), to_text(mu_of_fixed_field(E, h_up)));
        r.expect_true("q=9: L'/K not radical (C_{p^2} criterion)", not_radical_via_c_p2(s));
        r.expect_true("q=9: is_radical agrees", !is_radical(s));
    }
    return r;
}

inline std::vector<std::string> verify_example_names() {
    return {"ejemplo4",
            "ejemplo5",
            "ejemplo6_1",
            "ejemplo7_1",
            "ejemplo_schultheis",
            "ejemplo_entre_ciclotomicos",
            "ejemplo_no_se_alcanza_cota",
            "noredes_cogalois"};
}

/// Runs one named suite at the given q (each suite validates its own
/// hypotheses on q). ejemplo4 defaults to both q = 3 and q = 5 when no q
/// is forced.
inline std::vector<ExampleReport> run_named_example(const std::string& name,
                                                    std::optional<std::uint64_t> q) {
    auto at = [&](std::uint64_t dflt) { return q.value_or(dflt); };
    if (name == "ejemplo4") {
        if (q) return {run_ejemplo4(*q)};
        return {run_ejemplo4(3), run_ejemplo4(5)};
    }
    if (name == "ejemplo5") return {run_ejemplo5(at(3))};
    if (name == "ejemplo6_1") return {run_ejemplo6_1(at(3))};
    if (name == "ejemplo7_1") return {run_ejemplo7_1(at(3))};
    if (name == "ejemplo_schultheis") return {run_ejemplo_schultheis(at(3))};
    if (name == "ejemplo_entre_ciclotomicos") return {run_ejemplo_entre_ciclotomicos(at(3))};
    if (name == "ejemplo_no_se_alcanza_cota") return {run_ejemplo_no_se_alcanza_cota(at(3))};
    if (name == "noredes_cogalois") return {run_noredes_cogalois(at(3))};
    throw Error("unknown example: " + name);
}

}  // namespace carlitzlab

#endif

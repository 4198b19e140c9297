#ifndef CARLITZLAB_KUMMER_HPP
#define CARLITZLAB_KUMMER_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "carlitzlab/cogalois.hpp"
#include "carlitzlab/cycfield.hpp"

namespace carlitzlab {

// ---------------------------------------------------------------------------
// The matrix embedding of Gal(splitting field of X^N - z / k) into the group
// G(N) of matrices (1 0; B A) over R_T/(N), A a unit.

struct MatrixRep {
    Poly N;
    Poly B;  // translation part, mod N
    Poly A;  // unit part, mod N

    MatrixRep(Poly modulus, const Poly& b, const Poly& a) : N(std::move(modulus)) {
        B = b % N;
        A = a % N;
        if (!poly_gcd(A, N).is_one()) throw Error("matrix unit entry must be coprime to N");
    }

    static MatrixRep identity(const Poly& modulus) {
        return MatrixRep(modulus, Poly::zero(modulus.spec()), Poly::one(modulus.spec()));
    }

    friend bool operator==(const MatrixRep& x, const MatrixRep& y) {
        return x.N == y.N && x.B == y.B && x.A == y.A;
    }
};

/// (B, A) * (B', A') = (B + B'A, A A') mod N.
inline MatrixRep theta_compose(const MatrixRep& x, const MatrixRep& y) {
    if (x.N != y.N) throw ModulusMismatch("matrix reps at different levels");
    return MatrixRep(x.N, x.B + y.B * x.A, x.A * y.A);
}

/// card(G(N)) = q^{deg N} * Phi(N).
inline BigInt theta_group_order(const Poly& N) {
    if (N.deg() < 1) throw Error("theta group needs deg N >= 1");
    return bigint_pow(BigInt(N.spec()->q()), static_cast<std::uint64_t>(N.deg())) * phi(N);
}

// ---------------------------------------------------------------------------

/// Decides solvability of C_M(u) = z over R_T and returns a solution when
/// one exists. C_M is F_q-linear and deg C_M(u) = q^{deg M} deg u for
/// deg u >= 1, so any solution has degree at most max(1, deg z / q^{deg M})
/// (the extra 1 absorbs the only possible top-degree cancellation, q = 2
/// with deg u = 1); the rest is a linear system over F_q on the coefficient
/// vector of u.
inline std::optional<Poly> carlitz_preimage(const Poly& M, const Poly& z) {
    const auto& spec = M.spec();
    if (M.is_constant() || !M.is_monic()) throw Error("preimage needs monic nonconstant M");
    if (z.is_zero()) return Poly::zero(spec);

    std::uint64_t qm = 1;
    for (int i = 0; i < M.deg(); ++i) qm *= spec->q();
    std::uint64_t bound = 1;
    if (z.deg() >= 0) {
        std::uint64_t dz = static_cast<std::uint64_t>(z.deg());
        bound = std::max<std::uint64_t>(1, (dz + qm - 1) / qm);
    }

    CarlitzOp op = carlitz_coeffs(M);
    PolyAlgebra alg{spec};
    std::vector<Poly> images;
    for (std::uint64_t j = 0; j <= bound; ++j)
        images.push_back(carlitz_apply(op, Poly::monomial(spec, 1, j), alg));

    int max_deg = z.deg();
    for (const Poly& im : images) max_deg = std::max(max_deg, im.deg());
    const std::size_t rows = static_cast<std::size_t>(max_deg + 1);
    const std::size_t cols = images.size();

    // Gaussian elimination over F_q on [images | z].
    std::vector<std::vector<gf_code>> mat(rows, std::vector<gf_code>(cols + 1, 0));
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < rows; ++i) mat[i][j] = images[j].coeff(i);
    for (std::size_t i = 0; i < rows; ++i) mat[i][cols] = z.coeff(i);

    std::vector<int> pivot_col(rows, -1);
    std::size_t rank_row = 0;
    for (std::size_t col = 0; col < cols && rank_row < rows; ++col) {
        std::size_t sel = rank_row;
        while (sel < rows && mat[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(mat[sel], mat[rank_row]);
        gf_code inv = spec->inv(mat[rank_row][col]);
        for (std::size_t j = col; j <= cols; ++j) mat[rank_row][j] = spec->mul(mat[rank_row][j], inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank_row || mat[i][col] == 0) continue;
            gf_code f = mat[i][col];
            for (std::size_t j = col; j <= cols; ++j)
                mat[i][j] = spec->sub(mat[i][j], spec->mul(f, mat[rank_row][j]));
        }
        pivot_col[rank_row] = static_cast<int>(col);
        ++rank_row;
    }
    for (std::size_t i = rank_row; i < rows; ++i)
        if (mat[i][cols] != 0) return std::nullopt;

    std::vector<gf_code> u(cols, 0);
    for (std::size_t i = 0; i < rank_row; ++i)
        if (pivot_col[i] >= 0) u[static_cast<std::size_t>(pivot_col[i])] = mat[i][cols];
    Poly sol(spec, std::move(u));
    if (carlitz_apply(op, sol, alg) != z) return std::nullopt;  // exact re-verification
    return sol;
}

/// [splitting field of X^P - z : k(lambda_P)] = q^{deg P} when C_P(u) = z
/// has no solution in R_T (the Hsu condition).
inline BigInt kummer_splitting_degree(const Poly& P, const Poly& z) {
    if (!poly_is_irreducible(P) || !P.is_monic())
        throw HypothesisNotMet("P must be monic irreducible");
    if (carlitz_preimage(P, z).has_value())
        throw HypothesisNotMet("z has a Carlitz preimage in R_T");
    return bigint_pow(BigInt(P.spec()->q()), static_cast<std::uint64_t>(P.deg()));
}

// ---------------------------------------------------------------------------
// Root finding over K = k(lambda_P) for deg P = 1, where K is rational:
// Psi_P(X) = X^{q-1} + (T + c) for P = T + c, so T = -lambda^{q-1} - c and
// K = F_q(lambda).

namespace detail {

/// Substitutes T -> subst into a polynomial over F_q, yielding a polynomial
/// in the new variable.
inline Poly compose_poly(const Poly& f, const Poly& subst) {
    Poly acc = Poly::zero(f.spec());
    for (int k = f.deg(); k >= 0; --k) {
        acc = acc * subst + Poly::constant(f.spec(), f.coeff(static_cast<std::size_t>(k)));
    }
    return acc;
}

}  // namespace detail

/// All roots in K = k(lambda_P) of a polynomial F over K, for deg P = 1.
/// Clears denominators to a primitive polynomial over the UFD F_q[lambda],
/// scans the rational-root candidates and keeps the exact roots.
inline std::vector<CycElem> rational_root_in_cyclotomic(const std::vector<CycElem>& F,
                                                        const CycFieldPtr& K) {
    const Poly& P = K->level();
    if (P.deg() != 1) throw DegreeNotOne("root scan needs deg P = 1");
    const auto& spec = K->spec();
    const std::uint64_t q = spec->q();
    gf_code c = P.coeff(0);
    // T = -lambda^{q-1} - c in the lambda coordinate
    Poly t_sub = Poly::monomial(spec, spec->neg(1), static_cast<std::size_t>(q - 1)) -
                 Poly::constant(spec, c);

    // Each coefficient of F becomes num/den over F_q[lambda].
    auto to_lambda = [&](const CycElem& x) {
        Poly num = Poly::zero(spec), den = Poly::one(spec);
        for (std::size_t j = 0; j < x.coeffs().size(); ++j) {
            const RatFn& a = x.coeffs()[j];
            if (a.is_zero()) continue;
            Poly nj = detail::compose_poly(a.num(), t_sub).shifted(j);
            Poly dj = detail::compose_poly(a.den(), t_sub);
            num = num * dj + nj * den;
            den = den * dj;
        }
        Poly g = poly_gcd(num, den);
        if (!g.is_one() && !num.is_zero()) {
            num = num / g;
            den = den / g;
        }
        return std::make_pair(num, den);
    };

    std::vector<std::pair<Poly, Poly>> coeffs;
    coeffs.reserve(F.size());
    for (const CycElem& x : F) {
        check_same_field(x.field(), K);
        coeffs.push_back(to_lambda(x));
    }
    while (!coeffs.empty() && coeffs.back().first.is_zero()) coeffs.pop_back();
    if (coeffs.empty()) throw Error("cannot scan roots of the zero polynomial");

    // clear denominators, then divide out the content
    Poly lcm_den = Poly::one(spec);
    for (const auto& [n, d] : coeffs) lcm_den = poly_lcm(lcm_den, d);
    std::vector<Poly> prim;
    prim.reserve(coeffs.size());
    for (const auto& [n, d] : coeffs) prim.push_back(n * (lcm_den / d));
    Poly content = Poly::zero(spec);
    for (const Poly& pc : prim) content = poly_gcd(content, pc);
    if (!content.is_zero() && !content.is_one())
        for (Poly& pc : prim) pc = pc / content;

    // factor out X^k before the divisor scan so a zero constant term cannot
    // hide the nonzero roots
    std::size_t strip = 0;
    while (strip < prim.size() && prim[strip].is_zero()) ++strip;
    bool zero_is_root = strip > 0;
    std::vector<Poly> core(prim.begin() + static_cast<std::ptrdiff_t>(strip), prim.end());

    auto lam_eval = [&](const RatFn& u) {
        // F(u) over F_q(lambda), exact
        RatFn acc = RatFn::zero(spec);
        for (std::size_t k = prim.size(); k-- > 0;) acc = acc * u + RatFn(prim[k]);
        return acc;
    };

    // Convert a rational function in lambda back to the field: reduce
    // lambda^{q-1} -> -(T+c) and divide.
    auto to_field = [&](const RatFn& u) {
        auto reduce = [&](const Poly& f) {
            KxPoly v(static_cast<std::size_t>(q - 1), RatFn::zero(spec));
            RatFn base{-(Poly::t(spec) + Poly::constant(spec, c))};
            for (int k = f.deg(); k >= 0; --k) {
                auto kk = static_cast<std::uint64_t>(k);
                RatFn factor = RatFn(Poly::constant(spec, f.coeff(static_cast<std::size_t>(k))));
                for (std::uint64_t rep = 0; rep < kk / (q - 1); ++rep) factor = factor * base;
                std::size_t pos = static_cast<std::size_t>(kk % (q - 1));
                v[pos] = v[pos] + factor;
            }
            return CycElem(K, std::move(v));
        };
        return reduce(u.num()) / reduce(u.den());
    };

    std::set<KxPoly> seen;
    std::vector<CycElem> roots;
    auto try_candidate = [&](const RatFn& u) {
        if (!lam_eval(u).is_zero()) return;
        CycElem r = to_field(u);
        if (seen.insert(r.coeffs()).second) roots.push_back(std::move(r));
    };

    if (zero_is_root) try_candidate(RatFn::zero(spec));
    std::vector<Poly> nums{Poly::one(spec)}, dens{Poly::one(spec)};
    for (const Poly& d : monic_divisors(core.front())) nums.push_back(d);
    for (const Poly& d : monic_divisors(core.back())) dens.push_back(d);
    std::sort(nums.begin(), nums.end());
    nums.erase(std::unique(nums.begin(), nums.end()), nums.end());
    std::sort(dens.begin(), dens.end());
    dens.erase(std::unique(dens.begin(), dens.end()), dens.end());
    for (const Poly& n : nums)
        for (const Poly& d : dens) {
            if (!poly_gcd(n, d).is_one()) continue;
            for (gf_code a = 1; a < q; ++a) try_candidate(RatFn(n.scaled(a), d));
        }
    return roots;
}

// ---------------------------------------------------------------------------

/// Checks that alpha + beta generates Lambda_{MN} when order(alpha) = M,
/// order(beta) = N and gcd(M, N) = 1, re-deriving the Bezout recovery
/// alpha = (alpha+beta)^{N S_2} exactly in torsion arithmetic.
inline bool primitive_element_check(const Poly& M, const Poly& N, const TorsionElem& alpha,
                                    const TorsionElem& beta) {
    if (!poly_gcd(M, N).is_one()) throw NotCoprime("M and N must be coprime");
    Poly mn = (M * N).monic();
    if (alpha.modulus() != mn || beta.modulus() != mn)
        throw ModulusMismatch("points must live in Lambda_{MN}");
    if (torsion_order(alpha) != M.monic() || torsion_order(beta) != N.monic())
        throw WrongOrders("orders must be exactly M and N");

    TorsionElem sum = torsion_add(alpha, beta);
    if (!torsion_act(mn, sum).is_zero()) return false;  // (alpha+beta)^{MN} = 0

    auto [g, s1, s2] = poly_xgcd(M, N);
    if (!g.is_one()) throw NotCoprime("M and N must be coprime");
    // alpha = (alpha+beta)^{N S_2} and beta = (alpha+beta)^{M S_1}
    if (torsion_act(N * s2, sum) != alpha) return false;
    if (torsion_act(M * s1, sum) != beta) return false;

    return poly_gcd(sum.residue(), mn).is_one();
}

}  // namespace carlitzlab

#endif

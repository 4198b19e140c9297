#ifndef CARLITZLAB_TEST_ORACLES_HPP
#define CARLITZLAB_TEST_ORACLES_HPP

// Test-side oracles, independent of the library implementation paths they
// check. Brute force everywhere: residue scans for Phi, naive subfield
// arithmetic for F_q, plain polynomial substitution for operator composition,
// and full-table scans for cocycle groups.

#include <cstdint>
#include <vector>

#include "carlitzlab/cogalois.hpp"

namespace oracles {

using namespace carlitzlab;

/// Phi(M) by scanning all residues of degree < deg M and counting the ones
/// coprime to M.
inline std::uint64_t brute_phi(const Poly& m) {
    std::uint64_t count = 0;
    for (const Poly& r : poly_enumerate_below(m.spec(), static_cast<unsigned>(m.deg())))
        if (poly_gcd(r, m).is_one()) ++count;
    return count;
}

/// F_q multiplication computed directly on coordinate vectors over F_p,
/// reducing by the modulus, bypassing the precomputed tables.
inline GFElem naive_gf_mul(const GFElem& a, const GFElem& b) {
    const auto& spec = a.spec;
    const unsigned p = spec->p();
    auto ca = a.coords(), cb = b.coords();
    std::vector<unsigned> prod(ca.size() + cb.size() - 1, 0);
    for (std::size_t i = 0; i < ca.size(); ++i)
        for (std::size_t j = 0; j < cb.size(); ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
    if (spec->nu() > 1) {
        const auto& m = spec->modulus();
        for (std::size_t k = prod.size(); k-- >= m.size() && k + 1 >= m.size();) {
            if (k + 1 < m.size()) break;
            unsigned lead = prod[k];
            if (lead) {
                std::size_t shift = k + 1 - m.size();
                for (std::size_t i = 0; i < m.size(); ++i)
                    prod[shift + i] = (prod[shift + i] + p - (lead * m[i]) % p) % p;
            }
            if (k == 0) break;
        }
    }
    prod.resize(spec->nu(), 0);
    gf_code code = 0;
    for (std::size_t i = prod.size(); i-- > 0;) code = code * p + prod[i];
    return {spec, code};
}

/// C_M(C_N(X)) as a plain polynomial substitution over R_T[X]; independent
/// of the twisted-multiplication recurrence in carlitz_coeffs.
inline RtxPoly substitute_operator(const CarlitzOp& outer, const CarlitzOp& inner) {
    const auto& spec = outer.M.spec();
    RtxPoly inner_x = rtx_from_op(inner);
    RtxPoly acc{Poly::zero(spec)};
    RtxPoly outer_x = rtx_from_op(outer);
    // Horner in X over R_T
    for (std::size_t k = outer_x.size(); k-- > 0;) {
        acc = rtx_mul(acc, inner_x, spec);
        if (!outer_x[k].is_zero()) {
            if (acc.empty()) acc.push_back(outer_x[k]);
            else acc[0] = acc[0] + outer_x[k];
        }
    }
    rtx_trim(acc);
    return acc;
}

/// Every function f: G -> Lambda_D checked against the crossed-homomorphism
/// law on all pairs. Exponential; only for |G| <= 4 and small D.
inline std::uint64_t brute_cocycle_count_full_scan(const ActingGroup& g) {
    std::vector<Poly> lam =
        poly_enumerate_below(g.D.spec(), static_cast<unsigned>(std::max(g.D.deg(), 0)));
    const std::size_t n = g.size();
    std::vector<std::size_t> pick(n, 0);
    std::uint64_t count = 0;
    while (true) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j) {
                const Poly& fi = lam[pick[i]];
                const Poly& fj = lam[pick[j]];
                const Poly& fij = lam[pick[static_cast<std::size_t>(g.mult[i][j])]];
                if (fij != (fi + g.act(static_cast<int>(i), fj)) % g.D) ok = false;
            }
        if (ok) ++count;
        std::size_t j = 0;
        while (j < n) {
            if (++pick[j] < lam.size()) break;
            pick[j] = 0;
            ++j;
        }
        if (j == n) break;
    }
    return count;
}

/// |ker N_G| for a cyclic group generated by the unit A of order n mod D.
inline std::uint64_t brute_kernel_of_norm(const Poly& A, std::uint64_t n, const Poly& D) {
    Poly norm = Poly::zero(D.spec());
    Poly x = Poly::one(D.spec());
    for (std::uint64_t i = 0; i < n; ++i) {
        norm = (norm + x) % D;
        x = (x * A) % D;
    }
    std::uint64_t count = 0;
    for (const Poly& b : poly_enumerate_below(D.spec(), static_cast<unsigned>(std::max(D.deg(), 0))))
        if (((norm * b) % D).is_zero()) ++count;
    return count;
}

/// Closed-form |H^1| for a cyclic group of prime order p acting by the unit
/// A on Lambda_M: with alpha_i = v_{P_i}(M), gamma_i = v_{P_i}(A-1),
/// beta_i = min(alpha_i, gamma_i), delta_i = max(0, alpha_i - (p-1) gamma_i)
/// and eps_i = beta_i - delta_i, |H^1| = q^{sum eps_i deg P_i}.
inline BigInt h1_closed_form(const Poly& M, const Poly& A) {
    const auto& spec = M.spec();
    const unsigned p = spec->p();
    Poly am1 = (A - Poly::one(spec)) % M;
    BigInt q(spec->q());
    std::uint64_t total = 0;
    for (const auto& [prime, alpha] : poly_factor(M).factors) {
        unsigned gamma = 0;
        if (!am1.is_zero()) {
            Poly x = am1;
            while ((x % prime).is_zero()) {
                x = x / prime;
                ++gamma;
            }
        } else {
            gamma = alpha;  // A = 1 mod M
        }
        unsigned beta = std::min(alpha, gamma);
        unsigned delta = (alpha > (p - 1) * gamma) ? alpha - (p - 1) * gamma : 0;
        total += static_cast<std::uint64_t>(beta - delta) * static_cast<std::uint64_t>(prime.deg());
    }
    return bigint_pow(q, total);
}

}  // namespace oracles

#endif

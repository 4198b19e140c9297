#ifndef CARLITZLAB_CARLITZ_HPP
#define CARLITZLAB_CARLITZ_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "carlitzlab/poly.hpp"
#include "carlitzlab/textio.hpp"

namespace carlitzlab {

/// The q-linearized operator C_M(X) = sum c_i X^{q^i} attached to M through
/// the Carlitz-Hayes action u^M = M(phi + mu_T)(u). Satisfies c_0 = M and,
/// for monic nonconstant M, c_{deg M} = leading coefficient of M.
struct CarlitzOp {
    Poly M;
    std::vector<Poly> coeffs;  // c_0 .. c_d
};

/// Builds C_M by Horner: C_{m0 + T*M'} = c_{m0} + C_T o C_{M'}, where
/// composing with C_T maps coefficients by c_i -> (c_{i-1})^q + T c_i.
inline CarlitzOp carlitz_coeffs(const Poly& M) {
    const auto& spec = M.spec();
    std::vector<Poly> acc{Poly::zero(spec)};
    for (int k = M.deg(); k >= 0; --k) {
        // acc <- C_T o acc
        std::vector<Poly> next(acc.size() + 1, Poly::zero(spec));
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i + 1] = next[i + 1] + poly_pow(acc[i], spec->q());
            next[i] = next[i] + acc[i].shifted(1);
        }
        while (next.size() > 1 && next.back().is_zero()) next.pop_back();
        acc = std::move(next);
        gf_code c = M.coeff(static_cast<std::size_t>(k));
        if (c != 0) acc[0] = acc[0] + Poly::constant(spec, c);
    }
    return {M, std::move(acc)};
}

/// Composition of linearized operators: C_M o C_N = C_{MN}.
inline CarlitzOp carlitz_compose(const CarlitzOp& f, const CarlitzOp& g) {
    const auto& spec = f.M.spec();
    std::vector<Poly> out(f.coeffs.size() + g.coeffs.size() - 1, Poly::zero(spec));
    std::uint64_t q = spec->q();
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        if (f.coeffs[i].is_zero()) continue;
        std::uint64_t qi = 1;
        for (std::size_t t = 0; t < i; ++t) qi *= q;
        for (std::size_t j = 0; j < g.coeffs.size(); ++j)
            out[i + j] = out[i + j] + f.coeffs[i] * poly_pow(g.coeffs[j], qi);
    }
    while (out.size() > 1 && out.back().is_zero()) out.pop_back();
    return {f.M * g.M, std::move(out)};
}

inline CarlitzOp carlitz_add(const CarlitzOp& f, const CarlitzOp& g) {
    const auto& spec = f.M.spec();
    std::vector<Poly> out(std::max(f.coeffs.size(), g.coeffs.size()), Poly::zero(spec));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < f.coeffs.size()) out[i] = out[i] + f.coeffs[i];
        if (i < g.coeffs.size()) out[i] = out[i] + g.coeffs[i];
    }
    while (out.size() > 1 && out.back().is_zero()) out.pop_back();
    return {f.M + g.M, std::move(out)};
}

inline bool carlitz_equal(const CarlitzOp& f, const CarlitzOp& g) {
    std::size_t n = std::max(f.coeffs.size(), g.coeffs.size());
    for (std::size_t i = 0; i < n; ++i) {
        Poly a = i < f.coeffs.size() ? f.coeffs[i] : Poly::zero(f.M.spec());
        Poly b = i < g.coeffs.size() ? g.coeffs[i] : Poly::zero(f.M.spec());
        if (a != b) return false;
    }
    return true;
}

/// Evaluates C_M(x) in any F_q-algebra with a designated T-action. The
/// algebra must provide: zero(), add(u,v), q_power(u), t_mul(u) and
/// scalar(code, u).
template <class Algebra>
typename Algebra::Value carlitz_apply(const CarlitzOp& op, const typename Algebra::Value& x,
                                      const Algebra& alg) {
    auto result = alg.zero();
    auto xq = x;  // x^{q^i}
    for (std::size_t i = 0; i < op.coeffs.size(); ++i) {
        if (i > 0) xq = alg.q_power(xq);
        const Poly& ci = op.coeffs[i];
        if (ci.is_zero()) continue;
        // ci(T) . xq by Horner over the T-action
        auto acc = alg.zero();
        for (int k = ci.deg(); k >= 0; --k) {
            acc = alg.t_mul(acc);
            gf_code c = ci.coeff(static_cast<std::size_t>(k));
            if (c != 0) acc = alg.add(acc, alg.scalar(c, xq));
        }
        result = alg.add(result, acc);
    }
    return result;
}

template <class Algebra>
typename Algebra::Value carlitz_apply(const Poly& M, const typename Algebra::Value& x,
                                      const Algebra& alg) {
    return carlitz_apply(carlitz_coeffs(M), x, alg);
}

/// R_T as an algebra over itself (T acts by multiplication by T).
struct PolyAlgebra {
    using Value = Poly;
    FieldSpecPtr spec;
    Value zero() const { return Poly::zero(spec); }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value q_power(const Value& a) const { return poly_pow(a, spec->q()); }
    Value t_mul(const Value& a) const { return a.shifted(1); }
    Value scalar(gf_code c, const Value& a) const { return a.scaled(c); }
};

// ---------------------------------------------------------------------------
// Polynomials in X with coefficients in R_T (used for C_M(X) and Psi_M(X)).

/// Dense vector of R_T coefficients, ascending in X.
using RtxPoly = std::vector<Poly>;

inline void rtx_trim(RtxPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

inline int rtx_deg(const RtxPoly& a) { return static_cast<int>(a.size()) - 1; }

inline RtxPoly rtx_from_op(const CarlitzOp& op) {
    const auto& spec = op.M.spec();
    std::uint64_t q = spec->q();
    std::uint64_t top = 1;
    for (std::size_t i = 1; i < op.coeffs.size(); ++i) top *= q;
    RtxPoly out(top + 1, Poly::zero(spec));
    std::uint64_t qi = 1;
    for (std::size_t i = 0; i < op.coeffs.size(); ++i) {
        out[qi] = op.coeffs[i];
        if (i + 1 < op.coeffs.size()) qi *= q;
    }
    rtx_trim(out);
    return out;
}

inline RtxPoly rtx_mul(const RtxPoly& a, const RtxPoly& b, const FieldSpecPtr& spec) {
    if (a.empty() || b.empty()) return {};
    RtxPoly out(a.size() + b.size() - 1, Poly::zero(spec));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] = out[i + j] + a[i] * b[j];
        }
    }
    rtx_trim(out);
    return out;
}

/// Exact division by a polynomial monic in X; a nonzero remainder is an
/// internal error.
inline RtxPoly rtx_exact_div(RtxPoly a, const RtxPoly& b, const FieldSpecPtr& spec) {
    if (b.empty() || !b.back().is_one())
        throw std::logic_error("rtx_exact_div needs a divisor monic in X");
    if (a.size() < b.size()) {
        rtx_trim(a);
        if (!a.empty()) throw std::logic_error("inexact division in R_T[X]");
        return {};
    }
    RtxPoly quo(a.size() - b.size() + 1, Poly::zero(spec));
    for (std::size_t k = a.size(); k-- > 0;) {
        if (k + 1 < b.size()) break;
        if (a[k].is_zero()) continue;
        std::size_t shift = k + 1 - b.size();
        quo[shift] = a[k];
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] - quo[shift] * b[i];
    }
    rtx_trim(a);
    if (!a.empty()) throw std::logic_error("inexact division in R_T[X]");
    rtx_trim(quo);
    return quo;
}

/// The Carlitz cyclotomic polynomial Psi_M(X), monic in X of degree Phi(M),
/// assembled by Moebius inclusion-exclusion over monic divisors:
///    Psi_M = prod_{D | M} C_{M/D}^{mu(D)}.
struct CycPoly {
    Poly M;
    RtxPoly coeffs;  // ascending in X
};

inline CycPoly cyclotomic_poly(const Poly& M) {
    if (!M.is_monic()) throw Error("Psi_M needs monic M");
    const auto& spec = M.spec();
    if (M.is_one())  // Psi_1 = C_1 = X, so that prod_{D|M} Psi_D = C_M
        return {M, RtxPoly{Poly::zero(spec), Poly::one(spec)}};
    if (M.is_constant()) throw Error("Psi_M needs monic nonconstant M or M = 1");
    BigInt degree = phi(M);
    if (degree > BigInt(caps().psi_degree)) throw TooLarge("deg Psi_M exceeds cap psi_degree");

    std::vector<Poly> plus, minus;
    for (const Poly& d : monic_divisors(M)) {
        int mu = poly_mobius(d);
        if (mu == 1) plus.push_back(M / d);
        else if (mu == -1) minus.push_back(M / d);
    }
    RtxPoly num{Poly::one(spec)};
    for (const Poly& n : plus) num = rtx_mul(num, rtx_from_op(carlitz_coeffs(n)), spec);
    for (const Poly& n : minus) num = rtx_exact_div(num, rtx_from_op(carlitz_coeffs(n)), spec);
    if (BigInt(rtx_deg(num)) != degree)
        throw std::logic_error("deg Psi_M != Phi(M)");
    return {M, std::move(num)};
}

// ---------------------------------------------------------------------------
// Abstract Carlitz torsion: Lambda_M as R_T/(M), the point lambda^B_M being
// the residue B. All module operations are residue arithmetic.

class TorsionElem {
  public:
    TorsionElem(Poly modulus, const Poly& residue) : m_(std::move(modulus)) {
        if (m_.is_zero()) throw ZeroInput("torsion modulus must be nonzero");
        if (m_.is_constant()) throw Error("torsion modulus must be nonconstant");
        if (!m_.is_monic()) throw Error("torsion modulus must be monic");
        b_ = residue % m_;
    }

    static TorsionElem zero(const Poly& modulus) {
        return TorsionElem(modulus, Poly::zero(modulus.spec()));
    }
    /// The distinguished generator lambda_M = lambda^1_M.
    static TorsionElem generator(const Poly& modulus) {
        return TorsionElem(modulus, Poly::one(modulus.spec()));
    }

    const Poly& modulus() const { return m_; }
    const Poly& residue() const { return b_; }
    bool is_zero() const { return b_.is_zero(); }

    friend bool operator==(const TorsionElem& x, const TorsionElem& y) {
        return x.m_ == y.m_ && x.b_ == y.b_;
    }
    friend bool operator!=(const TorsionElem& x, const TorsionElem& y) { return !(x == y); }

  private:
    Poly m_, b_;
};

inline void check_same_modulus(const TorsionElem& x, const TorsionElem& y) {
    if (x.modulus() != y.modulus()) throw ModulusMismatch("torsion points at different levels");
}

inline TorsionElem torsion_add(const TorsionElem& x, const TorsionElem& y) {
    check_same_modulus(x, y);
    return TorsionElem(x.modulus(), x.residue() + y.residue());
}

inline TorsionElem torsion_neg(const TorsionElem& x) {
    return TorsionElem(x.modulus(), -x.residue());
}

/// The Carlitz action of N on a torsion point: (lambda^B)^N = lambda^{NB mod M}.
inline TorsionElem torsion_act(const Poly& N, const TorsionElem& x) {
    return TorsionElem(x.modulus(), N * x.residue());
}

/// Exact annihilator generator: order(lambda^B_M) = M / gcd(M, B), monic.
inline Poly torsion_order(const TorsionElem& x) {
    return (x.modulus() / poly_gcd(x.modulus(), x.residue())).monic();
}

/// Level raising along M | M': lambda^B_M -> lambda^{B (M'/M)}_{M'}.
inline TorsionElem torsion_embed(const TorsionElem& x, const Poly& m2) {
    if (!(m2 % x.modulus()).is_zero()) throw NotAMultiple("target level is not a multiple");
    return TorsionElem(m2, x.residue() * (m2 / x.modulus()));
}

/// Monic lcm of the orders; exp(empty) = 1.
inline Poly module_exponent(const FieldSpecPtr& spec, const std::vector<TorsionElem>& xs) {
    Poly e = Poly::one(spec);
    for (const auto& x : xs) e = poly_lcm(e, torsion_order(x));
    return e;
}

inline BigInt torsion_count(const Poly& level) {
    return bigint_pow(BigInt(level.spec()->q()), static_cast<std::uint64_t>(level.deg()));
}

inline std::string to_text(const TorsionElem& x) {
    return "lambda[" + to_text(x.residue()) + " mod " + to_text(x.modulus()) + "]";
}

}  // namespace carlitzlab

#endif

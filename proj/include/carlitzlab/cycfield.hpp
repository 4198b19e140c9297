#ifndef CARLITZLAB_CYCFIELD_HPP
#define CARLITZLAB_CYCFIELD_HPP

#include <algorithm>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "carlitzlab/carlitz.hpp"
#include "carlitzlab/ratfn.hpp"

namespace carlitzlab {

// ---------------------------------------------------------------------------
// Polynomials over k = F_q(T), ascending coefficients. Used for arithmetic
// modulo Psi_M.

using KxPoly = std::vector<RatFn>;

inline void kx_trim(KxPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

inline int kx_deg(const KxPoly& a) { return static_cast<int>(a.size()) - 1; }

inline KxPoly kx_add(const KxPoly& a, const KxPoly& b) {
    KxPoly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.size() && i < b.size()) out[i] = a[i] + b[i];
        else if (i < a.size()) out[i] = a[i];
        else out[i] = b[i];
    }
    kx_trim(out);
    return out;
}

inline KxPoly kx_mul(const KxPoly& a, const KxPoly& b, const FieldSpecPtr& spec) {
    if (a.empty() || b.empty()) return {};
    KxPoly out(a.size() + b.size() - 1, RatFn::zero(spec));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] = out[i + j] + a[i] * b[j];
        }
    }
    kx_trim(out);
    return out;
}

inline std::pair<KxPoly, KxPoly> kx_divrem(KxPoly a, const KxPoly& b, const FieldSpecPtr& spec) {
    if (b.empty()) throw DivByZero("division by the zero polynomial over k");
    if (a.size() < b.size()) return {{}, std::move(a)};
    KxPoly quo(a.size() - b.size() + 1, RatFn::zero(spec));
    RatFn lead_inv = b.back().inv();
    for (std::size_t k = a.size(); k-- > 0;) {
        if (k + 1 < b.size()) break;
        if (a[k].is_zero()) continue;
        RatFn f = a[k] * lead_inv;
        std::size_t shift = k + 1 - b.size();
        quo[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] - f * b[i];
    }
    kx_trim(a);
    kx_trim(quo);
    return {std::move(quo), std::move(a)};
}

inline KxPoly kx_mod(KxPoly a, const KxPoly& b, const FieldSpecPtr& spec) {
    return kx_divrem(std::move(a), b, spec).second;
}

/// Extended gcd over k[X]; g is returned monic.
inline std::tuple<KxPoly, KxPoly, KxPoly> kx_xgcd(KxPoly a, KxPoly b, const FieldSpecPtr& spec) {
    KxPoly s0{RatFn::one(spec)}, s1, t0, t1{RatFn::one(spec)};
    while (!b.empty()) {
        auto [q, r] = kx_divrem(a, b, spec);
        a = std::move(b);
        b = std::move(r);
        KxPoly ns = kx_add(s0, [&] {
            KxPoly prod = kx_mul(q, s1, spec);
            for (auto& c : prod) c = -c;
            return prod;
        }());
        s0 = std::move(s1);
        s1 = std::move(ns);
        KxPoly nt = kx_add(t0, [&] {
            KxPoly prod = kx_mul(q, t1, spec);
            for (auto& c : prod) c = -c;
            return prod;
        }());
        t0 = std::move(t1);
        t1 = std::move(nt);
    }
    if (!a.empty() && !a.back().is_one()) {
        RatFn u = a.back().inv();
        for (auto& c : a) c = c * u;
        for (auto& c : s0) c = c * u;
        for (auto& c : t0) c = c * u;
    }
    return {std::move(a), std::move(s0), std::move(t0)};
}

// ---------------------------------------------------------------------------

class CycField;
using CycFieldPtr = std::shared_ptr<const CycField>;

/// The cyclotomic function field k(Lambda_M) = k[X]/(Psi_M), of degree
/// Phi(M) over k, with Galois group isomorphic to (R_T/(M))^*.
class CycField : public std::enable_shared_from_this<CycField> {
  public:
    static CycFieldPtr make(const Poly& M) {
        if (!M.is_monic() || M.is_constant())
            throw Error("cyclotomic field level must be monic and nonconstant");
        auto f = std::shared_ptr<CycField>(new CycField());
        f->m_ = M;
        f->phi_ = phi(M);
        if (f->phi_ <= BigInt(caps().psi_degree)) {
            CycPoly psi = cyclotomic_poly(M);
            f->dim_ = static_cast<std::size_t>(psi.coeffs.size() - 1);
            f->psi_.reserve(psi.coeffs.size());
            for (const Poly& c : psi.coeffs) f->psi_.emplace_back(c);
        }
        return f;
    }

    const FieldSpecPtr& spec() const { return m_.spec(); }
    const Poly& level() const { return m_; }
    const BigInt& degree() const { return phi_; }

    bool has_psi() const { return !psi_.empty(); }
    /// Psi_M as a monic polynomial over k; concrete element arithmetic
    /// requires it.
    const KxPoly& psi() const {
        if (psi_.empty()) throw TooLarge("deg Psi_M exceeds cap psi_degree");
        return psi_;
    }
    std::size_t dim() const {
        psi();
        return dim_;
    }

    bool same(const CycField& o) const { return m_ == o.m_; }

  private:
    CycField() = default;
    Poly m_;
    BigInt phi_;
    std::size_t dim_ = 0;
    KxPoly psi_;
};

inline void check_same_field(const CycFieldPtr& a, const CycFieldPtr& b) {
    if (!a || !b || !a->same(*b)) throw FieldMismatch("elements of different cyclotomic fields");
}

/// Element of k(Lambda_M) in the power basis 1, lambda, ..., lambda^{Phi-1}.
class CycElem {
  public:
    CycElem() = default;
    CycElem(CycFieldPtr field, KxPoly coeffs) : f_(std::move(field)), c_(std::move(coeffs)) {
        kx_trim(c_);
        if (!c_.empty() && c_.size() > f_->dim()) c_ = kx_mod(std::move(c_), f_->psi(), f_->spec());
    }

    static CycElem zero(const CycFieldPtr& f) { return CycElem(f, {}); }
    static CycElem one(const CycFieldPtr& f) { return CycElem(f, {RatFn::one(f->spec())}); }
    static CycElem from_ratfn(const CycFieldPtr& f, RatFn a) { return CycElem(f, {std::move(a)}); }
    /// The distinguished root lambda of Psi_M.
    static CycElem lambda(const CycFieldPtr& f) {
        return CycElem(f, {RatFn::zero(f->spec()), RatFn::one(f->spec())});
    }

    const CycFieldPtr& field() const { return f_; }
    const KxPoly& coeffs() const { return c_; }
    RatFn coeff(std::size_t i) const { return i < c_.size() ? c_[i] : RatFn::zero(f_->spec()); }
    bool is_zero() const { return c_.empty(); }

    friend bool operator==(const CycElem& a, const CycElem& b) {
        check_same_field(a.f_, b.f_);
        return a.c_ == b.c_;
    }
    friend bool operator!=(const CycElem& a, const CycElem& b) { return !(a == b); }

  private:
    CycFieldPtr f_;
    KxPoly c_;
};

inline CycElem operator+(const CycElem& a, const CycElem& b) {
    check_same_field(a.field(), b.field());
    return CycElem(a.field(), kx_add(a.coeffs(), b.coeffs()));
}

inline CycElem operator-(const CycElem& a, const CycElem& b) {
    check_same_field(a.field(), b.field());
    KxPoly nb = b.coeffs();
    for (auto& c : nb) c = -c;
    return CycElem(a.field(), kx_add(a.coeffs(), nb));
}

inline CycElem operator*(const CycElem& a, const CycElem& b) {
    check_same_field(a.field(), b.field());
    const auto& f = a.field();
    return CycElem(f, kx_mod(kx_mul(a.coeffs(), b.coeffs(), f->spec()), f->psi(), f->spec()));
}

inline CycElem cyc_inv(const CycElem& a) {
    if (a.is_zero()) throw DivByZero("inverse of zero field element");
    const auto& f = a.field();
    auto [g, s, t] = kx_xgcd(a.coeffs(), f->psi(), f->spec());
    if (kx_deg(g) != 0) throw std::logic_error("Psi_M shares a factor with a nonzero element");
    (void)t;
    return CycElem(f, std::move(s));
}

inline CycElem operator/(const CycElem& a, const CycElem& b) { return a * cyc_inv(b); }

inline CycElem cyc_pow(const CycElem& a, std::uint64_t e) {
    CycElem r = CycElem::one(a.field());
    CycElem x = a;
    while (e) {
        if (e & 1) r = r * x;
        x = x * x;
        e >>= 1;
    }
    return r;
}

/// k(Lambda_M) as an F_q-algebra with T acting by multiplication.
struct CycAlgebra {
    using Value = CycElem;
    CycFieldPtr field;
    Value zero() const { return CycElem::zero(field); }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value q_power(const Value& a) const { return cyc_pow(a, field->spec()->q()); }
    Value t_mul(const Value& a) const {
        KxPoly c = a.coeffs();
        RatFn t{Poly::t(field->spec())};
        for (auto& x : c) x = x * t;
        return CycElem(field, std::move(c));
    }
    Value scalar(gf_code s, const Value& a) const {
        KxPoly c = a.coeffs();
        RatFn sc{Poly::constant(field->spec(), s)};
        for (auto& x : c) x = x * sc;
        return CycElem(field, std::move(c));
    }
};

/// Concrete image of the abstract torsion point lambda^B_M: C_B(lambda).
inline CycElem torsion_point(const CycFieldPtr& f, const Poly& B) {
    Poly b = B % f->level();
    RtxPoly op = rtx_from_op(carlitz_coeffs(b));
    KxPoly kx;
    kx.reserve(op.size());
    for (const Poly& c : op) kx.emplace_back(c);
    return CycElem(f, std::move(kx));
}

inline CycElem torsion_point(const CycFieldPtr& f, const TorsionElem& x) {
    if (x.modulus() != f->level()) throw ModulusMismatch("torsion level differs from field level");
    return torsion_point(f, x.residue());
}

// ---------------------------------------------------------------------------
// Galois group (R_T/(M))^* and its subgroups.

/// sigma_A, the automorphism with sigma(lambda) = C_A(lambda), gcd(A, M) = 1.
class GaloisElem {
  public:
    GaloisElem(CycFieldPtr field, const Poly& lift) : f_(std::move(field)) {
        a_ = lift % f_->level();
        if (!poly_gcd(a_, f_->level()).is_one())
            throw Error("Galois lift must be coprime to the level");
    }

    const CycFieldPtr& field() const { return f_; }
    const Poly& lift() const { return a_; }
    bool is_identity() const { return a_.is_one(); }

    friend bool operator==(const GaloisElem& x, const GaloisElem& y) {
        check_same_field(x.f_, y.f_);
        return x.a_ == y.a_;
    }
    friend bool operator<(const GaloisElem& x, const GaloisElem& y) { return x.a_ < y.a_; }

  private:
    CycFieldPtr f_;
    Poly a_;
};

inline GaloisElem galois_mul(const GaloisElem& x, const GaloisElem& y) {
    check_same_field(x.field(), y.field());
    return GaloisElem(x.field(), x.lift() * y.lift());
}

/// Applies sigma_A to a field element: the substitution homomorphism
/// lambda -> C_A(lambda), fixing k coefficientwise. Evaluation walks the
/// nonzero coefficients and bridges exponent gaps by square-and-multiply,
/// which keeps torsion points (sparse in the power basis) cheap.
inline CycElem galois_act(const GaloisElem& sigma, const CycElem& x) {
    check_same_field(sigma.field(), x.field());
    const auto& f = x.field();
    if (sigma.is_identity() || x.is_zero()) return x;
    CycElem y = torsion_point(f, sigma.lift());
    CycElem acc = CycElem::zero(f);
    CycElem ypow = CycElem::one(f);
    std::size_t cur = 0;
    for (std::size_t j = 0; j < x.coeffs().size(); ++j) {
        const RatFn& a = x.coeffs()[j];
        if (a.is_zero()) continue;
        ypow = ypow * cyc_pow(y, j - cur);
        cur = j;
        KxPoly scaled = ypow.coeffs();
        for (auto& c : scaled) c = c * a;
        acc = acc + CycElem(f, std::move(scaled));
    }
    return acc;
}

/// Subgroup of the Galois group, stored as the sorted list of canonical
/// lifts, closed under multiplication mod M.
class Subgroup {
  public:
    static Subgroup trivial(const CycFieldPtr& f) {
        return from_generators(f, {Poly::one(f->spec())});
    }

    static Subgroup from_generators(const CycFieldPtr& f, const std::vector<Poly>& gens) {
        const Poly& m = f->level();
        for (const Poly& g : gens)
            if (!poly_gcd(g % m, m).is_one())
                throw Error("subgroup generator not coprime to the level");
        std::set<Poly> seen{Poly::one(f->spec())};
        std::vector<Poly> frontier{Poly::one(f->spec())};
        while (!frontier.empty()) {
            Poly x = std::move(frontier.back());
            frontier.pop_back();
            for (const Poly& g : gens) {
                Poly y = (x * g) % m;
                if (seen.insert(y).second) frontier.push_back(y);
            }
            if (seen.size() > caps().residues) throw TooLarge("subgroup closure exceeds cap");
        }
        Subgroup s;
        s.f_ = f;
        s.elems_.assign(seen.begin(), seen.end());
        return s;
    }

    static Subgroup full_group(const CycFieldPtr& f) {
        Subgroup s;
        s.f_ = f;
        s.elems_ = unit_residues(f->level());
        std::sort(s.elems_.begin(), s.elems_.end());
        return s;
    }

    const CycFieldPtr& field() const { return f_; }
    const std::vector<Poly>& elements() const { return elems_; }
    std::size_t order() const { return elems_.size(); }

    bool contains(const Poly& lift) const {
        Poly r = lift % f_->level();
        return std::binary_search(elems_.begin(), elems_.end(), r);
    }
    bool contains_subgroup(const Subgroup& other) const {
        for (const Poly& e : other.elems_)
            if (!contains(e)) return false;
        return true;
    }

    friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elems_ == b.elems_; }
    friend bool operator<(const Subgroup& a, const Subgroup& b) { return a.elems_ < b.elems_; }

  private:
    CycFieldPtr f_;
    std::vector<Poly> elems_;
};

inline std::vector<GaloisElem> galois_group(const CycFieldPtr& f) {
    std::vector<GaloisElem> out;
    for (const Poly& a : unit_residues(f->level())) out.emplace_back(f, a);
    return out;
}

/// Every subgroup of Gal(k(Lambda_M)/k), each exactly once. Found by the
/// usual incremental method: extend each known subgroup by each group
/// element, close, and dedupe.
inline std::vector<Subgroup> subgroup_lattice(const CycFieldPtr& f) {
    if (f->degree() > BigInt(caps().lattice_order))
        throw TooLarge("Galois group exceeds cap lattice_order for lattice enumeration");
    std::vector<Poly> all = unit_residues(f->level());
    std::set<std::vector<Poly>> seen;
    std::vector<Subgroup> out;
    std::vector<Subgroup> frontier{Subgroup::trivial(f)};
    seen.insert(frontier.front().elements());
    while (!frontier.empty()) {
        Subgroup s = std::move(frontier.back());
        frontier.pop_back();
        for (const Poly& g : all) {
            if (s.contains(g)) continue;
            std::vector<Poly> gens = s.elements();
            gens.push_back(g);
            Subgroup bigger = Subgroup::from_generators(f, gens);
            if (seen.insert(bigger.elements()).second) frontier.push_back(bigger);
        }
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a < b;
    });
    return out;
}

inline bool fixed_by(const CycElem& x, const Subgroup& h) {
    check_same_field(x.field(), h.field());
    for (const Poly& a : h.elements()) {
        if (a.is_one()) continue;
        if (galois_act(GaloisElem(h.field(), a), x) != x) return false;
    }
    return true;
}

inline CycElem trace_under(const Subgroup& h, const CycElem& x) {
    check_same_field(x.field(), h.field());
    CycElem acc = CycElem::zero(x.field());
    for (const Poly& a : h.elements()) acc = acc + galois_act(GaloisElem(h.field(), a), x);
    return acc;
}

/// [L : K] = |H_K| / |H_L| for nested fixing subgroups H_L <= H_K.
inline std::uint64_t subext_degree(const Subgroup& h_upper, const Subgroup& h_lower) {
    check_same_field(h_upper.field(), h_lower.field());
    if (!h_upper.contains_subgroup(h_lower)) throw NotNested("subgroups are not nested");
    return h_upper.order() / h_lower.order();
}

/// Certifies Theorem-level irreducibility of Psi_M at desk scale: the orbit
/// {C_A(lambda)} over all units A has exactly Phi(M) distinct points.
inline bool certify_orbit(const CycFieldPtr& f) {
    std::set<KxPoly> images;
    for (const Poly& a : unit_residues(f->level())) images.insert(torsion_point(f, a).coeffs());
    return BigInt(images.size()) == f->degree();
}

inline std::vector<std::string> to_text_coeffs(const CycElem& x) {
    std::vector<std::string> out;
    out.reserve(x.field()->dim());
    for (std::size_t i = 0; i < x.field()->dim(); ++i) out.push_back(to_text(x.coeff(i)));
    return out;
}

}  // namespace carlitzlab

#endif

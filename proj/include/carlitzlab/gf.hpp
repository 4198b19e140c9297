#ifndef CARLITZLAB_GF_HPP
#define CARLITZLAB_GF_HPP

#include <cstdint>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "carlitzlab/caps.hpp"
#include "carlitzlab/errors.hpp"

namespace carlitzlab {

using gf_code = std::uint32_t;

/// Description of F_q, q = p^nu, with full arithmetic tables.
///
/// Elements are handled as codes 0..q-1; the code of an element with
/// coordinate vector (c_0, ..., c_{nu-1}) in the polynomial basis
/// 1, w, ..., w^{nu-1} is sum c_i p^i. Code order is therefore the
/// lexicographic order on coordinate vectors, lowest coordinate first.
class FieldSpec {
  public:
    static std::shared_ptr<const FieldSpec> make(unsigned p, unsigned nu,
                                                 std::vector<unsigned> modulus = {});

    unsigned p() const { return p_; }
    unsigned nu() const { return nu_; }
    std::uint64_t q() const { return q_; }
    const std::vector<unsigned>& modulus() const { return modulus_; }

    bool same(const FieldSpec& other) const {
        return p_ == other.p_ && nu_ == other.nu_ && modulus_ == other.modulus_;
    }

    gf_code add(gf_code a, gf_code b) const { return add_[a * q_ + b]; }
    gf_code sub(gf_code a, gf_code b) const { return add_[a * q_ + neg_[b]]; }
    gf_code neg(gf_code a) const { return neg_[a]; }
    gf_code mul(gf_code a, gf_code b) const { return mul_[a * q_ + b]; }
    gf_code inv(gf_code a) const {
        if (a == 0) throw DivByZero("inverse of zero in F_q");
        return inv_[a];
    }
    gf_code div(gf_code a, gf_code b) const { return mul(a, inv(b)); }
    gf_code pow(gf_code a, std::uint64_t e) const {
        gf_code r = 1, x = a;
        while (e) {
            if (e & 1) r = mul(r, x);
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    }
    /// x -> x^q, the Frobenius relative to F_q; the identity on F_q itself.
    gf_code frobenius_q(gf_code a) const { return pow(a, q_); }

    std::vector<unsigned> coords(gf_code a) const {
        std::vector<unsigned> c(nu_);
        for (unsigned i = 0; i < nu_; ++i) {
            c[i] = a % p_;
            a /= p_;
        }
        return c;
    }

    /// Renders an element as an F_p-polynomial in w (e.g. "w^2+2*w+1"); for
    /// nu = 1 this is just the integer.
    std::string render(gf_code a) const;

  private:
    FieldSpec() = default;

    unsigned p_ = 0;
    unsigned nu_ = 0;
    std::uint64_t q_ = 0;
    std::vector<unsigned> modulus_;  // over F_p, length nu+1, monic; empty when nu == 1
    std::vector<gf_code> add_, mul_, neg_, inv_;
};

using FieldSpecPtr = std::shared_ptr<const FieldSpec>;

/// An element of F_q tied to its spec.
struct GFElem {
    FieldSpecPtr spec;
    gf_code v = 0;

    GFElem() = default;
    GFElem(FieldSpecPtr s, gf_code code) : spec(std::move(s)), v(code) {}

    std::vector<unsigned> coords() const { return spec->coords(v); }
};

namespace detail {

inline void check_same_spec(const GFElem& a, const GFElem& b) {
    if (!a.spec || !b.spec || !a.spec->same(*b.spec))
        throw SpecMismatch("F_q elements from different field specs");
}

inline bool is_prime_u(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Arithmetic on F_p[w] coefficient vectors (lowest degree first), used only
// while building the tables for nu > 1.
inline std::vector<unsigned> fp_polymod(std::vector<unsigned> a, const std::vector<unsigned>& m,
                                        unsigned p) {
    while (a.size() >= m.size()) {
        unsigned lead = a.back();
        if (lead != 0) {
            std::size_t shift = a.size() - m.size();
            for (std::size_t i = 0; i < m.size(); ++i) {
                unsigned t = (lead * m[i]) % p;
                a[shift + i] = (a[shift + i] + p - t) % p;
            }
        }
        a.pop_back();
    }
    return a;
}

inline std::vector<unsigned> fp_polymul(const std::vector<unsigned>& a,
                                        const std::vector<unsigned>& b, unsigned p) {
    if (a.empty() || b.empty()) return {};
    std::vector<unsigned> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return r;
}

inline bool fp_is_zero(const std::vector<unsigned>& a) {
    for (unsigned c : a)
        if (c) return false;
    return true;
}

// Irreducibility over F_p by trial division against all monic polynomials of
// degree <= deg/2. Fine at table-building scale.
inline bool fp_irreducible(const std::vector<unsigned>& m, unsigned p) {
    unsigned deg = static_cast<unsigned>(m.size()) - 1;
    if (deg == 0) return false;
    if (deg == 1) return true;
    for (unsigned d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            std::vector<unsigned> div(d + 1, 0);
            std::uint64_t c = code;
            for (unsigned i = 0; i < d; ++i) {
                div[i] = static_cast<unsigned>(c % p);
                c /= p;
            }
            div[d] = 1;
            if (fp_is_zero(fp_polymod(std::vector<unsigned>(m), div, p))) return false;
        }
    }
    return true;
}

inline std::vector<unsigned> default_modulus(unsigned p, unsigned nu) {
    if (p == 2 && nu == 2) return {1, 1, 1};        // w^2+w+1
    if (p == 2 && nu == 3) return {1, 1, 0, 1};     // w^3+w+1
    if (p == 3 && nu == 2) return {2, 2, 1};        // w^2+2w+2
    if (p == 5 && nu == 2) return {2, 4, 1};        // w^2+4w+2
    return {};
}

}  // namespace detail

inline std::shared_ptr<const FieldSpec> FieldSpec::make(unsigned p, unsigned nu,
                                                        std::vector<unsigned> modulus) {
    if (!detail::is_prime_u(p)) throw Error("characteristic must be prime");
    if (nu == 0) throw Error("extension degree must be positive");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < nu; ++i) q *= p;
    if (q > caps().max_q) {
        std::ostringstream os;
        os << "q = " << q << " exceeds cap max_q = " << caps().max_q;
        throw TooLarge(os.str());
    }

    if (nu == 1) {
        if (!modulus.empty()) throw Error("modulus only applies when nu > 1");
    } else {
        if (modulus.empty()) modulus = detail::default_modulus(p, nu);
        if (modulus.empty()) throw Error("no default modulus for this q; supply one");
        for (auto& c : modulus) c %= p;
        if (modulus.size() != nu + 1 || modulus.back() != 1)
            throw Error("modulus must be monic of degree nu");
        if (!detail::fp_irreducible(modulus, p)) throw Error("modulus is reducible over F_p");
    }

    auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
    spec->p_ = p;
    spec->nu_ = nu;
    spec->q_ = q;
    spec->modulus_ = modulus;

    auto& add = spec->add_;
    auto& mul = spec->mul_;
    auto& neg = spec->neg_;
    auto& inv = spec->inv_;
    add.assign(q * q, 0);
    mul.assign(q * q, 0);
    neg.assign(q, 0);
    inv.assign(q, 0);

    auto decode = [&](gf_code a) {
        std::vector<unsigned> c(nu);
        for (unsigned i = 0; i < nu; ++i) {
            c[i] = a % p;
            a /= p;
        }
        return c;
    };
    auto encode = [&](const std::vector<unsigned>& c) {
        gf_code a = 0;
        for (std::size_t i = c.size(); i-- > 0;) a = a * p + (c[i] % p);
        return a;
    };

    for (gf_code a = 0; a < q; ++a) {
        auto ca = decode(a);
        std::vector<unsigned> nc(nu);
        for (unsigned i = 0; i < nu; ++i) nc[i] = (p - ca[i]) % p;
        neg[a] = encode(nc);
        for (gf_code b = 0; b < q; ++b) {
            auto cb = decode(b);
            std::vector<unsigned> sc(nu);
            for (unsigned i = 0; i < nu; ++i) sc[i] = (ca[i] + cb[i]) % p;
            add[a * q + b] = encode(sc);
            auto prod = detail::fp_polymul(ca, cb, p);
            if (nu > 1)
                prod = detail::fp_polymod(std::move(prod), modulus, p);
            prod.resize(nu, 0);
            mul[a * q + b] = encode(prod);
        }
    }
    for (gf_code a = 1; a < q; ++a)
        for (gf_code b = 1; b < q; ++b)
            if (mul[a * q + b] == 1) inv[a] = b;

    return spec;
}

inline std::string FieldSpec::render(gf_code a) const {
    if (nu_ == 1) return std::to_string(a);
    auto c = coords(a);
    std::string out;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(c[i]);
        } else {
            if (c[i] != 1) out += std::to_string(c[i]) + "*";
            out += 'w';
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

inline GFElem operator+(const GFElem& a, const GFElem& b) {
    detail::check_same_spec(a, b);
    return {a.spec, a.spec->add(a.v, b.v)};
}
inline GFElem operator-(const GFElem& a, const GFElem& b) {
    detail::check_same_spec(a, b);
    return {a.spec, a.spec->sub(a.v, b.v)};
}
inline GFElem operator*(const GFElem& a, const GFElem& b) {
    detail::check_same_spec(a, b);
    return {a.spec, a.spec->mul(a.v, b.v)};
}
inline GFElem operator/(const GFElem& a, const GFElem& b) {
    detail::check_same_spec(a, b);
    return {a.spec, a.spec->div(a.v, b.v)};
}
inline bool operator==(const GFElem& a, const GFElem& b) {
    detail::check_same_spec(a, b);
    return a.v == b.v;
}
inline bool operator!=(const GFElem& a, const GFElem& b) { return !(a == b); }

inline GFElem gf_frobenius_q(const GFElem& a) { return {a.spec, a.spec->frobenius_q(a.v)}; }

/// All q elements in deterministic order (lexicographic on coordinates).
inline std::vector<GFElem> gf_enumerate(const FieldSpecPtr& spec) {
    if (spec->q() > caps().max_q) throw TooLarge("field too large to enumerate");
    std::vector<GFElem> out;
    out.reserve(spec->q());
    for (gf_code a = 0; a < spec->q(); ++a) out.emplace_back(spec, a);
    return out;
}

}  // namespace carlitzlab

#endif

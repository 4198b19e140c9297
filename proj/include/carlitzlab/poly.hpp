#ifndef CARLITZLAB_POLY_HPP
#define CARLITZLAB_POLY_HPP

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <mutex>
#include <tuple>
#include <utility>
#include <vector>

#include "carlitzlab/bigint.hpp"
#include "carlitzlab/caps.hpp"
#include "carlitzlab/gf.hpp"

namespace carlitzlab {

/// Element of R_T = F_q[T]. Coefficients are stored lowest degree first
/// with no trailing zeros; the zero polynomial has an empty vector and
/// degree -1 (standing in for -infinity).
class Poly {
  public:
    Poly() = default;
    Poly(FieldSpecPtr spec, std::vector<gf_code> coeffs) : spec_(std::move(spec)), c_(std::move(coeffs)) {
        trim();
    }

    static Poly zero(FieldSpecPtr spec) { return Poly(std::move(spec), {}); }
    static Poly constant(FieldSpecPtr spec, gf_code a) { return Poly(std::move(spec), {a}); }
    static Poly one(FieldSpecPtr spec) { return constant(std::move(spec), 1); }
    static Poly t(FieldSpecPtr spec) { return Poly(std::move(spec), {0, 1}); }
    /// c * T^k
    static Poly monomial(FieldSpecPtr spec, gf_code c, std::size_t k) {
        std::vector<gf_code> v(k + 1, 0);
        v[k] = c;
        return Poly(std::move(spec), std::move(v));
    }

    const FieldSpecPtr& spec() const { return spec_; }
    const std::vector<gf_code>& coeffs() const { return c_; }
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }
    gf_code coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    gf_code lc() const { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const { return lc() == 1; }

    Poly monic() const {
        if (is_zero() || is_monic()) return *this;
        return scaled(spec_->inv(lc()));
    }

    Poly scaled(gf_code a) const {
        if (a == 0) return zero(spec_);
        std::vector<gf_code> v(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) v[i] = spec_->mul(c_[i], a);
        return Poly(spec_, std::move(v));
    }

    /// Multiplication by T^k.
    Poly shifted(std::size_t k) const {
        if (is_zero() || k == 0) return *this;
        std::vector<gf_code> v(c_.size() + k, 0);
        std::copy(c_.begin(), c_.end(), v.begin() + static_cast<std::ptrdiff_t>(k));
        return Poly(spec_, std::move(v));
    }

    GFElem eval(const GFElem& x) const {
        gf_code acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = spec_->add(spec_->mul(acc, x.v), c_[i]);
        return {spec_, acc};
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.c_ == b.c_ && (a.c_.empty() || a.spec_->same(*b.spec_));
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Deterministic total order: by degree, then coefficients from the top.
    /// For a fixed spec this is the numeric order on base-q digit strings.
    friend bool operator<(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
        for (std::size_t i = a.c_.size(); i-- > 0;)
            if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
        return false;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    FieldSpecPtr spec_;
    std::vector<gf_code> c_;
};

namespace detail {
inline const FieldSpecPtr& common_spec(const Poly& a, const Poly& b) {
    if (!a.spec() || !b.spec() || !a.spec()->same(*b.spec()))
        throw SpecMismatch("polynomials over different field specs");
    return a.spec();
}
}  // namespace detail

inline Poly operator+(const Poly& a, const Poly& b) {
    const auto& spec = detail::common_spec(a, b);
    std::vector<gf_code> v(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = spec->add(a.coeff(i), b.coeff(i));
    return Poly(spec, std::move(v));
}

inline Poly operator-(const Poly& a, const Poly& b) {
    const auto& spec = detail::common_spec(a, b);
    std::vector<gf_code> v(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = spec->sub(a.coeff(i), b.coeff(i));
    return Poly(spec, std::move(v));
}

inline Poly operator-(const Poly& a) {
    if (a.is_zero()) return a;
    return a.scaled(a.spec()->neg(1));
}

inline Poly operator*(const Poly& a, const Poly& b) {
    const auto& spec = detail::common_spec(a, b);
    if (a.is_zero() || b.is_zero()) return Poly::zero(spec);
    std::vector<gf_code> v(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        gf_code ai = a.coeffs()[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            v[i + j] = spec->add(v[i + j], spec->mul(ai, b.coeffs()[j]));
    }
    return Poly(spec, std::move(v));
}

/// Exact Euclidean division: a = q*b + r with deg r < deg b.
inline std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b) {
    const auto& spec = detail::common_spec(a, b);
    if (b.is_zero()) throw DivByZero("polynomial division by zero");
    if (a.deg() < b.deg()) return {Poly::zero(spec), a};
    std::vector<gf_code> rem(a.coeffs());
    const std::size_t bn = b.coeffs().size();
    std::vector<gf_code> quo(rem.size() - bn + 1, 0);
    gf_code lead_inv = spec->inv(b.lc());
    for (std::size_t k = rem.size(); k-- > 0;) {
        if (k + 1 < bn) break;
        gf_code factor = spec->mul(rem[k], lead_inv);
        if (factor == 0) continue;
        std::size_t shift = k + 1 - bn;
        quo[shift] = factor;
        for (std::size_t i = 0; i < bn; ++i)
            rem[shift + i] = spec->sub(rem[shift + i], spec->mul(factor, b.coeffs()[i]));
    }
    return {Poly(spec, std::move(quo)), Poly(spec, std::move(rem))};
}

inline Poly operator/(const Poly& a, const Poly& b) { return poly_divrem(a, b).first; }
inline Poly operator%(const Poly& a, const Poly& b) { return poly_divrem(a, b).second; }

inline Poly poly_pow(const Poly& a, std::uint64_t e) {
    Poly r = Poly::one(a.spec());
    Poly x = a;
    while (e) {
        if (e & 1) r = r * x;
        x = x * x;
        e >>= 1;
    }
    return r;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

/// Extended gcd. Returns (g, s1, s2) with g = a*s1 + b*s2, g monic
/// (g = 0 with s1 = s2 = 0 when both inputs are zero).
inline std::tuple<Poly, Poly, Poly> poly_xgcd(const Poly& a, const Poly& b) {
    const auto& spec = detail::common_spec(a, b);
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::one(spec), s1 = Poly::zero(spec);
    Poly t0 = Poly::zero(spec), t1 = Poly::one(spec);
    while (!r1.is_zero()) {
        auto [q, r] = poly_divrem(r0, r1);
        r0 = r1;
        r1 = r;
        Poly ns = s0 - q * s1;
        s0 = s1;
        s1 = ns;
        Poly nt = t0 - q * t1;
        t0 = t1;
        t1 = nt;
    }
    if (r0.is_zero()) return {r0, Poly::zero(spec), Poly::zero(spec)};
    gf_code u = spec->inv(r0.lc());
    Poly g = r0.scaled(u), s = s0.scaled(u), t = t0.scaled(u);
    assert(a * s + b * t == g);
    return {g, s, t};
}

inline Poly poly_gcd(const Poly& a, const Poly& b) { return std::get<0>(poly_xgcd(a, b)); }

inline Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.spec());
    Poly g = poly_gcd(a, b);
    return ((a * b) / g).monic();
}

/// Enumerates polynomials of degree < d in the deterministic order used
/// throughout (ascending base-q value, coefficients as digits).
inline std::vector<Poly> poly_enumerate_below(const FieldSpecPtr& spec, unsigned d) {
    const std::uint64_t q = spec->q();
    std::uint64_t total = 1;
    for (unsigned i = 0; i < d; ++i) {
        if (total > caps().residues) throw TooLarge("residue space exceeds cap");
        total *= q;
    }
    if (total > caps().residues) throw TooLarge("residue space exceeds cap");
    std::vector<Poly> out;
    out.reserve(total);
    std::vector<gf_code> digits(d, 0);
    for (std::uint64_t n = 0; n < total; ++n) {
        std::uint64_t m = n;
        for (unsigned i = 0; i < d; ++i) {
            digits[i] = static_cast<gf_code>(m % q);
            m /= q;
        }
        out.emplace_back(spec, std::vector<gf_code>(digits));
    }
    return out;
}

struct Factorization {
    std::vector<std::pair<Poly, unsigned>> factors;  // monic irreducible, exponent
    gf_code unit = 1;
};

namespace detail {

// Cache of monic irreducibles by degree, keyed by field spec.
struct IrreducibleTable {
    std::vector<std::vector<Poly>> by_degree;  // by_degree[d] = irreducibles of degree d
};

inline const std::vector<Poly>& irreducibles_up_to(const FieldSpecPtr& spec, unsigned d,
                                                   unsigned degree_wanted) {
    static std::map<std::tuple<unsigned, unsigned, std::vector<unsigned>>, IrreducibleTable> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_tuple(spec->p(), spec->nu(), spec->modulus());
    auto& table = cache[key];
    if (table.by_degree.empty()) table.by_degree.resize(1);
    while (table.by_degree.size() <= d) {
        unsigned deg = static_cast<unsigned>(table.by_degree.size());
        std::vector<Poly> found;
        for (const Poly& low : poly_enumerate_below(spec, deg)) {
            std::vector<gf_code> v(low.coeffs());
            v.resize(deg + 1, 0);
            v[deg] = 1;
            Poly cand(spec, std::move(v));
            bool irred = true;
            for (unsigned e = 1; 2 * e <= deg && irred; ++e)
                for (const Poly& f : table.by_degree[e]) {
                    if ((cand % f).is_zero()) {
                        irred = false;
                        break;
                    }
                }
            if (irred) found.push_back(std::move(cand));
        }
        table.by_degree.push_back(std::move(found));
    }
    return table.by_degree[degree_wanted];
}

}  // namespace detail

/// All monic irreducibles of the given degree, in deterministic order.
inline std::vector<Poly> monic_irreducibles(const FieldSpecPtr& spec, unsigned degree) {
    return detail::irreducibles_up_to(spec, degree, degree);
}

/// Complete factorization into monic irreducibles times a unit, by trial
/// division against the cached irreducible table.
inline Factorization poly_factor(const Poly& m) {
    if (m.is_zero()) throw ZeroInput("cannot factor the zero polynomial");
    if (m.deg() > static_cast<int>(caps().factor_deg))
        throw TooLarge("degree exceeds factoring cap");
    Factorization f;
    f.unit = m.lc();
    Poly rest = m.monic();
    for (unsigned d = 1; rest.deg() > 0 && 2 * d <= static_cast<unsigned>(rest.deg()); ++d) {
        for (const Poly& p : detail::irreducibles_up_to(m.spec(), d, d)) {
            unsigned e = 0;
            while ((rest % p).is_zero()) {
                rest = rest / p;
                ++e;
            }
            if (e) f.factors.emplace_back(p, e);
            if (2 * d > static_cast<unsigned>(rest.deg())) break;
        }
    }
    if (rest.deg() > 0) f.factors.emplace_back(rest, 1);  // leftover is irreducible
    return f;
}

inline Poly factorization_product(const Factorization& f, const FieldSpecPtr& spec) {
    Poly r = Poly::constant(spec, f.unit);
    for (const auto& [p, e] : f.factors) r = r * poly_pow(p, e);
    return r;
}

inline bool poly_is_irreducible(const Poly& m) {
    if (m.deg() < 1) return false;
    auto f = poly_factor(m);
    return f.factors.size() == 1 && f.factors[0].second == 1;
}

/// |(R_T/(M))^*|, the polynomial Euler function. Phi(unit) = 1.
inline BigInt phi(const Poly& m) {
    if (m.is_zero()) throw ZeroInput("Phi of the zero polynomial");
    if (m.is_constant()) return 1;
    BigInt result = 1;
    BigInt q = m.spec()->q();
    for (const auto& [p, e] : poly_factor(m).factors) {
        auto d = static_cast<std::uint64_t>(p.deg());
        result *= bigint_pow(q, d * e) - bigint_pow(q, d * (e - 1));
    }
    return result;
}

/// Canonical lifts of (R_T/(M))^*: all residues of degree < deg M coprime
/// to M, in deterministic order.
inline std::vector<Poly> unit_residues(const Poly& m) {
    if (m.deg() < 1) throw Error("unit_residues needs deg >= 1");
    BigInt count = phi(m);
    if (count > BigInt(caps().residues)) throw TooLarge("Phi(M) exceeds residue cap");
    std::vector<Poly> out;
    for (Poly& r : poly_enumerate_below(m.spec(), static_cast<unsigned>(m.deg())))
        if (poly_gcd(r, m).is_one()) out.push_back(std::move(r));
    return out;
}

/// Moebius function on monic polynomials.
inline int poly_mobius(const Poly& m) {
    if (m.is_zero() || !m.is_monic()) throw Error("Moebius needs a monic polynomial");
    if (m.is_one()) return 1;
    auto f = poly_factor(m);
    for (const auto& [p, e] : f.factors)
        if (e >= 2) return 0;
    return f.factors.size() % 2 == 0 ? 1 : -1;
}

/// All monic divisors of m (including 1 and m), deterministic order.
inline std::vector<Poly> monic_divisors(const Poly& m) {
    auto f = poly_factor(m);
    std::vector<Poly> out{Poly::one(m.spec())};
    for (const auto& [p, e] : f.factors) {
        std::vector<Poly> next;
        Poly pk = Poly::one(m.spec());
        for (unsigned k = 0; k <= e; ++k) {
            for (const Poly& d : out) next.push_back(d * pk);
            pk = pk * p;
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace carlitzlab

#endif

#ifndef CARLITZLAB_RATFN_HPP
#define CARLITZLAB_RATFN_HPP

#include <utility>

#include "carlitzlab/poly.hpp"

namespace carlitzlab {

/// Element of k = F_q(T) in lowest terms: monic denominator, gcd(num, den) = 1.
class RatFn {
  public:
    RatFn() = default;
    explicit RatFn(Poly num) : num_(std::move(num)) { den_ = Poly::one(num_.spec()); }
    RatFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RatFn zero(const FieldSpecPtr& spec) { return RatFn(Poly::zero(spec)); }
    static RatFn one(const FieldSpecPtr& spec) { return RatFn(Poly::one(spec)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const FieldSpecPtr& spec() const { return num_.spec(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    friend RatFn operator+(const RatFn& a, const RatFn& b) {
        return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFn operator-(const RatFn& a, const RatFn& b) {
        return RatFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFn operator-(const RatFn& a) { return RatFn(-a.num_, a.den_); }
    friend RatFn operator*(const RatFn& a, const RatFn& b) {
        return RatFn(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFn operator/(const RatFn& a, const RatFn& b) {
        if (b.is_zero()) throw DivByZero("division by zero in F_q(T)");
        return RatFn(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const RatFn& a, const RatFn& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }
    friend bool operator<(const RatFn& a, const RatFn& b) {
        if (a.num_ != b.num_) return a.num_ < b.num_;
        return a.den_ < b.den_;
    }

    RatFn inv() const {
        if (is_zero()) throw DivByZero("inverse of zero in F_q(T)");
        return RatFn(den_, num_);
    }

  private:
    void normalize() {
        if (den_.is_zero()) throw DivByZero("zero denominator");
        if (num_.is_zero()) {
            den_ = Poly::one(num_.spec());
            return;
        }
        Poly g = poly_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        gf_code u = den_.lc();
        if (u != 1) {
            gf_code ui = num_.spec()->inv(u);
            num_ = num_.scaled(ui);
            den_ = den_.scaled(ui);
        }
    }

    Poly num_, den_;
};

}  // namespace carlitzlab

#endif

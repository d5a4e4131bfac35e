#pragma once

// Reduced fractions of univariate polynomials: the coefficient fields Q(x)
// and Q(t) used by series arithmetic. Invariants: gcd(num, den) = 1 and the
// denominator is monic and nonzero.

#include <stdexcept>
#include <utility>

#include "diagon/poly.hpp"
#include "diagon/rational.hpp"

namespace diagon {

template <FieldElem F>
class RatFun {
public:
    RatFun() : num_(), den_(Poly<F>::one()) {}
    explicit RatFun(F c) : num_(Poly<F>(std::move(c))), den_(Poly<F>::one()) {}
    explicit RatFun(Poly<F> num) : num_(std::move(num)), den_(Poly<F>::one()) {}
    RatFun(Poly<F> num, Poly<F> den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

    static RatFun zero() { return RatFun(); }
    static RatFun one() { return RatFun(F::one()); }
    static RatFun from_int(long n) { return RatFun(F::from_int(n)); }

    const Poly<F>& num() const { return num_; }
    const Poly<F>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == Poly<F>::one(); }

    RatFun inv() const {
        if (is_zero()) throw std::domain_error("inverse of zero rational function");
        return RatFun(den_, num_);
    }

    RatFun operator-() const {
        RatFun r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inv(); }

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

private:
    Poly<F> num_;
    Poly<F> den_;

    void reduce() {
        if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<F>::one();
            return;
        }
        Poly<F> g = poly_gcd(num_, den_);
        if (!g.is_constant() || !(g.lc() == F::one())) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
        F scale = den_.lc().inv();
        num_ = num_ * scale;
        den_ = den_ * scale;
    }
};

using RatFunQ = RatFun<Rational>;

}  // namespace diagon

#pragma once

// Exact rational numbers over arbitrary-precision integers (GMP-backed).
// Values are always canonical: gcd(|num|, den) = 1, den > 0, zero is 0/1.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace diagon {

class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(static_cast<signed long>(n)) {}
    Rational(long n, long d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        q_ = mpq_class(n, d);
        q_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : q_(n) {}
    Rational(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        q_ = mpq_class(n, d);
        q_.canonicalize();
    }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1); }
    static Rational from_int(long n) { return Rational(n); }

    bool is_zero() const { return q_ == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    bool is_negative() const { return q_ < 0; }

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }
    const mpq_class& value() const { return q_; }

    Rational inv() const {
        if (is_zero()) throw std::domain_error("division by zero rational");
        return Rational(mpq_class(1) / q_);
    }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("division by zero rational");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }

    // canonical text form: "num" when den == 1, else "num/den"
    std::string str() const { return q_.get_str(); }

private:
    mpq_class q_;
};

inline Rational rational_pow(const Rational& base, unsigned long e) {
    Rational r = Rational::one();
    Rational b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline mpz_class binomial_mpz(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// C(n, k) as a machine integer; throws if it does not fit.
inline long binomial_long(unsigned long n, unsigned long k) {
    mpz_class b = binomial_mpz(n, k);
    if (!b.fits_slong_p()) throw std::overflow_error("binomial coefficient too large");
    return b.get_si();
}

inline mpz_class factorial_mpz(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace diagon

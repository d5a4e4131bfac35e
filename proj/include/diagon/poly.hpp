#pragma once

// Dense univariate polynomials over an exact coefficient ring, lowest degree
// first. The same template carries Q[x] (Poly<Rational>), Q[x][y]
// (Poly<Poly<Rational>>) and deeper towers; gcd, exact division and resultants
// dispatch on whether the coefficients form a field.
//
// Resultants over non-field coefficient rings use a fraction-free
// pseudo-remainder sequence with content extraction, so every division is
// exact and no degree is ever lost.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "diagon/degree.hpp"
#include "diagon/rational.hpp"

namespace diagon {

template <class T>
concept RingElem = requires(const T& a, const T& b) {
    { T::zero() };
    { T::one() };
    { a + b };
    { a - b };
    { a* b };
    { -a };
    { a == b };
    { a.is_zero() };
};

template <class T>
concept FieldElem = RingElem<T> && requires(const T& a) {
    { a.inv() };
};

template <RingElem T>
class Poly {
public:
    Poly() = default;
    explicit Poly(T c) { c_.push_back(std::move(c)); trim(); }
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(T::one()); }
    static Poly from_int(long n) { return Poly(T::from_int(n)); }

    // the monomial c * x^k
    static Poly monomial(T c, std::size_t k) {
        if (c.is_zero()) return Poly();
        std::vector<T> v(k + 1, T::zero());
        v[k] = std::move(c);
        return Poly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    Degree degree() const {
        return c_.empty() ? Degree::neg_inf() : Degree(static_cast<int>(c_.size()) - 1);
    }
    std::size_t size() const { return c_.size(); }

    const T& operator[](std::size_t i) const {
        static const T kZero = T::zero();
        return i < c_.size() ? c_[i] : kZero;
    }
    const std::vector<T>& coeffs() const { return c_; }

    const T& lc() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    T constant_term() const { return (*this)[0]; }

    void set_coeff(std::size_t i, T v) {
        if (i >= c_.size()) c_.resize(i + 1, T::zero());
        c_[i] = std::move(v);
        trim();
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T::zero());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T::zero());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] - b[i];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const T& s) {
        Poly r;
        r.c_.reserve(a.c_.size());
        for (const auto& c : a.c_) r.c_.push_back(c * s);
        r.trim();
        return r;
    }
    friend Poly operator*(const T& s, const Poly& a) { return a * s; }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    // x^k * this
    Poly shifted_up(std::size_t k) const {
        if (is_zero()) return Poly();
        std::vector<T> r(c_.size() + k, T::zero());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
        return Poly(std::move(r));
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<T> r(c_.size() - 1, T::zero());
        for (std::size_t i = 1; i < c_.size(); ++i)
            r[i - 1] = c_[i] * T::from_int(static_cast<long>(i));
        return Poly(std::move(r));
    }

    template <class V>
    V eval(const V& x) const {
        V r = V::zero();
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + V(c_[i]);
        return r;
    }
    T eval_coeff(const T& x) const {
        T r = T::zero();
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

private:
    std::vector<T> c_;

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

using UniPoly = Poly<Rational>;

template <RingElem T>
Poly<T> poly_pow(const Poly<T>& base, unsigned long e) {
    Poly<T> r = Poly<T>::one();
    Poly<T> b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// rec(P) = x^(deg P) P(1/x): the coefficient list reversed after trimming.
template <RingElem T>
Poly<T> reciprocal(const Poly<T>& p) {
    if (p.is_zero()) throw std::domain_error("reciprocal of zero polynomial");
    std::vector<T> r(p.coeffs().rbegin(), p.coeffs().rend());
    return Poly<T>(std::move(r));
}

// ---- division ----------------------------------------------------------

template <FieldElem F>
std::pair<Poly<F>, Poly<F>> divrem(const Poly<F>& a, const Poly<F>& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly<F>(), a};
    std::vector<F> rem(a.coeffs());
    const std::size_t db = b.size() - 1;
    std::vector<F> quo(rem.size() - db, F::zero());
    const F inv_lb = b.lc().inv();
    for (std::size_t ip = rem.size(); ip > db; --ip) {
        const std::size_t i = ip - 1;
        F q = rem[i] * inv_lb;
        if (!q.is_zero())
            for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = rem[i - db + j] - q * b[j];
        quo[i - db] = std::move(q);
    }
    rem.resize(db);
    return {Poly<F>(std::move(quo)), Poly<F>(std::move(rem))};
}

template <FieldElem F>
Poly<F> poly_mod(const Poly<F>& a, const Poly<F>& b) {
    return divrem(a, b).second;
}

namespace detail {
template <class T>
inline constexpr bool is_field_elem = FieldElem<T>;
}

// Exact division over any coefficient ring; throws if b does not divide a.
template <RingElem T>
Poly<T> exact_div(const Poly<T>& a, const Poly<T>& b);

template <RingElem T>
T coeff_exact_div(const T& a, const T& b) {
    if constexpr (detail::is_field_elem<T>) {
        return a * b.inv();
    } else {
        return exact_div(a, b);
    }
}

template <RingElem T>
Poly<T> exact_div(const Poly<T>& a, const Poly<T>& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.is_zero()) return Poly<T>();
    if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
    std::vector<T> rem(a.coeffs());
    const std::size_t db = b.size() - 1;
    std::vector<T> quo(rem.size() - db, T::zero());
    for (std::size_t ip = rem.size(); ip > db; --ip) {
        const std::size_t i = ip - 1;
        if (rem[i].is_zero()) continue;
        T q = coeff_exact_div(rem[i], b.lc());
        for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = rem[i - db + j] - q * b[j];
        quo[i - db] = std::move(q);
    }
    for (const auto& c : rem)
        if (!c.is_zero()) throw std::domain_error("inexact polynomial division");
    return Poly<T>(std::move(quo));
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + prem(a, b) with
// deg prem < deg b. The full multiplier power is always applied, which the
// resultant bookkeeping below relies on.
template <RingElem T>
Poly<T> prem(const Poly<T>& a, const Poly<T>& b) {
    if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
    if (a.degree() < b.degree()) return a;
    const T& lb = b.lc();
    const int db = b.degree().value();
    long mults_left = a.degree().value() - db + 1;
    Poly<T> r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const int dr = r.degree().value();
        Poly<T> t = Poly<T>::monomial(r.lc(), static_cast<std::size_t>(dr - db));
        r = r * lb - t * b;
        --mults_left;
    }
    for (; mults_left > 0; --mults_left) r = r * lb;
    return r;
}

// ---- gcd and content ---------------------------------------------------

template <RingElem T>
T ring_gcd(const T& a, const T& b);

template <FieldElem F>
Poly<F> monic(const Poly<F>& p) {
    if (p.is_zero()) return p;
    return p * p.lc().inv();
}

template <RingElem T>
Poly<T> normalize_unit(const Poly<T>& p);

template <RingElem T>
T poly_content(const Poly<T>& p) {
    T g = T::zero();
    for (const auto& c : p.coeffs()) g = ring_gcd(g, c);
    return g;
}

template <RingElem T>
Poly<T> primitive_part(const Poly<T>& p) {
    if (p.is_zero()) return p;
    T c = poly_content(p);
    std::vector<T> r;
    r.reserve(p.size());
    for (const auto& co : p.coeffs()) r.push_back(coeff_exact_div(co, c));
    return Poly<T>(std::move(r));
}

template <RingElem T>
Poly<T> poly_gcd(const Poly<T>& a, const Poly<T>& b) {
    if constexpr (detail::is_field_elem<T>) {
        Poly<T> x = a, y = b;
        while (!y.is_zero()) {
            Poly<T> r = poly_mod(x, y);
            x = std::move(y);
            y = std::move(r);
        }
        return monic(x);
    } else {
        if (a.is_zero()) return normalize_unit(b);
        if (b.is_zero()) return normalize_unit(a);
        T ca = poly_content(a), cb = poly_content(b);
        Poly<T> x = integer_primitive(primitive_part(a));
        Poly<T> y = integer_primitive(primitive_part(b));
        if (x.degree() < y.degree()) std::swap(x, y);
        while (!y.is_zero()) {
            Poly<T> r = prem(x, y);
            x = std::move(y);
            y = r.is_zero() ? std::move(r) : integer_primitive(primitive_part(r));
        }
        return normalize_unit(x) * ring_gcd(ca, cb);
    }
}

template <RingElem T>
T ring_gcd(const T& a, const T& b) {
    if constexpr (detail::is_field_elem<T>) {
        if (a.is_zero() && b.is_zero()) return T::zero();
        return T::one();
    } else {
        return poly_gcd(a, b);  // T is itself a polynomial ring
    }
}

namespace detail {
// innermost leading scalar of a coefficient tower, for sign normalization
inline Rational top_scalar(const Rational& r) { return r; }
template <RingElem T>
Rational top_scalar(const Poly<T>& p) {
    if (p.is_zero()) return Rational::zero();
    return top_scalar(p.lc());
}

inline void collect_scalars(const Rational& r, mpz_class& den_lcm, mpz_class& num_gcd) {
    if (r.is_zero()) return;
    mpz_class t;
    mpz_lcm(t.get_mpz_t(), den_lcm.get_mpz_t(), r.den().get_mpz_t());
    den_lcm = t;
    mpz_gcd(t.get_mpz_t(), num_gcd.get_mpz_t(), r.num().get_mpz_t());
    num_gcd = t;
}
template <RingElem T>
void collect_scalars(const Poly<T>& p, mpz_class& den_lcm, mpz_class& num_gcd) {
    for (const auto& c : p.coeffs()) collect_scalars(c, den_lcm, num_gcd);
}

inline Rational scale_by(const Rational& r, const Rational& s) { return r * s; }
template <RingElem T>
Poly<T> scale_by(const Poly<T>& p, const Rational& s) {
    std::vector<T> c;
    c.reserve(p.size());
    for (const auto& co : p.coeffs()) c.push_back(scale_by(co, s));
    return Poly<T>(std::move(c));
}
}  // namespace detail

// scale so all scalars in the tower are integers with content 1
template <RingElem T>
Poly<T> integer_primitive(const Poly<T>& p) {
    if (p.is_zero()) return p;
    mpz_class den_lcm = 1, num_gcd = 0;
    detail::collect_scalars(p, den_lcm, num_gcd);
    return detail::scale_by(p, Rational(den_lcm, num_gcd));
}

template <RingElem T>
Poly<T> normalize_unit(const Poly<T>& p) {
    if (p.is_zero()) return p;
    if constexpr (detail::is_field_elem<T>) {
        return monic(p);
    } else {
        Poly<T> pp = integer_primitive(primitive_part(p));
        if (detail::top_scalar(pp).is_negative()) pp = -pp;
        return pp;
    }
}

// ---- resultants --------------------------------------------------------

// res(a, b) = lc(a)^(deg b) * prod b(alpha_i) over the roots of a,
// the Sylvester determinant convention.
template <FieldElem F>
F resultant_field(Poly<F> a, Poly<F> b) {
    if (a.is_zero() || b.is_zero()) return F::zero();
    F acc = F::one();
    bool neg = false;
    while (true) {
        const int da = a.degree().value(), db = b.degree().value();
        if (da == 0 && db == 0) break;
        if (da == 0) {
            for (int i = 0; i < db; ++i) acc = acc * a.lc();
            break;
        }
        if (db == 0) {
            for (int i = 0; i < da; ++i) acc = acc * b.lc();
            break;
        }
        if (da < db) {
            if ((da & 1) && (db & 1)) neg = !neg;
            std::swap(a, b);
            continue;
        }
        Poly<F> r = poly_mod(a, b);
        if (r.is_zero()) return F::zero();
        // res(a, b) = (-1)^(da db) lc(b)^(da - dr) res(b, r)
        if ((da & 1) && (db & 1)) neg = !neg;
        const int dr = r.degree().value();
        for (int i = 0; i < da - dr; ++i) acc = acc * b.lc();
        a = std::move(b);
        b = std::move(r);
    }
    return neg ? -acc : acc;
}

namespace detail {
template <RingElem T>
T ring_pow(const T& x, long e) {
    T r = T::one();
    for (long i = 0; i < e; ++i) r = r * x;
    return r;
}
}  // namespace detail

// Fraction-free resultant over a ring with exact division, via
//   lc(b)^(delta+1) a = q b + prem(a, b)
//   res(a, b) = (-1)^(da db) lc(b)^(da - dr - (delta+1) db) res(b, prem(a, b)),
// stripping the content of each pseudo-remainder and accounting for it as
//   res(b, g r) = g^(deg b) res(b, r).
template <RingElem T>
T resultant_ring(Poly<T> a, Poly<T> b) {
    if (a.is_zero() || b.is_zero()) return T::zero();
    T num = T::one(), den = T::one();
    bool neg = false;
    while (true) {
        const int da = a.degree().value(), db = b.degree().value();
        if (da == 0 && db == 0) break;
        if (da == 0) {
            num = num * detail::ring_pow(a.lc(), db);
            break;
        }
        if (db == 0) {
            num = num * detail::ring_pow(b.lc(), da);
            break;
        }
        if (da < db) {
            if ((da & 1) && (db & 1)) neg = !neg;
            std::swap(a, b);
            continue;
        }
        Poly<T> r = prem(a, b);
        if (r.is_zero()) return T::zero();
        T cont = poly_content(r);
        r = primitive_part(r);
        if ((da & 1) && (db & 1)) neg = !neg;
        num = num * detail::ring_pow(cont, db);
        const long e = static_cast<long>(da - db + 1) * db - da + r.degree().value();
        if (e >= 0)
            den = den * detail::ring_pow(b.lc(), e);
        else
            num = num * detail::ring_pow(b.lc(), -e);
        a = std::move(b);
        b = std::move(r);
    }
    T res = coeff_exact_div(num, den);
    return neg ? -res : res;
}

template <RingElem T>
T resultant(const Poly<T>& a, const Poly<T>& b) {
    if constexpr (detail::is_field_elem<T>) {
        return resultant_field(a, b);
    } else {
        return resultant_ring(a, b);
    }
}

// ---- interpolation -----------------------------------------------------

// Newton divided differences at rational nodes; values live in any ring with
// scalar multiplication by Rational (dividing by node differences is exact).
template <RingElem T>
Poly<T> interpolate(const std::vector<Rational>& xs, const std::vector<T>& ys) {
    if (xs.size() != ys.size() || xs.empty())
        throw std::invalid_argument("interpolate: bad node set");
    const std::size_t n = xs.size();
    std::vector<T> dd = ys;  // dd[i] becomes the i-th divided difference
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) {
            Rational dx = xs[i] - xs[i - level];
            dd[i] = (dd[i] - dd[i - 1]) * dx.inv();
            if (i == level) break;
        }
    Poly<T> acc(dd[n - 1]);
    for (std::size_t ip = n - 1; ip-- > 0;) {
        Poly<T> lin(std::vector<T>{-(T::one() * xs[ip]), T::one()});
        acc = acc * lin + Poly<T>(dd[ip]);
    }
    return acc;
}

}  // namespace diagon

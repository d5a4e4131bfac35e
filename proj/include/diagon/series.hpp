#pragma once

// Truncated power series over an exact coefficient field. A series carries
// its truncation order explicitly: it is known mod x^order and stores exactly
// `order` coefficients. Binary operations work at the min of the two orders.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "diagon/poly.hpp"
#include "diagon/rational.hpp"

namespace diagon {

template <FieldElem F>
class Series {
public:
    Series() = default;
    explicit Series(std::size_t order) : c_(order, F::zero()) {}
    Series(std::vector<F> coeffs) : c_(std::move(coeffs)) {}
    Series(const Poly<F>& p, std::size_t order) : c_(order, F::zero()) {
        for (std::size_t i = 0; i < order && i < p.size(); ++i) c_[i] = p[i];
    }

    static Series zero() { return Series(); }
    static Series constant(F v, std::size_t order) {
        Series s(order);
        if (order > 0) s.c_[0] = std::move(v);
        return s;
    }

    std::size_t order() const { return c_.size(); }
    bool is_zero() const {
        for (const auto& c : c_)
            if (!c.is_zero()) return false;
        return true;
    }
    const F& operator[](std::size_t i) const {
        static const F kZero = F::zero();
        return i < c_.size() ? c_[i] : kZero;
    }
    const std::vector<F>& coeffs() const { return c_; }
    void set(std::size_t i, F v) {
        if (i >= c_.size()) throw std::out_of_range("series coefficient beyond order");
        c_[i] = std::move(v);
    }

    Series truncated(std::size_t order) const {
        Series r(std::min(order, c_.size()));
        for (std::size_t i = 0; i < r.order(); ++i) r.c_[i] = c_[i];
        return r;
    }

    bool operator==(const Series& o) const { return c_ == o.c_; }
    bool operator!=(const Series& o) const { return !(*this == o); }

    Series operator-() const {
        Series r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend Series operator+(const Series& a, const Series& b) {
        Series r(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i < r.order(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend Series operator-(const Series& a, const Series& b) {
        Series r(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i < r.order(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    friend Series operator*(const Series& a, const Series& b) {
        Series r(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i < r.order(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j < r.order(); ++j)
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        }
        return r;
    }
    friend Series operator*(const Series& a, const F& s) {
        Series r = a;
        for (auto& c : r.c_) c = c * s;
        return r;
    }

    Poly<F> to_poly() const { return Poly<F>(c_); }

private:
    std::vector<F> c_;
};

// f * series_inverse(f) = 1 mod x^order
template <FieldElem F>
Series<F> series_inverse(const Series<F>& f) {
    if (f.order() == 0) return f;
    if (f[0].is_zero()) throw std::domain_error("series not invertible: zero constant term");
    Series<F> g(f.order());
    F inv0 = f[0].inv();
    g.set(0, inv0);
    for (std::size_t k = 1; k < f.order(); ++k) {
        F acc = F::zero();
        for (std::size_t j = 1; j <= k; ++j) acc = acc + f[j] * g[k - j];
        g.set(k, -(acc * inv0));
    }
    return g;
}

template <FieldElem F>
Series<F> series_div(const Series<F>& a, const Series<F>& b) {
    return a.truncated(std::min(a.order(), b.order())) * series_inverse(b);
}

template <FieldElem F>
Series<F> series_derivative(const Series<F>& f) {
    if (f.order() == 0) return f;
    Series<F> r(f.order() - 1);
    for (std::size_t i = 1; i < f.order(); ++i) r.set(i - 1, f[i] * F::from_int(static_cast<long>(i)));
    return r;
}

// maps sum a_k x^k to sum a_k x^(k+1)/(k+1); the order increases by one
template <FieldElem F>
Series<F> series_integrate(const Series<F>& f) {
    Series<F> r(f.order() + 1);
    for (std::size_t i = 0; i < f.order(); ++i)
        r.set(i + 1, f[i] * F::from_int(static_cast<long>(i) + 1).inv());
    return r;
}

template <FieldElem F>
Series<F> series_exp(const Series<F>& f) {
    if (f.order() == 0) return f;
    if (!f[0].is_zero())
        throw std::domain_error("series exp requires zero constant term");
    Series<F> g(f.order());
    g.set(0, F::one());
    // g' = f' g, coefficient by coefficient
    for (std::size_t k = 1; k < f.order(); ++k) {
        F acc = F::zero();
        for (std::size_t j = 1; j <= k; ++j)
            acc = acc + f[j] * F::from_int(static_cast<long>(j)) * g[k - j];
        g.set(k, acc * F::from_int(static_cast<long>(k)).inv());
    }
    return g;
}

template <FieldElem F>
Series<F> series_log(const Series<F>& f) {
    if (f.order() == 0) return f;
    if (!(f[0] == F::one()))
        throw std::domain_error("series log requires constant term one");
    // log f = integral of f'/f
    Series<F> d = series_derivative(f);
    Series<F> q = d * series_inverse(f.truncated(f.order() - 1));
    return series_integrate(q).truncated(f.order());
}

// coefficient-wise product
template <FieldElem F>
Series<F> hadamard(const Series<F>& a, const Series<F>& b) {
    Series<F> r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i < r.order(); ++i) r.set(i, a[i] * b[i]);
    return r;
}

// f(s x) for a scalar s: coefficient k scaled by s^k
template <FieldElem F>
Series<F> series_scale_arg(const Series<F>& f, const F& s) {
    Series<F> r(f.order());
    F p = F::one();
    for (std::size_t i = 0; i < f.order(); ++i) {
        r.set(i, f[i] * p);
        p = p * s;
    }
    return r;
}

}  // namespace diagon

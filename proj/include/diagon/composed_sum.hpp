#pragma once

// Sums of c roots of a polynomial. PureComposedSum works over any exact
// coefficient field through the exponential generating function
//   N(Sigma_c P) (.) exp(y) = [z^c] exp( sum_{n=1..c} (-1)^(n-1) S(ny) z^n/n ),
// with S = N(P) (.) exp(y). The bivariate case evaluates at integer x-points
// and interpolates a^(D_x) Sigma_c P, Theorem-2 style.

#include <stdexcept>
#include <utility>
#include <vector>

#include "diagon/bipoly.hpp"
#include "diagon/newton.hpp"
#include "diagon/series.hpp"

namespace diagon {

namespace detail {

// truncated bivariate series in (y, z): slot k holds the z^k coefficient,
// every slot has the same y-order
template <FieldElem F>
std::vector<Series<F>> zmul(const std::vector<Series<F>>& a, const std::vector<Series<F>>& b,
                            std::size_t yorder) {
    std::vector<Series<F>> r(a.size(), Series<F>(yorder));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < r.size() && j < b.size(); ++j)
            r[i + j] = r[i + j] + a[i] * b[j];
    return r;
}

}  // namespace detail

// The monic polynomial of degree C(deg P, c) whose roots are the sums of c
// roots of P (indices distinct, roots with multiplicity).
template <FieldElem F>
Poly<F> pure_composed_sum(const Poly<F>& p, long c) {
    const long d = p.degree().value_or(-1);
    if (p.is_zero() || c < 1 || c > d) throw std::domain_error("composed sum: c out of range");
    const long dcap = binomial_long(static_cast<unsigned long>(d), static_cast<unsigned long>(c));
    const std::size_t order = static_cast<std::size_t>(dcap) + 1;

    Series<F> n = newton_series(p, order).inner;
    Series<F> s(order);
    {
        F invfact = F::one();
        for (std::size_t k = 0; k < order; ++k) {
            if (k > 0) invfact = invfact * F::from_int(static_cast<long>(k)).inv();
            s.set(k, n[k] * invfact);
        }
    }

    const std::size_t zslots = static_cast<std::size_t>(c) + 1;
    std::vector<Series<F>> arg(zslots, Series<F>(order));
    for (long m = 1; m <= c; ++m) {
        Series<F> sm = series_scale_arg(s, F::from_int(m)) * F::from_int(m).inv();
        if (m % 2 == 0) sm = -sm;
        arg[static_cast<std::size_t>(m)] = sm;
    }

    // exp(arg) truncated: arg has z-valuation 1, so c terms suffice
    std::vector<Series<F>> expo(zslots, Series<F>(order));
    expo[0] = Series<F>::constant(F::one(), order);
    std::vector<Series<F>> pw = expo;
    F invfact = F::one();
    for (long k = 1; k <= c; ++k) {
        pw = detail::zmul(pw, arg, order);
        invfact = invfact * F::from_int(k).inv();
        for (std::size_t i = 0; i < zslots; ++i) expo[i] = expo[i] + pw[i] * invfact;
    }

    Series<F> nc(order);
    {
        F fact = F::one();
        const Series<F>& zc = expo[static_cast<std::size_t>(c)];
        for (std::size_t k = 0; k < order; ++k) {
            if (k > 0) fact = fact * F::from_int(static_cast<long>(k));
            nc.set(k, zc[k] * fact);
        }
    }
    return poly_from_newton(NewtonSeries<F>{nc}, static_cast<std::size_t>(dcap));
}

struct ComposedSumResult {
    BiPoly poly;  // a(x)^Dx * Sigma_c P, canonical form
    long c = 0;
    long Dx = 0;  // C(d_y - 1, c - 1)
    long Dy = 0;  // C(d_y, c) = deg_y poly
    long lead_power_used = 0;
    std::vector<long> skipped_points;
};

// a^(D_x) Sigma_c P for bivariate P, by evaluation at 1 + d_x D_x good
// integer points and coefficient-wise interpolation.
inline ComposedSumResult composed_sum_xy(const BiPoly& p, long c) {
    const long dy = p.degree_y().value_or(-1);
    if (p.is_zero() || c < 1 || c > dy) throw std::domain_error("composed sum: c out of range");
    const long dx = p.degree_x().value_or(0);
    ComposedSumResult out;
    out.c = c;
    out.Dx = binomial_long(static_cast<unsigned long>(dy - 1), static_cast<unsigned long>(c - 1));
    out.Dy = binomial_long(static_cast<unsigned long>(dy), static_cast<unsigned long>(c));
    out.lead_power_used = out.Dx;

    const Poly<Rational> a = p.lead_coeff_y();
    const std::size_t points = static_cast<std::size_t>(dx * out.Dx) + 1;
    std::vector<Rational> xs;
    std::vector<Poly<Rational>> vals;
    xs.reserve(points);
    vals.reserve(points);
    for (long x0 = 0; xs.size() < points; ++x0) {
        Rational xv(x0);
        Rational ax = a.eval_coeff(xv);
        if (ax.is_zero()) {
            out.skipped_points.push_back(x0);
            continue;
        }
        Poly<Rational> sigma = pure_composed_sum(p.eval_x(xv), c);
        vals.push_back(sigma * rational_pow(ax, static_cast<unsigned long>(out.Dx)));
        xs.push_back(xv);
    }
    out.poly = canonical_form(BiPoly::from_poly_in_x(interpolate(xs, vals)));

    if (!(out.poly.degree_y() == Degree(static_cast<int>(out.Dy))) ||
        out.poly.degree_x().value_or(0) > dx * out.Dx)
        throw std::logic_error("composed sum exceeds its degree bounds");
    return out;
}

}  // namespace diagon

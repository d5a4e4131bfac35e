#pragma once

// Conversions between a polynomial and the generating series of the power
// sums of its roots:
//   N(P) = rec(P') / rec(P)
//   rec(P) = exp( integral (deg P - N(P)) / y dy )   (P monic)

#include <cstddef>
#include <stdexcept>

#include "diagon/poly.hpp"
#include "diagon/series.hpp"

namespace diagon {

// Generating series of the power sums of the roots; coefficient 0 is deg P.
template <FieldElem F>
struct NewtonSeries {
    Series<F> inner;
};

template <FieldElem F>
NewtonSeries<F> newton_series(const Poly<F>& p, std::size_t order) {
    if (p.is_zero()) throw std::domain_error("newton series of zero polynomial");
    if (p.degree() == 0) return {Series<F>(order)};  // constant: no roots
    Series<F> num(reciprocal(p.derivative()), order);
    Series<F> den(reciprocal(p), order);
    return {series_div(num, den)};
}

// The unique monic polynomial of degree d whose Newton series matches n.
template <FieldElem F>
Poly<F> poly_from_newton(const NewtonSeries<F>& n, std::size_t d) {
    if (n.inner.order() < d + 1) throw std::domain_error("insufficient Newton sums");
    if (!(n.inner[0] == F::from_int(static_cast<long>(d))))
        throw std::domain_error("Newton series does not match requested degree");
    // (d - N)/y, integrated, exponentiated: rec(P) mod y^(d+1)
    Series<F> g(d);  // coefficient k of (d - N)/y, k = 0..d-1
    for (std::size_t k = 0; k < d; ++k) g.set(k, -n.inner[k + 1]);
    Series<F> recp = series_exp(series_integrate(g));
    std::vector<F> coeffs(d + 1, F::zero());
    for (std::size_t i = 0; i <= d; ++i) coeffs[d - i] = recp[i];
    return Poly<F>(coeffs);  // monic since recp[0] = 1
}

}  // namespace diagon

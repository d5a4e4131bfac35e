#pragma once

// Polynomial canceling the residues of P/Q at the roots of a divisor Qhat of
// Q, multiple poles included, in polynomial time. For each square-free factor
// Q_i of multiplicity i the residue at a root of Q_i is the value of the
// coefficient S_{i-1} of t^(i-1) in P(y+t) / (U_i(y+t) V_i(y,t)^i), written
// as a reduced fraction A_i/B_i; the factor contributes
// Res_y(A_i - z B_i, Q_i), the Rothstein-Trager resultant when i = 1.

#include <stdexcept>
#include <utility>
#include <vector>

#include "diagon/bipoly.hpp"
#include "diagon/poly.hpp"

namespace diagon {

struct FactorReport {
    int multiplicity;
    int factor_deg_y;
    int resultant_deg_x;
};

struct ResidueAnnihilator {
    BiPoly poly;  // in (x, z), canonical form
    int z_degree = 0;
    std::vector<FactorReport> factor_reports;
};

// Coefficient of t^(i-1) of Pshift/Dshift as a series in t, returned as a
// coprime pair (A, B) of bivariate polynomials. The k-th series coefficient
// is carried as a bivariate numerator over Dshift(x,y,0)^(k+1); a single gcd
// at the end reduces the pair.
inline std::pair<BiPoly, BiPoly> residue_series_quotient(const TriPoly& pshift,
                                                         const TriPoly& dshift, int i) {
    if (i < 1) throw std::invalid_argument("series quotient order must be >= 1");
    BiPoly d0 = dshift.at_t0();
    if (d0.is_zero()) throw std::domain_error("zero denominator at t = 0");

    std::vector<BiPoly> d0pow(static_cast<std::size_t>(i), BiPoly::one());
    for (std::size_t k = 1; k < d0pow.size(); ++k) d0pow[k] = d0pow[k - 1] * d0;

    // n_k = p_k d0^k - sum_{j=1..k} d_j n_{k-j} d0^(j-1); S_k = n_k / d0^(k+1)
    std::vector<BiPoly> n(static_cast<std::size_t>(i));
    for (int k = 0; k < i; ++k) {
        BiPoly acc = pshift.coeff_t(static_cast<std::size_t>(k)) * d0pow[static_cast<std::size_t>(k)];
        for (int j = 1; j <= k; ++j)
            acc -= dshift.coeff_t(static_cast<std::size_t>(j)) *
                   n[static_cast<std::size_t>(k - j)] * d0pow[static_cast<std::size_t>(j - 1)];
        n[static_cast<std::size_t>(k)] = std::move(acc);
    }

    BiPoly a = n.back();
    BiPoly b = d0pow.back() * d0;
    if (a.is_zero()) return {BiPoly::zero(), BiPoly::one()};
    BiPoly g = bipoly_gcd(a, b);
    a = bipoly_exact_div(a, g);
    b = bipoly_exact_div(b, g);

    // deterministic pair scale: A integer-primitive with its lowest term
    // (y-major scan) positive, B scaled identically
    mpz_class den_lcm = 1, num_gcd = 0;
    a.for_each_term([&](std::size_t, std::size_t, const Rational& c) {
        mpz_class t;
        mpz_lcm(t.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
        den_lcm = t;
        mpz_gcd(t.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
        num_gcd = t;
    });
    Rational scale(den_lcm, num_gcd);
    Rational low;
    [&] {
        for (std::size_t j = 0; j <= static_cast<std::size_t>(a.degree_y().value()); ++j)
            for (std::size_t k = 0; k <= static_cast<std::size_t>(a.degree_x().value()); ++k)
                if (!a.coeff(k, j).is_zero()) {
                    low = a.coeff(k, j);
                    return;
                }
    }();
    if ((low * scale).is_negative()) scale = -scale;
    return {a * scale, b * scale};
}

// Res_y(A - z B, Q) by evaluation-interpolation in x, z carried symbolically
// through the fraction-free resultant over Q[z]. Returns a BiPoly in (x, z).
inline BiPoly resultant_y_linear_z(const BiPoly& a, const BiPoly& b, const BiPoly& q) {
    if (q.degree_y().value_or(0) < 1)
        throw std::domain_error("resultant factor must have positive y-degree");
    const int dyf = std::max(a.degree_y().value_or(0), b.degree_y().value_or(0));
    const int dxf = std::max(a.degree_x().value_or(0), b.degree_x().value_or(0));
    const int dyq = q.degree_y().value(), dxq = q.degree_x().value_or(0);
    const std::size_t points = static_cast<std::size_t>(dxf * dyq + dxq * dyf) + 1;

    using ZPoly = Poly<Rational>;
    std::vector<Rational> xs;
    std::vector<ZPoly> vals;
    xs.reserve(points);
    vals.reserve(points);
    for (long x0 = 0; xs.size() < points; ++x0) {
        Rational xv(x0);
        Poly<Rational> ae = a.eval_x(xv), be = b.eval_x(xv), qe = q.eval_x(xv);
        if (qe.degree() != Degree(dyq)) continue;
        if (ae[static_cast<std::size_t>(dyf)].is_zero() &&
            be[static_cast<std::size_t>(dyf)].is_zero())
            continue;  // y-degree of A - zB dropped
        std::vector<ZPoly> fy(static_cast<std::size_t>(dyf) + 1);
        for (std::size_t j = 0; j < fy.size(); ++j)
            fy[j] = ZPoly(std::vector<Rational>{ae[j], -be[j]});
        std::vector<ZPoly> qy(qe.size());
        for (std::size_t j = 0; j < qy.size(); ++j) qy[j] = ZPoly(qe[j]);
        vals.push_back(resultant(Poly<ZPoly>(std::move(fy)), Poly<ZPoly>(std::move(qy))));
        xs.push_back(xv);
    }
    return BiPoly::from_poly_in_x(interpolate(xs, vals));
}

// Algorithm "AlgebraicResidues": P, Q coprime wrt y, Qhat | Q with Qhat and
// Q/Qhat coprime. The output annihilates every residue of P/Q at roots of
// Qhat; factors with deg_y Q_i = 0 contribute 1.
inline ResidueAnnihilator algebraic_residues(const BiPoly& p, const BiPoly& q,
                                             const BiPoly& qhat) {
    if (q.degree_y().value_or(0) < 1) throw std::domain_error("denominator constant in y");
    if (p.is_zero()) throw std::domain_error("zero numerator has no residues");
    if (bipoly_gcd(p, q).degree_y().value_or(0) != 0)
        throw std::domain_error("numerator and denominator are not coprime");
    if (qhat.is_zero() || !bipoly_divides(qhat, q))
        throw std::domain_error("Qhat is not a valid divisor of Q");
    BiPoly cofactor = bipoly_exact_div(q, qhat);
    if (bipoly_gcd(qhat, cofactor).degree_y().value_or(0) != 0)
        throw std::domain_error("Qhat is not a valid divisor of Q");

    SquareFreeDecomposition dec = squarefree_decomposition_y(qhat);

    ResidueAnnihilator out;
    BiPoly r = BiPoly::one();
    TriPoly psh = shift_y(p);
    for (const auto& [qi, mult] : dec.factors) {
        const std::size_t m = static_cast<std::size_t>(mult);
        BiPoly u = bipoly_exact_div(q, bipoly_pow(qi, static_cast<unsigned long>(mult)));
        TriPoly v = (shift_y(qi) - TriPoly::from_bipoly(qi)).div_t();
        TriPoly den = mul_trunc_t(shift_y(u), tripoly_pow_trunc(v, static_cast<unsigned long>(mult), m), m);
        auto [ai, bi] = residue_series_quotient(psh.truncated_t(m), den, mult);
        BiPoly ri = resultant_y_linear_z(ai, bi, qi);
        out.factor_reports.push_back({mult, qi.degree_y().value(),
                                      ri.degree_x().value_or(0)});
        r *= ri;
    }
    out.poly = canonical_form(r);
    out.z_degree = out.poly.degree_y().value_or(0);

    // Theorem bounds: deg_z <= deg_y Qhat*, deg_x <= 2 dx dy
    int dy_star = dec.square_free_part().degree_y().value_or(0);
    int dx = std::max(p.degree_x().value_or(0), q.degree_x().value_or(0));
    int dy = std::max(p.degree_y().value_or(0), q.degree_y().value_or(0));
    if (out.z_degree > dy_star || out.poly.degree_x().value_or(0) > 2 * dx * dy)
        throw std::logic_error("residue annihilator exceeds its degree bounds");
    return out;
}

}  // namespace diagon

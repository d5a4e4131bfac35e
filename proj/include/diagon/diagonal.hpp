#pragma once

// Annihilating polynomials for diagonals of bivariate rational functions.
// Diag(A/B)(t) is the sum of the residues of (1/y)(A/B)(t/y, y) over the
// small branches of the transformed denominator, so a polynomial for the
// diagonal comes from canceling residues, then composing sums of c of them,
// where c counts the small branches. A pole at y = 0 (alpha < 0) carries a
// rational residue handled by a final shift of the variable.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "diagon/bipoly.hpp"
#include "diagon/composed_sum.hpp"
#include "diagon/ratfun.hpp"
#include "diagon/residues.hpp"
#include "diagon/series.hpp"

namespace diagon {

struct DiagDegrees {
    Degree ddeg_minus;  // sup{i - j}
    Degree ddeg_plus;   // sup{j - i}
};

inline DiagDegrees diag_degrees(const BiPoly& p) {
    DiagDegrees d{Degree::neg_inf(), Degree::neg_inf()};
    p.for_each_term([&](std::size_t i, std::size_t j, const Rational&) {
        d.ddeg_minus = max(d.ddeg_minus, Degree(static_cast<int>(i) - static_cast<int>(j)));
        d.ddeg_plus = max(d.ddeg_plus, Degree(static_cast<int>(j) - static_cast<int>(i)));
    });
    return d;
}

struct ResidueForm {
    BiPoly p;   // in (t, y)
    BiPoly q;   // in (t, y), q(t, 0) != 0
    int alpha;  // ddeg-(B) - ddeg-(A) - 1
};

// (1/y) (A/B)(t/y, y) = y^alpha P/Q with polynomial P, Q
inline ResidueForm to_residue_form(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero()) throw std::domain_error("zero numerator has no residue form");
    if (b.is_zero() || b.eval(Rational::zero(), Rational::zero()).is_zero())
        throw std::domain_error("denominator vanishes at origin");
    const int da = diag_degrees(a).ddeg_minus.value();
    const int db = diag_degrees(b).ddeg_minus.value();
    BiPoly p, q;
    a.for_each_term([&](std::size_t i, std::size_t j, const Rational& c) {
        p.add_term(i, static_cast<std::size_t>(da - static_cast<int>(i) + static_cast<int>(j)), c);
    });
    b.for_each_term([&](std::size_t i, std::size_t j, const Rational& c) {
        q.add_term(i, static_cast<std::size_t>(db - static_cast<int>(i) + static_cast<int>(j)), c);
    });
    if (q.poly_in_y()[0].is_zero()) throw std::logic_error("residue form denominator vanishes at y = 0");
    return {std::move(p), std::move(q), db - da - 1};
}

// Number of distinct Puiseux branches y(t) of the transformed denominator
// with val_t y(t) > 0, read off the Newton polygon:
//   c = Nsmall(B*) + ddeg-(B*),  Nsmall(P) = val_y([x^(val_x P)] P)
// with B* the square-free part of B (content included).
inline int small_branch_count(const BiPoly& b) {
    if (b.is_zero() || b.eval(Rational::zero(), Rational::zero()).is_zero())
        throw std::domain_error("denominator vanishes at origin");
    BiPoly w = full_square_free_part_y(b);
    int valx = w.degree_x().value();
    w.for_each_term([&](std::size_t i, std::size_t, const Rational&) {
        valx = std::min(valx, static_cast<int>(i));
    });
    int valy = w.degree_y().value();
    w.for_each_term([&](std::size_t i, std::size_t j, const Rational&) {
        if (static_cast<int>(i) == valx) valy = std::min(valy, static_cast<int>(j));
    });
    return valy + diag_degrees(w).ddeg_minus.value();
}

// Coefficient of y^(-alpha-1) in the Laurent expansion of y^alpha P/Q at
// y = 0, a rational function of t.
inline RatFunQ residue_at_origin(const BiPoly& p, const BiPoly& q, int alpha) {
    if (alpha >= 0) throw std::domain_error("origin residue requires alpha < 0");
    const std::size_t order = static_cast<std::size_t>(-alpha);
    YOverX py = p.poly_in_y(), qy = q.poly_in_y();
    if (qy[0].is_zero()) throw std::domain_error("denominator vanishes at y = 0");
    std::vector<RatFunQ> pc(order), qc(order);
    for (std::size_t j = 0; j < order; ++j) {
        pc[j] = RatFunQ(py[j]);
        qc[j] = RatFunQ(qy[j]);
    }
    Series<RatFunQ> sp{std::move(pc)}, sq{std::move(qc)};
    return series_div(sp, sq)[order - 1];
}

// phi(t, Delta - r) with denominators of r cleared: sum_j c_j(t) q^(J-j) (q Delta - p)^j
inline BiPoly shift_delta_by(const BiPoly& phi, const RatFunQ& r) {
    const int jmax = phi.degree_y().value_or(0);
    const BiPoly pn = BiPoly::from_unipoly(r.num(), true);
    const BiPoly qn = BiPoly::from_unipoly(r.den(), true);
    BiPoly lin = qn * BiPoly::monomial(0, 1, Rational::one()) - pn;  // q*Delta - p
    YOverX cj = phi.poly_in_y();
    BiPoly out;
    BiPoly linp = BiPoly::one();
    std::vector<BiPoly> qpow(static_cast<std::size_t>(jmax) + 1, BiPoly::one());
    for (std::size_t k = 1; k <= static_cast<std::size_t>(jmax); ++k) qpow[k] = qpow[k - 1] * qn;
    for (int j = 0; j <= jmax; ++j) {
        if (!cj[static_cast<std::size_t>(j)].is_zero())
            out += BiPoly::from_unipoly(cj[static_cast<std::size_t>(j)], true) *
                   qpow[static_cast<std::size_t>(jmax - j)] * linp;
        if (j < jmax) linp *= lin;
    }
    return out;
}

struct DegreeReport {
    int deg_t = 0;
    int deg_delta = 0;
    long delta_bound = 0;  // C(D_y, c)
    long t_bound = 0;      // D_x * C(D_y, c)
};

struct DiagonalAnnihilator {
    BiPoly phi;  // in (t, Delta), canonical form
    int c_small = 0;
    int alpha = 0;
    std::optional<RatFunQ> origin_residue;
    DegreeReport degree_report;
};

inline DiagonalAnnihilator algebraic_diagonal(const BiPoly& a_in, const BiPoly& b_in) {
    if (b_in.is_zero()) throw std::domain_error("denominator is zero");
    if (b_in.eval(Rational::zero(), Rational::zero()).is_zero())
        throw std::domain_error("denominator vanishes at origin");

    DiagonalAnnihilator out;
    const BiPoly delta = BiPoly::monomial(0, 1, Rational::one());
    if (a_in.is_zero()) {
        out.phi = delta;
        out.degree_report = {0, 1, 1, 0};
        return out;
    }
    auto [a, b] = bipoly_reduce(a_in, b_in);

    ResidueForm rf = to_residue_form(a, b);
    out.alpha = rf.alpha;
    const int c = small_branch_count(b);
    out.c_small = c;

    BiPoly phi;
    if (c == 0) {
        phi = delta;
    } else {
        ResidueAnnihilator res =
            rf.alpha >= 0
                ? algebraic_residues(
                      BiPoly::monomial(0, static_cast<std::size_t>(rf.alpha), Rational::one()) * rf.p,
                      rf.q, rf.q)
                : algebraic_residues(
                      rf.p,
                      BiPoly::monomial(0, static_cast<std::size_t>(-rf.alpha), Rational::one()) * rf.q,
                      rf.q);
        phi = composed_sum_xy(res.poly, c).poly;
    }
    if (rf.alpha < 0) {
        RatFunQ r = residue_at_origin(rf.p, rf.q, rf.alpha);
        out.origin_residue = r;
        phi = shift_delta_by(phi, r);
    }
    out.phi = canonical_form(phi);

    // Theorem bounds from the reduced input
    BiPoly bstar = full_square_free_part_y(b);
    DiagDegrees sb = diag_degrees(bstar);
    const long dY = sb.ddeg_minus.value() + sb.ddeg_plus.value();
    const long dx = std::max(a.degree_x().value_or(0), b.degree_x().value_or(0));
    const long dy = std::max(a.degree_y().value_or(0), b.degree_y().value_or(0));
    const long dxs = bstar.degree_x().value_or(0);
    const long dys = bstar.degree_y().value_or(0);
    const long dX = 2 * dx * (dx + dy + 1) + dx - 2 * (dx - dxs) * (dx - dxs + dy - dys + 1);
    out.degree_report.delta_bound = binomial_long(static_cast<unsigned long>(dY),
                                                  static_cast<unsigned long>(c));
    out.degree_report.t_bound = dX * out.degree_report.delta_bound;
    out.degree_report.deg_t = out.phi.degree_x().value_or(0);
    out.degree_report.deg_delta = out.phi.degree_y().value_or(0);
    if (out.degree_report.deg_delta > out.degree_report.delta_bound ||
        out.degree_report.deg_t > out.degree_report.t_bound)
        throw std::logic_error("diagonal annihilator exceeds its degree bounds");
    return out;
}

// Diag_{p,q} F(s) = sum f_{pn,qn} s^n, annihilated by eliminating u between
// Psi(u, Delta) for Diag F(x^q, y^p) and u^(pq) - s.
inline DiagonalAnnihilator sloped_diagonal(const BiPoly& a, const BiPoly& b, long p, long q) {
    if (p < 1 || q < 1) throw std::domain_error("slope components must be positive");
    mpz_class g;
    mpz_class mp(p), mq(q);
    mpz_gcd(g.get_mpz_t(), mp.get_mpz_t(), mq.get_mpz_t());
    if (g != 1) throw std::domain_error("slope components must be coprime");
    if (b.is_zero()) throw std::domain_error("denominator is zero");
    DiagonalAnnihilator inner =
        algebraic_diagonal(a.dilated(static_cast<std::size_t>(q), static_cast<std::size_t>(p)),
                           b.dilated(static_cast<std::size_t>(q), static_cast<std::size_t>(p)));
    if (p == 1 && q == 1) return inner;

    // polynomials in u over Q[s][Delta]
    using SD = Poly<Poly<Rational>>;  // inner s, outer Delta
    using USD = Poly<SD>;
    const std::size_t pq = static_cast<std::size_t>(p * q);
    YOverX psi = inner.phi.poly_in_x();  // coefficient of u^i is a Delta-poly
    std::vector<SD> uc(psi.size());
    for (std::size_t i = 0; i < psi.size(); ++i) {
        std::vector<Poly<Rational>> dc(psi[i].size());
        for (std::size_t j = 0; j < psi[i].size(); ++j) dc[j] = Poly<Rational>(psi[i][j]);
        uc[i] = SD(std::move(dc));
    }
    USD psiU(std::move(uc));
    std::vector<SD> kern(pq + 1);
    kern[0] = SD(Poly<Rational>(std::vector<Rational>{Rational::zero(), -Rational::one()}));  // -s
    kern[pq] = SD::one();
    USD kernel(std::move(kern));

    SD res = resultant(psiU, kernel);
    BiPoly phi;
    for (std::size_t j = 0; j < res.size(); ++j)
        for (std::size_t i = 0; i < res[j].size(); ++i)
            if (!res[j][i].is_zero()) phi.add_term(i, j, res[j][i]);

    DiagonalAnnihilator out = inner;
    out.phi = canonical_form(phi);
    out.degree_report.deg_t = out.phi.degree_x().value_or(0);
    out.degree_report.deg_delta = out.phi.degree_y().value_or(0);
    out.degree_report.delta_bound = inner.degree_report.delta_bound;
    out.degree_report.t_bound = inner.degree_report.t_bound * static_cast<long>(pq);
    return out;
}

// First n diagonal coefficients by full bivariate series division.
inline Series<Rational> diagonal_series(const BiPoly& a, const BiPoly& b, std::size_t n) {
    if (b.is_zero()) throw std::domain_error("denominator is zero");
    Rational b00 = b.eval(Rational::zero(), Rational::zero());
    if (b00.is_zero()) throw std::domain_error("denominator vanishes at origin");
    Rational inv00 = b00.inv();
    // s = a/b mod (x^n, y^n)
    std::vector<std::vector<Rational>> s(n, std::vector<Rational>(n, Rational::zero()));
    std::vector<std::tuple<std::size_t, std::size_t, Rational>> bterms;
    b.for_each_term([&](std::size_t i, std::size_t j, const Rational& c) {
        if ((i != 0 || j != 0) && i < n && j < n) bterms.emplace_back(i, j, c);
    });
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational acc = a.coeff(i, j);
            for (const auto& [k, l, c] : bterms)
                if (k <= i && l <= j) acc -= c * s[i - k][j - l];
            s[i][j] = acc * inv00;
        }
    Series<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) out.set(i, s[i][i]);
    return out;
}

// phi(t, f(t)) = 0 mod t^n, by Horner in Delta over truncated series.
inline bool annihilation_check(const BiPoly& phi, const Series<Rational>& f, std::size_t n) {
    const std::size_t order = std::min(n, f.order());
    Series<Rational> ft = f.truncated(order);
    YOverX cj = phi.poly_in_y();
    Series<Rational> acc(order);
    for (std::size_t j = cj.size(); j-- > 0;) {
        acc = acc * ft;
        acc = acc + Series<Rational>(cj[j], order);
    }
    return acc.is_zero();
}

}  // namespace diagon

#pragma once

// Dense bivariate and trivariate polynomials over Q, the carriers of the
// main pipeline. A BiPoly is a rectangular coefficient array; the main
// variable of an operation (x or y) is a per-call convention, switched via
// nested-polynomial views. Also hosts square-free decomposition wrt a chosen
// variable, bivariate resultants by evaluation-interpolation over the integer
// grid 0, 1, 2, ... with bad-point skipping, Taylor shift y -> y + t, and the
// canonical normalization used for every returned annihilator.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "diagon/degree.hpp"
#include "diagon/poly.hpp"
#include "diagon/rational.hpp"

namespace diagon {

using XPoly = Poly<Rational>;          // Q[x]
using YOverX = Poly<Poly<Rational>>;   // Q[x][y], outer variable y

class BiPoly {
public:
    BiPoly() = default;

    static BiPoly zero() { return BiPoly(); }
    static BiPoly one() { return constant(Rational::one()); }
    static BiPoly constant(Rational c) { return monomial(0, 0, std::move(c)); }
    static BiPoly from_int(long n) { return constant(Rational(n)); }

    static BiPoly monomial(std::size_t i, std::size_t j, Rational c) {
        BiPoly p;
        if (c.is_zero()) return p;
        p.nx_ = i + 1;
        p.ny_ = j + 1;
        p.c_.assign(p.nx_ * p.ny_, Rational::zero());
        p.c_[i + p.nx_ * j] = std::move(c);
        return p;
    }

    // x-polynomial lifted to a bivariate value; `var` selects which slot
    static BiPoly from_unipoly(const Poly<Rational>& p, bool as_x) {
        BiPoly r;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (!p[i].is_zero()) r.add_term(as_x ? i : 0, as_x ? 0 : i, p[i]);
        return r;
    }

    static BiPoly from_poly_in_y(const YOverX& p) {
        BiPoly r;
        for (std::size_t j = 0; j < p.size(); ++j)
            for (std::size_t i = 0; i < p[j].size(); ++i)
                if (!p[j][i].is_zero()) r.add_term(i, j, p[j][i]);
        return r;
    }
    static BiPoly from_poly_in_x(const YOverX& p) {
        BiPoly r;
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = 0; j < p[i].size(); ++j)
                if (!p[i][j].is_zero()) r.add_term(i, j, p[i][j]);
        return r;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return nx_ <= 1 && ny_ <= 1; }

    Degree degree_x() const { return is_zero() ? Degree::neg_inf() : Degree(static_cast<int>(nx_) - 1); }
    Degree degree_y() const { return is_zero() ? Degree::neg_inf() : Degree(static_cast<int>(ny_) - 1); }

    const Rational& coeff(std::size_t i, std::size_t j) const {
        static const Rational kZero;
        if (i >= nx_ || j >= ny_) return kZero;
        return c_[i + nx_ * j];
    }

    void add_term(std::size_t i, std::size_t j, const Rational& c) {
        if (c.is_zero()) return;
        grow(i + 1, j + 1);
        c_[i + nx_ * j] += c;
        if (i + 1 == nx_ || j + 1 == ny_) trim();
    }

    YOverX poly_in_y() const {
        std::vector<Poly<Rational>> rows;
        rows.reserve(ny_);
        for (std::size_t j = 0; j < ny_; ++j) {
            std::vector<Rational> row(c_.begin() + nx_ * j, c_.begin() + nx_ * (j + 1));
            rows.emplace_back(std::move(row));
        }
        return YOverX(std::move(rows));
    }
    YOverX poly_in_x() const {
        std::vector<Poly<Rational>> cols;
        cols.reserve(nx_);
        for (std::size_t i = 0; i < nx_; ++i) {
            std::vector<Rational> col;
            col.reserve(ny_);
            for (std::size_t j = 0; j < ny_; ++j) col.push_back(c_[i + nx_ * j]);
            cols.emplace_back(std::move(col));
        }
        return YOverX(std::move(cols));
    }

    BiPoly transposed() const {
        BiPoly r;
        for (std::size_t j = 0; j < ny_; ++j)
            for (std::size_t i = 0; i < nx_; ++i)
                if (!coeff(i, j).is_zero()) r.add_term(j, i, coeff(i, j));
        return r;
    }

    Poly<Rational> eval_x(const Rational& x0) const {
        std::vector<Rational> out(ny_, Rational::zero());
        for (std::size_t j = 0; j < ny_; ++j) {
            Rational acc;
            for (std::size_t i = nx_; i-- > 0;) acc = acc * x0 + coeff(i, j);
            out[j] = acc;
        }
        return Poly<Rational>(std::move(out));
    }
    Poly<Rational> eval_y(const Rational& y0) const {
        std::vector<Rational> out(nx_, Rational::zero());
        for (std::size_t i = 0; i < nx_; ++i) {
            Rational acc;
            for (std::size_t j = ny_; j-- > 0;) acc = acc * y0 + coeff(i, j);
            out[i] = acc;
        }
        return Poly<Rational>(std::move(out));
    }

    Rational eval(const Rational& x0, const Rational& y0) const { return eval_x(x0).eval_coeff(y0); }

    // leading coefficient wrt y, an element of Q[x]
    Poly<Rational> lead_coeff_y() const {
        if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
        std::vector<Rational> row(c_.begin() + nx_ * (ny_ - 1), c_.end());
        return Poly<Rational>(std::move(row));
    }

    BiPoly derivative_y() const {
        BiPoly r;
        for (std::size_t j = 1; j < ny_; ++j)
            for (std::size_t i = 0; i < nx_; ++i)
                if (!coeff(i, j).is_zero())
                    r.add_term(i, j - 1, coeff(i, j) * Rational(static_cast<long>(j)));
        return r;
    }

    bool operator==(const BiPoly& o) const { return nx_ == o.nx_ && ny_ == o.ny_ && c_ == o.c_; }
    bool operator!=(const BiPoly& o) const { return !(*this == o); }

    BiPoly operator-() const {
        BiPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        BiPoly r = a;
        for (std::size_t j = 0; j < b.ny_; ++j)
            for (std::size_t i = 0; i < b.nx_; ++i)
                if (!b.coeff(i, j).is_zero()) r.add_term(i, j, b.coeff(i, j));
        r.trim();
        return r;
    }
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        if (a.is_zero() || b.is_zero()) return BiPoly();
        BiPoly r;
        r.nx_ = a.nx_ + b.nx_ - 1;
        r.ny_ = a.ny_ + b.ny_ - 1;
        r.c_.assign(r.nx_ * r.ny_, Rational::zero());
        for (std::size_t j = 0; j < a.ny_; ++j)
            for (std::size_t i = 0; i < a.nx_; ++i) {
                const Rational& ca = a.coeff(i, j);
                if (ca.is_zero()) continue;
                for (std::size_t l = 0; l < b.ny_; ++l)
                    for (std::size_t k = 0; k < b.nx_; ++k) {
                        const Rational& cb = b.coeff(k, l);
                        if (!cb.is_zero()) r.c_[(i + k) + r.nx_ * (j + l)] += ca * cb;
                    }
            }
        r.trim();
        return r;
    }
    friend BiPoly operator*(const BiPoly& a, const Rational& s) {
        if (s.is_zero()) return BiPoly();
        BiPoly r = a;
        for (auto& c : r.c_) c *= s;
        return r;
    }

    BiPoly& operator+=(const BiPoly& o) { return *this = *this + o; }
    BiPoly& operator-=(const BiPoly& o) { return *this = *this - o; }
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

    // substitute x -> x^a, y -> y^b (exponent dilation, used by sloped diagonals)
    BiPoly dilated(std::size_t a, std::size_t b) const {
        BiPoly r;
        for (std::size_t j = 0; j < ny_; ++j)
            for (std::size_t i = 0; i < nx_; ++i)
                if (!coeff(i, j).is_zero()) r.add_term(i * a, j * b, coeff(i, j));
        return r;
    }

    template <class Fn>
    void for_each_term(Fn&& fn) const {
        for (std::size_t j = 0; j < ny_; ++j)
            for (std::size_t i = 0; i < nx_; ++i)
                if (!coeff(i, j).is_zero()) fn(i, j, coeff(i, j));
    }

private:
    std::size_t nx_ = 0, ny_ = 0;
    std::vector<Rational> c_;

    void grow(std::size_t nx, std::size_t ny) {
        nx = std::max(nx, nx_);
        ny = std::max(ny, ny_);
        if (nx == nx_ && ny == ny_) return;
        std::vector<Rational> nc(nx * ny, Rational::zero());
        for (std::size_t j = 0; j < ny_; ++j)
            for (std::size_t i = 0; i < nx_; ++i) nc[i + nx * j] = std::move(c_[i + nx_ * j]);
        c_ = std::move(nc);
        nx_ = nx;
        ny_ = ny;
    }

    void trim() {
        std::size_t nx = 0, ny = 0;
        for (std::size_t j = 0; j < ny_; ++j)
            for (std::size_t i = 0; i < nx_; ++i)
                if (!c_[i + nx_ * j].is_zero()) {
                    nx = std::max(nx, i + 1);
                    ny = std::max(ny, j + 1);
                }
        if (nx == nx_ && ny == ny_) return;
        if (nx == 0) {
            nx_ = ny_ = 0;
            c_.clear();
            return;
        }
        std::vector<Rational> nc(nx * ny, Rational::zero());
        for (std::size_t j = 0; j < ny; ++j)
            for (std::size_t i = 0; i < nx; ++i) nc[i + nx * j] = std::move(c_[i + nx_ * j]);
        c_ = std::move(nc);
        nx_ = nx;
        ny_ = ny;
    }
};

inline BiPoly bipoly_pow(const BiPoly& base, unsigned long e) {
    BiPoly r = BiPoly::one();
    BiPoly b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// gcd wrt y over Q[x] (contents included), unit-normalized
inline BiPoly bipoly_gcd(const BiPoly& a, const BiPoly& b) {
    return BiPoly::from_poly_in_y(poly_gcd(a.poly_in_y(), b.poly_in_y()));
}

inline BiPoly bipoly_exact_div(const BiPoly& a, const BiPoly& b) {
    return BiPoly::from_poly_in_y(exact_div(a.poly_in_y(), b.poly_in_y()));
}

inline bool bipoly_divides(const BiPoly& d, const BiPoly& a) {
    if (a.is_zero()) return true;
    if (d.is_zero()) return false;
    try {
        (void)exact_div(a.poly_in_y(), d.poly_in_y());
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

// gcd of numerator/denominator removed; both scaled by the same unit
inline std::pair<BiPoly, BiPoly> bipoly_reduce(const BiPoly& num, const BiPoly& den) {
    if (den.is_zero()) throw std::domain_error("denominator is zero");
    if (num.is_zero()) return {num, den};
    BiPoly g = bipoly_gcd(num, den);
    return {bipoly_exact_div(num, g), bipoly_exact_div(den, g)};
}

// ---- canonical normalization --------------------------------------------
//
// Integer-primitive scaling (clear denominators, divide by integer content)
// and a deterministic sign: the leading coefficient wrt the main variable
// (the second index), read as a polynomial in the other variable, must have
// a positive lowest-degree nonzero coefficient. This keeps the classical
// shapes (1-4x) z^2 - 1 and 4x z^2 - 1 fixed.

inline BiPoly canonical_form(const BiPoly& p) {
    if (p.is_zero()) return p;
    mpz_class den_lcm = 1, num_gcd = 0;
    p.for_each_term([&](std::size_t, std::size_t, const Rational& c) {
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
        den_lcm = l;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
        num_gcd = g;
    });
    Rational scale(den_lcm, num_gcd);
    int dy = p.degree_y().value();
    Rational lead_low;
    for (std::size_t i = 0;; ++i) {
        const Rational& c = p.coeff(i, static_cast<std::size_t>(dy));
        if (!c.is_zero()) {
            lead_low = c;
            break;
        }
    }
    if ((lead_low * scale).is_negative()) scale = -scale;
    return p * scale;
}

// ---- square-free decomposition -------------------------------------------

// Q = content(x) * prod Q_i^i with the Q_i square-free wrt y, pairwise
// coprime, listed by increasing multiplicity. Factors are integer-primitive
// with positive leading scalar.
struct SquareFreeDecomposition {
    std::vector<std::pair<BiPoly, int>> factors;  // (factor, multiplicity)
    Poly<Rational> content;                       // in the non-main variable

    BiPoly square_free_part() const {
        BiPoly r = BiPoly::one();
        for (const auto& [f, m] : factors) r *= f;
        return r;
    }
    int max_multiplicity() const {
        int m = 0;
        for (const auto& [f, mult] : factors) m = std::max(m, mult);
        return m;
    }
    BiPoly reconstruct(bool content_as_x) const {
        BiPoly r = BiPoly::from_unipoly(content, content_as_x);
        for (const auto& [f, m] : factors) r *= bipoly_pow(f, static_cast<unsigned long>(m));
        return r;
    }
};

// Yun's algorithm wrt y, gcds by primitive pseudo-remainder sequences.
inline SquareFreeDecomposition squarefree_decomposition_y(const BiPoly& q) {
    if (q.is_zero()) throw std::domain_error("zero polynomial has no square-free decomposition");
    SquareFreeDecomposition out;
    YOverX p = q.poly_in_y();
    if (p.degree() == 0) {
        out.content = p[0];
        return out;
    }
    YOverX w = primitive_part(p);
    YOverX wp = w.derivative();
    YOverX g = poly_gcd(w, wp);
    YOverX c = exact_div(w, g);
    YOverX d = exact_div(wp, g) - c.derivative();
    for (int i = 1; c.degree() > 0; ++i) {
        YOverX qi = poly_gcd(c, d);
        c = exact_div(c, qi);
        d = exact_div(d, qi) - c.derivative();
        if (qi.degree() > 0) out.factors.emplace_back(BiPoly::from_poly_in_y(normalize_unit(qi)), i);
    }
    // whatever scalar and x-content remain reconstructs the input exactly
    YOverX prod = YOverX::one();
    for (const auto& [f, m] : out.factors) prod = prod * poly_pow(f.poly_in_y(), static_cast<unsigned long>(m));
    YOverX rest = exact_div(p, prod);
    if (rest.degree() != 0) throw std::logic_error("square-free decomposition reconstruction failed");
    out.content = rest[0];
    return out;
}

enum class Var { X, Y };

inline SquareFreeDecomposition squarefree_decomposition(const BiPoly& q, Var wrt) {
    if (wrt == Var::Y) return squarefree_decomposition_y(q);
    SquareFreeDecomposition d = squarefree_decomposition_y(q.transposed());
    for (auto& [f, m] : d.factors) f = f.transposed();
    return d;
}

// square-free part of the full polynomial, x-content included (the paper's
// Q*, where multiplicity is dropped from every factor, also the x-only ones)
inline BiPoly full_square_free_part_y(const BiPoly& q) {
    SquareFreeDecomposition d = squarefree_decomposition_y(q);
    BiPoly r = d.square_free_part();
    if (d.content.degree() > 0) {
        // square-free part of the univariate content
        Poly<Rational> g = poly_gcd(d.content, d.content.derivative());
        Poly<Rational> sf = exact_div(d.content, g);
        r *= BiPoly::from_unipoly(normalize_unit(sf), true);
    }
    return r;
}

// ---- resultants wrt y by evaluation-interpolation -------------------------

// Degree budget from the bidegrees: deg_x Res <= dxP*dyQ + dxQ*dyP.
// Evaluation points run through 0, 1, 2, ...; a point is bad when the
// y-degree of either operand drops there.
inline Poly<Rational> resultant_y(const BiPoly& p, const BiPoly& q) {
    if (p.is_zero() || q.is_zero()) return Poly<Rational>();
    const int dyp = p.degree_y().value(), dyq = q.degree_y().value();
    if (dyp == 0 && dyq == 0) throw std::domain_error("resultant: both operands constant in y");
    const int dxp = p.degree_x().value(), dxq = q.degree_x().value();
    const std::size_t points = static_cast<std::size_t>(dxp * dyq + dxq * dyp) + 1;
    std::vector<Rational> xs;
    std::vector<Rational> vals;
    xs.reserve(points);
    vals.reserve(points);
    for (long x0 = 0; xs.size() < points; ++x0) {
        Rational xv(x0);
        Poly<Rational> pe = p.eval_x(xv);
        Poly<Rational> qe = q.eval_x(xv);
        if (pe.degree() != Degree(dyp) || qe.degree() != Degree(dyq)) continue;  // bad point
        xs.push_back(xv);
        vals.push_back(resultant(pe, qe));
    }
    return interpolate(xs, vals);
}

// ---- Taylor shift y -> y + t ----------------------------------------------

// Dense trivariate polynomials in (x, y, t), stored as t-slices.
class TriPoly {
public:
    TriPoly() = default;
    explicit TriPoly(std::vector<BiPoly> tslices) : tc_(std::move(tslices)) { trim(); }
    static TriPoly from_bipoly(const BiPoly& p) { return TriPoly(std::vector<BiPoly>{p}); }

    bool is_zero() const { return tc_.empty(); }
    Degree degree_t() const {
        return tc_.empty() ? Degree::neg_inf() : Degree(static_cast<int>(tc_.size()) - 1);
    }
    std::size_t t_size() const { return tc_.size(); }
    const BiPoly& coeff_t(std::size_t k) const {
        static const BiPoly kZero;
        return k < tc_.size() ? tc_[k] : kZero;
    }
    const Rational& coeff(std::size_t i, std::size_t j, std::size_t k) const {
        return coeff_t(k).coeff(i, j);
    }
    BiPoly at_t0() const { return coeff_t(0); }

    bool operator==(const TriPoly& o) const { return tc_ == o.tc_; }

    friend TriPoly operator-(const TriPoly& a, const TriPoly& b) {
        std::vector<BiPoly> r(std::max(a.tc_.size(), b.tc_.size()));
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff_t(k) - b.coeff_t(k);
        return TriPoly(std::move(r));
    }

    // exact division by t
    TriPoly div_t() const {
        if (is_zero()) return *this;
        if (!tc_[0].is_zero()) throw std::domain_error("trivariate division by t is inexact");
        return TriPoly(std::vector<BiPoly>(tc_.begin() + 1, tc_.end()));
    }

    TriPoly truncated_t(std::size_t order) const {
        std::vector<BiPoly> r(tc_.begin(), tc_.begin() + std::min(order, tc_.size()));
        return TriPoly(std::move(r));
    }

    friend TriPoly mul_trunc_t(const TriPoly& a, const TriPoly& b, std::size_t order) {
        if (a.is_zero() || b.is_zero() || order == 0) return TriPoly();
        std::vector<BiPoly> r(std::min(order, a.tc_.size() + b.tc_.size() - 1));
        for (std::size_t i = 0; i < a.tc_.size() && i < order; ++i) {
            if (a.tc_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.tc_.size() && i + j < order; ++j)
                r[i + j] += a.tc_[i] * b.tc_[j];
        }
        return TriPoly(std::move(r));
    }

    // max over terms of (j + k), the total degree in (y, t)
    Degree total_degree_yt() const {
        Degree d = Degree::neg_inf();
        for (std::size_t k = 0; k < tc_.size(); ++k)
            tc_[k].for_each_term([&](std::size_t, std::size_t j, const Rational&) {
                d = max(d, Degree(static_cast<int>(j + k)));
            });
        return d;
    }

private:
    std::vector<BiPoly> tc_;

    void trim() {
        while (!tc_.empty() && tc_.back().is_zero()) tc_.pop_back();
    }
};

inline TriPoly tripoly_pow_trunc(const TriPoly& base, unsigned long e, std::size_t order) {
    TriPoly r = TriPoly::from_bipoly(BiPoly::one());
    TriPoly b = base.truncated_t(order);
    while (e) {
        if (e & 1) r = mul_trunc_t(r, b, order);
        b = mul_trunc_t(b, b, order);
        e >>= 1;
    }
    return r;
}

// P(x, y + t) via binomial expansion of each y-power
inline TriPoly shift_y(const BiPoly& p) {
    if (p.is_zero()) return TriPoly();
    const std::size_t ny = static_cast<std::size_t>(p.degree_y().value()) + 1;
    std::vector<BiPoly> slices(ny);
    p.for_each_term([&](std::size_t i, std::size_t j, const Rational& c) {
        for (std::size_t k = 0; k <= j; ++k)
            slices[k].add_term(i, j - k, c * Rational(binomial_mpz(j, k)));
    });
    return TriPoly(std::move(slices));
}

}  // namespace diagon

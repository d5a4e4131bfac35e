#include <catch2/catch_amalgamated.hpp>

#include "diagon/diagonal.hpp"
#include "oracles.hpp"

using namespace diagon;

namespace {
BiPoly b(std::initializer_list<std::array<long, 3>> terms) {
    BiPoly p;
    for (const auto& t : terms)
        p.add_term(static_cast<std::size_t>(t[0]), static_cast<std::size_t>(t[1]), Rational(t[2]));
    return p;
}
const BiPoly kOneMinusXY = b({{0, 0, 1}, {1, 0, -1}, {0, 1, -1}});  // 1 - x - y
}  // namespace

TEST_CASE("diag degrees") {
    auto d = diag_degrees(kOneMinusXY);
    CHECK(d.ddeg_minus == 1);
    CHECK(d.ddeg_plus == 1);
    auto m = diag_degrees(b({{3, 0, 1}}));
    CHECK(m.ddeg_minus == 3);
    CHECK(m.ddeg_plus == Degree(-3));
    auto z = diag_degrees(BiPoly());
    CHECK(z.ddeg_minus.is_neg_inf());
    CHECK(z.ddeg_plus.is_neg_inf());
}

TEST_CASE("to_residue_form") {
    auto r = to_residue_form(BiPoly::one(), kOneMinusXY);
    CHECK(r.p == BiPoly::one());
    CHECK(r.q == b({{0, 1, 1}, {1, 0, -1}, {0, 2, -1}}));  // y - t - y^2
    CHECK(r.alpha == 0);

    for (int d = 1; d <= 3; ++d) {
        auto du = static_cast<std::size_t>(d);
        BiPoly a = BiPoly::monomial(du - 1, 0, Rational::one());
        BiPoly bb = BiPoly::one() - BiPoly::monomial(du, 0, Rational::one()) -
                    BiPoly::monomial(0, du + 1, Rational::one());
        auto rf = to_residue_form(a, bb);
        CHECK(rf.p == BiPoly::monomial(du - 1, 0, Rational::one()));
        BiPoly qexp = BiPoly::monomial(0, du, Rational::one()) -
                      BiPoly::monomial(du, 0, Rational::one()) -
                      BiPoly::monomial(0, 2 * du + 1, Rational::one());
        CHECK(rf.q == qexp);
        CHECK(rf.alpha == 0);
    }

    auto r2 = to_residue_form(b({{1, 0, 1}}), kOneMinusXY);
    CHECK(r2.p == b({{1, 0, 1}}));
    CHECK(r2.alpha == -1);

    CHECK_THROWS_WITH(to_residue_form(BiPoly::one(), b({{1, 0, 1}, {0, 1, 1}})),
                      Catch::Matchers::ContainsSubstring("vanishes at origin"));
}

TEST_CASE("identity of the residue form") {
    // y^alpha P/Q equals (1/y)(A/B)(t/y, y) at sample points
    oracles::Rng rng(55);
    int done = 0;
    while (done < 15) {
        BiPoly a = rng.nonzero_bipoly(2, 2, -4, 4);
        BiPoly bb = rng.nonzero_bipoly(2, 2, -4, 4);
        if (bb.eval(Rational::zero(), Rational::zero()).is_zero()) continue;
        auto rf = to_residue_form(a, bb);
        Rational t0(rng.integer(2, 7)), y0(rng.integer(2, 7));
        Rational x0 = t0 / y0;
        if (bb.eval(x0, y0).is_zero() || rf.q.eval(t0, y0).is_zero()) continue;
        Rational lhs = a.eval(x0, y0) / bb.eval(x0, y0) / y0;
        Rational ypow = rf.alpha >= 0
                            ? rational_pow(y0, static_cast<unsigned long>(rf.alpha))
                            : rational_pow(y0.inv(), static_cast<unsigned long>(-rf.alpha));
        Rational rhs = ypow * rf.p.eval(t0, y0) / rf.q.eval(t0, y0);
        CHECK(lhs == rhs);
        ++done;
    }
}

TEST_CASE("small branch count") {
    CHECK(small_branch_count(kOneMinusXY) == 1);
    for (int d = 1; d <= 4; ++d) {
        auto du = static_cast<std::size_t>(d);
        BiPoly bb = BiPoly::one() - BiPoly::monomial(du, 0, Rational::one()) -
                    BiPoly::monomial(0, du + 1, Rational::one());
        CHECK(small_branch_count(bb) == d);
    }
    CHECK(small_branch_count(BiPoly::one()) == 0);
    // x-only factors become small branches after the substitution
    CHECK(small_branch_count(b({{0, 0, 1}, {1, 0, -2}}) * b({{0, 0, 1}, {0, 1, -1}})) == 1);
}

TEST_CASE("residue at origin") {
    BiPoly q = b({{0, 1, 1}, {1, 0, -1}, {0, 2, -1}});  // y - t - y^2
    RatFunQ r = residue_at_origin(b({{1, 0, 1}}), q, -1);
    CHECK(r == -RatFunQ::one());

    RatFunQ r2 = residue_at_origin(b({{2, 0, 1}}), q, -2);
    CHECK(r2 == -RatFunQ::one());

    // alpha = -1 in general: P(t,0)/Q(t,0)
    oracles::Rng rng(56);
    for (int k = 0; k < 10; ++k) {
        BiPoly p = rng.nonzero_bipoly(2, 2, -4, 4);
        BiPoly qq = rng.nonzero_bipoly(2, 2, -4, 4);
        YOverX qy = qq.poly_in_y();
        if (qy[0].is_zero()) continue;
        RatFunQ expect(p.poly_in_y()[0], qy[0]);
        CHECK(residue_at_origin(p, qq, -1) == expect);
    }
    CHECK_THROWS_AS(residue_at_origin(BiPoly::one(), q, 0), std::domain_error);
}

TEST_CASE("diagonal of 1/(1-x-y)^(d+1)") {
    // d = 0: exactly (1-4t) D^2 - 1
    auto r0 = algebraic_diagonal(BiPoly::one(), kOneMinusXY);
    CHECK(r0.phi == b({{0, 2, 1}, {1, 2, -4}, {0, 0, -1}}));
    CHECK(r0.c_small == 1);
    CHECK(r0.alpha == 0);

    // d = 2: canonical form of (1-4t)^5 D^2 - (1+2t)^2
    BiPoly b3 = kOneMinusXY * kOneMinusXY * kOneMinusXY;
    auto r2 = algebraic_diagonal(BiPoly::one(), b3);
    UniPoly lead = poly_pow(UniPoly(std::vector<Rational>{1, -4}), 5);
    UniPoly tail = poly_pow(UniPoly(std::vector<Rational>{1, 2}), 2);
    BiPoly expect = BiPoly::from_unipoly(lead, true) * BiPoly::monomial(0, 2, Rational::one()) -
                    BiPoly::from_unipoly(tail, true);
    CHECK(r2.phi == canonical_form(expect));

    // annihilation against the series for d = 0, 1, 2
    for (int d = 0; d <= 2; ++d) {
        BiPoly den = bipoly_pow(kOneMinusXY, static_cast<unsigned long>(d) + 1);
        auto r = algebraic_diagonal(BiPoly::one(), den);
        auto s = diagonal_series(BiPoly::one(), den, 40);
        CHECK(annihilation_check(r.phi, s, 40));
        for (std::size_t n = 0; n < 6; ++n) {
            mpz_class v = binomial_mpz(2 * n + static_cast<unsigned long>(d), n) *
                          binomial_mpz(n + static_cast<unsigned long>(d), static_cast<unsigned long>(d));
            CHECK(s[n] == Rational(v));
        }
    }
}

TEST_CASE("diagonal degenerate and rational cases") {
    // zero numerator
    CHECK(algebraic_diagonal(BiPoly(), kOneMinusXY).phi == b({{0, 1, 1}}));
    // polynomial input: diagonal of x y is t
    auto rp = algebraic_diagonal(b({{1, 1, 1}}), BiPoly::one());
    CHECK(rp.phi == b({{0, 1, 1}, {1, 0, -1}}));  // D - t
    // 1/(1-xy): diagonal is 1/(1-t)
    auto rg = algebraic_diagonal(BiPoly::one(), b({{0, 0, 1}, {1, 1, -1}}));
    CHECK(rg.phi == b({{0, 1, 1}, {1, 1, -1}, {0, 0, -1}}));  // (1-t) D - 1
    // x/(1-x-y): f_{n,n} = C(2n-1, n)
    auto ra = algebraic_diagonal(b({{1, 0, 1}}), kOneMinusXY);
    auto sa = diagonal_series(b({{1, 0, 1}}), kOneMinusXY, 40);
    CHECK(annihilation_check(ra.phi, sa, 40));
    CHECK(ra.alpha == -1);
    REQUIRE(ra.origin_residue.has_value());
    // denominator with an x-only factor: diag of 1/((1-2x)(1-y)) is 1/(1-2t)
    BiPoly bc = b({{0, 0, 1}, {1, 0, -2}}) * b({{0, 0, 1}, {0, 1, -1}});
    auto rc = algebraic_diagonal(BiPoly::one(), bc);
    auto sc = diagonal_series(BiPoly::one(), bc, 30);
    CHECK(annihilation_check(rc.phi, sc, 30));
    CHECK_THROWS_WITH(algebraic_diagonal(BiPoly::one(), BiPoly()),
                      Catch::Matchers::ContainsSubstring("denominator is zero"));
    CHECK_THROWS_WITH(algebraic_diagonal(BiPoly::one(), b({{1, 0, 1}, {0, 1, 1}})),
                      Catch::Matchers::ContainsSubstring("vanishes at origin"));
}

TEST_CASE("diagonal series examples") {
    auto s1 = diagonal_series(BiPoly::one(), kOneMinusXY, 5);
    CHECK(s1.coeffs() == std::vector<Rational>{1, 2, 6, 20, 70});

    BiPoly sep = b({{0, 0, 1}, {1, 0, -1}}) * b({{0, 0, 1}, {0, 1, -1}});
    auto s2 = diagonal_series(BiPoly::one(), sep, 4);
    CHECK(s2.coeffs() == std::vector<Rational>{1, 1, 1, 1});

    auto s3 = diagonal_series(b({{1, 0, 1}}), kOneMinusXY, 4);
    CHECK(s3.coeffs() == std::vector<Rational>{0, 1, 3, 10});

    CHECK_THROWS_AS(diagonal_series(BiPoly::one(), b({{1, 0, 1}}), 4), std::domain_error);
}

TEST_CASE("annihilation check examples") {
    Series<Rational> cat(40);
    for (std::size_t n = 0; n < 40; ++n) cat.set(n, Rational(binomial_mpz(2 * n, n)));
    CHECK(annihilation_check(b({{0, 2, 1}, {1, 2, -4}, {0, 0, -1}}), cat, 40));
    CHECK(!annihilation_check(b({{0, 1, 1}, {0, 0, -1}}),
                              Series<Rational>(std::vector<Rational>{1, 1}), 2));
    CHECK(annihilation_check(b({{0, 1, 1}}), Series<Rational>(10), 10));
}

TEST_CASE("sloped diagonals") {
    auto plain = algebraic_diagonal(BiPoly::one(), kOneMinusXY);
    auto s11 = sloped_diagonal(BiPoly::one(), kOneMinusXY, 1, 1);
    CHECK(s11.phi == plain.phi);

    // Diag_{1,2} of 1/(1-x-y): f_{n,2n} = C(3n, n)
    auto s12 = sloped_diagonal(BiPoly::one(), kOneMinusXY, 1, 2);
    Series<Rational> target(30);
    for (std::size_t n = 0; n < 30; ++n) target.set(n, Rational(binomial_mpz(3 * n, n)));
    CHECK(annihilation_check(s12.phi, target, 30));

    CHECK_THROWS_WITH(sloped_diagonal(BiPoly::one(), kOneMinusXY, 2, 2),
                      Catch::Matchers::ContainsSubstring("coprime"));
}

TEST_CASE("ddeg is additive under products") {
    oracles::Rng rng(57);
    for (int k = 0; k < 25; ++k) {
        BiPoly p = rng.nonzero_bipoly(2, 2, -4, 4);
        BiPoly q = rng.nonzero_bipoly(2, 2, -4, 4);
        auto dp = diag_degrees(p), dq = diag_degrees(q), dpq = diag_degrees(p * q);
        CHECK(dpq.ddeg_minus == dp.ddeg_minus + dq.ddeg_minus);
        CHECK(dpq.ddeg_plus == dp.ddeg_plus + dq.ddeg_plus);
    }
}

TEST_CASE("soundness on random rational functions") {
    oracles::Rng rng(58);
    int done = 0;
    while (done < 10) {
        BiPoly a = rng.bipoly(2, 3, -5, 5);
        BiPoly bb = rng.nonzero_bipoly(2, 3, -5, 5);
        if (bb.eval(Rational::zero(), Rational::zero()).is_zero()) continue;
        auto r = algebraic_diagonal(a, bb);
        auto s = diagonal_series(a, bb, 40);
        CHECK(annihilation_check(r.phi, s, 40));
        CHECK(r.degree_report.deg_delta <= r.degree_report.delta_bound);
        CHECK(r.degree_report.deg_t <= r.degree_report.t_bound);
        ++done;
    }
}

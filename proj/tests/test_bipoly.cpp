#include <catch2/catch_amalgamated.hpp>

#include "diagon/bipoly.hpp"
#include "oracles.hpp"

using namespace diagon;

namespace {
// small helper: b({{i, j, c}, ...})
BiPoly b(std::initializer_list<std::array<long, 3>> terms) {
    BiPoly p;
    for (const auto& t : terms)
        p.add_term(static_cast<std::size_t>(t[0]), static_cast<std::size_t>(t[1]), Rational(t[2]));
    return p;
}
bool same_up_to_sign(const BiPoly& a, const BiPoly& e) { return a == e || a == -e; }
}  // namespace

TEST_CASE("bipoly basics") {
    BiPoly p = b({{0, 0, 1}, {1, 0, -1}, {0, 1, -1}});  // 1 - x - y
    CHECK(p.degree_x() == 1);
    CHECK(p.degree_y() == 1);
    CHECK(BiPoly().degree_x().is_neg_inf());
    CHECK(p.eval(Rational(2), Rational(3)) == Rational(-4));
    CHECK((p - p).is_zero());
    BiPoly q = p * p;
    CHECK(q.coeff(1, 1) == Rational(2));
    CHECK(BiPoly::from_poly_in_y(p.poly_in_y()) == p);
    CHECK(BiPoly::from_poly_in_x(p.poly_in_x()) == p);
    CHECK(p.transposed().transposed() == p);
}

TEST_CASE("squarefree decomposition examples") {
    // (y-1)^2 (y+2)
    BiPoly y_minus_1 = b({{0, 1, 1}, {0, 0, -1}});
    BiPoly y_plus_2 = b({{0, 1, 1}, {0, 0, 2}});
    BiPoly q = y_minus_1 * y_minus_1 * y_plus_2;
    auto d = squarefree_decomposition(q, Var::Y);
    REQUIRE(d.factors.size() == 2);
    CHECK(d.factors[0].second == 1);
    CHECK(same_up_to_sign(d.factors[0].first, y_plus_2));
    CHECK(d.factors[1].second == 2);
    CHECK(same_up_to_sign(d.factors[1].first, y_minus_1));
    CHECK(d.reconstruct(true) == q);

    // (y - y^2 - x)^(d+1) has a single factor of multiplicity d+1
    BiPoly base = b({{0, 1, 1}, {0, 2, -1}, {1, 0, -1}});
    for (int dd = 0; dd <= 3; ++dd) {
        BiPoly qq = bipoly_pow(base, static_cast<unsigned long>(dd) + 1);
        auto sq = squarefree_decomposition(qq, Var::Y);
        REQUIRE(sq.factors.size() == 1);
        CHECK(sq.factors[0].second == dd + 1);
        CHECK(same_up_to_sign(sq.factors[0].first, base));
        CHECK(sq.max_multiplicity() == dd + 1);
        CHECK(sq.reconstruct(true) == qq);
    }

    // y^2
    auto sq = squarefree_decomposition(b({{0, 2, 1}}), Var::Y);
    REQUIRE(sq.factors.size() == 1);
    CHECK(sq.factors[0].second == 2);
    CHECK(sq.factors[0].first == b({{0, 1, 1}}));

    CHECK_THROWS_WITH(squarefree_decomposition(BiPoly(), Var::Y),
                      Catch::Matchers::ContainsSubstring("zero polynomial"));
}

TEST_CASE("squarefree reconstruction and coprimality on random products") {
    oracles::Rng rng(11);
    int done = 0;
    while (done < 100) {
        BiPoly q = BiPoly::one();
        int nfac = static_cast<int>(rng.integer(1, 3));
        for (int f = 0; f < nfac; ++f) {
            BiPoly fac = rng.nonzero_bipoly(1, 2, -3, 3);
            if (fac.degree_y().value_or(0) == 0) fac += b({{0, 1, 1}});
            q *= bipoly_pow(fac, static_cast<unsigned long>(rng.integer(1, 3)));
        }
        auto d = squarefree_decomposition(q, Var::Y);
        CHECK(d.reconstruct(true) == q);
        for (std::size_t i = 0; i < d.factors.size(); ++i) {
            // square-free: gcd with y-derivative constant in y
            BiPoly g = bipoly_gcd(d.factors[i].first, d.factors[i].first.derivative_y());
            CHECK(g.degree_y().value_or(0) == 0);
            for (std::size_t j = i + 1; j < d.factors.size(); ++j) {
                BiPoly gij = bipoly_gcd(d.factors[i].first, d.factors[j].first);
                CHECK(gij.degree_y().value_or(0) == 0);
            }
        }
        ++done;
    }
}

TEST_CASE("resultant_y examples") {
    BiPoly p1 = b({{0, 1, 1}, {1, 0, -1}});          // y - x
    BiPoly q1 = b({{0, 2, 1}, {1, 0, -1}});          // y^2 - x
    CHECK(resultant_y(p1, q1) == UniPoly(std::vector<Rational>{0, -1, 1}));  // x^2 - x

    BiPoly p2 = b({{0, 2, 1}});                      // y^2
    BiPoly q2 = b({{1, 1, 1}, {0, 0, -1}});          // x y - 1
    CHECK(resultant_y(p2, q2) == UniPoly::one());

    CHECK(resultant_y(b({{0, 1, 1}, {0, 0, -1}}), b({{0, 1, 1}, {0, 0, 1}})) ==
          UniPoly(Rational(2)));

    CHECK_THROWS_WITH(resultant_y(b({{1, 0, 1}}), b({{2, 0, 1}})),
                      Catch::Matchers::ContainsSubstring("constant in y"));
}

TEST_CASE("resultant_y degree bound and Sylvester agreement") {
    oracles::Rng rng(12);
    for (int k = 0; k < 50; ++k) {
        BiPoly p = rng.nonzero_bipoly(3, 3, -4, 4);
        BiPoly q = rng.nonzero_bipoly(3, 3, -4, 4);
        if (p.degree_y().value_or(0) == 0 && q.degree_y().value_or(0) == 0) continue;
        UniPoly r = resultant_y(p, q);
        int bound = p.degree_x().value() * q.degree_y().value() +
                    q.degree_x().value() * p.degree_y().value();
        CHECK(r.degree() <= Degree(bound));
        CHECK(r == oracles::sylvester_resultant(p.poly_in_y(), q.poly_in_y()));
        // equality whenever one operand has x-degree 0
        if (p.degree_x().value() == 0 && !r.is_zero()) CHECK(r.degree() == Degree(bound));
    }
}

TEST_CASE("resultant multiplicativity spot-check") {
    oracles::Rng rng(13);
    for (int k = 0; k < 10; ++k) {
        BiPoly p = rng.nonzero_bipoly(2, 2, -3, 3);
        BiPoly q1 = rng.nonzero_bipoly(1, 2, -3, 3);
        BiPoly q2 = rng.nonzero_bipoly(1, 2, -3, 3);
        if (p.degree_y().value_or(0) < 1 || q1.degree_y().value_or(0) < 1 ||
            q2.degree_y().value_or(0) < 1)
            continue;
        CHECK(resultant_y(p, q1 * q2) == resultant_y(p, q1) * resultant_y(p, q2));
    }
}

TEST_CASE("shift_y examples") {
    // y^2 -> y^2 + 2yt + t^2
    TriPoly s = shift_y(b({{0, 2, 1}}));
    CHECK(s.coeff(0, 2, 0) == Rational(1));
    CHECK(s.coeff(0, 1, 1) == Rational(2));
    CHECK(s.coeff(0, 0, 2) == Rational(1));
    CHECK(s.at_t0() == b({{0, 2, 1}}));

    // y - y^2 - x -> (y - y^2 - x) + (1 - 2y) t - t^2
    BiPoly base = b({{0, 1, 1}, {0, 2, -1}, {1, 0, -1}});
    TriPoly s2 = shift_y(base);
    CHECK(s2.at_t0() == base);
    CHECK(s2.coeff_t(1) == b({{0, 0, 1}, {0, 1, -2}}));
    CHECK(s2.coeff_t(2) == b({{0, 0, -1}}));
    CHECK(s2.total_degree_yt() == base.degree_y());

    // constants are untouched
    TriPoly s3 = shift_y(b({{1, 0, 1}}));
    CHECK(s3.degree_t() == 0);
    CHECK(s3.at_t0() == b({{1, 0, 1}}));
}

TEST_CASE("canonical form") {
    // (1-4x) z^2 - 1 is already canonical (main variable in the y slot)
    BiPoly phi = b({{0, 2, 1}, {1, 2, -4}, {0, 0, -1}});
    CHECK(canonical_form(phi) == phi);
    // scaling by any rational and sign returns the same representative
    CHECK(canonical_form(phi * Rational(-3, 7)) == phi);
    // denominators are cleared, integer content removed
    BiPoly q = phi * Rational(5, 3);
    CHECK(canonical_form(q) == phi);
    // sign rule: lowest x-coefficient of the leading y-coefficient positive
    BiPoly m = b({{0, 1, -2}, {1, 1, 4}, {0, 0, 2}});  // (-2+4x) y + 2
    CHECK(canonical_form(m) == b({{0, 1, 1}, {1, 1, -2}, {0, 0, -1}}));
}

TEST_CASE("bipoly gcd and exact division") {
    BiPoly a = b({{0, 1, 1}, {1, 0, -1}});  // y - x
    BiPoly c = b({{0, 1, 1}, {0, 0, 1}});   // y + 1
    BiPoly prod = a * c;
    CHECK(same_up_to_sign(bipoly_gcd(prod, a * a), a));
    CHECK(bipoly_exact_div(prod, a) == c);
    CHECK(bipoly_divides(a, prod));
    CHECK(!bipoly_divides(b({{0, 1, 1}, {0, 0, -7}}), prod));
    auto [rn, rd] = bipoly_reduce(prod, a * a);
    CHECK(rn == c);
    CHECK(same_up_to_sign(rd, a));
}

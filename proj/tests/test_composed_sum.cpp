#include <catch2/catch_amalgamated.hpp>

#include "diagon/composed_sum.hpp"
#include "oracles.hpp"

using namespace diagon;

namespace {
UniPoly up(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    for (long c : cs) v.emplace_back(c);
    return UniPoly(std::move(v));
}
BiPoly b(std::initializer_list<std::array<long, 3>> terms) {
    BiPoly p;
    for (const auto& t : terms)
        p.add_term(static_cast<std::size_t>(t[0]), static_cast<std::size_t>(t[1]), Rational(t[2]));
    return p;
}
}  // namespace

TEST_CASE("pure composed sum examples") {
    // roots {2,3}: single pair sum 5
    CHECK(pure_composed_sum(up({6, -5, 1}), 2) == up({-5, 1}));
    // roots {1,2,3}: pair sums {3,4,5}
    CHECK(pure_composed_sum(up({-6, 11, -6, 1}), 2) == up({-60, 47, -12, 1}));
    // c = deg P: Vieta, y + a_{d-1}/a_d
    CHECK(pure_composed_sum(up({1, 7, 3, 2}), 3) ==
          UniPoly(std::vector<Rational>{Rational(3, 2), 1}));
    // c = 1: monic normalization
    CHECK(pure_composed_sum(up({4, 6, 2}), 1) == up({2, 3, 1}));
    CHECK_THROWS_WITH(pure_composed_sum(up({1, 1}), 2),
                      Catch::Matchers::ContainsSubstring("c out of range"));
    CHECK_THROWS_WITH(pure_composed_sum(up({1, 1}), 0),
                      Catch::Matchers::ContainsSubstring("c out of range"));
}

TEST_CASE("pure composed sum: Vieta on random polynomials") {
    oracles::Rng rng(31);
    for (int k = 0; k < 100; ++k) {
        UniPoly p = rng.unipoly(12, -9, 9);
        long d = p.degree().value_or(0);
        if (d < 1) continue;
        UniPoly expect(std::vector<Rational>{p[static_cast<std::size_t>(d - 1)] / p.lc(), Rational::one()});
        CHECK(pure_composed_sum(p, d) == expect);
        CHECK(pure_composed_sum(p, 1) == monic(p));
    }
}

TEST_CASE("composed sum xy examples") {
    // y^2 - x, c = 2: root sum 0
    auto r1 = composed_sum_xy(b({{0, 2, 1}, {1, 0, -1}}), 2);
    CHECK(r1.poly == b({{0, 1, 1}}));
    CHECK(r1.Dy == 1);

    // (1-4x) z^2 - 1 with c = 1: a^(Dx) Sigma_1 is the polynomial itself
    BiPoly r = b({{0, 2, 1}, {1, 2, -4}, {0, 0, -1}});
    auto r2 = composed_sum_xy(r, 1);
    CHECK(r2.poly == canonical_form(r));
    CHECK(r2.Dx == 1);
    CHECK(r2.Dy == 2);

    // y^2 + xy + 1, c = 2: sum of roots -x
    auto r3 = composed_sum_xy(b({{0, 2, 1}, {1, 1, 1}, {0, 0, 1}}), 2);
    CHECK(r3.poly == b({{0, 1, 1}, {1, 0, 1}}));

    CHECK_THROWS_WITH(composed_sum_xy(b({{0, 1, 1}}), 2),
                      Catch::Matchers::ContainsSubstring("c out of range"));
}

TEST_CASE("composed sum degree bounds on random instances") {
    oracles::Rng rng(32);
    int done = 0;
    while (done < 30) {
        BiPoly p = rng.nonzero_bipoly(2, 6, -4, 4);
        long dy = p.degree_y().value_or(0);
        if (dy < 1) continue;
        long dx = p.degree_x().value_or(0);
        long c = rng.integer(1, std::min(dy, 3L));
        auto r = composed_sum_xy(p, c);
        CHECK(r.poly.degree_y().value() == r.Dy);
        CHECK(r.poly.degree_x().value_or(0) <= dx * r.Dx);
        // symmetry of degrees
        auto rsym = composed_sum_xy(p, dy - c == 0 ? dy : dy - c);
        CHECK(rsym.poly.degree_y().value() ==
              binomial_long(static_cast<unsigned long>(dy),
                            static_cast<unsigned long>(dy - c == 0 ? dy : dy - c)));
        ++done;
    }
}

TEST_CASE("oracle equivalence on products of rational-root branches") {
    oracles::Rng rng(33);
    for (int inst = 0; inst < 30; ++inst) {
        int d = static_cast<int>(rng.integer(2, 5));
        std::vector<UniPoly> roots;
        BiPoly p = BiPoly::one();
        for (int i = 0; i < d; ++i) {
            roots.push_back(rng.unipoly(2, -3, 3));
            p *= BiPoly::monomial(0, 1, Rational::one()) - BiPoly::from_unipoly(roots.back(), true);
        }
        for (int c = 1; c <= d; ++c) {
            auto mine = composed_sum_xy(p, c);
            CHECK(mine.poly == canonical_form(oracles::composed_sum_brute(roots, c)));
        }
    }
}

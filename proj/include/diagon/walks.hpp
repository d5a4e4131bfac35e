#pragma once

// Unidimensional lattice walks with simple steps (1, u). Direct counting by
// the recurrence w_{n,k} = sum_u w_{n-1,k-u}, plus series for bridges,
// excursions and meanders:
//   B(x) = [y^0] 1/(1 - x Gamma(y))
//   E(x) = exp( integral (B(x) - 1)/x dx )
//   A(x) = [y^0] y/(1-y) W(x,y)   (walks ending below 0)
//   M(x) = exp( -integral A(x)/x dx ) / (1 - x Gamma(1))

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "diagon/rational.hpp"
#include "diagon/series.hpp"

namespace diagon {

struct StepSet {
    std::vector<int> steps;  // sorted, distinct step heights u for (1, u)

    static StepSet from_steps(std::vector<int> s) {
        std::set<int> uniq(s.begin(), s.end());
        if (uniq.empty()) throw std::domain_error("step set is empty");
        return StepSet{std::vector<int>(uniq.begin(), uniq.end())};
    }

    int u_minus() const { return -steps.front(); }  // largest u with (1,-u) in S
    int u_plus() const { return steps.back(); }
    int amplitude() const { return u_minus() + u_plus(); }

    void require_two_sided() const {
        if (u_minus() < 1 || u_plus() < 1)
            throw std::domain_error("step set needs steps on both sides of 0");
    }
};

// Laurent polynomial over Z: dense coefficients with an offset.
class LaurentZ {
public:
    LaurentZ() = default;
    LaurentZ(long lo, std::vector<mpz_class> c) : lo_(lo), c_(std::move(c)) { trim(); }

    static LaurentZ unit() { return LaurentZ(0, {1}); }
    static LaurentZ gamma_of(const StepSet& s) {
        long lo = s.steps.front();
        std::vector<mpz_class> c(static_cast<std::size_t>(s.steps.back() - lo) + 1, 0);
        for (int u : s.steps) c[static_cast<std::size_t>(u - lo)] = 1;
        return LaurentZ(lo, std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    long lo() const { return lo_; }
    long hi() const { return lo_ + static_cast<long>(c_.size()) - 1; }

    const mpz_class& coeff(long k) const {
        static const mpz_class kZero = 0;
        if (k < lo_ || k > hi()) return kZero;
        return c_[static_cast<std::size_t>(k - lo_)];
    }

    LaurentZ times(const LaurentZ& o) const {
        if (is_zero() || o.is_zero()) return LaurentZ();
        std::vector<mpz_class> r(c_.size() + o.c_.size() - 1, 0);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                if (o.c_[j] != 0) r[i + j] += c_[i] * o.c_[j];
        }
        return LaurentZ(lo_ + o.lo_, std::move(r));
    }

    LaurentZ truncated_nonnegative() const {
        if (lo_ >= 0) return *this;
        if (hi() < 0) return LaurentZ();
        return LaurentZ(0, std::vector<mpz_class>(c_.begin() + static_cast<std::ptrdiff_t>(-lo_), c_.end()));
    }

    mpz_class sum_negative() const {
        mpz_class s = 0;
        for (long k = lo_; k < 0 && k <= hi(); ++k) s += coeff(k);
        return s;
    }
    mpz_class sum_all() const {
        mpz_class s = 0;
        for (const auto& v : c_) s += v;
        return s;
    }

private:
    long lo_ = 0;
    std::vector<mpz_class> c_;

    void trim() {
        std::size_t front = 0;
        while (front < c_.size() && c_[front] == 0) ++front;
        if (front == c_.size()) {
            c_.clear();
            lo_ = 0;
            return;
        }
        c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(front));
        lo_ += static_cast<long>(front);
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

// Row-by-row counts; confined tables never hold negative altitudes.
struct WalkTable {
    bool confined = false;
    std::vector<LaurentZ> rows;  // rows[n] = counts of length-n walks by altitude

    const mpz_class& count(std::size_t n, long k) const { return rows.at(n).coeff(k); }
};

inline WalkTable walk_counts(const StepSet& s, std::size_t n, bool confined) {
    WalkTable t;
    t.confined = confined;
    t.rows.reserve(n + 1);
    t.rows.push_back(LaurentZ::unit());
    LaurentZ gamma = LaurentZ::gamma_of(s);
    for (std::size_t i = 1; i <= n; ++i) {
        LaurentZ next = t.rows.back().times(gamma);
        if (confined) next = next.truncated_nonnegative();
        t.rows.push_back(std::move(next));
    }
    return t;
}

// coefficient n: [y^0] Gamma(y)^n
inline Series<Rational> bridges_series(const StepSet& s, std::size_t n) {
    s.require_two_sided();
    Series<Rational> out(n);
    LaurentZ pw = LaurentZ::unit();
    LaurentZ gamma = LaurentZ::gamma_of(s);
    for (std::size_t i = 0; i < n; ++i) {
        out.set(i, Rational(pw.coeff(0)));
        pw = pw.times(gamma);
    }
    return out;
}

// coefficient n: number of length-n unconfined walks ending at altitude < 0
inline Series<Rational> negative_altitude_series(const StepSet& s, std::size_t n) {
    if (s.u_minus() < 1) throw std::domain_error("step set needs a negative step");
    Series<Rational> out(n);
    LaurentZ pw = LaurentZ::unit();
    LaurentZ gamma = LaurentZ::gamma_of(s);
    for (std::size_t i = 0; i < n; ++i) {
        out.set(i, Rational(pw.sum_negative()));
        pw = pw.times(gamma);
    }
    return out;
}

namespace detail {
// f/x for a series with zero constant term, order drops by one
template <FieldElem F>
Series<F> shift_down(const Series<F>& f) {
    if (f.order() == 0) return f;
    if (!f[0].is_zero()) throw std::domain_error("series has nonzero constant term");
    Series<F> r(f.order() - 1);
    for (std::size_t i = 1; i < f.order(); ++i) r.set(i - 1, f[i]);
    return r;
}

inline void require_integers(const Series<Rational>& s, const char* what) {
    for (std::size_t i = 0; i < s.order(); ++i)
        if (!s[i].is_integer()) throw std::logic_error(std::string(what) + ": non-integer coefficient");
}
}  // namespace detail

inline Series<Rational> excursions_series(const StepSet& s, std::size_t n) {
    s.require_two_sided();
    Series<Rational> b = bridges_series(s, n);
    Series<Rational> bm1 = b - Series<Rational>::constant(Rational::one(), n);
    Series<Rational> e = series_exp(series_integrate(detail::shift_down(bm1)));
    detail::require_integers(e, "excursions");
    return e;
}

inline Series<Rational> meanders_series(const StepSet& s, std::size_t n) {
    s.require_two_sided();
    Series<Rational> a = negative_altitude_series(s, n);
    Series<Rational> expo = series_exp(-series_integrate(detail::shift_down(a)));
    // 1/(1 - Gamma(1) x) is the geometric series in |S| x
    Series<Rational> geom(n);
    Rational g(static_cast<long>(s.steps.size()));
    Rational acc = Rational::one();
    for (std::size_t i = 0; i < n; ++i) {
        geom.set(i, acc);
        acc *= g;
    }
    Series<Rational> m = expo * geom;
    detail::require_integers(m, "meanders");
    return m;
}

}  // namespace diagon

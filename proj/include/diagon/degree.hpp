#pragma once

// Polynomial degree with a dedicated -infinity value for the zero polynomial.

#include <algorithm>
#include <compare>
#include <stdexcept>

namespace diagon {

class Degree {
public:
    constexpr Degree() : v_(0), finite_(false) {}
    constexpr Degree(int v) : v_(v), finite_(true) {}

    static constexpr Degree neg_inf() { return Degree(); }

    constexpr bool is_neg_inf() const { return !finite_; }
    constexpr bool is_finite() const { return finite_; }

    int value() const {
        if (!finite_) throw std::domain_error("degree of zero polynomial has no numeric value");
        return v_;
    }
    constexpr int value_or(int alt) const { return finite_ ? v_ : alt; }

    friend constexpr Degree operator+(Degree a, Degree b) {
        if (!a.finite_ || !b.finite_) return neg_inf();
        return Degree(a.v_ + b.v_);
    }
    friend constexpr Degree operator+(Degree a, int b) { return a + Degree(b); }

    friend constexpr bool operator==(Degree a, Degree b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.v_ == b.v_;
    }
    friend constexpr bool operator==(Degree a, int b) { return a == Degree(b); }
    friend constexpr bool operator<(Degree a, Degree b) {
        if (!a.finite_) return b.finite_;
        if (!b.finite_) return false;
        return a.v_ < b.v_;
    }
    friend constexpr bool operator<=(Degree a, Degree b) { return a < b || a == b; }
    friend constexpr bool operator>(Degree a, Degree b) { return b < a; }
    friend constexpr bool operator>=(Degree a, Degree b) { return b <= a; }

    friend constexpr Degree max(Degree a, Degree b) { return a < b ? b : a; }
    friend constexpr Degree min(Degree a, Degree b) { return a < b ? a : b; }

private:
    int v_;
    bool finite_;
};

}  // namespace diagon

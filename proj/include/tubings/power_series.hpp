#pragma once

#include <vector>

#include "tubings/errors.hpp"
#include "tubings/rational.hpp"

namespace tubings {

// Dense truncated formal power series. Coefficients are indexed 0..order
// and every binary operation requires both operands to share the same
// truncation order; the result is truncated there too. Scalar is Int or Rat.
template <typename Scalar>
class PowerSeries {
public:
    PowerSeries() = default;
    explicit PowerSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1) {
        if (order < 0) throw PreconditionError("series order must be >= 0");
    }
    explicit PowerSeries(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw PreconditionError("series needs at least the constant term");
    }

    static PowerSeries one(int order) {
        PowerSeries s(order);
        s.coeffs_[0] = 1;
        return s;
    }
    // The series "x" (requires order >= 1).
    static PowerSeries x(int order) {
        PowerSeries s(order);
        if (order < 1) throw PreconditionError("need order >= 1 for x");
        s.coeffs_[1] = 1;
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Scalar& operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
    Scalar& operator[](int n) { return coeffs_[static_cast<std::size_t>(n)]; }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }

    bool operator==(const PowerSeries& o) const = default;

private:
    std::vector<Scalar> coeffs_;
};

using IntSeries = PowerSeries<Int>;
using RatSeries = PowerSeries<Rat>;

namespace detail {
template <typename S>
void require_same_order(const PowerSeries<S>& a, const PowerSeries<S>& b) {
    if (a.order() != b.order())
        throw PreconditionError("truncation order mismatch");
}
} // namespace detail

template <typename S>
PowerSeries<S> series_add(const PowerSeries<S>& a, const PowerSeries<S>& b) {
    detail::require_same_order(a, b);
    PowerSeries<S> r(a.order());
    for (int n = 0; n <= a.order(); ++n) r[n] = a[n] + b[n];
    return r;
}

template <typename S>
PowerSeries<S> series_sub(const PowerSeries<S>& a, const PowerSeries<S>& b) {
    detail::require_same_order(a, b);
    PowerSeries<S> r(a.order());
    for (int n = 0; n <= a.order(); ++n) r[n] = a[n] - b[n];
    return r;
}

// Cauchy product, truncated. Plain schoolbook convolution: coefficient
// bit-growth dominates the run time, so an asymptotically fancier product
// buys nothing at the orders we use (n ~ 1000).
template <typename S>
PowerSeries<S> series_mul(const PowerSeries<S>& a, const PowerSeries<S>& b) {
    detail::require_same_order(a, b);
    const int N = a.order();
    PowerSeries<S> r(N);
    for (int n = 0; n <= N; ++n) {
        S acc = S(0);
        for (int p = 0; p <= n; ++p) acc += a[p] * b[n - p];
        r[n] = acc;
    }
    return r;
}

template <typename S>
PowerSeries<S> operator+(const PowerSeries<S>& a, const PowerSeries<S>& b) { return series_add(a, b); }
template <typename S>
PowerSeries<S> operator-(const PowerSeries<S>& a, const PowerSeries<S>& b) { return series_sub(a, b); }
template <typename S>
PowerSeries<S> operator*(const PowerSeries<S>& a, const PowerSeries<S>& b) { return series_mul(a, b); }

// (2x d/dx - 1): f_n -> (2n-1) f_n. The insertion-place pointing operator.
template <typename S>
PowerSeries<S> pointing_op(const PowerSeries<S>& f) {
    PowerSeries<S> r(f.order());
    for (int n = 0; n <= f.order(); ++n) r[n] = f[n] * (2 * n - 1);
    return r;
}

// x d/dx: f_n -> n f_n.
template <typename S>
PowerSeries<S> euler_op(const PowerSeries<S>& f) {
    PowerSeries<S> r(f.order());
    for (int n = 0; n <= f.order(); ++n) r[n] = f[n] * n;
    return r;
}

inline RatSeries to_rational(const IntSeries& s) {
    RatSeries r(s.order());
    for (int n = 0; n <= s.order(); ++n) r[n] = Rat(s[n]);
    return r;
}

} // namespace tubings

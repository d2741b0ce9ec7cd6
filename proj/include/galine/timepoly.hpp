#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "galine/rational.hpp"

namespace galine {

namespace detail {

template <class K>
struct coeff_traits;

template <>
struct coeff_traits<Rational> {
    static Rational from_long(long v) { return Rational(v); }
    static Rational inv_factorial(unsigned n) { return Rational(1) / factorial(n); }
};

template <>
struct coeff_traits<double> {
    static double from_long(long v) { return static_cast<double>(v); }
    static double inv_factorial(unsigned n) {
        double f = 1.0;
        for (unsigned k = 2; k <= n; ++k) f *= k;
        return 1.0 / f;
    }
};

inline unsigned long long ull_binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned long long r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

}  // namespace detail

/// Scalar function of time truncated to a polynomial, stored in the Taylor
/// convention: coeff(n) is the n-th derivative at t = 0, so
/// p(t) = sum_n coeff(n) t^n / n!.
template <class K>
class BasicTimePoly {
public:
    using coeff_type = K;

    BasicTimePoly() = default;
    /// From Taylor coefficients (derivatives at 0), lowest order first.
    explicit BasicTimePoly(std::vector<K> taylor) : c_(std::move(taylor)) { trim(); }

    static BasicTimePoly zero() { return BasicTimePoly(); }
    static BasicTimePoly constant(K v) { return BasicTimePoly(std::vector<K>{std::move(v)}); }
    /// c * t^n  (Taylor coefficient n!·c at order n).
    static BasicTimePoly monomial(unsigned n, K c) {
        std::vector<K> v(n + 1, detail::coeff_traits<K>::from_long(0));
        K f = detail::coeff_traits<K>::from_long(1);
        for (unsigned k = 2; k <= n; ++k) f = f * detail::coeff_traits<K>::from_long(k);
        v[n] = c * f;
        return BasicTimePoly(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero poly
    bool is_zero() const { return c_.empty(); }

    /// Taylor coefficient (n-th derivative at 0); zero beyond degree.
    K coeff(std::size_t n) const {
        return n < c_.size() ? c_[n] : detail::coeff_traits<K>::from_long(0);
    }
    const std::vector<K>& coeffs() const { return c_; }

    friend BasicTimePoly operator+(const BasicTimePoly& a, const BasicTimePoly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()),
                         detail::coeff_traits<K>::from_long(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return BasicTimePoly(std::move(r));
    }
    friend BasicTimePoly operator-(const BasicTimePoly& a, const BasicTimePoly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()),
                         detail::coeff_traits<K>::from_long(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
        return BasicTimePoly(std::move(r));
    }
    BasicTimePoly operator-() const {
        std::vector<K> r(c_.size(), detail::coeff_traits<K>::from_long(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        return BasicTimePoly(std::move(r));
    }

    /// Product via the Leibniz rule on Taylor coefficients.
    friend BasicTimePoly operator*(const BasicTimePoly& a, const BasicTimePoly& b) {
        if (a.is_zero() || b.is_zero()) return BasicTimePoly();
        std::vector<K> r(a.c_.size() + b.c_.size() - 1,
                         detail::coeff_traits<K>::from_long(0));
        for (std::size_t n = 0; n < r.size(); ++n) {
            K s = detail::coeff_traits<K>::from_long(0);
            for (std::size_t k = 0; k <= n; ++k) {
                if (k >= a.c_.size() || n - k >= b.c_.size()) continue;
                K binom = detail::coeff_traits<K>::from_long(
                    static_cast<long>(detail::ull_binomial(static_cast<unsigned>(n),
                                                           static_cast<unsigned>(k))));
                s = s + binom * a.c_[k] * b.c_[n - k];
            }
            r[n] = s;
        }
        return BasicTimePoly(std::move(r));
    }

    friend BasicTimePoly operator*(const K& s, const BasicTimePoly& p) {
        std::vector<K> r(p.c_.size(), detail::coeff_traits<K>::from_long(0));
        for (std::size_t i = 0; i < p.c_.size(); ++i) r[i] = s * p.c_[i];
        return BasicTimePoly(std::move(r));
    }
    friend BasicTimePoly operator*(const BasicTimePoly& p, const K& s) { return s * p; }

    friend bool operator==(const BasicTimePoly& a, const BasicTimePoly& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const BasicTimePoly& a, const BasicTimePoly& b) {
        return !(a == b);
    }

    /// d/dt: drops the leading Taylor slot.
    BasicTimePoly derivative() const {
        if (c_.size() <= 1) return BasicTimePoly();
        return BasicTimePoly(std::vector<K>(c_.begin() + 1, c_.end()));
    }
    BasicTimePoly nth_derivative(unsigned n) const {
        if (n >= c_.size()) return BasicTimePoly();
        return BasicTimePoly(std::vector<K>(c_.begin() + n, c_.end()));
    }

    /// p(t + b), exact on polynomials: the shifted n-th Taylor coefficient is
    /// the n-th derivative evaluated at b.
    BasicTimePoly shifted(const K& b) const {
        if (is_zero()) return BasicTimePoly();
        std::vector<K> r(c_.size(), detail::coeff_traits<K>::from_long(0));
        for (std::size_t n = 0; n < c_.size(); ++n) r[n] = nth_derivative(n).evaluate(b);
        return BasicTimePoly(std::move(r));
    }

    /// Horner evaluation honoring the 1/n! convention.
    K evaluate(const K& t) const {
        if (is_zero()) return detail::coeff_traits<K>::from_long(0);
        // p(t) = c0 + t(c1 + t/2 (c2 + t/3 (c3 + ...)))
        K acc = c_.back();
        for (std::size_t i = c_.size() - 1; i-- > 0;) {
            K inv = detail::coeff_traits<K>::from_long(1) /
                    detail::coeff_traits<K>::from_long(static_cast<long>(i + 1));
            acc = c_[i] + t * inv * acc;
        }
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == detail::coeff_traits<K>::from_long(0))
            c_.pop_back();
    }
    std::vector<K> c_;  // Taylor coefficients, c_[n] = p^(n)(0)
};

using TimePoly = BasicTimePoly<Rational>;
using TimePolyD = BasicTimePoly<double>;

std::string to_string(const TimePoly& p);
TimePolyD to_double(const TimePoly& p);
double evaluate_at(const TimePoly& p, double t);

/// 3-vector of time polynomials.
template <class K>
struct BasicVec3Poly {
    BasicTimePoly<K> x, y, z;

    BasicVec3Poly() = default;
    BasicVec3Poly(BasicTimePoly<K> px, BasicTimePoly<K> py, BasicTimePoly<K> pz)
        : x(std::move(px)), y(std::move(py)), z(std::move(pz)) {}

    static BasicVec3Poly zero() { return BasicVec3Poly(); }
    /// Embeds a scalar time function on the x axis.
    static BasicVec3Poly axis_x(BasicTimePoly<K> p) {
        return BasicVec3Poly(std::move(p), BasicTimePoly<K>(), BasicTimePoly<K>());
    }

    const BasicTimePoly<K>& comp(int i) const { return i == 0 ? x : (i == 1 ? y : z); }
    BasicTimePoly<K>& comp(int i) { return i == 0 ? x : (i == 1 ? y : z); }

    bool is_zero() const { return x.is_zero() && y.is_zero() && z.is_zero(); }
    int degree() const { return std::max(x.degree(), std::max(y.degree(), z.degree())); }

    friend BasicVec3Poly operator+(const BasicVec3Poly& a, const BasicVec3Poly& b) {
        return {a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend BasicVec3Poly operator-(const BasicVec3Poly& a, const BasicVec3Poly& b) {
        return {a.x - b.x, a.y - b.y, a.z - b.z};
    }
    BasicVec3Poly operator-() const { return {-x, -y, -z}; }
    friend BasicVec3Poly operator*(const K& s, const BasicVec3Poly& v) {
        return {s * v.x, s * v.y, s * v.z};
    }
    friend bool operator==(const BasicVec3Poly& a, const BasicVec3Poly& b) {
        return a.x == b.x && a.y == b.y && a.z == b.z;
    }

    BasicTimePoly<K> dot(const BasicVec3Poly& o) const {
        return x * o.x + y * o.y + z * o.z;
    }
    BasicVec3Poly derivative() const { return {x.derivative(), y.derivative(), z.derivative()}; }
    BasicVec3Poly nth_derivative(unsigned n) const {
        return {x.nth_derivative(n), y.nth_derivative(n), z.nth_derivative(n)};
    }
    BasicVec3Poly shifted(const K& b) const {
        return {x.shifted(b), y.shifted(b), z.shifted(b)};
    }
};

using Vec3Poly = BasicVec3Poly<Rational>;
using Vec3PolyD = BasicVec3Poly<double>;

BasicVec3Poly<double> to_double(const Vec3Poly& v);

}  // namespace galine

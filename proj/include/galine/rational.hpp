#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace galine {

/// Exact rational scalar. Thin value wrapper around GMP's mpq so the rest of
/// the engine never sees the GMP surface directly.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den);
    explicit Rational(const mpq_class& v) : v_(v) { canon(); }

    /// Parses "p", "p/q" or a plain decimal like "-0.25".
    static Rational parse(const std::string& text);

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    double to_double() const { return v_.get_d(); }
    /// "p" when the denominator is 1, otherwise "p/q".
    std::string str() const;

    const mpq_class& raw() const { return v_; }

private:
    void canon() { v_.canonicalize(); }
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

}  // namespace galine

#pragma once

#include <array>
#include <compare>
#include <complex>
#include <cstdint>
#include <map>
#include <string>

#include "galine/timepoly.hpp"

namespace galine {

/// Complex scalar time function: re(t) + i im(t), both exact polynomials.
struct CPoly {
    TimePoly re, im;

    CPoly() = default;
    CPoly(TimePoly r, TimePoly i) : re(std::move(r)), im(std::move(i)) {}
    static CPoly real(TimePoly r) { return {std::move(r), TimePoly()}; }
    static CPoly imag(TimePoly i) { return {TimePoly(), std::move(i)}; }
    static CPoly real_const(Rational r) { return real(TimePoly::constant(std::move(r))); }
    static CPoly imag_const(Rational i) { return imag(TimePoly::constant(std::move(i))); }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    friend CPoly operator+(const CPoly& a, const CPoly& b) { return {a.re + b.re, a.im + b.im}; }
    friend CPoly operator-(const CPoly& a, const CPoly& b) { return {a.re - b.re, a.im - b.im}; }
    CPoly operator-() const { return {-re, -im}; }
    friend CPoly operator*(const CPoly& a, const CPoly& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const CPoly& a, const CPoly& b) { return a.re == b.re && a.im == b.im; }

    CPoly derivative() const { return {re.derivative(), im.derivative()}; }
    std::complex<double> evaluate(double t) const;
};

/// Normal-ordered monomial: all multiplication symbols q_i to the left of all
/// derivative symbols D_i. Exponents per spatial component.
struct OpMonomial {
    std::array<std::uint8_t, 3> qe{0, 0, 0};
    std::array<std::uint8_t, 3> de{0, 0, 0};

    auto operator<=>(const OpMonomial&) const = default;
    bool is_identity() const {
        return qe == std::array<std::uint8_t, 3>{0, 0, 0} &&
               de == std::array<std::uint8_t, 3>{0, 0, 0};
    }
};

/// Element of the algebra generated by q_i (multiplication by the velocity
/// label) and D_i = d/dq_i, with complex time-polynomial coefficients.
/// Products are rewritten exhaustively with [D_i, q_j] = delta_ij.
class CanonicalOperator {
public:
    CanonicalOperator() = default;

    static CanonicalOperator zero() { return {}; }
    static CanonicalOperator identity(CPoly c = CPoly::real_const(Rational(1)));
    static CanonicalOperator mult_q(int component, CPoly c = CPoly::real_const(Rational(1)));
    static CanonicalOperator deriv(int component, CPoly c = CPoly::real_const(Rational(1)));
    static CanonicalOperator term(OpMonomial m, CPoly c);

    bool is_zero() const { return terms_.empty(); }
    const std::map<OpMonomial, CPoly>& terms() const { return terms_; }
    CPoly coefficient(const OpMonomial& m) const;
    /// Coefficient of the identity monomial.
    CPoly scalar_part() const { return coefficient(OpMonomial{}); }
    /// True when the operator is c(t) * identity.
    bool is_scalar() const;
    int max_derivative_order() const;

    friend CanonicalOperator operator+(const CanonicalOperator& a, const CanonicalOperator& b);
    friend CanonicalOperator operator-(const CanonicalOperator& a, const CanonicalOperator& b);
    CanonicalOperator operator-() const;
    friend CanonicalOperator operator*(const CanonicalOperator& a, const CanonicalOperator& b);
    friend CanonicalOperator operator*(const CPoly& s, const CanonicalOperator& op);
    friend CanonicalOperator operator*(const Rational& s, const CanonicalOperator& op);
    friend bool operator==(const CanonicalOperator& a, const CanonicalOperator& b) {
        return a.terms_ == b.terms_;
    }

    /// Derivative of the coefficients with respect to the explicit time.
    CanonicalOperator time_derivative() const;

    std::string str() const;
    /// JSON term dump for regression snapshots.
    std::string to_json() const;

private:
    void add_term(const OpMonomial& m, const CPoly& c);
    std::map<OpMonomial, CPoly> terms_;
};

CanonicalOperator commutator(const CanonicalOperator& a, const CanonicalOperator& b);

}  // namespace galine

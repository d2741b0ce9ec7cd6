#include "galine/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace galine {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    canon();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(const std::string& text) {
    std::string s = text;
    // strip surrounding whitespace
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("Rational: empty string");
    s = s.substr(b, e - b + 1);

    auto dot = s.find('.');
    if (dot != std::string::npos) {
        if (s.find('/') != std::string::npos)
            throw std::invalid_argument("Rational: mixed decimal and fraction: " + text);
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t frac_len = s.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw std::invalid_argument("Rational: bad decimal: " + text);
        mpq_class num(digits, 10);
        mpz_class den(1);
        for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
        Rational r{mpq_class(num / mpq_class(den))};
        return r;
    }
    try {
        mpq_class q(s, 10);
        q.canonicalize();
        if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator");
        return Rational(q);
    } catch (const std::exception&) {
        throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    }
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(mpq_class(f));
}

Rational binomial(unsigned n, unsigned k) {
    if (k > n) return Rational(0);
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), n, k);
    return Rational(mpq_class(c));
}

}  // namespace galine

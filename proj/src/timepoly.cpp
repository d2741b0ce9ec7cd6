#include "galine/timepoly.hpp"

#include <sstream>

namespace galine {

std::string to_string(const TimePoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int n = 0; n <= p.degree(); ++n) {
        Rational mono = p.coeff(n) / factorial(static_cast<unsigned>(n));
        if (mono.is_zero()) continue;
        if (!first) os << (mono.sign() > 0 ? " + " : " - ");
        else if (mono.sign() < 0) os << "-";
        Rational a = mono.sign() < 0 ? -mono : mono;
        if (n == 0) {
            os << a.str();
        } else {
            if (a != Rational(1)) os << a.str() << "*";
            os << "t";
            if (n > 1) os << "^" << n;
        }
        first = false;
    }
    return os.str();
}

TimePolyD to_double(const TimePoly& p) {
    std::vector<double> c(static_cast<std::size_t>(p.degree() + 1));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(i).to_double();
    return TimePolyD(std::move(c));
}

double evaluate_at(const TimePoly& p, double t) { return to_double(p).evaluate(t); }

Vec3PolyD to_double(const Vec3Poly& v) {
    return {to_double(v.x), to_double(v.y), to_double(v.z)};
}

}  // namespace galine

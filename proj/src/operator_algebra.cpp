#include "galine/operator_algebra.hpp"

#include <json.hpp>

#include <sstream>

namespace galine {

std::complex<double> CPoly::evaluate(double t) const {
    return {evaluate_at(re, t), evaluate_at(im, t)};
}

CanonicalOperator CanonicalOperator::identity(CPoly c) {
    return term(OpMonomial{}, std::move(c));
}

CanonicalOperator CanonicalOperator::mult_q(int component, CPoly c) {
    OpMonomial m;
    m.qe[static_cast<std::size_t>(component)] = 1;
    return term(m, std::move(c));
}

CanonicalOperator CanonicalOperator::deriv(int component, CPoly c) {
    OpMonomial m;
    m.de[static_cast<std::size_t>(component)] = 1;
    return term(m, std::move(c));
}

CanonicalOperator CanonicalOperator::term(OpMonomial m, CPoly c) {
    CanonicalOperator op;
    op.add_term(m, c);
    return op;
}

CPoly CanonicalOperator::coefficient(const OpMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? CPoly() : it->second;
}

bool CanonicalOperator::is_scalar() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.is_identity();
}

int CanonicalOperator::max_derivative_order() const {
    int m = 0;
    for (const auto& [mono, c] : terms_)
        m = std::max(m, static_cast<int>(mono.de[0]) + mono.de[1] + mono.de[2]);
    return m;
}

void CanonicalOperator::add_term(const OpMonomial& m, const CPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CanonicalOperator operator+(const CanonicalOperator& a, const CanonicalOperator& b) {
    CanonicalOperator r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

CanonicalOperator operator-(const CanonicalOperator& a, const CanonicalOperator& b) {
    CanonicalOperator r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

CanonicalOperator CanonicalOperator::operator-() const {
    CanonicalOperator r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

namespace {

// D^m q^n = sum_k k! C(m,k) C(n,k) q^(n-k) D^(m-k), per component.
Rational reorder_factor(unsigned m, unsigned n, unsigned k) {
    return factorial(k) * binomial(m, k) * binomial(n, k);
}

}  // namespace

CanonicalOperator operator*(const CanonicalOperator& a, const CanonicalOperator& b) {
    CanonicalOperator r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            // move the a-term derivatives rightwards through the b-term q's
            std::array<unsigned, 3> kmax;
            for (int i = 0; i < 3; ++i)
                kmax[static_cast<std::size_t>(i)] =
                    std::min<unsigned>(ma.de[static_cast<std::size_t>(i)],
                                       mb.qe[static_cast<std::size_t>(i)]);
            CPoly base = ca * cb;
            for (unsigned k0 = 0; k0 <= kmax[0]; ++k0)
                for (unsigned k1 = 0; k1 <= kmax[1]; ++k1)
                    for (unsigned k2 = 0; k2 <= kmax[2]; ++k2) {
                        std::array<unsigned, 3> k{k0, k1, k2};
                        Rational f(1);
                        OpMonomial m;
                        for (std::size_t i = 0; i < 3; ++i) {
                            f = f * reorder_factor(ma.de[i], mb.qe[i], k[i]);
                            m.qe[i] = static_cast<std::uint8_t>(ma.qe[i] + mb.qe[i] - k[i]);
                            m.de[i] = static_cast<std::uint8_t>(ma.de[i] + mb.de[i] - k[i]);
                        }
                        r.add_term(m, CPoly::real_const(f) * base);
                    }
        }
    }
    return r;
}

CanonicalOperator operator*(const CPoly& s, const CanonicalOperator& op) {
    CanonicalOperator r;
    for (const auto& [m, c] : op.terms_) r.add_term(m, s * c);
    return r;
}

CanonicalOperator operator*(const Rational& s, const CanonicalOperator& op) {
    return CPoly::real_const(s) * op;
}

CanonicalOperator CanonicalOperator::time_derivative() const {
    CanonicalOperator r;
    for (const auto& [m, c] : terms_) r.add_term(m, c.derivative());
    return r;
}

CanonicalOperator commutator(const CanonicalOperator& a, const CanonicalOperator& b) {
    return a * b - b * a;
}

namespace {

void append_symbol(std::ostream& os, const char* name, const std::array<std::uint8_t, 3>& e) {
    static const char axes[3] = {'x', 'y', 'z'};
    for (std::size_t i = 0; i < 3; ++i) {
        if (e[i] == 0) continue;
        os << " " << name << axes[i];
        if (e[i] > 1) os << "^" << static_cast<int>(e[i]);
    }
}

}  // namespace

std::string CanonicalOperator::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << to_string(c.re);
        if (!c.im.is_zero()) os << " + i*(" << to_string(c.im) << ")";
        os << ")";
        append_symbol(os, "q", m.qe);
        append_symbol(os, "D", m.de);
        first = false;
    }
    return os.str();
}

std::string CanonicalOperator::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [m, c] : terms_) {
        nlohmann::json t;
        t["q"] = {m.qe[0], m.qe[1], m.qe[2]};
        t["D"] = {m.de[0], m.de[1], m.de[2]};
        nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
        for (int n = 0; n <= c.re.degree(); ++n) re.push_back(c.re.coeff(n).str());
        for (int n = 0; n <= c.im.degree(); ++n) im.push_back(c.im.coeff(n).str());
        t["re"] = re;
        t["im"] = im;
        arr.push_back(t);
    }
    return arr.dump();
}

}  // namespace galine

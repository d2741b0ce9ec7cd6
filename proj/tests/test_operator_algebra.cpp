#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "galine/operator_algebra.hpp"

using namespace galine;

namespace {
CanonicalOperator Q(int i = 0) { return CanonicalOperator::mult_q(i); }
CanonicalOperator D(int i = 0) { return CanonicalOperator::deriv(i); }
CanonicalOperator I(Rational c = Rational(1)) {
    return CanonicalOperator::identity(CPoly::real_const(std::move(c)));
}
}  // namespace

TEST_CASE("basic rewrite [D, q] = 1") {
    CHECK(commutator(D(), Q()) == I());
    CHECK(commutator(Q(), D()) == -I());
    CHECK(commutator(D(0), Q(1)).is_zero());
    CHECK(commutator(Q(0), Q(1)).is_zero());
    CHECK(commutator(D(0), D(1)).is_zero());
}

TEST_CASE("normal ordering of higher powers") {
    // D^2 q^2 = q^2 D^2 + 4 q D + 2
    CanonicalOperator lhs = D() * D() * Q() * Q();
    OpMonomial q2d2, qd;
    q2d2.qe[0] = 2;
    q2d2.de[0] = 2;
    qd.qe[0] = 1;
    qd.de[0] = 1;
    CanonicalOperator expect = CanonicalOperator::term(q2d2, CPoly::real_const(Rational(1))) +
                               CanonicalOperator::term(qd, CPoly::real_const(Rational(4))) +
                               I(Rational(2));
    CHECK(lhs == expect);
    // D q^3 = q^3 D + 3 q^2
    CanonicalOperator lhs2 = D() * Q() * Q() * Q();
    OpMonomial q3d, q2;
    q3d.qe[0] = 3;
    q3d.de[0] = 1;
    q2.qe[0] = 2;
    CHECK(lhs2 == CanonicalOperator::term(q3d, CPoly::real_const(Rational(1))) +
                      CanonicalOperator::term(q2, CPoly::real_const(Rational(3))));
}

TEST_CASE("associativity of the product") {
    CanonicalOperator a = Q() * D() + I(Rational(2));
    CanonicalOperator b = D() * D() + Q();
    CanonicalOperator c = Q() * Q() + D();
    CHECK((a * b) * c == a * (b * c));
}

TEST_CASE("complex time-polynomial coefficients") {
    CPoly it = CPoly::imag(TimePoly::monomial(1, Rational(1)));  // i t
    CanonicalOperator op = CanonicalOperator::mult_q(0, it);
    CanonicalOperator sq = op * op;  // (i t)^2 q^2 = -t^2 q^2
    OpMonomial q2;
    q2.qe[0] = 2;
    CHECK(sq == CanonicalOperator::term(q2, CPoly::real(-TimePoly::monomial(2, Rational(1)))));

    // i [iD, q] = i * i = -1
    CanonicalOperator iD = CanonicalOperator::deriv(0, CPoly::imag_const(Rational(1)));
    CHECK(CPoly::imag_const(Rational(1)) * commutator(iD, Q()) == -I());
}

TEST_CASE("time derivative acts on coefficients") {
    CanonicalOperator op =
        CanonicalOperator::mult_q(0, CPoly::real(TimePoly::monomial(2, Rational(1, 2))));
    CHECK(op.time_derivative() ==
          CanonicalOperator::mult_q(0, CPoly::real(TimePoly::monomial(1, Rational(1)))));
    CHECK(I().time_derivative().is_zero());
}

TEST_CASE("scalar recognition and coefficient lookup") {
    CHECK(I(Rational(3)).is_scalar());
    CHECK(CanonicalOperator().is_scalar());
    CHECK_FALSE(Q().is_scalar());
    CHECK(I(Rational(3)).scalar_part() == CPoly::real_const(Rational(3)));
    CHECK(Q().coefficient(OpMonomial{}).is_zero());
}

TEST_CASE("pretty printer and JSON dump stay stable") {
    CanonicalOperator op = Q() * D() + I(Rational(1, 2));
    CHECK(op.str() == "(1/2) + (1) qx Dx");
    CHECK(op.to_json() ==
          R"([{"D":[0,0,0],"im":[],"q":[0,0,0],"re":["1/2"]},{"D":[1,0,0],"im":[],"q":[1,0,0],"re":["1"]}])");
    CHECK(CanonicalOperator().str() == "0");
}

TEST_CASE("cancellation removes terms") {
    CanonicalOperator z = Q() - Q();
    CHECK(z.is_zero());
    CHECK((Q() * D() - Q() * D()).is_zero());
}

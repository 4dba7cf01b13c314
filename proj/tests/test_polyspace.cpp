#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ospbi/linop.hpp"
#include "ospbi/sampling.hpp"

using namespace ospbi;

namespace {

LaurentPoly random_poly(Sampler& s, long lo, long hi) {
    LaurentPoly p;
    for (long e = lo; e <= hi; ++e)
        p.add_to(e, Rational(s.uniform_long(-9, 9), s.uniform_long(1, 7)));
    return p;
}

}  // namespace

TEST_CASE("canonical text form") {
    LaurentPoly p;
    p.add_to(2, Rational(1));
    p.add_to(1, Rational(-1, 3));
    p.add_to(0, Rational(-1, 3));
    CHECK(to_string(p) == "x^2 - 1/3*x - 1/3");
    CHECK(to_string(LaurentPoly::zero()) == "0");
    CHECK(to_string(LaurentPoly::mono(0)) == "1");
    CHECK(to_string(LaurentPoly::mono(1)) == "x");
    CHECK(to_string(LaurentPoly::mono(-2, Rational(5, 2))) == "5/2*x^-2");
    CHECK(to_string(LaurentPoly::mono(3, Rational(-1))) == "-x^3");
}

TEST_CASE("arithmetic and bookkeeping") {
    LaurentPoly p = LaurentPoly::mono(2) + LaurentPoly::mono(-1, Rational(3));
    CHECK(p.lo_exp() == -1);
    CHECK(p.hi_exp() == 2);
    CHECK(p.coeff(-1) == Rational(3));
    CHECK(p.coeff(5) == Rational(0));
    CHECK((p - p).is_zero());
    CHECK(mul_pow(p, 2) == LaurentPoly::mono(4) + LaurentPoly::mono(1, Rational(3)));
    LaurentPoly q = LaurentPoly::mono(1) - LaurentPoly::mono(0);
    CHECK(q * q == LaurentPoly::mono(2) - Rational(2) * LaurentPoly::mono(1) +
                       LaurentPoly::mono(0));
    // Cancellation removes the entry entirely.
    LaurentPoly r = q + LaurentPoly::mono(0);
    CHECK(r == LaurentPoly::mono(1));
}

TEST_CASE("derivative follows the power rule on every exponent") {
    CHECK(derivative(LaurentPoly::mono(2)) == LaurentPoly::mono(1, Rational(2)));
    CHECK(derivative(LaurentPoly::mono(0)).is_zero());
    CHECK(derivative(LaurentPoly::mono(-1)) == LaurentPoly::mono(-2, Rational(-1)));
}

TEST_CASE("reflection is an involution") {
    Sampler s(7);
    for (int i = 0; i < 20; ++i) {
        LaurentPoly p = random_poly(s, -5, 5);
        CHECK(reflect(reflect(p)) == p);
    }
    CHECK(reflect(LaurentPoly::mono(1)) == LaurentPoly::mono(1, Rational(-1)));
    CHECK(reflect(LaurentPoly::mono(2)) == LaurentPoly::mono(2));
}

TEST_CASE("dunkl agrees with the derivative on even monomials") {
    Sampler s(11);
    for (int i = 0; i < 20; ++i) {
        Rational mu = s.positive_rational(9, 7);
        for (long e = -8; e <= 8; e += 2)
            CHECK(dunkl(mu, LaurentPoly::mono(e)) == derivative(LaurentPoly::mono(e)));
    }
}

TEST_CASE("dunkl acts by the mu-number") {
    Sampler s(13);
    for (int i = 0; i < 10; ++i) {
        Rational mu = s.positive_rational(9, 7);
        for (long n = -8; n <= 8; ++n) {
            LaurentPoly expect = LaurentPoly::mono(n - 1, mu_number(n, mu));
            CHECK(dunkl(mu, LaurentPoly::mono(n)) == expect);
        }
    }
    CHECK(mu_number(1, Rational(1, 2)) == Rational(2));
    CHECK(mu_number(2, Rational(1, 2)) == Rational(2));
    CHECK(mu_number(0, Rational(5, 3)) == Rational(0));
    CHECK(mu_number(-1, Rational(1, 2)) == Rational(0));  // -1 + 2*mu at mu = 1/2
}

TEST_CASE("evaluation") {
    LaurentPoly p = LaurentPoly::mono(2) - LaurentPoly::mono(0);
    CHECK(eval(p, Rational(3)) == Rational(8));
    CHECK(eval(LaurentPoly::mono(-2, Rational(3)), Rational(2)) == Rational(3, 4));
    CHECK_THROWS_AS(eval(LaurentPoly::mono(-1), Rational(0)), std::domain_error);
    CHECK(eval(LaurentPoly::zero(), Rational(0)) == Rational(0));
}

TEST_CASE("operator composition order") {
    LinOp x_then_d = LinOp::derivative() * LinOp::mul_pow(1);  // p -> d/dx (x p)
    LinOp d_then_x = LinOp::mul_pow(1) * LinOp::derivative();  // p -> x p'
    LaurentPoly p = LaurentPoly::mono(2);
    CHECK(x_then_d(p) == LaurentPoly::mono(2, Rational(3)));
    CHECK(d_then_x(p) == LaurentPoly::mono(2, Rational(2)));
    CHECK((x_then_d - d_then_x)(p) == p);  // the commutator [d/dx, x] is the identity
    LinOp sum = LinOp::derivative() + LinOp::scalar(Rational(2));
    CHECK(sum(p) == LaurentPoly::mono(1, Rational(2)) + LaurentPoly::mono(2, Rational(2)));
}

TEST_CASE("windowed matrices") {
    BasisWindow w{0, 3};
    ColumnMatrix m = op_matrix(LinOp::derivative(), w);
    CHECK(m.cols.size() == 4);
    // Column of x^2 holds 2x: coefficient 2 at exponent 1.
    CHECK(m.cols[2][1] == Rational(2));
    CHECK(m.cols[2][0] == Rational(0));

    CHECK_THROWS_AS(op_matrix(LinOp::mul_pow(1), w), WindowOverflow);
    try {
        op_matrix(LinOp::mul_pow(1), w);
    } catch (const WindowOverflow& e) {
        CHECK(e.column_exponent == 3);
        CHECK(e.escaped_exponent == 4);
    }
    // A rectangular destination absorbs the shift.
    CHECK_NOTHROW(op_columns(LinOp::mul_pow(1), w, BasisWindow{0, 4}));
}

TEST_CASE("matrix extraction is functorial") {
    Sampler s(17);
    LinOp f = LinOp::derivative() + Rational(1, 2) * LinOp::reflection();
    LinOp g = LinOp::mul_pow(2) + LinOp::dunkl(Rational(2, 3));
    // g shifts exponents by at most +2/-1, f by at most -1.
    BasisWindow src{-2, 4};
    BasisWindow mid{-4, 7};
    BasisWindow dst{-5, 7};
    ColumnMatrix lhs = op_columns(f * g, src, dst);
    ColumnMatrix rhs = matmul(op_columns(f, mid, dst), op_columns(g, src, mid));
    CHECK(lhs == rhs);

    for (int i = 0; i < 5; ++i) {
        LaurentPoly p = random_poly(s, -2, 4);
        CHECK((f * g)(p) == f(g(p)));
    }
}

TEST_CASE("large denominators stress exactness") {
    LinOp d = LinOp::dunkl(Rational(1, 1000003));
    LaurentPoly p = LaurentPoly::mono(7, Rational(999983));
    LaurentPoly image = d(p);
    CHECK(image.coeff(6) == Rational(999983) * mu_number(7, Rational(1, 1000003)));
    // Round-trips through the canonical string exactly.
    CHECK(Rational::parse(image.coeff(6).str()) == image.coeff(6));
}

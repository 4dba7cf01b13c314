#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ospbi/ncparser.hpp"

using namespace ospbi;

namespace {

NCExpr g(Gen x) { return NCExpr::gen(x); }

}  // namespace

TEST_CASE("words, coefficients, and canonical text") {
    NCExpr e = Rational(2) * (g(Gen::Ap) * g(Gen::Ap) * g(Gen::P)) + NCExpr::constant(Rational(1, 2));
    CHECK(e.str() == "1/2 + 2*A+^2*P");
    CHECK(ParamScalar::var(2).str() == "m2");
    NCExpr f = ParamScalar::var(2) * g(Gen::Ap) + g(Gen::Ap);
    CHECK(f.str() == "(m2 + 1)*A+");
    CHECK((f - f).is_zero());
    CHECK(NCExpr::zero().str() == "0");
    CHECK(g(Gen::Am).str() == "A-");
}

TEST_CASE("param scalars evaluate and order deterministically") {
    ParamScalar s = ParamScalar(Rational(2)) * ParamScalar::var(2) * ParamScalar::var(3) +
                    ParamScalar::var(4) - ParamScalar(Rational(1, 2));
    CHECK(s.str() == "2*m2*m3 + m4 - 1/2");
    CHECK(s.eval(Rational(1), Rational(2), Rational(3)) == Rational(2 * 1 * 2) + Rational(3) -
                                                               Rational(1, 2));
    CHECK((s - s).is_zero());
}

TEST_CASE("normal ordering applies the rewrite system") {
    NormalForm nf = normal_order(g(Gen::Am) * g(Gen::Ap));
    CHECK(nf.expr.str() == "2*A0 - A+*A-");
    CHECK(nf.rule_applications == 1);
    CHECK(is_normal_form(nf.expr));

    CHECK(normal_order(g(Gen::P) * g(Gen::P)).expr == NCExpr::one());
    CHECK(normal_order(g(Gen::P) * g(Gen::Ap)).expr.str() == "-A+*P");
    CHECK(normal_order(g(Gen::P) * g(Gen::Am)).expr.str() == "-A-*P");
    CHECK(normal_order(g(Gen::P) * g(Gen::A0)).expr.str() == "A0*P");
    // Terms print in graded order: shorter words first.
    CHECK(normal_order(g(Gen::A0) * g(Gen::Ap)).expr.str() == "A+ + A+*A0");
    CHECK(normal_order(g(Gen::Am) * g(Gen::A0)).expr.str() == "A- + A0*A-");

    // Already normal: zero rewrites.
    NCExpr pbw = g(Gen::Ap) * g(Gen::A0) * g(Gen::Am) * g(Gen::P);
    NormalForm nf2 = normal_order(pbw);
    CHECK(nf2.expr == pbw);
    CHECK(nf2.rule_applications == 0);

    CHECK_THROWS_AS(normal_order(g(Gen::K1)), std::invalid_argument);
}

TEST_CASE("normal order is idempotent and linear on a messy example") {
    NCExpr mess = g(Gen::P) * g(Gen::Am) * g(Gen::A0) * g(Gen::Ap) * g(Gen::P) -
                  ParamScalar::var(3) * (g(Gen::Am) * g(Gen::Am) * g(Gen::Ap));
    NormalForm once = normal_order(mess);
    CHECK(is_normal_form(once.expr));
    CHECK(normal_order(once.expr).expr == once.expr);
    for (const auto& [w, c] : once.expr.terms()) CHECK_NOTHROW(decode_normal_word(w));
}

TEST_CASE("decode rejects words out of order") {
    CHECK(decode_normal_word({Gen::Ap, Gen::Ap, Gen::A0, Gen::Am, Gen::P}) ==
          NCMonomial{2, 1, 1, 1});
    CHECK(decode_normal_word({}) == NCMonomial{0, 0, 0, 0});
    CHECK_THROWS_AS(decode_normal_word({Gen::Am, Gen::Ap}), std::invalid_argument);
    CHECK_THROWS_AS(decode_normal_word({Gen::P, Gen::P}), std::invalid_argument);
    CHECK_THROWS_AS(decode_normal_word({Gen::K1}), std::invalid_argument);
}

TEST_CASE("defining relation suite passes symbolically") {
    std::vector<IdentityReport> suite = builtin_identity_suite();
    CHECK(suite.size() == 15);
    for (const auto& rep : suite) {
        INFO(rep.identity);
        CHECK(rep.pass);
        CHECK(rep.residual == "0");
    }
}

TEST_CASE("verify_identity reports a nonzero residual honestly") {
    IdentityReport rep = verify_identity("A0 = A0 + A+", g(Gen::A0), g(Gen::A0) + g(Gen::Ap));
    CHECK_FALSE(rep.pass);
    CHECK(rep.residual == "-A+");
}

TEST_CASE("named elements expand to raw generators") {
    for (int i = 1; i <= 3; ++i) {
        NCExpr k = def_k(i);
        CHECK(k.has_named() == false);  // definitions are already raw
        NCExpr sub = substitute_generators(g(static_cast<Gen>(static_cast<int>(Gen::K1) + i - 1)));
        CHECK(normal_order(sub).expr == normal_order(k).expr);
    }
    CHECK(substitute_generators(g(Gen::Q)) == def_casimir_q());
    CHECK_FALSE(substitute_generators(g(Gen::Cas)).has_named());
    CHECK(g(Gen::K2).has_named());
}

TEST_CASE("anticommutators close on the abstract level") {
    // {K1, K2} - K3 - W3 normal orders to zero with symbolic coefficients.
    NCExpr lhs = substitute_generators(anticommutator(g(Gen::K1), g(Gen::K2)));
    NCExpr rhs = substitute_generators(g(Gen::K3) + g(Gen::W3));
    CHECK(normal_order(lhs - rhs).expr.is_zero());
}

TEST_CASE("parser round trip") {
    CHECK(parse_expression("A0") == g(Gen::A0));
    CHECK(parse_expression("A+*A-") == g(Gen::Ap) * g(Gen::Am));
    CHECK(parse_expression("2*A0") == Rational(2) * g(Gen::A0));
    CHECK(parse_expression("-1/2") == NCExpr::constant(Rational(-1, 2)));
    CHECK(parse_expression("m3*P") == ParamScalar::var(3) * g(Gen::P));
    CHECK(parse_expression("A+^3") == g(Gen::Ap) * g(Gen::Ap) * g(Gen::Ap));
    CHECK(parse_expression("{A+, A-}") == anticommutator(g(Gen::Ap), g(Gen::Am)));
    CHECK(parse_expression("[A0, A+]") == commutator(g(Gen::A0), g(Gen::Ap)));
    CHECK(parse_expression("(A0 + P)*A-") == (g(Gen::A0) + g(Gen::P)) * g(Gen::Am));
    CHECK(parse_expression("K1") == g(Gen::K1));
    CHECK(parse_expression("C") == g(Gen::Cas));

    // The suite's relations parse and verify end to end.
    NCExpr d = parse_expression("{A+, A-} - 2*A0");
    CHECK(normal_order(substitute_generators(d)).expr.is_zero());
    NCExpr q = parse_expression("Q^2 + m2^2 + m3^2 + m4^2 - 1/4");
    CHECK(normal_order(substitute_generators(parse_expression("C") - q)).expr.is_zero());
}

TEST_CASE("parser rejects malformed input with positions") {
    CHECK_THROWS_AS(parse_expression(""), ParseError);
    CHECK_THROWS_AS(parse_expression("A0 +"), ParseError);
    CHECK_THROWS_AS(parse_expression("A0 A+"), ParseError);
    CHECK_THROWS_AS(parse_expression("K1^-2"), ParseError);
    CHECK_THROWS_AS(parse_expression("K1^1/2"), ParseError);
    CHECK_THROWS_AS(parse_expression("2/"), ParseError);
    CHECK_THROWS_AS(parse_expression("foo"), ParseError);
    CHECK_THROWS_AS(parse_expression("{A0, }"), ParseError);
    CHECK_THROWS_AS(parse_expression("(A0"), ParseError);
    CHECK_THROWS_AS(parse_expression("m5"), ParseError);
    try {
        parse_expression("A0 + %");
    } catch (const ParseError& e) {
        CHECK(e.position == 5);
        CHECK(std::string(e.what()).find("offset 5") != std::string::npos);
    }
}

#include "ospbi/erratum.hpp"

#include "ospbi/biortho.hpp"

namespace ospbi {

namespace {

const Rational kHalf(1, 2);

ErratumFinding mu_number_finding() {
    ErratumFinding f;
    f.id = "mu-number-factor";
    f.statement = "the mu-number is displayed as [n]_mu = n + 2*mu*(1 - (-1)^n)";
    f.correction =
        "expanding the Dunkl operator on x^n gives [n]_mu = n + mu*(1 - (-1)^n); the displayed "
        "K3 action coefficient nu_n only matches the operator with this reading";
    f.context = "coefficient of x^0 in D_mu x^1 at mu = 1/2";
    Rational mu = kHalf;
    Rational computed = dunkl(mu, LaurentPoly::mono(1)).coeff(0);
    Rational printed = Rational(1) + Rational(2) * mu * Rational(2);  // n + 2*mu*(1-(-1)^n), n=1
    f.printed_value = printed.str();
    f.computed_value = computed.str();
    return f;
}

ErratumFinding lowering_sign_finding() {
    ErratumFinding f;
    f.id = "lowering-coefficient-sign";
    f.statement =
        "the first-generator action is displayed with an explicit minus, \"- iota_n e_{n-1}\", "
        "together with iota_n = -[n]_mu1, which nets to +[n]_mu1";
    f.correction =
        "direct operator application gives the net e_{n-1} coefficient -[n]_mu1, so iota_n = "
        "+[n]_mu1 under the displayed sign convention";
    f.context = "coefficient of e_1 in K1 e_2 at mu = (1/2, 1/2, 1/2, 1/2)";
    Params p{kHalf, kHalf, kHalf, kHalf, std::nullopt};
    Rational computed = k_ops_embedded(p).K1(LaurentPoly::mono(2)).coeff(1);
    Rational printed = -computed;  // the printed pair of signs flips the value
    f.printed_value = printed.str();
    f.computed_value = computed.str();
    return f;
}

ErratumFinding norm_denominator_finding() {
    ErratumFinding f;
    f.id = "norm-denominator";
    f.statement =
        "the closed-form norm denominator is printed as (mu1+mu2+1/2)^2_n, read either as "
        "((mu1+mu2+1/2)_n)^2 or as (mu1+mu2+1/2)_{2n}";
    f.correction =
        "monic orthogonality forces h_n/h_0 = u_1...u_n, which matches the printed numerator "
        "over ((mu1+mu2+1)_n)^2; neither printed reading does";
    f.context = "h_1/h_0 at mu1 = mu2 = 1/2";
    Params p{kHalf, kHalf, kHalf, kHalf, std::nullopt};
    Rational recurrence = norm_h(p, 1);
    Rational corrected = norm_closed_form(p, 1);
    Rational squared = norm_printed_reading(p, 1, 0);
    Rational doubled = norm_printed_reading(p, 1, 1);
    f.printed_value = squared.str() + " (squared reading) or " + doubled.str() +
                      " (doubled-index reading)";
    f.computed_value = recurrence.str() + " (recurrence product; corrected closed form gives " +
                       corrected.str() + ")";
    return f;
}

ErratumFinding middle_term_finding() {
    ErratumFinding f;
    f.id = "normalized-recurrence-middle-term";
    f.statement =
        "the normalized recurrence is printed with middle term r_n * Phat_{n+1} on the "
        "right-hand side";
    f.correction =
        "the standard monic form with middle term r_n * Phat_n is the one consistent with the "
        "overlap recurrence it is derived from and with the integral formula";
    f.context = "Phat_1 at Omega_1 for mu = (1/2, 1/2, 1/2) truncated at N = 2";
    BIContext ctx = bi_context(truncated_params(kHalf, kHalf, kHalf, 2));
    BIEval ev = bi_eval(ctx, 1, 1);
    // Printed reading: Omega*Phat_0 = (1 + r_0)*Phat_1, so Phat_1 = Omega/(1 + r_0).
    Rational printed = ctx.chi.omega[1] / (Rational(1) + ctx.coeffs.r[0]);
    f.printed_value = printed.str();
    f.computed_value = ev.recurrence_value.str() + " (integral route gives " +
                       ev.integral_value.str() + ")";
    return f;
}

ErratumFinding odd_a_denominator_finding() {
    ErratumFinding f;
    f.id = "recurrence-odd-a-denominator";
    f.statement = "the odd-branch A_n is printed with denominator 2(n + mu1 + mu2)";
    f.correction =
        "the denominator 2(n + mu1 + mu2 + 1), as in the even branch shifted by one, is the "
        "reading under which U_n = E3_n*E1_{n-1} and r_n = E2_n hold";
    f.context = "r_1 at mu = (1/2, 1/2, 1/2) truncated at N = 2";
    Params p = truncated_params(kHalf, kHalf, kHalf, 2);
    BIContext ctx = bi_context(p);
    // Printed odd-branch A_1, with the denominator as displayed.
    Rational one(1);
    Rational a1_printed = (one + p.mu1 + p.mu1 + p.mu2 + p.mu2 + one) *
                          (one + p.mu1 + p.mu2 + p.mu3 + p.mu4 + one) /
                          (Rational(2) * (one + p.mu1 + p.mu2));
    Rational r1_printed = p.mu1 + p.mu3 + kHalf - a1_printed - ctx.coeffs.C[1];
    f.printed_value = r1_printed.str();
    f.computed_value = ctx.coeffs.r[1].str() + " (overlap route E2_1 gives " +
                       ctx.coeffs.E2[1].str() + ")";
    return f;
}

}  // namespace

std::vector<ErratumFinding> erratum_findings() {
    return {mu_number_finding(), lowering_sign_finding(), norm_denominator_finding(),
            middle_term_finding(), odd_a_denominator_finding()};
}

}  // namespace ospbi

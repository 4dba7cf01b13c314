#include "ospbi/jacobi_m1.hpp"

namespace ospbi {

ZeroDenominator::ZeroDenominator(long depth)
    : std::runtime_error("recurrence denominator vanishes at depth n = " + std::to_string(depth)),
      n(depth) {}

TTRCoeffs ttr_coeffs(const Rational& alpha, const Rational& beta, long nmax) {
    if (nmax < 0) throw std::invalid_argument("nmax must be non-negative");
    TTRCoeffs c;
    c.alpha = alpha;
    c.beta = beta;
    c.b.reserve(static_cast<size_t>(nmax) + 1);
    c.u.reserve(static_cast<size_t>(nmax) + 1);
    for (long n = 0; n <= nmax; ++n) {
        Rational d = Rational(2 * n) + alpha + beta;
        if (d.is_zero() || (d + Rational(2)).is_zero()) throw ZeroDenominator(n);
        if (n == 0) {
            c.u.push_back(Rational(0));
        } else if (n % 2 == 0) {
            c.u.push_back(Rational(n) * (Rational(n) + alpha + beta) / (d * d));
        } else {
            c.u.push_back((Rational(n) + alpha) * (Rational(n) + beta) / (d * d));
        }
        int sgn = (n % 2 == 0) ? 1 : -1;
        Rational num = Rational(2 * n + 1) * alpha + alpha * beta + alpha * alpha +
                       (sgn == 1 ? beta : -beta);
        Rational b = num / (d * (d + Rational(2)));
        c.b.push_back(sgn == 1 ? b : -b);
    }
    return c;
}

std::vector<LaurentPoly> poly_seq(const TTRCoeffs& coeffs, long nmax) {
    if (static_cast<long>(coeffs.b.size()) <= nmax - 1 && nmax > 0)
        throw std::invalid_argument("coefficients not generated to the requested depth");
    std::vector<LaurentPoly> js;
    js.reserve(static_cast<size_t>(nmax) + 1);
    LaurentPoly prev;                      // J_{-1} = 0
    LaurentPoly cur = LaurentPoly::mono(0);  // J_0 = 1
    js.push_back(cur);
    const LaurentPoly x = LaurentPoly::mono(1);
    for (long n = 0; n < nmax; ++n) {
        LaurentPoly next =
            (x - LaurentPoly::mono(0, coeffs.b[static_cast<size_t>(n)])) * cur -
            coeffs.u[static_cast<size_t>(n)] * prev;
        prev = cur;
        cur = next;
        js.push_back(cur);
    }
    return js;
}

LinOp operator_l(const Rational& alpha, const Rational& beta) {
    const LinOp I = LinOp::identity();
    const LinOp X = LinOp::mul_pow(1);
    const LinOp R = LinOp::reflection();
    LinOp mult1 = Rational(2) * (I - X);                               // 2(1-x) .
    LinOp mult2 = LinOp::scalar(alpha + beta + Rational(1)) - alpha * LinOp::mul_pow(-1);
    return mult1 * LinOp::derivative() * R + mult2 * (I - R);
}

Rational l_eigenvalue(const Rational& alpha, const Rational& beta, long n) {
    if (n % 2 == 0) return Rational(-2 * n);
    return Rational(2) * (alpha + beta + Rational(n) + Rational(1));
}

std::vector<LaurentPoly> psi_basis(const Params& p, long nmax) {
    TTRCoeffs c = ttr_coeffs(p.mu1 + p.mu1, p.mu2 + p.mu2, nmax);
    return poly_seq(c, nmax);
}

TriDiagAction k2_on_psi_coeffs(const Params& p, long n) {
    TTRCoeffs c = ttr_coeffs(p.mu1 + p.mu1, p.mu2 + p.mu2, n);
    const Rational tau0 = Rational(-2) * p.mu1 * p.mu3;
    const Rational tau1 = p.mu3 - Rational(1, 2);
    const Rational tau2 = p.mu3 + Rational(1, 2);
    const Rational tau3 = p.mu4;
    auto lam = [&p](long m) { return action_coeffs(p, m).lambda; };
    TriDiagAction a;
    a.upper = tau1 * lam(n) + tau2 * lam(n + 1) + tau3;
    a.diag = (tau1 + tau2) * lam(n) * c.b[static_cast<size_t>(n)] +
             tau3 * c.b[static_cast<size_t>(n)] + tau0;
    a.lower = n == 0 ? Rational(0)
                     : (tau1 * lam(n) + tau2 * lam(n - 1) + tau3) * c.u[static_cast<size_t>(n)];
    return a;
}

}  // namespace ospbi

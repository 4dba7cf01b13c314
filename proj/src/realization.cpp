#include "ospbi/realization.hpp"

namespace ospbi {

Rational truncation_mu(long N, const Rational& mu1, const Rational& mu2, const Rational& mu3) {
    if (N < 0) throw std::invalid_argument("truncation level must be non-negative");
    Rational v = Rational(N) + mu1 + mu2 + mu3 + Rational(1);
    return (N % 2 == 0) ? v : -v;
}

Params truncated_params(Rational mu1, Rational mu2, Rational mu3, long N) {
    Params p;
    p.mu4 = truncation_mu(N, mu1, mu2, mu3);
    p.mu1 = std::move(mu1);
    p.mu2 = std::move(mu2);
    p.mu3 = std::move(mu3);
    p.N = N;
    return p;
}

OspOps osp_ops(const Rational& mu1) {
    OspOps ops{
        LinOp::mul_pow(1) * LinOp::derivative() + LinOp::scalar(mu1 + Rational(1, 2)),
        LinOp::mul_pow(1),
        LinOp::dunkl(mu1),
        LinOp::reflection(),
    };
    return ops;
}

LinOp casimir_op(const Rational& mu1) {
    OspOps o = osp_ops(mu1);
    return (o.A0 - o.Ap * o.Am - Rational(1, 2) * LinOp::identity()) * o.P;
}

BIOps k_ops_embedded(const Params& p) {
    OspOps o = osp_ops(p.mu1);
    const LinOp I = LinOp::identity();
    const Rational s = p.mu2 + p.mu3 + Rational(1, 2);
    // the Casimir acts as the scalar mu1, so (mu4 - Q)P collapses to
    // (mu4 - mu1)P
    LinOp k1 = o.Ap * o.A0 - p.mu4 * (o.Ap * o.P) + s * o.Ap - o.Am +
               (p.mu4 - p.mu1) * o.P - Rational(1, 2) * I;
    LinOp k2 = Rational(-1) * (o.Ap * o.A0 * o.P) - s * (o.Ap * o.P) + o.A0 * o.P +
               p.mu4 * o.Ap + p.mu3 * o.P;
    LinOp k3 = o.A0 * o.P - o.Am * o.P + p.mu2 * o.P;
    return {k1, k2, k3};
}

BIOps k_ops_explicit(const Params& p) {
    const LinOp I = LinOp::identity();
    const LinOp X = LinOp::mul_pow(1);
    const LinOp Xinv = LinOp::mul_pow(-1);
    const LinOp D = LinOp::derivative();
    const LinOp R = LinOp::reflection();
    const Rational half(1, 2);
    const Rational msum = p.mu1 + p.mu2 + p.mu3 + Rational(1);

    LinOp k1 = (LinOp::mul_pow(2) - I) * D + msum * X -
               p.mu1 * (Xinv * (I - R)) -
               (LinOp::scalar(p.mu1) + p.mu4 * (X - I)) * R -
               half * I;
    LinOp k2 = (X - LinOp::mul_pow(2)) * D * R - msum * (X * R) + p.mu4 * X +
               (p.mu1 + p.mu3 + half) * R;
    LinOp k3 = (X - I) * D * R +
               (p.mu1 * Xinv - LinOp::scalar(p.mu1 + p.mu2 + half)) * (I - R) +
               LinOp::scalar(p.mu1 + p.mu2 + half);
    return {k1, k2, k3};
}

ActionCoeffs action_coeffs(const Params& p, long n) {
    const Rational half(1, 2);
    const int sgn = (n % 2 == 0) ? 1 : -1;
    auto signed_val = [sgn](Rational v) { return sgn == 1 ? v : -v; };
    ActionCoeffs c{
        signed_val(Rational(n) + p.mu1 + p.mu2 + half),
        -signed_val(mu_number(n, p.mu1)),
        signed_val(Rational(n) + p.mu1 + p.mu2 + p.mu3 + (sgn == 1 ? p.mu4 : -p.mu4)),
        signed_val(Rational(n) + p.mu1 + p.mu3 + half),
        Rational(n) + p.mu1 + p.mu2 + p.mu3 + (sgn == 1 ? p.mu4 : -p.mu4),
        signed_val(p.mu4 - p.mu1) - half,
        mu_number(n, p.mu1),
    };
    return c;
}

TridiagReport verify_tridiag(const Params& p, BasisWindow window) {
    if (window.hi - window.lo < 2)
        throw std::invalid_argument("tridiagonalization window needs at least three exponents");
    TridiagReport rep;
    rep.tau = {Rational(-2) * p.mu1 * p.mu3, p.mu3 - Rational(1, 2), p.mu3 + Rational(1, 2),
               p.mu4};
    rep.beta = {Rational(-2) * p.mu3 * p.mu4, p.mu3 - Rational(1, 2), p.mu3 + Rational(1, 2),
                p.mu1};
    rep.interior = {window.lo + 1, window.hi - 1};

    BIOps k = k_ops_explicit(p);
    const LinOp X = LinOp::mul_pow(1);
    const LinOp Xinv = LinOp::mul_pow(-1);
    const LinOp I = LinOp::identity();

    LinOp rhs1 = rep.tau[1] * (X * k.K3) + rep.tau[2] * (k.K3 * X) + rep.tau[3] * X +
                 rep.tau[0] * I;
    LinOp rhs2 = rep.beta[1] * (Xinv * k.K2) + rep.beta[2] * (k.K2 * Xinv) + rep.beta[3] * Xinv +
                 rep.beta[0] * I;

    rep.pass_k2_from_k3 =
        op_columns(k.K2, rep.interior, window) == op_columns(rhs1, rep.interior, window);
    rep.pass_k3_from_k2 =
        op_columns(k.K3, rep.interior, window) == op_columns(rhs2, rep.interior, window);
    return rep;
}

LinOp realize_ncexpr(const NCExpr& e, const Params& p) {
    OspOps o = osp_ops(p.mu1);
    LinOp sum = LinOp::scalar(Rational(0));
    for (const auto& [w, c] : e.terms()) {
        LinOp prod = LinOp::identity();
        for (Gen g : w) {
            switch (g) {
                case Gen::Ap: prod = prod * o.Ap; break;
                case Gen::A0: prod = prod * o.A0; break;
                case Gen::Am: prod = prod * o.Am; break;
                case Gen::P: prod = prod * o.P; break;
                default:
                    throw std::invalid_argument(
                        "realize_ncexpr requires raw generators; substitute first");
            }
        }
        sum = sum + c.eval(p.mu2, p.mu3, p.mu4) * prod;
    }
    return sum;
}

}  // namespace ospbi

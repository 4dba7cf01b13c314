#include "ospbi/biortho.hpp"

#include <utility>

namespace ospbi {

NegativeExponent::NegativeExponent(long e)
    : std::runtime_error("weight moments are defined for true polynomials only; found exponent " +
                         std::to_string(e)),
      exponent(e) {}

DegenerateNorm::DegenerateNorm(long depth)
    : std::runtime_error("norm vanishes at n = " + std::to_string(depth)), n(depth) {}

ZeroB0::ZeroB0(long col)
    : std::runtime_error("B_0 vanishes at grid column k = " + std::to_string(col)), k(col) {}

namespace {

const Rational kHalf(1, 2);

void require_weight_domain(const Rational& mu1, const Rational& mu2) {
    if (mu1 + kHalf <= Rational(0) || mu2 + kHalf <= Rational(0))
        throw DomainError("weight moments require mu1 > -1/2 and mu2 > -1/2");
}

// Validates the truncation condition and returns N.
long require_truncation(const Params& p) {
    if (!p.N.has_value())
        throw TruncationRequired("a truncation level N must be set on the parameters");
    long N = *p.N;
    if (p.mu4 != truncation_mu(N, p.mu1, p.mu2, p.mu3))
        throw TruncationRequired("mu4 must equal the truncation value mu_N for N = " +
                                 std::to_string(N));
    return N;
}

Rational closed_form_numerator(const Params& p, long n) {
    unsigned long fl = static_cast<unsigned long>(n / 2);
    unsigned long ce = static_cast<unsigned long>(n - n / 2);
    return factorial(fl) * pochhammer(p.mu1 + kHalf, ce) * pochhammer(p.mu2 + kHalf, ce) *
           pochhammer(p.mu1 + p.mu2 + Rational(1), fl);
}

}  // namespace

Rational moment_ratio(long j, const Rational& mu1, const Rational& mu2) {
    if (j < 0) throw std::invalid_argument("moment index must be non-negative");
    require_weight_domain(mu1, mu2);
    unsigned long s = static_cast<unsigned long>(j % 2 == 0 ? j / 2 : (j + 1) / 2);
    return pochhammer(mu1 + kHalf, s) / pochhammer(mu1 + mu2 + Rational(1), s);
}

WeightedValue inner(const LaurentPoly& p, const LaurentPoly& q, const Rational& mu1,
                    const Rational& mu2) {
    require_weight_domain(mu1, mu2);
    if (!p.is_zero() && p.lo_exp() < 0) throw NegativeExponent(p.lo_exp());
    if (!q.is_zero() && q.lo_exp() < 0) throw NegativeExponent(q.lo_exp());
    LaurentPoly prod = p * q;
    WeightedValue v;
    for (const auto& [e, c] : prod.c) v.coeff = v.coeff + c * moment_ratio(e, mu1, mu2);
    return v;
}

Rational norm_h(const Params& p, long n) {
    if (n < 0) throw std::invalid_argument("norm index must be non-negative");
    if (n == 0) return Rational(1);
    TTRCoeffs c = ttr_coeffs(p.mu1 + p.mu1, p.mu2 + p.mu2, n);
    Rational h(1);
    for (long j = 1; j <= n; ++j) h = h * c.u[static_cast<size_t>(j)];
    return h;
}

Rational norm_closed_form(const Params& p, long n) {
    if (n < 0) throw std::invalid_argument("norm index must be non-negative");
    Rational den = pochhammer(p.mu1 + p.mu2 + Rational(1), static_cast<unsigned long>(n));
    if (den.is_zero()) throw DegenerateNorm(n);
    return closed_form_numerator(p, n) / (den * den);
}

Rational norm_printed_reading(const Params& p, long n, int reading) {
    if (n < 0) throw std::invalid_argument("norm index must be non-negative");
    Rational base = p.mu1 + p.mu2 + kHalf;
    Rational den;
    if (reading == 0) {
        Rational r = pochhammer(base, static_cast<unsigned long>(n));
        den = r * r;
    } else if (reading == 1) {
        den = pochhammer(base, static_cast<unsigned long>(2 * n));
    } else {
        throw std::invalid_argument("reading must be 0 or 1");
    }
    if (den.is_zero()) throw DegenerateNorm(n);
    return closed_form_numerator(p, n) / den;
}

ChiBasis chi_basis(const Params& p) {
    long N = require_truncation(p);
    ChiBasis cb;
    cb.eps = static_cast<int>(N % 2);
    Rational sgn_eps(cb.eps == 0 ? 1 : -1);
    cb.alpha_prime = Rational(-2) * sgn_eps * p.mu4;

    std::vector<LaurentPoly> js;
    if (N == 0) {
        js.push_back(LaurentPoly::mono(0));
    } else {
        // Depth N-1 suffices for J_0..J_N and avoids evaluating the unused
        // b_N, whose denominator can vanish on the domain boundary.
        js = poly_seq(ttr_coeffs(cb.alpha_prime, p.mu2 + p.mu2, N - 1), N);
    }

    cb.polys.reserve(static_cast<size_t>(N) + 1);
    cb.omega.reserve(static_cast<size_t>(N) + 1);
    for (long n = 0; n <= N; ++n) {
        // chi_n(x) = x^N J_n(1/x): reverse the coefficient list against
        // degree N. J_n is monic, so the x^(N-n) coefficient is exactly 1.
        LaurentPoly chi;
        for (const auto& [e, c] : js[static_cast<size_t>(n)].c) chi.add_to(N - e, c);
        cb.polys.push_back(std::move(chi));

        Rational sgn_n(n % 2 == 0 ? -1 : 1);  // (-1)^(n+1)
        cb.omega.push_back(sgn_eps * sgn_n * (Rational(n) + p.mu2 - sgn_eps * p.mu4 + kHalf));
    }
    return cb;
}

OverlapTable overlap_table(const Params& p) {
    ChiBasis chi = chi_basis(p);
    require_weight_domain(p.mu1, p.mu2);
    long N = *p.N;

    OverlapTable table;
    table.N = N;
    table.omega = chi.omega;
    if (p.mu1 < Rational(0)) table.warnings.push_back("mu1 is negative; biorthogonality is formal");
    if (p.mu2 < Rational(0)) table.warnings.push_back("mu2 is negative; biorthogonality is formal");
    if (p.mu3 < Rational(0)) table.warnings.push_back("mu3 is negative; biorthogonality is formal");

    std::vector<LaurentPoly> psi = psi_basis(p, N);
    std::vector<Rational> h(static_cast<size_t>(N) + 1, Rational(1));
    {
        TTRCoeffs c = ttr_coeffs(p.mu1 + p.mu1, p.mu2 + p.mu2, N);
        for (long n = 1; n <= N; ++n) {
            h[static_cast<size_t>(n)] = h[static_cast<size_t>(n - 1)] * c.u[static_cast<size_t>(n)];
            if (h[static_cast<size_t>(n)].is_zero()) throw DegenerateNorm(n);
        }
    }

    // Route one: moment integrals, B[n][k] = <chi_k, psi_n> / h_n.
    std::vector<std::vector<Rational>> b1(static_cast<size_t>(N) + 1,
                                          std::vector<Rational>(static_cast<size_t>(N) + 1));
    for (long n = 0; n <= N; ++n)
        for (long k = 0; k <= N; ++k)
            b1[static_cast<size_t>(n)][static_cast<size_t>(k)] =
                inner(chi.polys[static_cast<size_t>(k)], psi[static_cast<size_t>(n)], p.mu1,
                      p.mu2)
                    .coeff /
                h[static_cast<size_t>(n)];

    // Route two: expand chi_k in the monic psi basis by back-substitution
    // from the top degree; the remainder must cancel exactly.
    std::vector<std::vector<Rational>> b2(static_cast<size_t>(N) + 1,
                                          std::vector<Rational>(static_cast<size_t>(N) + 1));
    for (long k = 0; k <= N; ++k) {
        LaurentPoly residual = chi.polys[static_cast<size_t>(k)];
        for (long d = N; d >= 0; --d) {
            Rational cd = residual.coeff(d);
            b2[static_cast<size_t>(d)][static_cast<size_t>(k)] = cd;
            residual = residual - cd * psi[static_cast<size_t>(d)];
        }
        if (!residual.is_zero())
            throw MismatchError("triangular expansion left a remainder at k = " +
                                std::to_string(k));
    }

    for (long n = 0; n <= N; ++n)
        for (long k = 0; k <= N; ++k)
            if (b1[static_cast<size_t>(n)][static_cast<size_t>(k)] !=
                b2[static_cast<size_t>(n)][static_cast<size_t>(k)])
                throw MismatchError("overlap routes disagree at n = " + std::to_string(n) +
                                    ", k = " + std::to_string(k));

    table.b0 = b1[0];
    table.B = std::move(b1);
    return table;
}

BICoeffs bi_ttr(const Params& p) {
    long N = require_truncation(p);
    const Rational& muN = p.mu4;
    const Rational tau0 = Rational(-2) * p.mu1 * p.mu3;
    const Rational tau1 = p.mu3 - kHalf;
    const Rational tau2 = p.mu3 + kHalf;
    const Rational& tau3 = p.mu4;

    BICoeffs c;
    TTRCoeffs jc = ttr_coeffs(p.mu1 + p.mu1, p.mu2 + p.mu2, N + 1);
    auto lambda = [&](long j) { return action_coeffs(p, j).lambda; };

    for (long n = 0; n <= N; ++n) {
        Rational aden = Rational(2) * (Rational(n) + p.mu1 + p.mu2 + Rational(1));
        Rational cden = Rational(2) * (Rational(n) + p.mu1 + p.mu2);
        if (aden.is_zero() || cden.is_zero()) throw ZeroDenominator(n);
        Rational a, cc;
        if (n % 2 == 0) {
            a = (Rational(n) + p.mu1 + p.mu1 + Rational(1)) *
                (Rational(n) + p.mu1 + p.mu2 + p.mu3 - muN + Rational(1)) / aden;
            cc = -Rational(n) * (Rational(n) + p.mu1 + p.mu2 - p.mu3 - muN) / cden;
        } else {
            a = (Rational(n) + p.mu1 + p.mu1 + p.mu2 + p.mu2 + Rational(1)) *
                (Rational(n) + p.mu1 + p.mu2 + p.mu3 + muN + Rational(1)) / aden;
            cc = -(Rational(n) + p.mu2 + p.mu2) * (Rational(n) + p.mu1 + p.mu2 - p.mu3 + muN) /
                 cden;
        }
        c.A.push_back(a);
        c.C.push_back(cc);
        c.r.push_back(p.mu1 + p.mu3 + kHalf - a - cc);
        c.U.push_back(n == 0 ? Rational(0) : c.A[static_cast<size_t>(n - 1)] * cc);

        c.E1.push_back((tau1 * lambda(n + 1) + tau2 * lambda(n) + tau3) *
                       jc.u[static_cast<size_t>(n + 1)]);
        c.E2.push_back(((tau1 + tau2) * lambda(n) + tau3) * jc.b[static_cast<size_t>(n)] + tau0);
        c.E3.push_back(n == 0 ? Rational(0) : tau1 * lambda(n - 1) + tau2 * lambda(n) + tau3);
    }

    for (long n = 0; n <= N; ++n) {
        if (c.r[static_cast<size_t>(n)] != c.E2[static_cast<size_t>(n)])
            throw MismatchError("recurrence diagonal disagrees with the overlap route at n = " +
                                std::to_string(n));
        if (n >= 1 && c.U[static_cast<size_t>(n)] !=
                          c.E3[static_cast<size_t>(n)] * c.E1[static_cast<size_t>(n - 1)])
            throw MismatchError("recurrence product disagrees with the overlap route at n = " +
                                std::to_string(n));
    }
    return c;
}

BIContext bi_context(const Params& p) {
    BIContext ctx;
    ctx.p = p;
    long N = require_truncation(p);
    require_weight_domain(p.mu1, p.mu2);
    ctx.psi = psi_basis(p, N);
    ctx.chi = chi_basis(p);
    ctx.coeffs = bi_ttr(p);
    ctx.h.assign(static_cast<size_t>(N) + 1, Rational(1));
    TTRCoeffs c = ttr_coeffs(p.mu1 + p.mu1, p.mu2 + p.mu2, N);
    for (long n = 1; n <= N; ++n) {
        ctx.h[static_cast<size_t>(n)] =
            ctx.h[static_cast<size_t>(n - 1)] * c.u[static_cast<size_t>(n)];
        if (ctx.h[static_cast<size_t>(n)].is_zero()) throw DegenerateNorm(n);
    }
    ctx.b0.reserve(static_cast<size_t>(N) + 1);
    for (long k = 0; k <= N; ++k)
        ctx.b0.push_back(inner(ctx.chi.polys[static_cast<size_t>(k)], ctx.psi[0], p.mu1, p.mu2)
                             .coeff);
    return ctx;
}

BIEval bi_eval(const BIContext& ctx, long n, long k) {
    long N = *ctx.p.N;
    if (n < 0 || n > N || k < 0 || k > N)
        throw std::invalid_argument("grid indices must lie in 0..N");

    BIEval ev;
    const Rational& omega = ctx.chi.omega[static_cast<size_t>(k)];
    Rational prev(0), cur(1);
    for (long j = 0; j < n; ++j) {
        Rational next = (omega - ctx.coeffs.r[static_cast<size_t>(j)]) * cur -
                        ctx.coeffs.U[static_cast<size_t>(j)] * prev;
        prev = cur;
        cur = next;
    }
    ev.recurrence_value = cur;

    if (ctx.b0[static_cast<size_t>(k)].is_zero()) throw ZeroB0(k);
    Rational pref(1);
    for (long j = 0; j < n; ++j) pref = pref * ctx.coeffs.E1[static_cast<size_t>(j)];
    Rational bnk =
        inner(ctx.chi.polys[static_cast<size_t>(k)], ctx.psi[static_cast<size_t>(n)], ctx.p.mu1,
              ctx.p.mu2)
            .coeff /
        ctx.h[static_cast<size_t>(n)];
    ev.integral_value = pref * bnk / ctx.b0[static_cast<size_t>(k)];
    return ev;
}

BIEval bi_eval(const Params& p, long n, long k) { return bi_eval(bi_context(p), n, k); }

}  // namespace ospbi

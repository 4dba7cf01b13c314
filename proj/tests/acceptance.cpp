// Acceptance gate for the workbench: runs the eight exact checks end to end
// and prints one PASS/FAIL line for each.  Exits nonzero if any line fails.
#include <array>
#include <chrono>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "ospbi/biortho.hpp"
#include "ospbi/erratum.hpp"
#include "ospbi/jacobi_m1.hpp"
#include "ospbi/laurent.hpp"
#include "ospbi/linop.hpp"
#include "ospbi/ncalgebra.hpp"
#include "ospbi/realization.hpp"
#include "ospbi/sampling.hpp"

using namespace ospbi;

namespace {

void check(bool cond, const std::string& what) {
    if (!cond) throw std::runtime_error(what);
}

const std::vector<Params> kSets = {
    {Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2), std::nullopt},
    {Rational(3, 4), Rational(1, 4), Rational(1), Rational(2, 3), std::nullopt},
    {Rational(1), Rational(1, 3), Rational(1, 2), Rational(2), std::nullopt},
    {Rational(2), Rational(1, 2), Rational(1, 4), Rational(1), std::nullopt},
    {Rational(1, 4), Rational(2, 3), Rational(3, 2), Rational(1, 5), std::nullopt},
};

const std::vector<std::array<Rational, 3>> kTriples = {
    {Rational(1, 2), Rational(1, 2), Rational(1, 2)},
    {Rational(3, 4), Rational(1, 4), Rational(1)},
    {Rational(1), Rational(1, 3), Rational(1, 2)},
};

bool same_on_window(const LinOp& f, const LinOp& g, BasisWindow src, BasisWindow dst) {
    return op_columns(f, src, dst) == op_columns(g, src, dst);
}

bool finding_disagrees(const std::string& id) {
    for (const ErratumFinding& f : erratum_findings())
        if (f.id == id) return f.printed_value != f.computed_value;
    return false;
}

// 1. Normal-order residuals of the defining relations, Q-centrality, the three
//    anticommutator relations with their structure constants, and the Casimir
//    identity all vanish with fully symbolic parameters.
void criterion_identities() {
    std::vector<IdentityReport> reps = builtin_identity_suite();
    check(reps.size() == 15, "expected 15 identities, got " + std::to_string(reps.size()));
    for (const IdentityReport& r : reps)
        check(r.pass && r.residual == "0", "nonzero residual for " + r.identity);
}

// 2. Embedded and explicit K-operators agree on {0..12} for 10 random rational
//    parameter sets; the anticommutator relations and the Casimir value hold as
//    exact matrix identities.
void criterion_realization() {
    Sampler s(20260819);
    const BasisWindow src{0, 12};
    const BasisWindow pad1{-1, 13};
    const BasisWindow pad2{-2, 14};
    for (int i = 0; i < 10; ++i) {
        Params p{s.positive_rational(9, 8), s.positive_rational(9, 8),
                 s.positive_rational(9, 8), s.positive_rational(9, 8), std::nullopt};
        BIOps emb = k_ops_embedded(p);
        BIOps exp = k_ops_explicit(p);
        check(same_on_window(emb.K1, exp.K1, src, pad1), "K1 embedded vs explicit");
        check(same_on_window(emb.K2, exp.K2, src, pad1), "K2 embedded vs explicit");
        check(same_on_window(emb.K3, exp.K3, src, pad1), "K3 embedded vs explicit");

        Rational w1 = Rational(2) * (p.mu4 * p.mu1 + p.mu2 * p.mu3);
        Rational w2 = Rational(2) * (p.mu3 * p.mu1 + p.mu2 * p.mu4);
        Rational w3 = Rational(2) * (p.mu2 * p.mu1 + p.mu3 * p.mu4);
        check(same_on_window(emb.K1 * emb.K2 + emb.K2 * emb.K1,
                             emb.K3 + LinOp::scalar(w3), src, pad2),
              "{K1, K2} = K3 + w3");
        check(same_on_window(emb.K2 * emb.K3 + emb.K3 * emb.K2,
                             emb.K1 + LinOp::scalar(w1), src, pad2),
              "{K2, K3} = K1 + w1");
        check(same_on_window(emb.K3 * emb.K1 + emb.K1 * emb.K3,
                             emb.K2 + LinOp::scalar(w2), src, pad2),
              "{K3, K1} = K2 + w2");

        Rational cas = p.mu1 * p.mu1 + p.mu2 * p.mu2 + p.mu3 * p.mu3 +
                       p.mu4 * p.mu4 - Rational(1, 4);
        check(same_on_window(emb.K1 * emb.K1 + emb.K2 * emb.K2 + emb.K3 * emb.K3,
                             LinOp::scalar(cas), src, pad2),
              "Casimir value");
    }
}

// 3. The seven ladder coefficients reproduce direct operator application for
//    n <= 12 on five parameter sets, and the mu-number misprint is flagged.
void criterion_action() {
    for (const Params& p : kSets) {
        BIOps k = k_ops_embedded(p);
        for (long n = 0; n <= 12; ++n) {
            ActionCoeffs c = action_coeffs(p, n);
            ActionCoeffs up = action_coeffs(p, n + 1);
            LaurentPoly en = LaurentPoly::mono(n);

            LaurentPoly k3 = LaurentPoly::mono(n, c.lambda);
            if (n > 0) k3 = k3 + LaurentPoly::mono(n - 1, c.nu);
            check(k.K3(en) == k3, "K3 action at n = " + std::to_string(n));

            LaurentPoly k2 = LaurentPoly::mono(n + 1, up.kappa) + LaurentPoly::mono(n, c.sigma);
            check(k.K2(en) == k2, "K2 action at n = " + std::to_string(n));

            LaurentPoly k1 = LaurentPoly::mono(n + 1, up.upsilon) + LaurentPoly::mono(n, c.rho);
            if (n > 0) k1 = k1 - LaurentPoly::mono(n - 1, c.iota);
            check(k.K1(en) == k1, "K1 action at n = " + std::to_string(n));
        }
    }
    check(finding_disagrees("mu-number-factor"), "mu-number finding missing");
}

// 4. Both tridiagonalization identities hold on padded Laurent windows, and
//    K3 = -L/2 + (mu1 + mu2 + 1/2) I.
void criterion_tridiag() {
    const BasisWindow src{-3, 7};
    const BasisWindow dst{-4, 8};
    for (const Params& p : kSets) {
        TridiagReport rep = verify_tridiag(p, BasisWindow{-4, 8});
        check(rep.pass(), "tridiagonalization identities");
        LinOp bridge = Rational(-1, 2) * operator_l(Rational(2) * p.mu1, Rational(2) * p.mu2) +
                       LinOp::scalar(p.mu1 + p.mu2 + Rational(1, 2));
        check(same_on_window(k_ops_embedded(p).K3, bridge, src, dst),
              "K3 = -L/2 + (mu1 + mu2 + 1/2) I");
    }
}

// 5. With mu4 = mu_N all three K-matrices close on {e_0..e_N} and the raising
//    coefficients vanish at N + 1; perturbing mu4 makes K2 overflow the window.
void criterion_truncation() {
    for (long N = 1; N <= 10; ++N) {
        for (const auto& t : kTriples) {
            Params p = truncated_params(t[0], t[1], t[2], N);
            BasisWindow box{0, N};
            BIOps k = k_ops_embedded(p);
            ColumnMatrix m1 = op_matrix(k.K1, box);
            ColumnMatrix m2 = op_matrix(k.K2, box);
            ColumnMatrix m3 = op_matrix(k.K3, box);
            check(m1.cols.size() == static_cast<size_t>(N) + 1, "K1 matrix shape");
            check(m2.cols.size() == static_cast<size_t>(N) + 1, "K2 matrix shape");
            check(m3.cols.size() == static_cast<size_t>(N) + 1, "K3 matrix shape");

            ActionCoeffs edge = action_coeffs(p, N + 1);
            check(edge.kappa.is_zero(), "kappa_{N+1} != 0");
            check(edge.upsilon.is_zero(), "upsilon_{N+1} != 0");

            Params q = p;
            q.mu4 = q.mu4 + Rational(1);
            q.N.reset();
            bool overflowed = false;
            try {
                op_matrix(k_ops_embedded(q).K2, box);
            } catch (const WindowOverflow& e) {
                overflowed = e.column_exponent == N && e.escaped_exponent == N + 1;
            }
            check(overflowed, "perturbed K2 did not overflow at N = " + std::to_string(N));
        }
    }
}

// 6. K3 psi_n = lambda_n psi_n and K2 chi_n = Omega_n chi_n exactly for
//    n <= N <= 10, both N-parities, with the chi triangular-shape invariant.
void criterion_eigenbases() {
    for (const auto& t : kTriples) {
        for (long N : {9L, 10L}) {
            Params p = truncated_params(t[0], t[1], t[2], N);
            BIOps k = k_ops_embedded(p);
            std::vector<LaurentPoly> psi = psi_basis(p, N);
            ChiBasis cb = chi_basis(p);
            for (long n = 0; n <= N; ++n) {
                const LaurentPoly& pn = psi[static_cast<size_t>(n)];
                check(k.K3(pn) == action_coeffs(p, n).lambda * pn,
                      "K3 eigenvalue at n = " + std::to_string(n));
                const LaurentPoly& cn = cb.polys[static_cast<size_t>(n)];
                check(cn.lo_exp() == N - n && cn.hi_exp() == N &&
                          cn.coeff(N - n) == Rational(1),
                      "chi shape at n = " + std::to_string(n));
                check(k.K2(cn) == cb.omega[static_cast<size_t>(n)] * cn,
                      "K2 eigenvalue at n = " + std::to_string(n));
            }
        }
    }
}

// 7. inner(psi_n, psi_m) = delta_{nm} u_1...u_n in units of m_0 for n, m <= 12;
//    the closed form agrees, its n = 0 value is 1, and the misread norm
//    denominator is flagged.
void criterion_orthogonality() {
    for (const Params& p : kSets) {
        std::vector<LaurentPoly> psi = psi_basis(p, 12);
        check(norm_closed_form(p, 0) == Rational(1), "h_0 != 1");
        for (long n = 0; n <= 12; ++n) {
            for (long m = 0; m < n; ++m)
                check(inner(psi[static_cast<size_t>(n)], psi[static_cast<size_t>(m)],
                            p.mu1, p.mu2)
                              .coeff == Rational(0),
                      "nonzero cross term");
            Rational h = inner(psi[static_cast<size_t>(n)], psi[static_cast<size_t>(n)],
                               p.mu1, p.mu2)
                             .coeff;
            check(h == norm_h(p, n), "norm != u_1...u_n");
            check(h == norm_closed_form(p, n), "norm != closed form");
        }
    }
    check(finding_disagrees("norm-denominator"), "norm finding missing");
}

// 8. The three-term recurrence evaluation of the monic polynomials agrees with
//    the overlap-quotient evaluation on the whole grid; the overlap rows obey
//    the literal recurrence; the two coefficient routes coincide.
void criterion_integral() {
    for (long N : {3L, 4L, 7L, 8L}) {
        for (const auto& t : kTriples) {
            Params p = truncated_params(t[0], t[1], t[2], N);
            BIContext ctx = bi_context(p);
            const BICoeffs& c = ctx.coeffs;
            OverlapTable tab = overlap_table(p);

            for (long n = 0; n <= N; ++n) {
                check(c.r[static_cast<size_t>(n)] == c.E2[static_cast<size_t>(n)],
                      "r != E2");
                if (n > 0)
                    check(c.U[static_cast<size_t>(n)] ==
                              c.E3[static_cast<size_t>(n)] * c.E1[static_cast<size_t>(n - 1)],
                          "U != E3 * E1");
                for (long k = 0; k <= N; ++k) {
                    Rational bn = tab.B[static_cast<size_t>(n)][static_cast<size_t>(k)];
                    Rational lhs = tab.omega[static_cast<size_t>(k)] * bn;
                    Rational rhs = c.E2[static_cast<size_t>(n)] * bn;
                    if (n > 0)
                        rhs = rhs + c.E3[static_cast<size_t>(n)] *
                                        tab.B[static_cast<size_t>(n - 1)][static_cast<size_t>(k)];
                    if (n < N)
                        rhs = rhs + c.E1[static_cast<size_t>(n)] *
                                        tab.B[static_cast<size_t>(n + 1)][static_cast<size_t>(k)];
                    check(lhs == rhs, "overlap recurrence at n = " + std::to_string(n) +
                                          ", k = " + std::to_string(k));

                    BIEval ev = bi_eval(ctx, n, k);
                    check(ev.recurrence_value == ev.integral_value,
                          "evaluations disagree at n = " + std::to_string(n) +
                              ", k = " + std::to_string(k));
                }
            }
        }
    }
}

struct Criterion {
    int number;
    const char* name;
    void (*body)();
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "symbolic identity suite", criterion_identities},
        {2, "realization equivalence", criterion_realization},
        {3, "action coefficients", criterion_action},
        {4, "tridiagonalization", criterion_tridiag},
        {5, "truncation closure", criterion_truncation},
        {6, "eigenbases", criterion_eigenbases},
        {7, "orthogonality and norms", criterion_orthogonality},
        {8, "integral formula", criterion_integral},
    };
    bool all_pass = true;
    for (const Criterion& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string why;
        try {
            c.body();
        } catch (const std::exception& e) {
            why = e.what();
        }
        double sec =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %d (%s): %s (%.2f s)%s%s\n", c.number, c.name,
                    why.empty() ? "PASS" : "FAIL", sec, why.empty() ? "" : " - ",
                    why.c_str());
        if (!why.empty()) all_pass = false;
    }
    return all_pass ? 0 : 1;
}

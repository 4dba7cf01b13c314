#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ospbi/json_io.hpp"
#include "ospbi/ncparser.hpp"
#include "ospbi/sampling.hpp"

using namespace ospbi;

namespace {

// Writes an artifact to --out (resolved against OSPBI_OUTPUT_DIR when
// relative) or to stdout when no path was given.
void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::filesystem::path p(out_path);
    if (p.is_relative()) {
        const char* dir = std::getenv("OSPBI_OUTPUT_DIR");
        if (dir != nullptr && *dir != '\0') p = std::filesystem::path(dir) / p;
    }
    std::ofstream f(p, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + p.string());
    f << content;
    f.flush();
    if (!f.good()) throw std::runtime_error("failed while writing output file: " + p.string());
}

BasisWindow parse_window(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos)
        throw std::runtime_error("window must have the form lo..hi, got '" + text + "'");
    size_t used = 0;
    long lo = std::stol(text.substr(0, dots), &used);
    if (used != dots)
        throw std::runtime_error("window must have the form lo..hi, got '" + text + "'");
    std::string hi_part = text.substr(dots + 2);
    long hi = std::stol(hi_part, &used);
    if (used != hi_part.size())
        throw std::runtime_error("window must have the form lo..hi, got '" + text + "'");
    if (lo > hi) throw std::runtime_error("window lo must not exceed hi");
    return {lo, hi};
}

Rational parse_param(const std::string& flag, const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const std::exception& e) {
        throw std::runtime_error(flag + ": " + e.what());
    }
}

std::string first_difference(const ColumnMatrix& a, const ColumnMatrix& b) {
    for (size_t j = 0; j < a.cols.size(); ++j)
        for (size_t i = 0; i < a.cols[j].size(); ++i)
            if (a.cols[j][i] != b.cols[j][i])
                return "columns differ first at source exponent " +
                       std::to_string(a.src.lo + static_cast<long>(j)) +
                       ", destination exponent " +
                       std::to_string(a.dst.lo + static_cast<long>(i)) + ": " +
                       a.cols[j][i].str() + " vs " + b.cols[j][i].str();
    return "windows differ";
}

IdentityReport matrix_identity(const std::string& name, const LinOp& lhs, const LinOp& rhs,
                               BasisWindow src, BasisWindow dst) {
    ColumnMatrix a = op_columns(lhs, src, dst);
    ColumnMatrix b = op_columns(rhs, src, dst);
    IdentityReport rep;
    rep.identity = name;
    rep.pass = (a == b);
    rep.residual = rep.pass ? "0" : first_difference(a, b);
    return rep;
}

std::vector<IdentityReport> realization_core(const Params& p, BasisWindow w) {
    std::vector<IdentityReport> reps;
    BIOps emb = k_ops_embedded(p);
    BIOps exp = k_ops_explicit(p);
    BasisWindow pad1{w.lo - 1, w.hi + 1};
    BasisWindow pad2{w.lo - 2, w.hi + 2};

    reps.push_back(matrix_identity("K1 embedded = K1 explicit", emb.K1, exp.K1, w, pad1));
    reps.push_back(matrix_identity("K2 embedded = K2 explicit", emb.K2, exp.K2, w, pad1));
    reps.push_back(matrix_identity("K3 embedded = K3 explicit", emb.K3, exp.K3, w, pad1));

    LinOp I = LinOp::identity();
    Rational w1 = Rational(2) * (p.mu4 * p.mu1 + p.mu2 * p.mu3);
    Rational w2 = Rational(2) * (p.mu3 * p.mu1 + p.mu2 * p.mu4);
    Rational w3 = Rational(2) * (p.mu2 * p.mu1 + p.mu3 * p.mu4);
    reps.push_back(matrix_identity("{K1, K2} = K3 + w3", emb.K1 * emb.K2 + emb.K2 * emb.K1,
                                   emb.K3 + w3 * I, w, pad2));
    reps.push_back(matrix_identity("{K2, K3} = K1 + w1", emb.K2 * emb.K3 + emb.K3 * emb.K2,
                                   emb.K1 + w1 * I, w, pad2));
    reps.push_back(matrix_identity("{K3, K1} = K2 + w2", emb.K3 * emb.K1 + emb.K1 * emb.K3,
                                   emb.K2 + w2 * I, w, pad2));

    Rational cas = p.mu1 * p.mu1 + p.mu2 * p.mu2 + p.mu3 * p.mu3 + p.mu4 * p.mu4 -
                   Rational(1, 4);
    reps.push_back(matrix_identity(
        "K1^2 + K2^2 + K3^2 = (mu1^2 + mu2^2 + mu3^2 + mu4^2 - 1/4) I",
        emb.K1 * emb.K1 + emb.K2 * emb.K2 + emb.K3 * emb.K3, cas * I, w, pad2));

    TridiagReport tri = verify_tridiag(p, w);
    reps.push_back({"K2 = tau1 X K3 + tau2 K3 X + tau3 X + tau0", tri.pass_k2_from_k3,
                    tri.pass_k2_from_k3 ? "0" : "columns differ on the interior window", 0});
    reps.push_back({"K3 = beta1 X^-1 K2 + beta2 K2 X^-1 + beta3 X^-1 + beta0",
                    tri.pass_k3_from_k2,
                    tri.pass_k3_from_k2 ? "0" : "columns differ on the interior window", 0});
    return reps;
}

void truncation_reports(const Params& p, std::vector<IdentityReport>& reps) {
    long N = *p.N;
    BasisWindow box{0, N};
    BIOps emb = k_ops_embedded(p);
    bool closed = true;
    std::string note = "0";
    try {
        op_matrix(emb.K1, box);
        op_matrix(emb.K2, box);
        op_matrix(emb.K3, box);
    } catch (const WindowOverflow& e) {
        closed = false;
        note = e.what();
    }
    reps.push_back({"K matrices close on {e_0..e_N} at mu4 = mu_N", closed, note, 0});

    ActionCoeffs ac = action_coeffs(p, N + 1);
    bool ends = ac.kappa.is_zero() && ac.upsilon.is_zero();
    reps.push_back({"kappa_{N+1} = 0 and upsilon_{N+1} = 0", ends,
                    ends ? "0" : "kappa = " + ac.kappa.str() + ", upsilon = " + ac.upsilon.str(),
                    0});

    Params q = p;
    q.mu4 = q.mu4 + Rational(1);
    q.N.reset();
    bool overflowed = false;
    try {
        op_matrix(k_ops_embedded(q).K2, box);
    } catch (const WindowOverflow&) {
        overflowed = true;
    }
    reps.push_back({"perturbed mu4 overflows the truncation window", overflowed,
                    overflowed ? "0" : "K2 stayed inside {e_0..e_N} despite the perturbation",
                    0});
}

ordered_json envelope(const Params& p, const std::vector<IdentityReport>& reps) {
    ordered_json j;
    j["params"] = params_json(p);
    ordered_json s = suite_json(reps);
    j["pass"] = s["pass"];
    j["reports"] = s["reports"];
    return j;
}

bool all_pass(const std::vector<IdentityReport>& reps) {
    for (const auto& r : reps)
        if (!r.pass) return false;
    return true;
}

int run_algebra(const std::string& lhs_str, const std::string& rhs_str,
                const std::string& out) {
    std::vector<IdentityReport> reps;
    if (!lhs_str.empty()) {
        NCExpr lhs = parse_expression(lhs_str);
        NCExpr rhs = parse_expression(rhs_str);
        reps.push_back(verify_identity(lhs_str + " = " + rhs_str, lhs, rhs));
    } else {
        reps = builtin_identity_suite();
    }
    emit(dump_json(suite_json(reps)), out);
    return all_pass(reps) ? 0 : 1;
}

int run_realization(const Params& p, BasisWindow w, long sweep, unsigned long long seed,
                    const std::string& out) {
    std::vector<IdentityReport> reps = realization_core(p, w);
    if (p.N.has_value()) truncation_reports(p, reps);

    Sampler sampler(seed);
    for (long i = 0; i < sweep; ++i) {
        Params q{sampler.positive_rational(9, 8), sampler.positive_rational(9, 8),
                 sampler.positive_rational(9, 8), sampler.positive_rational(9, 8),
                 std::nullopt};
        std::vector<IdentityReport> sub = realization_core(q, w);
        IdentityReport rep;
        rep.identity = "sweep " + std::to_string(i) + ": mu = (" + q.mu1.str() + ", " +
                       q.mu2.str() + ", " + q.mu3.str() + ", " + q.mu4.str() + ")";
        rep.pass = all_pass(sub);
        rep.residual = "0";
        for (const auto& r : sub)
            if (!r.pass) {
                rep.residual = r.identity + ": " + r.residual;
                break;
            }
        reps.push_back(std::move(rep));
    }

    emit(dump_json(envelope(p, reps)), out);
    return all_pass(reps) ? 0 : 1;
}

int run_orthogonality(const Rational& mu1, const Rational& mu2, long nmax,
                      const std::string& out) {
    Params p{mu1, mu2, Rational(0), Rational(0), std::nullopt};
    std::vector<LaurentPoly> psi = psi_basis(p, nmax);

    IdentityReport off{"inner(psi_n, psi_m) = 0 for n != m", true, "0", 0};
    IdentityReport diag{"inner(psi_n, psi_n) = u_1...u_n in units of m_0", true, "0", 0};
    for (long n = 0; n <= nmax && (off.pass || diag.pass); ++n) {
        Rational h = norm_h(p, n);
        for (long m = 0; m <= n; ++m) {
            Rational v = inner(psi[static_cast<size_t>(n)], psi[static_cast<size_t>(m)], mu1,
                               mu2)
                             .coeff;
            if (m < n && !v.is_zero() && off.pass) {
                off.pass = false;
                off.residual = "n = " + std::to_string(n) + ", m = " + std::to_string(m) +
                               ": " + v.str();
            }
            if (m == n && v != h && diag.pass) {
                diag.pass = false;
                diag.residual = "n = " + std::to_string(n) + ": " + v.str() + " vs " + h.str();
            }
        }
    }

    IdentityReport closed{"h_n/h_0 matches the corrected closed form", true, "0", 0};
    for (long n = 0; n <= nmax; ++n) {
        Rational lhs = norm_h(p, n);
        Rational rhs = norm_closed_form(p, n);
        if (lhs != rhs) {
            closed.pass = false;
            closed.residual = "n = " + std::to_string(n) + ": " + lhs.str() + " vs " + rhs.str();
            break;
        }
    }

    std::vector<IdentityReport> reps{off, diag, closed};
    emit(dump_json(envelope(p, reps)), out);
    return all_pass(reps) ? 0 : 1;
}

int run_integral(const Params& p, const std::string& out) {
    std::vector<IdentityReport> reps;
    long N = *p.N;
    try {
        OverlapTable t = overlap_table(p);
        reps.push_back({"overlap table: integral route = triangular route", true, "0", 0});

        BIContext ctx = bi_context(p);
        reps.push_back({"U_n = E3_n E1_{n-1} and r_n = E2_n", true, "0", 0});

        IdentityReport rec{"Omega_k B_n(k) = E1_n B_{n+1}(k) + E2_n B_n(k) + E3_n B_{n-1}(k)",
                           true, "0", 0};
        for (long k = 0; k <= N && rec.pass; ++k)
            for (long n = 0; n <= N && rec.pass; ++n) {
                Rational lhs = t.omega[static_cast<size_t>(k)] *
                               t.B[static_cast<size_t>(n)][static_cast<size_t>(k)];
                Rational rhs = ctx.coeffs.E2[static_cast<size_t>(n)] *
                               t.B[static_cast<size_t>(n)][static_cast<size_t>(k)];
                if (n + 1 <= N)
                    rhs = rhs + ctx.coeffs.E1[static_cast<size_t>(n)] *
                                    t.B[static_cast<size_t>(n + 1)][static_cast<size_t>(k)];
                if (n >= 1)
                    rhs = rhs + ctx.coeffs.E3[static_cast<size_t>(n)] *
                                    t.B[static_cast<size_t>(n - 1)][static_cast<size_t>(k)];
                if (lhs != rhs) {
                    rec.pass = false;
                    rec.residual = "n = " + std::to_string(n) + ", k = " + std::to_string(k) +
                                   ": " + lhs.str() + " vs " + rhs.str();
                }
            }
        reps.push_back(rec);

        IdentityReport grid{"P_n(Omega_k): recurrence value = integral value on the full grid",
                            true, "0", 0};
        for (long n = 0; n <= N && grid.pass; ++n)
            for (long k = 0; k <= N && grid.pass; ++k) {
                BIEval ev = bi_eval(ctx, n, k);
                if (ev.recurrence_value != ev.integral_value) {
                    grid.pass = false;
                    grid.residual = "n = " + std::to_string(n) + ", k = " + std::to_string(k) +
                                    ": " + ev.recurrence_value.str() + " vs " +
                                    ev.integral_value.str();
                }
            }
        reps.push_back(grid);
    } catch (const MismatchError& e) {
        reps.push_back({"internal cross-check", false, e.what(), 0});
    }

    emit(dump_json(envelope(p, reps)), out);
    return all_pass(reps) ? 0 : 1;
}

int run_tables_jacobi(const Rational& alpha, const Rational& beta, long nmax,
                      const std::string& format, const std::string& out) {
    TTRCoeffs c = ttr_coeffs(alpha, beta, nmax);
    std::vector<LaurentPoly> polys = poly_seq(c, nmax);
    if (format == "csv")
        emit(jacobi_table_csv(polys), out);
    else
        emit(dump_json(jacobi_table_json(c, polys)), out);
    return 0;
}

int run_tables_bi(const Params& p, const std::string& format, const std::string& out) {
    BICoeffs c = bi_ttr(p);
    std::vector<Rational> omega = chi_basis(p).omega;
    if (format == "csv")
        emit(bi_table_csv(c, omega), out);
    else
        emit(dump_json(bi_table_json(p, c, omega)), out);
    return 0;
}

int run_tables_overlap(const Params& p, const std::string& format, const std::string& out) {
    OverlapTable t = overlap_table(p);
    if (format == "csv")
        emit(overlap_csv(t), out);
    else
        emit(dump_json(overlap_json(p, t)), out);
    return 0;
}

int run_report_erratum(const std::string& out) {
    emit(dump_json(erratum_json(erratum_findings())), out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic workbench for the Bannai-Ito algebra inside osp(1,2)"};
    app.require_subcommand(1);

    std::string out;
    app.add_option("--out", out,
                   "write the artifact to this path (relative paths resolve against "
                   "OSPBI_OUTPUT_DIR) instead of stdout");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->require_subcommand(1);
    auto* tables = app.add_subcommand("tables", "export exact tables");
    tables->require_subcommand(1);
    auto* report = app.add_subcommand("report", "emit analysis reports");
    report->require_subcommand(1);

    auto* algebra = verify->add_subcommand(
        "algebra", "normal-order the defining-relation suite with symbolic parameters");
    std::string lhs_str, rhs_str;
    auto* lhs_opt = algebra->add_option("--lhs", lhs_str, "verify a custom identity: left side");
    auto* rhs_opt = algebra->add_option("--rhs", rhs_str, "custom identity: right side");
    lhs_opt->needs(rhs_opt);
    rhs_opt->needs(lhs_opt);

    std::string mu1_s, mu2_s, mu3_s, mu4_s, alpha_s, beta_s, window_s = "0..12";
    long nval = 0, nmax = 12, sweep = 0;
    unsigned long long seed = 12345;
    std::string format = "json";

    auto* realization = verify->add_subcommand(
        "realization", "compare embedded and explicit operators, defining relations, Casimir, "
                       "and tridiagonalization as exact matrices");
    realization->add_option("--mu1", mu1_s, "rational p/q")->required();
    realization->add_option("--mu2", mu2_s, "rational p/q")->required();
    realization->add_option("--mu3", mu3_s, "rational p/q")->required();
    auto* r_n = realization->add_option("--N", nval, "truncation level; sets mu4 = mu_N");
    auto* r_mu4 = realization->add_option("--mu4", mu4_s, "rational p/q (default 1)");
    r_n->excludes(r_mu4);
    r_mu4->excludes(r_n);
    realization->add_option("--window", window_s, "basis window lo..hi (default 0..12)");
    realization->add_option("--sweep", sweep, "also run this many random parameter sets");
    realization->add_option("--seed", seed, "seed for the random sweep (default 12345)");

    auto* orthogonality = verify->add_subcommand(
        "orthogonality", "inner-product suite: orthogonality, norms, closed form");
    orthogonality->add_option("--mu1", mu1_s, "rational p/q")->required();
    orthogonality->add_option("--mu2", mu2_s, "rational p/q")->required();
    orthogonality->add_option("--nmax", nmax, "largest degree checked (default 12)");

    auto* integral = verify->add_subcommand(
        "integral", "overlap table, recurrence, and the integral formula on the full grid");
    integral->add_option("--mu1", mu1_s, "rational p/q")->required();
    integral->add_option("--mu2", mu2_s, "rational p/q")->required();
    integral->add_option("--mu3", mu3_s, "rational p/q")->required();
    integral->add_option("--N", nval, "truncation level")->required();

    auto* jacobi = tables->add_subcommand("jacobi", "monic polynomial table");
    jacobi->add_option("--alpha", alpha_s, "rational p/q")->required();
    jacobi->add_option("--beta", beta_s, "rational p/q")->required();
    jacobi->add_option("--nmax", nmax, "largest degree (default 12)");
    jacobi->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* bannai = tables->add_subcommand("bannai-ito", "recurrence coefficient table");
    bannai->add_option("--mu1", mu1_s, "rational p/q")->required();
    bannai->add_option("--mu2", mu2_s, "rational p/q")->required();
    bannai->add_option("--mu3", mu3_s, "rational p/q")->required();
    bannai->add_option("--N", nval, "truncation level")->required();
    bannai->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* overlap = tables->add_subcommand("overlap", "interbasis overlap table");
    overlap->add_option("--mu1", mu1_s, "rational p/q")->required();
    overlap->add_option("--mu2", mu2_s, "rational p/q")->required();
    overlap->add_option("--mu3", mu3_s, "rational p/q")->required();
    overlap->add_option("--N", nval, "truncation level")->required();
    overlap->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* erratum = report->add_subcommand(
        "erratum", "printed forms that disagree with the verified ones, with both values");

    // Lets --out (declared on the root) be written after the subcommand.
    for (CLI::App* a : {verify, tables, report, algebra, realization, orthogonality, integral,
                        jacobi, bannai, overlap, erratum})
        a->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (algebra->parsed()) return run_algebra(lhs_str, rhs_str, out);

        if (realization->parsed()) {
            Params p{parse_param("--mu1", mu1_s), parse_param("--mu2", mu2_s),
                     parse_param("--mu3", mu3_s), Rational(1), std::nullopt};
            if (r_n->count() > 0) {
                if (nval < 0) throw std::runtime_error("--N must be non-negative");
                p.mu4 = truncation_mu(nval, p.mu1, p.mu2, p.mu3);
                p.N = nval;
            } else if (r_mu4->count() > 0) {
                p.mu4 = parse_param("--mu4", mu4_s);
            }
            if (sweep < 0) throw std::runtime_error("--sweep must be non-negative");
            return run_realization(p, parse_window(window_s), sweep, seed, out);
        }

        if (orthogonality->parsed()) {
            if (nmax < 0) throw std::runtime_error("--nmax must be non-negative");
            return run_orthogonality(parse_param("--mu1", mu1_s), parse_param("--mu2", mu2_s),
                                     nmax, out);
        }

        if (integral->parsed()) {
            if (nval < 0) throw std::runtime_error("--N must be non-negative");
            Params p = truncated_params(parse_param("--mu1", mu1_s),
                                        parse_param("--mu2", mu2_s),
                                        parse_param("--mu3", mu3_s), nval);
            return run_integral(p, out);
        }

        if (jacobi->parsed()) {
            if (nmax < 0) throw std::runtime_error("--nmax must be non-negative");
            return run_tables_jacobi(parse_param("--alpha", alpha_s),
                                     parse_param("--beta", beta_s), nmax, format, out);
        }

        if (bannai->parsed() || overlap->parsed()) {
            if (nval < 0) throw std::runtime_error("--N must be non-negative");
            Params p = truncated_params(parse_param("--mu1", mu1_s),
                                        parse_param("--mu2", mu2_s),
                                        parse_param("--mu3", mu3_s), nval);
            return bannai->parsed() ? run_tables_bi(p, format, out)
                                    : run_tables_overlap(p, format, out);
        }

        if (erratum->parsed()) return run_report_erratum(out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::cerr << "error: no command selected\n";
    return 2;
}

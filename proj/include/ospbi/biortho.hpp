#pragma once

#include <string>
#include <vector>

#include "ospbi/jacobi_m1.hpp"

namespace ospbi {

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NegativeExponent : std::runtime_error {
    long exponent;
    explicit NegativeExponent(long e);
};

struct TruncationRequired : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal consistency failure: two independent computations of the same
// quantity disagree.
struct MismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateNorm : std::runtime_error {
    long n;
    explicit DegenerateNorm(long depth);
};

struct ZeroB0 : std::runtime_error {
    long k;
    explicit ZeroB0(long col);
};

// An integral against the weight |x|^(2 mu1) (1-x^2)^(mu2-1/2) (1+x) on
// [-1,1], expressed in units of the total mass m0 = B(mu1+1/2, mu2+1/2).
// Every moment is a rational multiple of m0, so coeff is exact.
struct WeightedValue {
    Rational coeff;
};

// m_j / m_0 where m_j is the j-th weight moment: the Pochhammer ratio
// (mu1+1/2)_s / (mu1+mu2+1)_s with s = j/2 for even j and (j+1)/2 for odd j.
Rational moment_ratio(long j, const Rational& mu1, const Rational& mu2);

// Bilinear extension of moment_ratio to true polynomials (no negative
// exponents).
WeightedValue inner(const LaurentPoly& p, const LaurentPoly& q, const Rational& mu1,
                    const Rational& mu2);

// h_n / h_0 = u_1 u_2 ... u_n with the recurrence coefficients at
// alpha = 2 mu1, beta = 2 mu2 (monic orthogonality forces this product).
Rational norm_h(const Params& p, long n);

// Closed form for h_n / h_0 with the corrected denominator ((mu1+mu2+1)_n)^2:
//   floor(n/2)! (mu1+1/2)_ceil (mu2+1/2)_ceil (mu1+mu2+1)_floor / den.
// The printed denominator readings disagree with the recurrence product; see
// norm_printed_reading and the erratum findings.
Rational norm_closed_form(const Params& p, long n);

// The two plausible readings of the printed denominator (both wrong):
// reading 0: ((mu1+mu2+1/2)_n)^2, reading 1: (mu1+mu2+1/2)_{2n}.
Rational norm_printed_reading(const Params& p, long n, int reading);

// Eigenbasis of the second generator under truncation: chi_n has degree
// exactly N with support {N-n .. N}; the x^(N-n) coefficient is exactly 1.
struct ChiBasis {
    std::vector<LaurentPoly> polys;
    std::vector<Rational> omega;
    int eps = 0;             // N mod 2
    Rational alpha_prime;    // -2(-1)^eps mu4 = -2(N + mu1 + mu2 + mu3 + 1)
};
ChiBasis chi_basis(const Params& p);

// Interbasis coefficients B[n][k], computed two independent ways (moment
// integrals and a triangular change of basis) and asserted equal.
struct OverlapTable {
    long N = 0;
    std::vector<std::vector<Rational>> B;  // B[n][k]
    std::vector<Rational> b0;              // the B_0(k) row, kept separately
    std::vector<Rational> omega;
    std::vector<std::string> warnings;
};
OverlapTable overlap_table(const Params& p);

// Recurrence data of the finite orthogonal family realized by the overlaps:
//   hatP_{n+1} = (Omega_k - r_n) hatP_n - U_n hatP_{n-1}.
// A and C are the parity-split closed forms (with the corrected odd-branch
// denominator 2(n+mu1+mu2+1)); U_n = A_{n-1} C_n and r_n = mu1+mu3+1/2 -
// A_n - C_n; E1/E2/E3 drive the overlap recurrence. U[0] and E3[0] are
// stored as 0. Construction asserts U_n = E3_n E1_{n-1} and r_n = E2_n.
struct BICoeffs {
    std::vector<Rational> A, C, U, r, E1, E2, E3;
};
BICoeffs bi_ttr(const Params& p);

// Cached data for evaluating the polynomials both ways over the (n,k) grid.
struct BIContext {
    Params p;
    std::vector<LaurentPoly> psi;
    ChiBasis chi;
    BICoeffs coeffs;
    std::vector<Rational> h;   // h_n / h_0
    std::vector<Rational> b0;  // B_0(k)
};
BIContext bi_context(const Params& p);

// Value of the degree-n polynomial at Omega_k, via the monic recurrence and
// via the integral formula (E1 product times the overlap integral divided by
// h_n B_0(k)); both exact rationals.
struct BIEval {
    Rational recurrence_value;
    Rational integral_value;
};
BIEval bi_eval(const BIContext& ctx, long n, long k);
BIEval bi_eval(const Params& p, long n, long k);

}  // namespace ospbi

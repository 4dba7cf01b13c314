#pragma once

#include <vector>

#include "ospbi/linop.hpp"
#include "ospbi/realization.hpp"

namespace ospbi {

struct ZeroDenominator : std::runtime_error {
    long n;  // recurrence depth whose denominator vanished
    explicit ZeroDenominator(long depth);
};

// Recurrence data for the monic little -1 Jacobi family:
//   J_{n+1} = (x - b_n) J_n - u_n J_{n-1}.
// b and u are indexed 0..nmax; u[0] is unused and stored as 0.
struct TTRCoeffs {
    Rational alpha, beta;
    std::vector<Rational> b;
    std::vector<Rational> u;
};

// The parity-split closed forms; throws ZeroDenominator when 2n+alpha+beta
// or 2n+alpha+beta+2 vanishes for some n <= nmax.
TTRCoeffs ttr_coeffs(const Rational& alpha, const Rational& beta, long nmax);

// Monic sequence J_0..J_nmax from the recurrence (J_{-1} = 0).
std::vector<LaurentPoly> poly_seq(const TTRCoeffs& coeffs, long nmax);

// L = 2(1-x) d/dx R + (alpha+beta+1-alpha/x)(1-R); the little -1 Jacobi
// polynomials are its eigenfunctions.
LinOp operator_l(const Rational& alpha, const Rational& beta);

// t_n: -2n for even n, 2(alpha+beta+n+1) for odd n.
Rational l_eigenvalue(const Rational& alpha, const Rational& beta, long n);

// psi_n = J_n with alpha = 2 mu1, beta = 2 mu2; the eigenbasis that
// diagonalizes the third generator with eigenvalues lambda_n.
std::vector<LaurentPoly> psi_basis(const Params& p, long nmax);

// Coefficients of the second generator on the psi basis:
//   K2 psi_n = upper_n psi_{n+1} + diag_n psi_n + lower_n psi_{n-1}.
struct TriDiagAction {
    Rational upper, diag, lower;
};
TriDiagAction k2_on_psi_coeffs(const Params& p, long n);

}  // namespace ospbi

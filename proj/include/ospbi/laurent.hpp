#pragma once

#include <map>
#include <string>

#include "ospbi/rational.hpp"

namespace ospbi {

// Finitely supported Laurent polynomial over the rationals: exponent ->
// coefficient, negative exponents allowed, no zero coefficients stored.
struct LaurentPoly {
    std::map<long, Rational> c;

    static LaurentPoly zero() { return {}; }
    static LaurentPoly mono(long e, Rational coeff = Rational(1)) {
        LaurentPoly p;
        if (!coeff.is_zero()) p.c.emplace(e, std::move(coeff));
        return p;
    }

    bool is_zero() const { return c.empty(); }
    long lo_exp() const;  // smallest supported exponent; requires nonzero
    long hi_exp() const;  // largest supported exponent; requires nonzero

    Rational coeff(long e) const {
        auto it = c.find(e);
        return it == c.end() ? Rational(0) : it->second;
    }

    // Adds v to the coefficient of x^e, dropping the entry when it cancels.
    void add_to(long e, const Rational& v);

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
};

LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly operator-(const LaurentPoly& p);
LaurentPoly operator*(const Rational& a, const LaurentPoly& p);
LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);

// x^j * p (exponent shift by j, j may be negative).
LaurentPoly mul_pow(const LaurentPoly& p, long j);

// p(-x): coefficient of x^n picks up (-1)^n.
LaurentPoly reflect(const LaurentPoly& p);

// d/dx with the power rule on every integer exponent (constants die,
// x^-1 -> -x^-2).
LaurentPoly derivative(const LaurentPoly& p);

// Dunkl operator: dp/dx + (mu/x)(p - reflect(p)).
LaurentPoly dunkl(const Rational& mu, const LaurentPoly& p);

// Dunkl eigenvalue on monomials: [n]_mu = n + mu*(1 - (-1)^n), i.e. n for
// even n and n + 2*mu for odd n.
Rational mu_number(long n, const Rational& mu);

// Evaluate at a rational point; x0 must be nonzero if p has negative
// exponents.
Rational eval(const LaurentPoly& p, const Rational& x0);

// Canonical text form, descending exponents: "x^2 - 1/3*x - 1/3".
std::string to_string(const LaurentPoly& p);

}  // namespace ospbi

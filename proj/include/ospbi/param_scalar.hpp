#pragma once

#include <map>
#include <string>

#include "ospbi/rational.hpp"

namespace ospbi {

// Exponents of a monomial in the three abstract parameters m2, m3, m4.
struct ParamMono {
    unsigned e2 = 0, e3 = 0, e4 = 0;
    unsigned degree() const { return e2 + e3 + e4; }
    friend bool operator==(const ParamMono&, const ParamMono&) = default;
};

// Graded lexicographic order: total degree first, then (e2, e3, e4).
struct ParamMonoLess {
    bool operator()(const ParamMono& a, const ParamMono& b) const {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        if (a.e2 != b.e2) return a.e2 < b.e2;
        if (a.e3 != b.e3) return a.e3 < b.e3;
        return a.e4 < b.e4;
    }
};

// Polynomial in m2, m3, m4 with rational coefficients; the coefficient ring
// of the abstract algebra (the realization parameter m1 never appears here).
class ParamScalar {
public:
    using TermMap = std::map<ParamMono, Rational, ParamMonoLess>;

    ParamScalar() = default;
    ParamScalar(Rational c);
    ParamScalar(int c) : ParamScalar(Rational(c)) {}

    // which must be 2, 3 or 4.
    static ParamScalar var(int which);

    const TermMap& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    // True when the polynomial is a bare rational (possibly zero).
    bool is_constant() const;

    ParamScalar& operator+=(const ParamScalar& o);
    ParamScalar& operator-=(const ParamScalar& o);
    ParamScalar operator-() const;
    friend ParamScalar operator+(ParamScalar a, const ParamScalar& b) { return a += b; }
    friend ParamScalar operator-(ParamScalar a, const ParamScalar& b) { return a -= b; }
    friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b);
    friend bool operator==(const ParamScalar&, const ParamScalar&) = default;

    Rational eval(const Rational& m2, const Rational& m3, const Rational& m4) const;

    // Canonical text, graded-lex descending: "2*m2*m3 + m4 - 1/2".
    std::string str() const;

private:
    TermMap t_;
};

}  // namespace ospbi

#pragma once

#include <map>
#include <string>
#include <vector>

#include "ospbi/param_scalar.hpp"

namespace ospbi {

// Letters of the free algebra. The first four are the raw osp(1,2)
// generators plus the grade involution; their enum order A+ < A0 < A- < P is
// the target normal order. The remaining letters are named elements that
// substitute_generators expands into the raw ones.
enum class Gen : int {
    Ap = 0,
    A0 = 1,
    Am = 2,
    P = 3,
    Q,
    K1,
    K2,
    K3,
    W1,
    W2,
    W3,
    Cas,
};

constexpr bool is_raw(Gen g) { return static_cast<int>(g) <= static_cast<int>(Gen::P); }
const char* gen_name(Gen g);

using NCWord = std::vector<Gen>;

// Word order: by length, then lexicographic on the letters. Deterministic
// serialization and a worklist that prefers short words both hang off this.
struct WordLess {
    bool operator()(const NCWord& a, const NCWord& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

// Finite sum of words with ParamScalar coefficients. Words are arbitrary
// (not necessarily normal ordered); no zero coefficients are stored.
class NCExpr {
public:
    using TermMap = std::map<NCWord, ParamScalar, WordLess>;

    static NCExpr zero() { return {}; }
    static NCExpr one() { return constant(Rational(1)); }
    static NCExpr constant(Rational c);
    static NCExpr param(int which);  // m2, m3 or m4 as an expression
    static NCExpr gen(Gen g);
    static NCExpr word(NCWord w, ParamScalar coeff = ParamScalar(Rational(1)));

    const TermMap& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool has_named() const;

    NCExpr& operator+=(const NCExpr& o);
    NCExpr& operator-=(const NCExpr& o);
    NCExpr operator-() const;
    friend NCExpr operator+(NCExpr a, const NCExpr& b) { return a += b; }
    friend NCExpr operator-(NCExpr a, const NCExpr& b) { return a -= b; }
    friend NCExpr operator*(const NCExpr& a, const NCExpr& b);  // concatenates words
    friend NCExpr operator*(const ParamScalar& a, const NCExpr& b);
    friend NCExpr operator*(const Rational& a, const NCExpr& b);
    friend bool operator==(const NCExpr&, const NCExpr&) = default;

    void add_term(const NCWord& w, const ParamScalar& coeff);

    // Canonical text: terms in (length, lex) word order, letter runs printed
    // as powers, e.g. "1/2 + 2*m2*A+^2*P".
    std::string str() const;

private:
    TermMap t_;
};

NCExpr commutator(const NCExpr& a, const NCExpr& b);
NCExpr anticommutator(const NCExpr& a, const NCExpr& b);

// Definitions of the named elements in terms of the raw generators.
NCExpr def_casimir_q();            // (A0 - A+A- - 1/2)P
NCExpr def_k(int i);               // K1, K2, K3
NCExpr def_w(int i);               // structure constants w1, w2, w3
NCExpr def_bi_casimir();           // K1^2 + K2^2 + K3^2

// Replaces every named letter by its definition; the result contains raw
// generators only. Raw expressions pass through unchanged.
NCExpr substitute_generators(const NCExpr& e);

struct NormalForm {
    NCExpr expr;
    unsigned long long rule_applications = 0;
};

// Rewrites to the PBW normal order A+^a A0^k A-^e P^delta (delta 0 or 1)
// using A-A+ -> 2A0 - A+A-, A0A+ -> A+A0 + A+, A-A0 -> A0A- + A-,
// PA+ -> -A+P, PA- -> -A-P, PA0 -> A0P, PP -> 1. Requires raw generators.
NormalForm normal_order(const NCExpr& e);

bool is_normal_form(const NCExpr& e);

// Exponents of a word already in normal order.
struct NCMonomial {
    unsigned a = 0, k = 0, e = 0, delta = 0;
    friend bool operator==(const NCMonomial&, const NCMonomial&) = default;
};
NCMonomial decode_normal_word(const NCWord& w);  // throws std::invalid_argument

struct IdentityReport {
    std::string identity;
    bool pass = false;
    std::string residual;          // canonical string of normal_order(lhs - rhs)
    unsigned long long rule_applications = 0;
};

// Substitutes named elements in lhs - rhs, normal orders, and passes iff the
// residual is the zero expression.
IdentityReport verify_identity(const std::string& name, const NCExpr& lhs, const NCExpr& rhs);

// The defining-relation suite: osp(1,2) relations, grade-involution
// relations, centrality of the Casimir, the three anticommutator relations
// with their central structure constants, and the quadratic Casimir value.
// All coefficients stay symbolic in m2, m3, m4.
std::vector<IdentityReport> builtin_identity_suite();

}  // namespace ospbi

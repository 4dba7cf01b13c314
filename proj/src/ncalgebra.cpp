#include "ospbi/ncalgebra.hpp"

#include <stdexcept>

namespace ospbi {

const char* gen_name(Gen g) {
    switch (g) {
        case Gen::Ap: return "A+";
        case Gen::A0: return "A0";
        case Gen::Am: return "A-";
        case Gen::P: return "P";
        case Gen::Q: return "Q";
        case Gen::K1: return "K1";
        case Gen::K2: return "K2";
        case Gen::K3: return "K3";
        case Gen::W1: return "W1";
        case Gen::W2: return "W2";
        case Gen::W3: return "W3";
        case Gen::Cas: return "C";
    }
    throw std::logic_error("unreachable generator");
}

NCExpr NCExpr::constant(Rational c) {
    NCExpr e;
    if (!c.is_zero()) e.t_.emplace(NCWord{}, ParamScalar(std::move(c)));
    return e;
}

NCExpr NCExpr::param(int which) {
    NCExpr e;
    e.t_.emplace(NCWord{}, ParamScalar::var(which));
    return e;
}

NCExpr NCExpr::gen(Gen g) {
    NCExpr e;
    e.t_.emplace(NCWord{g}, ParamScalar(Rational(1)));
    return e;
}

NCExpr NCExpr::word(NCWord w, ParamScalar coeff) {
    NCExpr e;
    if (!coeff.is_zero()) e.t_.emplace(std::move(w), std::move(coeff));
    return e;
}

bool NCExpr::has_named() const {
    for (const auto& [w, c] : t_)
        for (Gen g : w)
            if (!is_raw(g)) return true;
    return false;
}

void NCExpr::add_term(const NCWord& w, const ParamScalar& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = t_.try_emplace(w, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) t_.erase(it);
    }
}

NCExpr& NCExpr::operator+=(const NCExpr& o) {
    for (const auto& [w, c] : o.t_) add_term(w, c);
    return *this;
}

NCExpr& NCExpr::operator-=(const NCExpr& o) {
    for (const auto& [w, c] : o.t_) add_term(w, -c);
    return *this;
}

NCExpr NCExpr::operator-() const {
    NCExpr r;
    for (const auto& [w, c] : t_) r.t_.emplace(w, -c);
    return r;
}

NCExpr operator*(const NCExpr& a, const NCExpr& b) {
    NCExpr r;
    for (const auto& [wa, ca] : a.t_)
        for (const auto& [wb, cb] : b.t_) {
            NCWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    return r;
}

NCExpr operator*(const ParamScalar& a, const NCExpr& b) {
    NCExpr r;
    for (const auto& [w, c] : b.t_) r.add_term(w, a * c);
    return r;
}

NCExpr operator*(const Rational& a, const NCExpr& b) { return ParamScalar(a) * b; }

NCExpr commutator(const NCExpr& a, const NCExpr& b) { return a * b - b * a; }
NCExpr anticommutator(const NCExpr& a, const NCExpr& b) { return a * b + b * a; }

namespace {

std::string word_str(const NCWord& w) {
    std::string s;
    size_t i = 0;
    while (i < w.size()) {
        size_t run = 1;
        while (i + run < w.size() && w[i + run] == w[i]) ++run;
        if (!s.empty()) s += "*";
        s += gen_name(w[i]);
        if (run > 1) s += "^" + std::to_string(run);
        i += run;
    }
    return s;
}

}  // namespace

std::string NCExpr::str() const {
    if (t_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : t_) {
        int sign = +1;
        std::string body;
        std::string ws = word_str(w);
        if (c.terms().size() > 1) {
            body = "(" + c.str() + ")";
            if (!ws.empty()) body += "*" + ws;
        } else {
            const auto& [mono, a] = *c.terms().begin();
            sign = a.sign();
            Rational abs_a = sign < 0 ? -a : a;
            std::string parts;
            std::string ms;
            auto piece = [&ms](const char* name, unsigned e) {
                if (e == 0) return;
                if (!ms.empty()) ms += "*";
                ms += name;
                if (e > 1) ms += "^" + std::to_string(e);
            };
            piece("m2", mono.e2);
            piece("m3", mono.e3);
            piece("m4", mono.e4);
            if (!abs_a.is_one() || (ms.empty() && ws.empty())) parts = abs_a.str();
            for (const std::string* p : {&ms, &ws}) {
                if (p->empty()) continue;
                if (!parts.empty()) parts += "*";
                parts += *p;
            }
            body = parts;
        }
        if (first) {
            if (sign < 0) out += "-";
            first = false;
        } else {
            out += sign < 0 ? " - " : " + ";
        }
        out += body;
    }
    return out;
}

NCExpr def_casimir_q() {
    NCExpr e;
    e.add_term({Gen::A0, Gen::P}, ParamScalar(Rational(1)));
    e.add_term({Gen::Ap, Gen::Am, Gen::P}, ParamScalar(Rational(-1)));
    e.add_term({Gen::P}, ParamScalar(Rational(-1, 2)));
    return e;
}

NCExpr def_k(int i) {
    const ParamScalar m2 = ParamScalar::var(2);
    const ParamScalar m3 = ParamScalar::var(3);
    const ParamScalar m4 = ParamScalar::var(4);
    const ParamScalar half(Rational(1, 2));
    switch (i) {
        case 1: {
            // A+A0 - m4 A+P + (m2+m3+1/2) A+ - A- + (m4 - Q) P - 1/2
            NCExpr e;
            e.add_term({Gen::Ap, Gen::A0}, ParamScalar(Rational(1)));
            e.add_term({Gen::Ap, Gen::P}, -m4);
            e.add_term({Gen::Ap}, m2 + m3 + half);
            e.add_term({Gen::Am}, ParamScalar(Rational(-1)));
            e += (m4 * NCExpr::gen(Gen::P)) - def_casimir_q() * NCExpr::gen(Gen::P);
            e.add_term({}, -half);
            return e;
        }
        case 2: {
            // -A+A0P - (m2+m3+1/2) A+P + A0P + m4 A+ + m3 P
            NCExpr e;
            e.add_term({Gen::Ap, Gen::A0, Gen::P}, ParamScalar(Rational(-1)));
            e.add_term({Gen::Ap, Gen::P}, -(m2 + m3 + half));
            e.add_term({Gen::A0, Gen::P}, ParamScalar(Rational(1)));
            e.add_term({Gen::Ap}, m4);
            e.add_term({Gen::P}, m3);
            return e;
        }
        case 3: {
            // A0P - A-P + m2 P
            NCExpr e;
            e.add_term({Gen::A0, Gen::P}, ParamScalar(Rational(1)));
            e.add_term({Gen::Am, Gen::P}, ParamScalar(Rational(-1)));
            e.add_term({Gen::P}, m2);
            return e;
        }
        default:
            throw std::invalid_argument("generator index must be 1, 2 or 3");
    }
}

NCExpr def_w(int i) {
    const ParamScalar m2 = ParamScalar::var(2);
    const ParamScalar m3 = ParamScalar::var(3);
    const ParamScalar m4 = ParamScalar::var(4);
    const Rational two(2);
    switch (i) {
        case 1: return (two * (m4 * def_casimir_q())) + (two * (m2 * m3) * NCExpr::one());
        case 2: return (two * (m3 * def_casimir_q())) + (two * (m2 * m4) * NCExpr::one());
        case 3: return (two * (m2 * def_casimir_q())) + (two * (m3 * m4) * NCExpr::one());
        default: throw std::invalid_argument("structure constant index must be 1, 2 or 3");
    }
}

NCExpr def_bi_casimir() {
    NCExpr c;
    for (int i = 1; i <= 3; ++i) {
        NCExpr k = def_k(i);
        c += k * k;
    }
    return c;
}

NCExpr substitute_generators(const NCExpr& e) {
    NCExpr out;
    for (const auto& [w, c] : e.terms()) {
        NCExpr prod = c * NCExpr::one();
        for (Gen g : w) {
            NCExpr factor;
            switch (g) {
                case Gen::Q: factor = def_casimir_q(); break;
                case Gen::K1: factor = def_k(1); break;
                case Gen::K2: factor = def_k(2); break;
                case Gen::K3: factor = def_k(3); break;
                case Gen::W1: factor = def_w(1); break;
                case Gen::W2: factor = def_w(2); break;
                case Gen::W3: factor = def_w(3); break;
                case Gen::Cas: factor = def_bi_casimir(); break;
                default: factor = NCExpr::gen(g); break;
            }
            prod = prod * factor;
        }
        out += prod;
    }
    return out;
}

namespace {

constexpr int gen_index(Gen g) { return static_cast<int>(g); }

// Position of the first adjacent pair violating the normal order, or -1.
long first_violation(const NCWord& w) {
    for (size_t i = 0; i + 1 < w.size(); ++i) {
        if (!is_raw(w[i]) || !is_raw(w[i + 1]))
            throw std::invalid_argument("normal_order requires raw generators only");
        if (gen_index(w[i]) > gen_index(w[i + 1])) return static_cast<long>(i);
        if (w[i] == Gen::P && w[i + 1] == Gen::P) return static_cast<long>(i);
    }
    if (!w.empty() && !is_raw(w.back()))
        throw std::invalid_argument("normal_order requires raw generators only");
    return -1;
}

NCWord splice(const NCWord& w, size_t i, std::initializer_list<Gen> repl) {
    NCWord r;
    r.reserve(w.size() - 2 + repl.size());
    r.insert(r.end(), w.begin(), w.begin() + static_cast<long>(i));
    r.insert(r.end(), repl.begin(), repl.end());
    r.insert(r.end(), w.begin() + static_cast<long>(i) + 2, w.end());
    return r;
}

}  // namespace

NormalForm normal_order(const NCExpr& e) {
    NCExpr::TermMap pending(e.terms().begin(), e.terms().end());
    NCExpr done;
    unsigned long long steps = 0;
    while (!pending.empty()) {
        auto it = pending.begin();
        NCWord w = it->first;
        ParamScalar c = it->second;
        pending.erase(it);
        if (c.is_zero()) continue;
        long pos = first_violation(w);
        if (pos < 0) {
            done.add_term(w, c);
            continue;
        }
        ++steps;
        size_t i = static_cast<size_t>(pos);
        auto put = [&pending](NCWord nw, ParamScalar nc) {
            if (nc.is_zero()) return;
            auto [jt, inserted] = pending.try_emplace(std::move(nw), nc);
            if (!inserted) {
                jt->second += nc;
                if (jt->second.is_zero()) pending.erase(jt);
            }
        };
        Gen x = w[i], y = w[i + 1];
        if (x == Gen::A0 && y == Gen::Ap) {
            put(splice(w, i, {Gen::Ap, Gen::A0}), c);
            put(splice(w, i, {Gen::Ap}), c);
        } else if (x == Gen::Am && y == Gen::Ap) {
            put(splice(w, i, {Gen::A0}), ParamScalar(Rational(2)) * c);
            put(splice(w, i, {Gen::Ap, Gen::Am}), -c);
        } else if (x == Gen::Am && y == Gen::A0) {
            put(splice(w, i, {Gen::A0, Gen::Am}), c);
            put(splice(w, i, {Gen::Am}), c);
        } else if (x == Gen::P && y == Gen::Ap) {
            put(splice(w, i, {Gen::Ap, Gen::P}), -c);
        } else if (x == Gen::P && y == Gen::Am) {
            put(splice(w, i, {Gen::Am, Gen::P}), -c);
        } else if (x == Gen::P && y == Gen::A0) {
            put(splice(w, i, {Gen::A0, Gen::P}), c);
        } else if (x == Gen::P && y == Gen::P) {
            put(splice(w, i, {}), c);
        } else {
            throw std::logic_error("violating pair without a rewrite rule");
        }
    }
    return {done, steps};
}

bool is_normal_form(const NCExpr& e) {
    for (const auto& [w, c] : e.terms())
        if (first_violation(w) >= 0) return false;
    return true;
}

NCMonomial decode_normal_word(const NCWord& w) {
    NCMonomial m;
    size_t i = 0;
    while (i < w.size() && w[i] == Gen::Ap) ++m.a, ++i;
    while (i < w.size() && w[i] == Gen::A0) ++m.k, ++i;
    while (i < w.size() && w[i] == Gen::Am) ++m.e, ++i;
    while (i < w.size() && w[i] == Gen::P) ++m.delta, ++i;
    if (i != w.size() || m.delta > 1)
        throw std::invalid_argument("word is not in normal order: " + word_str(w));
    return m;
}

IdentityReport verify_identity(const std::string& name, const NCExpr& lhs, const NCExpr& rhs) {
    NormalForm nf = normal_order(substitute_generators(lhs - rhs));
    IdentityReport r;
    r.identity = name;
    r.pass = nf.expr.is_zero();
    r.residual = nf.expr.str();
    r.rule_applications = nf.rule_applications;
    return r;
}

std::vector<IdentityReport> builtin_identity_suite() {
    using E = NCExpr;
    const E a0 = E::gen(Gen::A0), ap = E::gen(Gen::Ap), am = E::gen(Gen::Am), p = E::gen(Gen::P);
    const E q = E::gen(Gen::Q);
    const E m2 = E::param(2), m3 = E::param(3), m4 = E::param(4);
    std::vector<IdentityReport> out;
    auto check = [&out](const std::string& name, const E& lhs, const E& rhs) {
        out.push_back(verify_identity(name, lhs, rhs));
    };
    check("[A0, A+] = A+", commutator(a0, ap), ap);
    check("[A0, A-] = -A-", commutator(a0, am), -am);
    check("{A+, A-} = 2*A0", anticommutator(ap, am), Rational(2) * a0);
    check("[A0, P] = 0", commutator(a0, p), E::zero());
    check("{A+, P} = 0", anticommutator(ap, p), E::zero());
    check("{A-, P} = 0", anticommutator(am, p), E::zero());
    check("P^2 = 1", p * p, E::one());
    check("[Q, A0] = 0", commutator(q, a0), E::zero());
    check("[Q, A+] = 0", commutator(q, ap), E::zero());
    check("[Q, A-] = 0", commutator(q, am), E::zero());
    check("[Q, P] = 0", commutator(q, p), E::zero());
    check("{K1, K2} = K3 + W3", anticommutator(E::gen(Gen::K1), E::gen(Gen::K2)),
          E::gen(Gen::K3) + E::gen(Gen::W3));
    check("{K2, K3} = K1 + W1", anticommutator(E::gen(Gen::K2), E::gen(Gen::K3)),
          E::gen(Gen::K1) + E::gen(Gen::W1));
    check("{K3, K1} = K2 + W2", anticommutator(E::gen(Gen::K3), E::gen(Gen::K1)),
          E::gen(Gen::K2) + E::gen(Gen::W2));
    check("C = Q^2 + m2^2 + m3^2 + m4^2 - 1/4", E::gen(Gen::Cas),
          E::gen(Gen::Q) * E::gen(Gen::Q) + m2 * m2 + m3 * m3 + m4 * m4 +
              E::constant(Rational(-1, 4)));
    return out;
}

}  // namespace ospbi

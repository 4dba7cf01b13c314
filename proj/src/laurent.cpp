#include "ospbi/laurent.hpp"

#include <stdexcept>

namespace ospbi {

long LaurentPoly::lo_exp() const {
    if (c.empty()) throw std::logic_error("lo_exp of zero polynomial");
    return c.begin()->first;
}

long LaurentPoly::hi_exp() const {
    if (c.empty()) throw std::logic_error("hi_exp of zero polynomial");
    return c.rbegin()->first;
}

void LaurentPoly::add_to(long e, const Rational& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = c.try_emplace(e, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) c.erase(it);
    }
}

LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) {
    LaurentPoly r = p;
    for (const auto& [e, v] : q.c) r.add_to(e, v);
    return r;
}

LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) {
    LaurentPoly r = p;
    for (const auto& [e, v] : q.c) r.add_to(e, -v);
    return r;
}

LaurentPoly operator-(const LaurentPoly& p) {
    LaurentPoly r;
    for (const auto& [e, v] : p.c) r.c.emplace(e, -v);
    return r;
}

LaurentPoly operator*(const Rational& a, const LaurentPoly& p) {
    LaurentPoly r;
    if (a.is_zero()) return r;
    for (const auto& [e, v] : p.c) r.c.emplace(e, a * v);
    return r;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
    LaurentPoly r;
    for (const auto& [e1, v1] : p.c)
        for (const auto& [e2, v2] : q.c) r.add_to(e1 + e2, v1 * v2);
    return r;
}

LaurentPoly mul_pow(const LaurentPoly& p, long j) {
    LaurentPoly r;
    for (const auto& [e, v] : p.c) r.c.emplace(e + j, v);
    return r;
}

LaurentPoly reflect(const LaurentPoly& p) {
    LaurentPoly r;
    for (const auto& [e, v] : p.c) r.c.emplace(e, (e % 2 == 0) ? v : -v);
    return r;
}

LaurentPoly derivative(const LaurentPoly& p) {
    LaurentPoly r;
    for (const auto& [e, v] : p.c) {
        if (e == 0) continue;
        r.c.emplace(e - 1, Rational(e) * v);
    }
    return r;
}

LaurentPoly dunkl(const Rational& mu, const LaurentPoly& p) {
    return derivative(p) + mul_pow(mu * (p - reflect(p)), -1);
}

Rational mu_number(long n, const Rational& mu) {
    Rational r(n);
    if (n % 2 != 0) r += mu + mu;
    return r;
}

Rational eval(const LaurentPoly& p, const Rational& x0) {
    if (!p.is_zero() && p.lo_exp() < 0 && x0.is_zero())
        throw std::domain_error("evaluating a negative power at x = 0");
    Rational sum = 0;
    for (const auto& [e, v] : p.c) {
        Rational pw = 1;
        long a = e < 0 ? -e : e;
        for (long i = 0; i < a; ++i) pw *= x0;
        if (e < 0) pw = Rational(1) / pw;
        sum += v * pw;
    }
    return sum;
}

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) {
        const auto& [e, v] = *it;
        Rational a = v;
        if (first) {
            if (a.sign() < 0) {
                out += "-";
                a = -a;
            }
            first = false;
        } else {
            out += a.sign() < 0 ? " - " : " + ";
            if (a.sign() < 0) a = -a;
        }
        std::string xpart;
        if (e == 1)
            xpart = "x";
        else if (e != 0)
            xpart = "x^" + std::to_string(e);
        if (xpart.empty())
            out += a.str();
        else if (a.is_one())
            out += xpart;
        else
            out += a.str() + "*" + xpart;
    }
    return out;
}

}  // namespace ospbi

#include "ospbi/param_scalar.hpp"

#include <stdexcept>

namespace ospbi {

ParamScalar::ParamScalar(Rational c) {
    if (!c.is_zero()) t_.emplace(ParamMono{}, std::move(c));
}

ParamScalar ParamScalar::var(int which) {
    ParamMono m;
    switch (which) {
        case 2: m.e2 = 1; break;
        case 3: m.e3 = 1; break;
        case 4: m.e4 = 1; break;
        default: throw std::invalid_argument("parameter index must be 2, 3 or 4");
    }
    ParamScalar p;
    p.t_.emplace(m, Rational(1));
    return p;
}

bool ParamScalar::is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first == ParamMono{});
}

ParamScalar& ParamScalar::operator+=(const ParamScalar& o) {
    for (const auto& [m, v] : o.t_) {
        auto [it, inserted] = t_.try_emplace(m, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    return *this;
}

ParamScalar& ParamScalar::operator-=(const ParamScalar& o) { return *this += -o; }

ParamScalar ParamScalar::operator-() const {
    ParamScalar r;
    for (const auto& [m, v] : t_) r.t_.emplace(m, -v);
    return r;
}

ParamScalar operator*(const ParamScalar& a, const ParamScalar& b) {
    ParamScalar r;
    for (const auto& [ma, va] : a.t_)
        for (const auto& [mb, vb] : b.t_) {
            ParamMono m{ma.e2 + mb.e2, ma.e3 + mb.e3, ma.e4 + mb.e4};
            auto [it, inserted] = r.t_.try_emplace(m, va * vb);
            if (!inserted) {
                it->second += va * vb;
                if (it->second.is_zero()) r.t_.erase(it);
            }
        }
    return r;
}

Rational ParamScalar::eval(const Rational& m2, const Rational& m3, const Rational& m4) const {
    auto pow = [](const Rational& x, unsigned e) {
        Rational r = 1;
        for (unsigned i = 0; i < e; ++i) r *= x;
        return r;
    };
    Rational sum = 0;
    for (const auto& [m, v] : t_) sum += v * pow(m2, m.e2) * pow(m3, m.e3) * pow(m4, m.e4);
    return sum;
}

namespace {

std::string mono_str(const ParamMono& m) {
    std::string s;
    auto piece = [&s](const char* name, unsigned e) {
        if (e == 0) return;
        if (!s.empty()) s += "*";
        s += name;
        if (e > 1) s += "^" + std::to_string(e);
    };
    piece("m2", m.e2);
    piece("m3", m.e3);
    piece("m4", m.e4);
    return s;
}

}  // namespace

std::string ParamScalar::str() const {
    if (t_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        Rational a = it->second;
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
        std::string vars = mono_str(it->first);
        if (vars.empty())
            out += a.str();
        else if (a.is_one())
            out += vars;
        else
            out += a.str() + "*" + vars;
    }
    return out;
}

}  // namespace ospbi

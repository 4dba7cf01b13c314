#include "ospbi/rational.hpp"

namespace ospbi {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    // strict: '-'? digits ('/' digits)?  -- no whitespace, no '+'
    size_t i = 0;
    auto fail = [&text]() -> Rational {
        throw std::invalid_argument("not a rational literal: '" + text + "'");
    };
    if (i < text.size() && text[i] == '-') ++i;
    size_t num_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_start) return fail();
    if (i < text.size()) {
        if (text[i] != '/') return fail();
        ++i;
        size_t den_start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_start || i != text.size()) return fail();
    }
    Rational r;
    r.v_ = mpq_class(text);
    if (r.v_.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    r.v_.canonicalize();
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational pochhammer(const Rational& a, unsigned long n) {
    Rational prod = 1;
    Rational term = a;
    for (unsigned long i = 0; i < n; ++i) {
        prod *= term;
        term += 1;
    }
    return prod;
}

Rational factorial(unsigned long n) {
    Rational prod = 1;
    for (unsigned long i = 2; i <= n; ++i) prod *= Rational(static_cast<long>(i));
    return prod;
}

}  // namespace ospbi

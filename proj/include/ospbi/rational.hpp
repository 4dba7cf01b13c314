#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ospbi {

// Arbitrary-precision rational kept in canonical form (reduced, positive
// denominator). Thin value wrapper over GMP's mpq_class so that expression
// templates never leak into deduced types and so parsing/printing have one
// canonical "p/q" convention.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(long long n) : v_() {
        // mpq_class has no long long ctor; go through a decimal string
        v_ = mpq_class(std::to_string(n));
    }
    Rational(long num, long den);

    // Accepts "p", "-p" or "p/q" with q > 0 (decimal digits only).
    static Rational parse(const std::string& text);

    std::string str() const { return v_.get_str(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    const mpq_class& raw() const { return v_; }

    Rational operator-() const {
        Rational r;
        r.v_ = -v_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        v_ += o.v_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        v_ -= o.v_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        v_ *= o.v_;
        return *this;
    }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    mpq_class v_;
};

// Rising factorial (a)_n = a(a+1)...(a+n-1), with (a)_0 = 1.
Rational pochhammer(const Rational& a, unsigned long n);

// n! as a Rational.
Rational factorial(unsigned long n);

}  // namespace ospbi

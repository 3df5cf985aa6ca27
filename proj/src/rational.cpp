#include "wce/rational.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wce {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("Rational with zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_.abs(), den_);
    if (!(g == BigInt(1))) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rational Rational::from_double_exact(double v) {
    if (!std::isfinite(v)) throw std::domain_error("non-finite double");
    if (v == 0.0) return Rational(0);
    int exp = 0;
    double mant = std::frexp(v, &exp);  // v = mant * 2^exp, |mant| in [0.5, 1)
    // 53 doublings make the mantissa integral
    long long m = static_cast<long long>(std::ldexp(mant, 53));
    int e = exp - 53;
    BigInt num(m);
    BigInt den(1);
    if (e >= 0) {
        num = num.shifted_left(static_cast<unsigned>(e));
    } else {
        den = den.shifted_left(static_cast<unsigned>(-e));
    }
    return Rational(num, den);
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    BigInt g = BigInt::gcd(a.den_, b.den_);
    BigInt da = a.den_ / g;
    BigInt db = b.den_ / g;
    return Rational(a.num_ * db + b.num_ * da, a.den_ * db);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    // cross-reduce first to keep limb counts down in long product chains
    BigInt g1 = BigInt::gcd(a.num_.abs(), b.den_);
    BigInt g2 = BigInt::gcd(b.num_.abs(), a.den_);
    BigInt num = (a.num_ / g1) * (b.num_ / g2);
    BigInt den = (a.den_ / g2) * (b.den_ / g1);
    Rational r;
    r.num_ = num;
    r.den_ = den;
    if (r.den_.is_negative()) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    if (r.num_.is_zero()) r.den_ = BigInt(1);
    return r;
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational division by zero");
    return a * Rational(b.den_, b.num_);
}

bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
}

double Rational::to_double() const {
    if (num_.is_zero()) return 0.0;
    // scale so the integer quotient carries ~62 significant bits
    const int shift = std::max(
        0, static_cast<int>(den_.bit_length()) + 62 - static_cast<int>(num_.bit_length()));
    BigInt q = num_.shifted_left(static_cast<unsigned>(shift)) / den_;
    return std::ldexp(q.to_double(), -shift);
}

std::string Rational::to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

}  // namespace wce

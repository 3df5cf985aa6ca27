#pragma once

#include <string>

#include "wce/bigint.hpp"

namespace wce {

// Exact rational scalar: numerator/denominator in lowest terms, denominator
// positive. Backs the exact arithmetic mode for Cauchy-matrix algebra, where
// double precision loses to the (lambda_i - lambda_j)^-1 blowup.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(BigInt num, BigInt den);

    // Exact conversion: every finite double is a dyadic rational.
    static Rational from_double_exact(double v);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_negative() const { return num_.is_negative(); }
    bool is_integer() const { return den_ == BigInt(1); }

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    double to_double() const;

    // "7/17", or just "7" for integers.
    std::string to_string() const;

private:
    BigInt num_;
    BigInt den_;

    void normalize();
};

}  // namespace wce

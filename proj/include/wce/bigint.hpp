#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wce {

// Sign-magnitude arbitrary-precision integer, base 2^32. Sized for exact
// Cauchy algebra on spectra up to n = 10, where intermediate products reach
// a few hundred bits; schoolbook arithmetic is plenty at that scale.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);  // NOLINT(google-explicit-constructor)

    static BigInt from_string(const std::string& decimal);

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    int signum() const { return sign_; }

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    // Truncated quotient and remainder, |r| < |b|, sign(r) == sign(a).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend bool operator<(const BigInt& a, const BigInt& b);
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    static BigInt gcd(BigInt a, BigInt b);

    BigInt shifted_left(unsigned bits) const;
    unsigned bit_length() const;

    double to_double() const;
    std::string to_string() const;

    bool fits_int64() const;
    long long to_int64() const;  // valid only when fits_int64()

private:
    int sign_ = 0;                 // -1, 0, +1
    std::vector<uint32_t> mag_;    // little-endian limbs, no leading zeros

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
};

}  // namespace wce

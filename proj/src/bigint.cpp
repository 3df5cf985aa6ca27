#include "wce/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wce {

namespace {
constexpr uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // avoid UB on LLONG_MIN
    uint64_t mag = v < 0 ? ~static_cast<uint64_t>(v) + 1 : static_cast<uint64_t>(v);
    while (mag != 0) {
        mag_.push_back(static_cast<uint32_t>(mag & 0xffffffffu));
        mag >>= 32;
    }
}

BigInt BigInt::from_string(const std::string& decimal) {
    BigInt r;
    size_t i = 0;
    int sign = 1;
    if (i < decimal.size() && (decimal[i] == '-' || decimal[i] == '+')) {
        sign = decimal[i] == '-' ? -1 : 1;
        ++i;
    }
    if (i == decimal.size()) throw std::invalid_argument("empty BigInt literal");
    BigInt ten(10);
    for (; i < decimal.size(); ++i) {
        if (decimal[i] < '0' || decimal[i] > '9') throw std::invalid_argument("bad BigInt digit");
        r = r * ten + BigInt(decimal[i] - '0');
    }
    if (!r.is_zero() && sign < 0) r.sign_ = -1;
    return r;
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    const auto& hi = a.size() >= b.size() ? a : b;
    const auto& lo = a.size() >= b.size() ? b : a;
    std::vector<uint32_t> r(hi.size() + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < hi.size(); ++i) {
        uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
        r[i] = static_cast<uint32_t>(s & 0xffffffffu);
        carry = s >> 32;
    }
    r[hi.size()] = static_cast<uint32_t>(carry);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(a.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t d = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? static_cast<int64_t>(b[i]) : 0);
        if (d < 0) {
            d += static_cast<int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<uint32_t>(d);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
        r.mag_ = BigInt::add_mag(a.mag_, b.mag_);
        r.sign_ = a.sign_;
    } else {
        int c = BigInt::cmp_mag(a.mag_, b.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.mag_ = BigInt::sub_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            r.mag_ = BigInt::sub_mag(b.mag_, a.mag_);
            r.sign_ = b.sign_;
        }
    }
    r.trim();
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt r;
    r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
    for (size_t i = 0; i < a.mag_.size(); ++i) {
        uint64_t carry = 0;
        const uint64_t ai = a.mag_[i];
        for (size_t j = 0; j < b.mag_.size(); ++j) {
            uint64_t cur = static_cast<uint64_t>(r.mag_[i + j]) + carry + ai * b.mag_[j];
            r.mag_[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        size_t k = i + b.mag_.size();
        while (carry != 0) {
            uint64_t cur = static_cast<uint64_t>(r.mag_[k]) + carry;
            r.mag_[k] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    r.sign_ = a.sign_ * b.sign_;
    r.trim();
    return r;
}

unsigned BigInt::bit_length() const {
    if (mag_.empty()) return 0;
    unsigned bits = 32u * (static_cast<unsigned>(mag_.size()) - 1);
    uint32_t top = mag_.back();
    while (top != 0) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

BigInt BigInt::shifted_left(unsigned bits) const {
    if (is_zero() || bits == 0) return *this;
    const unsigned words = bits / 32;
    const unsigned rem = bits % 32;
    BigInt r;
    r.sign_ = sign_;
    r.mag_.assign(mag_.size() + words + 1, 0);
    for (size_t i = 0; i < mag_.size(); ++i) {
        uint64_t v = static_cast<uint64_t>(mag_[i]) << rem;
        r.mag_[i + words] |= static_cast<uint32_t>(v & 0xffffffffu);
        r.mag_[i + words + 1] |= static_cast<uint32_t>(v >> 32);
    }
    r.trim();
    return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw std::domain_error("BigInt division by zero");
    int c = cmp_mag(a.mag_, b.mag_);
    if (a.is_zero() || c < 0) {
        q = BigInt();
        r = a;
        return;
    }
    // Bitwise long division on magnitudes.
    const unsigned na = a.bit_length();
    const unsigned nb = b.bit_length();
    BigInt rem;
    BigInt quo;
    quo.mag_.assign((na + 31) / 32, 0);
    BigInt babs = b.abs();
    for (unsigned bit = na; bit-- > 0;) {
        rem = rem.shifted_left(1);
        const uint32_t abit = (a.mag_[bit / 32] >> (bit % 32)) & 1u;
        if (abit) {
            if (rem.is_zero()) {
                rem = BigInt(1);
            } else {
                // set lowest bit (rem is even after the shift)
                rem.mag_[0] |= 1u;
            }
        }
        if (!rem.is_zero() && cmp_mag(rem.mag_, babs.mag_) >= 0) {
            rem.mag_ = sub_mag(rem.mag_, babs.mag_);
            rem.trim();
            if (rem.mag_.empty()) rem.sign_ = 0;
            quo.mag_[bit / 32] |= 1u << (bit % 32);
        }
        (void)nb;
    }
    quo.sign_ = 1;
    quo.trim();
    quo.sign_ = quo.mag_.empty() ? 0 : a.sign_ * b.sign_;
    rem.sign_ = rem.mag_.empty() ? 0 : a.sign_;
    q = quo;
    r = rem;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

bool operator<(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
    int c = BigInt::cmp_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c < 0 : c > 0;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.sign_ = a.mag_.empty() ? 0 : 1;
    b.sign_ = b.mag_.empty() ? 0 : 1;
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // Euclid with bitwise divmod; magnitudes here stay a few hundred bits.
    while (!b.is_zero()) {
        BigInt q, r;
        divmod(a, b, q, r);
        a = b;
        b = r;
    }
    return a;
}

double BigInt::to_double() const {
    if (is_zero()) return 0.0;
    const unsigned bits = bit_length();
    double v = 0.0;
    if (bits <= 64) {
        uint64_t x = 0;
        for (size_t i = mag_.size(); i-- > 0;) x = (x << 32) | mag_[i];
        v = static_cast<double>(x);
    } else {
        // top 64 bits + exponent
        const unsigned shift = bits - 64;
        uint64_t top = 0;
        for (unsigned k = 0; k < 64; ++k) {
            const unsigned bit = shift + k;
            const uint32_t abit = (mag_[bit / 32] >> (bit % 32)) & 1u;
            top |= static_cast<uint64_t>(abit) << k;
        }
        v = std::ldexp(static_cast<double>(top), static_cast<int>(shift));
    }
    return sign_ < 0 ? -v : v;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    BigInt v = abs();
    const BigInt chunk(1000000000);
    std::vector<uint32_t> parts;
    while (!v.is_zero()) {
        BigInt q, r;
        divmod(v, chunk, q, r);
        parts.push_back(r.is_zero() ? 0u : r.mag_[0]);
        v = q;
    }
    out = std::to_string(parts.back());
    for (size_t i = parts.size() - 1; i-- > 0;) {
        std::string p = std::to_string(parts[i]);
        out += std::string(9 - p.size(), '0') + p;
    }
    if (sign_ < 0) out.insert(out.begin(), '-');
    return out;
}

bool BigInt::fits_int64() const {
    if (bit_length() < 64) return true;
    // exactly -2^63
    return sign_ < 0 && bit_length() == 64 && mag_[0] == 0 && mag_[1] == 0x80000000u;
}

long long BigInt::to_int64() const {
    uint64_t x = 0;
    for (size_t i = mag_.size(); i-- > 0;) x = (x << 32) | mag_[i];
    return sign_ < 0 ? -static_cast<long long>(x) : static_cast<long long>(x);
}

}  // namespace wce

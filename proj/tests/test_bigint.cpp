#include <doctest.h>

#include <random>

#include "wce/bigint.hpp"
#include "wce/rational.hpp"

using wce::BigInt;
using wce::Rational;

TEST_CASE("bigint arithmetic agrees with int64 on random small values") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long long> dist(-1000000000LL, 1000000000LL);
    for (int k = 0; k < 2000; ++k) {
        const long long a = dist(rng);
        const long long b = dist(rng);
        CHECK(BigInt(a) + BigInt(b) == BigInt(a + b));
        CHECK(BigInt(a) - BigInt(b) == BigInt(a - b));
        CHECK(BigInt(a) * BigInt(b) == BigInt(a * b));
        if (b != 0) {
            CHECK(BigInt(a) / BigInt(b) == BigInt(a / b));
            CHECK(BigInt(a) % BigInt(b) == BigInt(a % b));
        }
        CHECK((BigInt(a) < BigInt(b)) == (a < b));
    }
}

TEST_CASE("divmod identity on large operands") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> dist(1, 1LL << 60);
    for (int k = 0; k < 200; ++k) {
        // build ~180-bit a from three 60-bit words
        BigInt a = BigInt(dist(rng)) * BigInt(dist(rng)) * BigInt(dist(rng));
        BigInt b = BigInt(dist(rng)) * BigInt(dist(rng));
        if (k % 2) a = -a;
        if (k % 3) b = -b;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero()) CHECK(r.signum() == a.signum());
    }
}

TEST_CASE("decimal string round trip") {
    const char* big = "123456789012345678901234567890123456789";
    CHECK(BigInt::from_string(big).to_string() == big);
    CHECK(BigInt::from_string("-42").to_string() == "-42");
    CHECK(BigInt(0).to_string() == "0");
    CHECK((BigInt::from_string(big) * BigInt(10)).to_string() ==
          std::string(big) + "0");
}

TEST_CASE("gcd and shifted_left") {
    CHECK(BigInt::gcd(BigInt(12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(-12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(0), BigInt(5)) == BigInt(5));
    CHECK(BigInt(1).shifted_left(70).to_string() == "1180591620717411303424");
    CHECK(BigInt(3).shifted_left(2) == BigInt(12));
}

TEST_CASE("to_double on values beyond 64 bits") {
    const BigInt v = BigInt(1).shifted_left(100);  // 2^100
    CHECK(v.to_double() == doctest::Approx(1.2676506002282294e30).epsilon(1e-12));
    CHECK((-v).to_double() < 0);
}

TEST_CASE("rational arithmetic is exact") {
    const Rational third(BigInt(1), BigInt(3));
    const Rational sixth(BigInt(1), BigInt(6));
    CHECK(third + sixth == Rational(BigInt(1), BigInt(2)));
    CHECK(third - sixth == sixth);
    CHECK(third * sixth == Rational(BigInt(1), BigInt(18)));
    CHECK(third / sixth == Rational(2));
    CHECK((third - third).is_zero());
    CHECK(Rational(BigInt(-4), BigInt(-6)) == Rational(BigInt(2), BigInt(3)));
    CHECK(Rational(BigInt(4), BigInt(-6)) == Rational(BigInt(-2), BigInt(3)));
}

TEST_CASE("rational ordering via cross multiplication") {
    CHECK(Rational(BigInt(1), BigInt(3)) < Rational(BigInt(1), BigInt(2)));
    CHECK(Rational(-1) < Rational(BigInt(1), BigInt(1000000)));
    CHECK(Rational(BigInt(7), BigInt(17)) > Rational(0));
}

TEST_CASE("exact conversion from double") {
    CHECK(Rational::from_double_exact(0.5) == Rational(BigInt(1), BigInt(2)));
    CHECK(Rational::from_double_exact(-0.75) == Rational(BigInt(-3), BigInt(4)));
    CHECK(Rational::from_double_exact(3.0) == Rational(3));
    CHECK(Rational::from_double_exact(0.0).is_zero());
    // 0.1 is not representable; its exact dyadic form has a 2^55 denominator
    const Rational tenth = Rational::from_double_exact(0.1);
    CHECK(tenth != Rational(BigInt(1), BigInt(10)));
    CHECK(tenth.den().bit_length() > 50);
    CHECK(tenth.to_double() == 0.1);
}

TEST_CASE("rational to_string and to_double") {
    CHECK(Rational(BigInt(7), BigInt(17)).to_string() == "7/17");
    CHECK(Rational(102).to_string() == "102");
    CHECK(Rational(BigInt(1), BigInt(102)).to_double() ==
          doctest::Approx(0.00980392156862745).epsilon(1e-15));
}

#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "oracles.hpp"
#include "wce/minimax.hpp"
#include "wce/optimizer.hpp"

using namespace wce;

namespace {

// unchecked quadratic form x^T W(b)^-1 x for the scale-law test; no unit
// normalization anywhere
double energy_quadform(const Spectrum& s, const Vec& x, const Vec& b) {
    const Mat inv = psi_inverse(build_psi(s));
    double e = 0.0;
    for (int i = 0; i < s.n(); ++i)
        for (int j = 0; j < s.n(); ++j) e += (x[i] / b[i]) * inv(i, j) * (x[j] / b[j]);
    return e;
}

}  // namespace

TEST_CASE("solve for lambda = (1,2): the hand-evaluated closed form") {
    const Spectrum s = validate_spectrum({1.0, 2.0});
    const MinimaxSolution sol = solve(s);

    CHECK(std::abs(sol.phi - 102.0) < 1e-9);
    CHECK(sol.xi_star == doctest::Approx(1.0 / 102).epsilon(1e-12));
    CHECK(sol.v_star[0] == doctest::Approx(std::sqrt(7.0 / 17.0)).epsilon(1e-12));
    CHECK(sol.v_star[1] == doctest::Approx(std::sqrt(10.0 / 17.0)).epsilon(1e-12));
    CHECK(sol.v_star_sq[0] == doctest::Approx(7.0 / 17.0).epsilon(1e-12));
    CHECK(sol.v_star_sq[1] == doctest::Approx(10.0 / 17.0).epsilon(1e-12));
    CHECK(sol.arg_phi.size() == 8);
    CHECK(sol.arg_phi_total == 8);
}

TEST_CASE("scalar case enumerates the four optimal pairs exactly") {
    const MinimaxSolution sol = solve(validate_spectrum({3.0}));
    CHECK(sol.phi == doctest::Approx(6.0).epsilon(1e-14));
    CHECK(sol.v_star[0] == 1.0);
    REQUIRE(sol.arg_phi.size() == 4);
    std::set<std::pair<int, int>> pairs;
    for (const auto& p : sol.arg_phi)
        pairs.insert({p.x[0] > 0 ? 1 : -1, p.b[0] > 0 ? 1 : -1});
    CHECK(pairs == std::set<std::pair<int, int>>{{1, -1}, {-1, -1}, {-1, 1}, {1, 1}});
}

TEST_CASE("arg phi pairs are distinct and complete for n = 2, 3, 4") {
    std::mt19937_64 rng(79);
    for (int n : {2, 3, 4}) {
        const Spectrum s = validate_spectrum(oracle::random_spectrum(rng, n));
        const MinimaxSolution sol = solve(s);
        CHECK(sol.arg_phi_total == (1ull << (n + 1)));
        REQUIRE(sol.arg_phi.size() == sol.arg_phi_total);
        std::set<std::vector<int>> keys;
        for (const auto& p : sol.arg_phi) {
            std::vector<int> key;
            for (int i = 0; i < n; ++i) key.push_back(p.x[i] > 0 ? 1 : -1);
            for (int i = 0; i < n; ++i) key.push_back(p.b[i] > 0 ? 1 : -1);
            keys.insert(key);
        }
        CHECK(keys.size() == sol.arg_phi.size());
    }
}

TEST_CASE("every optimal pair satisfies the stationarity system") {
    std::mt19937_64 rng(83);
    for (int n : {1, 2, 3, 4}) {
        const Spectrum s = validate_spectrum(oracle::random_spectrum(rng, n));
        const MinimaxSolution sol = solve(s);
        for (const auto& p : sol.arg_phi) {
            const Gramian gb = build_gramian(s, p.b);
            const Gramian gx = build_gramian(s, p.x);
            Vec r1 = mat_vec(gb.w, p.x.entries());
            axpy(-sol.xi_star, p.x.entries(), r1);
            Vec r2 = mat_vec(gx.w, p.b.entries());
            axpy(-sol.xi_star, p.b.entries(), r2);
            CHECK(norm2(r1) <= 1e-9);
            CHECK(norm2(r2) <= 1e-9);
        }
    }
}

TEST_CASE("interlacing signs and equal moduli at every optimal pair") {
    std::mt19937_64 rng(89);
    for (int n : {1, 2, 3, 5}) {
        const Spectrum s = validate_spectrum(oracle::random_spectrum(rng, n));
        const MinimaxSolution sol = solve(s);
        const auto star = sigma_star_signs(n);
        for (const auto& p : sol.arg_phi) {
            int direction = 0;
            for (int i = 0; i < n; ++i) {
                CHECK(std::abs(p.x[i]) == std::abs(p.b[i]));  // exact by construction
                const int sx = p.x[i] > 0 ? 1 : -1;
                const int sb = p.b[i] > 0 ? 1 : -1;
                const int d = sx == star[i] * sb ? 1 : -1;
                if (direction == 0) direction = d;
                CHECK(d == direction);
            }
        }
    }
}

TEST_CASE("positivity certificate frozen values") {
    const Vec q12 = positivity_certificate(validate_spectrum({1.0, 2.0}));
    CHECK(q12[0] == doctest::Approx(42.0).epsilon(1e-12));
    CHECK(q12[1] == doctest::Approx(60.0).epsilon(1e-12));

    const Vec q3 = positivity_certificate(validate_spectrum({3.0}));
    CHECK(q3[0] == doctest::Approx(6.0).epsilon(1e-14));

    // n = 3: all entries positive and equal to the elimination-oracle row sums
    const Spectrum s123 = validate_spectrum({1.0, 2.0, 3.0});
    const Vec q123 = positivity_certificate(s123);
    const Mat inv = oracle::gauss_inverse(build_psi(s123).entries);
    const auto star = sigma_star_signs(3);
    for (int i = 0; i < 3; ++i) {
        CHECK(q123[i] > 0.0);
        double row = 0.0;
        for (int j = 0; j < 3; ++j) row += star[i] * inv(i, j) * star[j];
        CHECK(q123[i] == doctest::Approx(row).epsilon(1e-9));
    }
}

TEST_CASE("energy_at examples") {
    const Spectrum s3 = validate_spectrum({3.0});
    CHECK(energy_at(s3, UnitVector({1.0}), UnitVector({1.0})) ==
          doctest::Approx(6.0).epsilon(1e-14));

    const Spectrum s12 = validate_spectrum({1.0, 2.0});
    const MinimaxSolution sol = solve(s12);
    for (const auto& p : sol.arg_phi)
        CHECK(energy_at(s12, p.x, p.b) == doctest::Approx(102.0).epsilon(1e-9));

    // [W(b)^-1]_11 = 2 * Psi^11 = 36 for the flat actuator
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(energy_at(s12, UnitVector({1.0, 0.0}), UnitVector({r, r})) ==
          doctest::Approx(36.0).epsilon(1e-12));

    // singular gramian
    CHECK(std::isinf(energy_at(s12, UnitVector({0.0, 1.0}), UnitVector({1.0, 0.0}))));
}

TEST_CASE("solve n=3 cross-checked by a million-point sphere grid plus ascent") {
    const Spectrum s = validate_spectrum({1.0, 2.0, 3.0});
    const MinimaxSolution sol = solve(s);

    const double pi = std::acos(-1.0);
    double best_xi = 0.0;
    Vec best_b;
    const int polar = 1000, azim = 1000;
    for (int i = 1; i < polar; ++i) {
        const double theta = pi * i / polar;
        for (int j = 0; j < azim; ++j) {
            const double phi = 2.0 * pi * j / azim;
            const Vec b{std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                        std::cos(theta)};
            const double v = xi(s, UnitVector::normalized(b));
            if (v > best_xi) {
                best_xi = v;
                best_b = b;
            }
        }
    }
    CHECK(oracle::rel_err(1.0 / best_xi, sol.phi) < 1e-3);

    AscentConfig cfg{UnitVector::normalized(best_b)};
    cfg.gradient_tol = 1e-12;
    const AscentTrace trace = ascend(s, cfg);
    CHECK(oracle::rel_err(1.0 / trace.final_xi, sol.phi) < 1e-9);
}

TEST_CASE("xi takes the same value 1/phi at every critical point sigma v*") {
    std::mt19937_64 rng(97);
    for (int n : {2, 3, 4}) {
        const Spectrum s = validate_spectrum(oracle::random_spectrum(rng, n));
        const MinimaxSolution sol = solve(s);
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            Vec b(n);
            for (int i = 0; i < n; ++i)
                b[i] = ((mask >> i) & 1u ? -1.0 : 1.0) * sol.v_star[i];
            const double val = xi(s, UnitVector::normalized(b));
            CHECK(std::abs(val - sol.xi_star) <= 1e-9);
        }
    }
}

TEST_CASE("saddle consistency by sampling") {
    const Spectrum s = validate_spectrum({1.0, 2.0});
    const MinimaxSolution sol = solve(s);
    std::mt19937_64 rng(101);
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto random_unit = [&] {
        Vec v(2);
        do {
            v[0] = gauss(rng);
            v[1] = gauss(rng);
        } while (norm2(v) < 1e-6);
        return UnitVector::normalized(v);
    };
    for (int k = 0; k < 1000; ++k) {
        CHECK(worst_energy(build_gramian(s, random_unit())) >= sol.phi - 1e-9);
    }
    // no unit state can cost more than phi at any optimal actuator
    for (const auto& pair : sol.arg_phi)
        for (int k = 0; k < 250; ++k)
            CHECK(energy_at(s, random_unit(), pair.b) <= sol.phi + 1e-9);
}

TEST_CASE("scale law on non-normalized inputs") {
    std::mt19937_64 rng(103);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const Spectrum s = validate_spectrum({0.7, 1.9, 3.1});
    for (int k = 0; k < 20; ++k) {
        Vec x(3), b(3);
        for (double& v : x) v = gauss(rng);
        for (double& v : b) v = 0.2 + std::abs(gauss(rng));
        const double base = energy_quadform(s, x, b);
        const double alpha = 1.7, beta = 0.6;
        CHECK(energy_quadform(s, scaled(x, alpha), scaled(b, beta)) ==
              doctest::Approx(base * alpha * alpha / (beta * beta)).epsilon(1e-10));
    }
}

TEST_CASE("x in each optimal pair is the bottom eigenvector of W(b)") {
    const Spectrum s = validate_spectrum({1.0, 2.0, 3.0});
    const MinimaxSolution sol = solve(s);
    for (const auto& p : sol.arg_phi) {
        const Eigenpair bottom = smallest_eigenpair(build_gramian(s, p.b));
        CHECK(bottom.value == doctest::Approx(sol.xi_star).epsilon(1e-10));
        // match up to sign
        double same = 0.0, flipped = 0.0;
        for (int i = 0; i < 3; ++i) {
            same = std::max(same, std::abs(bottom.vector[i] - p.x[i]));
            flipped = std::max(flipped, std::abs(bottom.vector[i] + p.x[i]));
        }
        CHECK(std::min(same, flipped) < 1e-9);
    }
}

TEST_CASE("exact solve: phi = 102 and v*^2 = (7/17, 10/17) exactly") {
    const exact::Solution sol = exact::solve({Rational(1), Rational(2)});
    CHECK(sol.phi == Rational(102));
    CHECK(sol.certificate[0] == Rational(42));
    CHECK(sol.certificate[1] == Rational(60));
    CHECK(sol.v_star_sq[0] == Rational(BigInt(7), BigInt(17)));
    CHECK(sol.v_star_sq[1] == Rational(BigInt(10), BigInt(17)));
    Rational sum(0);
    for (const auto& q : sol.v_star_sq) sum = sum + q;
    CHECK(sum == Rational(1));
}

TEST_CASE("exact solve n=3: the adjugate-verified anchor values") {
    // Psi^-1 for (1,2,3) is [[72,-240,180],[-240,900,-720],[180,-720,600]]
    // by direct adjugate over det = 1/43200; row sums of the conjugated
    // inverse give the certificate and phi below.
    const exact::Solution sol = exact::solve({Rational(1), Rational(2), Rational(3)});
    CHECK(sol.phi == Rational(3852));
    CHECK(sol.certificate[0] == Rational(492));
    CHECK(sol.certificate[1] == Rational(1860));
    CHECK(sol.certificate[2] == Rational(1500));

    const exact::RatMat inv = exact::psi_inverse({Rational(1), Rational(2), Rational(3)});
    CHECK(inv[0][0] == Rational(72));
    CHECK(inv[0][1] == Rational(-240));
    CHECK(inv[0][2] == Rational(180));
    CHECK(inv[1][1] == Rational(900));
    CHECK(inv[1][2] == Rational(-720));
    CHECK(inv[2][2] == Rational(600));
}

TEST_CASE("exact and float paths agree on random small-integer spectra") {
    std::mt19937_64 rng(107);
    for (int k = 0; k < 10; ++k) {
        const int n = 1 + static_cast<int>(rng() % 6);
        std::set<long long> values;
        while (static_cast<int>(values.size()) < n)
            values.insert(1 + static_cast<long long>(rng() % 30));
        Vec lam;
        exact::RatVec lam_exact;
        for (long long v : values) {
            lam.push_back(static_cast<double>(v));
            lam_exact.push_back(Rational(v));
        }
        const MinimaxSolution sol = solve(validate_spectrum(lam));
        const exact::Solution ex = exact::solve(lam_exact);
        CHECK(oracle::rel_err(sol.phi, ex.phi.to_double()) < 1e-9);
        for (int i = 0; i < n; ++i)
            CHECK(oracle::rel_err(sol.v_star_sq[i], ex.v_star_sq[i].to_double()) < 1e-9);
    }
}

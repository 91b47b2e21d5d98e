#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "hypcap/special.hpp"
#include "support/checks.hpp"

using testsupport::abs_close;
using testsupport::rel_close;

namespace {

// independent extended-precision AGM oracle
long double ellip_K_ext(long double r) {
    long double a = 1.0L, b = sqrtl((1.0L - r) * (1.0L + r));
    for (int i = 0; i < 64 && fabsl(a - b) > 1e-21L * a; ++i) {
        const long double am = 0.5L * (a + b);
        b = sqrtl(a * b);
        a = am;
    }
    return std::numbers::pi_v<long double> / (a + b);
}

}  // namespace

TEST_CASE("ellip_K values", "[special]") {
    REQUIRE(rel_close(hypcap::ellip_K(0.0), std::numbers::pi / 2.0, 1e-15));
    REQUIRE(rel_close(hypcap::ellip_K(1.0 / std::sqrt(2.0)), 1.8540746773013719, 1e-13));
    REQUIRE(rel_close(hypcap::ellip_K(0.41928), 1.6476219642316490, 1e-13));
    REQUIRE_THROWS_AS(hypcap::ellip_K(1.0), std::domain_error);
    REQUIRE_THROWS_AS(hypcap::ellip_K(-0.1), std::domain_error);
}

TEST_CASE("ellip_K agrees with the AGM oracle", "[special]") {
    std::mt19937 rng(20260815);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double r = u(rng) * 0.999999;
        const double got = hypcap::ellip_K(r);
        const long double ref = ellip_K_ext(r);
        worst = std::max(worst, std::abs((got - static_cast<double>(ref)) / static_cast<double>(ref)));
    }
    REQUIRE(worst <= 1e-13);
}

TEST_CASE("mu values and functional identity", "[special]") {
    REQUIRE(rel_close(hypcap::mu(1.0 / std::sqrt(2.0)), std::numbers::pi / 2.0, 1e-13));
    REQUIRE(rel_close(hypcap::mu(0.1), 3.6863692375528519, 1e-13));
    REQUIRE(hypcap::mu(0.1) < std::log(40.0));

    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(0.01, 0.99);
    constexpr double pi2_4 = std::numbers::pi * std::numbers::pi / 4.0;
    for (int i = 0; i < 400; ++i) {
        const double r = u(rng);
        const double rp = std::sqrt((1.0 - r) * (1.0 + r));
        REQUIRE(abs_close(hypcap::mu(r) * hypcap::mu(rp), pi2_4, 1e-10));
    }
    // grid version across the stated range
    for (int k = 1; k <= 99; ++k) {
        const double r = k / 100.0;
        const double rp = std::sqrt((1.0 - r) * (1.0 + r));
        REQUIRE(abs_close(hypcap::mu(r) * hypcap::mu(rp), pi2_4, 1e-10));
        REQUIRE(hypcap::mu(r) < std::log(4.0 / r));
    }
    REQUIRE_THROWS_AS(hypcap::mu(0.0), std::domain_error);
    REQUIRE_THROWS_AS(hypcap::mu(1.0), std::domain_error);
}

TEST_CASE("mu and gamma2 are strictly decreasing", "[special]") {
    double prev_mu = hypcap::mu(0.0005);
    for (int k = 1; k <= 1000; ++k) {
        const double r = 0.0005 + (0.999 - 0.0005) * k / 1000.0;
        const double m = hypcap::mu(r);
        REQUIRE(m < prev_mu);
        prev_mu = m;
    }
    double prev_g = hypcap::gamma2(1.0005);
    for (int k = 1; k <= 1000; ++k) {
        const double s = 1.0005 + 30.0 * k / 1000.0;
        const double g = hypcap::gamma2(s);
        REQUIRE(g < prev_g);
        prev_g = g;
    }
}

TEST_CASE("gamma2 values", "[special]") {
    REQUIRE(rel_close(hypcap::gamma2(std::sqrt(2.0)), 4.0, 1e-13));
    REQUIRE(rel_close(hypcap::gamma2(1.0 / std::tanh(0.8937 / 2.0)), 2.8456671868944501, 1e-12));
    REQUIRE(rel_close(hypcap::gamma2(1.0 / std::tanh(7.0399 / 2.0)), 10.728563627819383, 1e-12));
    // reference values rounded to 4 decimals
    REQUIRE(abs_close(hypcap::gamma2(1.0 / std::tanh(0.8937 / 2.0)), 2.8457, 5e-4));
    REQUIRE(abs_close(hypcap::gamma2(1.0 / std::tanh(7.0399 / 2.0)), 10.7285, 5e-4));
    REQUIRE_THROWS_AS(hypcap::gamma2(1.0), std::domain_error);
}

TEST_CASE("tau2 values and identities", "[special]") {
    REQUIRE(rel_close(hypcap::tau2(1.0), 2.0, 1e-13));

    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(1.0 + 1e-6, 40.0);
    for (int i = 0; i < 300; ++i) {
        const double s = u(rng);
        REQUIRE(abs_close(hypcap::gamma2(s), 2.0 * hypcap::tau2(s * s - 1.0), 1e-12 * hypcap::gamma2(s)));
    }
    double prev = hypcap::tau2(0.01);
    for (int k = 1; k <= 200; ++k) {
        const double s = 0.01 + k * 0.5;
        const double v = hypcap::tau2(s);
        REQUIRE(v < prev);
        prev = v;
    }
    REQUIRE(hypcap::tau2(1e8) < 0.3);
    REQUIRE_THROWS_AS(hypcap::tau2(0.0), std::domain_error);
}

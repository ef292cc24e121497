#include <doctest.h>

#include <cmath>

#include "cycmzv/numeric.hpp"
#include "oracles.hpp"

using namespace cycmzv;

namespace {

double dist(const BigComplex& a, const BigComplex& b) { return (a - b).abs().to_double(); }

}  // namespace

TEST_CASE("float evaluation matches the embedded exact value") {
    const mpfr_prec_t prec = 128;
    const double tol = std::ldexp(1.0, -static_cast<int>(prec) / 2);
    for (int n : {1, 2, 3, 7, 12, 25, 40})
        for (int w = 0; w <= 5; ++w)
            for (const auto& k : indices_of_weight(w))
                for (SumMode mode : {SumMode::Plain, SumMode::Star}) {
                    const CycloElem exact = mode == SumMode::Plain ? z_exact(k, n) : z_star_exact(k, n);
                    const BigComplex a = embed_complex(exact, 1, prec);
                    CHECK(dist(z_numeric(k, n, prec, mode), a) < tol * (1.0 + a.abs().to_double()));
                }
}

TEST_CASE("values at large n approach the expected limits") {
    const int n = 10000;
    const BigComplex z2 = z_numeric(Index{2}, n, 96);
    CHECK(std::abs(z2.re.to_double() - M_PI * M_PI / 3) < 0.01);
    const BigComplex z1 = z_numeric(Index{1}, n, 96);
    CHECK(std::abs(z1.re.to_double()) < 0.01);
    CHECK(std::abs(z1.im.to_double() + M_PI) < 0.01);
    const BigComplex a2 = A_pm(Index{2}, n, 96, HalfSign::Plus);
    CHECK(std::abs(a2.re.to_double() - M_PI * M_PI / 6) < 0.01);
}

TEST_CASE("half-range decomposition is exact") {
    const mpfr_prec_t prec = 256;
    const double tol = std::ldexp(1.0, -static_cast<int>(prec) / 4);
    for (int n : {2, 3, 10, 101, 256})
        for (const Index& k : {Index{1}, Index{2}, Index{2, 1}, Index{3, 2}, Index{1, 2, 1}}) {
            const BigComplex z = z_numeric(k, n, prec);
            CHECK(dist(half_range_decomposition(k, n, prec), z) < tol * (1.0 + z.abs().to_double()));
        }
}

TEST_CASE("conjugation of half-range sums at odd n") {
    for (int n : {3, 11, 101})
        for (const Index& k : {Index{1}, Index{2}, Index{2, 1}, Index{3, 2}}) {
            const BigComplex m = A_pm(k, n, 192, HalfSign::Minus), p = A_pm(k, n, 192, HalfSign::Plus);
            CHECK(dist(m, p.conj()) < 1e-40);
        }
    // At even n the upper boundary m = n/2 belongs to A^+ only.
    const BigComplex m = A_pm(Index{2}, 10, 128, HalfSign::Minus), p = A_pm(Index{2}, 10, 128, HalfSign::Plus);
    CHECK(dist(m, p.conj()) > 1e-3);
}

TEST_CASE("reversal at finite n") {
    const mpfr_prec_t prec = 160;
    for (int n : {5, 16, 33})
        for (int w = 1; w <= 5; ++w)
            for (const auto& k : indices_of_weight(w)) {
                const BigComplex z = z_numeric(k, n, prec);
                const BigFloat pi = BigFloat::pi(prec);
                // (-e^{2 pi i/n})^{wt} conj(z(k))
                BigComplex factor = pow_int(BigComplex::polar_unit(pi * BigFloat(2L, prec) / BigFloat(long(n), prec)), w);
                if (w % 2) factor = BigComplex(prec) - factor;
                CHECK(dist(z_numeric(reverse(k), n, prec), factor * z.conj()) < 1e-35);
            }
}

TEST_CASE("extrapolated limits of depth one") {
    const auto schedule = geometric_schedule(500, 2, 6);
    const XiEstimate x2 = xi_approx(Index{2}, schedule, 128);
    CHECK(x2.converged);
    CHECK(std::abs(x2.estimate.re.to_double() - M_PI * M_PI / 3) < 1e-4);
    const XiEstimate x3 = xi_approx(Index{3}, schedule, 128);
    CHECK(x3.estimate.abs().to_double() < 1e-3);
    const XiEstimate s1 = xi_approx(Index{1}, schedule, 128, SumMode::Star);
    CHECK(std::abs(s1.estimate.re.to_double()) < 1e-4);  // forced by self-duality of (1)
}

TEST_CASE("error bars decay along doubling schedules") {
    for (const Index& k : {Index{1}, Index{2}, Index{3}, Index{2, 1}, Index{1, 1, 1}}) {
        const XiEstimate x = xi_approx(k, geometric_schedule(250, 2, 7), 128);
        CHECK(x.converged);
        for (std::size_t i = 1; i < x.window_errors.size(); ++i) CHECK(x.window_errors[i] < x.window_errors[i - 1]);
    }
}

TEST_CASE("star limit assembled from plain limits") {
    // z*(1,2) = z(1,2) + z(3) + (1 - q) z(2), and the last term vanishes in the limit.
    const auto schedule = geometric_schedule(500, 2, 6);
    const XiEstimate star = xi_approx(Index{1, 2}, schedule, 128, SumMode::Star);
    const XiEstimate a = xi_approx(Index{1, 2}, schedule, 128), b = xi_approx(Index{3}, schedule, 128);
    CHECK(dist(star.estimate, a.estimate + b.estimate) < 1e-3);
}

TEST_CASE("duality of star limits") {
    const auto schedule = geometric_schedule(500, 2, 6);
    for (const Index& k : {Index{2, 1}, Index{3, 2}, Index{1}}) {
        const DualityResidual r = xi_duality_check(k, schedule, 128);
        CHECK(r.residual < 1e-3);
    }
}

TEST_CASE("schedule validation") {
    CHECK(geometric_schedule(1000, 2, 3) == std::vector<int>{1000, 2000, 4000});
    CHECK_THROWS(xi_approx(Index{2}, {100, 200}, 64));
    CHECK_THROWS(xi_approx(Index{2}, {100, 300, 200}, 64));
    const XiEstimate short_run = xi_approx(Index{2}, {1000, 2000, 4000}, 64);
    CHECK_FALSE(short_run.converged);
}

#include <doctest.h>

#include <array>
#include <map>

#include "cycmzv/hpoly.hpp"
#include "cycmzv/qseries.hpp"
#include "oracles.hpp"

using namespace cycmzv;

namespace {

HPoly e(const Index& k, long c = 1, int hbar = 0) { return HPoly::word(k, Rational(c), hbar); }
HPoly e(const Index& k, const Rational& c, int hbar = 0) { return HPoly::word(k, c, hbar); }

bool all_total_weights(const HPoly& w, int weight) {
    for (const auto& [m, c] : w.terms())
        if (m.total_weight() != weight) return false;
    return true;
}

}  // namespace

TEST_CASE("products of single letters") {
    CHECK(stuffle(e({1}), e({2})) == e({1, 2}) + e({2, 1}) + e({3}));
    CHECK(star_prod(e({1}), e({2})) == e({1, 2}) + e({2, 1}) - e({3}));
    CHECK(q_stuffle(e({2}), e({1})) == e({2, 1}) + e({1, 2}) + e({3}) + e({2}, 1, 1));
    CHECK(q_star(e({2}), e({1})) == e({2, 1}) + e({1, 2}) - e({3}) - e({2}, 1, 1));
    const HPoly w = e({2, 1}) + e({3}, make_rational(1, 2), 2);
    CHECK(stuffle(HPoly::unit(), w) == w);
    CHECK(q_star(w, HPoly::unit()) == w);
}

TEST_CASE("stuffle and star products agree with products of truncated harmonic sums") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> depth_n(1, 9);
    for (int trial = 0; trial < 1000; ++trial) {
        const Index u = oracle::random_index(rng, 5), v = oracle::random_index(rng, 5);
        const int N = depth_n(rng);
        CHECK(oracle::harmonic(stuffle(e(u), e(v)), N, false) ==
              oracle::harmonic(u, N, false) * oracle::harmonic(v, N, false));
        CHECK(oracle::harmonic(star_prod(e(u), e(v)), N, true) ==
              oracle::harmonic(u, N, true) * oracle::harmonic(v, N, true));
    }
}

TEST_CASE("products are commutative and associative") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 1000; ++trial) {
        const QuasiShuffle rule = std::array{kStuffle, kStar, kQStuffle, kQStar}[static_cast<std::size_t>(trial % 4)];
        const HPoly a = oracle::random_hpoly(rng, 3, 2), b = oracle::random_hpoly(rng, 3, 2),
                    c = oracle::random_hpoly(rng, 2, 2);
        CHECK(quasi_shuffle(a, b, rule) == quasi_shuffle(b, a, rule));
        CHECK(quasi_shuffle(quasi_shuffle(a, b, rule), c, rule) == quasi_shuffle(a, quasi_shuffle(b, c, rule), rule));
    }
}

TEST_CASE("deformed products reduce to the plain ones at hbar = 0 and keep total weight") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 1000; ++trial) {
        const Index u = oracle::random_index(rng, 5), v = oracle::random_index(rng, 5);
        const HPoly qs = q_stuffle(e(u), e(v)), qt = q_star(e(u), e(v));
        CHECK(qs.at_hbar_zero() == stuffle(e(u), e(v)));
        CHECK(qt.at_hbar_zero() == star_prod(e(u), e(v)));
        CHECK(all_total_weights(qs, u.weight() + v.weight()));
        CHECK(all_total_weights(qt, u.weight() + v.weight()));
    }
}

TEST_CASE("delta") {
    CHECK(delta(e({3, 2})) == e({1, 2, 1, 1}));
    CHECK(delta(e({1})) == e({1}));
    CHECK(delta(e({2})) == -e({1, 1}));
    CHECK(delta(delta(e({2, 1, 1}))) == e({2, 1, 1}));
    CHECK_THROWS(delta(e({2}, 1, 1)));
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 1000; ++trial) {
        const HPoly w = oracle::random_hpoly(rng, 8, 4, 1);
        CHECK(delta(delta(w)) == w);
    }
}

TEST_CASE("L, L-star and rho") {
    CHECK(map_L(HPoly::unit()) == e({1}, -2));
    CHECK(map_L(e({1})) == (e({1, 1}, 2) + e({2})) * make_rational(-2, 3));
    CHECK(map_Lstar(e({1})) == (e({1, 1}, 2) - e({2})) * Rational(2));
    CHECK(map_Lstar(HPoly::unit()) == e({1}, -2));
    CHECK(rho(e({2, 1})) == e({2, 1}));
    CHECK(rho(e({}, 1, 1)) == e({1}, -2));
    CHECK(rho_star(e({}, 1, 2)) == map_Lstar(map_Lstar(HPoly::unit())));
    CHECK_THROWS(map_L(e({1}, 1, 1)));

    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 1000; ++trial) {
        const HPoly w = oracle::random_hpoly(rng, 5, 3);
        CHECK(rho(w) == w);
        CHECK(rho_star(w) == w);
        const Index k = oracle::random_index(rng, 4);
        const int h = trial % 3;
        CHECK(all_total_weights(rho(e(k, 1, h)), k.weight() + h));
        CHECK(all_total_weights(rho_star(e(k, 1, h)), k.weight() + h));
        CHECK(rho(e(k, 1, h)).hbar_free());
    }
}

TEST_CASE("tilde products") {
    const HPoly sum = e({1, 2}) + e({2, 1}) + e({3});
    CHECK(tilde_ast(e({1}), e({2})) == sum + sum * make_rational(-2, 3));
    CHECK(tilde_ast(HPoly::unit(), e({2, 1})) == e({2, 1}));
    CHECK(tilde_star(HPoly::unit(), e({2, 1})) == e({2, 1}));
    CHECK(all_total_weights(tilde_star(e({2, 1}), e({1, 1})), 5));

    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 1000; ++trial) {
        const Index u = oracle::random_index(rng, 4), v = oracle::random_index(rng, 4);
        const HPoly a = tilde_ast(e(u), e(v)), b = tilde_star(e(u), e(v));
        CHECK(a.hbar_free());
        CHECK(b.hbar_free());
        CHECK(all_total_weights(a, u.weight() + v.weight()));
        CHECK(all_total_weights(b, u.weight() + v.weight()));
    }
}

TEST_CASE("star and non-star expansions") {
    const HPoly expect = e({3, 2, 1}) + e({5, 1}) + e({3, 3}) + e({6}) + e({4, 1}, 1, 1) + e({3, 2}, 1, 1) +
                         e({5}, 2, 1) + e({4}, 1, 2);
    CHECK(star_to_mono(Index{3, 2, 1}) == expect);
    CHECK(star_to_mono(Index{7}) == e({7}));
    CHECK(mono_to_star(star_to_mono(HPoly::word(Index{2, 1}))) == e({2, 1}));
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 1000; ++trial) {
        const HPoly w = oracle::random_hpoly(rng, 6, 3);
        CHECK(mono_to_star(star_to_mono(w)) == w);
        CHECK(star_to_mono(mono_to_star(w)) == w);
    }
}

TEST_CASE("star expansion evaluates to the star value") {
    for (int n : {2, 3, 5, 8, 11}) {
        QSeriesEvaluator ev(n);
        for (int w = 0; w <= 7; ++w)
            for (const auto& k : indices_of_weight(w)) {
                CHECK(ev.z(star_to_mono(k), SumMode::Plain) == ev.z(k, SumMode::Star));
                CHECK(ev.z(mono_to_star(k), SumMode::Star) == ev.z(k, SumMode::Plain));
            }
    }
}

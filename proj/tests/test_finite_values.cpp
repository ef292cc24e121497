#include <doctest.h>

#include "cycmzv/finite_values.hpp"
#include "cycmzv/qseries.hpp"
#include "oracles.hpp"

using namespace cycmzv;

namespace {

const std::vector<std::uint64_t> kSmall = primes_in_range(7, 31);

HPoly e(const Index& k, long c = 1) { return HPoly::word(k, Rational(c)); }

}  // namespace

TEST_CASE("truncated sums modulo p match enumeration") {
    for (std::uint64_t p : primes_in_range(2, 23))
        for (int w = 0; w <= 5; ++w)
            for (const auto& k : indices_of_weight(w)) {
                if (k.depth() > 3) continue;
                CHECK(fmzv_at(k, p, SumMode::Plain) == oracle::naive_fmzv(k, p, false));
                CHECK(fmzv_at(k, p, SumMode::Star) == oracle::naive_fmzv(k, p, true));
            }
}

TEST_CASE("classical vanishing and Hoffman relations") {
    for (int k = 1; k <= 3; ++k) CHECK(fmzv(Index{k}, {7, 11, 13}).all_zero());
    const auto primes = primes_in_range(7, 199);
    CHECK(fmzv(e({4, 1}) - e({3, 1, 1}, 2), primes, SumMode::Plain).all_zero());
    CHECK(fmzv(e({4, 1}, 2) + e({3, 2}), primes, SumMode::Star).all_zero());
    CHECK_FALSE(fmzv(e({2, 1}), primes, SumMode::Plain).all_zero());
}

TEST_CASE("cyclotomic values reduce to the finite values") {
    for (int w = 0; w <= 5; ++w)
        for (const auto& k : indices_of_weight(w)) {
            for (SumMode mode : {SumMode::Plain, SumMode::Star}) {
                const AdelicValue cyc = Z_cyc(k, kSmall, mode);
                const AdelicValue fin = mode == SumMode::Plain ? fmzv(k, kSmall) : fmzv_star(k, kSmall);
                const AdelicValue img = cyc.to_finite();
                for (std::uint64_t p : kSmall) {
                    REQUIRE(img.entries.count(p));
                    CHECK(img.entries.at(p) == fin.entries.at(p));
                }
            }
        }
}

TEST_CASE("depth-one values in the cyclotomic ring") {
    for (std::uint64_t p : kSmall) {
        const ResidueVector varpi = ResidueVector::varpi(p);
        const ResidueVector z1 = Z_cyc(Index{1}, {p}).entries.at(p);
        CHECK(z1 == varpi * ResidueVector::scalar(p, Ideal::Full, reduce_rational(make_rational(-1, 2), p)));
        const ResidueVector z4 = Z_cyc(Index{4}, {p}).entries.at(p);
        CHECK(z4 == varpi * varpi * varpi * varpi *
                        ResidueVector::scalar(p, Ideal::Full, reduce_rational(make_rational(19, 720), p)));
    }
}

TEST_CASE("primes dividing a denominator are excluded, not failed") {
    // 1/5 e_(1): p = 5 must be excluded.
    const HPoly w = HPoly::word(Index{1}, make_rational(1, 5));
    const RelationReport r = verify_relation(w, Ring::Acyc, {5, 7}, SumMode::Plain);
    CHECK(r.primes.at(5).status == PrimeStatus::Excluded);
    CHECK(r.primes.at(7).status == PrimeStatus::Nonzero);
    CHECK_FALSE(r.holds());
    const AdelicValue v = Z_cyc(w, {5, 7});
    CHECK(v.excluded.count(5) == 1);
    CHECK(v.entries.count(5) == 0);
}

TEST_CASE("relation verification") {
    std::vector<std::uint64_t> primes = primes_in_range(7, 31);
    for (int w = 1; w <= 6; ++w)
        for (const auto& k : indices_of_weight(w)) {
            HPoly dual = e(k);
            dual -= HPoly::word(dual_reverse(k), Rational(w % 2 == 1 ? 1 : -1));
            CHECK(verify_relation(dual, Ring::Acyc, primes, SumMode::Star).holds());
            HPoly rev = e(k);
            rev -= HPoly::word(reverse(k), Rational(w % 2 == 0 ? 1 : -1));
            CHECK(verify_relation(rev, Ring::A, primes, SumMode::Plain).holds());
        }
    const RelationReport bad = verify_relation(e({2, 1}), Ring::A, primes, SumMode::Plain);
    CHECK(bad.count(PrimeStatus::Nonzero) == primes.size());
    CHECK_FALSE(bad.primes.at(7).residue.empty());
    CHECK_FALSE(verify_relation(e({2, 1}) + e({1}), Ring::A, primes, SumMode::Plain).homogeneous);
}

TEST_CASE("multiplication by varpi versus the map L modulo p") {
    // (1 - zeta_p) Z(k) = -2/(2 dep + 1) Z(e_1 * e_k) modulo (p).
    for (std::uint64_t p : kSmall) {
        QSeriesEvaluator ev(static_cast<int>(p));
        const ResidueVector varpi = ResidueVector::varpi(p);
        for (int w = 0; w <= 4; ++w)
            for (const auto& k : indices_of_weight(w)) {
                if ((2 * k.depth() + 1) % static_cast<int>(p) == 0) continue;
                const ResidueVector lhs = varpi * reduce_mod(ev.z(k), Ideal::Full);
                const ResidueVector rhs = reduce_mod(ev.z(map_L(e(k))), Ideal::Full);
                CHECK(lhs == rhs);
            }
    }
}

// The product rule divides by 2 dep +- 1, so it is only checked at primes above those factors.
TEST_CASE("tilde products are multiplicative modulo p") {
    for (std::uint64_t p : primes_in_range(11, 31)) {
        QSeriesEvaluator ev(static_cast<int>(p));
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; a + b <= 4; ++b)
                for (const auto& u : indices_of_weight(a))
                    for (const auto& v : indices_of_weight(b)) {
                        const ResidueVector zu = reduce_mod(ev.z(u), Ideal::Full), zv = reduce_mod(ev.z(v), Ideal::Full);
                        CHECK(reduce_mod(ev.z(tilde_ast(e(u), e(v))), Ideal::Full) == zu * zv);
                        const ResidueVector su = reduce_mod(ev.z(u, SumMode::Star), Ideal::Full),
                                            sv = reduce_mod(ev.z(v, SumMode::Star), Ideal::Full);
                        CHECK(reduce_mod(ev.z(tilde_star(e(u), e(v)), SumMode::Star), Ideal::Full) == su * sv);
                    }
    }
}

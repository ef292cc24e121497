#include <doctest.h>

#include "cycmzv/primes.hpp"
#include "cycmzv/rational.hpp"

using namespace cycmzv;

TEST_CASE("rationals parse and print in lowest terms") {
    CHECK(parse_rational("6/4") == make_rational(3, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK_THROWS_AS(parse_rational("-2/-4"), ParseError);
    CHECK(format_rational(make_rational(-10, 4)) == "-5/2");
    CHECK(format_rational(Rational(3)) == "3");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("primality agrees with trial division") {
    auto trial = [](std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    };
    for (std::uint64_t n = 0; n < 20000; ++n) CHECK(is_prime(n) == trial(n));
    CHECK(is_prime(2147483647ULL));
    CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
    CHECK(primes_in_range(7, 31) == std::vector<std::uint64_t>{7, 11, 13, 17, 19, 23, 29, 31});
}

TEST_CASE("modular inverses") {
    for (std::uint64_t p : {7ULL, 31ULL, 101ULL, 2147483647ULL}) {
        for (std::uint64_t a = 1; a < std::min<std::uint64_t>(p, 200); ++a) CHECK(mul_mod(a, inv_mod(a, p), p) == 1);
    }
    const auto table = inverse_table(97);
    for (std::uint64_t a = 1; a < 97; ++a) CHECK(table[a] == inv_mod(a, 97));
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(97) == 96);
}

#include <doctest.h>

#include "cycmzv/primes.hpp"
#include "cycmzv/relations.hpp"

using namespace cycmzv;

TEST_CASE("relation family in low weight") {
    CHECK(duality_element(Index{1}).is_zero());
    CHECK(dimension_upper_bound(1).upper_bound == 1);
    CHECK(dimension_upper_bound(0).upper_bound == 1);
    CHECK(dimension_upper_bound(5).upper_bound == 4);
    for (int k = 1; k <= 6; ++k)
        for (const auto& e : relation_family(k)) {
            CHECK(e.hbar_free());
            CHECK(e.total_weights() == std::set<int>{k});
        }
}

TEST_CASE("dimension bounds up to weight 8") {
    const std::vector<std::size_t> expect = {1, 1, 1, 2, 2, 4, 5, 8, 12};
    const auto rows = dimension_upper_bounds(8);
    for (std::size_t k = 0; k < expect.size(); ++k) {
        CHECK(rows[k].upper_bound == expect[k]);
        CHECK(rows[k].certified);
        CHECK(rows[k].num_indices == (k == 0 ? 1 : std::size_t{1} << (k - 1)));
    }
}

TEST_CASE("bounds from the reduced matrix equal the rank of the full family") {
    for (int k = 1; k <= 7; ++k) {
        const auto family = relation_family(k);
        const auto idx = indices_of_weight(k);
        RationalMatrix m(0, idx.size());
        for (const auto& e : family) {
            std::vector<Rational> row(idx.size());
            for (const auto& [mono, c] : e.terms()) row[index_code(mono.index)] = c;
            m.append_row(row);
        }
        const std::size_t rank = family.empty() ? 0 : rank_kernel(m).rank;
        CHECK(idx.size() - rank == dimension_upper_bound(k).upper_bound);
    }
}

// Primes above 2 * 6 + 1 so that every L denominator is invertible.
TEST_CASE("every generated relation holds in the cyclotomic ring") {
    const auto primes = primes_in_range(17, 43);
    for (int k = 1; k <= 6; ++k)
        for (const auto& e : relation_family(k)) CHECK(verify_relation(e, Ring::Acyc, primes, SumMode::Star).holds());
}

TEST_CASE("observed dimensions") {
    CHECK(observed_dimension(3, 13) == 2);
    CHECK(observed_dimension(5, 11) == 4);
    CHECK(observed_dimension(2, 2) <= 1);
    CHECK(observed_dimension(0, 7) == 1);
    for (int k = 1; k <= 5; ++k)
        for (int p : {11, 17, 23}) CHECK(observed_dimension(k, p) <= dimension_upper_bound(k).upper_bound);
    CHECK_THROWS(observed_dimension(3, 12));
}

TEST_CASE("kernel of the reduction map") {
    const auto primes = primes_in_range(7, 31);
    HPoly combo = HPoly::word(Index{4, 1});
    combo -= HPoly::word(Index{3, 1, 1}, Rational(2));
    const KerPhiReport r = ker_phi_probe(combo, primes);
    CHECK(r.weight == 5);
    CHECK(r.finite_image_zero());
    for (const auto& [p, res] : r.primes) CHECK_FALSE(res.in_varpi_span);

    const KerPhiReport member = ker_phi_probe(map_L(HPoly::word(Index{2})), primes);
    CHECK(member.finite_image_zero());
    CHECK(member.varpi_span_member());

    const KerPhiReport nonmember = ker_phi_probe(HPoly::word(Index{2, 1}), primes);
    CHECK_FALSE(nonmember.finite_image_zero());
    CHECK_THROWS(ker_phi_probe(HPoly::word(Index{2}, Rational(1), 1), primes));
}

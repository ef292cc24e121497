#include <doctest.h>

#include <random>

#include "cycmzv/matrix.hpp"
#include "cycmzv/primes.hpp"

using namespace cycmzv;

namespace {

RationalMatrix random_product(std::mt19937_64& rng, std::size_t rows, std::size_t inner, std::size_t cols) {
    std::uniform_int_distribution<int> d(-5, 5);
    std::vector<std::vector<long>> a(rows, std::vector<long>(inner)), b(inner, std::vector<long>(cols));
    for (auto& r : a)
        for (auto& x : r) x = d(rng);
    for (auto& r : b)
        for (auto& x : r) x = d(rng);
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            long s = 0;
            for (std::size_t k = 0; k < inner; ++k) s += a[i][k] * b[k][j];
            // Scale rows by unrelated fractions; rank is unchanged.
            m.at(i, j) = make_rational(s, static_cast<long>(i % 4) + 1);
        }
    return m;
}

// Plain Gaussian elimination modulo q: the rank oracle.
std::size_t oracle_rank_mod(const RationalMatrix& m, std::uint64_t q) {
    std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& x = m.at(i, j);
            Integer num = x.get_num() % Integer(static_cast<unsigned long>(q));
            if (num < 0) num += static_cast<unsigned long>(q);
            const std::uint64_t den = mpz_fdiv_ui(x.get_den_mpz_t(), q);
            a[i][j] = mul_mod(num.get_ui(), inv_mod(den, q), q);
        }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t piv = rank;
        while (piv < m.rows() && a[piv][c] == 0) ++piv;
        if (piv == m.rows()) continue;
        std::swap(a[piv], a[rank]);
        const std::uint64_t inv = inv_mod(a[rank][c], q);
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            const std::uint64_t f = mul_mod(a[r][c], inv, q);
            for (std::size_t j = c; j < m.cols(); ++j) a[r][j] = (a[r][j] + q - mul_mod(f, a[rank][j], q)) % q;
        }
        ++rank;
    }
    return rank;
}

bool in_kernel(const RationalMatrix& m, const std::vector<Integer>& v) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) s += m.at(i, j) * Rational(v[j]);
        if (s != 0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("rank and kernel of small matrices") {
    RationalMatrix id(3, 3);
    for (std::size_t i = 0; i < 3; ++i) id.at(i, i) = 1;
    const RankKernel r1 = rank_kernel(id);
    CHECK(r1.rank == 3);
    CHECK(r1.kernel.empty());

    const RankKernel r2 = rank_kernel(RationalMatrix::from_rows({{1, 2}, {2, 4}}));
    CHECK(r2.rank == 1);
    REQUIRE(r2.kernel.size() == 1);
    CHECK(r2.kernel[0] == std::vector<Integer>{2, -1});

    const RankKernel r3 = rank_kernel(RationalMatrix::from_rows({{make_rational(1, 2), make_rational(1, 3)}}));
    CHECK(r3.kernel[0] == std::vector<Integer>{2, -3});

    std::mt19937_64 rng(4);
    CHECK(rank_kernel(random_product(rng, 6, 4, 6)).rank == 4);
}

TEST_CASE("exact rank agrees with modular ranks and kernels are exact") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<std::size_t> dim(1, 50);
    const std::uint64_t primes[] = {1000003, 998244353, 2147483629};
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = dim(rng), cols = dim(rng);
        const std::size_t inner = std::uniform_int_distribution<std::size_t>(0, std::min(rows, cols))(rng);
        const RationalMatrix m = random_product(rng, rows, inner, cols);
        const RankKernel rk = rank_kernel(m);
        std::size_t modular = 0;
        for (auto q : primes) modular = std::max(modular, oracle_rank_mod(m, q));
        CHECK(rk.rank == modular);
        CHECK(rk.rank <= inner);
        CHECK(rk.kernel.size() == cols - rk.rank);
        for (const auto& v : rk.kernel) CHECK(in_kernel(m, v));
    }
}

TEST_CASE("certified modular rank") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        const RationalMatrix m = random_product(rng, 40, 25, 35);
        std::vector<SparseRow> rows;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            std::vector<std::pair<std::size_t, Rational>> r;
            for (std::size_t j = 0; j < m.cols(); ++j) r.emplace_back(j, m.at(i, j));
            rows.push_back(integer_row(r));
        }
        const CertifiedRank cr = certified_rank(rows, m.cols());
        CHECK(cr.certified);
        CHECK(cr.rank == rank_kernel(m).rank);
        CHECK(rank_mod(rows, m.cols(), 1000003) == cr.rank);
    }
}

TEST_CASE("rational reconstruction") {
    const Integer m = Integer(1000003) * Integer(1000033);
    for (const Rational& x : {make_rational(3, 7), make_rational(-22, 9), Rational(0), make_rational(1, 999)}) {
        Integer den_inv;
        Integer den = x.get_den();
        mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
        Integer a = x.get_num() * den_inv;
        mpz_fdiv_r(a.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
        Rational out;
        REQUIRE(rational_reconstruct(a, m, out));
        CHECK(out == x);
    }
}

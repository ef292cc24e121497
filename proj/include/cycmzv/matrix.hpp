#pragma once

#include <cstdint>
#include <vector>

#include "cycmzv/rational.hpp"

namespace cycmzv {

/// Dense row-major matrix of rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::vector<Rational> row(std::size_t r) const;
    void append_row(const std::vector<Rational>& row);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct RankKernel {
    std::size_t rank = 0;
    /// Right-kernel basis; each vector has coprime integer entries and a
    /// positive leading nonzero entry.
    std::vector<std::vector<Integer>> kernel;
};

/// Exact rank and right kernel by fraction-free elimination. Each row is
/// first scaled to integers; pivots are chosen by largest |entry|.
RankKernel rank_kernel(const RationalMatrix& m);

/// Sparse integer row: (column, value) pairs with increasing columns.
using SparseRow = std::vector<std::pair<std::size_t, Integer>>;

/// Scales a rational row to coprime integers; zero entries are dropped.
SparseRow integer_row(const std::vector<std::pair<std::size_t, Rational>>& row);

/// Incremental row echelon form over F_p (p < 2^31).
class ModEchelon {
public:
    ModEchelon(std::size_t cols, std::uint64_t prime);

    /// Reduces the row against the basis; keeps it if independent.
    /// Returns true when the rank grew.
    bool add(std::vector<std::uint64_t> row);
    bool add(const SparseRow& row);

    std::size_t rank() const { return basis_.size(); }
    std::size_t cols() const { return cols_; }
    std::uint64_t prime() const { return prime_; }
    /// Pivot columns in increasing order.
    std::vector<std::size_t> pivots() const;
    /// Right-kernel basis mod p: one vector per free column f, with entry 1 at f
    /// and 0 at the other free columns.
    std::vector<std::vector<std::uint64_t>> kernel() const;

private:
    std::size_t cols_;
    std::uint64_t prime_;
    std::vector<std::vector<std::uint64_t>> basis_;
    std::vector<std::size_t> pivot_;
};

/// Rank over F_p.
std::size_t rank_mod(const std::vector<SparseRow>& rows, std::size_t cols, std::uint64_t prime);

struct CertifiedRank {
    std::size_t rank = 0;
    /// True when a rational kernel of dimension cols - rank was reconstructed
    /// and checked exactly against every row, which proves rank over Q.
    bool certified = false;
    std::vector<std::uint64_t> primes_used;
    std::vector<std::vector<Rational>> kernel;
};

/// Rank over Q of a sparse integer matrix. Rank mod p is a lower bound; the
/// upper bound comes from lifting the mod-p kernel by CRT and rational
/// reconstruction and checking it exactly. Tries up to max_primes primes.
CertifiedRank certified_rank(const std::vector<SparseRow>& rows, std::size_t cols, int max_primes = 64);

/// Rational reconstruction of a mod m with |num|, den <= sqrt(m/2); false if none.
bool rational_reconstruct(const Integer& a, const Integer& m, Rational& out);

}  // namespace cycmzv

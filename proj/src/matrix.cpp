#include "cycmzv/matrix.hpp"

#include <algorithm>
#include <map>

#include "cycmzv/primes.hpp"

namespace cycmzv {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    RationalMatrix m(0, rows.empty() ? 0 : rows.front().size());
    for (const auto& r : rows) m.append_row(r);
    return m;
}

std::vector<Rational> RationalMatrix::row(std::size_t r) const {
    return {data_.begin() + static_cast<long>(r * cols_), data_.begin() + static_cast<long>((r + 1) * cols_)};
}

void RationalMatrix::append_row(const std::vector<Rational>& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw Error("RationalMatrix: row length mismatch");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

namespace {

std::vector<Integer> primitive(std::vector<Rational> v) {
    Integer den = 1;
    for (const auto& x : v)
        if (x != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> out(v.size());
    Integer g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = v[i].get_num() * (den / v[i].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
    }
    if (g == 0) return out;
    const Integer* lead = nullptr;
    for (const auto& x : out)
        if (x != 0) {
            lead = &x;
            break;
        }
    if (*lead < 0) g = -g;
    for (auto& x : out) x /= g;
    return out;
}

}  // namespace

RankKernel rank_kernel(const RationalMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Integer>> a;
    a.reserve(rows);
    for (std::size_t r = 0; r < rows; ++r) a.push_back(primitive(m.row(r)));

    Integer prev = 1;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t best = rows;
        for (std::size_t r = rank; r < rows; ++r)
            if (a[r][c] != 0 && (best == rows || abs(a[r][c]) > abs(a[best][c]))) best = r;
        if (best == rows) continue;
        std::swap(a[best], a[rank]);
        const auto& piv = a[rank];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            auto& row = a[r];
            for (std::size_t j = c + 1; j < cols; ++j) {
                row[j] = piv[c] * row[j] - row[c] * piv[j];
                mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), prev.get_mpz_t());
            }
            row[c] = 0;
        }
        prev = piv[c];
        pivots.push_back(c);
        ++rank;
    }

    RankKernel out;
    out.rank = rank;
    // Reduced echelon form over Q of the pivot rows.
    std::vector<std::vector<Rational>> e(rank, std::vector<Rational>(cols));
    for (std::size_t i = rank; i-- > 0;) {
        const Rational inv = Rational(1) / Rational(a[i][pivots[i]]);
        for (std::size_t j = 0; j < cols; ++j) e[i][j] = Rational(a[i][j]) * inv;
        for (std::size_t k = i + 1; k < rank; ++k) {
            const Rational f = e[i][pivots[k]];
            if (f == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) e[i][j] -= f * e[k][j];
        }
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < rank; ++i) v[pivots[i]] = -e[i][f];
        out.kernel.push_back(primitive(std::move(v)));
    }
    return out;
}

SparseRow integer_row(const std::vector<std::pair<std::size_t, Rational>>& row) {
    Integer den = 1;
    for (const auto& [c, x] : row)
        if (x != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    SparseRow out;
    Integer g = 0;
    for (const auto& [c, x] : row) {
        if (x == 0) continue;
        out.emplace_back(c, x.get_num() * (den / x.get_den()));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().second.get_mpz_t());
    }
    if (g > 1)
        for (auto& [c, x] : out) x /= g;
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    return out;
}

ModEchelon::ModEchelon(std::size_t cols, std::uint64_t prime) : cols_(cols), prime_(prime) {
    if (prime < 2 || prime >= (1ULL << 31)) throw Error("ModEchelon: prime out of range");
}

bool ModEchelon::add(std::vector<std::uint64_t> row) {
    if (row.size() != cols_) throw Error("ModEchelon: row length mismatch");
    const std::uint64_t p = prime_;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const std::size_t pc = pivot_[i];
        const std::uint64_t f = row[pc];
        if (f == 0) continue;
        const std::uint64_t g = p - f;
        const auto& b = basis_[i];
        for (std::size_t j = pc; j < cols_; ++j)
            if (b[j]) row[j] = (row[j] + g * b[j]) % p;
    }
    std::size_t pc = 0;
    while (pc < cols_ && row[pc] == 0) ++pc;
    if (pc == cols_) return false;
    const std::uint64_t inv = inv_mod(row[pc], p);
    for (std::size_t j = pc; j < cols_; ++j) row[j] = row[j] * inv % p;
    basis_.push_back(std::move(row));
    pivot_.push_back(pc);
    return true;
}

bool ModEchelon::add(const SparseRow& row) {
    std::vector<std::uint64_t> dense(cols_, 0);
    const Integer pz(static_cast<unsigned long>(prime_));
    Integer t;
    for (const auto& [c, x] : row) {
        mpz_fdiv_r(t.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t());
        dense.at(c) = t.get_ui();
    }
    return add(std::move(dense));
}

std::vector<std::size_t> ModEchelon::pivots() const {
    auto out = pivot_;
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<std::uint64_t>> ModEchelon::kernel() const {
    const std::uint64_t p = prime_;
    std::vector<std::size_t> order(basis_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return pivot_[l] < pivot_[r]; });
    std::vector<std::vector<std::uint64_t>> e;
    std::vector<std::size_t> piv;
    for (auto i : order) {
        e.push_back(basis_[i]);
        piv.push_back(pivot_[i]);
    }
    // Back-substitution to reduced echelon form.
    for (std::size_t i = e.size(); i-- > 0;) {
        for (std::size_t r = 0; r < i; ++r) {
            const std::uint64_t f = e[r][piv[i]];
            if (f == 0) continue;
            const std::uint64_t g = p - f;
            for (std::size_t j = piv[i]; j < cols_; ++j)
                if (e[i][j]) e[r][j] = (e[r][j] + g * e[i][j]) % p;
        }
    }
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<std::vector<std::uint64_t>> out;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<std::uint64_t> v(cols_, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < e.size(); ++i) v[piv[i]] = e[i][f] ? p - e[i][f] : 0;
        out.push_back(std::move(v));
    }
    return out;
}

std::size_t rank_mod(const std::vector<SparseRow>& rows, std::size_t cols, std::uint64_t prime) {
    ModEchelon ech(cols, prime);
    for (const auto& r : rows) {
        ech.add(r);
        if (ech.rank() == cols) break;
    }
    return ech.rank();
}

bool rational_reconstruct(const Integer& a, const Integer& m, Rational& out) {
    Integer bound;
    mpz_fdiv_q_2exp(bound.get_mpz_t(), m.get_mpz_t(), 1);
    mpz_sqrt(bound.get_mpz_t(), bound.get_mpz_t());
    Integer r0 = m, r1;
    mpz_fdiv_r(r1.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    Integer s0 = 0, s1 = 1;
    while (r1 > bound) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1;
        Integer s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (s1 == 0 || abs(s1) > bound) return false;
    Integer g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), s1.get_mpz_t());
    if (g != 1) return false;
    out = Rational(r1, s1);
    out.canonicalize();
    return true;
}

namespace {

bool kernel_vector_checks(const std::vector<SparseRow>& rows, const std::vector<Rational>& v) {
    Integer den = 1;
    for (const auto& x : v)
        if (x != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i].get_num() * (den / v[i].get_den());
    Integer acc;
    for (const auto& row : rows) {
        acc = 0;
        for (const auto& [c, x] : row) acc += x * w[c];
        if (acc != 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> large_primes(int count) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = (1ULL << 31) - 1; static_cast<int>(out.size()) < count; q -= 2)
        if (is_prime(static_cast<long long>(q))) out.push_back(q);
    return out;
}

}  // namespace

CertifiedRank certified_rank(const std::vector<SparseRow>& rows, std::size_t cols, int max_primes) {
    CertifiedRank out;
    std::vector<std::size_t> pivots;
    std::vector<std::vector<Integer>> residues;  // CRT images of the kernel
    Integer modulus = 1;
    // After the first prime only the rows that raised the rank are eliminated;
    // the exact check below still runs against every row.
    std::vector<const SparseRow*> active;
    for (const auto& r : rows) active.push_back(&r);
    bool pruned = false;
    for (std::uint64_t p : large_primes(max_primes)) {
        ModEchelon ech(cols, p);
        std::vector<const SparseRow*> independent;
        for (const auto* r : active) {
            if (ech.add(*r)) independent.push_back(r);
            if (ech.rank() == cols) break;
        }
        out.primes_used.push_back(p);
        if (!pruned) {
            active = std::move(independent);
            pruned = true;
        }
        if (ech.rank() < out.rank) continue;  // unlucky prime
        if (ech.rank() > out.rank || ech.pivots() != pivots) {
            out.rank = ech.rank();
            pivots = ech.pivots();
            residues.clear();
            modulus = 1;
        }
        const auto ker = ech.kernel();
        const Integer pz(static_cast<unsigned long>(p));
        if (residues.empty()) {
            residues.resize(ker.size(), std::vector<Integer>(cols));
            for (std::size_t i = 0; i < ker.size(); ++i)
                for (std::size_t j = 0; j < cols; ++j) residues[i][j] = Integer(static_cast<unsigned long>(ker[i][j]));
            modulus = pz;
        } else {
            // x = r + M * ((k - r) * M^{-1} mod p)
            Integer minv;
            mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
            for (std::size_t i = 0; i < ker.size(); ++i)
                for (std::size_t j = 0; j < cols; ++j) {
                    Integer t = Integer(static_cast<unsigned long>(ker[i][j])) - residues[i][j];
                    t *= minv;
                    mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), pz.get_mpz_t());
                    residues[i][j] += modulus * t;
                }
            modulus *= pz;
        }
        std::vector<std::vector<Rational>> lifted;
        bool ok = true;
        for (const auto& res : residues) {
            std::vector<Rational> v(cols);
            for (std::size_t j = 0; j < cols && ok; ++j) ok = rational_reconstruct(res[j], modulus, v[j]);
            if (!ok) break;
            lifted.push_back(std::move(v));
        }
        if (ok)
            for (const auto& v : lifted)
                if (!kernel_vector_checks(rows, v)) {
                    ok = false;
                    break;
                }
        if (ok) {
            out.certified = true;
            out.kernel = std::move(lifted);
            return out;
        }
    }
    return out;
}

}  // namespace cycmzv

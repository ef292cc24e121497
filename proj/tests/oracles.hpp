#pragma once

// Independent reference computations used by the unit and acceptance tests.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "cycmzv/cyclotomic.hpp"
#include "cycmzv/hpoly.hpp"
#include "cycmzv/index.hpp"
#include "cycmzv/primes.hpp"

namespace oracle {

using namespace cycmzv;

// Enumerates every tuple n > m_1 > ... > m_r > 0 (or >= for weak) directly.
inline void for_each_tuple(int r, int upper, bool weak, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> m(static_cast<std::size_t>(r));
    std::function<void(int, int)> rec = [&](int pos, int bound) {
        if (pos == r) {
            fn(m);
            return;
        }
        const int top = weak ? bound : bound - 1;
        for (int v = top; v >= 1; --v) {
            m[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, v);
        }
    };
    rec(0, weak ? upper - 1 : upper);
}

// z_n(k; zeta_n) by brute-force enumeration; [m] inverted by the generic field inverse.
inline CycloElem naive_z(const Index& k, int n, bool star) {
    CycloElem total(n);
    const int r = k.depth();
    if (r == 0) return CycloElem::one(n);
    for_each_tuple(r, n, star, [&](const std::vector<int>& m) {
        CycloElem term = CycloElem::one(n);
        for (int j = 0; j < r; ++j) {
            const int kj = k[static_cast<std::size_t>(j)];
            CycloElem qm(n);
            for (int t = 0; t < m[static_cast<std::size_t>(j)]; ++t) qm += CycloElem::zeta_power(n, t);
            term *= CycloElem::zeta_power(n, static_cast<long>(kj - 1) * m[static_cast<std::size_t>(j)]);
            term *= qm.inverse().pow(kj);
        }
        total += term;
    });
    return total;
}

// Truncated harmonic sum over Q: sum_{N >= m_1 > ... > m_r > 0} prod m_j^{-k_j} (>= for star).
inline Rational harmonic(const Index& k, int N, bool star) {
    Rational total = 0;
    if (k.empty()) return 1;
    for_each_tuple(k.depth(), N + 1, star, [&](const std::vector<int>& m) {
        Rational t = 1;
        for (int j = 0; j < k.depth(); ++j) {
            Integer d = 1;
            mpz_pow_ui(d.get_mpz_t(), Integer(m[static_cast<std::size_t>(j)]).get_mpz_t(),
                       static_cast<unsigned long>(k[static_cast<std::size_t>(j)]));
            t /= Rational(d);
        }
        total += t;
    });
    return total;
}

inline Rational harmonic(const HPoly& w, int N, bool star) {
    Rational total = 0;
    for (const auto& [m, c] : w.terms())
        if (m.hbar == 0) total += c * harmonic(m.index, N, star);
    return total;
}

// Truncated sum modulo p by enumeration.
inline std::uint64_t naive_fmzv(const Index& k, std::uint64_t p, bool star) {
    std::uint64_t total = 0;
    if (k.empty()) return 1 % p;
    for_each_tuple(k.depth(), static_cast<int>(p), star, [&](const std::vector<int>& m) {
        std::uint64_t t = 1;
        for (int j = 0; j < k.depth(); ++j)
            t = mul_mod(t, pow_mod(inv_mod(static_cast<std::uint64_t>(m[static_cast<std::size_t>(j)]), p),
                                   static_cast<std::uint64_t>(k[static_cast<std::size_t>(j)]), p),
                        p);
        total = (total + t) % p;
    });
    return total;
}

// Hoffman dual through the set of partial sums: the dual's partial sums in
// {1, ..., w-1} are the complement of the original's.
inline Index dual_by_partial_sums(const Index& k) {
    const int w = k.weight();
    std::vector<bool> cut(static_cast<std::size_t>(w), false);
    int s = 0;
    for (int j = 0; j + 1 < k.depth(); ++j) cut[static_cast<std::size_t>(s += k[static_cast<std::size_t>(j)])] = true;
    std::vector<int> parts;
    int last = 0;
    for (int pos = 1; pos < w; ++pos)
        if (!cut[static_cast<std::size_t>(pos)]) {
            parts.push_back(pos - last);
            last = pos;
        }
    parts.push_back(w - last);
    return Index(parts);
}

inline Index random_index(std::mt19937_64& rng, int max_weight, int min_weight = 0) {
    std::uniform_int_distribution<int> wd(min_weight, max_weight);
    const int w = wd(rng);
    if (w == 0) return Index{};
    std::uniform_int_distribution<std::size_t> cd(0, (std::size_t{1} << (w - 1)) - 1);
    return index_from_code(cd(rng), w);
}

inline Rational random_rational(std::mt19937_64& rng, int range = 9) {
    std::uniform_int_distribution<int> num(-range, range), den(1, range);
    return make_rational(num(rng), den(rng));
}

inline CycloElem random_elem(std::mt19937_64& rng, int n, int range = 9) {
    std::vector<Rational> c(static_cast<std::size_t>(euler_phi(n)));
    for (auto& x : c) x = random_rational(rng, range);
    return CycloElem::from_coeffs(n, c);
}

// Random hbar-free combination of up to `terms` words of weight <= max_weight.
inline HPoly random_hpoly(std::mt19937_64& rng, int max_weight, int terms, int min_weight = 0) {
    HPoly w;
    std::uniform_int_distribution<int> count(1, terms);
    for (int i = count(rng); i > 0; --i) w.add(random_index(rng, max_weight, min_weight), 0, random_rational(rng));
    return w;
}

}  // namespace oracle

#include "cycmzv/relations.hpp"

#include <algorithm>
#include <set>

#include "cycmzv/parallel.hpp"
#include "cycmzv/primes.hpp"
#include "cycmzv/qseries.hpp"
#include "cycmzv/residue.hpp"

namespace cycmzv {

HPoly duality_element(const Index& k) {
    HPoly e = HPoly::word(k);
    e -= HPoly::word(dual_reverse(k), k.weight() % 2 == 1 ? Rational(1) : Rational(-1));
    return e;
}

HPoly double_shuffle_element(const Index& u, const Index& v) {
    const HPoly eu = HPoly::word(u), ev = HPoly::word(v);
    return tilde_star(eu, ev) - delta(tilde_star(delta(eu), delta(ev)));
}

namespace {

std::vector<std::pair<Index, Index>> unordered_pairs(int k) {
    std::vector<std::pair<Index, Index>> out;
    for (int a = 1; 2 * a <= k; ++a) {
        const auto left = indices_of_weight(a);
        const auto right = indices_of_weight(k - a);
        for (std::size_t i = 0; i < left.size(); ++i)
            for (std::size_t j = (2 * a == k ? i : 0); j < right.size(); ++j) out.emplace_back(left[i], right[j]);
    }
    return out;
}

// Normalizes sign so that the first coefficient is positive.
HPoly sign_normalized(HPoly e) {
    if (!e.is_zero() && e.terms().begin()->second < 0) e *= Rational(-1);
    return e;
}

std::vector<HPoly> double_shuffle_family(int k, int jobs) {
    const auto pairs = unordered_pairs(k);
    return parallel_map(pairs, [](const auto& pr) { return double_shuffle_element(pr.first, pr.second); }, jobs);
}

}  // namespace

std::vector<HPoly> relation_family(int k, int jobs) {
    if (k < 1) throw Error("relation_family: weight must be >= 1");
    std::vector<HPoly> all;
    for (const auto& idx : indices_of_weight(k)) all.push_back(duality_element(idx));
    for (auto& e : double_shuffle_family(k, jobs)) all.push_back(std::move(e));
    std::vector<HPoly> out;
    std::set<std::vector<std::pair<Monomial, Rational>>> seen;
    for (auto& e : all) {
        if (e.is_zero()) continue;
        HPoly n = sign_normalized(e);
        // Scale so the leading coefficient is 1 to catch rational multiples.
        n *= Rational(1) / n.terms().begin()->second;
        std::vector<std::pair<Monomial, Rational>> key(n.terms().begin(), n.terms().end());
        if (seen.insert(std::move(key)).second) out.push_back(std::move(e));
    }
    return out;
}

DimensionRow dimension_upper_bound(int k, int jobs) {
    DimensionRow row;
    row.k = k;
    if (k < 0) throw Error("dimension_upper_bound: negative weight");
    if (k == 0) {
        row.num_indices = 1;
        row.upper_bound = 1;
        return row;
    }
    const auto idx = indices_of_weight(k);
    row.num_indices = idx.size();

    // Duality identifies e_k with +-e_{reverse(dual k)}; quotienting by it first
    // leaves one column per orbit (none for an orbit forced to zero).
    const int dual_sign = k % 2 == 1 ? 1 : -1;
    std::vector<long> column(idx.size(), -1);  // reduced column, or -1 if zero
    std::vector<int> sign(idx.size(), 1);
    std::size_t reduced_cols = 0, dual_rank = 0;
    for (std::size_t c = 0; c < idx.size(); ++c) {
        const std::size_t d = index_code(dual_reverse(idx[c]));
        if (d == c) {
            if (dual_sign == -1) {
                ++dual_rank;  // e_k = -e_k
            } else {
                column[c] = static_cast<long>(reduced_cols++);
            }
        } else if (d > c) {
            column[c] = static_cast<long>(reduced_cols++);
            column[d] = column[c];
            sign[d] = dual_sign;  // e_d = dual_sign * e_c
            ++dual_rank;
        }
    }

    const auto family = double_shuffle_family(k, jobs);
    std::vector<SparseRow> rows;
    std::set<SparseRow> seen;
    for (const auto& e : family) {
        std::map<std::size_t, Rational> acc;
        for (const auto& [m, c] : e.terms()) {
            if (m.hbar != 0 || m.index.weight() != k) throw Error("dimension_upper_bound: non-homogeneous relation");
            const std::size_t code = index_code(m.index);
            if (column[code] < 0) continue;
            acc[static_cast<std::size_t>(column[code])] += c * sign[code];
        }
        std::vector<std::pair<std::size_t, Rational>> sparse(acc.begin(), acc.end());
        SparseRow r = integer_row(sparse);
        if (r.empty()) continue;
        if (r.front().second < 0)
            for (auto& [c, x] : r) x = -x;
        if (seen.insert(r).second) rows.push_back(std::move(r));
    }
    const CertifiedRank cr = certified_rank(rows, reduced_cols);
    row.relation_rank = dual_rank + cr.rank;
    row.certified = cr.certified;
    row.upper_bound = row.num_indices - row.relation_rank;
    return row;
}

std::vector<DimensionRow> dimension_upper_bounds(int k_max, int jobs) {
    if (k_max < 0) throw Error("dimension_upper_bounds: k_max must be >= 0");
    std::vector<DimensionRow> out;
    for (int k = 0; k <= k_max; ++k) out.push_back(dimension_upper_bound(k, jobs));
    return out;
}

std::size_t observed_dimension(int k, int p) {
    if (k < 0) throw Error("observed_dimension: negative weight");
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) throw Error("observed_dimension: p must be prime");
    QSeriesEvaluator ev(p);
    RationalMatrix m;
    for (const auto& idx : indices_of_weight(k)) {
        const CycloElem v = ev.z(idx);
        std::vector<Rational> row(static_cast<std::size_t>(p - 1));
        for (std::size_t i = 0; i < row.size(); ++i) row[i] = v.coeff(static_cast<int>(i));
        m.append_row(row);
    }
    return rank_kernel(m).rank;
}

bool KerPhiReport::finite_image_zero() const {
    return std::all_of(primes.begin(), primes.end(),
                       [](const auto& e) { return e.second.finite_image != PrimeStatus::Nonzero; });
}

bool KerPhiReport::varpi_span_member() const {
    return std::all_of(primes.begin(), primes.end(), [](const auto& e) {
        return e.second.finite_image == PrimeStatus::Excluded || e.second.in_varpi_span;
    });
}

KerPhiReport ker_phi_probe(const HPoly& combo, const std::vector<std::uint64_t>& primes, int jobs) {
    if (!combo.hbar_free()) throw Error("ker_phi_probe: combination must be hbar-free");
    if (!combo.homogeneous()) throw Error("ker_phi_probe: combination must be homogeneous");
    KerPhiReport report;
    report.weight = combo.is_zero() ? 0 : *combo.total_weights().begin();
    const int w = report.weight;
    const auto results = parallel_map(primes, [&](std::uint64_t p) {
        KerPhiPrime r;
        try {
            if (!is_prime(p)) throw Error("ker_phi_probe: " + std::to_string(p) + " is not prime");
            QSeriesEvaluator ev(static_cast<int>(p));
            const ResidueVector value = reduce_mod(ev.z(combo), Ideal::Full);
            r.finite_image = value.prime_image().is_zero() ? PrimeStatus::Zero : PrimeStatus::Nonzero;
            ModEchelon ech(p - 1, p);
            const ResidueVector varpi = ResidueVector::varpi(p);
            if (w >= 1)
                for (const auto& idx : indices_of_weight(w - 1)) ech.add((varpi * reduce_mod(ev.z(idx), Ideal::Full)).coords);
            r.in_varpi_span = !ech.add(value.coords);
        } catch (const PrimeExcluded& e) {
            r.finite_image = PrimeStatus::Excluded;
            r.reason = e.what();
        }
        return r;
    }, jobs);
    for (std::size_t i = 0; i < primes.size(); ++i) report.primes[primes[i]] = results[i];
    return report;
}

}  // namespace cycmzv

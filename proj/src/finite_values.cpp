#include "cycmzv/finite_values.hpp"

#include <optional>

#include "cycmzv/parallel.hpp"
#include "cycmzv/primes.hpp"

namespace cycmzv {

AdelicValue AdelicValue::to_finite() const {
    AdelicValue out;
    out.ring = Ring::A;
    out.excluded = excluded;
    for (const auto& [p, v] : entries) out.entries.emplace(p, v.prime_image());
    return out;
}

bool AdelicValue::all_zero() const {
    for (const auto& [p, v] : entries)
        if (!v.is_zero()) return false;
    return true;
}

std::uint64_t fmzv_at(const Index& k, std::uint64_t p, SumMode mode) {
    if (!is_prime(p)) throw Error("fmzv: " + std::to_string(p) + " is not prime");
    if (k.empty()) return 1 % p;
    const auto inv = inverse_table(p);
    const auto& parts = k.parts();
    const std::size_t top = p;  // m ranges over 1..p-1
    // vals[m]: value of the sum over the current suffix with its first variable equal to m.
    std::vector<std::uint64_t> vals(top, 0);
    auto term = [&](int kk, std::uint64_t m) { return pow_mod(inv[m], static_cast<std::uint64_t>(kk), p); };
    for (std::uint64_t m = 1; m < top; ++m) vals[m] = term(parts.back(), m);
    for (int j = static_cast<int>(parts.size()) - 2; j >= 0; --j) {
        std::vector<std::uint64_t> next(top, 0);
        std::uint64_t running = 0;
        for (std::uint64_t m = 1; m < top; ++m) {
            if (mode == SumMode::Star) running = (running + vals[m]) % p;
            next[m] = mul_mod(term(parts[j], m), running, p);
            if (mode == SumMode::Plain) running = (running + vals[m]) % p;
        }
        vals = std::move(next);
    }
    std::uint64_t sum = 0;
    for (std::uint64_t m = 1; m < top; ++m) sum = (sum + vals[m]) % p;
    return sum;
}

namespace {

struct PerPrime {
    std::optional<ResidueVector> value;
    std::string reason;
};

AdelicValue assemble(Ring ring, const std::vector<std::uint64_t>& primes, const std::vector<PerPrime>& results) {
    AdelicValue out;
    out.ring = ring;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (results[i].value)
            out.entries.emplace(primes[i], *results[i].value);
        else
            out.excluded.emplace(primes[i], results[i].reason);
    }
    return out;
}

PerPrime fmzv_combo_at(const HPoly& w, std::uint64_t p, SumMode mode) {
    try {
        std::uint64_t acc = 0;
        for (const auto& [m, c] : w.terms()) {
            if (m.hbar > 0) continue;  // hbar -> varpi -> 0 in F_p
            const std::uint64_t cp = reduce_rational(c, p);
            acc = (acc + mul_mod(cp, fmzv_at(m.index, p, mode), p)) % p;
        }
        return {ResidueVector::scalar(p, Ideal::Prime, acc), {}};
    } catch (const PrimeExcluded& e) {
        return {std::nullopt, e.what()};
    }
}

}  // namespace

AdelicValue fmzv(const HPoly& w, const std::vector<std::uint64_t>& primes, SumMode mode, int jobs) {
    auto results = parallel_map(primes, [&](std::uint64_t p) { return fmzv_combo_at(w, p, mode); }, jobs);
    return assemble(Ring::A, primes, results);
}

AdelicValue fmzv(const Index& k, const std::vector<std::uint64_t>& primes, int jobs) {
    return fmzv(HPoly::word(k), primes, SumMode::Plain, jobs);
}

AdelicValue fmzv_star(const Index& k, const std::vector<std::uint64_t>& primes, int jobs) {
    return fmzv(HPoly::word(k), primes, SumMode::Star, jobs);
}

AdelicValue Z_cyc(const HPoly& w, const std::vector<std::uint64_t>& primes, SumMode mode, int jobs) {
    auto results = parallel_map(
        primes,
        [&](std::uint64_t p) -> PerPrime {
            if (!is_prime(p)) throw Error("Z_cyc: " + std::to_string(p) + " is not prime");
            try {
                QSeriesEvaluator ev(static_cast<int>(p));
                return {reduce_mod(ev.z(w, mode), Ideal::Full), {}};
            } catch (const PrimeExcluded& e) {
                return {std::nullopt, e.what()};
            }
        },
        jobs);
    return assemble(Ring::Acyc, primes, results);
}

bool RelationReport::holds() const { return count(PrimeStatus::Nonzero) == 0; }

std::size_t RelationReport::count(PrimeStatus s) const {
    std::size_t c = 0;
    for (const auto& [p, r] : primes)
        if (r.status == s) ++c;
    return c;
}

RelationReport verify_relation(const HPoly& combo, Ring ring, const std::vector<std::uint64_t>& primes,
                               SumMode mode, int jobs) {
    RelationReport report;
    report.ring = ring;
    report.mode = mode;
    report.homogeneous = combo.homogeneous();
    const AdelicValue value = ring == Ring::A ? fmzv(combo, primes, mode, jobs) : Z_cyc(combo, primes, mode, jobs);
    for (const auto& [p, v] : value.entries) {
        PrimeResult r;
        if (v.is_zero()) {
            r.status = PrimeStatus::Zero;
        } else {
            r.status = PrimeStatus::Nonzero;
            r.residue = v.coords;
        }
        report.primes.emplace(p, std::move(r));
    }
    for (const auto& [p, why] : value.excluded) report.primes.emplace(p, PrimeResult{PrimeStatus::Excluded, {}, why});
    return report;
}

std::string to_string(PrimeStatus s) {
    switch (s) {
        case PrimeStatus::Zero: return "zero";
        case PrimeStatus::Nonzero: return "nonzero";
        case PrimeStatus::Excluded: return "excluded";
    }
    return "unknown";
}

}  // namespace cycmzv

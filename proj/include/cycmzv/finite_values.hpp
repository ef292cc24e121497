#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cycmzv/hpoly.hpp"
#include "cycmzv/qseries.hpp"
#include "cycmzv/residue.hpp"

namespace cycmzv {

/// Which quotient a value lives in: the finite ring A (prod F_p) or its
/// cyclotomic analogue A^cyc (prod Z[zeta_p]/(p)).
enum class Ring { A, Acyc };

/// Values over an explicit window of primes, standing in for an element of
/// A or A^cyc. Primes that could not be evaluated are listed in `excluded`
/// with the reason; they never also appear in `entries`.
struct AdelicValue {
    Ring ring = Ring::A;
    std::map<std::uint64_t, ResidueVector> entries;
    std::map<std::uint64_t, std::string> excluded;

    /// Entry-wise phi: A^cyc -> A (zeta_p -> 1). Identity on A.
    AdelicValue to_finite() const;
    /// True when every non-excluded entry vanishes.
    bool all_zero() const;
};

/// Truncated harmonic sum of k modulo p, by direct prefix sums over F_p.
std::uint64_t fmzv_at(const Index& k, std::uint64_t p, SumMode mode = SumMode::Plain);

AdelicValue fmzv(const Index& k, const std::vector<std::uint64_t>& primes, int jobs = 0);
AdelicValue fmzv_star(const Index& k, const std::vector<std::uint64_t>& primes, int jobs = 0);
/// Linear extension to combinations; hbar maps to 0 in A.
AdelicValue fmzv(const HPoly& w, const std::vector<std::uint64_t>& primes, SumMode mode, int jobs = 0);

/// z_p(k; zeta_p) computed exactly in Q(zeta_p) and reduced modulo (p).
AdelicValue Z_cyc(const HPoly& w, const std::vector<std::uint64_t>& primes, SumMode mode = SumMode::Plain,
                  int jobs = 0);
inline AdelicValue Z_cyc(const Index& k, const std::vector<std::uint64_t>& primes, SumMode mode = SumMode::Plain,
                         int jobs = 0) {
    return Z_cyc(HPoly::word(k), primes, mode, jobs);
}

enum class PrimeStatus { Zero, Nonzero, Excluded };

struct PrimeResult {
    PrimeStatus status = PrimeStatus::Zero;
    std::vector<std::uint64_t> residue;  // set for Nonzero
    std::string reason;                  // set for Excluded
};

struct RelationReport {
    Ring ring = Ring::A;
    SumMode mode = SumMode::Plain;
    bool homogeneous = true;
    std::map<std::uint64_t, PrimeResult> primes;

    /// No nonzero prime (excluded primes do not count against the relation).
    bool holds() const;
    std::size_t count(PrimeStatus s) const;
};

/// Evaluates an hbar-free combination at each prime in the chosen ring and
/// records zero/nonzero/excluded per prime.
RelationReport verify_relation(const HPoly& combo, Ring ring, const std::vector<std::uint64_t>& primes,
                               SumMode mode, int jobs = 0);

std::string to_string(PrimeStatus s);

}  // namespace cycmzv

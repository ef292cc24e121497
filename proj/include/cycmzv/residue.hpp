#pragma once

#include <cstdint>
#include <vector>

#include "cycmzv/cyclotomic.hpp"

namespace cycmzv {

/// Raised when a value cannot be reduced at a prime because p divides a
/// denominator. Callers sweeping over primes record the prime as excluded.
class PrimeExcluded : public Error {
public:
    PrimeExcluded(std::uint64_t prime, const std::string& what) : Error(what), prime_(prime) {}
    std::uint64_t prime() const { return prime_; }

private:
    std::uint64_t prime_;
};

enum class Ideal {
    Full,   // (p): Z[zeta_p]/(p), p-1 coordinates over F_p
    Prime,  // p_p = (1 - zeta_p): Z[zeta_p]/p_p = F_p, one coordinate
};

/// An element of Z[zeta_p]/(p) (power basis 1, zeta, ..., zeta^{p-2}) or of F_p.
struct ResidueVector {
    std::uint64_t prime = 2;
    Ideal ideal = Ideal::Full;
    std::vector<std::uint64_t> coords;

    static ResidueVector zero(std::uint64_t p, Ideal ideal);
    static ResidueVector scalar(std::uint64_t p, Ideal ideal, std::uint64_t value);
    /// 1 - zeta_p in the (p) quotient.
    static ResidueVector varpi(std::uint64_t p);

    bool is_zero() const;
    /// Image under Z[zeta_p]/(p) -> F_p (zeta -> 1).
    ResidueVector prime_image() const;

    ResidueVector& operator+=(const ResidueVector& o);
    ResidueVector& operator-=(const ResidueVector& o);
    ResidueVector& operator*=(const ResidueVector& o);
    ResidueVector& scale(std::uint64_t s);

    friend bool operator==(const ResidueVector&, const ResidueVector&) = default;
};

ResidueVector operator+(ResidueVector a, const ResidueVector& b);
ResidueVector operator-(ResidueVector a, const ResidueVector& b);
ResidueVector operator*(ResidueVector a, const ResidueVector& b);

/// Image of q in F_p; throws PrimeExcluded if p divides the denominator.
std::uint64_t reduce_rational(const Rational& q, std::uint64_t p);

/// Reduces an element of Q(zeta_p) (level must be the prime p) modulo (p)
/// or modulo p_p. Throws PrimeExcluded if p divides the common denominator.
ResidueVector reduce_mod(const CycloElem& elem, Ideal ideal);

}  // namespace cycmzv

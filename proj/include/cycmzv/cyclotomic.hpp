#pragma once

#include <memory>
#include <span>
#include <vector>

#include "cycmzv/bigfloat.hpp"
#include "cycmzv/rational.hpp"

namespace cycmzv {

/// Dense integer polynomial, entry i is the coefficient of x^i.
using IntPoly = std::vector<Integer>;

class LevelMismatch : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// Phi_n(x), obtained by dividing x^n - 1 by Phi_d for every proper divisor d of n.
IntPoly cyclotomic_poly(int n);

namespace detail {
struct CycloLevel;
}

/// An element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^{phi(n)-1}.
///
/// Stored as integer numerators over one positive common denominator, kept
/// in lowest terms (gcd of denominator and all numerators is 1) after every
/// operation.
class CycloElem {
public:
    explicit CycloElem(int level);

    static CycloElem from_rational(int level, const Rational& q);
    static CycloElem one(int level) { return from_rational(level, Rational(1)); }
    /// zeta_n^e for any integer e (reduced mod n).
    static CycloElem zeta_power(int level, long e);
    /// poly / den with poly of any length, reduced modulo Phi_n.
    static CycloElem from_poly(int level, std::vector<Integer> poly, Integer den = Integer(1));
    /// coeffs.size() must equal phi(level).
    static CycloElem from_coeffs(int level, std::span<const Rational> coeffs);

    int level() const;
    /// phi(level), the number of power-basis coordinates.
    int degree() const;

    std::vector<Rational> coeffs() const;
    Rational coeff(int i) const;
    const std::vector<Integer>& numerators() const { return num_; }
    const Integer& denominator() const { return den_; }

    bool is_zero() const;
    bool is_rational() const;

    CycloElem& operator+=(const CycloElem& o);
    CycloElem& operator-=(const CycloElem& o);
    CycloElem& operator*=(const CycloElem& o);
    CycloElem& operator/=(const CycloElem& o);
    CycloElem& operator*=(const Rational& s);
    CycloElem operator-() const;

    /// Multiplicative inverse via the extended Euclidean algorithm against Phi_n.
    CycloElem inverse() const;
    /// Negative exponents go through inverse().
    CycloElem pow(long e) const;
    /// The automorphism zeta -> zeta^a; gcd(a, n) must be 1.
    CycloElem galois(long a) const;
    CycloElem times_zeta_power(long e) const;

    friend bool operator==(const CycloElem& a, const CycloElem& b);

private:
    void normalize();
    void check_level(const CycloElem& o) const;

    std::shared_ptr<const detail::CycloLevel> ctx_;
    std::vector<Integer> num_;
    Integer den_{1};
};

CycloElem operator+(CycloElem a, const CycloElem& b);
CycloElem operator-(CycloElem a, const CycloElem& b);
CycloElem operator*(CycloElem a, const CycloElem& b);
CycloElem operator/(CycloElem a, const CycloElem& b);
CycloElem operator*(CycloElem a, const Rational& s);
CycloElem operator*(const Rational& s, CycloElem a);

/// [m]_{zeta_n} = 1 + zeta_n + ... + zeta_n^{m-1}; requires 1 <= m < n.
CycloElem q_integer(int m, int n);

/// 1 - zeta_n.
CycloElem one_minus_zeta(int n);

/// 1/(1 - zeta_n^m) for n not dividing m, using
/// 1/(1 - w) = -(1/d) sum_{j=1}^{d-1} j w^j for w a primitive d-th root of unity.
CycloElem inverse_one_minus_zeta_power(int n, long m);

/// Extra working bits used by embed_complex beyond the requested precision.
inline constexpr mpfr_prec_t kEmbedGuardBits = 32;

/// Substitutes zeta_n -> exp(2 pi i * root_exponent / n). The sum is formed
/// with precision + kEmbedGuardBits working bits and rounded to `precision`.
BigComplex embed_complex(const CycloElem& elem, long root_exponent, mpfr_prec_t precision);

}  // namespace cycmzv

#pragma once

#include <mpfr.h>

#include <string>

#include "cycmzv/rational.hpp"

namespace cycmzv {

/// Owning wrapper around an mpfr_t. Binary operations round to the larger
/// of the two operand precisions (round-to-nearest).
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t bits = 128);
    BigFloat(double value, mpfr_prec_t bits);
    BigFloat(long value, mpfr_prec_t bits);
    BigFloat(const Rational& value, mpfr_prec_t bits);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
    mpfr_srcptr get() const { return value_; }
    mpfr_ptr get() { return value_; }

    static BigFloat pi(mpfr_prec_t bits);

    BigFloat& operator+=(const BigFloat& o);
    BigFloat& operator-=(const BigFloat& o);
    BigFloat& operator*=(const BigFloat& o);
    BigFloat& operator/=(const BigFloat& o);

    BigFloat operator-() const;

    double to_double() const;
    long double to_long_double() const;
    /// Scientific notation with the given number of significant digits.
    std::string to_string(int digits) const;
    bool is_zero() const { return mpfr_zero_p(value_) != 0; }

private:
    mpfr_t value_;
};

BigFloat operator+(BigFloat a, const BigFloat& b);
BigFloat operator-(BigFloat a, const BigFloat& b);
BigFloat operator*(BigFloat a, const BigFloat& b);
BigFloat operator/(BigFloat a, const BigFloat& b);
bool operator<(const BigFloat& a, const BigFloat& b);
bool operator>(const BigFloat& a, const BigFloat& b);

BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat abs(const BigFloat& x);
BigFloat pow_int(const BigFloat& x, long e);

struct BigComplex {
    BigFloat re;
    BigFloat im;

    explicit BigComplex(mpfr_prec_t bits = 128) : re(bits), im(bits) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    mpfr_prec_t precision() const { return re.precision(); }

    /// e^{i*angle}
    static BigComplex polar_unit(const BigFloat& angle);

    BigComplex& operator+=(const BigComplex& o);
    BigComplex& operator-=(const BigComplex& o);
    BigComplex& operator*=(const BigComplex& o);
    BigComplex& operator*=(const BigFloat& s);
    BigComplex& operator/=(const BigComplex& o);

    BigComplex conj() const { return BigComplex(re, -im); }
    BigFloat norm() const;  // |z|^2
    BigFloat abs() const;
};

BigComplex operator+(BigComplex a, const BigComplex& b);
BigComplex operator-(BigComplex a, const BigComplex& b);
BigComplex operator*(BigComplex a, const BigComplex& b);
BigComplex operator*(BigComplex a, const BigFloat& s);
BigComplex operator/(BigComplex a, const BigComplex& b);
BigComplex pow_int(const BigComplex& z, unsigned e);

}  // namespace cycmzv

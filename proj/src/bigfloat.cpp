#include "cycmzv/bigfloat.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace cycmzv {

namespace {
constexpr mpfr_rnd_t kRnd = MPFR_RNDN;
}  // namespace

BigFloat::BigFloat(mpfr_prec_t bits) {
    mpfr_init2(value_, bits);
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(double value, mpfr_prec_t bits) {
    mpfr_init2(value_, bits);
    mpfr_set_d(value_, value, kRnd);
}

BigFloat::BigFloat(long value, mpfr_prec_t bits) {
    mpfr_init2(value_, bits);
    mpfr_set_si(value_, value, kRnd);
}

BigFloat::BigFloat(const Rational& value, mpfr_prec_t bits) {
    mpfr_init2(value_, bits);
    mpfr_set_q(value_, value.get_mpq_t(), kRnd);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, kRnd);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(value_, other.precision());
    mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(value_, other.precision());
        mpfr_set(value_, other.value_, kRnd);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    if (this != &other) mpfr_swap(value_, other.value_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::pi(mpfr_prec_t bits) {
    BigFloat r(bits);
    mpfr_const_pi(r.value_, kRnd);
    return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
    if (o.precision() > precision()) mpfr_prec_round(value_, o.precision(), kRnd);
    mpfr_add(value_, value_, o.value_, kRnd);
    return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
    if (o.precision() > precision()) mpfr_prec_round(value_, o.precision(), kRnd);
    mpfr_sub(value_, value_, o.value_, kRnd);
    return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
    if (o.precision() > precision()) mpfr_prec_round(value_, o.precision(), kRnd);
    mpfr_mul(value_, value_, o.value_, kRnd);
    return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
    if (o.precision() > precision()) mpfr_prec_round(value_, o.precision(), kRnd);
    mpfr_div(value_, value_, o.value_, kRnd);
    return *this;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(*this);
    mpfr_neg(r.value_, r.value_, kRnd);
    return r;
}

double BigFloat::to_double() const { return mpfr_get_d(value_, kRnd); }

long double BigFloat::to_long_double() const { return mpfr_get_ld(value_, kRnd); }

std::string BigFloat::to_string(int digits) const {
    std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, value_);
    return std::string(buf.data());
}

BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.get(), b.get()) != 0; }

BigFloat sin(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_sin(r.get(), x.get(), kRnd);
    return r;
}

BigFloat cos(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_cos(r.get(), x.get(), kRnd);
    return r;
}

BigFloat log(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_log(r.get(), x.get(), kRnd);
    return r;
}

BigFloat sqrt(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_sqrt(r.get(), x.get(), kRnd);
    return r;
}

BigFloat abs(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_abs(r.get(), x.get(), kRnd);
    return r;
}

BigFloat pow_int(const BigFloat& x, long e) {
    BigFloat r(x.precision());
    mpfr_pow_si(r.get(), x.get(), e, kRnd);
    return r;
}

BigComplex BigComplex::polar_unit(const BigFloat& angle) {
    BigComplex z(angle.precision());
    mpfr_sin_cos(z.im.get(), z.re.get(), angle.get(), kRnd);
    return z;
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
    BigFloat r = re * o.re - im * o.im;
    BigFloat i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

BigComplex& BigComplex::operator*=(const BigFloat& s) {
    re *= s;
    im *= s;
    return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
    BigFloat d = o.norm();
    BigFloat r = (re * o.re + im * o.im) / d;
    BigFloat i = (im * o.re - re * o.im) / d;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

BigFloat BigComplex::norm() const { return re * re + im * im; }

BigFloat BigComplex::abs() const {
    BigFloat r(precision());
    mpfr_hypot(r.get(), re.get(), im.get(), kRnd);
    return r;
}

BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
BigComplex operator*(BigComplex a, const BigFloat& s) { return a *= s; }
BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }

BigComplex pow_int(const BigComplex& z, unsigned e) {
    BigComplex result(BigFloat(1L, z.precision()), BigFloat(z.precision()));
    BigComplex base = z;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

}  // namespace cycmzv

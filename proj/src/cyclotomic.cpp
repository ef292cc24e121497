#include "cycmzv/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <utility>

#include "cycmzv/primes.hpp"

namespace cycmzv {

namespace detail {

struct CycloLevel {
    int n = 1;
    int phi = 1;
    IntPoly cyclo;                                   // monic, degree phi
    std::vector<std::pair<int, Integer>> tail;       // nonzero (j, Phi_j) for j < phi

    // Reduces `poly` (any length) modulo Phi_n in place and truncates it to phi entries.
    void reduce(std::vector<Integer>& poly) const {
        for (int i = static_cast<int>(poly.size()) - 1; i >= phi; --i) {
            if (poly[i] == 0) continue;
            const Integer c = poly[i];
            for (const auto& [j, coef] : tail) poly[i - phi + j] -= c * coef;
            poly[i] = 0;
        }
        poly.resize(phi);
    }
};

}  // namespace detail

namespace {

std::mutex g_poly_mutex;
std::map<int, IntPoly> g_poly_cache;

std::mutex g_level_mutex;
std::map<int, std::shared_ptr<const detail::CycloLevel>> g_levels;

// Exact division of `num` by the monic `den`; the remainder must vanish.
IntPoly divide_exact(const IntPoly& num, const IntPoly& den) {
    const int dn = static_cast<int>(den.size()) - 1;
    IntPoly rem = num;
    const int nn = static_cast<int>(num.size()) - 1;
    IntPoly quot(static_cast<std::size_t>(nn - dn + 1));
    std::vector<std::pair<int, Integer>> nz;
    for (int j = 0; j < dn; ++j)
        if (den[j] != 0) nz.emplace_back(j, den[j]);
    for (int i = nn; i >= dn; --i) {
        if (rem[i] == 0) continue;
        Integer c = rem[i];
        quot[i - dn] = c;
        for (const auto& [j, coef] : nz) rem[i - dn + j] -= c * coef;
        rem[i] = 0;
    }
    return quot;
}

std::shared_ptr<const detail::CycloLevel> level_context(int n) {
    if (n < 1) throw Error("cyclotomic level must be >= 1");
    {
        std::lock_guard lock(g_level_mutex);
        auto it = g_levels.find(n);
        if (it != g_levels.end()) return it->second;
    }
    auto ctx = std::make_shared<detail::CycloLevel>();
    ctx->n = n;
    ctx->cyclo = cyclotomic_poly(n);
    ctx->phi = static_cast<int>(ctx->cyclo.size()) - 1;
    for (int j = 0; j < ctx->phi; ++j)
        if (ctx->cyclo[j] != 0) ctx->tail.emplace_back(j, ctx->cyclo[j]);
    std::lock_guard lock(g_level_mutex);
    auto [it, inserted] = g_levels.emplace(n, std::move(ctx));
    return it->second;
}

long mod_n(long e, long n) {
    long r = e % n;
    return r < 0 ? r + n : r;
}

// Polynomials over Q for the extended Euclidean algorithm.
using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
    trim(a);
    const int db = static_cast<int>(b.size()) - 1;
    if (static_cast<int>(a.size()) - 1 < db) return {QPoly{}, a};
    QPoly q(a.size() - b.size() + 1);
    const Rational lead = b.back();
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        if (a[i] == 0) continue;
        Rational c = a[i] / lead;
        q[i - db] = c;
        for (int j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    trim(a);
    trim(q);
    return {q, a};
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

}  // namespace

IntPoly cyclotomic_poly(int n) {
    if (n < 1) throw Error("cyclotomic_poly: n must be >= 1");
    {
        std::lock_guard lock(g_poly_mutex);
        auto it = g_poly_cache.find(n);
        if (it != g_poly_cache.end()) return it->second;
    }
    IntPoly p(static_cast<std::size_t>(n) + 1);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d == 0) p = divide_exact(p, cyclotomic_poly(d));
    }
    std::lock_guard lock(g_poly_mutex);
    g_poly_cache.emplace(n, p);
    return p;
}

CycloElem::CycloElem(int level) : ctx_(level_context(level)), num_(ctx_->phi) {}

CycloElem CycloElem::from_rational(int level, const Rational& q) {
    CycloElem e(level);
    e.num_[0] = q.get_num();
    e.den_ = q.get_den();
    return e;
}

CycloElem CycloElem::zeta_power(int level, long e) {
    CycloElem r(level);
    const long k = mod_n(e, level);
    std::vector<Integer> poly(static_cast<std::size_t>(std::max<long>(k + 1, r.ctx_->phi)));
    poly[k] = 1;
    r.ctx_->reduce(poly);
    r.num_ = std::move(poly);
    return r;
}

CycloElem CycloElem::from_poly(int level, std::vector<Integer> poly, Integer den) {
    if (den == 0) throw DivisionByZero("from_poly: zero denominator");
    CycloElem r(level);
    if (static_cast<int>(poly.size()) < r.ctx_->phi) poly.resize(r.ctx_->phi);
    r.ctx_->reduce(poly);
    r.num_ = std::move(poly);
    r.den_ = std::move(den);
    r.normalize();
    return r;
}

CycloElem CycloElem::from_coeffs(int level, std::span<const Rational> coeffs) {
    CycloElem r(level);
    if (static_cast<int>(coeffs.size()) != r.ctx_->phi)
        throw Error("from_coeffs: expected phi(n) coefficients");
    Integer den = 1;
    for (const auto& c : coeffs) den = lcm(den, Integer(c.get_den()));
    for (int i = 0; i < r.ctx_->phi; ++i) {
        const Rational& c = coeffs[i];
        r.num_[i] = c.get_num() * (den / c.get_den());
    }
    r.den_ = den;
    r.normalize();
    return r;
}

int CycloElem::level() const { return ctx_->n; }
int CycloElem::degree() const { return ctx_->phi; }

std::vector<Rational> CycloElem::coeffs() const {
    std::vector<Rational> out;
    out.reserve(num_.size());
    for (const auto& c : num_) out.push_back(make_rational(c, den_));
    return out;
}

Rational CycloElem::coeff(int i) const { return make_rational(num_.at(i), den_); }

bool CycloElem::is_zero() const {
    for (const auto& c : num_)
        if (c != 0) return false;
    return true;
}

bool CycloElem::is_rational() const {
    for (std::size_t i = 1; i < num_.size(); ++i)
        if (num_[i] != 0) return false;
    return true;
}

void CycloElem::normalize() {
    if (den_ < 0) {
        den_ = -den_;
        for (auto& c : num_) c = -c;
    }
    Integer g = den_;
    for (const auto& c : num_) {
        if (g == 1) break;
        if (c != 0) g = gcd(g, c);
    }
    if (is_zero()) g = den_;
    if (g != 1) {
        for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

void CycloElem::check_level(const CycloElem& o) const {
    if (ctx_->n != o.ctx_->n)
        throw LevelMismatch("cyclotomic level mismatch: " + std::to_string(ctx_->n) + " vs " +
                            std::to_string(o.ctx_->n));
}

CycloElem& CycloElem::operator+=(const CycloElem& o) {
    check_level(o);
    if (den_ == o.den_) {
        for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += o.num_[i];
    } else {
        for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * o.den_ + o.num_[i] * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& o) {
    check_level(o);
    if (den_ == o.den_) {
        for (std::size_t i = 0; i < num_.size(); ++i) num_[i] -= o.num_[i];
    } else {
        for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * o.den_ - o.num_[i] * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

CycloElem& CycloElem::operator*=(const CycloElem& o) {
    check_level(o);
    const int phi = ctx_->phi;
    std::vector<Integer> prod(static_cast<std::size_t>(2 * phi - 1));
    for (int i = 0; i < phi; ++i) {
        if (num_[i] == 0) continue;
        for (int j = 0; j < phi; ++j) {
            if (o.num_[j] == 0) continue;
            mpz_addmul(prod[i + j].get_mpz_t(), num_[i].get_mpz_t(), o.num_[j].get_mpz_t());
        }
    }
    ctx_->reduce(prod);
    num_ = std::move(prod);
    den_ *= o.den_;
    normalize();
    return *this;
}

CycloElem& CycloElem::operator*=(const Rational& s) {
    for (auto& c : num_) c *= s.get_num();
    den_ *= s.get_den();
    normalize();
    return *this;
}

CycloElem& CycloElem::operator/=(const CycloElem& o) { return *this *= o.inverse(); }

CycloElem CycloElem::operator-() const {
    CycloElem r(*this);
    for (auto& c : r.num_) c = -c;
    return r;
}

CycloElem CycloElem::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(ctx_->n) + ")");
    QPoly a;
    for (const auto& c : num_) a.push_back(make_rational(c, den_));
    trim(a);
    QPoly r0;
    for (const auto& c : ctx_->cyclo) r0.push_back(Rational(c));
    QPoly r1 = a;
    QPoly s0;
    QPoly s1{Rational(1)};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        QPoly s2 = sub(s0, mul(q, s1));
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant because Phi_n is irreducible.
    const Rational c = r0.at(0);
    std::vector<Rational> coeffs(ctx_->phi);
    for (std::size_t i = 0; i < s0.size() && i < coeffs.size(); ++i) coeffs[i] = s0[i] / c;
    return from_coeffs(ctx_->n, coeffs);
}

CycloElem CycloElem::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycloElem result = one(ctx_->n);
    CycloElem base = *this;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

CycloElem CycloElem::galois(long a) const {
    const long n = ctx_->n;
    if (std::gcd(mod_n(a, n), n) != 1) throw Error("galois: exponent not coprime to level");
    std::vector<Integer> poly(static_cast<std::size_t>(std::max<long>(n, ctx_->phi)));
    for (int j = 0; j < ctx_->phi; ++j) {
        if (num_[j] == 0) continue;
        poly[mod_n(a * j, n)] += num_[j];
    }
    CycloElem r(ctx_->n);
    ctx_->reduce(poly);
    r.num_ = std::move(poly);
    r.den_ = den_;
    r.normalize();
    return r;
}

CycloElem CycloElem::times_zeta_power(long e) const {
    const long n = ctx_->n;
    const long k = mod_n(e, n);
    std::vector<Integer> poly(static_cast<std::size_t>(ctx_->phi + k));
    for (int j = 0; j < ctx_->phi; ++j) poly[j + k] = num_[j];
    CycloElem r(ctx_->n);
    ctx_->reduce(poly);
    r.num_ = std::move(poly);
    r.den_ = den_;
    return r;
}

bool operator==(const CycloElem& a, const CycloElem& b) {
    return a.ctx_->n == b.ctx_->n && a.den_ == b.den_ && a.num_ == b.num_;
}

CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
CycloElem operator*(CycloElem a, const CycloElem& b) { return a *= b; }
CycloElem operator/(CycloElem a, const CycloElem& b) { return a /= b; }
CycloElem operator*(CycloElem a, const Rational& s) { return a *= s; }
CycloElem operator*(const Rational& s, CycloElem a) { return a *= s; }

CycloElem q_integer(int m, int n) {
    if (m <= 0 || m >= n) throw Error("q_integer: need 1 <= m < n");
    CycloElem r(n);
    for (int j = 0; j < m; ++j) r += CycloElem::zeta_power(n, j);
    return r;
}

CycloElem one_minus_zeta(int n) { return CycloElem::one(n) - CycloElem::zeta_power(n, 1); }

CycloElem inverse_one_minus_zeta_power(int n, long m) {
    const long k = mod_n(m, n);
    if (k == 0) throw DivisionByZero("1 - zeta^m vanishes when n divides m");
    const long d = n / std::gcd<long>(k, n);
    std::vector<Integer> poly(static_cast<std::size_t>(n));
    for (long j = 1; j < d; ++j) poly[mod_n(j * k, n)] -= j;
    return CycloElem::from_poly(n, std::move(poly), Integer(d));
}

BigComplex embed_complex(const CycloElem& elem, long root_exponent, mpfr_prec_t precision) {
    const long n = elem.level();
    if (std::gcd(mod_n(root_exponent, n), n) != 1)
        throw Error("embed_complex: root exponent must be coprime to the level");
    const mpfr_prec_t work = precision + kEmbedGuardBits;
    const BigFloat two_pi = BigFloat::pi(work) * BigFloat(2L, work);
    BigComplex sum(work);
    const Integer& den = elem.denominator();
    const auto& num = elem.numerators();
    for (int j = 0; j < elem.degree(); ++j) {
        if (num[j] == 0) continue;
        const long e = mod_n(root_exponent * j, n);
        BigComplex w = BigComplex::polar_unit(two_pi * BigFloat(e, work) / BigFloat(n, work));
        w *= BigFloat(Rational(num[j]), work);
        sum += w;
    }
    sum *= BigFloat(1L, work) / BigFloat(Rational(den), work);
    BigComplex out(precision);
    mpfr_set(out.re.get(), sum.re.get(), MPFR_RNDN);
    mpfr_set(out.im.get(), sum.im.get(), MPFR_RNDN);
    return out;
}

}  // namespace cycmzv

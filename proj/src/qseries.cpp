#include "cycmzv/qseries.hpp"

namespace cycmzv {

QSeriesEvaluator::QSeriesEvaluator(int n) : n_(n), one_minus_zeta_(one_minus_zeta(n)) {
    if (n < 1) throw Error("level must be >= 1");
    inv_qint_.reserve(static_cast<std::size_t>(n));
    inv_qint_.emplace_back(n);
    for (int m = 1; m < n; ++m) inv_qint_.push_back(one_minus_zeta_ * inverse_one_minus_zeta_power(n, m));
}

const std::vector<CycloElem>& QSeriesEvaluator::term(int k) {
    auto it = terms_.find(k);
    if (it != terms_.end()) return it->second;
    std::vector<CycloElem> t;
    t.reserve(static_cast<std::size_t>(n_));
    t.emplace_back(n_);
    for (int m = 1; m < n_; ++m) {
        CycloElem v = inv_qint_[m].pow(k);
        t.push_back(v.times_zeta_power(static_cast<long>(k - 1) * m));
    }
    return terms_.emplace(k, std::move(t)).first->second;
}

const std::vector<CycloElem>& QSeriesEvaluator::suffix_terms(const Index& suffix, SumMode mode) {
    const auto key = std::make_pair(suffix, mode);
    auto it = suffixes_.find(key);
    if (it != suffixes_.end()) return it->second;

    const auto& parts = suffix.parts();
    const std::vector<CycloElem>& head = term(parts.front());
    std::vector<CycloElem> out;
    if (parts.size() == 1) {
        out = head;
    } else {
        const Index tail(std::vector<int>(parts.begin() + 1, parts.end()));
        const std::vector<CycloElem>& inner = suffix_terms(tail, mode);
        out.reserve(static_cast<std::size_t>(n_));
        out.emplace_back(n_);
        CycloElem running(n_);  // sum of inner over m' < m (Plain) or m' <= m (Star)
        for (int m = 1; m < n_; ++m) {
            if (mode == SumMode::Star) running += inner[m];
            out.push_back(running.is_zero() ? CycloElem(n_) : head[m] * running);
            if (mode == SumMode::Plain) running += inner[m];
        }
    }
    return suffixes_.emplace(key, std::move(out)).first->second;
}

CycloElem QSeriesEvaluator::z(const Index& k, SumMode mode) {
    if (k.empty()) return CycloElem::one(n_);
    if (mode == SumMode::Plain && k.depth() >= n_) return CycloElem(n_);
    const auto& vals = suffix_terms(k, mode);
    CycloElem sum(n_);
    for (int m = 1; m < n_; ++m) sum += vals[m];
    return sum;
}

CycloElem QSeriesEvaluator::z(const HPoly& w, SumMode mode) {
    CycloElem sum(n_);
    for (const auto& [mono, c] : w.terms()) {
        CycloElem v = z(mono.index, mode);
        if (mono.hbar) v *= one_minus_zeta_.pow(mono.hbar);
        sum += v * c;
    }
    return sum;
}

CycloElem z_exact(const Index& k, int n) { return QSeriesEvaluator(n).z(k, SumMode::Plain); }
CycloElem z_star_exact(const Index& k, int n) { return QSeriesEvaluator(n).z(k, SumMode::Star); }
CycloElem z_hpoly_exact(const HPoly& w, int n, SumMode mode) { return QSeriesEvaluator(n).z(w, mode); }

Rational evaluate(const RationalPoly& p, const Rational& x) {
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

namespace {

RationalPoly poly_mul(const RationalPoly& a, const RationalPoly& b) {
    if (a.empty() || b.empty()) return {};
    RationalPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

void poly_add(RationalPoly& a, const RationalPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
}

Rational factorial(int k) {
    Integer f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return Rational(f);
}

}  // namespace

RationalPoly depth_one_poly(int k) {
    if (k <= 0) throw Error("depth_one_poly: k must be >= 1");
    // Series in z with polynomial-in-x coefficients; index = power of z.
    using Series = std::vector<RationalPoly>;
    Series neg_h(static_cast<std::size_t>(k) + 1);
    for (int j = 1; j <= k; ++j) {
        RationalPoly h{Rational(1)};
        for (int a = 1; a <= j; ++a) h = poly_mul(h, RationalPoly{Rational(-a), Rational(1)});
        for (auto& c : h) c = -c / factorial(j + 1);
        neg_h[j] = h;
    }
    // h_j has no constant term in z, so powers beyond l = k do not reach z^k.
    Series power(static_cast<std::size_t>(k) + 1);
    power[0] = RationalPoly{Rational(1)};
    RationalPoly acc;
    for (int l = 1; l <= k; ++l) {
        Series next(static_cast<std::size_t>(k) + 1);
        for (int i = 0; i <= k; ++i) {
            if (power[i].empty()) continue;
            for (int j = 1; i + j <= k; ++j) poly_add(next[i + j], poly_mul(power[i], neg_h[j]));
        }
        power = std::move(next);
        poly_add(acc, power[k]);
    }
    for (auto& c : acc) c = -c;
    while (!acc.empty() && acc.back() == 0) acc.pop_back();
    return acc;
}

Rational gregory(int k) {
    if (k < 0) throw Error("gregory: k must be >= 0");
    // log(1+z)/z = sum_j (-1)^j z^j / (j+1); invert the series.
    std::vector<Rational> a(static_cast<std::size_t>(k) + 1);
    for (int j = 0; j <= k; ++j) a[j] = make_rational(j % 2 ? -1 : 1, j + 1);
    std::vector<Rational> g(static_cast<std::size_t>(k) + 1);
    g[0] = 1;
    for (int i = 1; i <= k; ++i) {
        Rational s = 0;
        for (int j = 1; j <= i; ++j) s += a[j] * g[i - j];
        g[i] = -s;
    }
    return g[k];
}

Rational degenerate_bernoulli_value(int k, int n) {
    if (k < 1 || n < 1) throw Error("degenerate_bernoulli_value: k, n must be >= 1");
    Integer nk;
    mpz_ui_pow_ui(nk.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return -factorial(k) * evaluate(depth_one_poly(k), Rational(n)) / Rational(nk);
}

}  // namespace cycmzv

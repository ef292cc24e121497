#include "cycmzv/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>

#include "cycmzv/parallel.hpp"

namespace cycmzv {

namespace {

mpfr_prec_t work_precision(mpfr_prec_t precision, int n) {
    mpfr_prec_t bits = 0;
    for (int v = n; v > 0; v >>= 1) ++bits;
    return precision + 32 + bits;
}

BigComplex round_to(const BigComplex& z, mpfr_prec_t precision) {
    BigComplex out(precision);
    mpfr_set(out.re.get(), z.re.get(), MPFR_RNDN);
    mpfr_set(out.im.get(), z.im.get(), MPFR_RNDN);
    return out;
}

BigComplex complex_one(mpfr_prec_t bits) { return BigComplex(BigFloat(1L, bits), BigFloat(bits)); }

// sin(m pi / n) for m = 0..limit.
std::vector<BigFloat> sine_table(int n, int limit, mpfr_prec_t bits) {
    const BigFloat pi = BigFloat::pi(bits);
    std::vector<BigFloat> s;
    s.reserve(static_cast<std::size_t>(limit) + 1);
    for (int m = 0; m <= limit; ++m) s.push_back(sin(pi * BigFloat(static_cast<long>(m), bits) / BigFloat(static_cast<long>(n), bits)));
    return s;
}

using TermFn = std::function<const std::vector<BigComplex>&(int)>;

// Nested sum over limit >= m_1 (>|>=) m_2 ... > 0 of prod term(k_j)[m_j].
BigComplex nested_sum(const std::vector<int>& parts, int limit, const TermFn& term, SumMode mode, mpfr_prec_t bits) {
    if (parts.empty()) return complex_one(bits);
    std::vector<BigComplex> vals = term(parts.back());
    for (int j = static_cast<int>(parts.size()) - 2; j >= 0; --j) {
        const auto& head = term(parts[j]);
        std::vector<BigComplex> next(vals.size(), BigComplex(bits));
        BigComplex running(bits);
        for (int m = 1; m <= limit; ++m) {
            if (mode == SumMode::Star) running += vals[m];
            next[m] = head[m] * running;
            if (mode == SumMode::Plain) running += vals[m];
        }
        vals = std::move(next);
    }
    BigComplex sum(bits);
    for (int m = 1; m <= limit; ++m) sum += vals[m];
    return sum;
}

}  // namespace

BigComplex z_numeric(const Index& k, int n, mpfr_prec_t precision, SumMode mode) {
    if (n < 1) throw Error("z_numeric: n must be >= 1");
    if (k.empty()) return complex_one(precision);
    if (mode == SumMode::Plain && k.depth() >= n) return BigComplex(precision);
    const mpfr_prec_t bits = work_precision(precision, n);
    const BigFloat pi = BigFloat::pi(bits);
    const BigFloat nf(static_cast<long>(n), bits);
    const auto s = sine_table(n, n - 1, bits);
    std::map<int, std::vector<BigComplex>> cache;
    TermFn term = [&](int kk) -> const std::vector<BigComplex>& {
        auto it = cache.find(kk);
        if (it != cache.end()) return it->second;
        std::vector<BigComplex> t(static_cast<std::size_t>(n), BigComplex(bits));
        for (int m = 1; m < n; ++m) {
            const long phase = static_cast<long>(kk - 2) * m + kk;
            BigComplex v = BigComplex::polar_unit(pi * BigFloat(phase, bits) / nf);
            v *= pow_int(s[1] / s[m], kk);
            t[m] = std::move(v);
        }
        return cache.emplace(kk, std::move(t)).first->second;
    };
    return round_to(nested_sum(k.parts(), n - 1, term, mode, bits), precision);
}

BigComplex A_pm(const Index& k, int n, mpfr_prec_t precision, HalfSign sign) {
    if (n < 1) throw Error("A_pm: n must be >= 1");
    if (k.empty()) return complex_one(precision);
    // m < n/2 for A^-, m <= n/2 for A^+.
    const int limit = sign == HalfSign::Plus ? n / 2 : (n - 1) / 2;
    const mpfr_prec_t bits = work_precision(precision, n);
    const BigFloat pi = BigFloat::pi(bits);
    const BigFloat nf(static_cast<long>(n), bits);
    const auto s = sine_table(n, std::max(limit, 1), bits);
    const BigFloat scale = nf / pi;
    const long dir = sign == HalfSign::Plus ? 1 : -1;
    std::map<int, std::vector<BigComplex>> cache;
    TermFn term = [&](int kk) -> const std::vector<BigComplex>& {
        auto it = cache.find(kk);
        if (it != cache.end()) return it->second;
        std::vector<BigComplex> t(static_cast<std::size_t>(limit) + 1, BigComplex(bits));
        for (int m = 1; m <= limit; ++m) {
            BigComplex v = BigComplex::polar_unit(pi * BigFloat(dir * (kk - 2) * static_cast<long>(m), bits) / nf);
            v *= pow_int(BigFloat(1L, bits) / (scale * s[m]), kk);
            t[m] = std::move(v);
        }
        return cache.emplace(kk, std::move(t)).first->second;
    };
    return round_to(nested_sum(k.parts(), limit, term, SumMode::Plain, bits), precision);
}

BigComplex half_range_decomposition(const Index& k, int n, mpfr_prec_t precision) {
    const mpfr_prec_t bits = work_precision(precision, n);
    const BigFloat pi = BigFloat::pi(bits);
    const BigFloat nf(static_cast<long>(n), bits);
    BigComplex pref = BigComplex::polar_unit(pi / nf);
    pref *= nf / pi * sin(pi / nf);
    pref = pow_int(pref, static_cast<unsigned>(k.weight()));
    const auto& parts = k.parts();
    BigComplex sum(bits);
    int sign_weight = 0;
    for (std::size_t a = 0; a <= parts.size(); ++a) {
        if (a > 0) sign_weight += parts[a - 1];
        const Index left(std::vector<int>(parts.rend() - static_cast<long>(a), parts.rend()));
        const Index right(std::vector<int>(parts.begin() + static_cast<long>(a), parts.end()));
        BigComplex term = A_pm(left, n, bits, HalfSign::Minus) * A_pm(right, n, bits, HalfSign::Plus);
        if (sign_weight % 2) term = BigComplex(bits) - term;
        sum += term;
    }
    return round_to(pref * sum, precision);
}

namespace {

// Solves the square system rows * c = rhs (real), returning c[0].
BigFloat solve_first(std::vector<std::vector<BigFloat>> a, std::vector<BigFloat> rhs) {
    const std::size_t s = rhs.size();
    for (std::size_t col = 0; col < s; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < s; ++r)
            if (abs(a[r][col]) > abs(a[piv][col])) piv = r;
        std::swap(a[piv], a[col]);
        std::swap(rhs[piv], rhs[col]);
        for (std::size_t r = col + 1; r < s; ++r) {
            BigFloat f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < s; ++c) a[r][c] -= f * a[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<BigFloat> x(s, BigFloat(rhs[0].precision()));
    for (std::size_t i = s; i-- > 0;) {
        BigFloat acc = rhs[i];
        for (std::size_t c = i + 1; c < s; ++c) acc -= a[i][c] * x[c];
        x[i] = acc / a[i][i];
    }
    return x[0];
}

// c_0 of the model fitted exactly through points [first, first + a + 2).
BigComplex fit_window(const std::vector<int>& ns, const std::vector<BigComplex>& vs, std::size_t first, int a,
                      mpfr_prec_t bits) {
    const std::size_t s = static_cast<std::size_t>(a) + 2;
    std::vector<std::vector<BigFloat>> rows;
    std::vector<BigFloat> re, im;
    for (std::size_t i = first; i < first + s; ++i) {
        const BigFloat nf(static_cast<long>(ns[i]), bits);
        const BigFloat ln = log(nf);
        std::vector<BigFloat> row{BigFloat(1L, bits)};
        BigFloat lp(1L, bits);
        for (int j = 0; j <= a; ++j) {
            row.push_back(lp / nf);
            lp *= ln;
        }
        rows.push_back(std::move(row));
        re.push_back(vs[i].re);
        im.push_back(vs[i].im);
    }
    return BigComplex(solve_first(rows, re), solve_first(rows, im));
}

}  // namespace

XiEstimate xi_approx(const Index& k, const std::vector<int>& schedule, mpfr_prec_t precision, SumMode mode,
                     int jobs) {
    if (schedule.size() < 3) throw Error("xi_approx: schedule needs at least 3 points");
    for (std::size_t i = 1; i < schedule.size(); ++i)
        if (schedule[i] <= schedule[i - 1]) throw Error("xi_approx: schedule must be increasing");
    XiEstimate out;
    out.schedule = schedule;
    out.values = parallel_map(schedule, [&](int n) { return z_numeric(k, n, precision, mode); }, jobs);

    const std::size_t count = schedule.size();
    const int max_order = std::min<int>(3, static_cast<int>(count) - 3);
    double best_err = std::numeric_limits<double>::infinity();
    for (int a = 0; a <= max_order; ++a) {
        const std::size_t s = static_cast<std::size_t>(a) + 2;
        std::vector<BigComplex> ests;
        for (std::size_t first = 0; first + s <= count; ++first)
            ests.push_back(fit_window(schedule, out.values, first, a, precision));
        std::vector<double> errs;
        for (std::size_t i = 1; i < ests.size(); ++i) errs.push_back((ests[i] - ests[i - 1]).abs().to_double());
        if (errs.empty()) continue;
        if (errs.back() < best_err) {
            best_err = errs.back();
            out.estimate = ests.back();
            out.error_bar = errs.back();
            out.log_order = a;
            out.window_errors = errs;
        }
    }
    // Converged: the window differences are still shrinking at the end (or
    // already at round-off). One difference alone cannot show that.
    const auto& we = out.window_errors;
    const double tiny = 1e-25 * (1.0 + out.estimate.abs().to_double());
    out.converged = we.size() >= 2 && (we.back() < we[we.size() - 2] || we.back() < tiny);
    return out;
}

DualityResidual xi_duality_check(const Index& k, const std::vector<int>& schedule, mpfr_prec_t precision, int jobs) {
    DualityResidual r;
    r.base_side = xi_approx(k, schedule, precision, SumMode::Star, jobs);
    r.dual_side = xi_approx(hoffman_dual(k), schedule, precision, SumMode::Star, jobs);
    r.residual = (r.dual_side.estimate + r.base_side.estimate.conj()).abs().to_double();
    r.error_bar = r.base_side.error_bar + r.dual_side.error_bar;
    return r;
}

std::vector<int> geometric_schedule(int start, int factor, int count) {
    if (start < 1 || factor < 2 || count < 1) throw Error("geometric_schedule: invalid parameters");
    std::vector<int> out;
    long long n = start;
    for (int i = 0; i < count; ++i) {
        if (n > std::numeric_limits<int>::max()) throw Error("geometric_schedule: overflow");
        out.push_back(static_cast<int>(n));
        n *= factor;
    }
    return out;
}

}  // namespace cycmzv

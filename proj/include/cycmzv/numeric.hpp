#pragma once

#include <vector>

#include "cycmzv/bigfloat.hpp"
#include "cycmzv/index.hpp"
#include "cycmzv/qseries.hpp"

namespace cycmzv {

/// z_n(k; e^{2 pi i/n}) (or the star version) in big-float arithmetic.
///
/// Each summand is formed directly as e^{pi i((k-2)m + k)/n} (sin(pi/n)/sin(m pi/n))^k
/// and the nested sum uses the same prefix-sum recursion as the exact route.
/// Work precision is precision + 32 + bitlength(n); the relative error is
/// O(n 2^{-precision}).
BigComplex z_numeric(const Index& k, int n, mpfr_prec_t precision, SumMode mode = SumMode::Plain);

enum class HalfSign { Plus, Minus };

/// The half-range sums
///   A^-_n(k) = sum_{n/2 >  m_1 > ... > m_r > 0} prod e^{-pi i (k_j-2) m_j / n} / ((n/pi) sin(m_j pi/n))^{k_j}
///   A^+_n(k) = sum_{n/2 >= m_1 > ... > m_r > 0} prod e^{+pi i (k_j-2) m_j / n} / ((n/pi) sin(m_j pi/n))^{k_j}
/// with A^{+-}_n(empty) = 1.
BigComplex A_pm(const Index& k, int n, mpfr_prec_t precision, HalfSign sign);

/// (e^{pi i/n} (n/pi) sin(pi/n))^{wt} sum_a (-1)^{k_1+...+k_a} A^-(k_a..k_1) A^+(k_{a+1}..k_r),
/// which equals z_n(k; e^{2 pi i/n}) exactly for every n.
BigComplex half_range_decomposition(const Index& k, int n, mpfr_prec_t precision);

struct XiEstimate {
    BigComplex estimate{128};
    double error_bar = 0.0;
    /// The last window difference is below the one before it (needs at least
    /// two differences).
    bool converged = false;
    /// Number of log powers in the selected model c_0 + sum_{j<=a} c_j (log n)^j / n.
    int log_order = 0;
    std::vector<int> schedule;
    std::vector<BigComplex> values;
    /// Successive-window extrapolation differences for the chosen model.
    std::vector<double> window_errors;
};

/// Estimates lim_{n -> oo} z_n(k; e^{2 pi i/n}) from values along an increasing
/// schedule (length >= 3) by exact fitting of c_0 + sum_{j=0}^{a} c_{j+1} (log n)^j / n
/// on sliding windows; a is chosen to minimise the last window difference,
/// which is reported as the error bar.
XiEstimate xi_approx(const Index& k, const std::vector<int>& schedule, mpfr_prec_t precision,
                     SumMode mode = SumMode::Plain, int jobs = 0);

struct DualityResidual {
    double residual = 0.0;
    double error_bar = 0.0;
    XiEstimate dual_side;
    XiEstimate base_side;
};

/// |xi*(k^dual) + conj(xi*(k))|, both limits estimated with xi_approx.
DualityResidual xi_duality_check(const Index& k, const std::vector<int>& schedule, mpfr_prec_t precision,
                                 int jobs = 0);

/// start, start*factor, ..., count entries.
std::vector<int> geometric_schedule(int start, int factor, int count);

}  // namespace cycmzv

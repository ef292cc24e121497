#pragma once

#include <map>
#include <vector>

#include "cycmzv/cyclotomic.hpp"
#include "cycmzv/hpoly.hpp"
#include "cycmzv/index.hpp"

namespace cycmzv {

/// Nested-sum mode: strict (m_1 > ... > m_r) or weak (m_1 >= ... >= m_r).
enum class SumMode { Plain, Star };

/// Exact evaluator of the truncated q-series z_n(k; zeta_n) and z*_n(k; zeta_n)
/// in Q(zeta_n).
///
/// Nested sums are built by prefix-sum recursion from the innermost part
/// outwards, one pass of n-1 field multiplications per depth level. Partial
/// results for index suffixes are shared across calls on the same evaluator.
class QSeriesEvaluator {
public:
    explicit QSeriesEvaluator(int n);

    int level() const { return n_; }

    CycloElem z(const Index& k, SumMode mode = SumMode::Plain);
    /// Linear extension with hbar -> 1 - zeta_n.
    CycloElem z(const HPoly& w, SumMode mode = SumMode::Plain);

private:
    // zeta^{(k-1)m} / [m]^k for m = 1..n-1 (entry 0 unused).
    const std::vector<CycloElem>& term(int k);
    // Per-m values of the innermost sum over the suffix starting at the given index.
    const std::vector<CycloElem>& suffix_terms(const Index& suffix, SumMode mode);

    int n_;
    CycloElem one_minus_zeta_;
    std::vector<CycloElem> inv_qint_;  // 1/[m]
    std::map<int, std::vector<CycloElem>> terms_;
    std::map<std::pair<Index, SumMode>, std::vector<CycloElem>> suffixes_;
};

CycloElem z_exact(const Index& k, int n);
CycloElem z_star_exact(const Index& k, int n);
CycloElem z_hpoly_exact(const HPoly& w, int n, SumMode mode = SumMode::Plain);

/// Dense polynomial over Q, entry i is the coefficient of x^i.
using RationalPoly = std::vector<Rational>;

Rational evaluate(const RationalPoly& p, const Rational& x);

/// D_k(x) with z_n(k; zeta_n) = D_k(n) (1 - zeta_n)^k for every n >= 1.
RationalPoly depth_one_poly(int k);

/// G_k in z / log(1 + z) = sum_k G_k z^k.
Rational gregory(int k);

/// beta_k(1/n) = -k! D_k(n) / n^k (Carlitz's degenerate Bernoulli number).
Rational degenerate_bernoulli_value(int k, int n);

}  // namespace cycmzv

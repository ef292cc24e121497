#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "cycmzv/index.hpp"
#include "cycmzv/rational.hpp"

namespace cycmzv {

/// A basis element hbar^d * e_k of the deformed word algebra.
struct Monomial {
    Index index;
    int hbar = 0;

    int total_weight() const { return index.weight() + hbar; }
    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;
};

/// A finite Q[hbar]-linear combination of words e_k. Zero coefficients are
/// never stored. hbar carries weight one.
class HPoly {
public:
    using Terms = std::map<Monomial, Rational>;

    HPoly() = default;
    /// e_k (optionally times hbar^d and a coefficient).
    static HPoly word(const Index& k, const Rational& coeff = Rational(1), int hbar = 0);
    static HPoly unit() { return word(Index{}); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add(const Monomial& m, const Rational& c);
    void add(const Index& k, int hbar, const Rational& c) { add(Monomial{k, hbar}, c); }
    Rational coeff(const Index& k, int hbar = 0) const;

    /// Largest hbar exponent present (0 for the zero element).
    int hbar_degree() const;
    bool hbar_free() const { return hbar_degree() == 0; }
    /// Distinct total weights (index weight + hbar degree) of the terms.
    std::set<int> total_weights() const;
    bool homogeneous() const { return total_weights().size() <= 1; }

    HPoly& operator+=(const HPoly& o);
    HPoly& operator-=(const HPoly& o);
    HPoly& operator*=(const Rational& s);
    HPoly operator-() const;

    /// e_k * this (concatenation on the left).
    HPoly left_multiply(int k) const;
    /// hbar^d * this.
    HPoly times_hbar(int d) const;
    /// Drops every term with positive hbar degree (setting hbar = 0).
    HPoly at_hbar_zero() const;

    friend bool operator==(const HPoly&, const HPoly&) = default;

private:
    Terms terms_;
};

HPoly operator+(HPoly a, const HPoly& b);
HPoly operator-(HPoly a, const HPoly& b);
HPoly operator*(HPoly a, const Rational& s);
HPoly operator*(const Rational& s, HPoly a);

/// Parameters of the quasi-shuffle recursion
///   e_a u . e_b w = e_a (u . e_b w) + e_b (e_a u . w) + sign (e_{a+b} + [deformed] hbar e_{a+b-1}) (u . w)
struct QuasiShuffle {
    int sign = 1;
    bool deformed = false;
};

inline constexpr QuasiShuffle kStuffle{1, false};
inline constexpr QuasiShuffle kStar{-1, false};
inline constexpr QuasiShuffle kQStuffle{1, true};
inline constexpr QuasiShuffle kQStar{-1, true};

/// Bilinear quasi-shuffle of two elements; hbar coefficients are carried through.
HPoly quasi_shuffle(const HPoly& v, const HPoly& w, QuasiShuffle rule);

inline HPoly stuffle(const HPoly& v, const HPoly& w) { return quasi_shuffle(v, w, kStuffle); }
inline HPoly star_prod(const HPoly& v, const HPoly& w) { return quasi_shuffle(v, w, kStar); }
inline HPoly q_stuffle(const HPoly& v, const HPoly& w) { return quasi_shuffle(v, w, kQStuffle); }
inline HPoly q_star(const HPoly& v, const HPoly& w) { return quasi_shuffle(v, w, kQStar); }

/// e_k -> (-1)^{wt(k)+1} e_{reverse(dual(k))}; requires an hbar-free input.
HPoly delta(const HPoly& w);

/// L(e_k) = -2/(2 dep(k) + 1) e_1 * e_k; requires an hbar-free input.
HPoly map_L(const HPoly& w);
/// L*(e_k) = 2/(2 dep(k) - 1) e_1 star e_k; requires an hbar-free input.
HPoly map_Lstar(const HPoly& w);

/// hbar^j e_k -> L^j(e_k), resp. (L*)^j(e_k). The result is hbar-free.
HPoly rho(const HPoly& w);
HPoly rho_star(const HPoly& w);

/// rho(v *_q w) and rho*(v star_q w) for hbar-free v, w.
HPoly tilde_ast(const HPoly& v, const HPoly& w);
HPoly tilde_star(const HPoly& v, const HPoly& w);

/// z*(k) written through non-star z: each gap between consecutive parts is
/// either kept or merged, merges following e_a e_b |-> e_{a+b} + hbar e_{a+b-1}
/// (hbar standing for 1 - q).
HPoly star_to_mono(const Index& k);
/// The inverse expansion: z(k) through z*, with sign (-1)^{number of merges}.
HPoly mono_to_star(const Index& k);
/// hbar-linear extensions of the two expansions.
HPoly star_to_mono(const HPoly& w);
HPoly mono_to_star(const HPoly& w);

}  // namespace cycmzv

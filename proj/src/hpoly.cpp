#include "cycmzv/hpoly.hpp"

#include <optional>

namespace cycmzv {

HPoly HPoly::word(const Index& k, const Rational& coeff, int hbar) {
    HPoly p;
    p.add(Monomial{k, hbar}, coeff);
    return p;
}

void HPoly::add(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    if (m.hbar < 0) throw Error("negative hbar degree");
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational HPoly::coeff(const Index& k, int hbar) const {
    auto it = terms_.find(Monomial{k, hbar});
    return it == terms_.end() ? Rational(0) : it->second;
}

int HPoly::hbar_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.hbar);
    return d;
}

std::set<int> HPoly::total_weights() const {
    std::set<int> out;
    for (const auto& [m, c] : terms_) out.insert(m.total_weight());
    return out;
}

HPoly& HPoly::operator+=(const HPoly& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

HPoly& HPoly::operator-=(const HPoly& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

HPoly& HPoly::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

HPoly HPoly::operator-() const {
    HPoly r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

HPoly HPoly::left_multiply(int k) const {
    HPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(Monomial{m.index.prepend(k), m.hbar}, c);
    return r;
}

HPoly HPoly::times_hbar(int d) const {
    HPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(Monomial{m.index, m.hbar + d}, c);
    return r;
}

HPoly HPoly::at_hbar_zero() const {
    HPoly r;
    for (const auto& [m, c] : terms_)
        if (m.hbar == 0) r.terms_.emplace(m, c);
    return r;
}

HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }
HPoly operator*(HPoly a, const Rational& s) { return a *= s; }
HPoly operator*(const Rational& s, HPoly a) { return a *= s; }

namespace {

// Quasi-shuffle of two single words, memoized on suffix pairs for this call.
class WordProduct {
public:
    WordProduct(const Index& u, const Index& w, QuasiShuffle rule)
        : u_(u.parts()), w_(w.parts()), rule_(rule), memo_((u_.size() + 1) * (w_.size() + 1)) {}

    HPoly run() { return at(0, 0); }

private:
    const HPoly& at(std::size_t i, std::size_t j) {
        auto& slot = memo_[i * (w_.size() + 1) + j];
        if (slot) return *slot;
        HPoly r;
        if (i == u_.size()) {
            r = HPoly::word(Index(std::vector<int>(w_.begin() + static_cast<long>(j), w_.end())));
        } else if (j == w_.size()) {
            r = HPoly::word(Index(std::vector<int>(u_.begin() + static_cast<long>(i), u_.end())));
        } else {
            const int a = u_[i];
            const int b = w_[j];
            r += at(i + 1, j).left_multiply(a);
            r += at(i, j + 1).left_multiply(b);
            const HPoly& inner = at(i + 1, j + 1);
            HPoly merged = inner.left_multiply(a + b);
            if (rule_.deformed) merged += inner.left_multiply(a + b - 1).times_hbar(1);
            if (rule_.sign < 0) merged *= Rational(-1);
            r += merged;
        }
        slot = std::move(r);
        return *slot;
    }

    const std::vector<int>& u_;
    const std::vector<int>& w_;
    QuasiShuffle rule_;
    std::vector<std::optional<HPoly>> memo_;
};

void require_hbar_free(const HPoly& w, const char* op) {
    if (!w.hbar_free()) throw Error(std::string(op) + ": input must be hbar-free");
}

// Applies a linear map defined on single indices, with per-call caching.
template <class F>
HPoly apply_linear(const HPoly& w, std::map<Index, HPoly>& cache, F&& on_index) {
    HPoly out;
    for (const auto& [m, c] : w.terms()) {
        auto it = cache.find(m.index);
        if (it == cache.end()) it = cache.emplace(m.index, on_index(m.index)).first;
        HPoly term = it->second * c;
        out += m.hbar ? term.times_hbar(m.hbar) : term;
    }
    return out;
}

HPoly L_on_index(const Index& k, bool star) {
    const int d = k.depth();
    const HPoly prod = quasi_shuffle(HPoly::word(Index{1}), HPoly::word(k), star ? kStar : kStuffle);
    return star ? prod * make_rational(2, 2 * d - 1) : prod * make_rational(-2, 2 * d + 1);
}

HPoly rho_impl(const HPoly& w, bool star) {
    std::map<Index, HPoly> cache;
    HPoly out;
    for (const auto& [m, c] : w.terms()) {
        HPoly cur = HPoly::word(m.index, c);
        for (int j = 0; j < m.hbar; ++j)
            cur = apply_linear(cur, cache, [star](const Index& k) { return L_on_index(k, star); });
        out += cur;
    }
    return out;
}

// Expands over all 2^{r-1} ways of keeping or merging the gaps of k.
HPoly block_expansion(const Index& k, bool alternate_sign) {
    if (k.empty()) return HPoly::unit();
    const auto& parts = k.parts();
    const std::size_t gaps = parts.size() - 1;
    HPoly out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << gaps); ++mask) {
        // Each partial product: list of (parts so far, hbar, coeff) plus current block.
        struct Partial {
            std::vector<int> done;
            int block;
            int hbar;
            Rational coeff;
        };
        std::vector<Partial> states{{{}, parts[0], 0, Rational(1)}};
        int merges = 0;
        for (std::size_t g = 0; g < gaps; ++g) {
            const int b = parts[g + 1];
            std::vector<Partial> next;
            if (mask & (std::size_t{1} << g)) {
                ++merges;
                for (auto& s : states) {
                    next.push_back({s.done, s.block + b, s.hbar, s.coeff});
                    next.push_back({s.done, s.block + b - 1, s.hbar + 1, s.coeff});
                }
            } else {
                for (auto& s : states) {
                    auto done = s.done;
                    done.push_back(s.block);
                    next.push_back({std::move(done), b, s.hbar, s.coeff});
                }
            }
            states = std::move(next);
        }
        const Rational sign = (alternate_sign && (merges & 1)) ? Rational(-1) : Rational(1);
        for (auto& s : states) {
            s.done.push_back(s.block);
            out.add(Monomial{Index(std::move(s.done)), s.hbar}, s.coeff * sign);
        }
    }
    return out;
}

HPoly block_expansion_linear(const HPoly& w, bool alternate_sign) {
    std::map<Index, HPoly> cache;
    return apply_linear(w, cache, [alternate_sign](const Index& k) { return block_expansion(k, alternate_sign); });
}

}  // namespace

HPoly quasi_shuffle(const HPoly& v, const HPoly& w, QuasiShuffle rule) {
    HPoly out;
    for (const auto& [mv, cv] : v.terms()) {
        for (const auto& [mw, cw] : w.terms()) {
            HPoly p = WordProduct(mv.index, mw.index, rule).run();
            p *= cv * cw;
            const int h = mv.hbar + mw.hbar;
            out += h ? p.times_hbar(h) : p;
        }
    }
    return out;
}

HPoly delta(const HPoly& w) {
    require_hbar_free(w, "delta");
    HPoly out;
    for (const auto& [m, c] : w.terms()) {
        if (m.index.empty()) throw Error("delta: undefined on the empty index");
        const Rational sign = (m.index.weight() % 2 == 1) ? Rational(1) : Rational(-1);
        out.add(Monomial{dual_reverse(m.index), 0}, c * sign);
    }
    return out;
}

HPoly map_L(const HPoly& w) {
    require_hbar_free(w, "map_L");
    std::map<Index, HPoly> cache;
    return apply_linear(w, cache, [](const Index& k) { return L_on_index(k, false); });
}

HPoly map_Lstar(const HPoly& w) {
    require_hbar_free(w, "map_Lstar");
    std::map<Index, HPoly> cache;
    return apply_linear(w, cache, [](const Index& k) { return L_on_index(k, true); });
}

HPoly rho(const HPoly& w) { return rho_impl(w, false); }
HPoly rho_star(const HPoly& w) { return rho_impl(w, true); }

HPoly tilde_ast(const HPoly& v, const HPoly& w) {
    require_hbar_free(v, "tilde_ast");
    require_hbar_free(w, "tilde_ast");
    return rho(q_stuffle(v, w));
}

HPoly tilde_star(const HPoly& v, const HPoly& w) {
    require_hbar_free(v, "tilde_star");
    require_hbar_free(w, "tilde_star");
    return rho_star(q_star(v, w));
}

HPoly star_to_mono(const Index& k) { return block_expansion(k, false); }
HPoly mono_to_star(const Index& k) { return block_expansion(k, true); }
HPoly star_to_mono(const HPoly& w) { return block_expansion_linear(w, false); }
HPoly mono_to_star(const HPoly& w) { return block_expansion_linear(w, true); }

}  // namespace cycmzv

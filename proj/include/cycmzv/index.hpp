#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace cycmzv {

/// A finite tuple of positive integers (k_1, ..., k_r); possibly empty.
class Index {
public:
    Index() = default;
    Index(std::initializer_list<int> parts);
    explicit Index(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int depth() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    bool empty() const { return parts_.empty(); }
    bool admissible() const { return parts_.empty() || parts_.front() >= 2; }
    int operator[](std::size_t i) const { return parts_[i]; }

    /// (k_r, ..., k_1)
    Index reversed() const;

    /// Prepends one part.
    Index prepend(int k) const;

    auto operator<=>(const Index&) const = default;
    bool operator==(const Index&) const = default;

private:
    std::vector<int> parts_;
};

inline int weight(const Index& i) { return i.weight(); }
inline int depth(const Index& i) { return i.depth(); }
inline Index reverse(const Index& i) { return i.reversed(); }

/// Hoffman dual: write e_k as e0^{k1-1} e1 ... e0^{kr-1} e1, drop the final e1,
/// swap e0 <-> e1, append e1 and decode. Throws on the empty index.
Index hoffman_dual(const Index& i);

/// Reverse of the Hoffman dual.
Index dual_reverse(const Index& i);

/// All 2^{w-1} indices of weight w (the empty index for w = 0), in the
/// order of their binary codes (see index_code).
std::vector<Index> indices_of_weight(int w);

/// Bijection between indices of weight w >= 1 and [0, 2^{w-1}): bit j (from
/// the top) is 1 when a comma separates positions j and j+1 of 1+1+...+1.
std::size_t index_code(const Index& i);
Index index_from_code(std::size_t code, int w);

/// "3,1,1,2,4"; the empty index is "" (also accepts "()" and "empty").
Index parse_index(std::string_view text);
std::string format_index(const Index& i);

}  // namespace cycmzv

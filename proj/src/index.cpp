#include "cycmzv/index.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "cycmzv/rational.hpp"

namespace cycmzv {

Index::Index(std::initializer_list<int> parts) : Index(std::vector<int>(parts)) {}

Index::Index(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int k : parts_)
        if (k < 1) throw Error("index parts must be positive");
}

int Index::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Index Index::reversed() const {
    Index r;
    r.parts_.assign(parts_.rbegin(), parts_.rend());
    return r;
}

Index Index::prepend(int k) const {
    Index r;
    r.parts_.reserve(parts_.size() + 1);
    r.parts_.push_back(k);
    r.parts_.insert(r.parts_.end(), parts_.begin(), parts_.end());
    return r;
}

Index hoffman_dual(const Index& i) {
    if (i.empty()) throw Error("hoffman_dual: empty index");
    // Binary word with true = e1, false = e0.
    std::vector<bool> word;
    for (int k : i.parts()) {
        word.insert(word.end(), static_cast<std::size_t>(k - 1), false);
        word.push_back(true);
    }
    word.pop_back();
    for (std::size_t j = 0; j < word.size(); ++j) word[j] = !word[j];
    word.push_back(true);
    std::vector<int> parts;
    int run = 1;
    for (bool letter : word) {
        if (letter) {
            parts.push_back(run);
            run = 1;
        } else {
            ++run;
        }
    }
    return Index(std::move(parts));
}

Index dual_reverse(const Index& i) { return hoffman_dual(i).reversed(); }

std::size_t index_code(const Index& i) {
    const int w = i.weight();
    if (w == 0) return 0;
    std::size_t code = 0;
    int pos = 0;
    for (std::size_t j = 0; j + 1 < i.parts().size(); ++j) {
        pos += i.parts()[j];
        code |= std::size_t{1} << (w - 1 - pos);
    }
    return code;
}

Index index_from_code(std::size_t code, int w) {
    if (w == 0) return Index{};
    std::vector<int> parts;
    int run = 1;
    for (int pos = 1; pos < w; ++pos) {
        if (code & (std::size_t{1} << (w - 1 - pos))) {
            parts.push_back(run);
            run = 1;
        } else {
            ++run;
        }
    }
    parts.push_back(run);
    return Index(std::move(parts));
}

std::vector<Index> indices_of_weight(int w) {
    if (w < 0) throw Error("negative weight");
    if (w == 0) return {Index{}};
    std::vector<Index> out;
    const std::size_t count = std::size_t{1} << (w - 1);
    out.reserve(count);
    for (std::size_t c = 0; c < count; ++c) out.push_back(index_from_code(c, w));
    return out;
}

Index parse_index(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    if (s.empty() || s == "empty") return Index{};
    std::vector<int> parts;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        std::string tok = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (tok.empty() || tok.size() > 6 ||
            !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw ParseError("invalid index: '" + std::string(text) + "'");
        int k = std::stoi(tok);
        if (k < 1) throw ParseError("index parts must be positive: '" + std::string(text) + "'");
        parts.push_back(k);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return Index(std::move(parts));
}

std::string format_index(const Index& i) {
    std::string out;
    for (std::size_t j = 0; j < i.parts().size(); ++j) {
        if (j) out.push_back(',');
        out += std::to_string(i.parts()[j]);
    }
    return out;
}

}  // namespace cycmzv

#include "cycmzv/rational.hpp"

#include <cctype>

namespace cycmzv {

Rational make_rational(long num, long den) {
    if (den == 0) throw Error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw Error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    std::size_t start = 0;
    while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
    s = s.substr(start);
    if (s.empty()) throw ParseError("empty rational");
    if (s[0] == '+') s = s.substr(1);
    std::size_t slash = s.find('/');
    auto valid_int = [](std::string_view t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    std::string_view sv(s);
    if (slash == std::string::npos) {
        if (!valid_int(sv)) throw ParseError("invalid rational: " + s);
        return Rational(Integer(s));
    }
    auto num = sv.substr(0, slash);
    auto den = sv.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-')
        throw ParseError("invalid rational: " + s);
    Integer d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator: " + s);
    return make_rational(Integer{std::string(num)}, d);
}

std::string format_rational(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace cycmzv

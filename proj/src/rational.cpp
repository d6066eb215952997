#include "orbicat/rational.hpp"

#include <cctype>

namespace orbicat {

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::optional<Rational> parse_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::size_t i = 0;
    auto digits = [&](std::size_t& pos) {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        return pos > start;
    };
    if (s[i] == '-') ++i;
    if (!digits(i)) return std::nullopt;
    if (i < s.size()) {
        if (s[i] != '/') return std::nullopt;
        ++i;
        std::size_t den_start = i;
        if (!digits(i) || i != s.size()) return std::nullopt;
        // "x/0" is malformed, not infinity.
        bool all_zero = true;
        for (std::size_t j = den_start; j < s.size(); ++j)
            if (s[j] != '0') all_zero = false;
        if (all_zero) return std::nullopt;
    }
    Rational q;
    if (q.set_str(s, 10) != 0) return std::nullopt;
    q.canonicalize();
    return q;
}

}  // namespace orbicat

#include "riesz/rational.hpp"

namespace riesz {

Rational Rational::parse(std::string_view s) {
    auto bad = [&] { throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'"); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    auto parse_int = [&](std::string_view part) -> Int {
        if (part.empty()) bad();
        std::size_t i = 0;
        bool neg = false;
        if (part[0] == '-' || part[0] == '+') {
            neg = part[0] == '-';
            ++i;
        }
        if (i == part.size()) bad();
        Int v = 0;
        for (; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') bad();
            v = v * 10 + (part[i] - '0');
        }
        return neg ? Int(-v) : v;
    };
    Int num = parse_int(s.substr(0, slash));
    Int den = 1;
    if (slash != std::string_view::npos) den = parse_int(s.substr(slash + 1));
    if (den == 0) bad();
    return Rational(std::move(num), std::move(den));
}

std::string Rational::str() const {
    std::string out = numerator().str();
    if (denominator() != 1) {
        out += '/';
        out += denominator().str();
    }
    return out;
}

} // namespace riesz

#include "gwcp3/rational.hpp"

#include <cctype>

namespace gwcp3 {

std::string Rational::str() const {
    Int num = numerator(), den = denominator();
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

namespace {

Int parse_int(std::string_view text, std::string_view whole) {
    if (text.empty()) throw std::invalid_argument("Rational: empty integer in '" + std::string(whole) + "'");
    std::size_t i = (text[0] == '+' || text[0] == '-') ? 1 : 0;
    if (i == text.size()) throw std::invalid_argument("Rational: bare sign in '" + std::string(whole) + "'");
    for (std::size_t k = i; k < text.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(text[k])))
            throw std::invalid_argument("Rational: bad character in '" + std::string(whole) + "'");
    if (text[0] == '+') text.remove_prefix(1);
    return Int(std::string(text));
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text, text));
    Int num = parse_int(text.substr(0, slash), text);
    Int den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("Rational: zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

Rational pow_int(const Rational& base, int k) {
    Rational r(1);
    for (int i = 0; i < k; ++i) r *= base;
    return r;
}

}  // namespace gwcp3

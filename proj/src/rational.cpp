#include "kstab/rational.h"

#include <stdexcept>

namespace kstab {

Rational parse_rational(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    auto check_digits = [](const std::string& part) {
        if (part.empty()) return false;
        std::size_t i = (part[0] == '+' || part[0] == '-') ? 1 : 0;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
        return true;
    };

    const std::size_t slash = s.find('/');
    if (slash != std::string::npos) {
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        if (!check_digits(num) || !check_digits(den))
            throw std::invalid_argument("bad rational literal: " + text);
        Rational q;
        if (q.set_str(num + "/" + den, 10) != 0)
            throw std::invalid_argument("bad rational literal: " + text);
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
        q.canonicalize();
        return q;
    }

    const std::size_t dot = s.find('.');
    if (dot != std::string::npos) {
        const std::string ipart = s.substr(0, dot);
        const std::string fpart = s.substr(dot + 1);
        const bool neg = !ipart.empty() && ipart[0] == '-';
        std::string digits = ipart + fpart;
        if (!digits.empty() && (digits[0] == '+' || digits[0] == '-')) digits.erase(0, 1);
        if (digits.empty() || !check_digits(digits))
            throw std::invalid_argument("bad decimal literal: " + text);
        mpz_class mantissa(digits, 10);
        mpz_class den = 1;
        for (std::size_t i = 0; i < fpart.size(); ++i) den *= 10;
        Rational q(neg ? mpz_class(-mantissa) : mantissa, den);
        q.canonicalize();
        return q;
    }

    if (!check_digits(s)) throw std::invalid_argument("bad integer literal: " + text);
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad integer literal: " + text);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational pow_rational(const Rational& base, unsigned exponent) {
    Rational result = 1;
    Rational b = base;
    unsigned e = exponent;
    while (e > 0) {
        if (e & 1u) result *= b;
        b *= b;
        e >>= 1u;
    }
    return result;
}

}  // namespace kstab

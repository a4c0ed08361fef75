#include "curv/rational.hpp"

#include <stdexcept>

namespace curv {

std::string to_fraction_string(const Rational& r) {
    return numerator_of(r).str() + "/" + denominator_of(r).str();
}

Rational parse_fraction(std::string_view text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(BigInt(std::string(text)));
        }
        BigInt num(std::string(text.substr(0, slash)));
        BigInt den(std::string(text.substr(slash + 1)));
        if (den == 0) {
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        }
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed fraction '" + std::string(text) + "'");
    }
}

std::string to_decimal_string(const Rational& r, int digits) {
    if (digits < 0) {
        throw std::invalid_argument("negative digit count");
    }
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(digits));
    BigInt num = numerator_of(r);
    BigInt den = denominator_of(r);
    const bool negative = num < 0;
    if (negative) num = -num;
    BigInt scaled = num * scale;
    BigInt q = scaled / den;
    BigInt rem = scaled % den;
    if (rem * 2 >= den) q += 1;
    std::string body = q.str();
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits)) {
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        }
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    }
    if (negative && q != 0) body.insert(0, "-");
    return body;
}

}  // namespace curv

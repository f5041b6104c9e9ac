#include "butterfly/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace butterfly {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den.is_zero())
        throw std::domain_error("rational with zero denominator");
    // cpp_rational rejects negative denominators; normalize the sign here.
    if (den.sign() < 0)
        value_ = boost::multiprecision::cpp_rational(-num, -den);
    else
        value_ = boost::multiprecision::cpp_rational(num, den);
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero())
        throw std::domain_error("rational division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::string Rational::str() const {
    Integer den = denominator();
    if (den == 1)
        return numerator().str();
    return numerator().str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
    std::size_t i = 0;
    std::size_t end = text.size();
    while (i < end && std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
    while (end > i && std::isspace(static_cast<unsigned char>(text[end - 1])))
        --end;
    if (i == end)
        throw std::invalid_argument("empty rational literal");

    auto fail = [&] {
        throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
    };

    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
        negative = text[i] == '-';
        ++i;
    }

    auto digits = [&](Integer& out) {
        if (i == end || !std::isdigit(static_cast<unsigned char>(text[i])))
            fail();
        out = 0;
        while (i < end && std::isdigit(static_cast<unsigned char>(text[i]))) {
            out *= 10;
            out += text[i] - '0';
            ++i;
        }
    };

    Integer num;
    digits(num);
    Integer den = 1;
    if (i < end && text[i] == '/') {
        ++i;
        digits(den);
        if (den.is_zero())
            throw std::invalid_argument("rational literal with zero denominator: '" +
                                        std::string(text) + "'");
    }
    if (i != end)
        fail();
    if (negative)
        num = -num;
    return Rational(num, den);
}

Rational abs(const Rational& r) {
    return r.sign() < 0 ? -r : r;
}

std::string to_string(const Rational& r) {
    return r.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace butterfly

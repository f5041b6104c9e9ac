// Exact arbitrary-precision rational scalar used for every coordinate and
// distance in the library. No floating point anywhere: the midpoint verdicts
// are exact equalities and would become tolerance-dependent otherwise.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace butterfly {

using Integer = boost::multiprecision::cpp_int;

// Canonical form invariants: denominator > 0, gcd(|num|, den) = 1, zero is
// 0/1. Structural equality of canonical forms equals numeric equality.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(int n) : value_(n) {}
    Rational(long n) : value_(n) {}
    Rational(long long n) : value_(n) {}
    Rational(const Integer& n) : value_(n) {}

    // Reduces to canonical form; throws std::domain_error on a zero denominator.
    Rational(const Integer& num, const Integer& den);

    Integer numerator() const { return boost::multiprecision::numerator(value_); }
    Integer denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return value_.sign(); }

    Rational operator-() const { return Rational(rep(-value_)); }

    Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
    Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
    Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    /// "p/q" for proper fractions, plain "p" for integers.
    std::string str() const;

private:
    struct rep {
        boost::multiprecision::cpp_rational v;
        explicit rep(boost::multiprecision::cpp_rational x) : v(std::move(x)) {}
    };
    explicit Rational(rep r) : value_(std::move(r.v)) {}

    boost::multiprecision::cpp_rational value_;
};

// Accepts optional sign, digits, optional "/" and nonzero-denominator digits;
// surrounding whitespace allowed. Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

Rational abs(const Rational& r);
std::string to_string(const Rational& r);
std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace butterfly

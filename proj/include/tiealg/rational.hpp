#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace tiealg {

// Arbitrary-precision rational number.  Thin value-semantic wrapper around
// GMP's mpq_class that pins down the conventions the rest of the library
// relies on: always stored canonically (reduced, positive denominator), and
// printed as "p" or "p/q" with no whitespace.
class BigRational {
public:
    BigRational() : value_(0) {}
    BigRational(long numerator) : value_(numerator) {}  // NOLINT: implicit by design
    BigRational(long numerator, long denominator);
    explicit BigRational(const mpq_class& value);

    // Accepts "p" or "p/q" with optional leading '-'.  Throws SyntaxError on
    // malformed text and DivisionByZero on a zero denominator.
    static BigRational from_string(const std::string& text);

    BigRational operator-() const;
    BigRational& operator+=(const BigRational& other);
    BigRational& operator-=(const BigRational& other);
    BigRational& operator*=(const BigRational& other);
    BigRational& operator/=(const BigRational& other);  // throws DivisionByZero

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) {
        return a.value_ == b.value_;
    }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return !(a == b); }
    friend bool operator<(const BigRational& a, const BigRational& b) {
        return a.value_ < b.value_;
    }

    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const;
    int sign() const { return sgn(value_); }

    BigRational inverse() const;  // throws DivisionByZero on zero

    std::string to_string() const;
    std::size_t hash() const;

    const mpq_class& raw() const { return value_; }

private:
    mpq_class value_;  // canonical: mpq_class keeps gcd 1, denominator > 0
};

std::ostream& operator<<(std::ostream& out, const BigRational& value);

}  // namespace tiealg

template <>
struct std::hash<tiealg::BigRational> {
    std::size_t operator()(const tiealg::BigRational& value) const { return value.hash(); }
};

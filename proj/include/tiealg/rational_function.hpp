#pragma once

#include <string>

#include "tiealg/polynomial.hpp"
#include "tiealg/rational.hpp"

namespace tiealg {

// Element of the field Q(u): a ratio of two Polynomials kept in canonical
// form (fraction fully reduced, denominator monic).  Canonical form makes
// operator== structural, which the rewrite engine and the linear algebra both
// depend on.
class RationalFunction {
public:
    RationalFunction() : numerator_(), denominator_(BigRational(1)) {}
    RationalFunction(long constant) : RationalFunction(BigRational(constant)) {}  // NOLINT
    RationalFunction(BigRational constant);                                       // NOLINT
    RationalFunction(Polynomial numerator);                                       // NOLINT
    RationalFunction(Polynomial numerator, Polynomial denominator);

    static RationalFunction variable();  // u

    // Parses an expression over u with +, -, *, /, ^ (integer exponent,
    // negative allowed), parentheses, and integer literals.  Standard
    // precedence; whitespace ignored.  Throws SyntaxError with the offending
    // position; DivisionByZero if a subexpression divides by the zero
    // function.
    static RationalFunction from_string(const std::string& text);

    const Polynomial& numerator() const { return numerator_; }
    const Polynomial& denominator() const { return denominator_; }

    bool is_zero() const { return numerator_.is_zero(); }
    bool is_one() const { return numerator_.is_one() && denominator_.is_one(); }
    bool is_constant() const { return numerator_.degree() <= 0 && denominator_.is_one(); }
    // Constant value when is_constant(); BigRational(0) for the zero function.
    BigRational constant_value() const;

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& other);
    RationalFunction& operator-=(const RationalFunction& other);
    RationalFunction& operator*=(const RationalFunction& other);
    RationalFunction& operator/=(const RationalFunction& other);  // throws DivisionByZero

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) {
        return a += b;
    }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) {
        return a -= b;
    }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) {
        return a *= b;
    }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) {
        return a /= b;
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.numerator_ == b.numerator_ && a.denominator_ == b.denominator_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

    RationalFunction inverse() const;  // throws DivisionByZero on zero
    RationalFunction pow(long exponent) const;

    // Exact specialization u := point.  Throws PoleAtPoint when the reduced
    // denominator vanishes there.
    BigRational eval_at(const BigRational& point) const;

    // Decimal-free exact text, e.g. "0", "2", "1/2", "u-1", "(1-u)/u",
    // "(u^2-1)/(2*u)".  Both sides of the fraction are printed with integer
    // coefficients (rational content folded across the bar); a side is
    // parenthesized only when needed for re-parsing.
    std::string to_string() const;

    std::size_t hash() const;

private:
    void canonicalize();

    Polynomial numerator_;
    Polynomial denominator_;
};

}  // namespace tiealg

template <>
struct std::hash<tiealg::RationalFunction> {
    std::size_t operator()(const tiealg::RationalFunction& value) const { return value.hash(); }
};

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tiealg/rational.hpp"

namespace tiealg {

// Dense univariate polynomial in the deformation parameter u, with exact
// rational coefficients.  Building block for RationalFunction; not intended
// to be a general-purpose polynomial library.
//
// Invariant: coefficients_ never ends with a zero (the zero polynomial is the
// empty vector), so degree() is coefficients_.size() - 1.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(BigRational constant);  // NOLINT: implicit by design
    explicit Polynomial(std::vector<BigRational> ascending_coefficients);

    static Polynomial variable();  // the polynomial u

    // degree of zero is -1 by convention
    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
    bool is_zero() const { return coefficients_.empty(); }
    bool is_one() const { return degree() == 0 && coefficients_[0].is_one(); }

    // coefficient of u^k (zero when k exceeds the degree)
    const BigRational& coefficient(std::size_t k) const;
    const BigRational& leading_coefficient() const;  // requires nonzero

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }

    Polynomial scaled(const BigRational& factor) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coefficients_ == b.coefficients_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Euclidean division by a nonzero divisor: returns (quotient, remainder)
    // with deg(remainder) < deg(divisor).
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

    // Monic greatest common divisor; gcd(0, 0) = 0.
    static Polynomial gcd(Polynomial a, Polynomial b);

    Polynomial monic() const;  // requires nonzero

    BigRational eval(const BigRational& point) const;

    // Writes the polynomial as content * primitive where content is a
    // positive rational and primitive has coprime integer coefficients (the
    // sign of the original leading coefficient stays on the primitive part).
    // Zero maps to (zero polynomial, content 1).
    std::pair<Polynomial, BigRational> primitive_integer_parts() const;

    // Human form, e.g. "u^2-1", "1-u", "2*u", "-3".  Terms are listed by
    // descending power, except that a polynomial with a negative leading
    // coefficient but positive trailing coefficient flips to ascending order
    // so that the text starts with the positive term ("1-u", not "-u+1").
    std::string to_string() const;

    std::size_t hash() const;

private:
    void trim();

    std::vector<BigRational> coefficients_;  // coefficients_[k] multiplies u^k
};

}  // namespace tiealg

#include "tiealg/polynomial.hpp"

#include <algorithm>

#include "tiealg/errors.hpp"

namespace tiealg {

namespace {

const BigRational kZero(0);

// gcd of the absolute values of two integers given as rationals
BigRational integer_gcd(const BigRational& a, const BigRational& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.raw().get_num().get_mpz_t(), b.raw().get_num().get_mpz_t());
    return BigRational(mpq_class(g));
}

BigRational integer_lcm(const BigRational& a, const BigRational& b) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.raw().get_num().get_mpz_t(), b.raw().get_num().get_mpz_t());
    return BigRational(mpq_class(l));
}

std::string term_to_string(const BigRational& coefficient, std::size_t power,
                           bool magnitude_only) {
    BigRational c = magnitude_only && coefficient.sign() < 0 ? -coefficient : coefficient;
    if (power == 0) return c.to_string();
    std::string monomial = power == 1 ? "u" : "u^" + std::to_string(power);
    if (c.is_one()) return monomial;
    if (c == BigRational(-1)) return "-" + monomial;
    return c.to_string() + "*" + monomial;
}

}  // namespace

Polynomial::Polynomial(BigRational constant) {
    if (!constant.is_zero()) coefficients_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<BigRational> ascending_coefficients)
    : coefficients_(std::move(ascending_coefficients)) {
    trim();
}

Polynomial Polynomial::variable() {
    return Polynomial(std::vector<BigRational>{BigRational(0), BigRational(1)});
}

void Polynomial::trim() {
    while (!coefficients_.empty() && coefficients_.back().is_zero()) coefficients_.pop_back();
}

const BigRational& Polynomial::coefficient(std::size_t k) const {
    return k < coefficients_.size() ? coefficients_[k] : kZero;
}

const BigRational& Polynomial::leading_coefficient() const {
    TIEALG_CHECK(!coefficients_.empty());
    return coefficients_.back();
}

Polynomial Polynomial::operator-() const {
    Polynomial result(*this);
    for (auto& c : result.coefficients_) c = -c;
    return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (coefficients_.size() < other.coefficients_.size())
        coefficients_.resize(other.coefficients_.size());
    for (std::size_t k = 0; k < other.coefficients_.size(); ++k)
        coefficients_[k] += other.coefficients_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    if (coefficients_.size() < other.coefficients_.size())
        coefficients_.resize(other.coefficients_.size());
    for (std::size_t k = 0; k < other.coefficients_.size(); ++k)
        coefficients_[k] -= other.coefficients_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    if (is_zero() || other.is_zero()) {
        coefficients_.clear();
        return *this;
    }
    std::vector<BigRational> product(coefficients_.size() + other.coefficients_.size() - 1,
                                     BigRational(0));
    for (std::size_t i = 0; i < coefficients_.size(); ++i)
        for (std::size_t j = 0; j < other.coefficients_.size(); ++j)
            product[i + j] += coefficients_[i] * other.coefficients_[j];
    coefficients_ = std::move(product);
    trim();
    return *this;
}

Polynomial Polynomial::scaled(const BigRational& factor) const {
    if (factor.is_zero()) return Polynomial();
    Polynomial result(*this);
    for (auto& c : result.coefficients_) c *= factor;
    return result;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
    Polynomial remainder(*this);
    if (remainder.degree() < divisor.degree()) return {Polynomial(), remainder};
    std::vector<BigRational> quotient(
        static_cast<std::size_t>(remainder.degree() - divisor.degree()) + 1, BigRational(0));
    const BigRational lead_inverse = divisor.leading_coefficient().inverse();
    while (!remainder.is_zero() && remainder.degree() >= divisor.degree()) {
        std::size_t shift = static_cast<std::size_t>(remainder.degree() - divisor.degree());
        BigRational factor = remainder.leading_coefficient() * lead_inverse;
        quotient[shift] = factor;
        // remainder -= factor * u^shift * divisor
        for (std::size_t k = 0; k < divisor.coefficients_.size(); ++k)
            remainder.coefficients_[k + shift] -= factor * divisor.coefficients_[k];
        remainder.trim();
    }
    return {Polynomial(std::move(quotient)), remainder};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

Polynomial Polynomial::monic() const {
    TIEALG_CHECK(!is_zero());
    return scaled(leading_coefficient().inverse());
}

BigRational Polynomial::eval(const BigRational& point) const {
    BigRational value(0);
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
        value = value * point + *it;
    return value;
}

std::pair<Polynomial, BigRational> Polynomial::primitive_integer_parts() const {
    if (is_zero()) return {Polynomial(), BigRational(1)};
    // Clear denominators, then divide out the gcd of the numerators.
    BigRational denominator_lcm(1);
    for (const auto& c : coefficients_)
        if (!c.is_zero())
            denominator_lcm = integer_lcm(denominator_lcm, BigRational(mpq_class(c.raw().get_den())));
    BigRational numerator_gcd(0);
    for (const auto& c : coefficients_)
        if (!c.is_zero()) numerator_gcd = integer_gcd(numerator_gcd, c * denominator_lcm);
    BigRational content = numerator_gcd / denominator_lcm;  // positive by construction
    return {scaled(content.inverse()), content};
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::vector<std::size_t> powers;
    for (std::size_t k = 0; k < coefficients_.size(); ++k)
        if (!coefficients_[k].is_zero()) powers.push_back(k);
    // Descending order reads best ("u^2-1"), but when that would lead with a
    // minus sign and the constant end is positive, ascending reads better
    // ("1-u").  Chosen once here so every printed scalar is reproducible.
    bool ascending = leading_coefficient().sign() < 0 &&
                     coefficients_[powers.front()].sign() > 0;
    if (!ascending) std::reverse(powers.begin(), powers.end());
    std::string text = term_to_string(coefficients_[powers[0]], powers[0], false);
    for (std::size_t t = 1; t < powers.size(); ++t) {
        const BigRational& c = coefficients_[powers[t]];
        text += c.sign() < 0 ? "-" : "+";
        text += term_to_string(c, powers[t], true);
    }
    return text;
}

std::size_t Polynomial::hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (const auto& c : coefficients_) h = h * 1099511628211ull + c.hash();
    return h;
}

}  // namespace tiealg

#include "tiealg/rational.hpp"

#include <cctype>
#include <ostream>

#include "tiealg/errors.hpp"

namespace tiealg {

BigRational::BigRational(long numerator, long denominator) {
    if (denominator == 0) throw DivisionByZero("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

BigRational::BigRational(const mpq_class& value) : value_(value) {
    value_.canonicalize();
}

BigRational BigRational::from_string(const std::string& text) {
    if (text.empty()) throw SyntaxError("empty rational literal", 0);
    // Validate by hand: mpq_class's own parser accepts whitespace and odd
    // bases, which we do not want to leak into our formats.
    std::size_t i = 0;
    auto scan_integer = [&](const char* what) {
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw SyntaxError(std::string("expected ") + what, i);
    };
    scan_integer("integer");
    if (i < text.size()) {
        if (text[i] != '/') throw SyntaxError("unexpected character in rational literal", i);
        ++i;
        scan_integer("denominator");
        if (i != text.size()) throw SyntaxError("trailing characters in rational literal", i);
    }
    mpq_class value;
    if (value.set_str(text, 10) != 0) throw SyntaxError("unparsable rational literal", 0);
    if (value.get_den() == 0) throw DivisionByZero("rational literal with zero denominator");
    value.canonicalize();
    return BigRational(value);
}

BigRational BigRational::operator-() const {
    return BigRational(mpq_class(-value_));
}

BigRational& BigRational::operator+=(const BigRational& other) {
    value_ += other.value_;
    return *this;
}

BigRational& BigRational::operator-=(const BigRational& other) {
    value_ -= other.value_;
    return *this;
}

BigRational& BigRational::operator*=(const BigRational& other) {
    value_ *= other.value_;
    return *this;
}

BigRational& BigRational::operator/=(const BigRational& other) {
    if (other.is_zero()) throw DivisionByZero("division of rational by zero");
    value_ /= other.value_;
    return *this;
}

bool BigRational::is_integer() const {
    return value_.get_den() == 1;
}

BigRational BigRational::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero rational");
    return BigRational(mpq_class(1 / value_));
}

std::string BigRational::to_string() const {
    return value_.get_str();
}

std::size_t BigRational::hash() const {
    // Cheap but adequate: hash the canonical decimal string.
    return std::hash<std::string>{}(to_string());
}

std::ostream& operator<<(std::ostream& out, const BigRational& value) {
    return out << value.to_string();
}

}  // namespace tiealg

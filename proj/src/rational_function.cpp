#include "tiealg/rational_function.hpp"

#include <cctype>
#include <cstdlib>

#include "tiealg/errors.hpp"

namespace tiealg {

RationalFunction::RationalFunction(BigRational constant)
    : numerator_(Polynomial(std::move(constant))), denominator_(BigRational(1)) {}

RationalFunction::RationalFunction(Polynomial numerator)
    : numerator_(std::move(numerator)), denominator_(BigRational(1)) {}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
    if (denominator_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    canonicalize();
}

RationalFunction RationalFunction::variable() {
    return RationalFunction(Polynomial::variable());
}

void RationalFunction::canonicalize() {
    if (numerator_.is_zero()) {
        denominator_ = Polynomial(BigRational(1));
        return;
    }
    Polynomial common = Polynomial::gcd(numerator_, denominator_);
    if (!common.is_one()) {
        numerator_ = numerator_.divmod(common).first;
        denominator_ = denominator_.divmod(common).first;
    }
    BigRational lead = denominator_.leading_coefficient();
    if (!lead.is_one()) {
        BigRational inv = lead.inverse();
        numerator_ = numerator_.scaled(inv);
        denominator_ = denominator_.scaled(inv);
    }
}

BigRational RationalFunction::constant_value() const {
    TIEALG_CHECK(is_constant());
    return numerator_.coefficient(0);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction result(*this);
    result.numerator_ = -result.numerator_;
    return result;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& other) {
    numerator_ = numerator_ * other.denominator_ + other.numerator_ * denominator_;
    denominator_ *= other.denominator_;
    canonicalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& other) {
    numerator_ = numerator_ * other.denominator_ - other.numerator_ * denominator_;
    denominator_ *= other.denominator_;
    canonicalize();
    return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& other) {
    numerator_ *= other.numerator_;
    denominator_ *= other.denominator_;
    canonicalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& other) {
    if (other.is_zero()) throw DivisionByZero("division of rational function by zero");
    numerator_ *= other.denominator_;
    denominator_ *= other.numerator_;
    canonicalize();
    return *this;
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero rational function");
    return RationalFunction(denominator_, numerator_);
}

RationalFunction RationalFunction::pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    RationalFunction result(1);
    RationalFunction base(*this);
    for (long e = exponent; e > 0; e >>= 1) {
        if (e & 1) result *= base;
        base *= base;
    }
    return result;
}

BigRational RationalFunction::eval_at(const BigRational& point) const {
    BigRational bottom = denominator_.eval(point);
    if (bottom.is_zero())
        throw PoleAtPoint("pole of rational function at u = " + point.to_string());
    return numerator_.eval(point) / bottom;
}

std::string RationalFunction::to_string() const {
    if (is_zero()) return "0";
    // Fold the rational content of both sides across the fraction bar so the
    // printed numerator and denominator have integer coefficients.
    auto [num_prim, num_content] = numerator_.primitive_integer_parts();
    auto [den_prim, den_content] = denominator_.primitive_integer_parts();
    BigRational content = num_content / den_content;  // positive, reduced
    Polynomial top = num_prim.scaled(BigRational(mpq_class(content.raw().get_num())));
    Polynomial bottom = den_prim.scaled(BigRational(mpq_class(content.raw().get_den())));
    if (bottom.is_one()) return top.to_string();

    // Parenthesize a side when gluing "/" would change how it re-parses.
    // The numerator only needs parens when it has several terms; the
    // denominator also when its single term carries a coefficient ("2*u").
    auto term_count = [](const Polynomial& p) {
        int terms = 0;
        for (int k = 0; k <= p.degree(); ++k)
            if (!p.coefficient(static_cast<std::size_t>(k)).is_zero()) ++terms;
        return terms;
    };
    auto is_atom = [&](const Polynomial& p) {
        if (term_count(p) != 1) return false;
        const BigRational& c = p.coefficient(static_cast<std::size_t>(p.degree()));
        return p.degree() == 0 ? c.sign() > 0 : c.is_one();
    };
    std::string top_text =
        term_count(top) > 1 ? "(" + top.to_string() + ")" : top.to_string();
    std::string bottom_text =
        is_atom(bottom) ? bottom.to_string() : "(" + bottom.to_string() + ")";
    return top_text + "/" + bottom_text;
}

std::size_t RationalFunction::hash() const {
    return numerator_.hash() * 31 + denominator_.hash();
}

// --- expression parser -------------------------------------------------------

namespace {

// Recursive-descent parser for scalar expressions.  Grammar (standard
// precedence, '^' binds tightest, unary minus below '^'):
//   expr    := term (('+' | '-') term)*
//   term    := factor (('*' | '/') factor)*
//   factor  := ('+' | '-') factor | power
//   power   := primary ['^' ['-'] digits]
//   primary := digits | 'u' | '(' expr ')'
struct ScalarParser {
    const std::string& text;
    std::size_t pos = 0;

    explicit ScalarParser(const std::string& t) : text(t) {}

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_space();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }

    RationalFunction parse_expr() {
        RationalFunction value = parse_term();
        while (true) {
            if (eat('+'))
                value += parse_term();
            else if (eat('-'))
                value -= parse_term();
            else
                return value;
        }
    }

    RationalFunction parse_term() {
        RationalFunction value = parse_factor();
        while (true) {
            if (eat('*'))
                value *= parse_factor();
            else if (eat('/'))
                value /= parse_factor();
            else
                return value;
        }
    }

    RationalFunction parse_factor() {
        if (eat('-')) return -parse_factor();
        if (eat('+')) return parse_factor();
        RationalFunction base = parse_primary();
        if (eat('^')) return base.pow(parse_exponent());
        return base;
    }

    long parse_exponent() {
        skip_space();
        bool negative = false;
        if (pos < text.size() && text[pos] == '-') {
            negative = true;
            ++pos;
        }
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw SyntaxError("expected integer exponent", pos);
        long value = std::strtol(text.substr(start, pos - start).c_str(), nullptr, 10);
        return negative ? -value : value;
    }

    RationalFunction parse_primary() {
        skip_space();
        if (pos >= text.size()) throw SyntaxError("unexpected end of expression", pos);
        char c = text[pos];
        if (c == '(') {
            ++pos;
            RationalFunction inner = parse_expr();
            if (!eat(')')) throw SyntaxError("expected ')'", pos);
            return inner;
        }
        if (c == 'u') {
            ++pos;
            return RationalFunction::variable();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            return RationalFunction(BigRational::from_string(text.substr(start, pos - start)));
        }
        throw SyntaxError(std::string("unexpected character '") + c + "' in scalar expression",
                          pos);
    }
};

}  // namespace

RationalFunction RationalFunction::from_string(const std::string& text) {
    ScalarParser parser(text);
    RationalFunction value = parser.parse_expr();
    parser.skip_space();
    if (parser.pos != text.size())
        throw SyntaxError("trailing characters in scalar expression", parser.pos);
    return value;
}

}  // namespace tiealg

#include "tiealg/element.hpp"

#include <cctype>

#include "tiealg/errors.hpp"

namespace tiealg {

Element::Element(int ambient_n) : ambient_n_(ambient_n) {
    if (ambient_n < 2) throw Unsupported("ambient strand count must be at least 2");
}

Element Element::one(int n) {
    return from_word(n, Word::identity());
}

Element Element::braid(int n, int index) {
    return from_word(n, Word::single(Generator::braid(index)));
}

Element Element::braid_inverse(int n, int index) {
    return from_word(n, Word::single(Generator::braid_inverse(index)));
}

Element Element::tie(int n, int index) {
    return from_word(n, Word::single(Generator::tie(index)));
}

Element Element::from_word(int n, const Word& word, const RationalFunction& coefficient) {
    Element result(n);
    result.add_term(word, coefficient);
    return result;
}

void Element::check_same_ambient(const Element& other) const {
    if (ambient_n_ != other.ambient_n_)
        throw AmbientMismatch("elements live on " + std::to_string(ambient_n_) + " and " +
                              std::to_string(other.ambient_n_) + " strands");
}

void Element::check_word(const Word& word) const {
    if (!word.fits_in(ambient_n_))
        throw IndexOutOfRange("generator index " + std::to_string(word.max_index()) +
                              " does not fit on " + std::to_string(ambient_n_) + " strands");
    for (const auto& g : word.letters())
        if (g.index < 1) throw IndexOutOfRange("generator index must be at least 1");
}

RationalFunction Element::coefficient(const Word& word) const {
    auto it = terms_.find(word);
    return it == terms_.end() ? RationalFunction() : it->second;
}

bool Element::is_single_word() const {
    return terms_.size() == 1 && terms_.begin()->second.is_one();
}

const Word& Element::single_word() const {
    TIEALG_CHECK(is_single_word());
    return terms_.begin()->first;
}

void Element::add_term(const Word& word, const RationalFunction& coefficient) {
    if (coefficient.is_zero()) return;
    check_word(word);
    auto [it, inserted] = terms_.try_emplace(word, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Element Element::operator-() const {
    Element result(ambient_n_);
    for (const auto& [word, coeff] : terms_) result.terms_.emplace(word, -coeff);
    return result;
}

Element& Element::operator+=(const Element& other) {
    check_same_ambient(other);
    for (const auto& [word, coeff] : other.terms_) add_term(word, coeff);
    return *this;
}

Element& Element::operator-=(const Element& other) {
    check_same_ambient(other);
    for (const auto& [word, coeff] : other.terms_) add_term(word, -coeff);
    return *this;
}

Element Element::scaled(const RationalFunction& factor) const {
    Element result(ambient_n_);
    if (factor.is_zero()) return result;
    for (const auto& [word, coeff] : terms_) result.terms_.emplace(word, coeff * factor);
    return result;
}

Element Element::free_mul(const Element& other) const {
    check_same_ambient(other);
    Element result(ambient_n_);
    for (const auto& [left_word, left_coeff] : terms_)
        for (const auto& [right_word, right_coeff] : other.terms_)
            result.add_term(left_word * right_word, left_coeff * right_coeff);
    return result;
}

std::string Element::to_string() const {
    if (terms_.empty()) return "0";
    std::string text;
    bool first = true;
    for (const auto& [word, coeff] : terms_) {
        bool constant = coeff.is_constant();
        // Constants contribute their sign to the separator; other scalars are
        // printed whole inside parentheses after a '+'.
        bool negative = constant && coeff.constant_value().sign() < 0;
        if (first) {
            if (negative) text += "-";
            first = false;
        } else {
            text += negative ? " - " : " + ";
        }
        std::string coeff_text;
        bool unit_magnitude = false;
        if (constant) {
            BigRational magnitude = coeff.constant_value();
            if (negative) magnitude = -magnitude;
            unit_magnitude = magnitude.is_one();
            coeff_text = magnitude.to_string();
        } else {
            coeff_text = "(" + coeff.to_string() + ")";
        }
        if (word.empty())
            text += coeff_text;
        else if (unit_magnitude)
            text += word.to_string();
        else
            text += coeff_text + "*" + word.to_string();
    }
    return text;
}

RationalFunction Element::scalar_image(const RationalFunction& t_value,
                                       const RationalFunction& e_value) const {
    RationalFunction total;
    for (const auto& [word, coeff] : terms_) {
        RationalFunction factor(1);
        for (const auto& g : word.letters()) {
            switch (g.kind) {
                case GeneratorKind::Braid: factor *= t_value; break;
                case GeneratorKind::BraidInverse: factor *= t_value.inverse(); break;
                case GeneratorKind::Tie: factor *= e_value; break;
            }
        }
        total += coeff * factor;
    }
    return total;
}

// --- parser ------------------------------------------------------------------

namespace {

struct ElementParser {
    const std::string& text;
    int ambient_n;
    std::size_t pos = 0;

    ElementParser(const std::string& t, int n) : text(t), ambient_n(n) {}

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }

    // A parenthesized scalar expression: find the matching ')' and hand the
    // interior to the scalar parser so it reports its own syntax errors.
    RationalFunction parse_parenthesized_scalar() {
        std::size_t open = pos;  // text[pos] == '('
        int depth = 0;
        std::size_t k = pos;
        for (; k < text.size(); ++k) {
            if (text[k] == '(') ++depth;
            if (text[k] == ')' && --depth == 0) break;
        }
        if (k == text.size()) throw SyntaxError("unbalanced '(' in coefficient", open);
        std::string inner = text.substr(open + 1, k - open - 1);
        RationalFunction value;
        try {
            value = RationalFunction::from_string(inner);
        } catch (const SyntaxError& e) {
            throw SyntaxError(std::string("bad coefficient: ") + e.what(), open + 1);
        }
        pos = k + 1;
        return value;
    }

    BigRational parse_rational_literal() {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        std::size_t slash = pos;
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            std::size_t den_start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == den_start) throw SyntaxError("expected denominator digits", pos);
        }
        (void)slash;
        return BigRational::from_string(text.substr(start, pos - start));
    }

    Generator parse_generator() {
        char head = text[pos];
        std::size_t head_pos = pos;
        ++pos;
        std::size_t digits_start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits_start) throw SyntaxError("expected generator index", pos);
        int index = std::stoi(text.substr(digits_start, pos - digits_start));
        if (index < 1 || index > ambient_n - 1)
            throw IndexOutOfRange("generator index " + std::to_string(index) +
                                  " does not fit on " + std::to_string(ambient_n) + " strands");
        bool inverse = false;
        if (pos < text.size() && text[pos] == '^') {
            if (text.compare(pos, 3, "^-1") != 0)
                throw SyntaxError("only the exponent ^-1 is allowed on a generator", pos);
            pos += 3;
            inverse = true;
        }
        if (head == 'E') {
            if (inverse) throw SyntaxError("ties are idempotent, not invertible", head_pos);
            return Generator::tie(index);
        }
        return inverse ? Generator::braid_inverse(index) : Generator::braid(index);
    }

    // word := '1' | gen+   (letters may be space-separated or juxtaposed)
    Word parse_word() {
        Word word;
        while (true) {
            char c = peek();
            if (c == 'T' || c == 'E') {
                word.push_back(parse_generator());
            } else if (c == '1' && word.empty()) {
                ++pos;
                return word;  // the identity word
            } else {
                break;
            }
        }
        if (word.empty()) throw SyntaxError("expected a word", pos);
        return word;
    }

    // term := '('scalar')' ['*' word] | rational ['*' word] | word
    Element parse_term() {
        char c = peek();
        RationalFunction coeff(1);
        bool have_coeff = false;
        if (c == '(') {
            coeff = parse_parenthesized_scalar();
            have_coeff = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            // Could be the identity word "1" or a literal coefficient; both
            // parse the same way ("1" is the coefficient of the empty word).
            coeff = BigRational(parse_rational_literal());
            have_coeff = true;
        }
        if (have_coeff) {
            if (peek() == '*') {
                ++pos;
                return Element::from_word(ambient_n, parse_word(), coeff);
            }
            return Element::from_word(ambient_n, Word::identity(), coeff);
        }
        return Element::from_word(ambient_n, parse_word());
    }

    Element parse_element() {
        Element total(ambient_n);
        bool negate = false;
        char lead = peek();
        if (lead == '-') {
            negate = true;
            ++pos;
        } else if (lead == '+') {
            ++pos;
        }
        Element term = parse_term();
        total += negate ? -term : term;
        while (true) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos;
                Element next = parse_term();
                total += (c == '-') ? -next : next;
            } else {
                break;
            }
        }
        skip_space();
        if (pos != text.size()) throw SyntaxError("trailing characters in element", pos);
        return total;
    }
};

}  // namespace

Element Element::parse(int n, const std::string& text) {
    if (n < 2) throw Unsupported("ambient strand count must be at least 2");
    ElementParser parser(text, n);
    return parser.parse_element();
}

}  // namespace tiealg

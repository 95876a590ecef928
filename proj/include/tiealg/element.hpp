#pragma once

#include <map>
#include <string>

#include "tiealg/rational_function.hpp"
#include "tiealg/word.hpp"

namespace tiealg {

// A formal Q(u)-linear combination of words, tagged with the ambient strand
// count n.  This is the free layer: multiplication concatenates words and no
// relation is ever applied here (see rewrite.hpp for reduction).
//
// Invariants: no stored coefficient is zero; every word fits the ambient n;
// terms iterate in length-lex word order, which is also print order.
class Element {
public:
    explicit Element(int ambient_n);

    static Element zero(int n) { return Element(n); }
    static Element one(int n);
    static Element braid(int n, int index);          // T_index
    static Element braid_inverse(int n, int index);  // T_index^-1
    static Element tie(int n, int index);            // E_index
    static Element from_word(int n, const Word& word,
                             const RationalFunction& coefficient = RationalFunction(1));

    // Text form, e.g. "T1 E2 T1", "(u-1)*E1 T1 + 1", "1/2*... " is not
    // accepted: a coefficient is either a bare rational literal or a
    // parenthesized scalar expression, joined to its word with '*'.
    // Throws SyntaxError (with position) or IndexOutOfRange.
    static Element parse(int n, const std::string& text);

    int ambient() const { return ambient_n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Word, RationalFunction>& terms() const { return terms_; }
    RationalFunction coefficient(const Word& word) const;

    // True when the element is a single word with coefficient one.
    bool is_single_word() const;
    const Word& single_word() const;

    void add_term(const Word& word, const RationalFunction& coefficient);

    Element operator-() const;
    Element& operator+=(const Element& other);
    Element& operator-=(const Element& other);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }

    Element scaled(const RationalFunction& factor) const;

    // Free product: concatenates words pairwise, collects equal words.
    Element free_mul(const Element& other) const;
    friend Element operator*(const Element& a, const Element& b) { return a.free_mul(b); }

    bool operator==(const Element& other) const {
        return ambient_n_ == other.ambient_n_ && terms_ == other.terms_;
    }

    // Deterministic text: terms in length-lex order; unit coefficients are
    // folded into the sign; constant coefficients print bare, other scalars
    // parenthesized.  The zero element prints "0".
    std::string to_string() const;

    // Image under the one-dimensional representation T_i -> t, E_i -> e.
    // Used as an engine-independent oracle: any sound rewrite preserves it.
    RationalFunction scalar_image(const RationalFunction& t_value,
                                  const RationalFunction& e_value) const;

private:
    void check_same_ambient(const Element& other) const;
    void check_word(const Word& word) const;

    int ambient_n_;
    std::map<Word, RationalFunction> terms_;
};

}  // namespace tiealg

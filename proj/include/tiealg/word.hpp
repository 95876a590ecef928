#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace tiealg {

// One letter of a monomial word: a positive braid crossing T_i, its inverse,
// or a tie E_i.  Indices are 1-based; index i acts on strands i and i+1, so a
// letter is valid in the algebra on n strands when 1 <= index <= n-1.
enum class GeneratorKind : std::uint8_t { Braid = 0, BraidInverse = 1, Tie = 2 };

struct Generator {
    GeneratorKind kind;
    int index;

    static Generator braid(int index) { return {GeneratorKind::Braid, index}; }
    static Generator braid_inverse(int index) { return {GeneratorKind::BraidInverse, index}; }
    static Generator tie(int index) { return {GeneratorKind::Tie, index}; }

    bool is_braid() const { return kind == GeneratorKind::Braid; }
    bool is_braid_inverse() const { return kind == GeneratorKind::BraidInverse; }
    bool is_tie() const { return kind == GeneratorKind::Tie; }

    // Total order on letters used by the length-lex word order: all letters
    // on strand pair i come before those on pair i+1, and within a pair
    // T_i < T_i^-1 < E_i.
    int rank() const { return (index - 1) * 3 + static_cast<int>(kind); }

    std::string to_string() const;

    friend bool operator==(const Generator& a, const Generator& b) {
        return a.kind == b.kind && a.index == b.index;
    }
    friend bool operator!=(const Generator& a, const Generator& b) { return !(a == b); }
    friend bool operator<(const Generator& a, const Generator& b) { return a.rank() < b.rank(); }
};

// A word in the generators: a (possibly empty) product read left to right.
// Words carry no ambient strand count of their own; validity against an
// ambient n is checked where words enter an Element.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Generator> letters) : letters_(std::move(letters)) {}

    static Word identity() { return Word(); }
    static Word single(Generator g) { return Word({g}); }

    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }
    const std::vector<Generator>& letters() const { return letters_; }
    const Generator& letter(std::size_t k) const { return letters_[k]; }

    void push_back(Generator g) { letters_.push_back(g); }

    Word& operator*=(const Word& other);
    friend Word operator*(Word a, const Word& b) { return a *= b; }

    // Largest generator index present; 0 for the empty word.
    int max_index() const;
    // True when every letter has index within [1, n-1].
    bool fits_in(int n) const { return max_index() <= n - 1; }
    bool has_braid_inverse() const;

    // Length-lex: shorter words first, equal lengths by letter ranks.
    std::strong_ordering operator<=>(const Word& other) const;
    bool operator==(const Word& other) const { return letters_ == other.letters_; }

    // Space-separated letters; the empty word prints as "1".
    std::string to_string() const;

    std::size_t hash() const;

private:
    std::vector<Generator> letters_;
};

}  // namespace tiealg

template <>
struct std::hash<tiealg::Word> {
    std::size_t operator()(const tiealg::Word& w) const { return w.hash(); }
};

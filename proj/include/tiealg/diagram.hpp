#pragma once

#include <string>
#include <vector>

#include "tiealg/word.hpp"

namespace tiealg {

// A tied-braid diagram: a stack of rows read top to bottom, one row per
// generator letter.  A row either leaves all strands alone, crosses a pair of
// adjacent strands (with a sign choosing which strand passes over), or joins
// an adjacent pair with a tie, drawn dashed.
//
// Diagrams and words correspond one to one (identity rows aside), and
// multiplying words is stacking diagrams.  No relation is ever applied here:
// equality of the elements two diagrams represent is a question for
// check_identity on their words.
enum class RowKind { Identity, Crossing, Tie };

struct Row {
    RowKind kind = RowKind::Identity;
    int index = 0;         // leftmost strand of the pair; meaningful unless Identity
    bool positive = true;  // crossing sign; meaningful only for Crossing

    static Row identity() { return {RowKind::Identity, 0, true}; }
    static Row crossing(int index, bool positive) { return {RowKind::Crossing, index, positive}; }
    static Row tie(int index) { return {RowKind::Tie, index, true}; }

    friend bool operator==(const Row& a, const Row& b) {
        if (a.kind != b.kind) return false;
        if (a.kind == RowKind::Identity) return true;
        return a.index == b.index && (a.kind != RowKind::Crossing || a.positive == b.positive);
    }
};

class TiedBraidDiagram {
public:
    // Validates every row index against the strand count.
    TiedBraidDiagram(int strands, std::vector<Row> rows);

    // One row per letter; the empty word becomes a single identity row.
    static TiedBraidDiagram from_word(int strands, const Word& word);

    int strands() const { return strands_; }
    const std::vector<Row>& rows() const { return rows_; }

    // Reads the rows top to bottom, skipping identity rows.
    Word to_word() const;

    // The product diagram: `below` is glued underneath this one.
    TiedBraidDiagram stacked(const TiedBraidDiagram& below) const;

    // Fixed-pitch character art: strands are '|' columns four cells apart,
    // a tie is a dashed rung ':- -:', a crossing is a two-line X block and a
    // negative crossing carries a dot at the crossing point.
    std::string render_ascii() const;

    // SVG 1.1, 40 px strand pitch, byte-for-byte deterministic.  Ties are
    // dashed; the under-strand of a crossing is drawn with a gap.
    std::string render_svg() const;

    // {"n": ..., "rows": [{"kind": "crossing", "i": 1, "sign": "+"}, ...]}
    std::string to_json() const;
    static TiedBraidDiagram from_json(const std::string& text);

    bool operator==(const TiedBraidDiagram& other) const {
        return strands_ == other.strands_ && rows_ == other.rows_;
    }

private:
    int strands_;
    std::vector<Row> rows_;
};

}  // namespace tiealg

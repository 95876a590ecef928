#include "tiealg/diagram.hpp"

#include <sstream>

#include "json.hpp"
#include "tiealg/errors.hpp"

namespace tiealg {

namespace {

void check_strands(int strands) {
    if (strands < 2)
        throw Unsupported("diagrams need at least two strands, got " + std::to_string(strands));
}

void check_row(int strands, const Row& row) {
    if (row.kind == RowKind::Identity) return;
    if (row.index < 1 || row.index > strands - 1)
        throw IndexOutOfRange("row index " + std::to_string(row.index) +
                              " out of range for " + std::to_string(strands) + " strands");
}

}  // namespace

TiedBraidDiagram::TiedBraidDiagram(int strands, std::vector<Row> rows)
    : strands_(strands), rows_(std::move(rows)) {
    check_strands(strands_);
    for (const Row& row : rows_) check_row(strands_, row);
}

TiedBraidDiagram TiedBraidDiagram::from_word(int strands, const Word& word) {
    std::vector<Row> rows;
    rows.reserve(word.size());
    for (const Generator& g : word.letters()) {
        switch (g.kind) {
            case GeneratorKind::Braid: rows.push_back(Row::crossing(g.index, true)); break;
            case GeneratorKind::BraidInverse: rows.push_back(Row::crossing(g.index, false)); break;
            case GeneratorKind::Tie: rows.push_back(Row::tie(g.index)); break;
        }
    }
    if (rows.empty()) rows.push_back(Row::identity());
    return TiedBraidDiagram(strands, std::move(rows));
}

Word TiedBraidDiagram::to_word() const {
    Word word;
    for (const Row& row : rows_) {
        switch (row.kind) {
            case RowKind::Identity: break;
            case RowKind::Crossing:
                word.push_back(row.positive ? Generator::braid(row.index)
                                            : Generator::braid_inverse(row.index));
                break;
            case RowKind::Tie: word.push_back(Generator::tie(row.index)); break;
        }
    }
    return word;
}

TiedBraidDiagram TiedBraidDiagram::stacked(const TiedBraidDiagram& below) const {
    if (strands_ != below.strands_)
        throw AmbientMismatch("cannot stack a diagram on " + std::to_string(below.strands_) +
                              " strands below one on " + std::to_string(strands_));
    std::vector<Row> rows = rows_;
    rows.insert(rows.end(), below.rows_.begin(), below.rows_.end());
    return TiedBraidDiagram(strands_, std::move(rows));
}

// --- character art ----------------------------------------------------------

namespace {

constexpr int kAsciiPitch = 4;

std::string plain_line(int strands) {
    std::string line((strands - 1) * kAsciiPitch + 1, ' ');
    for (int s = 0; s < strands; ++s) line[s * kAsciiPitch] = '|';
    return line;
}

void rstrip(std::string& line) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
}

}  // namespace

std::string TiedBraidDiagram::render_ascii() const {
    std::vector<std::string> lines;
    lines.push_back(plain_line(strands_));
    for (const Row& row : rows_) {
        const int c = (row.index - 1) * kAsciiPitch;
        switch (row.kind) {
            case RowKind::Identity: {
                lines.push_back(plain_line(strands_));
                break;
            }
            case RowKind::Tie: {
                std::string line = plain_line(strands_);
                line.replace(c, 5, ":- -:");
                lines.push_back(line);
                break;
            }
            case RowKind::Crossing: {
                std::string top = plain_line(strands_);
                std::string bottom = plain_line(strands_);
                top[c] = ' ';
                top[c + kAsciiPitch] = ' ';
                bottom[c] = ' ';
                bottom[c + kAsciiPitch] = ' ';
                top[c + 1] = '\\';
                top[c + 3] = '/';
                if (!row.positive) top[c + 2] = '.';
                bottom[c + 1] = '/';
                bottom[c + 3] = '\\';
                lines.push_back(top);
                lines.push_back(bottom);
                break;
            }
        }
        lines.push_back(plain_line(strands_));
    }
    std::string out;
    for (std::string& line : lines) {
        rstrip(line);
        out += line;
        out += '\n';
    }
    return out;
}

// --- SVG --------------------------------------------------------------------

namespace {

constexpr int kSvgPitch = 40;
constexpr int kSvgMargin = 20;
constexpr int kSvgRowHeight = 40;
// The under-strand of a crossing is broken between 35% and 65% of its run;
// with a 40 px pitch both break points land on integer coordinates.
constexpr int kSvgGapOffset = 14;

void svg_line(std::ostream& os, int x1, int y1, int x2, int y2, bool dashed = false) {
    os << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
       << "\"";
    if (dashed) os << " stroke-dasharray=\"6 4\"";
    os << "/>\n";
}

}  // namespace

std::string TiedBraidDiagram::render_svg() const {
    const int width = 2 * kSvgMargin + (strands_ - 1) * kSvgPitch;
    const int height = 2 * kSvgMargin + static_cast<int>(rows_.size()) * kSvgRowHeight;
    const auto strand_x = [](int s) { return kSvgMargin + (s - 1) * kSvgPitch; };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
       << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    os << "<g stroke=\"black\" stroke-width=\"2\" fill=\"none\" stroke-linecap=\"round\">\n";

    // Margins above and below the row stack.
    for (int s = 1; s <= strands_; ++s) svg_line(os, strand_x(s), 0, strand_x(s), kSvgMargin);
    int y = kSvgMargin;
    for (const Row& row : rows_) {
        const int y0 = y, y1 = y + kSvgRowHeight;
        switch (row.kind) {
            case RowKind::Identity: {
                for (int s = 1; s <= strands_; ++s)
                    svg_line(os, strand_x(s), y0, strand_x(s), y1);
                break;
            }
            case RowKind::Tie: {
                for (int s = 1; s <= strands_; ++s)
                    svg_line(os, strand_x(s), y0, strand_x(s), y1);
                svg_line(os, strand_x(row.index), y0 + kSvgRowHeight / 2,
                         strand_x(row.index + 1), y0 + kSvgRowHeight / 2, true);
                break;
            }
            case RowKind::Crossing: {
                for (int s = 1; s <= strands_; ++s) {
                    if (s == row.index || s == row.index + 1) continue;
                    svg_line(os, strand_x(s), y0, strand_x(s), y1);
                }
                const int xa = strand_x(row.index), xb = strand_x(row.index + 1);
                // The over-strand runs unbroken; the under-strand is split
                // around the crossing point.  A positive crossing takes the
                // left strand over.
                const int over_from = row.positive ? xa : xb;
                const int over_to = row.positive ? xb : xa;
                const int under_from = row.positive ? xb : xa;
                const int under_to = row.positive ? xa : xb;
                svg_line(os, over_from, y0, over_to, y1);
                const int step = under_to > under_from ? kSvgGapOffset : -kSvgGapOffset;
                svg_line(os, under_from, y0, under_from + step, y0 + kSvgGapOffset);
                svg_line(os, under_to - step, y1 - kSvgGapOffset, under_to, y1);
                break;
            }
        }
        y = y1;
    }
    for (int s = 1; s <= strands_; ++s) svg_line(os, strand_x(s), y, strand_x(s), y + kSvgMargin);

    os << "</g>\n</svg>\n";
    return os.str();
}

// --- JSON -------------------------------------------------------------------

std::string TiedBraidDiagram::to_json() const {
    nlohmann::ordered_json doc;
    doc["n"] = strands_;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const Row& row : rows_) {
        nlohmann::ordered_json entry;
        switch (row.kind) {
            case RowKind::Identity: entry["kind"] = "identity"; break;
            case RowKind::Crossing:
                entry["kind"] = "crossing";
                entry["i"] = row.index;
                entry["sign"] = row.positive ? "+" : "-";
                break;
            case RowKind::Tie:
                entry["kind"] = "tie";
                entry["i"] = row.index;
                break;
        }
        doc["rows"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

TiedBraidDiagram TiedBraidDiagram::from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw SyntaxError(std::string("invalid diagram JSON: ") + err.what(), 0);
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("rows") ||
        !doc["n"].is_number_integer() || !doc["rows"].is_array())
        throw SyntaxError("diagram JSON must be {\"n\": int, \"rows\": [...]}", 0);
    std::vector<Row> rows;
    for (const auto& entry : doc["rows"]) {
        if (!entry.is_object() || !entry.contains("kind") || !entry["kind"].is_string())
            throw SyntaxError("diagram row must carry a string \"kind\"", 0);
        const std::string kind = entry["kind"];
        if (kind == "identity") {
            rows.push_back(Row::identity());
            continue;
        }
        if (!entry.contains("i") || !entry["i"].is_number_integer())
            throw SyntaxError("diagram row of kind \"" + kind + "\" needs an integer \"i\"", 0);
        const int index = entry["i"];
        if (kind == "tie") {
            rows.push_back(Row::tie(index));
        } else if (kind == "crossing") {
            std::string sign = entry.value("sign", "+");
            if (sign != "+" && sign != "-")
                throw SyntaxError("crossing sign must be \"+\" or \"-\"", 0);
            rows.push_back(Row::crossing(index, sign == "+"));
        } else {
            throw SyntaxError("unknown diagram row kind \"" + kind + "\"", 0);
        }
    }
    return TiedBraidDiagram(doc["n"], std::move(rows));
}

}  // namespace tiealg

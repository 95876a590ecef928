#include "tiealg/word.hpp"

#include <algorithm>

namespace tiealg {

std::string Generator::to_string() const {
    std::string text = is_tie() ? "E" : "T";
    text += std::to_string(index);
    if (is_braid_inverse()) text += "^-1";
    return text;
}

Word& Word::operator*=(const Word& other) {
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
    return *this;
}

int Word::max_index() const {
    int top = 0;
    for (const auto& g : letters_) top = std::max(top, g.index);
    return top;
}

bool Word::has_braid_inverse() const {
    return std::any_of(letters_.begin(), letters_.end(),
                       [](const Generator& g) { return g.is_braid_inverse(); });
}

std::strong_ordering Word::operator<=>(const Word& other) const {
    if (auto cmp = letters_.size() <=> other.letters_.size(); cmp != 0) return cmp;
    for (std::size_t k = 0; k < letters_.size(); ++k)
        if (auto cmp = letters_[k].rank() <=> other.letters_[k].rank(); cmp != 0) return cmp;
    return std::strong_ordering::equal;
}

std::string Word::to_string() const {
    if (letters_.empty()) return "1";
    std::string text = letters_[0].to_string();
    for (std::size_t k = 1; k < letters_.size(); ++k) text += " " + letters_[k].to_string();
    return text;
}

std::size_t Word::hash() const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (const auto& g : letters_) {
        h ^= static_cast<std::size_t>(g.rank()) + 0x9e3779b9u;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace tiealg

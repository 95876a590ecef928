#include "tiealg/partitions.hpp"

#include <algorithm>
#include <numeric>

#include "tiealg/errors.hpp"

namespace tiealg {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw IndexOutOfRange("partition parts must be positive: " + std::to_string(parts_[i]));
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw IndexOutOfRange("partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(const std::string& text) {
    if (text == "phi" || text == "[]") return Partition();
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw SyntaxError("partition must look like [3,1]", 0);
    std::vector<int> parts;
    std::size_t pos = 1;
    while (pos < text.size() - 1) {
        std::size_t digits = 0;
        int value = 0;
        while (pos + digits < text.size() - 1 && text[pos + digits] >= '0' &&
               text[pos + digits] <= '9') {
            value = value * 10 + (text[pos + digits] - '0');
            ++digits;
        }
        if (digits == 0) throw SyntaxError("expected a part", pos);
        parts.push_back(value);
        pos += digits;
        if (pos < text.size() - 1) {
            if (text[pos] != ',') throw SyntaxError("expected ','", pos);
            ++pos;
            if (pos >= text.size() - 1) throw SyntaxError("expected a part after ','", pos);
        }
    }
    return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> cols(static_cast<std::size_t>(parts_[0]), 0);
    for (int part : parts_)
        for (int c = 0; c < part; ++c) ++cols[static_cast<std::size_t>(c)];
    return Partition(std::move(cols));
}

std::string Partition::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + "]";
}

namespace {

void extend_partitions(std::vector<int>& prefix, int remaining, int cap,
                       std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(cap, remaining); part >= 1; --part) {
        prefix.push_back(part);
        extend_partitions(prefix, remaining - part, part, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> all_partitions(int n) {
    TIEALG_CHECK(n >= 0);
    std::vector<Partition> out;
    std::vector<int> prefix;
    extend_partitions(prefix, n, n, out);
    return out;
}

long hook_length_product(const Partition& shape) {
    const Partition conj = shape.conjugate();
    long product = 1;
    for (int r = 0; r < shape.row_count(); ++r)
        for (int c = 0; c < shape.row_length(r); ++c) {
            const long arm = shape.row_length(r) - c - 1;
            const long leg = conj.row_length(c) - r - 1;
            product *= arm + leg + 1;
        }
    return product;
}

long factorial(int n) {
    TIEALG_CHECK(n >= 0 && n <= 20);
    long result = 1;
    for (int i = 2; i <= n; ++i) result *= i;
    return result;
}

StandardTableau::StandardTableau(Partition shape, std::vector<std::vector<int>> grid)
    : shape_(std::move(shape)), grid_(std::move(grid)) {
    TIEALG_CHECK(static_cast<int>(grid_.size()) == shape_.row_count());
    std::vector<bool> seen(static_cast<std::size_t>(shape_.size()), false);
    for (int r = 0; r < shape_.row_count(); ++r) {
        TIEALG_CHECK(static_cast<int>(grid_[static_cast<std::size_t>(r)].size()) ==
                     shape_.row_length(r));
        for (int c = 0; c < shape_.row_length(r); ++c) {
            const int v = grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            TIEALG_CHECK(v >= 1 && v <= shape_.size());
            TIEALG_CHECK(!seen[static_cast<std::size_t>(v - 1)]);
            seen[static_cast<std::size_t>(v - 1)] = true;
            if (c > 0)
                TIEALG_CHECK(grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)] <
                             v);
            if (r > 0)
                TIEALG_CHECK(grid_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] <
                             v);
        }
    }
}

std::pair<int, int> StandardTableau::cell_of(int entry) const {
    for (int r = 0; r < shape_.row_count(); ++r)
        for (int c = 0; c < shape_.row_length(r); ++c)
            if (grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] == entry)
                return {r, c};
    throw IndexOutOfRange("entry " + std::to_string(entry) + " not in tableau");
}

int StandardTableau::content_of(int entry) const {
    const auto [row, col] = cell_of(entry);
    return col - row;
}

std::vector<int> StandardTableau::reading_word() const {
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(shape_.size()));
    for (const auto& row : grid_) word.insert(word.end(), row.begin(), row.end());
    return word;
}

StandardTableau StandardTableau::with_swapped(int k) const {
    auto grid = grid_;
    const auto [r1, c1] = cell_of(k);
    const auto [r2, c2] = cell_of(k + 1);
    std::swap(grid[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c1)],
              grid[static_cast<std::size_t>(r2)][static_cast<std::size_t>(c2)]);
    return StandardTableau(shape_, std::move(grid));
}

namespace {

void fill_tableaux(const Partition& shape, std::vector<std::vector<int>>& grid,
                   std::vector<int>& row_fill, int next,
                   std::vector<StandardTableau>& out) {
    if (next > shape.size()) {
        out.emplace_back(shape, grid);
        return;
    }
    for (int r = 0; r < shape.row_count(); ++r) {
        const int c = row_fill[static_cast<std::size_t>(r)];
        if (c >= shape.row_length(r)) continue;
        // Column constraint: the cell above must already be filled.
        if (r > 0 && row_fill[static_cast<std::size_t>(r - 1)] <= c) continue;
        grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = next;
        ++row_fill[static_cast<std::size_t>(r)];
        fill_tableaux(shape, grid, row_fill, next + 1, out);
        --row_fill[static_cast<std::size_t>(r)];
    }
}

}  // namespace

std::vector<StandardTableau> standard_tableaux(const Partition& shape) {
    std::vector<std::vector<int>> grid;
    for (int r = 0; r < shape.row_count(); ++r)
        grid.emplace_back(static_cast<std::size_t>(shape.row_length(r)), 0);
    std::vector<int> row_fill(static_cast<std::size_t>(shape.row_count()), 0);
    std::vector<StandardTableau> out;
    fill_tableaux(shape, grid, row_fill, 1, out);
    std::sort(out.begin(), out.end(), [](const StandardTableau& a, const StandardTableau& b) {
        return a.reading_word() < b.reading_word();
    });
    return out;
}

}  // namespace tiealg

#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace tiealg {

// An integer partition, kept as its weakly decreasing list of positive parts.
// The empty partition (of zero) is a legal value and shows up routinely as
// one half of a bipartition.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);  // validates shape

    // Accepts "[3,1]", "[]" and the spelled-out empty partition "phi".
    static Partition parse(const std::string& text);

    int size() const;  // sum of parts
    int row_count() const { return static_cast<int>(parts_.size()); }
    int row_length(int row) const { return parts_[static_cast<std::size_t>(row)]; }
    const std::vector<int>& parts() const { return parts_; }
    bool is_empty() const { return parts_.empty(); }

    Partition conjugate() const;

    std::string to_string() const;  // "[3,1]"; "[]" for the empty partition

    bool operator==(const Partition& other) const { return parts_ == other.parts_; }
    std::strong_ordering operator<=>(const Partition& other) const {
        return parts_ <=> other.parts_;
    }

private:
    std::vector<int> parts_;
};

// All partitions of n in descending lexicographic order, [n] first.
std::vector<Partition> all_partitions(int n);

// Product of the hook lengths over all cells.
long hook_length_product(const Partition& shape);

long factorial(int n);

// A standard filling of a partition shape: the grid holds 1..n increasing
// along rows and down columns.  Cells are addressed 0-based.
class StandardTableau {
public:
    StandardTableau(Partition shape, std::vector<std::vector<int>> grid);

    const Partition& shape() const { return shape_; }
    int size() const { return shape_.size(); }
    const std::vector<std::vector<int>>& grid() const { return grid_; }

    // Row and column of the cell holding `entry` (1-based entry).
    std::pair<int, int> cell_of(int entry) const;
    // Column minus row of that cell — the axial coordinate the seminormal
    // construction is built from.
    int content_of(int entry) const;

    // Concatenation of the rows, top to bottom; the project-wide sort key.
    std::vector<int> reading_word() const;

    // Swaps the entries k and k+1; only meaningful when the result is again
    // standard (the caller checks rows/columns first).
    StandardTableau with_swapped(int k) const;

    bool operator==(const StandardTableau& other) const { return grid_ == other.grid_; }

private:
    Partition shape_;
    std::vector<std::vector<int>> grid_;
};

// Every standard tableau of the shape, sorted by reading word.  The empty
// shape yields the single empty tableau.
std::vector<StandardTableau> standard_tableaux(const Partition& shape);

}  // namespace tiealg

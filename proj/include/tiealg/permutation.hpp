#pragma once

#include <compare>
#include <string>
#include <vector>

namespace tiealg {

// A permutation of {1, ..., n} in one-line notation.  Composition is
// apply-first throughout the project: (a * b)(x) = b(a(x)).  The block-swap
// and coset laws below pin this convention down empirically; their tests are
// the canary if it is ever changed.
class Permutation {
public:
    explicit Permutation(int n);                   // identity
    explicit Permutation(std::vector<int> images); // validates a bijection

    static Permutation identity(int n) { return Permutation(n); }
    // The adjacent transposition swapping i and i+1.
    static Permutation transposition(int n, int i);

    int size() const { return static_cast<int>(images_.size()); }
    int apply(int x) const;                        // 1-based
    const std::vector<int>& one_line() const { return images_; }

    Permutation inverse() const;
    friend Permutation operator*(const Permutation& a, const Permutation& b);

    bool operator==(const Permutation& other) const { return images_ == other.images_; }
    std::strong_ordering operator<=>(const Permutation& other) const {
        return images_ <=> other.images_;
    }

    // Coxeter length = inversion count.
    int coxeter_length() const;

    std::string to_string() const;                 // "[2,1,3]"

private:
    std::vector<int> images_;
};

std::vector<Permutation> all_permutations(int n);

// The block swap sending positions 1..a to values b+1..b+a and positions
// a+1..n to 1..b; equivalently the b-th power of the full forward cycle.
// Identity when a or b is zero.
Permutation block_swap(int a, int b);

// Distinguished (minimal-length) representatives of the cosets of
// S_a x S_b in S_{a+b}: exactly the permutations increasing on the position
// blocks {1..a} and {a+1..n}, listed in one-line lexicographic order.
struct CosetSystem {
    int a = 0;
    int b = 0;
    std::vector<Permutation> reps;
    Permutation w;  // block_swap(a, b), always one of the reps

    CosetSystem() : w(1) {}
    bool contains(const Permutation& p) const;
    // Position of p in reps; -1 when absent.
    int index_of(const Permutation& p) const;
};

CosetSystem coset_reps(int a, int b);

// The two exclusive outcomes of multiplying a distinguished representative x
// by an adjacent transposition s on the right: either x*s is again a
// representative, or x*s = s' * x for a block-preserving adjacent
// transposition s' (returned by its index).
struct DeodharStep {
    bool stays_in_reps = false;
    Permutation moved;        // x*s when stays_in_reps
    int reflected_index = 0;  // j with s' = s_j otherwise

    DeodharStep() : moved(1) {}
};

DeodharStep deodhar_step(const CosetSystem& system, const Permutation& x, int k);

// For the balanced system X of S_m x S_m in S_{2m}: the fixed-point-free
// involution u -> block_swap(m,m) * u splits X into Y and its image; Y keeps
// the lexicographically smaller member of each pair.
std::vector<Permutation> split_y(int m);

}  // namespace tiealg

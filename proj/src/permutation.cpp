#include "tiealg/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "tiealg/errors.hpp"

namespace tiealg {

Permutation::Permutation(int n) {
    TIEALG_CHECK(n >= 1);
    images_.resize(static_cast<std::size_t>(n));
    std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    if (n < 1) throw IndexOutOfRange("permutation must move at least one point");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : images_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
            throw IndexOutOfRange("one-line notation must list 1.." + std::to_string(n) +
                                  " exactly once");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

Permutation Permutation::transposition(int n, int i) {
    if (i < 1 || i >= n)
        throw IndexOutOfRange("transposition index " + std::to_string(i) +
                              " outside 1.." + std::to_string(n - 1));
    Permutation p(n);
    std::swap(p.images_[static_cast<std::size_t>(i - 1)],
              p.images_[static_cast<std::size_t>(i)]);
    return p;
}

int Permutation::apply(int x) const {
    if (x < 1 || x > size())
        throw IndexOutOfRange("point " + std::to_string(x) + " outside 1.." +
                              std::to_string(size()));
    return images_[static_cast<std::size_t>(x - 1)];
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int x = 1; x <= size(); ++x) inv[static_cast<std::size_t>(apply(x) - 1)] = x;
    return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw AmbientMismatch("composing permutations of different degrees");
    std::vector<int> images(a.images_.size());
    for (int x = 1; x <= a.size(); ++x)
        images[static_cast<std::size_t>(x - 1)] = b.apply(a.apply(x));
    return Permutation(std::move(images));
}

int Permutation::coxeter_length() const {
    int inversions = 0;
    for (int x = 1; x <= size(); ++x)
        for (int y = x + 1; y <= size(); ++y)
            if (apply(x) > apply(y)) ++inversions;
    return inversions;
}

std::string Permutation::to_string() const {
    std::string out = "[";
    for (int x = 1; x <= size(); ++x) {
        if (x > 1) out += ",";
        out += std::to_string(apply(x));
    }
    return out + "]";
}

std::vector<Permutation> all_permutations(int n) {
    TIEALG_CHECK(n >= 1 && n <= 8);
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

Permutation block_swap(int a, int b) {
    TIEALG_CHECK(a >= 0 && b >= 0 && a + b >= 1);
    const int n = a + b;
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 1; i <= a; ++i) images[static_cast<std::size_t>(i - 1)] = b + i;
    for (int j = 1; j <= b; ++j) images[static_cast<std::size_t>(a + j - 1)] = j;
    return Permutation(std::move(images));
}

namespace {

bool increasing_on_blocks(const Permutation& p, int a) {
    const int n = p.size();
    for (int x = 1; x < n; ++x) {
        if (x == a) continue;  // block boundary
        if (p.apply(x) > p.apply(x + 1)) return false;
    }
    return true;
}

}  // namespace

bool CosetSystem::contains(const Permutation& p) const { return index_of(p) >= 0; }

int CosetSystem::index_of(const Permutation& p) const {
    const auto it = std::lower_bound(reps.begin(), reps.end(), p);
    if (it == reps.end() || !(*it == p)) return -1;
    return static_cast<int>(it - reps.begin());
}

CosetSystem coset_reps(int a, int b) {
    TIEALG_CHECK(a >= 0 && b >= 0 && a + b >= 1 && a + b <= 8);
    CosetSystem system;
    system.a = a;
    system.b = b;
    for (const Permutation& p : all_permutations(a + b))
        if (increasing_on_blocks(p, a)) system.reps.push_back(p);
    // all_permutations yields lexicographic order already; keep it explicit.
    std::sort(system.reps.begin(), system.reps.end());
    system.w = block_swap(a, b);
    TIEALG_CHECK(system.contains(system.w));
    return system;
}

DeodharStep deodhar_step(const CosetSystem& system, const Permutation& x, int k) {
    const int n = system.a + system.b;
    if (x.size() != n) throw AmbientMismatch("representative degree does not match the system");
    if (k < 1 || k >= n)
        throw IndexOutOfRange("transposition index " + std::to_string(k) +
                              " outside 1.." + std::to_string(n - 1));
    TIEALG_CHECK(increasing_on_blocks(x, system.a));

    DeodharStep step;
    // Right multiplication by s_k swaps the values k and k+1 in the one-line
    // word.  If those values sit at adjacent positions inside one block, the
    // swap is absorbed on the left instead.
    const Permutation x_inv = x.inverse();
    const int p = x_inv.apply(k);
    const int q = x_inv.apply(k + 1);
    const bool same_block = (p <= system.a) == (q <= system.a);
    if (same_block && q == p + 1) {
        if (p == system.a) throw CaseViolation("reflection index landed on the block boundary");
        step.stays_in_reps = false;
        step.reflected_index = p;
        step.moved = x;
        // Confirm x * s_k == s_p * x before trusting the classification.
        const Permutation s_k = Permutation::transposition(n, k);
        const Permutation s_p = Permutation::transposition(n, p);
        if (!(x * s_k == s_p * x)) throw CaseViolation("reflected case does not reproduce x*s");
        return step;
    }
    step.stays_in_reps = true;
    step.moved = x * Permutation::transposition(n, k);
    if (!system.contains(step.moved))
        throw CaseViolation("x*s is neither a representative nor absorbed on the left");
    return step;
}

std::vector<Permutation> split_y(int m) {
    TIEALG_CHECK(m >= 1 && 2 * m <= 8);
    const CosetSystem system = coset_reps(m, m);
    std::vector<Permutation> y;
    for (const Permutation& u : system.reps) {
        const Permutation partner = system.w * u;
        TIEALG_CHECK(system.contains(partner));
        TIEALG_CHECK(!(partner == u));
        if (u < partner) y.push_back(u);
    }
    TIEALG_CHECK(2 * y.size() == system.reps.size());
    return y;
}

}  // namespace tiealg

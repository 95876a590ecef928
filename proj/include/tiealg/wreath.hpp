#pragma once

#include <map>
#include <string>
#include <vector>

#include "tiealg/element.hpp"
#include "tiealg/permutation.hpp"
#include "tiealg/rational.hpp"

namespace tiealg {

// An element of the signed permutation group on n letters: a permutation
// together with one sign flip bit per letter.  The flip bits live at the
// *target* letters, so the product rule transports the right factor's bits
// through the left factor's permutation (apply-first, like everywhere else).
class SignedPermutation {
public:
    explicit SignedPermutation(int n);  // identity, no flips
    SignedPermutation(Permutation perm, std::vector<int> flips);

    // The two generator families: crossings are plain adjacent swaps, flips
    // toggle one sign.
    static SignedPermutation crossing(int n, int i);
    static SignedPermutation flip(int n, int r);

    int size() const { return perm_.size(); }
    const Permutation& perm() const { return perm_; }
    const std::vector<int>& flips() const { return flips_; }
    bool has_flips() const;

    SignedPermutation inverse() const;
    friend SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b);

    bool operator==(const SignedPermutation& other) const {
        return perm_ == other.perm_ && flips_ == other.flips_;
    }
    bool operator<(const SignedPermutation& other) const;

    std::string to_string() const;  // e.g. "[2,1,3]*t1t3", "[1,2,3]" when flip-free

private:
    Permutation perm_;
    std::vector<int> flips_;  // entries in {0,1}
};

// The full group, ordered by operator< — 2^n * n! elements, so n stays small.
std::vector<SignedPermutation> all_signed_permutations(int n);

// A finite rational linear combination of signed permutations, with the
// convolution product.  Zero coefficients are never stored.
class WreathAlgebraElement {
public:
    explicit WreathAlgebraElement(int n);  // zero
    static WreathAlgebraElement one(int n);
    static WreathAlgebraElement single(const SignedPermutation& g,
                                       const BigRational& coeff = BigRational(1));

    int ambient() const { return ambient_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<SignedPermutation, BigRational>& terms() const { return terms_; }
    BigRational coefficient(const SignedPermutation& g) const;

    void add_term(const SignedPermutation& g, const BigRational& coeff);

    WreathAlgebraElement& operator+=(const WreathAlgebraElement& other);
    WreathAlgebraElement& operator-=(const WreathAlgebraElement& other);
    friend WreathAlgebraElement operator+(WreathAlgebraElement a, const WreathAlgebraElement& b) {
        return a += b;
    }
    friend WreathAlgebraElement operator-(WreathAlgebraElement a, const WreathAlgebraElement& b) {
        return a -= b;
    }
    friend WreathAlgebraElement operator*(const WreathAlgebraElement& a,
                                          const WreathAlgebraElement& b);
    WreathAlgebraElement scaled(const BigRational& factor) const;

    bool operator==(const WreathAlgebraElement& other) const {
        return ambient_ == other.ambient_ && terms_ == other.terms_;
    }

    std::string to_string() const;

private:
    int ambient_;
    std::map<SignedPermutation, BigRational> terms_;
};

// The averaged pair-flip (1 + t_r t_{r+1}) / 2 — an idempotent, and the image
// of the tie generator under the specialization morphism below.
WreathAlgebraElement tie_idempotent(int n, int r);

// Specialize an algebra element at u = 1 and push it into the group algebra
// of the signed permutation group: crossings (and their inverses, which
// coincide at u = 1) map to plain swaps, ties map to tie_idempotent.
// Throws PoleAtPoint when a coefficient has a pole at u = 1.
WreathAlgebraElement specialization_image(const Element& a, int n);

// The two specializations through the plain symmetric group: crossings map
// to swaps, ties map to 0 (ties_to_identity = false) or to 1 (true).
// Returned as a coefficient table over permutations.
std::map<Permutation, BigRational> sym_specialization_image(const Element& a, int n,
                                                            bool ties_to_identity);

}  // namespace tiealg

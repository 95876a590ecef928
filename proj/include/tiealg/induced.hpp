#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tiealg/element.hpp"
#include "tiealg/matrix.hpp"
#include "tiealg/partitions.hpp"
#include "tiealg/permutation.hpp"
#include "tiealg/rational.hpp"
#include "tiealg/specht.hpp"
#include "tiealg/word.hpp"

namespace tiealg {

// An ordered pair of partitions whose sizes add up to the strand count.
// The first part carries the plain action of its block, the second the
// sign-twisted one.
struct Bipartition {
    Partition first;
    Partition second;

    int strands() const { return first.size() + second.size(); }
    // "([2],[1])"; an empty slot prints as "phi".
    std::string label() const;
};

// The concrete coset model of the signed-permutation module attached to a
// bipartition: functions on the distinguished coset representatives of the
// two-block subgroup, with values in the tensor fiber of the two seminormal
// representations.  The Dirac basis delta_{x,(i,j)} is ordered coset-major,
// then first-tableau-major, so index = (coset * d1 + i) * d2 + j.
//
// Matrices act on column vectors and compose apply-first, like everything
// else in the project: the image of a product g*h is image(g) * image(h).
// Construction verifies the full signed-permutation presentation on the
// produced matrices and throws RelationViolation if any relation fails.
class InducedModule {
public:
    InducedModule(Partition first, Partition second);

    const Bipartition& shape() const { return shape_; }
    int strands() const { return shape_.strands(); }
    std::size_t dim() const { return dim_; }
    const CosetSystem& cosets() const { return system_; }
    const SignedProductRep& fiber() const { return fiber_; }
    std::size_t fiber_dim() const { return fiber_.dim(); }

    std::size_t basis_index(int coset, std::size_t i, std::size_t j) const;

    // Image of the adjacent swap of strands k, k+1 (1 <= k < strands).
    const RationalMatrix& crossing_matrix(int k) const;
    // Image of the sign flip at strand r (1 <= r <= strands); diagonal.
    const RationalMatrix& flip_matrix(int r) const;
    // Average of the identity and the product of two adjacent flips; this is
    // the idempotent the tie generator maps to at the classical point.
    RationalMatrix tie_matrix(int r) const;

private:
    void build_crossings_();
    void build_flips_();
    void verify_relations_() const;

    Bipartition shape_;
    CosetSystem system_;
    SignedProductRep fiber_;
    std::size_t dim_ = 0;
    std::vector<RationalMatrix> crossings_;  // crossings_[k-1]
    std::vector<RationalMatrix> flips_;      // flips_[r-1]
};

// A finite-dimensional representation of the tied algebra at the classical
// point u = 1: one matrix per positive crossing and one per tie.  Crossing
// matrices are involutions there, so inverse crossings reuse them.  A word
// maps to the product of its letters' matrices, left to right.
struct TiedAlgebraRep {
    std::string label;
    int strands = 0;
    std::size_t dim = 0;
    std::vector<RationalMatrix> crossings;  // crossings[i-1] for strand pair i
    std::vector<RationalMatrix> ties;       // ties[i-1]

    const RationalMatrix& crossing_matrix(int i) const;
    const RationalMatrix& tie_matrix(int i) const;

    RationalMatrix word_image(const Word& word) const;
    // Image of a scalar combination of words, coefficients evaluated at the
    // classical point; throws PoleAtPoint if a coefficient has a pole there.
    RationalMatrix element_image(const Element& x) const;
    std::vector<BigRational> character(const std::vector<Word>& words) const;
};

// Checks every defining relation of the algebra, specialized at the
// classical point, on the matrices; throws RelationViolation with the name
// of the first failing relation.
void verify_tied_relations(const TiedAlgebraRep& rep);

// The coset module seen through the algebra: crossings act by the adjacent
// swaps, ties by the flip-pair idempotents.
TiedAlgebraRep to_tied_rep(const InducedModule& module);

// Pullbacks through the two quotients onto the symmetric group algebra:
// ties act by zero (label "(shape,0)") or by the identity ("(shape,phi)").
TiedAlgebraRep ties_to_zero_rep(const Partition& shape);
TiedAlgebraRep ties_to_identity_rep(const Partition& shape);

// The explicit basis bijection delta_{x,(i,j)} -> delta_{x',(j,i)} from the
// module of (first, second) onto the module of (second, first), where x' is
// the representative obtained by composing after the opposite block swap.
// The result commutes with every crossing and tie matrix (it exchanges the
// two flip families up to a global sign, which the quadratic tie expressions
// cannot see).  Throws IntertwinerFailure if neither orientation of the
// composition works.
RationalMatrix swap_intertwiner(const InducedModule& from, const InducedModule& to);

// For the balanced pair (shape, shape) the swap map is an involution on one
// module and commutes with the whole tied action, so the module splits into
// its two eigenspaces.  Returns the restrictions, labelled "(shape,+)" and
// "(shape,-)"; throws NotInvariant if a generator fails to preserve an
// eigenspace.
std::pair<TiedAlgebraRep, TiedAlgebraRep> plus_minus_split(const Partition& shape);

// Searches for an invertible change of basis X with X A = B X for every
// crossing and tie matrix; nullopt when none exists.
std::optional<RationalMatrix> equivalence_intertwiner(const TiedAlgebraRep& a,
                                                      const TiedAlgebraRep& b);

// Dimension of the joint commutant of all crossing and tie matrices; 1
// exactly when the representation is irreducible over the rationals.
std::size_t rep_commutant_dimension(const TiedAlgebraRep& rep);

// The eight pairwise-inequivalent irreducible representations on three
// strands, in display order: the three identity-tie pullbacks, the three
// zero-tie pullbacks, then the two mixed coset modules.  Dimensions
// 1,1,2,1,1,2,3,3; the squares sum to 30.
std::vector<TiedAlgebraRep> irreps_three_strand();

}  // namespace tiealg

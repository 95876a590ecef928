#pragma once

#include <cstddef>
#include <vector>

#include "tiealg/matrix.hpp"
#include "tiealg/partitions.hpp"
#include "tiealg/permutation.hpp"
#include "tiealg/rational.hpp"

namespace tiealg {

using RationalMatrix = ExactMatrix<BigRational>;

// An exact matrix representation of a symmetric group, one invertible matrix
// per adjacent transposition.  Matrices act on column vectors; a product of
// group elements maps to the product of their matrices in the same order,
// matching the project-wide apply-first convention.
struct SymmetricGroupRep {
    int letters = 0;  // the group permutes 1..letters
    std::size_t dim = 0;
    std::vector<RationalMatrix> generators;  // generators[i-1] acts for the swap (i, i+1)

    const RationalMatrix& generator(int i) const;

    // Image of an arbitrary permutation, via any factorization into adjacent
    // transpositions (well-defined once the Coxeter relations hold).
    RationalMatrix image(const Permutation& p) const;
};

// Young's seminormal construction on the standard tableaux of the shape,
// entirely over the rationals.  Tableaux are indexed in reading-word order.
// Throws RelationViolation if the produced matrices fail a Coxeter relation
// (impossible unless the construction itself is broken).
SymmetricGroupRep seminormal_rep(const Partition& shape);

// Number of standard tableaux, computed both by direct enumeration and by
// the hook-length formula; throws InternalError if the two disagree.
long rep_dimension(const Partition& shape);

// Dimension of { X : X M = M X for every M in mats }, by exact elimination.
// For an irreducible rational representation of a symmetric group this is 1.
std::size_t commutant_dimension(const std::vector<RationalMatrix>& mats, std::size_t dim);

// The block-diagonal juxtaposition of two reps of the same group — handy for
// building known-reducible examples in tests.
SymmetricGroupRep direct_sum(const SymmetricGroupRep& a, const SymmetricGroupRep& b);

// A representation of the two-block subgroup of a signed permutation group:
// the first factor acts on letters 1..a, the second on letters a+1..a+b, and
// the sign flips act by +1 on the first block and, when sign_on_second is
// set, by -1 on the second.  This is the inducing datum for the bipartition
// modules.
struct SignedProductRep {
    SymmetricGroupRep first;
    SymmetricGroupRep second;
    bool sign_on_second = true;

    int first_letters() const { return first.letters; }
    int second_letters() const { return second.letters; }
    std::size_t dim() const { return first.dim * second.dim; }

    // Action of the ambient adjacent transposition m (1 <= m < a+b, m != a):
    // a Kronecker block living on the first or second tensor slot.
    RationalMatrix coxeter_action(int m) const;

    // Scalar by which the sign flip at letter r (1 <= r <= a+b) acts.
    BigRational flip_action(int r) const;
};

SignedProductRep tensor_with_sign_character(SymmetricGroupRep first, SymmetricGroupRep second,
                                            bool sign_on_second);

}  // namespace tiealg

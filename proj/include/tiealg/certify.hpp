#pragma once

#include <cstddef>
#include <vector>

#include "tiealg/element.hpp"
#include "tiealg/matrix.hpp"
#include "tiealg/rational.hpp"
#include "tiealg/word.hpp"

namespace tiealg {

using RationalMatrix = ExactMatrix<BigRational>;

// The linear-independence certificate for the three-strand algebra at the
// classical point.  Each public spanning word is mapped through the two
// classical-point homomorphisms — the quotient onto the plain symmetric
// group algebra (ties to zero) and the embedding into the signed
// permutation group algebra — and the images are laid out as one row per
// word: 6 coordinates over the symmetric group followed by 48 over the
// signed group.  Full row rank proves the 30 words are a basis.
//
// The signed block alone is NOT injective: its rank is 24, and
// kernel_witness is a concrete nonzero element annihilated by the signed
// map while surviving the quotient map — so neither map separately
// certifies the dimension, but their sum does.
struct SemisimplicityCertificate {
    std::vector<Word> words;
    RationalMatrix images;                     // one row per word, 6 + 48 columns
    std::size_t quotient_rank = 0;             // rank of the first 6 columns
    std::size_t signed_rank = 0;               // rank of the last 48 columns
    std::size_t joint_rank = 0;                // rank of the whole matrix
    std::vector<std::size_t> pivot_columns;    // witness columns for the joint rank
    Element kernel_witness;                    // killed by the signed block only

    SemisimplicityCertificate() : kernel_witness(3) {}
};

// Builds and checks the certificate.  Throws RankDeficient if the joint
// rank falls short of the word count, and InternalError if the recorded
// witness fails either of its defining checks.
SemisimplicityCertificate semisimplicity_certificate();

// A dimension statement for the algebra on n strands at the classical
// point.  `exact` is true when the value is proved equal to the dimension
// (spanning count from above, image rank from below); otherwise the value
// is a certified lower bound obtained from the image rank alone.
struct DimensionReport {
    int strands = 0;
    std::size_t dimension = 0;
    bool exact = false;
    std::size_t spanning_words = 0;   // size of the public spanning set used
    std::size_t image_columns = 0;    // total coordinates in the separating maps
};

// Supported for n in {2, 3, 4}; larger n throws Unsupported.  For n = 4 the
// rank is computed by a modular sifting pass that nominates independent
// rows, followed by an exact rational elimination over just those rows, so
// the reported bound carries an exact proof.
DimensionReport dimension(int n);

}  // namespace tiealg

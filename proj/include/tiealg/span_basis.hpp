#pragma once

#include <vector>

#include "tiealg/word.hpp"

namespace tiealg {

// The nested spanning sets of the algebra, built from the tower recursion
//   U_1 = {1, T1, E1, T1E1},
//   U_k = {1}  u  T_k U_{k-1}  u  E_k U_{k-1}  u  T_k E_k U_{k-1},
// so |U_1| = 4, |U_2| = 13, |U_3| = 40.
//
// For n = 2 and n = 3 the exported word list is a proven linear basis (4 and
// 30 words).  For n = 4 it is the full product list U_1 * U_2 * U_3 (2080
// pairwise distinct words): a spanning set that is *not* linearly
// independent, flagged by is_basis = false.
struct SpanBasis {
    int n = 0;
    std::vector<Word> words;
    bool is_basis = false;
};

// Spanning words for the algebra on n strands; n outside {2, 3, 4} throws
// Unsupported.  The n = 3 list is enumerated as L * S with L running over the
// six braid-only prefixes {1, T1, T2, T1T2, T2T1, T1T2T1} (outer loop) and S
// over the five suffixes {1, E1, E2, E1E2, E2T1} (inner loop).
SpanBasis span_basis(int n);

// The block U_level of the tower recursion, level in {1, 2, 3}.
const std::vector<Word>& tower_block(int level);

}  // namespace tiealg

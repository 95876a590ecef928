#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tiealg/element.hpp"
#include "tiealg/span_basis.hpp"

namespace tiealg {

// Full multiplication table over the spanning basis for n in {2, 3}:
// table[i][j] = normal_form(basis[i] * basis[j]), an element supported on the
// basis itself (that support property is what "the span is closed" means).
struct StructureConstants {
    int n = 0;
    std::vector<Word> basis;
    std::vector<std::vector<Element>> table;

    std::string to_json() const;
};

// Rewrites an element onto the spanning set of its ambient algebra.
//
//   n = 2, 3 — the result is the unique coordinate vector over the proven
//              basis (4 resp. 30 words); any two equal elements produce
//              identical output.
//   n = 4    — the result is a representative supported on the 2080-word
//              spanning list.  The list is linearly dependent, so equal
//              elements are not guaranteed to collide (see check_identity
//              for the decidable cases); the representative itself is still
//              deterministic and exactly equal to the input in the algebra.
//
// Throws Unsupported for n >= 5 and RewriteBudgetExceeded when the step
// budget (rewrite_step_limit) runs out.
Element normal_form(const Element& x);

// normal_form(a * b) — multiplication in the algebra rather than the free
// layer.
Element mul_reduced(const Element& a, const Element& b);

// Decides a = b.  A TRUE answer is always a proof (every rewrite step applies
// a defining relation or a consequence derived from them).  For n <= 3 a
// FALSE answer is also a proof, by linear independence of the basis.  For
// n = 4 the query is first localized: when a - b only involves one adjacent
// index pair {i, i+1} it is decided exactly in the shifted 3-strand algebra;
// otherwise FALSE merely reports that the representatives differ.
bool check_identity(const Element& a, const Element& b);

// Multiplication table for n in {2, 3}; other n throw Unsupported.
StructureConstants structure_constants(int n);

// Maximum number of fresh rewrite steps a single top-level call may take.
// Defaults to 1,000,000; the environment variable TIEALG_BUDGET overrides.
std::size_t rewrite_step_limit();

namespace engine_internal {

// The canonical word set of the two-index core engine: 30 linearly
// independent words over {T1, E1, T2, E2} in block form U_1 * U_2, closed
// under irreducibility (a word with letter indices in {1, 2} is irreducible
// exactly when it is one of these).  Exposed for the exhaustive engine tests.
const std::vector<Word>& block_canonical_words();

// Reduce a single word with letter indices in {1, 2} to its canonical
// combination (ambient 3), with a fresh step budget.
Element reduce_block_word(const Word& word);

}  // namespace engine_internal

}  // namespace tiealg

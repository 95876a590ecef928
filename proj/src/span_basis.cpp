#include "tiealg/span_basis.hpp"

#include <set>

#include "tiealg/errors.hpp"

namespace tiealg {

namespace {

std::vector<Word> base_block() {
    return {Word::identity(), Word::single(Generator::braid(1)),
            Word::single(Generator::tie(1)),
            Word({Generator::braid(1), Generator::tie(1)})};
}

std::vector<Word> lift_block(int level, const std::vector<Word>& below) {
    Word t = Word::single(Generator::braid(level));
    Word e = Word::single(Generator::tie(level));
    std::vector<Word> block;
    block.reserve(1 + 3 * below.size());
    block.push_back(Word::identity());
    for (const auto& w : below) block.push_back(t * w);
    for (const auto& w : below) block.push_back(e * w);
    for (const auto& w : below) block.push_back(t * e * w);
    return block;
}

}  // namespace

const std::vector<Word>& tower_block(int level) {
    TIEALG_CHECK(level >= 1 && level <= 3);
    // Each initializer consumes the previous static directly so a first call
    // at any level never re-enters an in-progress initialization.
    static const std::vector<Word> block1 = base_block();
    static const std::vector<Word> block2 = lift_block(2, block1);
    static const std::vector<Word> block3 = lift_block(3, block2);
    switch (level) {
        case 1: return block1;
        case 2: return block2;
        default: return block3;
    }
}

SpanBasis span_basis(int n) {
    if (n < 2 || n > 4)
        throw Unsupported("spanning sets are available for 2 <= n <= 4, not n = " +
                          std::to_string(n));
    SpanBasis result;
    result.n = n;
    if (n == 2) {
        result.words = tower_block(1);
        result.is_basis = true;
        return result;
    }
    if (n == 3) {
        // Six braid prefixes (the permutation words) times five tie suffixes.
        const Word t1 = Word::single(Generator::braid(1));
        const Word t2 = Word::single(Generator::braid(2));
        const std::vector<Word> prefixes = {Word::identity(), t1, t2, t1 * t2, t2 * t1,
                                            t1 * t2 * t1};
        const Word e1 = Word::single(Generator::tie(1));
        const Word e2 = Word::single(Generator::tie(2));
        const std::vector<Word> suffixes = {Word::identity(), e1, e2, e1 * e2, e2 * t1};
        for (const auto& prefix : prefixes)
            for (const auto& suffix : suffixes) result.words.push_back(prefix * suffix);
        result.is_basis = true;
        return result;
    }
    // n == 4: the full tower product.  Concatenation of (U_1, U_2, U_3)
    // triples never collides (each block is recoverable from the letter
    // indices), so the deduplicated count equals 4 * 13 * 40 = 2080; the
    // set below both enforces and documents that.
    std::set<Word> seen;
    for (const auto& a : tower_block(1))
        for (const auto& b : tower_block(2))
            for (const auto& c : tower_block(3)) {
                Word word = a * b * c;
                if (seen.insert(word).second) result.words.push_back(word);
            }
    TIEALG_CHECK(result.words.size() == 2080);
    result.is_basis = false;
    return result;
}

}  // namespace tiealg

#include "tiealg/certify.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "tiealg/errors.hpp"
#include "tiealg/permutation.hpp"
#include "tiealg/rewrite.hpp"
#include "tiealg/span_basis.hpp"
#include "tiealg/wreath.hpp"

namespace tiealg {

namespace {

std::size_t position_of(const std::vector<Permutation>& sorted, const Permutation& p) {
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), p);
    TIEALG_CHECK(it != sorted.end() && *it == p);
    return static_cast<std::size_t>(it - sorted.begin());
}

std::size_t position_of(const std::vector<SignedPermutation>& sorted,
                        const SignedPermutation& g) {
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), g);
    TIEALG_CHECK(it != sorted.end() && *it == g);
    return static_cast<std::size_t>(it - sorted.begin());
}

// Coordinates of a word under the classical-point maps, concatenated:
// the ties-to-zero quotient, optionally the ties-to-identity quotient, and
// the signed-group image.
std::vector<BigRational> image_row(const Word& word, int n,
                                   const std::vector<Permutation>& perms,
                                   const std::vector<SignedPermutation>& signed_group,
                                   bool include_identity_quotient) {
    const std::size_t quotient_cols = perms.size() * (include_identity_quotient ? 2 : 1);
    std::vector<BigRational> row(quotient_cols + signed_group.size());
    const Element x = Element::from_word(n, word);

    for (const auto& [p, coeff] : sym_specialization_image(x, n, false))
        row[position_of(perms, p)] = coeff;
    if (include_identity_quotient)
        for (const auto& [p, coeff] : sym_specialization_image(x, n, true))
            row[perms.size() + position_of(perms, p)] = coeff;
    const WreathAlgebraElement image = specialization_image(x, n);
    for (const auto& [g, coeff] : image.terms())
        row[quotient_cols + position_of(signed_group, g)] = coeff;
    return row;
}

constexpr unsigned long long kSiftPrime = 1000003;  // prime, far above any denominator

unsigned long long power_mod(unsigned long long base, unsigned long long exponent,
                             unsigned long long modulus) {
    unsigned long long out = 1;
    base %= modulus;
    while (exponent > 0) {
        if (exponent & 1) out = out * base % modulus;
        base = base * base % modulus;
        exponent >>= 1;
    }
    return out;
}

unsigned long long residue_of(const BigRational& value, unsigned long long modulus) {
    const mpq_class& raw = value.raw();
    const unsigned long long num =
        mpz_fdiv_ui(mpq_numref(raw.get_mpq_t()), modulus);  // canonical non-negative remainder
    const unsigned long long den = mpz_fdiv_ui(mpq_denref(raw.get_mpq_t()), modulus);
    TIEALG_CHECK(den != 0);
    return num * power_mod(den, modulus - 2, modulus) % modulus;
}

// Incremental row-echelon elimination over the prime field, used only to
// nominate rows; every nomination is re-proved over the rationals by the
// caller.  Independence modulo a prime lifts to independence over the
// rationals, so the nominated set can never be too large — the recheck
// guards the implementation, not the mathematics.
class ModularSifter {
public:
    explicit ModularSifter(std::size_t cols) : cols_(cols) {}

    bool add_row(std::vector<unsigned long long> row) {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const unsigned long long factor = row[pivots_[i]];
            if (factor == 0) continue;
            const auto& base = rows_[i];
            for (std::size_t c = 0; c < cols_; ++c)
                row[c] = (row[c] + (kSiftPrime - factor) * base[c]) % kSiftPrime;
        }
        std::size_t pivot = cols_;
        for (std::size_t c = 0; c < cols_; ++c)
            if (row[c] != 0) {
                pivot = c;
                break;
            }
        if (pivot == cols_) return false;
        const unsigned long long scale = power_mod(row[pivot], kSiftPrime - 2, kSiftPrime);
        for (std::size_t c = 0; c < cols_; ++c) row[c] = row[c] * scale % kSiftPrime;
        rows_.push_back(std::move(row));
        pivots_.push_back(pivot);
        return true;
    }

private:
    std::size_t cols_;
    std::vector<std::vector<unsigned long long>> rows_;
    std::vector<std::size_t> pivots_;
};

std::size_t block_rank(const RationalMatrix& m, std::size_t first_col, std::size_t col_count) {
    RowReducer<BigRational> reducer(col_count);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::vector<BigRational> row(col_count);
        for (std::size_t c = 0; c < col_count; ++c) row[c] = m.at(r, first_col + c);
        reducer.add_row(row);
    }
    return reducer.rank();
}

}  // namespace

SemisimplicityCertificate semisimplicity_certificate() {
    SemisimplicityCertificate cert;
    cert.words = span_basis(3).words;
    const auto perms = all_permutations(3);
    const auto signed_group = all_signed_permutations(3);
    const std::size_t cols = perms.size() + signed_group.size();
    cert.images = RationalMatrix(cert.words.size(), cols);

    RowReducer<BigRational> joint(cols);
    for (std::size_t r = 0; r < cert.words.size(); ++r) {
        const auto row = image_row(cert.words[r], 3, perms, signed_group, false);
        for (std::size_t c = 0; c < cols; ++c) cert.images.at(r, c) = row[c];
        joint.add_row(row);
    }
    cert.joint_rank = joint.rank();
    cert.pivot_columns = joint.pivot_columns();
    cert.quotient_rank = block_rank(cert.images, 0, perms.size());
    cert.signed_rank = block_rank(cert.images, perms.size(), signed_group.size());

    if (cert.joint_rank != cert.words.size())
        throw RankDeficient("the public spanning words map to a rank-" +
                            std::to_string(cert.joint_rank) + " family, expected " +
                            std::to_string(cert.words.size()));

    // A concrete element separating the two maps: the signed image kills it,
    // the quotient image does not, so the signed block alone cannot certify
    // independence.
    cert.kernel_witness = Element::parse(3, "1 - E1 - E2 + 2*E1 E2 - T1 E2 T1");
    TIEALG_CHECK(specialization_image(cert.kernel_witness, 3).is_zero());
    TIEALG_CHECK(!sym_specialization_image(cert.kernel_witness, 3, false).empty());
    const Element reduced_witness = normal_form(cert.kernel_witness);
    TIEALG_CHECK(!reduced_witness.is_zero());
    std::vector<BigRational> coordinates(cert.words.size());
    for (const auto& [word, coeff] : reduced_witness.terms()) {
        const auto it = std::find(cert.words.begin(), cert.words.end(), word);
        TIEALG_CHECK(it != cert.words.end());
        coordinates[static_cast<std::size_t>(it - cert.words.begin())] =
            coeff.eval_at(BigRational(1));
    }
    for (std::size_t c = perms.size(); c < cols; ++c) {
        BigRational entry;
        for (std::size_t r = 0; r < cert.words.size(); ++r)
            entry += coordinates[r] * cert.images.at(r, c);
        TIEALG_CHECK(entry.is_zero());
    }
    return cert;
}

DimensionReport dimension(int n) {
    if (n == 2) {
        const auto words = span_basis(2).words;
        const auto perms = all_permutations(2);
        const auto signed_group = all_signed_permutations(2);
        const std::size_t cols = perms.size() + signed_group.size();
        RowReducer<BigRational> reducer(cols);
        for (const Word& w : words) reducer.add_row(image_row(w, 2, perms, signed_group, false));
        return {2, reducer.rank(), reducer.rank() == words.size(), words.size(), cols};
    }
    if (n == 3) {
        const SemisimplicityCertificate cert = semisimplicity_certificate();
        return {3, cert.joint_rank, cert.joint_rank == cert.words.size(), cert.words.size(),
                cert.images.cols()};
    }
    if (n == 4) {
        const auto words = span_basis(4).words;
        const auto perms = all_permutations(4);
        const auto signed_group = all_signed_permutations(4);
        const std::size_t cols = 2 * perms.size() + signed_group.size();

        ModularSifter sifter(cols);
        std::vector<std::vector<BigRational>> nominated;
        for (const Word& w : words) {
            auto row = image_row(w, 4, perms, signed_group, true);
            std::vector<unsigned long long> residues(cols);
            for (std::size_t c = 0; c < cols; ++c) residues[c] = residue_of(row[c], kSiftPrime);
            if (sifter.add_row(std::move(residues))) nominated.push_back(std::move(row));
        }

        RowReducer<BigRational> exact(cols);
        for (const auto& row : nominated) exact.add_row(row);
        TIEALG_CHECK(exact.rank() == nominated.size());
        return {4, exact.rank(), exact.rank() == words.size(), words.size(), cols};
    }
    throw Unsupported("the dimension certificate covers 2, 3, or 4 strands");
}

}  // namespace tiealg

#include "tiealg/specht.hpp"

#include <algorithm>

#include "tiealg/errors.hpp"

namespace tiealg {

const RationalMatrix& SymmetricGroupRep::generator(int i) const {
    if (i < 1 || i >= letters)
        throw IndexOutOfRange("generator " + std::to_string(i) + " outside 1.." +
                              std::to_string(letters - 1));
    return generators[static_cast<std::size_t>(i - 1)];
}

RationalMatrix SymmetricGroupRep::image(const Permutation& p) const {
    if (p.size() != letters) throw AmbientMismatch("permutation degree does not match the rep");
    // Peel adjacent transpositions off the left: each descent of the
    // remainder gives one factor, and the factors read off in discovery
    // order multiply (apply-first) back to p.
    std::vector<int> factors;
    Permutation rest = p;
    while (rest.coxeter_length() > 0) {
        int descent = 0;
        for (int i = 1; i < letters; ++i)
            if (rest.apply(i) > rest.apply(i + 1)) {
                descent = i;
                break;
            }
        TIEALG_CHECK(descent > 0);
        rest = Permutation::transposition(letters, descent) * rest;
        factors.push_back(descent);
    }
    Permutation rebuilt = Permutation::identity(letters);
    RationalMatrix out = RationalMatrix::identity(dim);
    for (int i : factors) {
        rebuilt = rebuilt * Permutation::transposition(letters, i);
        out = out * generator(i);
    }
    TIEALG_CHECK(rebuilt == p);
    return out;
}

namespace {

void verify_coxeter(const SymmetricGroupRep& rep) {
    const RationalMatrix id = RationalMatrix::identity(rep.dim);
    for (int i = 1; i < rep.letters; ++i) {
        const RationalMatrix& m = rep.generator(i);
        if (!(m * m == id)) throw RelationViolation("generator is not an involution");
        for (int j = i + 2; j < rep.letters; ++j)
            if (!(m * rep.generator(j) == rep.generator(j) * m))
                throw RelationViolation("distant generators do not commute");
        if (i + 1 < rep.letters) {
            const RationalMatrix& t = rep.generator(i + 1);
            if (!(m * t * m == t * m * t)) throw RelationViolation("braid relation fails");
        }
    }
}

}  // namespace

SymmetricGroupRep seminormal_rep(const Partition& shape) {
    const auto tableaux = standard_tableaux(shape);
    SymmetricGroupRep rep;
    rep.letters = shape.size();
    rep.dim = tableaux.size();

    const auto index_of = [&tableaux](const StandardTableau& t) -> std::size_t {
        for (std::size_t i = 0; i < tableaux.size(); ++i)
            if (tableaux[i] == t) return i;
        throw InternalError("swapped tableau not found among the standard ones");
    };

    for (int k = 1; k < rep.letters; ++k) {
        RationalMatrix m(rep.dim, rep.dim);
        for (std::size_t t = 0; t < tableaux.size(); ++t) {
            const auto [row_k, col_k] = tableaux[t].cell_of(k);
            const auto [row_k1, col_k1] = tableaux[t].cell_of(k + 1);
            if (row_k == row_k1) {
                m.at(t, t) = BigRational(1);
            } else if (col_k == col_k1) {
                m.at(t, t) = BigRational(-1);
            } else {
                const std::size_t other = index_of(tableaux[t].with_swapped(k));
                if (t < other) {
                    // Fill the 2x2 block once, from the earlier tableau.  The
                    // axial distance is measured on that earlier tableau.
                    const BigRational rho(
                        1, tableaux[t].content_of(k + 1) - tableaux[t].content_of(k));
                    m.at(t, t) = rho;
                    m.at(other, t) = BigRational(1);
                    m.at(t, other) = BigRational(1) - rho * rho;
                    m.at(other, other) = -rho;
                }
            }
        }
        rep.generators.push_back(std::move(m));
    }
    verify_coxeter(rep);
    return rep;
}

long rep_dimension(const Partition& shape) {
    const long enumerated = static_cast<long>(standard_tableaux(shape).size());
    const long by_hooks = factorial(shape.size()) / hook_length_product(shape);
    TIEALG_CHECK(enumerated == by_hooks);
    return enumerated;
}

std::size_t commutant_dimension(const std::vector<RationalMatrix>& mats, std::size_t dim) {
    if (mats.empty()) return dim * dim;
    // One equation row per (matrix, entry) for X M - M X = 0; unknowns are
    // the dim^2 entries of X, flattened row-major.
    ExactMatrix<BigRational> equations(mats.size() * dim * dim, dim * dim);
    std::size_t eq = 0;
    for (const RationalMatrix& m : mats) {
        TIEALG_CHECK(m.rows() == dim && m.cols() == dim);
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c) {
                // Entry (r, c) of X M - M X.
                for (std::size_t k = 0; k < dim; ++k) {
                    equations.at(eq, r * dim + k) += m.at(k, c);
                    equations.at(eq, k * dim + c) -= m.at(r, k);
                }
                ++eq;
            }
    }
    return nullspace(equations).size();
}

SymmetricGroupRep direct_sum(const SymmetricGroupRep& a, const SymmetricGroupRep& b) {
    TIEALG_CHECK(a.letters == b.letters);
    SymmetricGroupRep out;
    out.letters = a.letters;
    out.dim = a.dim + b.dim;
    for (int i = 1; i < a.letters; ++i) {
        RationalMatrix m(out.dim, out.dim);
        const RationalMatrix& ma = a.generator(i);
        const RationalMatrix& mb = b.generator(i);
        for (std::size_t r = 0; r < a.dim; ++r)
            for (std::size_t c = 0; c < a.dim; ++c) m.at(r, c) = ma.at(r, c);
        for (std::size_t r = 0; r < b.dim; ++r)
            for (std::size_t c = 0; c < b.dim; ++c) m.at(a.dim + r, a.dim + c) = mb.at(r, c);
        out.generators.push_back(std::move(m));
    }
    return out;
}

RationalMatrix SignedProductRep::coxeter_action(int m) const {
    const int a = first_letters();
    const int n = a + second_letters();
    if (m < 1 || m >= n || m == a)
        throw IndexOutOfRange("transposition " + std::to_string(m) +
                              " does not preserve the two blocks");
    if (m < a) return RationalMatrix::kron(first.generator(m), RationalMatrix::identity(second.dim));
    return RationalMatrix::kron(RationalMatrix::identity(first.dim), second.generator(m - a));
}

BigRational SignedProductRep::flip_action(int r) const {
    const int n = first_letters() + second_letters();
    if (r < 1 || r > n) throw IndexOutOfRange("flip index outside 1.." + std::to_string(n));
    if (r <= first_letters() || !sign_on_second) return BigRational(1);
    return BigRational(-1);
}

SignedProductRep tensor_with_sign_character(SymmetricGroupRep first, SymmetricGroupRep second,
                                            bool sign_on_second) {
    SignedProductRep rep;
    rep.first = std::move(first);
    rep.second = std::move(second);
    rep.sign_on_second = sign_on_second;
    return rep;
}

}  // namespace tiealg

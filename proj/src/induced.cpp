#include "tiealg/induced.hpp"

#include <algorithm>
#include <string>

#include "tiealg/errors.hpp"
#include "tiealg/wreath.hpp"

namespace tiealg {

std::string Bipartition::label() const {
    const auto slot = [](const Partition& p) {
        return p.is_empty() ? std::string("phi") : p.to_string();
    };
    return "(" + slot(first) + "," + slot(second) + ")";
}

InducedModule::InducedModule(Partition first, Partition second)
    : shape_{std::move(first), std::move(second)},
      system_(coset_reps(shape_.first.size(), shape_.second.size())),
      fiber_(tensor_with_sign_character(seminormal_rep(shape_.first),
                                        seminormal_rep(shape_.second),
                                        /*sign_on_second=*/true)) {
    dim_ = system_.reps.size() * fiber_.dim();
    build_crossings_();
    build_flips_();
    verify_relations_();
}

std::size_t InducedModule::basis_index(int coset, std::size_t i, std::size_t j) const {
    return (static_cast<std::size_t>(coset) * fiber_.first.dim + i) * fiber_.second.dim + j;
}

const RationalMatrix& InducedModule::crossing_matrix(int k) const {
    if (k < 1 || k >= strands())
        throw IndexOutOfRange("crossing index " + std::to_string(k) + " out of range");
    return crossings_[static_cast<std::size_t>(k - 1)];
}

const RationalMatrix& InducedModule::flip_matrix(int r) const {
    if (r < 1 || r > strands())
        throw IndexOutOfRange("flip index " + std::to_string(r) + " out of range");
    return flips_[static_cast<std::size_t>(r - 1)];
}

RationalMatrix InducedModule::tie_matrix(int r) const {
    RationalMatrix two_e = RationalMatrix::identity(dim_) + flip_matrix(r) * flip_matrix(r + 1);
    return two_e.scaled(BigRational(1, 2));
}

void InducedModule::build_crossings_() {
    const std::size_t fd = fiber_.dim();
    for (int k = 1; k < strands(); ++k) {
        RationalMatrix mat(dim_, dim_);
        for (int c = 0; c < static_cast<int>(system_.reps.size()); ++c) {
            const Permutation& rep = system_.reps[static_cast<std::size_t>(c)];
            const DeodharStep step = deodhar_step(system_, rep, k);
            if (step.stays_in_reps) {
                const int target = system_.index_of(step.moved);
                TIEALG_CHECK(target >= 0);
                const std::size_t row0 = basis_index(target, 0, 0);
                const std::size_t col0 = basis_index(c, 0, 0);
                for (std::size_t v = 0; v < fd; ++v) mat.at(row0 + v, col0 + v) = 1;
            } else {
                const RationalMatrix block = fiber_.coxeter_action(step.reflected_index);
                const std::size_t base = basis_index(c, 0, 0);
                for (std::size_t r = 0; r < fd; ++r)
                    for (std::size_t v = 0; v < fd; ++v) mat.at(base + r, base + v) = block.at(r, v);
            }
        }
        crossings_.push_back(std::move(mat));
    }
}

void InducedModule::build_flips_() {
    const int n = strands();
    const std::size_t fd = fiber_.dim();
    for (int r = 1; r <= n; ++r) {
        RationalMatrix mat(dim_, dim_);
        for (int c = 0; c < static_cast<int>(system_.reps.size()); ++c) {
            const Permutation& rep = system_.reps[static_cast<std::size_t>(c)];
            // Pull the flip through the representative: rep * flip_r equals
            // flip_q * rep for exactly one q, found mechanically in the
            // signed-permutation group.
            const SignedPermutation pulled =
                SignedPermutation(rep, std::vector<int>(static_cast<std::size_t>(n), 0)) *
                SignedPermutation::flip(n, r);
            TIEALG_CHECK(pulled.perm() == rep);
            int q = 0;
            for (int x = 1; x <= n; ++x)
                if (pulled.flips()[static_cast<std::size_t>(x - 1)] == 1) {
                    TIEALG_CHECK(q == 0);
                    q = x;
                }
            TIEALG_CHECK(q != 0);
            const BigRational sign = fiber_.flip_action(q);
            const std::size_t base = basis_index(c, 0, 0);
            for (std::size_t v = 0; v < fd; ++v) mat.at(base + v, base + v) = sign;
        }
        flips_.push_back(std::move(mat));
    }
}

void InducedModule::verify_relations_() const {
    const int n = strands();
    const RationalMatrix id = RationalMatrix::identity(dim_);
    const auto fail = [&](const std::string& name) {
        throw RelationViolation("coset module for " + shape_.label() +
                                " violates the relation: " + name);
    };
    for (int k = 1; k < n; ++k)
        if (crossing_matrix(k) * crossing_matrix(k) != id) fail("swap involution");
    for (int k = 1; k + 1 < n; ++k) {
        const RationalMatrix &a = crossing_matrix(k), &b = crossing_matrix(k + 1);
        if (a * b * a != b * a * b) fail("braid move");
    }
    for (int k = 1; k < n; ++k)
        for (int l = k + 2; l < n; ++l)
            if (crossing_matrix(k) * crossing_matrix(l) != crossing_matrix(l) * crossing_matrix(k))
                fail("distant swaps commute");
    for (int r = 1; r <= n; ++r)
        if (flip_matrix(r) * flip_matrix(r) != id) fail("flip involution");
    for (int k = 1; k < n; ++k) {
        const RationalMatrix conj = crossing_matrix(k) * flip_matrix(k) * crossing_matrix(k);
        if (conj != flip_matrix(k + 1)) fail("swap carries a flip to its neighbour");
    }
    for (int k = 1; k < n; ++k)
        for (int r = 1; r <= n; ++r) {
            if (r == k || r == k + 1) continue;
            if (crossing_matrix(k) * flip_matrix(r) != flip_matrix(r) * crossing_matrix(k))
                fail("distant swap and flip commute");
        }
}

const RationalMatrix& TiedAlgebraRep::crossing_matrix(int i) const {
    if (i < 1 || i >= strands)
        throw IndexOutOfRange("crossing index " + std::to_string(i) + " out of range");
    return crossings[static_cast<std::size_t>(i - 1)];
}

const RationalMatrix& TiedAlgebraRep::tie_matrix(int i) const {
    if (i < 1 || i >= strands)
        throw IndexOutOfRange("tie index " + std::to_string(i) + " out of range");
    return ties[static_cast<std::size_t>(i - 1)];
}

RationalMatrix TiedAlgebraRep::word_image(const Word& word) const {
    RationalMatrix acc = RationalMatrix::identity(dim);
    for (const Generator& g : word.letters())
        acc = acc * (g.is_tie() ? tie_matrix(g.index) : crossing_matrix(g.index));
    return acc;
}

RationalMatrix TiedAlgebraRep::element_image(const Element& x) const {
    if (x.ambient() != strands)
        throw AmbientMismatch("element lives on " + std::to_string(x.ambient()) +
                              " strands, representation on " + std::to_string(strands));
    RationalMatrix acc(dim, dim);
    for (const auto& [word, coefficient] : x.terms())
        acc = acc + word_image(word).scaled(coefficient.eval_at(BigRational(1)));
    return acc;
}

std::vector<BigRational> TiedAlgebraRep::character(const std::vector<Word>& words) const {
    std::vector<BigRational> traces;
    traces.reserve(words.size());
    for (const Word& w : words) traces.push_back(word_image(w).trace());
    return traces;
}

void verify_tied_relations(const TiedAlgebraRep& rep) {
    const int n = rep.strands;
    const RationalMatrix id = RationalMatrix::identity(rep.dim);
    const auto fail = [&](const std::string& name) {
        throw RelationViolation(rep.label + " violates the relation: " + name);
    };
    for (int i = 1; i < n; ++i) {
        const RationalMatrix &t = rep.crossing_matrix(i), &e = rep.tie_matrix(i);
        if (t * t != id) fail("crossings square to one at the classical point");
        if (e * e != e) fail("ties are idempotent");
        if (e * t != t * e) fail("a tie commutes with its own crossing");
    }
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) {
            const RationalMatrix &ti = rep.crossing_matrix(i), &tj = rep.crossing_matrix(j);
            const RationalMatrix &ei = rep.tie_matrix(i), &ej = rep.tie_matrix(j);
            if (ei * ej != ej * ei) fail("ties commute");
            if (i + 2 <= j) {
                if (ti * tj != tj * ti) fail("distant crossings commute");
                if (ei * tj != tj * ei) fail("distant tie and crossing commute");
            }
            if (j == i + 1 || j == i - 1) {
                if (ej * ti * tj != ti * tj * ei) fail("a crossing pair carries a tie across");
                if (ei * ej * tj != ei * tj * ei) fail("tie pair absorbs a conjugation");
                if (ei * tj * ei != tj * ei * ej) fail("tie pair absorbs a conjugation");
            }
            if (j == i + 1)
                if (ti * tj * ti != tj * ti * tj) fail("braid move");
        }
}

TiedAlgebraRep to_tied_rep(const InducedModule& module) {
    TiedAlgebraRep rep;
    rep.label = module.shape().label();
    rep.strands = module.strands();
    rep.dim = module.dim();
    for (int i = 1; i < module.strands(); ++i) {
        rep.crossings.push_back(module.crossing_matrix(i));
        rep.ties.push_back(module.tie_matrix(i));
    }
    verify_tied_relations(rep);
    return rep;
}

namespace {

TiedAlgebraRep symmetric_pullback(const Partition& shape, bool ties_act_by_identity) {
    const SymmetricGroupRep base = seminormal_rep(shape);
    TiedAlgebraRep rep;
    rep.label = "(" + shape.to_string() + (ties_act_by_identity ? ",phi)" : ",0)");
    rep.strands = shape.size();
    rep.dim = base.dim;
    const RationalMatrix tie_image = ties_act_by_identity
                                         ? RationalMatrix::identity(base.dim)
                                         : RationalMatrix(base.dim, base.dim);
    for (int i = 1; i < rep.strands; ++i) {
        rep.crossings.push_back(base.generator(i));
        rep.ties.push_back(tie_image);
    }
    verify_tied_relations(rep);
    return rep;
}

bool intertwines_everywhere(const RationalMatrix& phi, const TiedAlgebraRep& from,
                            const TiedAlgebraRep& to) {
    for (int i = 1; i < from.strands; ++i) {
        if (phi * from.crossing_matrix(i) != to.crossing_matrix(i) * phi) return false;
        if (phi * from.tie_matrix(i) != to.tie_matrix(i) * phi) return false;
    }
    return true;
}

}  // namespace

TiedAlgebraRep ties_to_zero_rep(const Partition& shape) {
    return symmetric_pullback(shape, false);
}

TiedAlgebraRep ties_to_identity_rep(const Partition& shape) {
    return symmetric_pullback(shape, true);
}

RationalMatrix swap_intertwiner(const InducedModule& from, const InducedModule& to) {
    if (!(from.shape().first == to.shape().second && from.shape().second == to.shape().first))
        throw AmbientMismatch("swap map needs the target shape to be the reversed source shape");
    const int a = from.shape().first.size();
    const int b = from.shape().second.size();
    const std::size_t d1 = from.fiber().first.dim;
    const std::size_t d2 = from.fiber().second.dim;
    const TiedAlgebraRep source = to_tied_rep(from);
    const TiedAlgebraRep target = to_tied_rep(to);

    // Candidate representative maps, in order of preference: compose after
    // the opposite block swap, then compose before the forward one.
    const Permutation opposite = block_swap(b, a);
    const Permutation forward = block_swap(a, b);
    for (int orientation = 0; orientation < 2; ++orientation) {
        RationalMatrix phi(to.dim(), from.dim());
        bool landed = true;
        for (int c = 0; c < static_cast<int>(from.cosets().reps.size()) && landed; ++c) {
            const Permutation& rep = from.cosets().reps[static_cast<std::size_t>(c)];
            const Permutation moved = orientation == 0 ? opposite * rep : rep * forward;
            const int target_coset = to.cosets().index_of(moved);
            if (target_coset < 0) {
                landed = false;
                break;
            }
            for (std::size_t i = 0; i < d1; ++i)
                for (std::size_t j = 0; j < d2; ++j)
                    phi.at(to.basis_index(target_coset, j, i), from.basis_index(c, i, j)) = 1;
        }
        if (landed && intertwines_everywhere(phi, source, target)) return phi;
    }
    throw IntertwinerFailure("no orientation of the block-swap map intertwines " +
                             from.shape().label() + " with " + to.shape().label());
}

std::pair<TiedAlgebraRep, TiedAlgebraRep> plus_minus_split(const Partition& shape) {
    const int m = shape.size();
    const InducedModule module(shape, shape);
    const RationalMatrix phi = swap_intertwiner(module, module);
    const std::size_t dim = module.dim();
    const RationalMatrix id = RationalMatrix::identity(dim);
    TIEALG_CHECK(phi * phi == id);
    TIEALG_CHECK(dim % 2 == 0);
    const std::size_t half = dim / 2;

    const std::vector<Permutation> kept = split_y(m);
    const std::size_t d1 = module.fiber().first.dim;
    const std::size_t d2 = module.fiber().second.dim;
    TIEALG_CHECK(kept.size() * d1 * d2 == half);

    const auto restrict_onto = [&](const RationalMatrix& projector_sign) {
        // Columns: (1 +/- phi) applied to the Dirac vectors over the kept
        // representatives; they span the corresponding eigenspace.
        RationalMatrix basis(dim, half);
        std::size_t col = 0;
        for (const Permutation& rep : kept) {
            const int c = module.cosets().index_of(rep);
            TIEALG_CHECK(c >= 0);
            for (std::size_t i = 0; i < d1; ++i)
                for (std::size_t j = 0; j < d2; ++j, ++col) {
                    const std::size_t source = module.basis_index(c, i, j);
                    for (std::size_t r = 0; r < dim; ++r)
                        basis.at(r, col) = projector_sign.at(r, source);
                }
        }
        TIEALG_CHECK(col == half);
        TIEALG_CHECK(rank(basis) == half);

        const auto restrict_matrix = [&](const RationalMatrix& action) {
            const RationalMatrix moved = action * basis;
            RationalMatrix out(half, half);
            for (std::size_t c2 = 0; c2 < half; ++c2) {
                std::vector<BigRational> rhs(dim);
                for (std::size_t r = 0; r < dim; ++r) rhs[r] = moved.at(r, c2);
                const auto coords = solve(basis, rhs);
                if (!coords)
                    throw NotInvariant("eigenspace of the swap map is not preserved for " +
                                       shape.to_string());
                for (std::size_t r = 0; r < half; ++r) out.at(r, c2) = (*coords)[r];
            }
            return out;
        };

        TiedAlgebraRep rep;
        rep.strands = module.strands();
        rep.dim = half;
        for (int i = 1; i < module.strands(); ++i) {
            rep.crossings.push_back(restrict_matrix(module.crossing_matrix(i)));
            rep.ties.push_back(restrict_matrix(module.tie_matrix(i)));
        }
        return rep;
    };

    auto plus = restrict_onto(id + phi);
    plus.label = "(" + shape.to_string() + ",+)";
    auto minus = restrict_onto(id - phi);
    minus.label = "(" + shape.to_string() + ",-)";
    verify_tied_relations(plus);
    verify_tied_relations(minus);
    return {std::move(plus), std::move(minus)};
}

std::optional<RationalMatrix> equivalence_intertwiner(const TiedAlgebraRep& a,
                                                      const TiedAlgebraRep& b) {
    if (a.strands != b.strands || a.dim != b.dim) return std::nullopt;
    const std::size_t dim = a.dim;
    std::vector<RationalMatrix> pairs_a, pairs_b;
    for (int i = 1; i < a.strands; ++i) {
        pairs_a.push_back(a.crossing_matrix(i));
        pairs_b.push_back(b.crossing_matrix(i));
        pairs_a.push_back(a.tie_matrix(i));
        pairs_b.push_back(b.tie_matrix(i));
    }
    // Unknown X (dim x dim, row-major) subject to X A_g - B_g X = 0.
    RationalMatrix equations(pairs_a.size() * dim * dim, dim * dim);
    std::size_t eq = 0;
    for (std::size_t g = 0; g < pairs_a.size(); ++g)
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c, ++eq)
                for (std::size_t k = 0; k < dim; ++k) {
                    equations.at(eq, r * dim + k) += pairs_a[g].at(k, c);
                    equations.at(eq, k * dim + c) -= pairs_b[g].at(r, k);
                }
    const auto kernel = nullspace(equations);
    for (const auto& candidate : kernel) {
        RationalMatrix x(dim, dim);
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c) x.at(r, c) = candidate[r * dim + c];
        if (rank(x) == dim) return x;
    }
    if (kernel.size() > 1) {
        // A generic combination can be invertible even when no basis vector is.
        RationalMatrix x(dim, dim);
        for (std::size_t g = 0; g < kernel.size(); ++g)
            for (std::size_t r = 0; r < dim; ++r)
                for (std::size_t c = 0; c < dim; ++c)
                    x.at(r, c) += kernel[g][r * dim + c] * BigRational(static_cast<long>(g + 1));
        if (rank(x) == dim) return x;
    }
    return std::nullopt;
}

std::size_t rep_commutant_dimension(const TiedAlgebraRep& rep) {
    std::vector<RationalMatrix> mats;
    for (int i = 1; i < rep.strands; ++i) {
        mats.push_back(rep.crossing_matrix(i));
        mats.push_back(rep.tie_matrix(i));
    }
    if (mats.empty()) return 1;
    return commutant_dimension(mats, rep.dim);
}

std::vector<TiedAlgebraRep> irreps_three_strand() {
    const Partition row({3});
    const Partition column({1, 1, 1});
    const Partition hook({2, 1});
    std::vector<TiedAlgebraRep> out;
    out.push_back(ties_to_identity_rep(row));
    out.push_back(ties_to_identity_rep(column));
    out.push_back(ties_to_identity_rep(hook));
    out.push_back(ties_to_zero_rep(row));
    out.push_back(ties_to_zero_rep(column));
    out.push_back(ties_to_zero_rep(hook));
    out.push_back(to_tied_rep(InducedModule(Partition({2}), Partition({1}))));
    out.push_back(to_tied_rep(InducedModule(Partition({1, 1}), Partition({1}))));
    return out;
}

}  // namespace tiealg

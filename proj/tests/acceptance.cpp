// The acceptance gate: eleven end-to-end criteria, one verdict line each.
//
// Every criterion states a mathematical claim about the engine and checks it
// outright — no mocking, no tolerance knobs.  A criterion that fails prints
// the measured facts indented under its verdict so the discrepancy can be
// read off directly.  The process exit code is the number of failed criteria.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tiealg/certify.hpp"
#include "tiealg/diagram.hpp"
#include "tiealg/element.hpp"
#include "tiealg/errors.hpp"
#include "tiealg/identities.hpp"
#include "tiealg/induced.hpp"
#include "tiealg/matrix.hpp"
#include "tiealg/partitions.hpp"
#include "tiealg/permutation.hpp"
#include "tiealg/rewrite.hpp"
#include "tiealg/span_basis.hpp"
#include "tiealg/wreath.hpp"

#ifndef TIEALG_GOLDEN_DIR
#error "TIEALG_GOLDEN_DIR must point at the golden-file directory"
#endif

using namespace tiealg;

namespace {

// Problems collected while a criterion runs; empty means the criterion holds.
using Problems = std::vector<std::string>;

void expect(Problems& problems, bool ok, const std::string& message) {
    if (!ok) problems.push_back(message);
}

std::string read_golden(const std::string& name) {
    const std::string path = std::string(TIEALG_GOLDEN_DIR) + "/" + name;
    std::ifstream in(path, std::ios::binary);
    if (!in.is_open()) throw InputError("missing golden file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Element word_element(int n, const Word& word) {
    Element out(n);
    out.add_term(word, RationalFunction(1));
    return out;
}

bool supported_on(const Element& x, const std::set<Word>& allowed) {
    for (const auto& [word, coeff] : x.terms())
        if (!allowed.count(word)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// 1. Every catalogued identity — the nine defining families, the derived
//    consequences, and the two skein-style reductions — holds verbatim on
//    three and four strands, decided by the rewriting engine, within 30 s.
Problems criterion_identities() {
    Problems problems;
    const auto start = std::chrono::steady_clock::now();
    std::size_t checked = 0;
    for (int n : {3, 4}) {
        for (const IdentityCase& id : full_corpus(n)) {
            const Element lhs = Element::parse(id.n, id.lhs);
            const Element rhs = Element::parse(id.n, id.rhs);
            expect(problems, check_identity(lhs, rhs),
                   "identity '" + id.name + "' fails on " + std::to_string(id.n) + " strands");
            ++checked;
        }
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    expect(problems, checked >= 40,
           "corpus unexpectedly small: only " + std::to_string(checked) + " identities");
    expect(problems, elapsed < 30000,
           "identity sweep took " + std::to_string(elapsed) + " ms (budget 30000 ms)");
    return problems;
}

// ---------------------------------------------------------------------------
// 2. The two-strand algebra has dimension exactly 4: the basis is the word
//    list {1, T1, E1, T1 E1}, every pairwise product lands back in its span,
//    and the rank computation certifies the count as exact.
Problems criterion_two_strand_dimension() {
    Problems problems;
    const SpanBasis basis = span_basis(2);
    std::vector<Word> expected;
    for (const char* text : {"1", "T1", "E1", "T1 E1"})
        expected.push_back(Element::parse(2, text).single_word());
    expect(problems, basis.words == expected, "two-strand basis words differ from the frozen list");
    expect(problems, basis.is_basis, "two-strand span is not flagged as a proven basis");

    const std::set<Word> allowed(basis.words.begin(), basis.words.end());
    for (const Word& left : basis.words)
        for (const Word& right : basis.words) {
            const Element product = mul_reduced(word_element(2, left), word_element(2, right));
            expect(problems, supported_on(product, allowed),
                   "product " + left.to_string() + " * " + right.to_string() +
                       " leaves the basis span");
        }

    const DimensionReport report = dimension(2);
    expect(problems, report.dimension == 4,
           "dimension(2) reports " + std::to_string(report.dimension));
    expect(problems, report.exact, "dimension(2) is not certified exact");
    return problems;
}

// ---------------------------------------------------------------------------
// 3. The 30 three-strand span words have image matrix of exact rank 30 under
//    the combined quotient-plus-signed coordinate map, and the signed block
//    alone is already claimed to reach rank 30.
Problems criterion_rank_certificate() {
    Problems problems;
    const auto start = std::chrono::steady_clock::now();
    const SemisimplicityCertificate cert = semisimplicity_certificate();
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    expect(problems, cert.words.size() == 30,
           "span enumerates " + std::to_string(cert.words.size()) + " words");
    expect(problems, cert.joint_rank == 30,
           "joint rank is " + std::to_string(cert.joint_rank) + ", not 30");
    expect(problems, cert.signed_rank == 30,
           "signed-block rank is " + std::to_string(cert.signed_rank) + ", not 30");
    expect(problems, elapsed < 60000,
           "certificate took " + std::to_string(elapsed) + " ms (budget 60000 ms)");

    if (cert.signed_rank != 30) {
        // Document the obstruction: a concrete nonzero element annihilated by
        // the signed map yet visible to the quotient map, so the signed block
        // cannot separate the span on its own.
        const Element& witness = cert.kernel_witness;
        const bool signed_zero = specialization_image(witness, 3).terms().empty();
        bool quotient_nonzero = false;
        for (const auto& [perm, coeff] : sym_specialization_image(witness, 3, false))
            if (!(coeff == BigRational(0))) quotient_nonzero = true;
        const Element reduced = normal_form(witness);
        problems.push_back("witness " + witness.to_string());
        problems.push_back(std::string("  signed image vanishes: ") +
                           (signed_zero ? "yes" : "no"));
        problems.push_back(std::string("  quotient image vanishes: ") +
                           (quotient_nonzero ? "no" : "yes"));
        problems.push_back(std::string("  normal form is zero: ") +
                           (reduced.is_zero() ? "yes" : "no, " + reduced.to_string()));
        problems.push_back(
            "  the signed map alone separates only a 24-dimensional quotient; the joint rank"
            " does reach 30, so the dimension claim itself stands via the combined map");
    }
    return problems;
}

// ---------------------------------------------------------------------------
// 4. The three-strand multiplication table closes over the 30-word basis and
//    the induced table product is associative on 500 randomized triples.
Problems criterion_structure_constants() {
    Problems problems;
    const StructureConstants sc = structure_constants(3);
    expect(problems, sc.basis.size() == 30,
           "table basis has " + std::to_string(sc.basis.size()) + " words");

    const std::set<Word> allowed(sc.basis.begin(), sc.basis.end());
    std::map<Word, std::size_t> index_of;
    for (std::size_t i = 0; i < sc.basis.size(); ++i) index_of[sc.basis[i]] = i;

    bool closed = true;
    for (const auto& row : sc.table)
        for (const Element& entry : row)
            if (!supported_on(entry, allowed)) closed = false;
    expect(problems, closed, "a table entry leaves the 30-word span");
    if (!closed) return problems;

    // Multiply two basis-supported elements using only table lookups.
    const auto table_mul = [&](const Element& x, const Element& y) {
        Element out(3);
        for (const auto& [wx, cx] : x.terms())
            for (const auto& [wy, cy] : y.terms())
                out += sc.table[index_of.at(wx)][index_of.at(wy)].scaled(cx * cy);
        return out;
    };

    std::mt19937_64 rng(420011);
    std::uniform_int_distribution<std::size_t> pick(0, sc.basis.size() - 1);
    int associative_failures = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
        const Element left = table_mul(sc.table[i][j], word_element(3, sc.basis[k]));
        const Element right = table_mul(word_element(3, sc.basis[i]), sc.table[j][k]);
        if (!(left == right)) ++associative_failures;
    }
    expect(problems, associative_failures == 0,
           std::to_string(associative_failures) + " of 500 associativity triples fail");
    return problems;
}

// ---------------------------------------------------------------------------
// 5. The signed-specialization map is an algebra morphism: for 200 random
//    element pairs with pole-free coefficients, the image of the reduced
//    product equals the product of the images.
Problems criterion_specialization_morphism() {
    Problems problems;
    std::mt19937_64 rng(520011);
    const std::vector<RationalFunction> coefficient_pool = {
        RationalFunction(1),
        RationalFunction(-1),
        RationalFunction(2),
        RationalFunction::from_string("u"),
        RationalFunction::from_string("u-1"),
        RationalFunction::from_string("u+2"),
        RationalFunction::from_string("1/3"),
    };
    std::vector<Generator> alphabet;
    for (int i = 1; i <= 2; ++i) {
        alphabet.push_back(Generator::braid(i));
        alphabet.push_back(Generator::braid_inverse(i));
        alphabet.push_back(Generator::tie(i));
    }
    std::uniform_int_distribution<int> term_count(1, 3);
    std::uniform_int_distribution<int> word_length(0, 5);
    std::uniform_int_distribution<std::size_t> pick_letter(0, alphabet.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_coeff(0, coefficient_pool.size() - 1);

    const auto random_element = [&]() {
        Element out(3);
        const int terms = term_count(rng);
        for (int t = 0; t < terms; ++t) {
            Word w;
            const int len = word_length(rng);
            for (int k = 0; k < len; ++k) w.push_back(alphabet[pick_letter(rng)]);
            out.add_term(w, coefficient_pool[pick_coeff(rng)]);
        }
        return out;
    };

    int mismatches = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const Element a = random_element();
        const Element b = random_element();
        const WreathAlgebraElement lhs = specialization_image(mul_reduced(a, b), 3);
        const WreathAlgebraElement rhs = specialization_image(a, 3) * specialization_image(b, 3);
        if (!(lhs == rhs)) ++mismatches;
    }
    expect(problems, mismatches == 0,
           std::to_string(mismatches) + " of 200 product images disagree");
    return problems;
}

// ---------------------------------------------------------------------------
// 6. The three-strand algebra at u = 1 has exactly eight irreducible
//    representations with dimensions (1,1,2,1,1,2,3,3): squared dimensions
//    sum to 30, all defining relations hold in each, characters over the
//    30-word basis are pairwise distinct, and each commutant is trivial.
Problems criterion_irreducibles() {
    Problems problems;
    const std::vector<TiedAlgebraRep> reps = irreps_three_strand();
    expect(problems, reps.size() == 8,
           "catalogue holds " + std::to_string(reps.size()) + " representations");

    const std::vector<std::size_t> expected_dims = {1, 1, 2, 1, 1, 2, 3, 3};
    std::size_t square_sum = 0;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        square_sum += reps[i].dim * reps[i].dim;
        if (i < expected_dims.size())
            expect(problems, reps[i].dim == expected_dims[i],
                   reps[i].label + " has dimension " + std::to_string(reps[i].dim));
    }
    expect(problems, square_sum == 30,
           "squared dimensions sum to " + std::to_string(square_sum));

    for (const TiedAlgebraRep& rep : reps) {
        try {
            verify_tied_relations(rep);
        } catch (const Error& e) {
            problems.push_back(rep.label + " breaks a relation: " + e.what());
        }
        const std::size_t commutant = rep_commutant_dimension(rep);
        expect(problems, commutant == 1,
               rep.label + " has commutant dimension " + std::to_string(commutant));
    }

    const std::vector<Word>& words = span_basis(3).words;
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j)
            expect(problems, reps[i].character(words) != reps[j].character(words),
                   reps[i].label + " and " + reps[j].label + " share a character");
    return problems;
}

// ---------------------------------------------------------------------------
// 7. In the coset model of each bipartition of 3 with first-block size a, the
//    claim under test reads: every tie away from the boundary acts as the
//    identity and the boundary tie (r = a) acts as zero.
Problems criterion_boundary_tie_claim() {
    Problems problems;
    std::vector<Bipartition> shapes;
    for (int a = 0; a <= 3; ++a)
        for (const Partition& first : all_partitions(a))
            for (const Partition& second : all_partitions(3 - a))
                shapes.push_back({first, second});

    for (const Bipartition& shape : shapes) {
        const InducedModule module(shape.first, shape.second);
        const int boundary = shape.first.size();
        for (int r = 1; r <= 2; ++r) {
            const RationalMatrix tie = module.tie_matrix(r);
            const bool should_vanish = (r == boundary);
            const RationalMatrix target = should_vanish
                                              ? RationalMatrix(tie.rows(), tie.cols())
                                              : RationalMatrix::identity(tie.rows());
            if (!(tie == target)) {
                std::string diag = "diag(";
                for (std::size_t i = 0; i < tie.rows(); ++i)
                    diag += (i ? "," : "") + tie.at(i, i).to_string();
                diag += ")";
                problems.push_back("in " + shape.label() + ", tie " + std::to_string(r) +
                                   " is " + diag + " but the claim demands " +
                                   (should_vanish ? "the zero matrix" : "the identity"));
            }
        }
    }
    if (!problems.empty())
        problems.push_back(
            "the claim holds when one block is empty but fails on every mixed bipartition:"
            " there the tie projects onto the cosets whose strands stay on one side, which"
            " is a proper nonzero idempotent rather than 0 or 1");
    return problems;
}

// ---------------------------------------------------------------------------
// 8. Intertwiners: swapping the two blocks of a mixed bipartition gives an
//    invertible equivalence (checked for both three-strand mixed pairs), and
//    each identity-tie pullback is equivalent to its one-block coset module.
Problems criterion_intertwiners() {
    Problems problems;

    const auto check_swap_pair = [&](const char* a1, const char* a2) {
        const InducedModule from(Partition::parse(a1), Partition::parse(a2));
        const InducedModule to(Partition::parse(a2), Partition::parse(a1));
        const RationalMatrix phi = swap_intertwiner(from, to);
        expect(problems, rank(phi) == from.dim(),
               "swap intertwiner for " + from.shape().label() + " is singular");
        const TiedAlgebraRep source = to_tied_rep(from);
        const TiedAlgebraRep target = to_tied_rep(to);
        for (int k = 1; k < 3; ++k) {
            expect(problems, phi * source.crossing_matrix(k) == target.crossing_matrix(k) * phi,
                   "swap map fails to carry crossing " + std::to_string(k) + " for " +
                       from.shape().label());
            expect(problems, phi * source.tie_matrix(k) == target.tie_matrix(k) * phi,
                   "swap map fails to carry tie " + std::to_string(k) + " for " +
                       from.shape().label());
        }
    };
    check_swap_pair("[2]", "[1]");
    check_swap_pair("[1,1]", "[1]");

    for (const Partition& alpha : all_partitions(3)) {
        const TiedAlgebraRep pullback = ties_to_identity_rep(alpha);
        const TiedAlgebraRep coset_model = to_tied_rep(InducedModule(alpha, Partition()));
        const std::optional<RationalMatrix> phi = equivalence_intertwiner(pullback, coset_model);
        expect(problems, phi.has_value(),
               "no intertwiner between the pullback and coset model of " + alpha.to_string());
        if (phi) {
            expect(problems, rank(*phi) == pullback.dim,
                   "pullback intertwiner for " + alpha.to_string() + " is singular");
            for (int k = 1; k < 3; ++k) {
                expect(problems,
                       *phi * pullback.crossing_matrix(k) == coset_model.crossing_matrix(k) * *phi,
                       "pullback map fails on crossing " + std::to_string(k) + " for " +
                           alpha.to_string());
                expect(problems, *phi * pullback.tie_matrix(k) == coset_model.tie_matrix(k) * *phi,
                       "pullback map fails on tie " + std::to_string(k) + " for " +
                           alpha.to_string());
            }
        }
    }
    return problems;
}

// ---------------------------------------------------------------------------
// 9. The balanced two-strand module splits into plus/minus eigenlines of the
//    block-swap map; together with the two identity-tie pullbacks they form
//    exactly the four pairwise-distinct one-dimensional representations.
Problems criterion_balanced_split() {
    Problems problems;
    const auto [plus, minus] = plus_minus_split(Partition::parse("[1]"));
    expect(problems, plus.dim == 1 && minus.dim == 1, "split parts are not one-dimensional");

    std::vector<TiedAlgebraRep> reps = {ties_to_identity_rep(Partition::parse("[2]")),
                                        ties_to_identity_rep(Partition::parse("[1,1]")), plus,
                                        minus};
    std::set<std::pair<std::string, std::string>> scalars;
    for (const TiedAlgebraRep& rep : reps) {
        try {
            verify_tied_relations(rep);
        } catch (const Error& e) {
            problems.push_back(rep.label + " breaks a relation: " + e.what());
        }
        if (rep.dim == 1)
            scalars.insert({rep.crossing_matrix(1).at(0, 0).to_string(),
                            rep.tie_matrix(1).at(0, 0).to_string()});
    }
    const std::set<std::pair<std::string, std::string>> wanted = {
        {"1", "1"}, {"-1", "1"}, {"1", "0"}, {"-1", "0"}};
    expect(problems, scalars == wanted,
           "the four (crossing, tie) scalar pairs differ from {±1} × {0, 1}");

    const std::vector<Word>& words = span_basis(2).words;
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j)
            expect(problems, reps[i].character(words) != reps[j].character(words),
                   reps[i].label + " and " + reps[j].label + " share a character");
    return problems;
}

// ---------------------------------------------------------------------------
// 10. Block-swap combinatorics, exhaustively: the swap inverts across the two
//     block orders, shifts adjacent transpositions across the boundary,
//     conjugates one parabolic onto the other, and carries one representative
//     family onto the other, for every split of every n up to 5; the coset
//     step case analysis is total and exclusive for n up to 4.
Problems criterion_block_swap_laws() {
    Problems problems;

    const auto parabolic = [](int a, int b) {
        std::vector<Permutation> out;
        for (const Permutation& p : all_permutations(a + b)) {
            bool keeps = true;
            for (int x = 1; x <= a && keeps; ++x) keeps = p.apply(x) <= a;
            if (keeps) out.push_back(p);
        }
        return out;
    };
    const auto as_set = [](const std::vector<Permutation>& ps) {
        std::set<std::vector<int>> out;
        for (const Permutation& p : ps) out.insert(p.one_line());
        return out;
    };

    for (int n = 1; n <= 5; ++n)
        for (int a = 0; a <= n; ++a) {
            const int b = n - a;
            const Permutation w = block_swap(a, b);

            expect(problems, w * block_swap(b, a) == Permutation::identity(n),
                   "swap pair is not inverse at (" + std::to_string(a) + "," +
                       std::to_string(b) + ")");
            expect(problems, block_swap(b, a) * w == Permutation::identity(n),
                   "swap pair is not inverse (other order) at (" + std::to_string(a) + "," +
                       std::to_string(b) + ")");

            bool shifts = true;
            for (int k = 1; k < b; ++k)
                shifts = shifts && w * Permutation::transposition(n, k) ==
                                       Permutation::transposition(n, a + k) * w;
            for (int k = b + 1; k < n; ++k)
                shifts = shifts && w * Permutation::transposition(n, k) ==
                                       Permutation::transposition(n, k - b) * w;
            expect(problems, shifts,
                   "boundary shift law fails at (" + std::to_string(a) + "," +
                       std::to_string(b) + ")");

            std::vector<Permutation> left, right;
            for (const Permutation& h : parabolic(a, b)) left.push_back(h * w);
            for (const Permutation& h : parabolic(b, a)) right.push_back(w * h);
            expect(problems, as_set(left) == as_set(right),
                   "parabolic conjugation fails at (" + std::to_string(a) + "," +
                       std::to_string(b) + ")");

            if (a >= 1 && b >= 1) {
                std::vector<Permutation> mapped;
                for (const Permutation& v : coset_reps(b, a).reps) mapped.push_back(w * v);
                expect(problems, as_set(mapped) == as_set(coset_reps(a, b).reps),
                       "representative transport fails at (" + std::to_string(a) + "," +
                           std::to_string(b) + ")");
            }
        }

    for (int n = 2; n <= 4; ++n)
        for (int a = 1; a < n; ++a) {
            const CosetSystem system = coset_reps(a, n - a);
            for (const Permutation& x : system.reps)
                for (int k = 1; k < n; ++k) {
                    const Permutation xs = x * Permutation::transposition(n, k);
                    const DeodharStep step = deodhar_step(system, x, k);
                    const bool in_reps = system.contains(xs);
                    expect(problems, step.stays_in_reps == in_reps,
                           "coset step misclassifies a move at n=" + std::to_string(n));
                    if (step.stays_in_reps) {
                        expect(problems, step.moved == xs,
                               "coset step returns the wrong representative");
                    } else {
                        const int j = step.reflected_index;
                        expect(problems,
                               j >= 1 && j < n && j != a &&
                                   xs == Permutation::transposition(n, j) * x,
                               "coset step returns the wrong reflection");
                    }
                }
        }
    return problems;
}

// ---------------------------------------------------------------------------
// 11. Diagrams are a faithful encoding: 1000 random words round-trip through
//     the diagram layer, and the ASCII and SVG renders of three frozen inputs
//     match their golden files byte for byte.
Problems criterion_diagrams() {
    Problems problems;
    std::mt19937_64 rng(110011);
    std::uniform_int_distribution<int> len_dist(0, 12);
    int round_trip_failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 + trial % 4;
        std::vector<Generator> alphabet;
        for (int i = 1; i < n; ++i) {
            alphabet.push_back(Generator::braid(i));
            alphabet.push_back(Generator::braid_inverse(i));
            alphabet.push_back(Generator::tie(i));
        }
        std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
        Word w;
        const int len = len_dist(rng);
        for (int k = 0; k < len; ++k) w.push_back(alphabet[pick(rng)]);

        const TiedBraidDiagram d = TiedBraidDiagram::from_word(n, w);
        if (!(d.to_word() == w)) ++round_trip_failures;
    }
    expect(problems, round_trip_failures == 0,
           std::to_string(round_trip_failures) + " of 1000 words fail the round trip");

    const auto check_render = [&](int n, const char* text, bool svg, const char* golden) {
        const TiedBraidDiagram d = TiedBraidDiagram::from_word(n, Element::parse(n, text).single_word());
        const std::string rendered = svg ? d.render_svg() : d.render_ascii();
        expect(problems, rendered == read_golden(golden),
               std::string(golden) + " drifted from the frozen render");
    };
    check_render(3, "T1 E2 T1^-1", false, "diagram_t1e2t1inv_n3.txt");
    check_render(3, "T1 E2 T1^-1", true, "diagram_t1e2t1inv_n3.svg");
    check_render(2, "E1", false, "diagram_e1_n2.txt");
    check_render(2, "T1", true, "diagram_t1_n2.svg");
    return problems;
}

}  // namespace

int main() {
    struct Entry {
        const char* title;
        std::function<Problems()> body;
    };
    const std::vector<Entry> criteria = {
        {"defining, derived, and skein identities all hold on 3 and 4 strands",
         criterion_identities},
        {"the two-strand algebra is exactly 4-dimensional with a closed basis",
         criterion_two_strand_dimension},
        {"the 30 three-strand words reach rank 30 jointly and under the signed map alone",
         criterion_rank_certificate},
        {"the three-strand multiplication table closes and is associative",
         criterion_structure_constants},
        {"the signed specialization is multiplicative on 200 random pairs",
         criterion_specialization_morphism},
        {"exactly eight irreducibles at u = 1 with squared dimensions summing to 30",
         criterion_irreducibles},
        {"ties act as identity off the block boundary and as zero on it",
         criterion_boundary_tie_claim},
        {"swap and pullback intertwiners exist and are invertible", criterion_intertwiners},
        {"the balanced two-strand split yields the four distinct characters",
         criterion_balanced_split},
        {"block-swap laws and the coset step hold exhaustively", criterion_block_swap_laws},
        {"diagrams round-trip and renders match the golden files", criterion_diagrams},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Problems problems;
        try {
            problems = criteria[i].body();
        } catch (const std::exception& e) {
            problems.push_back(std::string("unexpected exception: ") + e.what());
        }
        const bool ok = problems.empty();
        std::printf("[%s] criterion %zu: %s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].title);
        for (const std::string& line : problems) std::printf("       %s\n", line.c_str());
        if (!ok) ++failures;
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures;
}

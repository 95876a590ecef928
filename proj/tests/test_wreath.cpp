#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "identity_corpus.hpp"
#include "tiealg/element.hpp"
#include "tiealg/errors.hpp"
#include "tiealg/rational_function.hpp"
#include "tiealg/rewrite.hpp"
#include "tiealg/wreath.hpp"

using tiealg::all_signed_permutations;
using tiealg::BigRational;
using tiealg::Element;
using tiealg::Permutation;
using tiealg::RationalFunction;
using tiealg::SignedPermutation;
using tiealg::specialization_image;
using tiealg::sym_specialization_image;
using tiealg::tie_idempotent;
using tiealg::WreathAlgebraElement;

namespace {

SignedPermutation s(int n, int i) { return SignedPermutation::crossing(n, i); }
SignedPermutation t(int n, int r) { return SignedPermutation::flip(n, r); }

Element random_integral_element(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> term_count(1, 3);
    std::uniform_int_distribution<int> word_len(0, 4);
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<int> index(1, n - 1);
    std::uniform_int_distribution<long> coeff(-3, 3);
    Element out = Element::zero(n);
    const int terms = term_count(rng);
    for (int i = 0; i < terms; ++i) {
        tiealg::Word w;
        const int len = word_len(rng);
        for (int j = 0; j < len; ++j) {
            const int idx = index(rng);
            switch (kind(rng)) {
                case 0: w.push_back(tiealg::Generator::braid(idx)); break;
                case 1: w.push_back(tiealg::Generator::braid_inverse(idx)); break;
                default: w.push_back(tiealg::Generator::tie(idx)); break;
            }
        }
        out += Element::from_word(n, w, RationalFunction(coeff(rng)));
    }
    return out;
}

}  // namespace

TEST_CASE("signed permutations form a group with the expected size") {
    const auto all3 = all_signed_permutations(3);
    CHECK(all3.size() == 48);  // 2^3 * 3!

    std::mt19937 rng(99);
    std::uniform_int_distribution<std::size_t> pick(0, all3.size() - 1);
    const SignedPermutation id(3);
    for (int trial = 0; trial < 200; ++trial) {
        const SignedPermutation& a = all3[pick(rng)];
        const SignedPermutation& b = all3[pick(rng)];
        const SignedPermutation& c = all3[pick(rng)];
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * a.inverse() == id);
        CHECK(a.inverse() * a == id);
        CHECK(a * id == a);
        CHECK(id * a == a);
    }

    CHECK(all_signed_permutations(2).size() == 8);
}

TEST_CASE("flip generators satisfy the signed Coxeter presentation") {
    for (int n = 2; n <= 4; ++n) {
        const SignedPermutation id(n);
        for (int r = 1; r <= n; ++r) {
            CHECK(t(n, r) * t(n, r) == id);
            for (int q = r + 1; q <= n; ++q) CHECK(t(n, r) * t(n, q) == t(n, q) * t(n, r));
        }
        for (int i = 1; i < n; ++i) {
            // The swap carries one flip to the next.
            CHECK(s(n, i) * t(n, i) * s(n, i) == t(n, i + 1));
            CHECK(s(n, i) * t(n, i + 1) * s(n, i) == t(n, i));
            for (int r = 1; r <= n; ++r)
                if (r != i && r != i + 1) CHECK(s(n, i) * t(n, r) == t(n, r) * s(n, i));
        }
        // Order-4 composite generating the signed series.
        SignedPermutation ts = t(n, 1) * s(n, 1);
        CHECK(ts * ts * ts * ts == id);
    }
}

TEST_CASE("conjugating a flip pattern by the block swap rotates it") {
    for (int n = 2; n <= 4; ++n)
        for (int a = 0; a <= n; ++a) {
            const int b = n - a;
            const SignedPermutation w(tiealg::block_swap(a, b),
                                      std::vector<int>(static_cast<std::size_t>(n), 0));
            for (int mask = 0; mask < (1 << n); ++mask) {
                std::vector<int> bits(static_cast<std::size_t>(n));
                for (int r = 0; r < n; ++r) bits[static_cast<std::size_t>(r)] = (mask >> r) & 1;
                const SignedPermutation diag(Permutation::identity(n), bits);
                const SignedPermutation conj = w.inverse() * diag * w;
                CHECK(conj.perm() == Permutation::identity(n));
                // Expected: last b bits first, then the first a bits.
                std::vector<int> rotated;
                for (int r = a; r < n; ++r) rotated.push_back(bits[static_cast<std::size_t>(r)]);
                for (int r = 0; r < a; ++r) rotated.push_back(bits[static_cast<std::size_t>(r)]);
                CHECK(conj.flips() == rotated);
            }
        }
}

TEST_CASE("tie idempotents multiply as advertised") {
    const auto e1_in_2 = tie_idempotent(2, 1);
    CHECK(e1_in_2 * e1_in_2 == e1_in_2);

    const auto e1 = tie_idempotent(3, 1);
    const auto e2 = tie_idempotent(3, 2);
    CHECK(e1 * e1 == e1);
    CHECK(e2 * e2 == e2);
    CHECK(e1 * e2 == e2 * e1);

    // Conjugating the first tie by the far swap reaches the skipping pair.
    const auto s2 = WreathAlgebraElement::single(s(3, 2));
    WreathAlgebraElement skip(3);
    skip.add_term(SignedPermutation(3), BigRational(1, 2));
    skip.add_term(t(3, 1) * t(3, 3), BigRational(1, 2));
    CHECK(s2 * e1 * s2 == skip);
    CHECK(skip * skip == skip);

    CHECK_THROWS_AS(tie_idempotent(3, 3), tiealg::IndexOutOfRange);
}

TEST_CASE("specialization sends documented elements where expected") {
    CHECK(specialization_image(Element::parse(3, "T1 T1"), 3) == WreathAlgebraElement::one(3));
    CHECK(specialization_image(Element::parse(3, "E1"), 3) == tie_idempotent(3, 1));
    CHECK(specialization_image(Element::parse(3, "T1^-1"), 3) ==
          WreathAlgebraElement::single(s(3, 1)));
    CHECK(specialization_image(Element::parse(3, "E1 T2 T1") - Element::parse(3, "T2 T1 E2"), 3)
              .is_zero());

    // A coefficient with a pole at the specialization point must refuse.
    const RationalFunction pole =
        RationalFunction(1) / (RationalFunction::variable() - RationalFunction(1));
    CHECK_THROWS_AS(
        specialization_image(Element::from_word(2, tiealg::Word(), pole), 2),
        tiealg::PoleAtPoint);
}

TEST_CASE("all defining relations hold verbatim in the group algebra") {
    for (int n = 2; n <= 4; ++n)
        for (const auto& c : tiealg_tests::defining_relation_cases(n)) {
            CAPTURE(c.name);
            const auto lhs = specialization_image(Element::parse(n, c.lhs), n);
            const auto rhs = specialization_image(Element::parse(n, c.rhs), n);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("specialization is multiplicative against the rewrite engine") {
    std::mt19937 rng(2718);
    for (int n = 2; n <= 4; ++n)
        for (int trial = 0; trial < (n == 4 ? 40 : 80); ++trial) {
            const Element a = random_integral_element(rng, n);
            const Element b = random_integral_element(rng, n);
            const auto direct = specialization_image(a, n) * specialization_image(b, n);
            const auto reduced = specialization_image(tiealg::mul_reduced(a, b), n);
            CHECK(direct == reduced);
        }
}

TEST_CASE("plain-symmetric-group specializations kill or keep ties") {
    const Element e1 = Element::parse(3, "E1");
    CHECK(sym_specialization_image(e1, 3, false).empty());
    const auto kept = sym_specialization_image(e1, 3, true);
    REQUIRE(kept.size() == 1);
    CHECK(kept.at(Permutation::identity(3)) == BigRational(1));

    const auto braid = sym_specialization_image(Element::parse(3, "T1 T2"), 3, false);
    REQUIRE(braid.size() == 1);
    CHECK(braid.at(Permutation::transposition(3, 1) * Permutation::transposition(3, 2)) ==
          BigRational(1));

    // Both specializations factor through multiplication as well.
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const Element a = random_integral_element(rng, 3);
        const Element b = random_integral_element(rng, 3);
        for (const bool ties_one : {false, true}) {
            auto lhs = sym_specialization_image(tiealg::mul_reduced(a, b), 3, ties_one);
            std::map<Permutation, BigRational> rhs;
            for (const auto& [p, cp] : sym_specialization_image(a, 3, ties_one))
                for (const auto& [q, cq] : sym_specialization_image(b, 3, ties_one)) {
                    auto [it, inserted] = rhs.emplace(p * q, cp * cq);
                    if (!inserted) it->second += cp * cq;
                }
            std::erase_if(rhs, [](const auto& kv) { return kv.second == BigRational(0); });
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("the kernel witness separates the two specializations") {
    // This combination lands in the kernel of the signed-group specialization
    // while the tie-killing specialization still sees it — so the signed
    // specialization alone cannot be injective on the three-strand algebra.
    const Element witness = Element::parse(3, "1") - Element::parse(3, "E1") -
                            Element::parse(3, "E2") +
                            Element::parse(3, "E1 E2").scaled(RationalFunction(2)) -
                            Element::parse(3, "T1 E2 T1");
    CHECK(specialization_image(witness, 3).is_zero());
    const auto phi0 = sym_specialization_image(witness, 3, false);
    REQUIRE(phi0.size() == 1);
    CHECK(phi0.at(Permutation::identity(3)) == BigRational(1));

    // And the witness is not the zero element of the algebra itself.
    CHECK_FALSE(tiealg::normal_form(witness).is_zero());
}

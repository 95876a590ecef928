#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tiealg/element.hpp"
#include "tiealg/errors.hpp"

using namespace tiealg;

namespace {

std::mt19937_64 rng(6174u);

Word random_word(int n, int max_length) {
    std::uniform_int_distribution<int> len(0, max_length);
    std::uniform_int_distribution<int> idx(1, n - 1);
    std::uniform_int_distribution<int> kind(0, 2);
    Word word;
    int length = len(rng);
    for (int k = 0; k < length; ++k) {
        int i = idx(rng);
        switch (kind(rng)) {
            case 0: word.push_back(Generator::braid(i)); break;
            case 1: word.push_back(Generator::braid_inverse(i)); break;
            default: word.push_back(Generator::tie(i)); break;
        }
    }
    return word;
}

RationalFunction random_coefficient() {
    static const RationalFunction u = RationalFunction::variable();
    static const std::vector<RationalFunction> pool = {
        RationalFunction(1),       RationalFunction(-2),
        RationalFunction(BigRational(1, 2)),
        u,                          u - RationalFunction(1),
        (RationalFunction(1) - u) / u,
        u.inverse(),
    };
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    return pool[pick(rng)];
}

Element random_element(int n, int max_terms) {
    std::uniform_int_distribution<int> count(0, max_terms);
    Element x(n);
    int terms = count(rng);
    for (int k = 0; k < terms; ++k) x.add_term(random_word(n, 4), random_coefficient());
    return x;
}

}  // namespace

TEST_CASE("generators print their conventional names") {
    CHECK(Generator::braid(1).to_string() == "T1");
    CHECK(Generator::braid_inverse(2).to_string() == "T2^-1");
    CHECK(Generator::tie(3).to_string() == "E3");
}

TEST_CASE("word order is length-lex") {
    Word empty;
    Word t1 = Word::single(Generator::braid(1));
    Word t1i = Word::single(Generator::braid_inverse(1));
    Word e1 = Word::single(Generator::tie(1));
    Word t2 = Word::single(Generator::braid(2));
    Word t1e1 = t1 * e1;
    CHECK(empty < t1);
    CHECK(t1 < t1i);
    CHECK(t1i < e1);
    CHECK(e1 < t2);
    CHECK(t2 < t1e1);  // longer words come later regardless of letters
    CHECK(empty.to_string() == "1");
    CHECK(t1e1.to_string() == "T1 E1");
}

TEST_CASE("parsing accepts the documented forms") {
    Element a = Element::parse(3, "T1 E2 T1");
    REQUIRE(a.is_single_word());
    CHECK(a.single_word().to_string() == "T1 E2 T1");
    CHECK(Element::parse(3, "T1E2T1") == a);  // juxtaposed letters are fine

    Element b = Element::parse(2, "(u-1)*E1 T1 + 1");
    CHECK(b.term_count() == 2);
    Word e1t1({Generator::tie(1), Generator::braid(1)});
    CHECK(b.coefficient(e1t1) == RationalFunction::variable() - RationalFunction(1));
    CHECK(b.coefficient(Word::identity()) == RationalFunction(1));

    CHECK(Element::parse(2, "1") == Element::one(2));
    CHECK(Element::parse(2, "3/2") == Element::one(2).scaled(RationalFunction(BigRational(3, 2))));
    CHECK(Element::parse(2, "1/2*T1") ==
          Element::braid(2, 1).scaled(RationalFunction(BigRational(1, 2))));
    CHECK(Element::parse(2, "T1^-1") == Element::braid_inverse(2, 1));
    CHECK(Element::parse(2, "T1 - T1") == Element::zero(2));
    CHECK(Element::parse(3, "-E2 + T1") == Element::braid(3, 1) - Element::tie(3, 2));
}

TEST_CASE("parsing rejects the documented malformations") {
    CHECK_THROWS_AS(Element::parse(3, "E3"), IndexOutOfRange);
    CHECK_THROWS_AS(Element::parse(3, "T0"), IndexOutOfRange);
    CHECK_THROWS_AS(Element::parse(3, "T9"), IndexOutOfRange);
    CHECK_THROWS_AS(Element::parse(3, "E1^-1"), SyntaxError);
    CHECK_THROWS_AS(Element::parse(3, "T1^2"), SyntaxError);
    CHECK_THROWS_AS(Element::parse(3, ""), SyntaxError);
    CHECK_THROWS_AS(Element::parse(3, "T1 +"), SyntaxError);
    CHECK_THROWS_AS(Element::parse(3, "T1 Q2"), SyntaxError);
    CHECK_THROWS_AS(Element::parse(3, "(u"), SyntaxError);
    CHECK_THROWS_AS(Element::parse(3, "(v)*T1"), SyntaxError);
    CHECK_THROWS_AS(Element::parse(1, "T1"), Unsupported);

    try {
        Element::parse(3, "T1 %");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.position() == 3);
    }
}

TEST_CASE("printing is deterministic and re-parses to the same element") {
    Element b = Element::parse(2, "(u-1)*E1 T1 + 1");
    CHECK(b.to_string() == "1 + (u-1)*E1 T1");

    Element c = Element::parse(2, "-T1 + 1");
    CHECK(c.to_string() == "1 - T1");

    CHECK(Element::zero(2).to_string() == "0");
    CHECK(Element::one(3).to_string() == "1");
    CHECK(Element::parse(2, "((1-u)/u)*E1").to_string() == "((1-u)/u)*E1");
    CHECK(Element::parse(2, "2*E1 - 1/2").to_string() == "-1/2 + 2*E1");

    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(trial % 3);
        Element x = random_element(n, 5);
        CAPTURE(x.to_string());
        CHECK(Element::parse(n, x.to_string()) == x);
    }
}

TEST_CASE("free multiplication concatenates and distributes") {
    Element t1 = Element::braid(3, 1);
    Element e2 = Element::tie(3, 2);
    Element product = (t1 + e2).free_mul(t1);
    CHECK(product.term_count() == 2);
    CHECK(product.coefficient(Word({Generator::braid(1), Generator::braid(1)})) ==
          RationalFunction(1));
    CHECK(product.coefficient(Word({Generator::tie(2), Generator::braid(1)})) ==
          RationalFunction(1));

    for (int trial = 0; trial < 60; ++trial) {
        Element a = random_element(3, 3), b = random_element(3, 3), c = random_element(3, 3);
        CHECK(a.free_mul(b.free_mul(c)) == a.free_mul(b).free_mul(c));
        CHECK(a.free_mul(Element::one(3)) == a);
        CHECK(Element::one(3).free_mul(a) == a);
        CHECK(a.free_mul(b + c) == a.free_mul(b) + a.free_mul(c));
    }
}

TEST_CASE("ambient sizes must agree") {
    CHECK_THROWS_AS(Element::one(2) + Element::one(3), AmbientMismatch);
    CHECK_THROWS_AS(Element::one(2).free_mul(Element::one(3)), AmbientMismatch);
    CHECK_THROWS_AS(Element::from_word(2, Word::single(Generator::tie(2))), IndexOutOfRange);
}

TEST_CASE("scalar image is multiplicative and linear") {
    RationalFunction u = RationalFunction::variable();
    RationalFunction t = -u.inverse();
    RationalFunction e(1);
    Element w = Element::parse(3, "T1 E2 T1^-1");
    CHECK(w.scalar_image(t, e) == t * e * t.inverse());
    for (int trial = 0; trial < 40; ++trial) {
        Element a = random_element(3, 3), b = random_element(3, 3);
        CHECK(a.free_mul(b).scalar_image(t, e) == a.scalar_image(t, e) * b.scalar_image(t, e));
        CHECK((a + b).scalar_image(t, e) == a.scalar_image(t, e) + b.scalar_image(t, e));
    }
}

#include <doctest.h>

#include "octobil/element.hpp"
#include "test_support.hpp"

using namespace octobil;
using octobil::testing::random_element;
using octobil::testing::random_rational;

namespace {

const int kLevels[] = {1, 2, 4, 8};

// sum of squared coordinates, computed without norm()
Rational norm_by_hand(const Element& x) {
    Rational s;
    for (int i = 0; i < x.level(); ++i) s += x[i] * x[i];
    return s;
}

Element unit4(int i) { return Element::unit(4, i); }

}  // namespace

TEST_CASE("e0 is a two-sided identity at every level") {
    for (int level : kLevels) {
        CounterRng rng(11, static_cast<uint64_t>(level));
        const Element one = Element::one(level);
        for (int t = 0; t < 50; ++t) {
            const Element x = random_element(rng, level);
            CHECK(mul(one, x) == x);
            CHECK(mul(x, one) == x);
        }
    }
}

TEST_CASE("level-4 multiplication table matches the hand-expanded doubling recursion") {
    // expanding (a,b)(c,d) = (ac - conj(d)b, da + b conj(c)) over the four
    // level-4 units gives, with rows as the left factor:
    //        e0   e1   e2   e3
    //   e0 | e0   e1   e2   e3
    //   e1 | e1  -e0   e3  -e2
    //   e2 | e2  -e3  -e0   e1
    //   e3 | e3   e2  -e1  -e0
    const int idx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            Element expected = unit4(idx[i][j]);
            if (sign[i][j] < 0) expected = -expected;
            CAPTURE(i);
            CAPTURE(j);
            CHECK(mul(unit4(i), unit4(j)) == expected);
        }
    }
}

TEST_CASE("composition law N(xy) = N(x)N(y), exactly, at every level") {
    for (int level : kLevels) {
        CounterRng rng(23, static_cast<uint64_t>(level));
        for (int t = 0; t < 100; ++t) {
            const Element x = random_element(rng, level);
            const Element y = random_element(rng, level);
            CHECK(norm_by_hand(mul(x, y)) == norm_by_hand(x) * norm_by_hand(y));
        }
    }
}

TEST_CASE("conjugation") {
    CHECK(conj(Element::one(8)) == Element::one(8));
    CHECK(conj(Element::unit(8, 1)) == -Element::unit(8, 1));

    for (int level : kLevels) {
        CounterRng rng(31, static_cast<uint64_t>(level));
        for (int t = 0; t < 50; ++t) {
            const Element x = random_element(rng, level);
            CHECK(conj(conj(x)) == x);
            // conj(x) = 2<x,e0> e0 - x
            const Element e0 = Element::one(level);
            CHECK(conj(x) == Rational(2) * inner(x, e0) * e0 - x);
            // anti-automorphism
            const Element y = random_element(rng, level);
            CHECK(conj(mul(x, y)) == mul(conj(y), conj(x)));
        }
    }
}

TEST_CASE("norm and inner") {
    Element ones(8, {1, 1, 1, 1, 1, 1, 1, 1});
    CHECK(norm(ones) == Rational(8));
    CHECK(norm(Element::zero(8)) == Rational(0));

    for (int level : kLevels) {
        CounterRng rng(37, static_cast<uint64_t>(level));
        for (int t = 0; t < 50; ++t) {
            const Element x = random_element(rng, level);
            const Element y = random_element(rng, level);
            CHECK(norm(x) == inner(x, x));
            // polarization, against by-hand norms
            CHECK(Rational(2) * inner(x, y) == norm_by_hand(x + y) - norm_by_hand(x) - norm_by_hand(y));
            CHECK((norm(x) == Rational(0)) == x.is_zero());
        }
    }
}

TEST_CASE("basic identity <conj(a)(ab), c> = N(a)<b,c>") {
    CounterRng rng(41, 0);
    for (int t = 0; t < 100; ++t) {
        const Element a = random_element(rng, 8);
        const Element b = random_element(rng, 8);
        const Element c = random_element(rng, 8);
        CHECK(inner(mul(conj(a), mul(a, b)), c) == norm(a) * inner(b, c));
    }
}

TEST_CASE("commutator") {
    CHECK(commutator(unit4(1), unit4(2)) == Rational(2) * unit4(3));

    CounterRng rng(43, 0);
    for (int t = 0; t < 50; ++t) {
        const Element x = random_element(rng, 8);
        const Element y = random_element(rng, 8);
        CHECK(commutator(x, x).is_zero());
        // image lies in the imaginary part
        CHECK(commutator(x, y)[0] == Rational(0));
        CHECK(commutator(x, y) == -commutator(y, x));
    }
}

TEST_CASE("associator vanishes through level 4 and alternates at level 8") {
    for (int level : {1, 2, 4}) {
        CounterRng rng(47, static_cast<uint64_t>(level));
        for (int t = 0; t < 30; ++t) {
            const Element x = random_element(rng, level);
            const Element y = random_element(rng, level);
            const Element z = random_element(rng, level);
            CHECK(associator(x, y, z).is_zero());
        }
    }

    // hand expansion: e1(e2 e4) = e1 e6 = -e7 and (e1 e2) e4 = e3 e4 = e7
    const Element e1 = Element::unit(8, 1), e2 = Element::unit(8, 2), e4 = Element::unit(8, 4);
    CHECK(associator(e1, e2, e4) == Rational(-2) * Element::unit(8, 7));

    CounterRng rng(53, 0);
    for (int t = 0; t < 50; ++t) {
        const Element x = random_element(rng, 8);
        const Element y = random_element(rng, 8);
        const Element z = random_element(rng, 8);
        CHECK(associator(x, x, y).is_zero());
        CHECK(associator(x, y, x).is_zero());
        CHECK(associator(y, x, x).is_zero());
        CHECK(associator(x, y, z) == -associator(y, x, z));
        CHECK(associator(x, y, z) == -associator(x, z, y));
    }
}

TEST_CASE("alternative and flexible laws") {
    for (int level : kLevels) {
        CounterRng rng(59, static_cast<uint64_t>(level));
        for (int t = 0; t < 50; ++t) {
            const Element x = random_element(rng, level);
            const Element y = random_element(rng, level);
            CHECK(mul(x, mul(x, y)) == mul(mul(x, x), y));
            CHECK(mul(mul(y, x), x) == mul(y, mul(x, x)));
            CHECK(mul(x, mul(y, x)) == mul(mul(x, y), x));
        }
    }
}

TEST_CASE("commuting pairs associate in all argument orders") {
    CounterRng rng(61, 0);
    for (int t = 0; t < 30; ++t) {
        const Element x = random_element(rng, 8);
        // y in the subalgebra generated by x commutes with it
        const Element y = random_rational(rng, 5) * Element::one(8) + random_rational(rng, 5) * x;
        REQUIRE(commutator(x, y).is_zero());
        const Element z = random_element(rng, 8);
        CHECK(associator(x, y, z).is_zero());
        CHECK(associator(x, z, y).is_zero());
        CHECK(associator(y, x, z).is_zero());
        CHECK(associator(y, z, x).is_zero());
        CHECK(associator(z, x, y).is_zero());
        CHECK(associator(z, y, x).is_zero());
    }
}

TEST_CASE("trace") {
    CounterRng rng(67, 0);
    for (int t = 0; t < 20; ++t) {
        const Element x = random_element(rng, 8);
        const Element e0 = Element::one(8);
        CHECK(trace(x) == x + conj(x));
        CHECK(trace(x) == Rational(2) * inner(x, e0) * e0);
    }
}

TEST_CASE("embed is an algebra homomorphism onto its image") {
    for (int level : {1, 2, 4}) {
        CounterRng rng(71, static_cast<uint64_t>(level));
        for (int t = 0; t < 30; ++t) {
            const Element x = random_element(rng, level);
            const Element y = random_element(rng, level);
            CHECK(mul(embed(x, 8), embed(y, 8)) == embed(mul(x, y), 8));
            CHECK(norm(embed(x, 8)) == norm(x));
        }
    }
    CHECK(embed(Element::one(2), 2) == Element::one(2));
    CHECK_THROWS_AS(embed(Element::one(8), 4), std::invalid_argument);
    CHECK_THROWS_AS(embed(Element::one(2), 3), std::invalid_argument);
}

TEST_CASE("level mismatches and bad levels are usage errors") {
    CHECK_THROWS_AS(mul(Element::one(2), Element::one(4)), std::invalid_argument);
    CHECK_THROWS_AS(inner(Element::one(2), Element::one(8)), std::invalid_argument);
    CHECK_THROWS_AS(commutator(Element::one(4), Element::one(8)), std::invalid_argument);
    CHECK_THROWS_AS(Element(3), std::invalid_argument);
    CHECK_THROWS_AS(Element(8, {1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Element::unit(4, 4), std::invalid_argument);
}

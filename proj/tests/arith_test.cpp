#include <gtest/gtest.h>

#include "ginmap/tower.hpp"
#include "test_support.hpp"

using namespace ginmap;

TEST(Rational, CanonicalForm) {
    Rational q = rational(2, 4);
    EXPECT_EQ(q.get_num(), 1);
    EXPECT_EQ(q.get_den(), 2);
    q = rational(-3, -6);
    EXPECT_EQ(q.get_num(), 1);
    EXPECT_EQ(q.get_den(), 2);
    q = rational(5, -10);
    EXPECT_EQ(q.get_num(), -1);
    EXPECT_EQ(q.get_den(), 2);
    q = rational(0, 7);
    EXPECT_EQ(q.get_num(), 0);
    EXPECT_EQ(q.get_den(), 1);
    EXPECT_THROW(rational(1, 0), ZeroDivisionError);
}

TEST(Tower, DefiningRelations) {
    const TowerElement i = TowerElement::i();
    const TowerElement t = TowerElement::root4_2();
    const TowerElement s = TowerElement::sqrt3();
    EXPECT_EQ(i * i, TowerElement(-1));
    EXPECT_EQ(t * t * t * t, TowerElement(2));
    EXPECT_EQ(s * s, TowerElement(3));
    EXPECT_EQ(t * t, TowerElement::sqrt2());
    // sqrt(2)*sqrt(3) is the basis element t^2 s.
    EXPECT_EQ(TowerElement::sqrt2() * s, TowerElement::basis_element(0, 2, 1));
}

TEST(Tower, InverseClosedForms) {
    const TowerElement i = TowerElement::i();
    // (1 + i)^-1 = 1/2 - i/2
    const TowerElement x = TowerElement(1) + i;
    const TowerElement expected =
        TowerElement(rational(1, 2)) - TowerElement(rational(1, 2)) * i;
    EXPECT_EQ(x.inv(), expected);
    // (sqrt 2)^-1 = sqrt(2)/2
    EXPECT_EQ(TowerElement::sqrt2().inv(),
              TowerElement(rational(1, 2)) * TowerElement::sqrt2());
    EXPECT_THROW(TowerElement(0).inv(), ZeroDivisionError);
}

TEST(Tower, InverseMultiplyBackOracle) {
    test::Prng rng(20240901);
    for (int k = 0; k < 1000; ++k) {
        const TowerElement x = rng.nonzero_tower_element();
        EXPECT_EQ(x * x.inv(), TowerElement(1));
    }
}

TEST(Tower, Conjugation) {
    const TowerElement i = TowerElement::i();
    const TowerElement t = TowerElement::root4_2();
    EXPECT_EQ(i.conj(), -i);
    EXPECT_EQ(t.conj(), t);
    EXPECT_EQ(TowerElement::sqrt3().conj(), TowerElement::sqrt3());
    // conj(3/5 + 2 i t) = 3/5 - 2 i t
    const TowerElement x = TowerElement(rational(3, 5)) + TowerElement(2) * i * t;
    const TowerElement y = TowerElement(rational(3, 5)) - TowerElement(2) * i * t;
    EXPECT_EQ(x.conj(), y);
    test::Prng rng(7);
    for (int k = 0; k < 200; ++k) {
        const TowerElement a = rng.tower_element();
        const TowerElement b = rng.tower_element();
        EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
        EXPECT_EQ(a.conj().conj(), a);
    }
}

TEST(Tower, FieldAxiomsOnSamples) {
    test::Prng rng(99);
    for (int k = 0; k < 100; ++k) {
        const TowerElement a = rng.tower_element();
        const TowerElement b = rng.tower_element();
        const TowerElement c = rng.tower_element();
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a + (-a), TowerElement(0));
    }
}

TEST(Tower, RationalEmbeddingIsRingHom) {
    test::Prng rng(31);
    for (int k = 0; k < 100; ++k) {
        const Rational p = rational(rng.integer_in(-50, 50), rng.integer_in(1, 20));
        const Rational q = rational(rng.integer_in(-50, 50), rng.integer_in(1, 20));
        EXPECT_EQ(TowerElement(p) + TowerElement(q), TowerElement(Rational(p + q)));
        EXPECT_EQ(TowerElement(p) * TowerElement(q), TowerElement(Rational(p * q)));
    }
}

TEST(Tower, ExactZeroTest) {
    const TowerElement t = TowerElement::root4_2();
    TowerElement x = t * t * t * t - TowerElement(2);
    EXPECT_TRUE(x.is_zero());
    x = TowerElement(rational(1, 1000000)) * t;
    EXPECT_FALSE(x.is_zero());
}

TEST(Tower, SqrtInTower) {
    EXPECT_EQ(*sqrt_in_tower(rational(4, 1)), TowerElement(2));
    EXPECT_EQ(*sqrt_in_tower(rational(2, 1)), TowerElement::sqrt2());
    EXPECT_EQ(*sqrt_in_tower(rational(3, 4)),
              TowerElement(rational(1, 2)) * TowerElement::sqrt3());
    EXPECT_EQ(*sqrt_in_tower(rational(24, 25)),
              TowerElement(rational(2, 5)) * TowerElement::sqrt2() * TowerElement::sqrt3());
    EXPECT_EQ(*sqrt_in_tower(rational(-1, 1)), TowerElement::i());
    EXPECT_FALSE(sqrt_in_tower(rational(21, 25)).has_value());
    // Every returned value squares back.
    for (long n : {1L, 2L, 3L, 6L, 8L, 12L, 27L, 50L}) {
        const auto root = sqrt_in_tower(rational(n, 1));
        ASSERT_TRUE(root.has_value());
        EXPECT_EQ(*root * *root, TowerElement(rational(n, 1)));
    }
}

TEST(Tower, ToStringRoundTripForms) {
    EXPECT_EQ(TowerElement(0).to_string(), "0");
    EXPECT_EQ(TowerElement(rational(-3, 5)).to_string(), "-3/5");
    const TowerElement x = TowerElement(1) + TowerElement::i();
    EXPECT_EQ(x.to_string(), "1 + i");
    const TowerElement y =
        TowerElement(rational(1, 2)) * TowerElement::sqrt2() - TowerElement::i();
    EXPECT_EQ(y.to_string(), "1/2*sqrt(2) - i");
}

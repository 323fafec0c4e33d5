#include <gtest/gtest.h>

#include <vector>

#include "ginmap/gin.hpp"
#include "test_support.hpp"

using namespace ginmap;

namespace {

const std::vector<std::string> kZ{"Z0", "Z1", "Z2"};
const std::vector<std::string> kz{"z1", "z2"};

MultiIndex mi(std::vector<int> e) { return MultiIndex(std::move(e)); }

Polynomial zmono(std::vector<int> e, TowerElement c = TowerElement(1)) {
    return Polynomial::monomial(kZ, mi(std::move(e)), std::move(c));
}

Polynomial zpoly(std::vector<std::pair<std::vector<int>, TowerElement>> terms,
                 const std::vector<std::string>& vars = kz) {
    Polynomial p(vars);
    for (auto& [e, c] : terms) p.add_term(mi(e), c);
    return p;
}

MonomialIdeal ideal_of(const std::vector<std::vector<int>>& gens) {
    std::vector<MultiIndex> ms;
    for (const auto& e : gens) ms.push_back(mi(e));
    return MonomialIdeal(kZ, ms);
}

MonomialSubspace space_of(const std::vector<std::vector<int>>& monos,
                          const std::vector<std::string>& vars = kz) {
    std::vector<MultiIndex> ms;
    for (const auto& e : monos) ms.push_back(mi(e));
    return MonomialSubspace(vars, ms);
}

}  // namespace

TEST(RandomChange, DeterministicAndInvertible) {
    GinConfig cfg;
    cfg.seed = 42;
    const auto a = random_linear_change(3, cfg, 0);
    const auto b = random_linear_change(3, cfg, 0);
    EXPECT_EQ(a, b);
    const auto c = random_linear_change(3, cfg, 1);
    EXPECT_NE(a, c);
    for (std::uint64_t idx = 0; idx < 100; ++idx) {
        const auto m = random_linear_change(3, cfg, idx);
        EXPECT_NE(determinant(m), TowerElement(0));
    }
}

TEST(RandomChange, DistinctAcrossSampleIndices) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        GinConfig cfg;
        cfg.seed = seed;
        EXPECT_NE(random_linear_change(3, cfg, 0), random_linear_change(3, cfg, 1));
    }
}

TEST(RandomChange, ConfigValidation) {
    GinConfig cfg;
    cfg.coeff_bound = 1;
    EXPECT_THROW(cfg.validate(), DimensionError);
    cfg = GinConfig{};
    cfg.verify_samples = 1;
    EXPECT_THROW(cfg.validate(), DimensionError);
    cfg = GinConfig{};
    cfg.max_retries = 0;
    EXPECT_THROW(cfg.validate(), DimensionError);
}

TEST(RandomChange, AffineTranslationNonzero) {
    GinConfig cfg;
    for (std::uint64_t idx = 0; idx < 50; ++idx) {
        const auto t = random_affine_change(2, cfg, idx);
        bool nonzero = false;
        for (const auto& v : t.translation) nonzero = nonzero || v != TowerElement(0);
        EXPECT_TRUE(nonzero);
        EXPECT_NE(determinant(t.linear), TowerElement(0));
    }
}

TEST(GinIdeal, OrderSensitivityExample) {
    const GinConfig cfg;
    const Ideal ideal({zmono({2, 0, 0}), zmono({0, 1, 1})});
    EXPECT_EQ(gin_ideal(ideal, MonomialOrder::GrevLex, cfg),
              ideal_of({{2, 0, 0}, {1, 1, 0}, {0, 3, 0}}));
    EXPECT_EQ(gin_ideal(ideal, MonomialOrder::GrLex, cfg),
              ideal_of({{2, 0, 0}, {1, 1, 0}, {1, 0, 2}, {0, 4, 0}}));

    const Ideal squares({zmono({2, 0, 0}), zmono({0, 2, 0})});
    const MonomialIdeal expected = ideal_of({{2, 0, 0}, {1, 1, 0}, {0, 3, 0}});
    EXPECT_EQ(gin_ideal(squares, MonomialOrder::GrevLex, cfg), expected);
    EXPECT_EQ(gin_ideal(squares, MonomialOrder::GrLex, cfg), expected);
}

TEST(GinIdeal, SeedStability) {
    const Ideal ideal({zmono({2, 0, 0}), zmono({0, 1, 1})});
    GinConfig cfg;
    const MonomialIdeal base = gin_ideal(ideal, MonomialOrder::GrevLex, cfg);
    for (std::uint64_t seed : {1ULL, 7ULL, 1234567ULL, 20240901ULL}) {
        cfg.seed = seed;
        EXPECT_EQ(gin_ideal(ideal, MonomialOrder::GrevLex, cfg), base);
    }
}

TEST(GinIdeal, RejectsGreenOrders) {
    const Ideal ideal({zmono({2, 0, 0})});
    EXPECT_THROW(gin_ideal(ideal, MonomialOrder::GreenGrLex, GinConfig{}),
                 std::invalid_argument);
}

TEST(InitialSubspace, Examples) {
    // {1, z2} is already a monomial subspace.
    const std::vector<Polynomial> x{zpoly({{{0, 0}, TowerElement(1)}}),
                                    zpoly({{{0, 1}, TowerElement(1)}})};
    EXPECT_EQ(initial_subspace(x, MonomialOrder::GreenGrLex), space_of({{0, 0}, {0, 1}}));

    // {z1 + z2, z1 - z2} row-reduces to pivots z1, z2.
    const std::vector<Polynomial> y{
        zpoly({{{1, 0}, TowerElement(1)}, {{0, 1}, TowerElement(1)}}),
        zpoly({{{1, 0}, TowerElement(1)}, {{0, 1}, TowerElement(-1)}})};
    EXPECT_EQ(initial_subspace(y, MonomialOrder::GreenGrLex), space_of({{1, 0}, {0, 1}}));

    EXPECT_TRUE(initial_subspace({}, MonomialOrder::GreenGrLex).empty());
    EXPECT_TRUE(initial_subspace({Polynomial::zero(kz)}, MonomialOrder::GreenGrLex).empty());
}

TEST(InitialSubspace, PivotsAreExactlyTheInitialMonomialsOfTheSpan) {
    // Sampling oracle: the initial monomial of any combination of the span
    // lies in the computed set, and the set has the span's dimension.
    test::Prng rng(616);
    for (int round = 0; round < 20; ++round) {
        std::vector<Polynomial> x;
        const int members = 2 + static_cast<int>(rng.integer_in(0, 2));
        for (int k = 0; k < members; ++k) {
            Polynomial p(kz);
            for (int t = 0; t < 4; ++t) {
                std::vector<int> e{static_cast<int>(rng.integer_in(0, 2)),
                                   static_cast<int>(rng.integer_in(0, 2))};
                p.add_term(mi(e), TowerElement(static_cast<int>(rng.integer_in(-4, 4))));
            }
            if (!p.is_zero()) x.push_back(p);
        }
        if (x.empty()) continue;
        for (const MonomialOrder ord : {MonomialOrder::GreenGrLex, MonomialOrder::GrevLex}) {
            const MonomialSubspace in = initial_subspace(x, ord);
            EXPECT_EQ(in.dimension(), initial_subspace(x, MonomialOrder::GrLex).dimension());
            for (int trial = 0; trial < 25; ++trial) {
                Polynomial combo = Polynomial::zero(kz);
                for (const Polynomial& p : x)
                    combo += p * TowerElement(static_cast<int>(rng.integer_in(-5, 5)));
                if (combo.is_zero()) continue;
                EXPECT_TRUE(in.contains(combo.leading_monomial(ord)));
            }
        }
    }
}

TEST(GinSubspace, ToyExampleFromAffineSpans) {
    // gin(span{1, z2}) = span{1, z1}.
    const std::vector<Polynomial> x{zpoly({{{0, 0}, TowerElement(1)}}),
                                    zpoly({{{0, 1}, TowerElement(1)}})};
    EXPECT_EQ(gin_subspace(x, MonomialOrder::GreenGrLex, GinConfig{}),
              space_of({{0, 0}, {1, 0}}));
}

TEST(GinSubspace, ConstantsAreFixed) {
    const std::vector<Polynomial> x{zpoly({{{0, 0}, TowerElement(2)}})};
    EXPECT_EQ(gin_subspace(x, MonomialOrder::GreenGrLex, GinConfig{}), space_of({{0, 0}}));
}

TEST(GinSubspace, FaranCubicAffineSpan) {
    // afspan of (z1^3, sqrt(3) z1 z2, z2^3): gin = {1, z1, z2, z1^2}.
    const std::vector<Polynomial> x{
        zpoly({{{0, 0}, TowerElement(1)}}),
        zpoly({{{3, 0}, TowerElement(1)}}),
        zpoly({{{1, 1}, TowerElement::sqrt3()}}),
        zpoly({{{0, 3}, TowerElement(1)}})};
    const MonomialSubspace expected = space_of({{0, 0}, {1, 0}, {0, 1}, {2, 0}});
    const MonomialSubspace direct = gin_subspace(x, MonomialOrder::GreenGrLex, GinConfig{});
    EXPECT_EQ(direct, expected);
    EXPECT_TRUE(affine_borel_fixed(direct));
    // The homogenize-then-truncate route agrees.
    EXPECT_EQ(afspan_gin_homogenized(x, GinConfig{}), expected);
}

TEST(GinSubspace, RejectsClassicalOrders) {
    const std::vector<Polynomial> x{zpoly({{{0, 0}, TowerElement(1)}})};
    EXPECT_THROW(gin_subspace(x, MonomialOrder::GrevLex, GinConfig{}), std::invalid_argument);
}

TEST(AfspanHomogenized, LinearEmbeddingAndConstantMap) {
    // Cleared affine span of (z1, z2, 0) with denominator 1.
    const std::vector<Polynomial> lin{
        zpoly({{{0, 0}, TowerElement(1)}}),
        zpoly({{{1, 0}, TowerElement(1)}}),
        zpoly({{{0, 1}, TowerElement(1)}}),
        Polynomial::zero(kz)};
    const MonomialSubspace expected = space_of({{0, 0}, {1, 0}, {0, 1}});
    EXPECT_EQ(afspan_gin_homogenized(lin, GinConfig{}), expected);
    EXPECT_EQ(gin_subspace(lin, MonomialOrder::GreenGrLex, GinConfig{}), expected);

    // A constant map has affine span {1}.
    const std::vector<Polynomial> constant{
        zpoly({{{0, 0}, TowerElement(1)}}),
        zpoly({{{0, 0}, TowerElement(rational(2, 3))}})};
    EXPECT_EQ(afspan_gin_homogenized(constant, GinConfig{}), space_of({{0, 0}}));
}

TEST(GinSubspace, StabilityAcrossSeeds) {
    const std::vector<Polynomial> x{
        zpoly({{{0, 0}, TowerElement(1)}}),
        zpoly({{{3, 0}, TowerElement(1)}}),
        zpoly({{{1, 1}, TowerElement::sqrt3()}}),
        zpoly({{{0, 3}, TowerElement(1)}})};
    GinConfig cfg;
    const MonomialSubspace base = gin_subspace(x, MonomialOrder::GreenGrLex, cfg);
    for (std::uint64_t seed : {3ULL, 99ULL, 31415ULL, 271828ULL}) {
        cfg.seed = seed;
        EXPECT_EQ(gin_subspace(x, MonomialOrder::GreenGrLex, cfg), base);
    }
}

TEST(GinSubspace, InvariantUnderAffineReparametrization) {
    // gin(X o f) = gin(X) for invertible affine f.
    test::Prng rng(404);
    const std::vector<Polynomial> x{
        zpoly({{{0, 0}, TowerElement(1)}}),
        zpoly({{{2, 0}, TowerElement(1)}, {{0, 1}, TowerElement(1)}}),
        zpoly({{{1, 1}, TowerElement(1)}})};
    const MonomialSubspace base = gin_subspace(x, MonomialOrder::GreenGrLex, GinConfig{});
    for (int trial = 0; trial < 5; ++trial) {
        Matrix<TowerElement> m(2, 2);
        Matrix<Rational> mr(2, 2);
        do {
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) {
                    const long v = rng.integer_in(-6, 6);
                    m(i, j) = TowerElement(static_cast<int>(v));
                    mr(i, j) = v;
                }
        } while (determinant(mr) == 0);
        const std::vector<TowerElement> c{TowerElement(static_cast<int>(rng.integer_in(-6, 6))),
                                          TowerElement(static_cast<int>(rng.integer_in(-6, 6)))};
        std::vector<Polynomial> moved;
        for (const Polynomial& p : x) moved.push_back(p.substitute_affine(m, c));
        EXPECT_EQ(gin_subspace(moved, MonomialOrder::GreenGrLex, GinConfig{}), base);
    }
}

namespace {

void degree_monomials(std::size_t nvars, int degree, std::size_t pos, std::vector<int>& cur,
                      std::vector<MultiIndex>& out) {
    if (pos + 1 == nvars) {
        cur[pos] = degree;
        out.push_back(mi(cur));
        return;
    }
    for (int e = 0; e <= degree; ++e) {
        cur[pos] = e;
        degree_monomials(nvars, degree - e, pos + 1, cur, out);
    }
}

std::vector<MultiIndex> monomials_of_degree(std::size_t nvars, int degree) {
    std::vector<MultiIndex> out;
    std::vector<int> cur(nvars, 0);
    degree_monomials(nvars, degree, 0, cur, out);
    return out;
}

// dim of the degree-d graded piece of the ideal generated by `gens`,
// computed by row-reducing the span of all monomial multiples.  Independent
// of the Groebner machinery.
std::size_t graded_piece_dimension(const std::vector<Polynomial>& gens, int d) {
    std::vector<Polynomial> span;
    const std::size_t n = gens.front().variables().size();
    for (const Polynomial& g : gens) {
        const int k = d - g.total_degree();
        if (k < 0) continue;
        for (const MultiIndex& m : monomials_of_degree(n, k))
            span.push_back(g.times_term(m, TowerElement(1)));
    }
    return initial_subspace(span, MonomialOrder::GrevLex).dimension();
}

std::size_t graded_piece_dimension(const MonomialIdeal& ideal, int d) {
    std::size_t count = 0;
    for (const MultiIndex& m : monomials_of_degree(ideal.variables().size(), d))
        if (ideal.contains(m)) ++count;
    return count;
}

}  // namespace

TEST(GinIdeal, PreservesHilbertFunction) {
    // A generic coordinate change is a graded isomorphism, so the gin must
    // have the same dimension as the ideal in every degree.  The left side is
    // a plain rank computation, not a Groebner calculation.
    const std::vector<std::vector<Polynomial>> corpus{
        {zmono({2, 0, 0}), zmono({0, 1, 1})},
        {zmono({2, 0, 0}), zmono({0, 2, 0})},
        // second and third ball-to-ball quadratic maps
        {zmono({2, 0, 0}), zmono({1, 1, 0}), zmono({0, 1, 1}), zmono({0, 0, 2})},
        {zmono({2, 0, 0}), zmono({0, 2, 0}), zmono({0, 1, 1}, TowerElement::sqrt2()),
         zmono({0, 0, 2})},
        // cubic map with a full-degree middle component
        {zmono({3, 0, 0}), zmono({0, 3, 0}), zmono({1, 1, 1}, TowerElement::sqrt3()),
         zmono({0, 0, 3})},
    };
    for (const auto& gens : corpus) {
        int top = 0;
        for (const Polynomial& g : gens) top = std::max(top, g.total_degree());
        for (const MonomialOrder ord : {MonomialOrder::GrevLex, MonomialOrder::GrLex}) {
            const MonomialIdeal gin = gin_ideal(Ideal(gens), ord, GinConfig{});
            for (int d = 0; d <= top + 3; ++d)
                EXPECT_EQ(graded_piece_dimension(gin, d), graded_piece_dimension(gens, d))
                    << "degree " << d;
        }
    }
}

TEST(GinSubspace, InvariantUnderMultiplication) {
    // gin(phi X) = gin(X) for polynomial phi with phi(0) != 0.
    test::Prng rng(505);
    const std::vector<Polynomial> x{
        zpoly({{{0, 0}, TowerElement(1)}}),
        zpoly({{{1, 0}, TowerElement(1)}, {{0, 2}, TowerElement(1)}}),
        zpoly({{{0, 1}, TowerElement(1)}})};
    const MonomialSubspace base = gin_subspace(x, MonomialOrder::GreenGrLex, GinConfig{});
    for (int trial = 0; trial < 5; ++trial) {
        Polynomial phi(kz);
        phi.add_term(mi({0, 0}), TowerElement(static_cast<int>(rng.integer_in(1, 9))));
        phi.add_term(mi({1, 0}), TowerElement(static_cast<int>(rng.integer_in(-9, 9))));
        phi.add_term(mi({0, 1}), TowerElement(static_cast<int>(rng.integer_in(-9, 9))));
        phi.add_term(mi({1, 1}), TowerElement(static_cast<int>(rng.integer_in(-9, 9))));
        std::vector<Polynomial> scaled;
        for (const Polynomial& p : x) scaled.push_back(p * phi);
        EXPECT_EQ(gin_subspace(scaled, MonomialOrder::GreenGrLex, GinConfig{}), base);
    }
}

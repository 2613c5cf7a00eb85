#include "quadstar/classifier.hpp"
#include "quadstar/errors.hpp"
#include "quadstar/graphs.hpp"
#include "quadstar/real_roots.hpp"
#include "quadstar/search.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <random>

using namespace quadstar;

namespace {

const IntPoly X = IntPoly::x();

bool only_small_factors(const QuadraticCertificate& c) {
    for (const auto& f : c.factors)
        if (f.poly.degree() < 1 || f.poly.degree() > 2) return false;
    return true;
}

}  // namespace

TEST(Decompose, GoldenPair) {
    const auto c = decompose_deg_le2(IntPoly({1, 0, -3, 0, 1}));
    EXPECT_TRUE(c.accepting());
    ASSERT_EQ(c.factors.size(), 2u);
    EXPECT_EQ(c.factors[0], (Factor{IntPoly({-1, -1, 1}), 1}));
    EXPECT_EQ(c.factors[1], (Factor{IntPoly({-1, 1, 1}), 1}));
}

TEST(Decompose, PathOnSixRejectsWithCubicResidual) {
    const IntPoly f = path_charpoly(6);
    const auto c = decompose_deg_le2(f);
    EXPECT_FALSE(c.accepting());
    EXPECT_EQ(c.residual, f);
    EXPECT_EQ(c.product(), f);
}

TEST(Decompose, StarOnFour) {
    const auto c = decompose_deg_le2(IntPoly({0, 0, -3, 0, 1}));
    EXPECT_TRUE(c.accepting());
    ASSERT_EQ(c.factors.size(), 2u);
    EXPECT_EQ(c.factors[0], (Factor{X, 2}));
    EXPECT_EQ(c.factors[1], (Factor{IntPoly({-3, 0, 1}), 1}));
}

TEST(Decompose, ReducibleQuadraticsSplit) {
    // x^2 - 4 must come back as two linear factors.
    const auto c = decompose_deg_le2(IntPoly({-4, 0, 1}) * IntPoly({-2, 0, 1}));
    EXPECT_TRUE(c.accepting());
    ASSERT_EQ(c.factors.size(), 3u);
    EXPECT_EQ(c.factors[0].poly, IntPoly({-2, 1}));
    EXPECT_EQ(c.factors[1].poly, IntPoly({2, 1}));
    EXPECT_EQ(c.factors[2].poly, IntPoly({-2, 0, 1}));
}

TEST(Decompose, PartialSplitKeepsTheRest) {
    // (x^2 - 5)(x^3 - 3x - 1): the cubic is irreducible with three real roots.
    const IntPoly cubic({-1, -3, 0, 1});
    const auto c = decompose_deg_le2(IntPoly({-5, 0, 1}) * cubic);
    EXPECT_FALSE(c.accepting());
    EXPECT_EQ(c.residual, cubic);
    ASSERT_EQ(c.factors.size(), 1u);
    EXPECT_EQ(c.factors[0].poly, IntPoly({-5, 0, 1}));
}

TEST(Decompose, NonMonicContentStaysInResidual) {
    const auto c = decompose_deg_le2(IntPoly({-6, 0, 3}));
    EXPECT_FALSE(c.accepting());
    EXPECT_EQ(c.residual, IntPoly{3});
    EXPECT_EQ(c.product(), IntPoly({-6, 0, 3}));
}

TEST(Decompose, NonRealRootsAreAnError) {
    EXPECT_THROW(decompose_deg_le2(IntPoly({1, 0, 1})), NonRealRoots);
}

TEST(Decompose, LowPrecisionStillCertifies) {
    ClassifierOptions tight;
    tight.initial_bits = 1;
    const IntPoly f = starlike_charpoly(StarlikeSpec({0, 0, 1, 0, 3}));
    const auto c = decompose_deg_le2(f, tight);
    EXPECT_TRUE(c.accepting());
    EXPECT_EQ(c.product(), f);
}

TEST(Decompose, PrecisionBudgetIsFinite) {
    // Roots 1000 and 1000.0001 sum to ~2000.0001; with no doublings and
    // one bit the rounding cannot be certified.
    ClassifierOptions none;
    none.initial_bits = 1;
    none.max_doublings = 0;
    const IntPoly p = IntPoly({-1000, 1}) * IntPoly({-10000001, 10000}) * IntPoly({-2, 0, 1});
    EXPECT_THROW(decompose_deg_le2(p, none), PrecisionExhausted);
}

TEST(Options, Environment) {
    ::setenv("QUADSTAR_PRECISION_BITS", "96", 1);
    EXPECT_EQ(ClassifierOptions::from_environment().initial_bits, 96u);
    ::setenv("QUADSTAR_PRECISION_BITS", "abc", 1);
    EXPECT_THROW(ClassifierOptions::from_environment(), InvalidParams);
    ::unsetenv("QUADSTAR_PRECISION_BITS");
    EXPECT_EQ(ClassifierOptions::from_environment().initial_bits, 64u);
}

TEST(Classify, FormOneStar) {
    const auto c = classify_poly(starlike_charpoly(StarlikeSpec({5})));
    EXPECT_EQ(c.kind, SpectralKind::formI);
    EXPECT_EQ(*c.c, 5);
    EXPECT_EQ(to_string(c.kind), "proper_quadratic_formI");
}

TEST(Classify, IntegralStar) {
    const auto c = classify_poly(starlike_charpoly(StarlikeSpec({4})));
    EXPECT_EQ(c.kind, SpectralKind::integral);
    for (const auto& f : c.certificate.factors) EXPECT_EQ(f.poly.degree(), 1);
}

TEST(Classify, FormTwoWithNonSquarefreeDelta) {
    const auto c = classify_poly(starlike_charpoly(StarlikeSpec({1, 4})));
    EXPECT_EQ(c.kind, SpectralKind::formII);
    EXPECT_EQ(*c.a, 2);
    EXPECT_EQ(*c.b, -1);
    EXPECT_EQ(*c.delta(), 8);
    EXPECT_FALSE(*c.delta_squarefree());
}

TEST(Classify, BoundaryAndPathsAreOther) {
    EXPECT_EQ(classify_poly(IntPoly({0, 0, -3, 0, 1})).kind, SpectralKind::proper_quadratic_other);
    EXPECT_EQ(classify_poly(path_charpoly(4)).kind, SpectralKind::proper_quadratic_other);
    EXPECT_EQ(classify_poly(path_charpoly(5)).kind, SpectralKind::proper_quadratic_other);
    EXPECT_EQ(classify_poly(path_charpoly(7)).kind, SpectralKind::non_quadratic);
}

TEST(Classify, WithoutFormDropsShape) {
    const auto c = without_form(classify_poly(starlike_charpoly(StarlikeSpec({1, 4}))));
    EXPECT_EQ(c.kind, SpectralKind::proper_quadratic_other);
    EXPECT_FALSE(c.a);
    EXPECT_FALSE(c.delta());
}

TEST(PathCycle, Examples) {
    EXPECT_TRUE(classify_path_cycle(PathOrCycle::path, 5).quadratic);
    EXPECT_FALSE(classify_path_cycle(PathOrCycle::path, 7).quadratic);
    EXPECT_TRUE(classify_path_cycle(PathOrCycle::cycle, 12).quadratic);
    const auto v = classify_path_cycle(PathOrCycle::path, 6);
    EXPECT_EQ(v.phi_degree, 3u);
    EXPECT_FALSE(v.certificate);
}

TEST(PathCycle, AgreesWithDirectDecomposition) {
    for (std::size_t n = 1; n <= 30; ++n) {
        const auto v = classify_path_cycle(PathOrCycle::path, n);
        EXPECT_EQ(v.quadratic, decompose_deg_le2(path_charpoly(n)).accepting()) << "P_" << n;
    }
    for (std::size_t n = 3; n <= 30; ++n) {
        const auto v = classify_path_cycle(PathOrCycle::cycle, n);
        EXPECT_EQ(v.quadratic, decompose_deg_le2(cycle_charpoly(n)).accepting()) << "C_" << n;
    }
}

TEST(EigenExtremes, Examples) {
    const auto a = eigen_extremes(IntPoly({0, 0, -3, 0, 1}));
    EXPECT_NEAR(a[0], std::sqrt(3.0), 1e-9);
    EXPECT_NEAR(a[1], 0, 1e-9);
    EXPECT_NEAR(a[2], 0, 1e-9);
    const auto b = eigen_extremes(starlike_charpoly(StarlikeSpec({4})));
    EXPECT_NEAR(b[0], 2, 1e-9);
    EXPECT_NEAR(b[1], 0, 1e-9);
    const auto c = eigen_extremes(path_charpoly(3));
    EXPECT_NEAR(c[0], std::sqrt(2.0), 1e-9);
    EXPECT_NEAR(c[1], 0, 1e-9);
    EXPECT_NEAR(c[2], -std::sqrt(2.0), 1e-9);
    EXPECT_THROW(eigen_extremes(IntPoly({-1, 0, 1})), InvalidParams);
}

TEST(ClassifierProperty, CertificatesReassembleExactly) {
    for (const auto& s : enumerate_specs(16, 1)) {
        const IntPoly f = starlike_charpoly(s);
        const auto c = decompose_deg_le2(f);
        EXPECT_EQ(c.product(), f) << s.to_string();
        EXPECT_TRUE(only_small_factors(c));
        for (const auto& fac : c.factors) {
            if (fac.poly.degree() != 2) continue;
            const auto& k = fac.poly.coeffs();
            mpz_class d = k[1] * k[1] - 4 * k[0];
            EXPECT_FALSE(mpz_perfect_square_p(d.get_mpz_t())) << s.to_string();
        }
    }
}

TEST(ClassifierProperty, AcceptsProductsOfRandomQuadratics) {
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> s(-6, 6), p(-12, 3);
    for (int i = 0; i < 100; ++i) {
        IntPoly f{1};
        for (int k = 0; k < 4; ++k) {
            const long sv = s(rng), pv = p(rng);
            if (sv * sv - 4 * pv < 0) continue;
            f *= IntPoly({pv, -sv, 1L});
        }
        if (f.degree() < 1) continue;
        const auto c = decompose_deg_le2(f);
        EXPECT_TRUE(c.accepting()) << f.to_string();
        EXPECT_EQ(c.product(), f);
    }
}

TEST(ClassifierProperty, EigenvalueContainment) {
    // Roots other than lambda_1's conjugates come from the basis factors.
    const std::vector<IntPoly> basis = {X, IntPoly({-1, 0, 1}), IntPoly({-2, 0, 1}), IntPoly({-1, -1, 1}),
                                        IntPoly({-1, 1, 1}), IntPoly({-3, 0, 1}), IntPoly({-1, 1}),
                                        IntPoly({1, 1})};
    for (const auto& s : enumerate_specs(18)) {
        const auto c = classify_poly(starlike_charpoly(s));
        if (c.kind != SpectralKind::formI && c.kind != SpectralKind::formII) continue;
        for (const auto& f : c.certificate.factors) {
            bool top = false;
            if (c.kind == SpectralKind::formI) {
                const IntPoly g({-*c.c, 0, 1});
                top = f.poly == g || exact_div(g, f.poly).has_value();
            } else {
                top = f.poly == IntPoly({*c.b, -*c.a, 1}) || f.poly == IntPoly({*c.b, *c.a, 1});
            }
            const bool in_basis = std::find(basis.begin(), basis.end(), f.poly) != basis.end();
            EXPECT_TRUE(top || in_basis) << s.to_string() << ": " << f.poly.to_string();
        }
    }
}

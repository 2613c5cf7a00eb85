#include "quadstar/errors.hpp"
#include "quadstar/graphs.hpp"
#include "quadstar/real_roots.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace quadstar;

namespace {

std::vector<double> expanded(const std::vector<RealRoot>& roots) {
    std::vector<double> v;
    for (const auto& r : roots)
        for (unsigned m = 0; m < r.multiplicity; ++m) v.push_back(r.value());
    return v;
}

}  // namespace

TEST(RealRoots, SqrtThree) {
    const auto roots = real_roots(IntPoly({-3, 0, 1}), 1e-9);
    ASSERT_EQ(roots.size(), 2u);
    EXPECT_NEAR(roots[0].value(), -std::sqrt(3.0), 1e-9);
    EXPECT_NEAR(roots[1].value(), std::sqrt(3.0), 1e-9);
    for (const auto& r : roots) EXPECT_LE(r.error_bound(), 1e-9);
}

TEST(RealRoots, Monomial) {
    const auto roots = real_roots(IntPoly::x(), 1e-3);
    ASSERT_EQ(roots.size(), 1u);
    EXPECT_EQ(roots[0].value(), 0.0);
    EXPECT_EQ(roots[0].multiplicity, 1u);
}

TEST(RealRoots, PathOnThree) {
    const auto roots = real_roots(IntPoly({0, -2, 0, 1}), 1e-9);
    ASSERT_EQ(roots.size(), 3u);
    EXPECT_NEAR(roots[0].value(), -std::sqrt(2.0), 1e-9);
    EXPECT_NEAR(roots[1].value(), 0.0, 1e-9);
    EXPECT_NEAR(roots[2].value(), std::sqrt(2.0), 1e-9);
}

TEST(RealRoots, MultiplicitiesComeFromTheDecomposition) {
    // x^2 (x^2 - 3)
    const auto roots = real_roots(IntPoly({0, 0, -3, 0, 1}), 1e-9);
    ASSERT_EQ(roots.size(), 3u);
    EXPECT_EQ(roots[1].multiplicity, 2u);
    EXPECT_EQ(roots[0].multiplicity, 1u);
}

TEST(RealRoots, NonRealRootsAreReported) {
    EXPECT_THROW(real_roots(IntPoly({1, 0, 1}), 1e-6), NonRealRoots);
    EXPECT_THROW(real_roots(IntPoly({0, 1, 0, 1}), 1e-6), NonRealRoots);
}

TEST(RealRoots, EnclosuresAreDisjointAndExact) {
    // Close roots: (x - 1)(x - 1.001) scaled to integers: (x-1)(1000x-1001)
    const IntPoly p = IntPoly({-1, 1}) * IntPoly({-1001, 1000});
    const auto iv = isolate_real_roots(p, 30);
    ASSERT_EQ(iv.size(), 2u);
    const DyadicInterval a = iv[0].rescaled(std::max(iv[0].scale, iv[1].scale));
    const DyadicInterval b = iv[1].rescaled(std::max(iv[0].scale, iv[1].scale));
    EXPECT_LT(a.hi, b.lo);
    EXPECT_NEAR(iv[1].midpoint(), 1.001, 1e-8);
}

TEST(RealRoots, SturmCountsHalfOpenIntervals) {
    const SturmSequence s(IntPoly({0, -1, 0, 1}));  // roots -1, 0, 1
    EXPECT_EQ(s.count(-2, 2, 0), 3u);
    EXPECT_EQ(s.count(-1, 1, 0), 2u);  // (-1, 1] holds 0 and 1
    EXPECT_EQ(s.count(-1, 0, 1), 1u);  // (-1/2, 0]
}

TEST(RealRootsProperty, PathSpectraMatchCosineFormula) {
    for (std::size_t n = 1; n <= 30; ++n) {
        const auto got = expanded(real_roots(path_charpoly(n), 1e-10));
        ASSERT_EQ(got.size(), n);
        std::vector<double> want;
        for (std::size_t j = 1; j <= n; ++j)
            want.push_back(2 * std::cos(std::numbers::pi * double(j) / double(n + 1)));
        std::sort(want.begin(), want.end());
        for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(got[i], want[i], 1e-9) << "n=" << n;
    }
}

TEST(RealRootsProperty, CycleSpectraMatchCosineFormula) {
    for (std::size_t n = 3; n <= 24; ++n) {
        const auto got = expanded(real_roots(cycle_charpoly(n), 1e-10));
        ASSERT_EQ(got.size(), n);
        std::vector<double> want;
        for (std::size_t j = 0; j < n; ++j)
            want.push_back(2 * std::cos(2 * std::numbers::pi * double(j) / double(n)));
        std::sort(want.begin(), want.end());
        for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(got[i], want[i], 1e-9) << "n=" << n;
    }
}

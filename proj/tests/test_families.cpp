#include "quadstar/classifier.hpp"
#include "quadstar/errors.hpp"
#include "quadstar/families.hpp"
#include "quadstar/graphs.hpp"
#include "quadstar/search.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace quadstar;

namespace {

const IntPoly X = IntPoly::x();
const IntPoly Xm1({-1, 0, 1}), Xm2({-2, 0, 1}), Xm3({-3, 0, 1});
const IntPoly Gm({-1, -1, 1}), Gp({-1, 1, 1});

FactoredPoly canon(FactoredPoly f) {
    canonicalize(f);
    return f;
}

unsigned x_valuation(const IntPoly& p) {
    unsigned v = 0;
    while (p.coeff(v) == 0) ++v;
    return v;
}

StarlikeSpec random_spec(std::mt19937& rng, std::size_t max_vertices, unsigned min_degree) {
    std::uniform_int_distribution<int> len(1, 8), cnt(0, 4);
    for (;;) {
        std::vector<unsigned> legs(static_cast<std::size_t>(len(rng)));
        for (auto& c : legs) c = static_cast<unsigned>(cnt(rng));
        StarlikeSpec s(legs);
        if (s.center_degree() >= min_degree && s.vertex_count() <= max_vertices) return s;
    }
}

}  // namespace

TEST(Families, TagsAndShapes) {
    EXPECT_EQ(to_string(FamilyId::T_00100n5), "T_00100n5");
    EXPECT_EQ(parse_family_id("T_n1n2"), FamilyId::T_n1n2);
    EXPECT_THROW(parse_family_id("T_x"), InvalidParams);
    EXPECT_EQ(family_shape(FamilyId::T_1100n5), "(1,1,0,0,n5)");
    EXPECT_EQ(family_shape(FamilyId::T_n10n3), "(n1,0,n3)");
    EXPECT_TRUE(is_form_one(FamilyId::T_star));
    EXPECT_FALSE(is_form_one(FamilyId::T_00100n5));
    EXPECT_EQ(leg_parameters(FamilyId::T_n1n2), (std::vector<std::string>{"n1", "n2"}));
}

TEST(Instantiate, StarOnFiveIsIntegral) {
    const auto f = instantiate(FamilyId::T_star, {{"n1", 4}});
    EXPECT_TRUE(f.integral);
    EXPECT_EQ(f.predicted_charpoly(), pow(X, 3) * IntPoly({-4, 0, 1}));
    EXPECT_EQ(f.params.at("c"), 4);
}

TEST(Instantiate, FirstPellRow) {
    const auto f = instantiate(FamilyId::T_00100n5, {{"n5", 3}});
    EXPECT_EQ(f.params.at("a"), 1);
    EXPECT_EQ(f.params.at("b"), -3);
    const FactoredPoly want = canon({{X, 3}, {Xm1, 2}, {Gm, 1}, {Gp, 1}, {Xm3, 2},
                                     {IntPoly({-3, -1, 1}), 1}, {IntPoly({-3, 1, 1}), 1}});
    EXPECT_EQ(f.predicted, want);
    EXPECT_EQ(*f.delta, 13);
    EXPECT_TRUE(*f.delta_squarefree);
    EXPECT_FALSE(f.integral);
}

TEST(Instantiate, SmallestFormOneRow) {
    const auto f = instantiate(FamilyId::T_1100n5, {{"n5", 1}});
    EXPECT_EQ(f.predicted_charpoly(), X * Xm1 * Gm * Gp * IntPoly({-4, 0, 1}));
    EXPECT_EQ(f.spec, StarlikeSpec({1, 1, 0, 0, 1}));
}

TEST(Instantiate, AcceptsEitherLegsOrAB) {
    const auto by_legs = instantiate(FamilyId::T_n1n2, {{"n1", 1}, {"n2", 4}});
    const auto by_ab = instantiate(FamilyId::T_n1n2, {{"a", 2}, {"b", -1}});
    EXPECT_EQ(by_legs.spec, by_ab.spec);
    EXPECT_EQ(by_legs.params, by_ab.params);
    EXPECT_EQ(*by_ab.delta, 8);
    EXPECT_FALSE(*by_ab.delta_squarefree);
}

TEST(Instantiate, BothSignsOfBForTheTwoLegRow) {
    const auto plus = instantiate(FamilyId::T_200n4, {{"a", 3}, {"b", 1}});
    EXPECT_EQ(plus.params.at("n4"), 4);
    const auto minus = instantiate(FamilyId::T_200n4, {{"a", 3}, {"b", -1}});
    EXPECT_EQ(minus.params.at("n4"), 8);
    EXPECT_THROW(instantiate(FamilyId::T_200n4, {{"a", 3}, {"b", 2}}), InvalidParams);
}

TEST(Instantiate, Rejections) {
    EXPECT_THROW(instantiate(FamilyId::T_star, {{"n1", 3}}), InvalidParams);
    EXPECT_THROW(instantiate(FamilyId::T_0n2, {{"n2", 2}}), InvalidParams);
    EXPECT_THROW(instantiate(FamilyId::T_star, {{"n2", 5}}), InvalidParams);
    EXPECT_THROW(instantiate(FamilyId::T_star, {{"n1", 5}, {"c", 6}}), InvalidParams);
    EXPECT_THROW(instantiate(FamilyId::T_00100n5, {{"n5", 4}}), InvalidParams);
    EXPECT_THROW(instantiate(FamilyId::T_n1n2, {{"a", 0}, {"b", 1}}), InvalidParams);
    try {
        instantiate(FamilyId::T_star, {{"n1", 2}});
        FAIL();
    } catch (const InvalidParams& e) {
        EXPECT_NE(std::string(e.what()).find("n1 >= 4"), std::string::npos);
    }
}

TEST(Instantiate, SquareDeltaIsNotQuadratic) {
    // a = 4, b = 3 gives a^2 - 4b = 4: the quadratics split.
    EXPECT_THROW(instantiate(FamilyId::T_n10n3, {{"a", 4}, {"b", 3}}), NonQuadraticDelta);
    EXPECT_THROW(instantiate(FamilyId::T_n10n3, {{"a", 4}, {"b", 3}}), InvalidParams);
}

TEST(Match, Examples) {
    const auto star = match_family(StarlikeSpec({5}));
    ASSERT_TRUE(star);
    EXPECT_EQ(star->id, FamilyId::T_star);
    EXPECT_EQ(star->params.at("n1"), 5);

    const auto t14 = match_family(StarlikeSpec({1, 4}));
    ASSERT_TRUE(t14);
    EXPECT_EQ(t14->id, FamilyId::T_n1n2);
    EXPECT_EQ(t14->params.at("a"), 2);
    EXPECT_EQ(t14->params.at("b"), -1);
    EXPECT_EQ(*t14->delta, 8);

    EXPECT_FALSE(match_family(StarlikeSpec({0, 0, 2})));
    EXPECT_FALSE(match_family(StarlikeSpec({3})));
}

TEST(Enumerate, Examples) {
    const auto has = [](const std::vector<FamilyInstance>& v, FamilyId id, const StarlikeSpec& s) {
        return std::any_of(v.begin(), v.end(), [&](const FamilyInstance& f) { return f.id == id && f.spec == s; });
    };
    const auto five = enumerate_instances(5);
    EXPECT_TRUE(has(five, FamilyId::T_star, StarlikeSpec({4})));
    EXPECT_FALSE(has(five, FamilyId::T_star, StarlikeSpec({3})));
    EXPECT_TRUE(has(enumerate_instances(7), FamilyId::T_0n2, StarlikeSpec({0, 3})));
    EXPECT_TRUE(has(enumerate_instances(10), FamilyId::T_n1n2, StarlikeSpec({1, 4})));
}

TEST(Enumerate, SortedAndUnique) {
    const auto all = enumerate_instances(40);
    for (std::size_t i = 1; i < all.size(); ++i) {
        EXPECT_LE(all[i - 1].spec.vertex_count(), all[i].spec.vertex_count());
        EXPECT_FALSE(all[i - 1].spec == all[i].spec);
    }
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) EXPECT_FALSE(all[i].spec == all[j].spec);
}

TEST(Enumerate, EveryRowIsRepresented) {
    const auto all = enumerate_instances(60);
    for (FamilyId id : all_families)
        EXPECT_TRUE(std::any_of(all.begin(), all.end(), [&](const FamilyInstance& f) { return f.id == id; }))
            << to_string(id);
}

TEST(FamiliesProperty, ClosedFormMatchesRecurrenceUpToSixtyVertices) {
    const auto all = enumerate_instances(60);
    ASSERT_GT(all.size(), 100u);
    for (const auto& f : all)
        EXPECT_EQ(f.predicted_charpoly(), starlike_charpoly(f.spec)) << to_string(f.id) << " " << f.spec.to_string();
}

TEST(FamiliesProperty, InstancesClassifyAsTheirForm) {
    for (const auto& f : enumerate_instances(40)) {
        const auto c = classify_poly(starlike_charpoly(f.spec));
        const auto name = std::string(to_string(f.id)) + " " + f.spec.to_string();
        if (f.integral) {
            EXPECT_EQ(c.kind, SpectralKind::integral) << name;
        } else if (is_form_one(f.id)) {
            EXPECT_EQ(c.kind, SpectralKind::formI) << name;
            EXPECT_EQ(*c.c, f.params.at("c")) << name;
        } else {
            EXPECT_EQ(c.kind, SpectralKind::formII) << name;
            EXPECT_EQ(*c.a, f.params.at("a")) << name;
            EXPECT_EQ(*c.b, f.params.at("b")) << name;
        }
    }
}

TEST(CharacterEquation, Examples) {
    for (long c = 4; c <= 12; ++c) {
        const ZVector z{{0, 1, 1, 1, 1}, IntPoly({-c, 0, 1})};
        EXPECT_TRUE(z.satisfies_parameter_equation());
        EXPECT_TRUE(verify_character_equation(StarlikeSpec({static_cast<unsigned>(c)}), z)) << c;
    }
    for (unsigned n5 = 1; n5 <= 6; ++n5) {
        const ZVector z{{0, 0, 1, 2, 0}, IntPoly({-long(n5) - 3, 0, 1})};
        EXPECT_TRUE(verify_character_equation(StarlikeSpec({1, 1, 0, 0, n5}), z)) << n5;
    }
    const ZVector pell{{0, 0, 0, 2, 0}, IntPoly({-3, -1, 1}) * IntPoly({-3, 1, 1})};
    EXPECT_TRUE(pell.satisfies_parameter_equation());
    EXPECT_TRUE(verify_character_equation(StarlikeSpec({0, 0, 1, 0, 3}), pell));
}

TEST(CharacterEquation, WrongTopFactorFails) {
    const ZVector z{{0, 1, 1, 1, 1}, IntPoly({-6, 0, 1})};
    EXPECT_FALSE(verify_character_equation(StarlikeSpec({5}), z));
    EXPECT_FALSE(verify_character_equation(StarlikeSpec({0, 0, 0, 0, 0, 3}), z));
}

TEST(CharacterEquation, HoldsForEnumeratedInstances) {
    for (const auto& f : enumerate_instances(200)) {
        const ZVector z = family_zvector(f);
        EXPECT_EQ(z.z, row_zvector(f.id));
        EXPECT_TRUE(z.satisfies_parameter_equation()) << to_string(f.id);
        EXPECT_TRUE(verify_character_equation(f.spec, z)) << to_string(f.id) << " " << f.spec.to_string();
    }
}

TEST(CharacterEquation, HoldsAcrossEveryRowSymbolically) {
    for (FamilyId id : all_families) {
        const auto sweep = parameter_sweep(id, 24);
        ASSERT_EQ(sweep.size(), 24u) << to_string(id);
        for (const auto& s : sweep) {
            EXPECT_TRUE(s.z.satisfies_parameter_equation());
            EXPECT_TRUE(verify_character_equation(s.legs, s.z)) << to_string(id) << " " << s.legs[4].get_str();
        }
    }
}

TEST(CharacterEquation, SweepAgreesWithInstantiate) {
    // Small sweep members are ordinary instances with the same top factor.
    for (FamilyId id : all_families) {
        for (const auto& s : parameter_sweep(id, 24)) {
            std::vector<unsigned> legs;
            bool small = true;
            for (const auto& v : s.legs) {
                small = small && v < 200;
                legs.push_back(small ? static_cast<unsigned>(v.get_ui()) : 0);
            }
            if (!small) continue;
            const auto m = match_family(StarlikeSpec(legs));
            ASSERT_TRUE(m) << to_string(id);
            EXPECT_EQ(family_zvector(*m).g, s.z.g) << to_string(id);
        }
    }
}

TEST(ZeroMultiplicity, Examples) {
    EXPECT_EQ(zero_multiplicity(StarlikeSpec({3})), 2u);
    EXPECT_EQ(zero_multiplicity(StarlikeSpec({0, 3})), 1u);
    EXPECT_EQ(zero_multiplicity(StarlikeSpec({1, 1, 0, 0, 1})), 1u);
}

TEST(ZeroMultiplicity, MatchesValuationOnRandomSpecs) {
    std::mt19937 rng(23);
    for (int i = 0; i < 500; ++i) {
        const auto s = random_spec(rng, 40, 3);
        EXPECT_EQ(zero_multiplicity(s), x_valuation(starlike_charpoly(s))) << s.to_string();
    }
}

TEST(MultiplicityDrop, BasisRootsLoseOneAtTheCenter) {
    // T - u is a union of paths; every basis factor shared with it loses
    // exactly one multiplicity in T.
    std::mt19937 rng(29);
    const std::vector<IntPoly> basis = {X, Xm1, Xm2, Gm, Gp, Xm3};
    for (int i = 0; i < 200; ++i) {
        const auto s = random_spec(rng, 40, 3);
        IntPoly forest{1};
        for (std::size_t len = 1; len <= s.leg_counts().size(); ++len)
            forest *= pow(path_charpoly(len), s.count(len));
        const IntPoly f = starlike_charpoly(s);
        for (const auto& q : basis) {
            const unsigned k = multiplicity_of(forest, q);
            if (k == 0) continue;
            EXPECT_EQ(multiplicity_of(f, q), k - 1) << s.to_string() << " " << q.to_string();
        }
    }
}

TEST(PellBridge, OnlyFiveRowsUpToAThousand) {
    std::vector<std::tuple<long, long, long, long>> rows;
    for (long n5 = 1; n5 <= 1000; ++n5) {
        try {
            const auto f = instantiate(FamilyId::T_00100n5, {{"n5", n5}});
            rows.emplace_back(n5, f.params.at("a"), f.params.at("b"), f.delta->get_si());
        } catch (const InvalidParams&) {
        }
    }
    const std::vector<std::tuple<long, long, long, long>> want = {
        {3, 1, -3, 13}, {11, 5, 5, 5}, {39, 5, -9, 61}, {759, 29, 39, 685}, {923, 29, -43, 1013}};
    EXPECT_EQ(rows, want);
}

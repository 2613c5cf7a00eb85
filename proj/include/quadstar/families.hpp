#pragma once

// The nine parameterized families of quadratic starlike trees, their closed
// form characteristic polynomials, and the character equation behind them.

#include "quadstar/graphs.hpp"
#include "quadstar/polyring.hpp"

#include <gmpxx.h>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace quadstar {

// Form I rows first, then form II, each in table order.
enum class FamilyId {
    T_1100n5,
    T_10n3,
    T_0n2,
    T_star,
    T_00100n5,
    T_000n4,
    T_200n4,
    T_n10n3,
    T_n1n2,
};

inline constexpr std::array<FamilyId, 9> all_families = {
    FamilyId::T_1100n5, FamilyId::T_10n3,  FamilyId::T_0n2,   FamilyId::T_star, FamilyId::T_00100n5,
    FamilyId::T_000n4,  FamilyId::T_200n4, FamilyId::T_n10n3, FamilyId::T_n1n2,
};

std::string_view to_string(FamilyId id);
FamilyId parse_family_id(std::string_view tag);
bool is_form_one(FamilyId id);
/// Leg pattern such as "(1,1,0,0,n5)".
std::string family_shape(FamilyId id);
/// The row's restriction column.
std::string_view family_restriction(FamilyId id);

/// Names of the leg-count parameters of a row, e.g. {"n1", "n3"}.
std::vector<std::string> leg_parameters(FamilyId id);

using FamilyParams = std::map<std::string, long>;

struct FamilyInstance {
    FamilyId id{};
    /// Leg counts plus c (form I) or a, b (form II).
    FamilyParams params;
    StarlikeSpec spec;
    /// The table's closed form, factors as printed there.
    FactoredPoly predicted;
    std::optional<mpz_class> delta;
    std::optional<bool> delta_squarefree;
    bool integral = false;

    IntPoly predicted_charpoly() const { return expand(predicted); }
};

/// Builds a validated instance. Form I rows take their leg count; form II
/// rows take either their leg counts or {a, b}. Throws InvalidParams naming
/// the violated restriction, NonQuadraticDelta when a^2 - 4b is a square.
FamilyInstance instantiate(FamilyId id, const FamilyParams& params);

/// The instance whose spec is `spec`, trying rows in table order.
std::optional<FamilyInstance> match_family(const StarlikeSpec& spec);

/// Every instance on at most max_vertices vertices, one per spec, sorted by
/// (vertex count, family, params).
std::vector<FamilyInstance> enumerate_instances(std::size_t max_vertices);

/// Exponents of x, x^2-1, x^2-2, x^4-3x^2+1, x^2-3 and the top factor g.
struct ZVector {
    std::array<unsigned, 5> z{};
    IntPoly g;

    /// z1 + 2 z2 + 2 z3 + 4 z4 + 2 z5 + deg g == 12
    bool satisfies_parameter_equation() const;
};

/// (z1, ..., z5) of a row.
std::array<unsigned, 5> row_zvector(FamilyId id);

/// The row's z-vector with g taken from the instance.
ZVector family_zvector(const FamilyInstance& inst);

/// t(x) == u(x), where t = x m - sum n_i f_{P_{i-1}} m / f_{P_i} with
/// m = x(x^2-1)(x^2-2)(x^4-3x^2+1)(x^2-3), and u is the product the
/// z-vector describes. Legs longer than 5 make the identity false.
bool verify_character_equation(const StarlikeSpec& spec, const ZVector& z);

/// Same identity with leg counts n1..n5 as big integers; t is linear in them.
bool verify_character_equation(const std::array<mpz_class, 5>& legs, const ZVector& z);

/// A row instance with unbounded leg counts, for symbolic checks.
struct SymbolicInstance {
    FamilyId id{};
    std::array<mpz_class, 5> legs;
    ZVector z;
};

/// The first `count` valid parameter choices of a row, smallest first. The
/// Pell rows walk the solutions of x^2 - 2y^2 = -1, so their leg counts
/// grow exponentially.
std::vector<SymbolicInstance> parameter_sweep(FamilyId id, std::size_t count);

/// m(T;0): k - 1 if k >= 1, else 1, with k the number of odd-vertex legs.
unsigned zero_multiplicity(const StarlikeSpec& spec);

}  // namespace quadstar

#include "quadstar/families.hpp"

#include "quadstar/errors.hpp"
#include "quadstar/numbertheory.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace quadstar {

namespace {

// One entry per leg length: a fixed count or a named parameter.
struct Slot {
    unsigned fixed = 0;
    const char* var = nullptr;
};

struct Row {
    FamilyId id;
    const char* tag;
    std::vector<Slot> legs;
    std::array<unsigned, 5> z;
    const char* restriction;
};

const std::vector<Row>& rows() {
    static const std::vector<Row> table = {
        {FamilyId::T_1100n5, "T_1100n5", {{1}, {1}, {0}, {0}, {0, "n5"}}, {0, 0, 1, 2, 0}, "n5 >= 1"},
        {FamilyId::T_10n3, "T_10n3", {{1}, {0}, {0, "n3"}}, {0, 2, 0, 1, 1}, "n3 >= 2"},
        {FamilyId::T_0n2, "T_0n2", {{0}, {0, "n2"}}, {2, 0, 1, 1, 1}, "n2 >= 3"},
        {FamilyId::T_star, "T_star", {{0, "n1"}}, {0, 1, 1, 1, 1}, "n1 >= 4"},
        {FamilyId::T_00100n5, "T_00100n5", {{0}, {0}, {1}, {0}, {0, "n5"}}, {0, 0, 0, 2, 0},
         "n5 = (b^2-3)/2 >= 2 and 2a^2 = (b+2)^2 + 1"},
        {FamilyId::T_000n4, "T_000n4", {{0}, {0}, {0}, {0, "n4"}}, {2, 1, 1, 0, 1},
         "n4 = (b^2-1)/2 >= 3 and 2a^2 = (b+2)^2 + 1"},
        {FamilyId::T_200n4, "T_200n4", {{2}, {0}, {0}, {0, "n4"}}, {0, 1, 2, 0, 1},
         "n4 = a^2-5 >= 1 with b = 1, or n4 = a^2-1 >= 1 with b = -1"},
        {FamilyId::T_n10n3, "T_n10n3", {{0, "n1"}, {0}, {0, "n3"}}, {0, 1, 0, 1, 1},
         "n1 = (b+1)^2 + 1 - a^2 >= 0, n3 = 2a^2 - (b+2)^2 >= 1, n1 + n3 >= 3"},
        {FamilyId::T_n1n2, "T_n1n2", {{0, "n1"}, {0, "n2"}}, {0, 0, 1, 1, 1},
         "n1 = b^2 >= 1, n2 = a^2 - (b+1)^2 >= 1, n1 + n2 >= 3"},
    };
    return table;
}

const Row& row(FamilyId id) { return rows()[static_cast<std::size_t>(id)]; }

constexpr long max_leg_count = 1'000'000;

IntPoly quad(const mpz_class& s, const mpz_class& p) { return IntPoly({p, mpz_class(-s), mpz_class(1)}); }

const IntPoly& basis(std::size_t i) {
    static const std::array<IntPoly, 6> b = {
        IntPoly{0, 1},          // x
        IntPoly{-1, 0, 1},      // x^2 - 1
        IntPoly{-2, 0, 1},      // x^2 - 2
        IntPoly{-1, -1, 1},     // x^2 - x - 1
        IntPoly{-1, 1, 1},      // x^2 + x - 1
        IntPoly{-3, 0, 1},      // x^2 - 3
    };
    return b[i];
}

std::optional<mpz_class> exact_sqrt(const mpz_class& n) {
    if (n < 0) return std::nullopt;
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    if (r * r != n) return std::nullopt;
    return r;
}

long to_long(const mpz_class& v, const Row& r) {
    if (!v.fits_slong_p() || abs(v) > mpz_class(max_leg_count))
        throw InvalidParams(std::string(r.tag) + ": parameter out of range");
    return v.get_si();
}

[[noreturn]] void violated(const Row& r, const std::string& detail) {
    throw InvalidParams(std::string(r.tag) + " requires " + r.restriction + " (" + detail + ")");
}

StarlikeSpec spec_from(const Row& r, const FamilyParams& params) {
    std::vector<unsigned> legs;
    for (const auto& s : r.legs) {
        if (s.var == nullptr) {
            legs.push_back(s.fixed);
            continue;
        }
        const long v = params.at(s.var);
        if (v < 0 || v > max_leg_count) violated(r, std::string(s.var) + " = " + std::to_string(v));
        legs.push_back(static_cast<unsigned>(v));
    }
    return StarlikeSpec(std::move(legs));
}

bool discriminant_square(const IntPoly& q) {
    const auto& c = q.coeffs();
    return static_cast<bool>(exact_sqrt(c[1] * c[1] - 4 * c[0] * c[2]));
}

void finish(FamilyInstance& inst) {
    canonicalize(inst.predicted);
    inst.integral = std::all_of(inst.predicted.begin(), inst.predicted.end(), [](const Factor& f) {
        return f.poly.degree() == 1 || (f.poly.degree() == 2 && discriminant_square(f.poly));
    });
    if (inst.spec.center_degree() < 3)
        throw InvalidParams(std::string(to_string(inst.id)) + ": center degree " +
                            std::to_string(inst.spec.center_degree()) + " < 3");
}

FamilyInstance form_one(const Row& r, long n) {
    FamilyInstance inst;
    inst.id = r.id;
    const std::string var = r.legs.back().var;
    const long minimum = r.id == FamilyId::T_1100n5 ? 1 : r.id == FamilyId::T_10n3 ? 2
                            : r.id == FamilyId::T_0n2    ? 3 : 4;
    if (n < minimum || n > max_leg_count) violated(r, var + " = " + std::to_string(n));
    const auto k = static_cast<unsigned long>(n);
    long c = 0;
    auto& f = inst.predicted;
    switch (r.id) {
        case FamilyId::T_1100n5:
            c = n + 3;
            f = {{basis(0), unsigned(k)}, {basis(1), unsigned(k)}, {basis(3), 1}, {basis(4), 1},
                 {basis(5), unsigned(k - 1)}};
            break;
        case FamilyId::T_10n3:
            c = n + 2;
            f = {{basis(0), unsigned(k)}, {basis(1), 1}, {basis(2), unsigned(k - 1)}};
            break;
        case FamilyId::T_0n2:
            c = n + 1;
            f = {{basis(0), 1}, {basis(1), unsigned(k - 1)}};
            break;
        default:
            c = n;
            f = {{basis(0), unsigned(k - 1)}};
            break;
    }
    f.push_back({quad(0, -c), 1});
    inst.params = {{var, n}, {"c", c}};
    inst.spec = spec_from(r, inst.params);
    finish(inst);
    return inst;
}

// Leg counts forced by (a, b) through the row's restriction equations.
std::map<std::string, mpz_class> legs_from_ab(const Row& r, const mpz_class& a, const mpz_class& b) {
    const std::string ab = "a = " + a.get_str() + ", b = " + b.get_str();
    if (a <= 0) violated(r, "a must be positive, " + ab);
    std::map<std::string, mpz_class> legs;
    switch (r.id) {
        case FamilyId::T_00100n5:
        case FamilyId::T_000n4: {
            const bool five = r.id == FamilyId::T_00100n5;
            const mpz_class num = b * b - (five ? 3 : 1);
            const mpz_class lo = five ? 2 : 3;
            if (num % 2 != 0 || num / 2 < lo) violated(r, ab);
            if (2 * a * a != (b + 2) * (b + 2) + 1) violated(r, ab);
            legs[five ? "n5" : "n4"] = num / 2;
            break;
        }
        case FamilyId::T_200n4: {
            mpz_class n4;
            if (b == 1)
                n4 = a * a - 5;
            else if (b == -1)
                n4 = a * a - 1;
            else
                violated(r, ab);
            if (n4 < 1) violated(r, ab);
            legs["n4"] = n4;
            break;
        }
        case FamilyId::T_n10n3: {
            const mpz_class n1 = (b + 1) * (b + 1) + 1 - a * a;
            const mpz_class n3 = 2 * a * a - (b + 2) * (b + 2);
            if (n1 < 0 || n3 < 1 || n1 + n3 < 3) violated(r, ab);
            legs["n1"] = n1;
            legs["n3"] = n3;
            break;
        }
        case FamilyId::T_n1n2: {
            const mpz_class n1 = b * b;
            const mpz_class n2 = a * a - (b + 1) * (b + 1);
            if (n1 < 1 || n2 < 1 || n1 + n2 < 3) violated(r, ab);
            legs["n1"] = n1;
            legs["n2"] = n2;
            break;
        }
        default: throw InvalidParams(std::string(r.tag) + " is not a form II row");
    }
    return legs;
}

void check_delta(const Row& r, const mpz_class& a, const mpz_class& b) {
    const mpz_class delta = a * a - 4 * b;
    if (exact_sqrt(delta))
        throw NonQuadraticDelta(std::string(r.tag) + ": a^2 - 4b = " + delta.get_str() +
                                " is a perfect square, a = " + a.get_str() + ", b = " + b.get_str());
    if (delta < 0) violated(r, "a^2 - 4b = " + delta.get_str() + " < 0");
}

FamilyInstance form_two(const Row& r, const mpz_class& a, const mpz_class& b) {
    FamilyParams legs;
    for (const auto& [k, v] : legs_from_ab(r, a, b)) legs[k] = to_long(v, r);
    check_delta(r, a, b);

    const mpz_class delta = a * a - 4 * b;
    FamilyInstance inst;
    inst.id = r.id;
    inst.params = legs;
    inst.params["a"] = to_long(a, r);
    inst.params["b"] = to_long(b, r);
    inst.spec = spec_from(r, inst.params);
    inst.delta = delta;
    inst.delta_squarefree = is_squarefree(delta);

    auto& f = inst.predicted;
    const auto n = [&](const char* v) { return static_cast<unsigned>(legs.at(v)); };
    switch (r.id) {
        case FamilyId::T_00100n5:
            f = {{basis(0), n("n5")}, {basis(1), n("n5") - 1}, {basis(3), 1}, {basis(4), 1},
                 {basis(5), n("n5") - 1}};
            break;
        case FamilyId::T_000n4:
            f = {{basis(0), 1}, {basis(3), n("n4") - 1}, {basis(4), n("n4") - 1}};
            break;
        case FamilyId::T_200n4:
            f = {{basis(0), 1}, {basis(2), 1}, {basis(3), n("n4") - 1}, {basis(4), n("n4") - 1}};
            break;
        case FamilyId::T_n10n3:
            f = {{basis(0), n("n1") + n("n3") - 1}, {basis(2), n("n3") - 1}};
            break;
        default:
            f = {{basis(0), n("n1") - 1}, {basis(1), n("n2") - 1}};
            break;
    }
    f.push_back({quad(a, b), 1});
    f.push_back({quad(-a, b), 1});
    finish(inst);
    return inst;
}

// Integer (a, b) pairs that the row's restriction equations allow for the
// given leg counts.
std::vector<std::pair<mpz_class, mpz_class>> solve_ab(const Row& r, const FamilyParams& p) {
    std::vector<std::pair<mpz_class, mpz_class>> out;
    const auto add_from_b2 = [&](const mpz_class& b2, auto&& a2_of) {
        const auto root = exact_sqrt(b2);
        if (!root) return;
        for (const mpz_class& b : {mpz_class(*root), mpz_class(-*root)}) {
            if (const auto a = exact_sqrt(a2_of(b)); a && *a > 0) out.emplace_back(*a, b);
            if (*root == 0) break;
        }
    };
    const auto half = [](const mpz_class& v) {
        return v % 2 == 0 ? mpz_class(v / 2) : mpz_class(-1);
    };
    switch (r.id) {
        case FamilyId::T_00100n5:
        case FamilyId::T_000n4: {
            const bool five = r.id == FamilyId::T_00100n5;
            const mpz_class b2 = 2 * mpz_class(p.at(five ? "n5" : "n4")) + (five ? 3 : 1);
            add_from_b2(b2, [&](const mpz_class& b) -> mpz_class { return half((b + 2) * (b + 2) + 1); });
            break;
        }
        case FamilyId::T_200n4: {
            const mpz_class n4 = p.at("n4");
            if (const auto a = exact_sqrt(n4 + 5); a && *a > 0) out.emplace_back(*a, 1);
            if (const auto a = exact_sqrt(n4 + 1); a && *a > 0) out.emplace_back(*a, -1);
            break;
        }
        case FamilyId::T_n10n3: {
            const mpz_class n1 = p.at("n1"), n3 = p.at("n3");
            add_from_b2(n3 + 2 * n1, [&](const mpz_class& b) -> mpz_class { return half(n3 + (b + 2) * (b + 2)); });
            break;
        }
        case FamilyId::T_n1n2: {
            const mpz_class n1 = p.at("n1"), n2 = p.at("n2");
            add_from_b2(n1, [&](const mpz_class& b) -> mpz_class { return n2 + (b + 1) * (b + 1); });
            break;
        }
        default: break;
    }
    return out;
}

void check_keys(const Row& r, const FamilyParams& params, const std::set<std::string>& allowed) {
    for (const auto& [k, v] : params)
        if (!allowed.count(k))
            throw InvalidParams(std::string(r.tag) + ": unexpected parameter '" + k + "'");
}

}  // namespace

std::string_view to_string(FamilyId id) { return row(id).tag; }

FamilyId parse_family_id(std::string_view tag) {
    for (const auto& r : rows())
        if (tag == r.tag) return r.id;
    throw InvalidParams("unknown family '" + std::string(tag) + "'");
}

std::string family_shape(FamilyId id) {
    std::string out = "(";
    for (const auto& s : row(id).legs) {
        if (out.size() > 1) out += ',';
        out += s.var ? std::string(s.var) : std::to_string(s.fixed);
    }
    return out + ")";
}

std::string_view family_restriction(FamilyId id) { return row(id).restriction; }

bool is_form_one(FamilyId id) { return static_cast<int>(id) <= static_cast<int>(FamilyId::T_star); }

std::vector<std::string> leg_parameters(FamilyId id) {
    std::vector<std::string> out;
    for (const auto& s : row(id).legs)
        if (s.var) out.emplace_back(s.var);
    return out;
}

FamilyInstance instantiate(FamilyId id, const FamilyParams& params) {
    const Row& r = row(id);
    const auto legs = leg_parameters(id);
    const std::set<std::string> leg_set(legs.begin(), legs.end());
    const bool has_legs = std::all_of(legs.begin(), legs.end(), [&](const std::string& v) { return params.count(v) > 0; });

    if (is_form_one(id)) {
        check_keys(r, params, {legs.front(), "c"});
        if (!has_legs) throw InvalidParams(std::string(r.tag) + ": missing parameter " + legs.front());
        FamilyInstance inst = form_one(r, params.at(legs.front()));
        if (params.count("c") && params.at("c") != inst.params.at("c"))
            violated(r, "c must be " + std::to_string(inst.params.at("c")));
        return inst;
    }

    std::set<std::string> allowed = leg_set;
    allowed.insert({"a", "b"});
    check_keys(r, params, allowed);
    if (params.count("a") && params.count("b")) {
        FamilyInstance inst = form_two(r, params.at("a"), params.at("b"));
        for (const auto& v : legs)
            if (params.count(v) && params.at(v) != inst.params.at(v))
                violated(r, v + " = " + std::to_string(params.at(v)) + " disagrees with a, b");
        return inst;
    }
    if (!has_legs)
        throw InvalidParams(std::string(r.tag) + ": give either a and b or all leg counts");
    for (const auto& v : legs) {
        const long val = params.at(v);
        if (val < 0 || val > max_leg_count) violated(r, v + " = " + std::to_string(val));
    }

    const StarlikeSpec wanted = spec_from(r, params);
    std::vector<FamilyInstance> found;
    std::optional<NonQuadraticDelta> square_delta;
    for (const auto& [a, b] : solve_ab(r, params)) {
        try {
            FamilyInstance inst = form_two(r, a, b);
            if (inst.spec == wanted) found.push_back(std::move(inst));
        } catch (const NonQuadraticDelta& e) {
            square_delta = e;
        }
    }
    if (found.size() > 1) {
        const IntPoly actual = starlike_charpoly(wanted);
        std::erase_if(found, [&](const FamilyInstance& f) { return f.predicted_charpoly() != actual; });
    }
    if (!found.empty()) return found.front();
    if (square_delta) throw *square_delta;
    std::string detail;
    for (const auto& v : legs) detail += (detail.empty() ? "" : ", ") + v + " = " + std::to_string(params.at(v));
    violated(r, "no integer a, b for " + detail);
}

std::optional<FamilyInstance> match_family(const StarlikeSpec& spec) {
    const auto& have = spec.leg_counts();
    for (const auto& r : rows()) {
        if (have.size() > r.legs.size()) continue;
        FamilyParams params;
        bool fits = true;
        for (std::size_t i = 0; i < r.legs.size() && fits; ++i) {
            const unsigned v = i < have.size() ? have[i] : 0;
            if (r.legs[i].var)
                params[r.legs[i].var] = v;
            else
                fits = v == r.legs[i].fixed;
        }
        if (!fits) continue;
        try {
            FamilyInstance inst = instantiate(r.id, params);
            if (inst.spec == spec) return inst;
        } catch (const InvalidParams&) {
        }
    }
    return std::nullopt;
}

std::vector<FamilyInstance> enumerate_instances(std::size_t max_vertices) {
    std::vector<FamilyInstance> all;
    const auto bound = static_cast<long>(max_vertices);
    const auto attempt = [&](FamilyId id, const FamilyParams& p) {
        try {
            FamilyInstance inst = instantiate(id, p);
            if (static_cast<long>(inst.spec.vertex_count()) <= bound) all.push_back(std::move(inst));
        } catch (const InvalidParams&) {
        }
    };
    for (const auto& r : rows()) {
        const auto legs = leg_parameters(r.id);
        // Vertices contributed by the fixed legs plus the center.
        long base = 1;
        for (std::size_t i = 0; i < r.legs.size(); ++i)
            if (!r.legs[i].var) base += static_cast<long>((i + 1) * r.legs[i].fixed);
        if (legs.size() == 1) {
            const long len = static_cast<long>(r.legs.size());
            for (long n = 0; base + len * n <= bound; ++n) attempt(r.id, {{legs[0], n}});
            continue;
        }
        // Two free legs: lengths of the first and last slots.
        const long len1 = 1;
        const long len2 = static_cast<long>(r.legs.size());
        for (long n1 = 0; base + len1 * n1 <= bound; ++n1)
            for (long n2 = 0; base + len1 * n1 + len2 * n2 <= bound; ++n2)
                attempt(r.id, {{legs[0], n1}, {legs[1], n2}});
    }
    std::sort(all.begin(), all.end(), [](const FamilyInstance& x, const FamilyInstance& y) {
        return std::tuple(x.spec.vertex_count(), x.id, x.params) <
               std::tuple(y.spec.vertex_count(), y.id, y.params);
    });
    std::set<StarlikeSpec> seen;
    std::erase_if(all, [&](const FamilyInstance& f) { return !seen.insert(f.spec).second; });
    return all;
}

bool ZVector::satisfies_parameter_equation() const {
    return z[0] + 2 * z[1] + 2 * z[2] + 4 * z[3] + 2 * z[4] + static_cast<unsigned>(std::max(g.degree(), 0)) == 12;
}

std::array<unsigned, 5> row_zvector(FamilyId id) { return row(id).z; }

ZVector family_zvector(const FamilyInstance& inst) {
    ZVector zv;
    zv.z = row(inst.id).z;
    if (is_form_one(inst.id)) {
        zv.g = quad(0, -mpz_class(inst.params.at("c")));
    } else {
        const mpz_class a = inst.params.at("a"), b = inst.params.at("b");
        zv.g = quad(a, b) * quad(-a, b);
    }
    return zv;
}

bool verify_character_equation(const StarlikeSpec& spec, const ZVector& zv) {
    if (spec.longest_leg() > 5) return false;
    std::array<mpz_class, 5> legs;
    for (std::size_t i = 0; i < 5; ++i) legs[i] = spec.count(i + 1);
    return verify_character_equation(legs, zv);
}

bool verify_character_equation(const std::array<mpz_class, 5>& legs, const ZVector& zv) {
    std::array<IntPoly, 6> fp;
    for (std::size_t i = 0; i <= 5; ++i) fp[i] = path_charpoly(i);
    IntPoly m{1};
    for (std::size_t i = 0; i < 6; ++i) m *= basis(i);

    IntPoly t = IntPoly::x() * m;
    for (std::size_t i = 1; i <= 5; ++i) {
        if (legs[i - 1] == 0) continue;
        t -= fp[i - 1] * exact_div(m, fp[i]).value() * legs[i - 1];
    }

    IntPoly u = zv.g;
    const IntPoly p4 = basis(3) * basis(4);
    const std::array<const IntPoly*, 5> base = {&basis(0), &basis(1), &basis(2), &p4, &basis(5)};
    for (std::size_t i = 0; i < 5; ++i) u *= pow(*base[i], zv.z[i]);
    return t == u;
}

std::vector<SymbolicInstance> parameter_sweep(FamilyId id, std::size_t count) {
    const Row& r = row(id);
    std::vector<SymbolicInstance> out;
    const auto fixed_legs = [&] {
        std::array<mpz_class, 5> legs;
        for (std::size_t i = 0; i < r.legs.size(); ++i) legs[i] = r.legs[i].fixed;
        return legs;
    };
    const auto slot_of = [&](const std::string& var) {
        for (std::size_t i = 0; i < r.legs.size(); ++i)
            if (r.legs[i].var && var == r.legs[i].var) return i;
        throw std::logic_error("unknown leg " + var);
    };
    const auto try_ab = [&](const mpz_class& a, const mpz_class& b) {
        if (out.size() >= count) return;
        try {
            const auto legs = legs_from_ab(r, a, b);
            check_delta(r, a, b);
            SymbolicInstance s{id, fixed_legs(), {r.z, quad(a, b) * quad(-a, b)}};
            for (const auto& [k, v] : legs) s.legs[slot_of(k)] = v;
            // Distinct (a, b) can land on one spec; keep the first.
            for (const auto& prev : out)
                if (prev.legs == s.legs) return;
            out.push_back(std::move(s));
        } catch (const InvalidParams&) {
        }
    };

    if (is_form_one(id)) {
        const long minimum = id == FamilyId::T_1100n5 ? 1 : id == FamilyId::T_10n3 ? 2 : id == FamilyId::T_0n2 ? 3 : 4;
        const long shift = id == FamilyId::T_1100n5 ? 3 : id == FamilyId::T_10n3 ? 2 : id == FamilyId::T_0n2 ? 1 : 0;
        for (long n = minimum; out.size() < count; ++n) {
            SymbolicInstance s{id, fixed_legs(), {r.z, quad(0, -mpz_class(n + shift))}};
            s.legs[slot_of(r.legs.back().var)] = n;
            out.push_back(std::move(s));
        }
        return out;
    }
    if (id == FamilyId::T_00100n5 || id == FamilyId::T_000n4) {
        // 2a^2 = (b+2)^2 + 1 means (b+2, a) solves x^2 - 2y^2 = -1.
        for (std::size_t k = 4; out.size() < count; k *= 2) {
            out.clear();
            for (const auto& s : pell_negative(2, k)) {
                try_ab(s.y, s.x - 2);
                try_ab(s.y, -s.x - 2);
            }
        }
        return out;
    }
    // Remaining rows: a and |b| are bounded by the leg counts, so a square
    // walk over (a, b) finds instances in order of a.
    for (long a = 1; out.size() < count; ++a)
        for (long b = -2 * a - 2; b <= 2 * a + 2; ++b) try_ab(a, b);
    return out;
}

unsigned zero_multiplicity(const StarlikeSpec& spec) {
    unsigned k = 0;
    for (std::size_t i = 1; i <= spec.longest_leg(); i += 2) k += spec.count(i);
    return k >= 1 ? k - 1 : 1;
}

}  // namespace quadstar

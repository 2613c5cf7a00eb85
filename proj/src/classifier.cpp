#include "quadstar/classifier.hpp"

#include "quadstar/errors.hpp"
#include "quadstar/graphs.hpp"
#include "quadstar/numbertheory.hpp"
#include "quadstar/real_roots.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

namespace quadstar {

ClassifierOptions ClassifierOptions::from_environment() {
    ClassifierOptions opts;
    const char* env = std::getenv("QUADSTAR_PRECISION_BITS");
    if (env == nullptr || *env == '\0') return opts;
    unsigned long bits = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, bits);
    if (ec != std::errc{} || ptr != end || bits == 0 || bits > 1UL << 20)
        throw InvalidParams("QUADSTAR_PRECISION_BITS must be a positive integer, got '" +
                            std::string(env) + "'");
    opts.initial_bits = bits;
    return opts;
}

IntPoly QuadraticCertificate::product() const { return expand(factors) * residual; }

namespace {

struct Interval {
    mpq_class lo;
    mpq_class hi;
};

Interval to_rational(const DyadicInterval& iv) {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, iv.scale);
    Interval r{mpq_class(iv.lo, den), mpq_class(iv.hi, den)};
    r.lo.canonicalize();
    r.hi.canonicalize();
    return r;
}

Interval add(const Interval& x, const Interval& y) { return {x.lo + y.lo, x.hi + y.hi}; }

Interval mul(const Interval& x, const Interval& y) {
    const mpq_class c[4] = {x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi};
    return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

enum class Rounding { none, unique, uncertain };

// The only integer the enclosed value could be, provided the enclosure is
// tight enough to name it within 1/4.
Rounding round_certified(const Interval& iv, mpz_class& k) {
    mpz_class lo_ceil, hi_floor;
    mpz_cdiv_q(lo_ceil.get_mpz_t(), iv.lo.get_num_mpz_t(), iv.lo.get_den_mpz_t());
    mpz_fdiv_q(hi_floor.get_mpz_t(), iv.hi.get_num_mpz_t(), iv.hi.get_den_mpz_t());
    if (lo_ceil > hi_floor) return Rounding::none;
    if (lo_ceil != hi_floor) return Rounding::uncertain;
    const mpq_class quarter(1, 4);
    if (iv.lo < mpq_class(lo_ceil) - quarter || iv.hi > mpq_class(lo_ceil) + quarter)
        return Rounding::uncertain;
    k = lo_ceil;
    return Rounding::unique;
}

// Consumes the roots of one squarefree piece. Returns false when some
// rounding could not be certified at this precision.
bool split_piece(const IntPoly& piece, unsigned multiplicity, unsigned long bits,
                 FactoredPoly& accepted) {
    const auto enclosures = isolate_real_roots(piece, bits);
    if (static_cast<int>(enclosures.size()) < piece.degree())
        throw NonRealRoots("polynomial factor " + piece.to_string() + " has non-real roots");

    std::vector<Interval> roots;
    roots.reserve(enclosures.size());
    for (const auto& e : enclosures) roots.push_back(to_rational(e));
    std::vector<bool> used(roots.size(), false);
    IntPoly rest = piece;

    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (used[i]) continue;
        mpz_class k;
        switch (round_certified(roots[i], k)) {
            case Rounding::uncertain: return false;
            case Rounding::unique: {
                const IntPoly lin({-k, mpz_class(1)});
                if (auto q = exact_div(rest, lin)) {
                    rest = std::move(*q);
                    used[i] = true;
                    accepted.push_back({lin, multiplicity});
                    continue;
                }
                break;
            }
            case Rounding::none: break;
        }
        // Not an integer, so any degree-2 factor through it is irreducible.
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            if (used[j]) continue;
            mpz_class s, p;
            const Rounding rs = round_certified(add(roots[i], roots[j]), s);
            if (rs == Rounding::none) continue;
            const Rounding rp = round_certified(mul(roots[i], roots[j]), p);
            if (rp == Rounding::none) continue;
            if (rs == Rounding::uncertain || rp == Rounding::uncertain) return false;
            const IntPoly quad({p, mpz_class(-s), mpz_class(1)});
            if (auto q = exact_div(rest, quad)) {
                rest = std::move(*q);
                used[i] = used[j] = true;
                accepted.push_back({quad, multiplicity});
                break;
            }
        }
    }
    return true;
}

}  // namespace

QuadraticCertificate decompose_deg_le2(const IntPoly& p, const ClassifierOptions& opts) {
    if (p.is_zero()) throw std::invalid_argument("quadratic decomposition of the zero polynomial");
    const FactoredPoly parts = squarefree_decomposition(p);

    unsigned long bits = std::max<unsigned long>(opts.initial_bits, 1);
    for (unsigned attempt = 0; attempt <= opts.max_doublings; ++attempt, bits *= 2) {
        FactoredPoly accepted;
        bool certain = true;
        for (const auto& part : parts) {
            if (!split_piece(part.poly, part.multiplicity, bits, accepted)) {
                certain = false;
                break;
            }
        }
        if (!certain) continue;
        canonicalize(accepted);
        QuadraticCertificate cert;
        cert.residual = exact_div(p, expand(accepted)).value();
        cert.factors = std::move(accepted);
        return cert;
    }
    throw PrecisionExhausted("could not certify integer rounding of " + p.to_string() +
                             " within " + std::to_string(bits / 2) + " bits");
}

std::string_view to_string(SpectralKind kind) {
    switch (kind) {
        case SpectralKind::integral: return "integral";
        case SpectralKind::formI: return "proper_quadratic_formI";
        case SpectralKind::formII: return "proper_quadratic_formII";
        case SpectralKind::proper_quadratic_other: return "proper_quadratic_other";
        case SpectralKind::non_quadratic: return "non_quadratic";
    }
    return "?";
}

std::optional<mpz_class> SpectralClass::delta() const {
    if (kind != SpectralKind::formII || !a || !b) return std::nullopt;
    return mpz_class(*a * *a - 4 * *b);
}

std::optional<bool> SpectralClass::delta_squarefree() const {
    const auto d = delta();
    if (!d) return std::nullopt;
    return is_squarefree(*d);
}

namespace {

bool has_factor(const FactoredPoly& factors, const IntPoly& f) {
    return std::any_of(factors.begin(), factors.end(),
                       [&](const Factor& g) { return g.poly == f; });
}

}  // namespace

SpectralClass classify_poly(const IntPoly& p, const ClassifierOptions& opts) {
    SpectralClass out;
    out.certificate = decompose_deg_le2(p, opts);
    const FactoredPoly& factors = out.certificate.factors;
    if (!out.certificate.accepting()) return out;
    if (std::all_of(factors.begin(), factors.end(),
                    [](const Factor& f) { return f.poly.degree() == 1; })) {
        out.kind = SpectralKind::integral;
        return out;
    }

    out.kind = SpectralKind::proper_quadratic_other;
    IntPoly distinct{1};
    for (const auto& f : factors) distinct *= f.poly;
    const auto intervals = isolate_real_roots(distinct, opts.initial_bits);
    if (intervals.empty()) return out;
    const DyadicInterval& top = intervals.back();
    const auto owner = std::find_if(factors.begin(), factors.end(),
                                    [&](const Factor& f) { return has_root_in(f.poly, top); });
    if (owner == factors.end()) return out;
    const auto& c = owner->poly.coeffs();

    if (owner->poly.degree() == 1) {
        const mpz_class k = -c[0];
        if (k >= 2 && has_factor(factors, IntPoly({k, mpz_class(1)}))) {
            out.kind = SpectralKind::formI;
            out.c = k * k;
        }
        return out;
    }
    const mpz_class a = -c[1];
    const mpz_class b = c[0];
    if (a == 0) {
        if (-b >= 4) {
            out.kind = SpectralKind::formI;
            out.c = -b;
        }
        return out;
    }
    // lambda_1 = (a + sqrt(delta)) / 2 must exceed 2, as c >= 4 does in form I.
    const mpz_class delta = a * a - 4 * b;
    const bool above_two = a >= 4 || delta > (4 - a) * (4 - a);
    if (a > 0 && above_two && has_factor(factors, IntPoly({b, a, mpz_class(1)}))) {
        out.kind = SpectralKind::formII;
        out.a = a;
        out.b = b;
    }
    return out;
}

SpectralClass without_form(SpectralClass cls) {
    if (cls.kind == SpectralKind::formI || cls.kind == SpectralKind::formII)
        cls.kind = SpectralKind::proper_quadratic_other;
    cls.c.reset();
    cls.a.reset();
    cls.b.reset();
    return cls;
}

PathCycleVerdict classify_path_cycle(PathOrCycle kind, std::size_t n,
                                     const ClassifierOptions& opts) {
    if (kind == PathOrCycle::path && n < 1) throw InvalidParams("path needs at least 1 vertex");
    if (kind == PathOrCycle::cycle && n < 3) throw InvalidParams("cycle needs at least 3 vertices");
    const std::uint64_t modulus = kind == PathOrCycle::path ? n + 1 : n;
    PathCycleVerdict v;
    v.phi_degree = std::max<std::uint64_t>(1, euler_phi(modulus) / 2);
    if (v.phi_degree > 2) return v;
    const IntPoly poly = kind == PathOrCycle::path ? path_charpoly(n) : cycle_charpoly(n);
    v.certificate = decompose_deg_le2(poly, opts);
    v.quadratic = v.certificate->accepting();
    return v;
}

std::array<double, 3> eigen_extremes(const IntPoly& p) {
    if (p.degree() < 3) throw InvalidParams("eigen_extremes needs degree at least 3");
    const auto roots = real_roots(p, 40UL);
    std::array<double, 3> top{};
    std::size_t filled = 0;
    for (auto it = roots.rbegin(); it != roots.rend() && filled < 3; ++it)
        for (unsigned m = 0; m < it->multiplicity && filled < 3; ++m) top[filled++] = it->value();
    return top;
}

}  // namespace quadstar

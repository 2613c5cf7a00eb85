#include "quadstar/search.hpp"

#include "quadstar/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace quadstar {

namespace {

void extend(std::vector<unsigned>& legs, std::size_t budget, unsigned min_degree, unsigned degree,
            std::vector<StarlikeSpec>& out) {
    if (!legs.empty() && legs.back() != 0 && degree >= min_degree) out.emplace_back(legs);
    const std::size_t len = legs.size() + 1;
    if (len > budget) return;
    for (std::size_t n = 0; n * len <= budget; ++n) {
        legs.push_back(static_cast<unsigned>(n));
        extend(legs, budget - n * len, min_degree, degree + static_cast<unsigned>(n), out);
        legs.pop_back();
    }
}

struct SpecResult {
    SpectralClass cls;
    std::optional<FamilyInstance> family;
    std::array<double, 3> top{};
    std::size_t diameter = 0;
};

constexpr double eps = 1e-9;

SpecResult examine(const StarlikeSpec& spec, const ClassifierOptions& opts) {
    SpecResult r;
    const IntPoly f = starlike_charpoly(spec);
    try {
        r.cls = classify_poly(f, opts);
    } catch (const PrecisionExhausted& e) {
        throw PrecisionExhausted("spec (" + spec.to_string() + "): " + e.what());
    }
    r.top = eigen_extremes(f);
    r.family = match_family(spec);
    r.diameter = tree_diameter(build_starlike(spec));
    return r;
}

bool form_agrees(const FamilyInstance& fam, const SpectralClass& cls) {
    if (is_form_one(fam.id)) {
        if (cls.kind == SpectralKind::integral) return fam.integral;
        return cls.kind == SpectralKind::formI && cls.c && *cls.c == fam.params.at("c");
    }
    return cls.kind == SpectralKind::formII && *cls.a == fam.params.at("a") && *cls.b == fam.params.at("b");
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12f", v);
    return buf;
}

}  // namespace

std::vector<StarlikeSpec> enumerate_specs(std::size_t max_vertices, unsigned min_center_degree) {
    std::vector<StarlikeSpec> out;
    if (max_vertices < 2) return out;
    std::vector<unsigned> legs;
    extend(legs, max_vertices - 1, min_center_degree, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

CertificationReport certify(std::size_t max_vertices, unsigned threads, const ClassifierOptions& opts) {
    const auto specs = enumerate_specs(max_vertices);
    std::vector<SpecResult> results(specs.size());

    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(specs.size(), 1)));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto work = [&] {
        for (std::size_t i = next++; i < specs.size(); i = next++) {
            try {
                results[i] = examine(specs[i], opts);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = specs.size();
            }
        }
    };
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);

    CertificationReport rep;
    rep.max_vertices = max_vertices;
    rep.total_specs = specs.size();
    const double sqrt3 = std::sqrt(3.0);
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const StarlikeSpec& spec = specs[i];
        SpecResult& r = results[i];
        const auto violate = [&](std::string check, std::string detail) {
            rep.violations.push_back({spec, std::move(check), std::move(detail)});
        };
        if (!(r.top[1] < 2 - eps)) violate("lambda2 < 2", "lambda2 = " + fmt(r.top[1]));

        const bool quadratic = r.cls.certificate.accepting();
        const bool boundary = spec == StarlikeSpec({3});
        if (!quadratic) {
            if (r.family)
                rep.counterexamples.push_back(
                    {spec, "matches " + std::string(to_string(r.family->id)) + " but is not quadratic"});
            continue;
        }
        if (!r.family && !boundary) {
            rep.counterexamples.push_back({spec, "quadratic but matches no family"});
        }

        if (!boundary && !(r.top[0] >= 2 - eps)) violate("lambda1 >= 2", "lambda1 = " + fmt(r.top[0]));
        if (r.diameter > 14) violate("diameter <= 14", "diameter = " + std::to_string(r.diameter));
        if (spec.longest_leg() >= 6)
            violate("no leg P_k with k >= 6", "longest leg " + std::to_string(spec.longest_leg()));
        if (r.cls.kind == SpectralKind::formI && !(r.top[1] <= sqrt3 + eps))
            violate("form I lambda2 <= sqrt 3", "lambda2 = " + fmt(r.top[1]));
        if (r.cls.kind == SpectralKind::formII && !(r.top[2] <= sqrt3 + eps))
            violate("form II lambda3 <= sqrt 3", "lambda3 = " + fmt(r.top[2]));
        if (r.family) {
            if (r.family->predicted_charpoly() != r.cls.certificate.product())
                violate("closed form", "table polynomial differs from the characteristic polynomial");
            if (!form_agrees(*r.family, r.cls))
                violate("form", std::string(to_string(r.cls.kind)) + " does not fit row " +
                                    std::string(to_string(r.family->id)));
            if (r.family->delta_squarefree == false) {
                const mpz_class a = r.family->params.at("a"), b = r.family->params.at("b");
                const mpz_class& d = *r.family->delta;
                rep.discrepancy_notes.push_back(
                    {spec, std::string(to_string(r.family->id)), a, b, d,
                     "T_{" + spec.to_string() + "} is quadratic of form II with a = " + a.get_str() +
                         ", b = " + b.get_str() + ": delta = " + d.get_str() +
                         " is not squarefree but is not a perfect square, so both quadratic "
                         "factors are irreducible"});
            }
        }

        QuadraticSpec q;
        q.spec = spec;
        q.tag = r.family ? std::string(to_string(r.family->id)) : std::string(k13_tag);
        q.cls = std::move(r.cls);
        q.family = std::move(r.family);
        q.top_eigenvalues = r.top;
        q.diameter = r.diameter;
        rep.quadratic_specs.push_back(std::move(q));
    }
    return rep;
}

std::vector<FamilyInstance> reproduce_table7(long max_n5) {
    std::vector<FamilyInstance> out;
    if (max_n5 < 2) return out;
    mpz_class bound;
    mpz_sqrt(bound.get_mpz_t(), mpz_class(2 * max_n5 + 3).get_mpz_t());
    const long limit = bound.get_si();
    for (long b = -limit; b <= limit; ++b) {
        if (b % 2 == 0) continue;
        const long n5 = (b * b - 3) / 2;
        if (n5 < 2 || n5 > max_n5) continue;
        mpz_class twice_a2 = mpz_class((b + 2) * (b + 2) + 1);
        if (twice_a2 % 2 != 0) continue;
        const mpz_class a2 = twice_a2 / 2;
        mpz_class a;
        mpz_sqrt(a.get_mpz_t(), a2.get_mpz_t());
        if (a * a != a2) continue;
        out.push_back(instantiate(FamilyId::T_00100n5, {{"a", a.get_si()}, {"b", b}}));
    }
    std::sort(out.begin(), out.end(), [](const FamilyInstance& x, const FamilyInstance& y) {
        return x.params.at("n5") < y.params.at("n5");
    });
    return out;
}

}  // namespace quadstar

#pragma once

// Exact decision of whether a polynomial splits over Z into factors of
// degree at most two, with a certificate that can be re-multiplied.

#include "quadstar/polyring.hpp"

#include <gmpxx.h>

#include <array>
#include <optional>
#include <string_view>

namespace quadstar {

struct ClassifierOptions {
    /// Width of the first root enclosures, as 2^-bits.
    unsigned long initial_bits = 64;
    /// How many times the precision may be doubled before giving up.
    unsigned max_doublings = 8;

    /// Defaults, with initial_bits taken from QUADSTAR_PRECISION_BITS if set.
    static ClassifierOptions from_environment();
};

/// product(factors^multiplicity) * residual == input, exactly.
/// Accepting iff residual == 1. Quadratic factors are irreducible; a
/// quadratic with integer roots is always reported as two linear factors.
struct QuadraticCertificate {
    FactoredPoly factors;
    IntPoly residual{1};

    bool accepting() const { return residual.is_one(); }
    IntPoly product() const;
};

QuadraticCertificate decompose_deg_le2(const IntPoly& p, const ClassifierOptions& opts = {});

enum class SpectralKind { integral, formI, formII, proper_quadratic_other, non_quadratic };

std::string_view to_string(SpectralKind kind);

struct SpectralClass {
    SpectralKind kind = SpectralKind::non_quadratic;
    QuadraticCertificate certificate;
    /// formI: lambda_1 is a root of x^2 - c.
    std::optional<mpz_class> c;
    /// formII: lambda_1 is a root of x^2 - a x + b, a > 0.
    std::optional<mpz_class> a;
    std::optional<mpz_class> b;

    /// a^2 - 4b, formII only.
    std::optional<mpz_class> delta() const;
    std::optional<bool> delta_squarefree() const;
};

/// Intended for characteristic polynomials of trees containing K_{1,3}.
/// Form I needs lambda_1 a root of x^2 - c with c >= 4; form II needs
/// lambda_1 > 2 a root of x^2 - ax + b, a > 0, with x^2 + ax + b present.
SpectralClass classify_poly(const IntPoly& p, const ClassifierOptions& opts = {});

/// Forms I and II only make sense for starlike trees; other graphs keep
/// just integral / proper_quadratic_other / non_quadratic.
SpectralClass without_form(SpectralClass cls);

enum class PathOrCycle { path, cycle };

struct PathCycleVerdict {
    bool quadratic = false;
    /// 1/2 phi(n+1) for paths, 1/2 phi(n) for cycles: the degree of the
    /// second-largest eigenvalue. Reported as 1 when the modulus is <= 2.
    std::uint64_t phi_degree = 0;
    /// Present whenever the bound did not already exclude quadraticity.
    std::optional<QuadraticCertificate> certificate;
};

PathCycleVerdict classify_path_cycle(PathOrCycle kind, std::size_t n,
                                     const ClassifierOptions& opts = {});

/// The three largest roots, counted with multiplicity, to within 1e-9.
/// Requires degree >= 3 and only real roots.
std::array<double, 3> eigen_extremes(const IntPoly& p);

}  // namespace quadstar

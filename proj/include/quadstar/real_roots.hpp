#pragma once

// Certified real-root isolation for integer polynomials.
//
// Roots are enclosed in closed dyadic intervals [lo/2^scale, hi/2^scale]
// whose endpoints are exact. Isolation runs Sturm sequences on the
// squarefree part and refines by exact sign bisection, so nothing in the
// decision path depends on floating point.

#include "quadstar/polyring.hpp"

#include <gmpxx.h>

#include <vector>

namespace quadstar {

/// Closed interval [lo / 2^scale, hi / 2^scale] with lo <= hi.
struct DyadicInterval {
    mpz_class lo;
    mpz_class hi;
    unsigned long scale = 0;

    bool is_point() const { return lo == hi; }
    /// Same interval expressed at a finer scale.
    DyadicInterval rescaled(unsigned long new_scale) const;
    double midpoint() const;
    double width() const;
};

struct RealRoot {
    DyadicInterval enclosure;
    unsigned multiplicity = 1;

    double value() const { return enclosure.midpoint(); }
    /// Half-width of the enclosure: |true root - value()| <= error_bound().
    double error_bound() const { return enclosure.width() / 2; }
};

/// Sturm sequence of a squarefree polynomial, scaled by positive constants.
class SturmSequence {
public:
    explicit SturmSequence(const IntPoly& squarefree);

    /// Distinct roots in the half-open interval (a, b], a <= b, both given
    /// as numerators over 2^scale.
    unsigned count(const mpz_class& a, const mpz_class& b, unsigned long scale) const;

private:
    unsigned variations(const mpz_class& x, unsigned long scale) const;
    std::vector<IntPoly> seq_;
};

/// 2^k strictly exceeding the modulus of every complex root (Cauchy bound).
mpz_class root_bound_pow2(const IntPoly& p, unsigned long& exponent);

/// Disjoint enclosures of the distinct real roots of a squarefree p,
/// ascending, each of width at most 2^-bits. Roots that are dyadic numbers
/// may come back as point intervals.
std::vector<DyadicInterval> isolate_real_roots(const IntPoly& squarefree, unsigned long bits);

/// All real roots of p with multiplicities recovered from the squarefree
/// decomposition. Throws NonRealRoots when p has non-real roots.
std::vector<RealRoot> real_roots(const IntPoly& p, unsigned long bits);

/// Same, with the precision given as a positive absolute tolerance.
std::vector<RealRoot> real_roots(const IntPoly& p, double tolerance);

/// Whether the squarefree polynomial q has a root inside the closed interval.
bool has_root_in(const IntPoly& squarefree, const DyadicInterval& iv);

}  // namespace quadstar

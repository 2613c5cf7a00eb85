#pragma once

// Exhaustive classification of small starlike trees, cross-checked against
// the family rows, and the Pell-driven T_{0,0,1,0,n5} instances.

#include "quadstar/classifier.hpp"
#include "quadstar/families.hpp"
#include "quadstar/graphs.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace quadstar {

/// Canonical specs on at most max_vertices vertices with center degree at
/// least min_center_degree, in lexicographic order of leg counts.
std::vector<StarlikeSpec> enumerate_specs(std::size_t max_vertices, unsigned min_center_degree = 3);

inline constexpr std::string_view k13_tag = "boundary_K13";

struct QuadraticSpec {
    StarlikeSpec spec;
    SpectralClass cls;
    std::optional<FamilyInstance> family;
    /// Family tag, or boundary_K13 for the star on four vertices.
    std::string tag;
    std::array<double, 3> top_eigenvalues{};
    std::size_t diameter = 0;
};

struct Counterexample {
    StarlikeSpec spec;
    std::string reason;
};

/// A side condition that failed; each one should be impossible.
struct Violation {
    StarlikeSpec spec;
    std::string check;
    std::string detail;
};

/// A quadratic instance whose a^2 - 4b is not squarefree.
struct DiscrepancyNote {
    StarlikeSpec spec;
    std::string tag;
    mpz_class a;
    mpz_class b;
    mpz_class delta;
    std::string text;
};

struct CertificationReport {
    std::size_t max_vertices = 0;
    std::size_t total_specs = 0;
    std::vector<QuadraticSpec> quadratic_specs;
    std::vector<Counterexample> counterexamples;
    std::vector<Violation> violations;
    std::vector<DiscrepancyNote> discrepancy_notes;

    bool clean() const { return counterexamples.empty() && violations.empty(); }
};

/// Classifies every spec, matches it against the nine rows and checks the
/// spectral side conditions. threads == 0 picks the hardware concurrency.
/// The report does not depend on the thread count.
CertificationReport certify(std::size_t max_vertices, unsigned threads = 1,
                            const ClassifierOptions& opts = ClassifierOptions::from_environment());

/// T_{0,0,1,0,n5} instances with n5 <= max_n5, ascending in n5.
std::vector<FamilyInstance> reproduce_table7(long max_n5);

}  // namespace quadstar

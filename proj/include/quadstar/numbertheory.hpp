#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace quadstar {

/// Euler's totient by trial-division factorisation; phi(1) = 1.
std::uint64_t euler_phi(std::uint64_t n);

/// No prime square divides |n|. Trial division, so meant for the small
/// discriminants that occur here. Throws std::invalid_argument for n = 0.
bool is_squarefree(const mpz_class& n);

bool is_perfect_square(const mpz_class& n);

/// Positive solution of x^2 - N y^2 = -1.
struct PellSolution {
    mpz_class x;
    mpz_class y;
    mpz_class N;

    bool satisfies() const { return x * x - N * y * y == -1; }
    friend bool operator==(const PellSolution&, const PellSolution&) = default;
};

/// First `count` positive solutions in increasing order. The least one
/// comes from the continued fraction of sqrt(N); later ones are odd powers
/// (x1 + y1 sqrt N)^(2k-1). Throws NoSolution when the period of sqrt(N) is
/// even (or N is a perfect square) and InvalidParams when N is not squarefree.
std::vector<PellSolution> pell_negative(const mpz_class& N, std::size_t count);

/// y^2 - 4(x - 2) for a solution of x^2 - 2y^2 = -1.
mpz_class pell_discriminant(const PellSolution& s);

}  // namespace quadstar

#include "quadstar/numbertheory.hpp"

#include "quadstar/errors.hpp"

#include <stdexcept>

namespace quadstar {

std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("phi(0) is undefined");
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

bool is_squarefree(const mpz_class& n) {
    mpz_class m = abs(n);
    if (m == 0) throw std::invalid_argument("squarefreeness of 0 is undefined");
    for (mpz_class p = 2; p * p <= m; ++p) {
        if (!mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) continue;
        m /= p;
        if (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) return false;
    }
    return true;
}

bool is_perfect_square(const mpz_class& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

std::vector<PellSolution> pell_negative(const mpz_class& N, std::size_t count) {
    if (N <= 0) throw InvalidParams("Pell parameter N must be positive");
    if (!is_squarefree(N)) throw InvalidParams("Pell parameter N=" + N.get_str() + " is not squarefree");
    if (is_perfect_square(N))
        throw NoSolution("x^2 - " + N.get_str() + " y^2 = -1 has no positive solution");

    // Continued fraction of sqrt(N): a_{k+1} = floor((a0 + m)/d), tracking
    // convergents p/q until the period closes at a_k = 2 a0.
    mpz_class a0 = sqrt(N);
    mpz_class m = 0, d = 1, a = a0;
    mpz_class p_prev = 1, p = a0, q_prev = 0, q = 1;
    std::size_t period = 0;
    for (;;) {
        m = d * a - m;
        d = (N - m * m) / d;
        a = (a0 + m) / d;
        ++period;
        if (a == 2 * a0) break;
        mpz_class pn = a * p + p_prev, qn = a * q + q_prev;
        p_prev = p;
        q_prev = q;
        p = pn;
        q = qn;
    }
    if (period % 2 == 0)
        throw NoSolution("x^2 - " + N.get_str() + " y^2 = -1 is unsolvable (even period " +
                         std::to_string(period) + ")");

    std::vector<PellSolution> out;
    if (count == 0) return out;
    out.push_back({p, q, N});
    // (x + y sqrt N) * (u + v sqrt N) with u + v sqrt N = (x1 + y1 sqrt N)^2.
    const mpz_class u = p * p + N * q * q;
    const mpz_class v = 2 * p * q;
    while (out.size() < count) {
        const auto& last = out.back();
        out.push_back({last.x * u + N * last.y * v, last.x * v + last.y * u, N});
    }
    return out;
}

mpz_class pell_discriminant(const PellSolution& s) { return s.y * s.y - 4 * (s.x - 2); }

}  // namespace quadstar

#pragma once

// Dense univariate polynomials over Z with GMP coefficients.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace quadstar {

/// Polynomial with arbitrary-precision integer coefficients, stored in
/// ascending order of degree. The zero polynomial has no coefficients and
/// the highest stored coefficient is never zero.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(const mpz_class& c);
    /// c * x^k
    static IntPoly monomial(const mpz_class& c, std::size_t k);
    static IntPoly x() { return monomial(1, 1); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
    /// Coefficient of x^i, zero past the degree.
    mpz_class coeff(std::size_t i) const;
    const mpz_class& leading() const;
    bool is_monic() const { return !is_zero() && leading() == 1; }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

    IntPoly derivative() const;
    /// Non-negative gcd of the coefficients (0 for the zero polynomial).
    mpz_class content() const;
    /// this / content, sign-normalised to a positive leading coefficient.
    IntPoly primitive_part() const;
    /// p(-x)
    IntPoly reflect() const;
    /// Exact division of every coefficient by d; d must divide the content.
    IntPoly divide_scalar_exact(const mpz_class& d) const;
    /// Largest k with x^k dividing this; the zero polynomial has none and throws.
    std::size_t x_valuation() const;

    mpz_class operator()(const mpz_class& x) const;
    /// Sign of p(num / 2^scale), computed exactly.
    int sign_at_dyadic(const mpz_class& num, unsigned long scale) const;

    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    IntPoly& operator*=(const IntPoly& rhs);
    IntPoly& operator*=(const mpz_class& s);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(IntPoly a, const mpz_class& s) { return a *= s; }
    friend IntPoly operator*(const mpz_class& s, IntPoly a) { return a *= s; }
    friend IntPoly operator-(IntPoly a);
    friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

    /// Human-readable form in descending powers, e.g. "x^4 - 3*x^2 + 1".
    std::string to_string() const;

private:
    void normalize();
    std::vector<mpz_class> coeffs_;
};

IntPoly pow(const IntPoly& base, unsigned long exponent);

/// q with num = den * q over Z, or nullopt when no such q exists.
/// Throws ZeroDivisor when den is zero.
std::optional<IntPoly> exact_div(const IntPoly& num, const IntPoly& den);

/// lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Primitive gcd with positive leading coefficient, via the subresultant
/// remainder sequence. Not both arguments may be zero.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// p / gcd(p, p'), primitive with positive leading coefficient.
IntPoly squarefree_part(const IntPoly& p);

struct Factor {
    IntPoly poly;
    unsigned multiplicity = 1;

    friend bool operator==(const Factor&, const Factor&) = default;
};

using FactoredPoly = std::vector<Factor>;

/// Squarefree decomposition p = unit * prod f_i^i of a nonzero polynomial.
/// Only factors of positive degree are returned, primitive with positive
/// leading coefficients, ordered by multiplicity; for monic p the product
/// reproduces p exactly.
FactoredPoly squarefree_decomposition(const IntPoly& p);

/// Number of times `factor` divides `p` exactly. `factor` must have
/// positive degree and p must be nonzero.
unsigned multiplicity_of(const IntPoly& p, const IntPoly& factor);

IntPoly expand(const FactoredPoly& factors);

/// Canonical order: ascending degree, ties by ascending coefficient sequence.
bool factor_order(const IntPoly& a, const IntPoly& b);
void canonicalize(FactoredPoly& factors);

/// "x^2 * (x^2 - 3)"; the empty product prints as "1".
std::string to_factored_string(const FactoredPoly& factors);

}  // namespace quadstar

#include "quadstar/polyring.hpp"

#include "quadstar/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace quadstar {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

IntPoly IntPoly::constant(const mpz_class& c) { return IntPoly(std::vector<mpz_class>{c}); }

IntPoly IntPoly::monomial(const mpz_class& c, std::size_t k) {
    std::vector<mpz_class> v(k + 1);
    v[k] = c;
    return IntPoly(std::move(v));
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpz_class(0); }

const mpz_class& IntPoly::leading() const {
    if (coeffs_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

IntPoly IntPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<mpz_class> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(d));
}

mpz_class IntPoly::content() const {
    mpz_class g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return {};
    mpz_class g = content();
    if (leading() < 0) g = -g;
    return divide_scalar_exact(g);
}

IntPoly IntPoly::reflect() const {
    IntPoly r = *this;
    for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
    return r;
}

IntPoly IntPoly::divide_scalar_exact(const mpz_class& d) const {
    if (d == 0) throw ZeroDivisor("scalar division by zero");
    IntPoly r = *this;
    if (d == 1) return r;
    for (auto& c : r.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    return r;
}

std::size_t IntPoly::x_valuation() const {
    if (is_zero()) throw std::invalid_argument("x-adic valuation of the zero polynomial");
    std::size_t k = 0;
    while (coeffs_[k] == 0) ++k;
    return k;
}

mpz_class IntPoly::operator()(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int IntPoly::sign_at_dyadic(const mpz_class& num, unsigned long scale) const {
    if (is_zero()) return 0;
    // 2^(scale*deg) * p(num/2^scale) = sum c_i num^i 2^(scale*(deg-i)), by Horner.
    mpz_class acc = coeffs_.back();
    mpz_class term;
    const std::size_t d = coeffs_.size() - 1;
    for (std::size_t k = 1; k <= d; ++k) {
        acc *= num;
        mpz_mul_2exp(term.get_mpz_t(), coeffs_[d - k].get_mpz_t(), scale * k);
        acc += term;
    }
    return sgn(acc);
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
    return IntPoly(std::move(r));
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) { return *this = *this * rhs; }

IntPoly& IntPoly::operator*=(const mpz_class& s) {
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
}

IntPoly operator-(IntPoly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const mpz_class& c = coeffs_[k];
        if (c == 0) continue;
        mpz_class mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        const bool unit = mag == 1;
        if (k == 0) {
            out += mag.get_str();
            continue;
        }
        if (!unit) out += mag.get_str() + "*";
        out += "x";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

IntPoly pow(const IntPoly& base, unsigned long exponent) {
    IntPoly result{1};
    IntPoly b = base;
    while (exponent) {
        if (exponent & 1UL) result *= b;
        exponent >>= 1;
        if (exponent) b *= b;
    }
    return result;
}

std::optional<IntPoly> exact_div(const IntPoly& num, const IntPoly& den) {
    if (den.is_zero()) throw ZeroDivisor("polynomial division by zero");
    if (num.is_zero()) return IntPoly{};
    if (num.degree() < den.degree()) return std::nullopt;

    std::vector<mpz_class> rem = num.coeffs();
    const auto& d = den.coeffs();
    const std::size_t dd = d.size() - 1;
    const mpz_class& lc = d.back();
    std::vector<mpz_class> q(rem.size() - dd);

    for (std::size_t k = q.size(); k-- > 0;) {
        mpz_class& top = rem[k + dd];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
        mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
        for (std::size_t j = 0; j <= dd; ++j)
            mpz_submul(rem[k + j].get_mpz_t(), q[k].get_mpz_t(), d[j].get_mpz_t());
    }
    for (std::size_t i = 0; i < dd; ++i)
        if (rem[i] != 0) return std::nullopt;
    return IntPoly(std::move(q));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw ZeroDivisor("pseudo-remainder by zero");
    if (a.degree() < b.degree()) return a;
    const int delta = a.degree() - b.degree();
    const mpz_class& lc = b.leading();
    IntPoly r = a;
    int steps = 0;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const auto shift = static_cast<std::size_t>(r.degree() - b.degree());
        IntPoly t = IntPoly::monomial(r.leading(), shift) * b;
        r *= lc;
        r -= t;
        ++steps;
    }
    mpz_class fix;
    mpz_pow_ui(fix.get_mpz_t(), lc.get_mpz_t(), static_cast<unsigned long>(delta + 1 - steps));
    return r * fix;
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd(0, 0) is undefined");
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();

    IntPoly A = a.primitive_part();
    IntPoly B = b.primitive_part();
    if (A.degree() < B.degree()) std::swap(A, B);

    mpz_class g = 1, h = 1;
    for (;;) {
        const int delta = A.degree() - B.degree();
        IntPoly R = pseudo_remainder(A, B);
        if (R.is_zero()) return B.primitive_part();
        if (R.degree() == 0) return IntPoly{1};

        mpz_class hpow;
        mpz_pow_ui(hpow.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
        A = std::move(B);
        B = R.divide_scalar_exact(g * hpow);
        g = A.leading();
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            mpz_class num, den;
            mpz_pow_ui(num.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
            mpz_pow_ui(den.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
    }
}

IntPoly squarefree_part(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree part of the zero polynomial");
    const IntPoly prim = p.primitive_part();
    if (prim.degree() <= 0) return IntPoly{1};
    const IntPoly g = gcd(prim, prim.derivative());
    return exact_div(prim, g).value();
}

FactoredPoly squarefree_decomposition(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of the zero polynomial");
    FactoredPoly out;
    const IntPoly prim = p.primitive_part();
    if (prim.degree() <= 0) return out;

    // Musser: c holds the product of irreducibles of multiplicity >= i,
    // g the cofactor still to be peeled.
    IntPoly g = gcd(prim, prim.derivative());
    IntPoly c = exact_div(prim, g).value();
    for (unsigned i = 1; c.degree() > 0; ++i) {
        IntPoly y = gcd(c, g);
        IntPoly f = exact_div(c, y).value();
        if (f.degree() > 0) out.push_back({f.primitive_part(), i});
        g = exact_div(g, y).value();
        c = std::move(y);
    }
    return out;
}

unsigned multiplicity_of(const IntPoly& p, const IntPoly& factor) {
    if (factor.degree() < 1) throw std::invalid_argument("multiplicity of a constant factor");
    if (p.is_zero()) throw std::invalid_argument("multiplicity in the zero polynomial");
    unsigned m = 0;
    IntPoly cur = p;
    while (auto q = exact_div(cur, factor)) {
        cur = std::move(*q);
        ++m;
    }
    return m;
}

IntPoly expand(const FactoredPoly& factors) {
    IntPoly r{1};
    for (const auto& f : factors) r *= pow(f.poly, f.multiplicity);
    return r;
}

bool factor_order(const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(),
                                        b.coeffs().end());
}

void canonicalize(FactoredPoly& factors) {
    std::sort(factors.begin(), factors.end(),
              [](const Factor& l, const Factor& r) { return factor_order(l.poly, r.poly); });
    FactoredPoly merged;
    for (auto& f : factors) {
        if (f.multiplicity == 0 || f.poly.is_one()) continue;
        if (!merged.empty() && merged.back().poly == f.poly)
            merged.back().multiplicity += f.multiplicity;
        else
            merged.push_back(std::move(f));
    }
    factors = std::move(merged);
}

std::string to_factored_string(const FactoredPoly& factors) {
    std::string out;
    for (const auto& f : factors) {
        if (f.multiplicity == 0) continue;
        if (!out.empty()) out += " * ";
        const bool bare = f.poly == IntPoly::x();
        out += bare ? "x" : "(" + f.poly.to_string() + ")";
        if (f.multiplicity > 1) out += "^" + std::to_string(f.multiplicity);
    }
    return out.empty() ? "1" : out;
}

}  // namespace quadstar

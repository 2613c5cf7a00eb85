#include "quadstar/real_roots.hpp"

#include "quadstar/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace quadstar {

namespace {

mpz_class pow2(unsigned long k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
    return r;
}

// Divides by the positive content only; the sign must survive.
IntPoly shrink_keep_sign(const IntPoly& p) {
    if (p.is_zero()) return p;
    return p.divide_scalar_exact(p.content());
}

}  // namespace

DyadicInterval DyadicInterval::rescaled(unsigned long new_scale) const {
    if (new_scale < scale) throw std::invalid_argument("rescale to a coarser dyadic scale");
    DyadicInterval r{lo, hi, new_scale};
    mpz_mul_2exp(r.lo.get_mpz_t(), lo.get_mpz_t(), new_scale - scale);
    mpz_mul_2exp(r.hi.get_mpz_t(), hi.get_mpz_t(), new_scale - scale);
    return r;
}

double DyadicInterval::midpoint() const {
    mpq_class q(lo + hi, pow2(scale + 1));
    q.canonicalize();
    return q.get_d();
}

double DyadicInterval::width() const {
    mpq_class q(hi - lo, pow2(scale));
    q.canonicalize();
    return q.get_d();
}

SturmSequence::SturmSequence(const IntPoly& squarefree) {
    if (squarefree.is_zero()) throw std::invalid_argument("Sturm sequence of the zero polynomial");
    seq_.push_back(shrink_keep_sign(squarefree));
    if (squarefree.degree() == 0) return;
    seq_.push_back(shrink_keep_sign(squarefree.derivative()));
    for (;;) {
        const IntPoly& prev = seq_[seq_.size() - 2];
        const IntPoly& cur = seq_.back();
        if (cur.degree() <= 0) break;
        IntPoly r = pseudo_remainder(prev, cur);
        // prem multiplies by lc^(delta+1); flip when that factor is negative.
        const int delta = prev.degree() - cur.degree();
        if (cur.leading() < 0 && (delta + 1) % 2 != 0) r = -r;
        if (r.is_zero()) break;
        seq_.push_back(shrink_keep_sign(-r));
    }
}

unsigned SturmSequence::variations(const mpz_class& x, unsigned long scale) const {
    unsigned changes = 0;
    int last = 0;
    for (const auto& s : seq_) {
        const int sg = s.sign_at_dyadic(x, scale);
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++changes;
        last = sg;
    }
    return changes;
}

unsigned SturmSequence::count(const mpz_class& a, const mpz_class& b, unsigned long scale) const {
    return variations(a, scale) - variations(b, scale);
}

mpz_class root_bound_pow2(const IntPoly& p, unsigned long& exponent) {
    if (p.degree() < 1) {
        exponent = 0;
        return 1;
    }
    mpz_class maxc = 0;
    for (int i = 0; i < p.degree(); ++i) {
        mpz_class a = abs(p.coeffs()[static_cast<std::size_t>(i)]);
        if (a > maxc) maxc = a;
    }
    mpz_class lc = abs(p.leading());
    mpz_class m;
    mpz_cdiv_q(m.get_mpz_t(), maxc.get_mpz_t(), lc.get_mpz_t());
    mpz_class bound = m + 1;
    exponent = mpz_sizeinbase(bound.get_mpz_t(), 2);
    return pow2(exponent);
}

namespace {

void bisect_isolate(const SturmSequence& sturm, const mpz_class& lo, const mpz_class& hi,
                    unsigned long scale, unsigned n, std::vector<DyadicInterval>& out) {
    if (n == 0) return;
    if (n == 1) {
        out.push_back({lo, hi, scale});
        return;
    }
    const mpz_class l2 = lo * 2, h2 = hi * 2, mid = lo + hi;
    const unsigned nl = sturm.count(l2, mid, scale + 1);
    bisect_isolate(sturm, l2, mid, scale + 1, nl, out);
    bisect_isolate(sturm, mid, h2, scale + 1, n - nl, out);
}

bool narrow_enough(const DyadicInterval& iv, unsigned long bits) {
    mpz_class w = iv.hi - iv.lo;
    mpz_mul_2exp(w.get_mpz_t(), w.get_mpz_t(), bits);
    return w <= pow2(iv.scale);
}

// iv is (lo, hi] containing exactly one root of p.
DyadicInterval refine(const IntPoly& p, const SturmSequence& sturm, DyadicInterval iv,
                      unsigned long bits) {
    if (p.sign_at_dyadic(iv.hi, iv.scale) == 0) return {iv.hi, iv.hi, iv.scale};

    // The left endpoint may be a neighbouring root; move off it using counts.
    while (p.sign_at_dyadic(iv.lo, iv.scale) == 0) {
        DyadicInterval next = iv.rescaled(iv.scale + 1);
        mpz_class mid = iv.lo + iv.hi;
        if (p.sign_at_dyadic(mid, next.scale) == 0) return {mid, mid, next.scale};
        if (sturm.count(next.lo, mid, next.scale) == 1)
            next.hi = mid;
        else
            next.lo = mid;
        iv = std::move(next);
    }

    const int s_lo = p.sign_at_dyadic(iv.lo, iv.scale);
    while (!narrow_enough(iv, bits)) {
        DyadicInterval next = iv.rescaled(iv.scale + 1);
        mpz_class mid = iv.lo + iv.hi;
        const int s_mid = p.sign_at_dyadic(mid, next.scale);
        if (s_mid == 0) return {mid, mid, next.scale};
        if (s_mid == s_lo)
            next.lo = mid;
        else
            next.hi = mid;
        iv = std::move(next);
    }
    return iv;
}

}  // namespace

std::vector<DyadicInterval> isolate_real_roots(const IntPoly& squarefree, unsigned long bits) {
    std::vector<DyadicInterval> out;
    if (squarefree.degree() < 1) return out;
    const SturmSequence sturm(squarefree);
    unsigned long k = 0;
    const mpz_class bound = root_bound_pow2(squarefree, k);
    const mpz_class lo = -bound;
    const unsigned n = sturm.count(lo, bound, 0);

    std::vector<DyadicInterval> isolated;
    bisect_isolate(sturm, lo, bound, 0, n, isolated);
    out.reserve(isolated.size());
    for (auto& iv : isolated) out.push_back(refine(squarefree, sturm, std::move(iv), bits));
    return out;
}

bool has_root_in(const IntPoly& squarefree, const DyadicInterval& iv) {
    if (squarefree.degree() < 1) return false;
    if (squarefree.sign_at_dyadic(iv.lo, iv.scale) == 0) return true;
    if (iv.is_point()) return false;
    const SturmSequence sturm(squarefree);
    return sturm.count(iv.lo, iv.hi, iv.scale) > 0;
}

std::vector<RealRoot> real_roots(const IntPoly& p, unsigned long bits) {
    if (p.is_zero()) throw std::invalid_argument("real roots of the zero polynomial");
    const FactoredPoly parts = squarefree_decomposition(p);
    IntPoly sqf{1};
    for (const auto& f : parts) sqf *= f.poly;

    const auto intervals = isolate_real_roots(sqf, bits);
    if (static_cast<int>(intervals.size()) < sqf.degree())
        throw NonRealRoots("polynomial " + p.to_string() + " has " +
                           std::to_string(sqf.degree() - static_cast<int>(intervals.size())) +
                           " non-real roots");

    std::vector<RealRoot> roots;
    roots.reserve(intervals.size());
    for (const auto& iv : intervals) {
        unsigned mult = 0;
        for (const auto& f : parts) {
            if (has_root_in(f.poly, iv)) {
                mult = f.multiplicity;
                break;
            }
        }
        roots.push_back({iv, mult});
    }
    return roots;
}

std::vector<RealRoot> real_roots(const IntPoly& p, double tolerance) {
    if (!(tolerance > 0)) throw std::invalid_argument("root tolerance must be positive");
    const double b = std::ceil(-std::log2(tolerance)) + 1;
    return real_roots(p, static_cast<unsigned long>(b < 1 ? 1 : b));
}

}  // namespace quadstar

#include "kstab/root_isolation.h"

#include <algorithm>
#include <stdexcept>

namespace kstab {

namespace {

// Sign changes in the coefficient sequence of (1+x)^n q(1/(1+x)); bounds the
// number of roots of q in (0, 1) and is exact when it returns 0 or 1.
int descartes_bound_01(const Polynomial& q01) {
    const int n = q01.degree();
    std::vector<Rational> rev(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) rev[static_cast<std::size_t>(i)] = q01.coeff(static_cast<std::size_t>(n - i));
    const Polynomial shifted = Polynomial(std::move(rev)).compose_affine(Rational(1), Rational(1));
    int changes = 0;
    int last = 0;
    for (const auto& c : shifted.coefficients()) {
        const int s = sgn(c);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

// Isolate the roots of a square-free f in the open interval (lo, hi);
// requires f(lo) != 0 and f(hi) != 0. Rational roots hit at bisection
// midpoints come out as degenerate [m, m] intervals.
void isolate_open(const Polynomial& f, const Rational& lo, const Rational& hi,
                  std::vector<RootInterval>& out, int depth) {
    if (depth > 512) throw std::logic_error("root isolation: bisection depth exceeded");
    const Polynomial q01 = f.compose_affine(lo, hi - lo);
    const int bound = descartes_bound_01(q01);
    if (bound == 0) return;
    if (bound == 1) {
        out.push_back({lo, hi, 1});
        return;
    }
    const Rational m = (lo + hi) / 2;
    if (f.eval(m) == 0) out.push_back({m, m, 1});
    isolate_open(f, lo, m, out, depth + 1);
    isolate_open(f, m, hi, out, depth + 1);
}

// One bisection step on an isolating interval of the square-free f.
void shrink_step(const Polynomial& f, RootInterval& iv) {
    if (iv.lo == iv.hi) return;
    const Rational m = (iv.lo + iv.hi) / 2;
    const int sm = sgn(f.eval(m));
    if (sm == 0) {
        iv.lo = m;
        iv.hi = m;
        return;
    }
    if (sm == sgn(f.eval(iv.lo)))
        iv.lo = m;
    else
        iv.hi = m;
}

void refine_to(const Polynomial& f, RootInterval& iv, const Rational& resolution) {
    while (iv.hi - iv.lo > resolution) shrink_step(f, iv);
}

// Exact division by (x - r) for a known rational root r.
Polynomial divide_out_root(const Polynomial& f, const Rational& r) {
    return poly_exact_div(f, Polynomial::linear(-r, Rational(1)));
}

}  // namespace

std::vector<RootInterval> isolate_roots(const Polynomial& p, const Rational& a, const Rational& b,
                                        const Rational& resolution) {
    if (p.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
    if (a > b) throw std::domain_error("isolate_roots: a > b");
    if (resolution <= 0) throw std::domain_error("isolate_roots: resolution must be positive");

    const auto factors = square_free_decomposition(p);

    if (a == b) {
        for (const auto& [f, mult] : factors)
            if (f.eval(a) == 0) return {{a, a, mult}};
        return {};
    }

    struct FactorRoots {
        Polynomial f;
        int mult;
        std::vector<RootInterval> intervals;
    };
    std::vector<FactorRoots> per_factor;
    for (const auto& [f0, mult] : factors) {
        FactorRoots fr{f0, mult, {}};
        Polynomial f = f0;
        if (f.eval(a) == 0) {
            fr.intervals.push_back({a, a, mult});
            f = divide_out_root(f, a);
        }
        if (f.degree() >= 1 && f.eval(b) == 0) {
            fr.intervals.push_back({b, b, mult});
            f = divide_out_root(f, b);
        }
        if (f.degree() >= 1) {
            std::vector<RootInterval> open;
            isolate_open(f, a, b, open, 0);
            for (auto& iv : open) {
                refine_to(f, iv, resolution);
                iv.multiplicity = mult;
            }
            fr.intervals.insert(fr.intervals.end(), open.begin(), open.end());
        }
        fr.f = f;
        per_factor.push_back(std::move(fr));
    }

    // Roots of distinct square-free factors are distinct reals, so repeated
    // shrinking separates any colliding isolation intervals.
    for (int guard = 0; guard < 512; ++guard) {
        bool overlap = false;
        for (std::size_t i = 0; i < per_factor.size(); ++i) {
            for (std::size_t j = i + 1; j < per_factor.size(); ++j) {
                for (auto& u : per_factor[i].intervals) {
                    for (auto& v : per_factor[j].intervals) {
                        if (u.lo <= v.hi && v.lo <= u.hi) {
                            overlap = true;
                            shrink_step(per_factor[i].f, u);
                            shrink_step(per_factor[j].f, v);
                        }
                    }
                }
            }
        }
        if (!overlap) break;
        if (guard == 511) throw std::logic_error("isolate_roots: could not separate factor roots");
    }

    std::vector<RootInterval> all;
    for (auto& fr : per_factor)
        all.insert(all.end(), fr.intervals.begin(), fr.intervals.end());
    std::sort(all.begin(), all.end(), [](const RootInterval& u, const RootInterval& v) { return u.lo < v.lo; });
    return all;
}

NonnegativityReport is_nonnegative_on(const PiecewisePoly& p, const Rational& a, const Rational& b) {
    NonnegativityReport report;
    if (p.empty() || a > b || b < p.support_lo() || a > p.support_hi()) {
        report.identically_zero = true;
        return report;
    }
    const Rational lo = std::max(a, p.support_lo());
    const Rational hi = std::min(b, p.support_hi());
    if (lo == hi) {
        const Rational v = p.eval(lo);
        report.identically_zero = (v == 0);
        if (v < 0) {
            report.nonnegative = false;
            report.has_witness = true;
            report.witness_point = lo;
            report.witness_value = v;
        }
        return report;
    }

    const PiecewisePoly clipped = p.restricted(lo, hi);
    bool all_zero = true;
    for (std::size_t i = 0; i < clipped.piece_count(); ++i) {
        const Polynomial& q = clipped.pieces()[i];
        const Rational& plo = clipped.breakpoints()[i];
        const Rational& phi = clipped.breakpoints()[i + 1];
        PieceSignProof proof;
        proof.lo = plo;
        proof.hi = phi;
        if (q.is_zero()) {
            proof.piece_is_zero = true;
            proof.min_sample_value = 0;
            report.zero_on_subinterval = true;
            report.proofs.push_back(std::move(proof));
            continue;
        }
        all_zero = false;
        proof.roots = isolate_roots(q, plo, phi, (phi - plo) / 16);

        std::vector<Rational> pts{plo, phi};
        for (const auto& iv : proof.roots) {
            pts.push_back(iv.lo);
            pts.push_back(iv.hi);
        }
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        // Midpoints cover every root-free gap, where the sign is constant.
        const std::size_t base = pts.size();
        for (std::size_t k = 0; k + 1 < base; ++k) pts.push_back((pts[k] + pts[k + 1]) / 2);

        Rational min_val = q.eval(pts.front());
        for (const auto& x : pts) {
            const Rational v = q.eval(x);
            if (v < min_val) min_val = v;
            if (v < 0 && !report.has_witness) {
                report.nonnegative = false;
                report.has_witness = true;
                report.witness_point = x;
                report.witness_value = v;
            }
        }
        proof.sample_points = std::move(pts);
        proof.min_sample_value = min_val;
        report.proofs.push_back(std::move(proof));
    }
    report.identically_zero = all_zero;
    return report;
}

}  // namespace kstab

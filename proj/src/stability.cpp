#include "kstab/stability.h"

#include <algorithm>
#include <cmath>

namespace kstab {

const char* classification_name(Classification c) {
    switch (c) {
        case Classification::Polystable: return "polystable";
        case Classification::StrictlySemistable: return "strictly_semistable";
        case Classification::Unstable: return "unstable";
        case Classification::FutakiNonzero: return "futaki_nonzero";
    }
    return "unknown";
}

CaseMeasures resolve_catalog_case(const std::string& dm_id) {
    const CaseData& data = find_case(dm_id);
    return CaseMeasures{data.dm_id, CaseFamily::Catalog, data.polytope,
                        mu_density(data.polytope, data.dm_id), nu_density(data.polytope, data.dm_id),
                        0};
}

CaseMeasures resolve_logpair(const Rational& t) {
    const MomentPolytope P = logpair_polytope(t);
    auto [mu, nu] = logpair_measures(t);
    return CaseMeasures{"logpair t=" + to_string(t), CaseFamily::LogPair, P, std::move(mu),
                        std::move(nu), 0};
}

CaseMeasures resolve_quadric(int n) {
    const MomentPolytope P = quadric_polytope(n);
    const std::string label = "quadric n=" + std::to_string(n);
    return CaseMeasures{label, CaseFamily::Quadric, P, mu_density(P, label), nu_density(P, label), n};
}

CaseMeasures resolve_custom(std::string label, MomentPolytope P) {
    SignedMeasure mu = mu_density(P, label);
    SignedMeasure nu = nu_density(P, label);
    return CaseMeasures{std::move(label), CaseFamily::Custom, std::move(P), std::move(mu),
                        std::move(nu), 0};
}

StabilityVerdict classify(const CaseMeasures& cm, const WeightSpec& g, double rel_tol) {
    const double ylo = to_double(cm.polytope.min_y());
    const double yhi = to_double(cm.polytope.max_y());
    if (!validate_positive_on(g, ylo, yhi))
        throw NonPositiveWeightError("weight is not positive on the moment interval [" +
                                     std::to_string(ylo) + ", " + std::to_string(yhi) + "]");

    StabilityVerdict v;
    v.tolerance = rel_tol * std::max(1.0, density_abs_mass(cm.mu.density));

    if (cm.polytope.is_y_symmetric() && g.is_even()) {
        // nu is odd, g even: the Futaki pairing vanishes identically.
        v.futaki = 0.0;
        v.futaki_exact_zero = true;
        v.futaki_method = PairingMethod::ExactRational;
    } else {
        const PairingResult fr = pair_measure(cm.nu, g, rel_tol);
        v.futaki = fr.value;
        v.futaki_exact_zero = fr.exact.has_value() && *fr.exact == 0;
        v.futaki_method = fr.method;
    }

    const PairingResult mr = pair_measure(cm.mu, g, rel_tol);
    v.margin = mr.value;
    v.margin_method = mr.method;

    if (std::abs(v.futaki) > v.tolerance)
        v.classification = Classification::FutakiNonzero;
    else if (v.margin > v.tolerance)
        v.classification = Classification::Polystable;
    else if (v.margin < -v.tolerance)
        v.classification = Classification::Unstable;
    else
        v.classification = Classification::StrictlySemistable;
    return v;
}

ThresholdResult find_threshold(ThresholdCase c, std::pair<double, double> bracket, double tol) {
    if (!(tol > 0)) throw std::domain_error("find_threshold: tol must be positive");
    double lo = bracket.first;
    double hi = bracket.second;
    if (!(lo < hi)) throw BracketError("find_threshold: empty bracket");
    double flo = mu_cosh_closed_form(c, lo);
    double fhi = mu_cosh_closed_form(c, hi);
    if (flo == 0.0) {
        hi = lo;
        fhi = flo;
    }
    if (fhi == 0.0) lo = hi;
    if (lo != hi && flo * fhi > 0.0)
        throw BracketError("find_threshold: no sign change of mu(cosh(a*.)) on the bracket");

    const double scale = std::max(std::abs(flo), std::abs(fhi));
    ThresholdResult result;
    result.bracket = bracket;

    int iterations = 0;
    double mid = lo, fmid = flo;
    while (hi - lo > 1e-15 * std::max(1.0, std::abs(hi))) {
        mid = 0.5 * (lo + hi);
        fmid = mu_cosh_closed_form(c, mid);
        ++iterations;
        if (fmid == 0.0) break;
        if ((fmid > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
            fhi = fmid;
        }
        if (std::abs(fmid) <= tol * scale && hi - lo <= 1e-12 * std::max(1.0, std::abs(mid))) break;
        if (iterations > 200) break;
    }

    // Secant polish from the bisection endpoints.
    double x0 = lo, f0 = flo, x1 = hi, f1 = fhi;
    for (int i = 0; i < 8 && f1 != f0; ++i) {
        const double x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        if (!std::isfinite(x2) || x2 < bracket.first || x2 > bracket.second) break;
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = mu_cosh_closed_form(c, x1);
        ++iterations;
        if (f1 == 0.0) break;
    }
    if (std::abs(f1) > std::abs(fmid)) {
        x1 = mid;
        f1 = fmid;
    }

    result.a0 = x1;
    result.residual = std::abs(f1);
    result.iterations = iterations;

    const CaseData& data = threshold_case_data(c);
    const SignedMeasure mu = mu_density(data.polytope, data.dm_id);
    const PairingResult quad = pair_measure_quadrature(mu, WeightSpec::cosh_family(result.a0), 1e-12);
    result.cross_check_delta = std::abs(quad.value - f1);
    if (result.cross_check_delta > 1e-6 * std::max(1.0, scale))
        throw std::runtime_error("find_threshold: quadrature cross-check disagrees with closed form");
    return result;
}

bool certificate_valid_at(const CaseMeasures& cm, const Rational& lambda, Certificate* out) {
    const PiecewisePoly combined = cm.mu.density + lambda * cm.nu.density;
    if (combined.empty() || combined.has_zero_piece()) return false;

    // Cheap rejection by exact sampling before the certified sign analysis.
    for (std::size_t i = 0; i < combined.piece_count(); ++i) {
        const Rational& lo = combined.breakpoints()[i];
        const Rational& hi = combined.breakpoints()[i + 1];
        const Rational w = hi - lo;
        for (int num : {0, 1, 16, 32, 48, 63, 64}) {
            const Rational x = lo + w * Rational(num, 64);
            if (combined.pieces()[i].eval(x) < 0) return false;
        }
    }

    NonnegativityReport report =
        is_nonnegative_on(combined, combined.support_lo(), combined.support_hi());
    if (!report.nonnegative || report.zero_on_subinterval || report.identically_zero) return false;
    if (out) {
        out->lambda = lambda;
        out->combined_density = combined;
        out->proofs = std::move(report.proofs);
    }
    return true;
}

std::optional<Certificate> insensitivity_certificate(const CaseMeasures& cm,
                                                     std::pair<Rational, Rational> lambda_range,
                                                     int grid) {
    if (grid < 1) throw std::domain_error("insensitivity_certificate: grid must be >= 1");
    std::vector<Rational> candidates;
    candidates.push_back(Rational(0));
    candidates.push_back(Rational(2));
    candidates.push_back(make_rational(2, 3));
    const Rational span = lambda_range.second - lambda_range.first;
    for (int i = 0; i <= grid; ++i) {
        Rational lam = lambda_range.first + span * Rational(i) / Rational(grid);
        if (std::find(candidates.begin(), candidates.end(), lam) == candidates.end())
            candidates.push_back(std::move(lam));
    }
    for (const auto& lam : candidates) {
        Certificate cert;
        if (certificate_valid_at(cm, lam, &cert)) return cert;
    }
    return std::nullopt;
}

std::pair<WeightSpec, StabilityVerdict> destabilizing_weight(const CaseMeasures& cm, int budget) {
    if (!cm.polytope.is_y_symmetric())
        throw std::invalid_argument("destabilizing_weight: case must be y-symmetric");
    if (cm.family == CaseFamily::Quadric) {
        const int n = cm.quadric_n;
        const double lo = static_cast<double>(n - 2) / (n - 3);
        const double hi = static_cast<double>(n - 2);
        double eps = (hi - lo) / 4.0;
        for (int i = 0; i < budget; ++i, eps /= 2.0) {
            const WeightSpec g(BumpWeight{lo, hi, eps, true, 1e-6});
            const StabilityVerdict v = classify(cm, g, 1e-9);
            if (v.classification == Classification::Unstable) return {g, v};
        }
        throw SearchError("destabilizing_weight: no bump width destabilized " + cm.label);
    }
    double a = 1.0;
    for (int i = 0; i < budget; ++i, a *= 2.0) {
        const WeightSpec g = WeightSpec::cosh_family(a);
        const StabilityVerdict v = classify(cm, g, 1e-9);
        if (v.classification == Classification::Unstable) return {g, v};
    }
    throw SearchError("destabilizing_weight: no cosh parameter destabilized " + cm.label);
}

Polynomial logpair_margin_polynomial() {
    // mu_t(1) is a degree-4 polynomial in t; interpolate it exactly from
    // five rational nodes and confirm with a sixth.
    const std::vector<Rational> nodes = {make_rational(0), make_rational(1, 8), make_rational(1, 4),
                                         make_rational(3, 8), make_rational(1, 2)};
    std::vector<Rational> values;
    values.reserve(nodes.size());
    for (const auto& t : nodes) values.push_back(logpair_measures(t).first.density.integral());

    Polynomial result;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        Polynomial basis = Polynomial::constant(1);
        Rational denom = 1;
        for (std::size_t m = 0; m < nodes.size(); ++m) {
            if (m == j) continue;
            basis *= Polynomial::linear(-nodes[m], Rational(1));
            denom *= nodes[j] - nodes[m];
        }
        result += basis * (values[j] / denom);
    }

    const Rational probe = make_rational(3, 4);
    if (result.eval(probe) != logpair_measures(probe).first.density.integral())
        throw std::logic_error("logpair margin is not a degree-4 polynomial in t");
    return result;
}

double logpair_t0(double tol) {
    if (!(tol > 0)) throw std::domain_error("logpair_t0: tol must be positive");
    const Polynomial margin = logpair_margin_polynomial();
    const Rational res(tol);
    const auto roots = isolate_roots(margin, Rational(0), Rational(1), res / 4);
    if (roots.size() != 1)
        throw std::logic_error("logpair_t0: expected exactly one margin zero in (0, 1)");
    return to_double((roots[0].lo + roots[0].hi) / 2);
}

double pairing_along(const CaseMeasures& cm, double xi1, double xi2, const WeightSpec& g,
                     double rel_tol) {
    double futaki;
    if (cm.polytope.is_y_symmetric() && g.is_even())
        futaki = 0.0;
    else
        futaki = pair_measure(cm.nu, g, rel_tol).value;
    const double margin = pair_measure(cm.mu, g, rel_tol).value;
    return xi1 * (-margin) + xi2 * futaki;
}

}  // namespace kstab

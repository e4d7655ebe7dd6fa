#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "kstab/root_isolation.h"
#include "kstab/weights.h"

namespace kstab {

struct BracketError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SearchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Classification { Polystable, StrictlySemistable, Unstable, FutakiNonzero };
const char* classification_name(Classification c);

struct StabilityVerdict {
    double futaki = 0.0;  // nu(g)
    double margin = 0.0;  // mu(g)
    Classification classification = Classification::Polystable;
    double tolerance = 0.0;  // absolute threshold the verdict used
    bool futaki_exact_zero = false;
    PairingMethod futaki_method = PairingMethod::ExactRational;
    PairingMethod margin_method = PairingMethod::ExactRational;
};

enum class CaseFamily { Catalog, LogPair, Quadric, Custom };

// A fully resolved stability problem: polytope plus both measures.
struct CaseMeasures {
    std::string label;
    CaseFamily family = CaseFamily::Custom;
    MomentPolytope polytope;
    SignedMeasure mu;
    SignedMeasure nu;
    int quadric_n = 0;  // set for CaseFamily::Quadric
};

CaseMeasures resolve_catalog_case(const std::string& dm_id);
CaseMeasures resolve_logpair(const Rational& t);
CaseMeasures resolve_quadric(int n);
CaseMeasures resolve_custom(std::string label, MomentPolytope P);

// Verdict rules: |futaki| > tol ⇒ FutakiNonzero; otherwise margin > tol ⇒
// Polystable, |margin| <= tol ⇒ StrictlySemistable, margin < -tol ⇒
// Unstable. tol = rel_tol * ∫|mu density|. For structurally even weights on
// y-symmetric cases the Futaki pairing is exactly zero by symmetry and is
// not integrated. Throws NonPositiveWeightError before any integration if g
// is not positive on the support.
StabilityVerdict classify(const CaseMeasures& cm, const WeightSpec& g, double rel_tol = 1e-9);

struct ThresholdResult {
    double a0 = 0.0;
    std::pair<double, double> bracket{0.0, 0.0};
    double residual = 0.0;
    int iterations = 0;
    double cross_check_delta = 0.0;  // closed form vs quadrature at a0
};

// Zero of a ↦ mu(cosh(a·)) inside the bracket, by bisection plus secant
// polish on the closed form, cross-validated by quadrature. Throws
// BracketError when the closed form does not change sign on the bracket.
ThresholdResult find_threshold(ThresholdCase c, std::pair<double, double> bracket, double tol);

// A positivity certificate for mu + lambda * nu: nonnegative on the full
// support with no identically-zero piece, so every weight with vanishing
// Futaki pairing keeps a positive margin.
struct Certificate {
    Rational lambda;
    PiecewisePoly combined_density;
    std::vector<PieceSignProof> proofs;
};

// Searches lambda over {0} ∪ {2, 2/3} ∪ grid points of lambda_range (first
// certifying value wins). Absence on the search set is reported as nullopt
// and proves nothing by itself.
std::optional<Certificate> insensitivity_certificate(const CaseMeasures& cm,
                                                     std::pair<Rational, Rational> lambda_range,
                                                     int grid);
bool certificate_valid_at(const CaseMeasures& cm, const Rational& lambda, Certificate* out = nullptr);

// An even weight with exactly vanishing Futaki pairing and negative margin.
// Cosh family with doubling parameter for y-symmetric catalog/log-pair
// cases; shrinking symmetrized bump over [(n-2)/(n-3), n-2] for quadrics.
// Throws SearchError when the budget is exhausted.
std::pair<WeightSpec, StabilityVerdict> destabilizing_weight(const CaseMeasures& cm, int budget = 16);

// mu_t(1) as an exact degree-4 polynomial in t, interpolated from exact
// pairings of the log-pair measures at rational nodes.
Polynomial logpair_margin_polynomial();
// The unique zero of logpair_margin_polynomial in (0, 1), refined to tol.
double logpair_t0(double tol);

// <p - kappa, xi>-pairing along a valuation direction xi = (xi1, xi2):
// xi1 * (-mu(g)) + xi2 * nu(g). Semistability ⇔ pairing <= 0 on the
// half-plane xi1 >= 0 ⇔ nu(g) = 0 and mu(g) >= 0.
double pairing_along(const CaseMeasures& cm, double xi1, double xi2, const WeightSpec& g,
                     double rel_tol = 1e-9);

}  // namespace kstab

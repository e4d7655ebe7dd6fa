#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kstab/piecewise.h"
#include "kstab/polytope.h"

namespace kstab {

struct UnknownCaseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class MeasureKind { Mu, Nu };

// One-dimensional signed density in y obtained by integrating the fibers of
// a moment polytope: nu pairs weights with the Futaki direction, mu with the
// destabilizing direction.
struct SignedMeasure {
    PiecewisePoly density;
    MeasureKind kind = MeasureKind::Mu;
    std::string case_ref;
};

// density(y) = ∫_{slice(y)} x^k dx  (no weight factor)
PiecewisePoly dh_mass_density(const MomentPolytope& P);
// Exact ∫∫ x^k dx dy over the polytope.
Rational dh_volume(const MomentPolytope& P);

// density(y) = y · ∫_{slice(y)} x^k dx
SignedMeasure nu_density(const MomentPolytope& P, std::string case_ref = "");
// density(y) = ∫_{slice(y)} (x - kappa_x) x^k dx
SignedMeasure mu_density(const MomentPolytope& P, std::string case_ref = "");

struct CaseData {
    std::string dm_id;       // e.g. "3-2-18"
    std::string mori_mukai;  // e.g. "1-16"
    MomentPolytope polytope;
    std::vector<std::string> notes;
};

// The 12 built-in rank-two threefold cases, vertex data exact.
const std::vector<CaseData>& catalog();
const CaseData& find_case(const std::string& dm_id);  // throws UnknownCaseError
std::vector<const CaseData*> find_by_mori_mukai(const std::string& mm_id);

// Log pair (X, tE) over the 3-2-19 geometry: vertices (0,±3), (4-2t,±(1+t)).
// Accepts 0 <= t < 1; throws std::domain_error otherwise.
MomentPolytope logpair_polytope(const Rational& t);
std::pair<SignedMeasure, SignedMeasure> logpair_measures(const Rational& t);  // (mu_t, nu_t)

// Quadric family: triangle x >= 0, x <= 2n-4-2y, x <= 2n-4+2y with
// kappa = (2n-8, 0) and DH exponent n-4. Requires n >= 5.
MomentPolytope quadric_polytope(int n);
// Even-weight folded mu density on [0, n-2], derived generically from the
// triangle and folded through y ↦ -y.
SignedMeasure quadric_mu_density(int n);

}  // namespace kstab

#include "kstab/measures.h"

#include <stdexcept>

namespace kstab {

namespace {

// Builds the fiberwise integral ∫_{x_lo(y)}^{x_hi(y)} w(x) x^k dx slab by
// slab, where w(x) = x (nu carries an extra y), w(x) = x - kappa_x (mu), or
// w(x) = 1 (plain DH mass). Everything stays an exact polynomial in y.
PiecewisePoly fiber_integral(const MomentPolytope& P, const Rational& shift, bool weight_by_y,
                             bool subtract_shift) {
    const unsigned k = P.dh_exponent();
    const auto ys = P.y_breakpoints();
    std::vector<Polynomial> pieces;
    pieces.reserve(ys.size() - 1);
    for (std::size_t i = 0; i + 1 < ys.size(); ++i) {
        const auto bounds = P.slab_bounds(i);
        const Polynomial hi1 = pow(bounds.x_hi, k + 1);
        const Polynomial lo1 = pow(bounds.x_lo, k + 1);
        const Rational inv1 = Rational(1) / Rational(static_cast<long>(k + 1));
        Polynomial piece = (hi1 - lo1) * inv1;  // ∫ x^k dx between the bounds
        if (subtract_shift) {
            const Polynomial hi2 = pow(bounds.x_hi, k + 2);
            const Polynomial lo2 = pow(bounds.x_lo, k + 2);
            const Rational inv2 = Rational(1) / Rational(static_cast<long>(k + 2));
            piece = (hi2 - lo2) * inv2 - shift * piece;
        }
        if (weight_by_y) piece *= Polynomial::linear(Rational(0), Rational(1));
        pieces.push_back(std::move(piece));
    }
    return PiecewisePoly(ys, std::move(pieces));
}

}  // namespace

PiecewisePoly dh_mass_density(const MomentPolytope& P) {
    return fiber_integral(P, Rational(0), false, false);
}

Rational dh_volume(const MomentPolytope& P) { return dh_mass_density(P).integral(); }

SignedMeasure nu_density(const MomentPolytope& P, std::string case_ref) {
    return SignedMeasure{fiber_integral(P, Rational(0), true, false), MeasureKind::Nu,
                         std::move(case_ref)};
}

SignedMeasure mu_density(const MomentPolytope& P, std::string case_ref) {
    return SignedMeasure{fiber_integral(P, P.kappa().x, false, true), MeasureKind::Mu,
                         std::move(case_ref)};
}

namespace {

Point2 pt(long x, long y) { return Point2{Rational(x), Rational(y)}; }

std::vector<CaseData> build_catalog() {
    const Point2 kappa = pt(2, 0);
    const unsigned k = 1;
    std::vector<CaseData> cases;

    cases.push_back({"3-2-3",
                     "4-8",
                     MomentPolytope({pt(0, -1), pt(4, -1), pt(4, 0), pt(2, 1), pt(0, 1)}, kappa, k),
                     {"blowup of P1 x P1 x P1 along a curve of degree (0,1,1)",
                      "weight-insensitive; certified by mu + (2/3) nu"}});
    cases.push_back({"3-2-4",
                     "1-16",
                     MomentPolytope({pt(0, 0), pt(3, -3), pt(3, 3)}, kappa, k),
                     {"the quadric Q3 (first spherical action)",
                      "weight-insensitive; mu is a positive measure"}});
    cases.push_back({"3-2-5",
                     "2-32",
                     MomentPolytope({pt(0, 0), pt(2, -2), pt(4, 0), pt(2, 2)}, kappa, k),
                     {"divisor W of bidegree (1,1) in P2 x P2",
                      "weight-insensitive; mu is a positive measure"}});
    cases.push_back({"3-2-6",
                     "2-31",
                     MomentPolytope({pt(0, 0), pt(2, -2), pt(3, -1), pt(3, 3)}, kappa, k),
                     {"blowup of Q3 along a line", "weight-insensitive; mu is a positive measure"}});
    cases.push_back({"3-2-8",
                     "3-24",
                     MomentPolytope({pt(0, 0), pt(1, -1), pt(3, -1), pt(4, 0), pt(2, 2)}, kappa, k),
                     {"complete intersection of degree (1,1,0) and (0,1,1) in P1 x P2 x P2",
                      "weight-insensitive; mu is a positive measure"}});
    cases.push_back({"3-2-9",
                     "3-20",
                     MomentPolytope({pt(0, 0), pt(2, -2), pt(3, -1), pt(3, 1), pt(2, 2)}, kappa, k),
                     {"blowup of Q3 along two disjoint lines",
                      "weight-insensitive; mu is a positive measure"}});
    cases.push_back({"3-2-11",
                     "4-7",
                     MomentPolytope({pt(0, 0), pt(1, -1), pt(3, -1), pt(4, 0), pt(3, 1), pt(1, 1)},
                                    kappa, k),
                     {"blowup of W along disjoint curves of degree (1,0) and (0,1)",
                      "weight-insensitive; mu is a positive measure"}});
    cases.push_back({"3-2-17",
                     "3-22",
                     MomentPolytope({pt(0, -1), pt(6, -1), pt(6, 0), pt(2, 1), pt(0, 1)}, kappa, k),
                     {"blowup of P1 x P2 along a conic in a P2 fiber",
                      "weight-insensitive; certified by mu + 2 nu"}});
    cases.push_back({"3-2-18",
                     "1-16",
                     MomentPolytope({pt(0, -3), pt(6, 0), pt(0, 3)}, kappa, k),
                     {"the quadric Q3 (second spherical action)",
                      "not weight-insensitive for this action; cosh-family weights destabilize",
                      "unique equivariant special test configuration up to twist; central fiber "
                      "reflexive ID 2"}});
    cases.push_back({"3-2-19",
                     "2-29",
                     MomentPolytope({pt(0, -3), pt(4, -1), pt(4, 1), pt(0, 3)}, kappa, k),
                     {"blowup of Q3 along a conic",
                      "not weight-insensitive; cosh-family weights destabilize",
                      "unique equivariant special test configuration up to twist; central fiber "
                      "reflexive ID 19"}});
    cases.push_back({"3-2-21",
                     "2-30",
                     MomentPolytope({pt(0, -1), pt(4, -1), pt(6, 0), pt(0, 3)}, kappa, k),
                     {"blowup of Q3 at a point", "weight-insensitive; certified by mu + (2/3) nu"}});
    cases.push_back({"3-2-23",
                     "3-19",
                     MomentPolytope({pt(0, -1), pt(4, -1), pt(6, 0), pt(4, 1), pt(0, 1)}, kappa, k),
                     {"blowup of Q3 at two points not on a common line",
                      "weight-insensitive; mu is a positive measure"}});
    return cases;
}

}  // namespace

const std::vector<CaseData>& catalog() {
    static const std::vector<CaseData> cases = build_catalog();
    return cases;
}

const CaseData& find_case(const std::string& dm_id) {
    for (const auto& c : catalog())
        if (c.dm_id == dm_id) return c;
    throw UnknownCaseError("unknown case id: " + dm_id);
}

std::vector<const CaseData*> find_by_mori_mukai(const std::string& mm_id) {
    std::vector<const CaseData*> out;
    for (const auto& c : catalog())
        if (c.mori_mukai == mm_id) out.push_back(&c);
    return out;
}

MomentPolytope logpair_polytope(const Rational& t) {
    if (t < 0 || t >= 1) throw std::domain_error("logpair: t must satisfy 0 <= t < 1");
    const Rational x = Rational(4) - 2 * t;
    const Rational y = Rational(1) + t;
    return MomentPolytope({Point2{Rational(0), Rational(-3)}, Point2{x, -y}, Point2{x, y},
                           Point2{Rational(0), Rational(3)}},
                          Point2{Rational(2), Rational(0)}, 1);
}

std::pair<SignedMeasure, SignedMeasure> logpair_measures(const Rational& t) {
    const MomentPolytope P = logpair_polytope(t);
    const std::string ref = "logpair t=" + to_string(t);
    return {mu_density(P, ref), nu_density(P, ref)};
}

MomentPolytope quadric_polytope(int n) {
    if (n < 5) throw std::domain_error("quadric: n must be >= 5");
    const Rational h(n - 2);
    return MomentPolytope({Point2{Rational(0), -h}, Point2{Rational(2 * n - 4), Rational(0)},
                           Point2{Rational(0), h}},
                          Point2{Rational(2 * n - 8), Rational(0)},
                          static_cast<unsigned>(n - 4));
}

SignedMeasure quadric_mu_density(int n) {
    const MomentPolytope P = quadric_polytope(n);
    SignedMeasure mu = mu_density(P, "quadric n=" + std::to_string(n));
    mu.density = mu.density.folded_even();
    return mu;
}

}  // namespace kstab

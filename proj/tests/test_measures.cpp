#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kstab/measures.h"
#include "kstab/weights.h"
#include "table2_oracle.h"

using namespace kstab;
using kstab::testdata::frac;
using kstab::testdata::lin;

namespace {

Point2 pt(long x, long y) { return Point2{Rational(x), Rational(y)}; }

MomentPolytope unit_square(Rational kx) {
    return MomentPolytope({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)},
                          Point2{std::move(kx), frac(1, 2)}, 1);
}

}  // namespace

TEST_CASE("catalog inventory") {
    CHECK(catalog().size() == 12);
    const CaseData& q3 = find_case("3-2-18");
    REQUIRE(q3.polytope.vertices().size() == 3);
    CHECK(q3.mori_mukai == "1-16");

    const CaseData& c5 = find_case("3-2-5");
    REQUIRE(c5.polytope.vertices().size() == 4);
    // quadrilateral (0,0), (2,-2), (4,0), (2,2)
    CHECK(c5.polytope.vertices()[0] == pt(0, 0));
    CHECK(c5.polytope.vertices()[1] == pt(2, -2));
    CHECK(c5.polytope.vertices()[2] == pt(4, 0));
    CHECK(c5.polytope.vertices()[3] == pt(2, 2));

    const auto mm229 = find_by_mori_mukai("2-29");
    REQUIRE(mm229.size() == 1);
    CHECK(mm229[0]->dm_id == "3-2-19");

    const auto mm116 = find_by_mori_mukai("1-16");
    CHECK(mm116.size() == 2);

    CHECK_THROWS_AS(find_case("3-2-99"), UnknownCaseError);
}

TEST_CASE("master oracle: every catalog density equals its table row exactly") {
    const auto rows = kstab::testdata::table2();
    for (const auto& data : catalog()) {
        CAPTURE(data.dm_id);
        const SignedMeasure mu = mu_density(data.polytope, data.dm_id);
        const SignedMeasure nu = nu_density(data.polytope, data.dm_id);
        REQUIRE(rows.count(data.dm_id) == 1);
        CHECK(mu.density == rows.at(data.dm_id).mu);
        CHECK(nu.density == rows.at(data.dm_id).nu);
        CHECK(mu.kind == MeasureKind::Mu);
        CHECK(nu.kind == MeasureKind::Nu);
        // support equals the y-projection of the polytope
        CHECK(mu.density.support_lo() == data.polytope.min_y());
        CHECK(mu.density.support_hi() == data.polytope.max_y());
    }
}

TEST_CASE("unit square spot checks") {
    const SignedMeasure nu = nu_density(unit_square(frac(1, 2)));
    // ∫_0^1 x dx = 1/2, so the density is y/2 on [0, 1]
    CHECK(nu.density == PiecewisePoly::single(frac(0), frac(1), frac(1, 2) * testdata::yvar()));

    const SignedMeasure mu = mu_density(unit_square(Rational(2)));
    // ∫_0^1 (x-2)x dx = 1/3 - 1 = -2/3
    CHECK(mu.density ==
          PiecewisePoly::single(frac(0), frac(1), Polynomial::constant(frac(-2, 3))));
}

TEST_CASE("odd/even structure on y-symmetric cases") {
    for (const char* id : {"3-2-4", "3-2-5", "3-2-9", "3-2-11", "3-2-18", "3-2-19"}) {
        CAPTURE(id);
        const MomentPolytope& P = find_case(id).polytope;
        REQUIRE(P.is_y_symmetric());
        const PiecewisePoly mu = mu_density(P).density;
        const PiecewisePoly nu = nu_density(P).density;
        CHECK(mu.reflected() == mu);         // even density
        CHECK(nu.reflected() == -nu);        // odd density
    }
}

TEST_CASE("folding halves the domain for even weights") {
    const MomentPolytope& P = find_case("3-2-18").polytope;
    const PiecewisePoly mu = mu_density(P).density;
    const std::vector<Polynomial> weights = {
        Polynomial::constant(Rational(1)), Polynomial({Rational(0), Rational(0), Rational(1)}),
        Polynomial({Rational(2), Rational(0), Rational(0), Rational(0), Rational(5)})};
    for (const Polynomial& g : weights) {
        REQUIRE(g.is_even());
        const Rational full = pair_exact(mu, g);
        const Rational folded = pair_exact(mu.folded_even(), g);
        CHECK(full == folded);
        CHECK(full == 2 * pair_exact(mu.restricted(Rational(0), Rational(3)), g));
    }
}

TEST_CASE("log pair measures") {
    // t = 0 reduces to the 3-2-19 row
    const auto [mu0, nu0] = logpair_measures(Rational(0));
    const MomentPolytope& P19 = find_case("3-2-19").polytope;
    CHECK(mu0.density == mu_density(P19).density);
    CHECK(nu0.density == nu_density(P19).density);

    // t = 1/2 polytope from the worked example
    const MomentPolytope half = logpair_polytope(frac(1, 2));
    const auto vs = half.vertices();
    REQUIRE(vs.size() == 4);
    CHECK(vs[0] == Point2{Rational(0), Rational(-3)});
    CHECK(vs[1] == Point2{Rational(3), frac(-3, 2)});
    CHECK(vs[2] == Point2{Rational(3), frac(3, 2)});
    CHECK(vs[3] == Point2{Rational(0), Rational(3)});

    // folded mu_t density: (8/3)[(2-t)^2(1-2t) on [0,1+t] + (3-y)^2(3-2y) on [1+t,3]]
    for (const auto& t : {frac(0), frac(1, 4), frac(1, 2), frac(7, 10)}) {
        CAPTURE(to_string(t));
        const auto [mu_t, nu_t] = logpair_measures(t);
        const Rational c = frac(8, 3) * pow_rational(Rational(2) - t, 2) * (Rational(1) - 2 * t);
        const PiecewisePoly expected(
            {frac(0), Rational(1) + t, frac(3)},
            {Polynomial::constant(c), frac(8, 3) * pow(lin(-3, 1), 2) * lin(3, -2)});
        CHECK(mu_t.density.folded_even() == expected);
        // nu_t vanishes identically after folding (odd density)
        CHECK(nu_t.density.folded_even().is_identically_zero());
    }

    // mu_t(1) as a polynomial in t matches -(4/3)(t-2)^2(3t^2+4t-2)
    const Polynomial expected_margin =
        frac(-4, 3) * pow(lin(-2, 1), 2) * Polynomial({frac(-2), frac(4), frac(3)});
    for (const auto& t : {frac(0), frac(1, 8), frac(1, 3), frac(2, 3), frac(9, 10)}) {
        CHECK(logpair_measures(t).first.density.integral() == expected_margin.eval(t));
    }

    CHECK_THROWS_AS(logpair_measures(Rational(1)), std::domain_error);
    CHECK_THROWS_AS(logpair_measures(Rational(-1)), std::domain_error);
}

TEST_CASE("quadric family") {
    CHECK_THROWS_AS(quadric_mu_density(4), std::domain_error);

    // n = 5 coincides with the folded 3-2-18 density
    const PiecewisePoly q5 = quadric_mu_density(5).density;
    const PiecewisePoly folded18 = mu_density(find_case("3-2-18").polytope).density.folded_even();
    CHECK(q5 == folded18);
    CHECK(q5 == PiecewisePoly::single(frac(0), frac(3), frac(8, 3) * pow(lin(-3, 1), 2) * lin(3, -2)));

    // n = 6: (1/3)(8-2y)^3(4-3y) on [0, 4]
    const PiecewisePoly q6 = quadric_mu_density(6).density;
    CHECK(q6 == PiecewisePoly::single(frac(0), frac(4),
                                      frac(1, 3) * pow(lin(8, -2), 3) * lin(4, -3)));

    // generic closed form (4/((n-2)(n-3))) (2n-4-2y)^{n-3} (n-2-(n-3)y) on [0, n-2]
    for (int n = 5; n <= 9; ++n) {
        CAPTURE(n);
        const Rational c = make_rational(4, static_cast<long>(n - 2) * (n - 3));
        const PiecewisePoly expected = PiecewisePoly::single(
            frac(0), Rational(n - 2),
            c * pow(lin(2 * n - 4, -2), static_cast<unsigned>(n - 3)) * lin(n - 2, -(n - 3)));
        CHECK(quadric_mu_density(n).density == expected);
    }

    // the affine factor changes sign at y = (n-2)/(n-3) and nowhere else inside
    for (int n = 5; n <= 8; ++n) {
        const PiecewisePoly q = quadric_mu_density(n).density;
        const Rational flip = make_rational(n - 2, n - 3);
        CHECK(q.eval(flip) == Rational(0));
        CHECK(q.eval(flip - frac(1, 100)) > 0);
        CHECK(q.eval(flip + frac(1, 100)) < 0);
    }
}

TEST_CASE("dh volume and the degree normalization") {
    // 3! * ∫ (x/4) over the 3-2-18 triangle = 54
    const Rational vol = dh_volume(find_case("3-2-18").polytope);
    CHECK(vol == Rational(36));
    CHECK(Rational(6) * vol / 4 == Rational(54));
}

#pragma once

// Reference mu and nu densities for the twelve catalog cases, transcribed in
// factored form. The library must reproduce these from the polytopes alone,
// so they live only in the test suites.

#include <map>
#include <string>

#include "kstab/piecewise.h"

namespace kstab::testdata {

inline Rational frac(long n, long d = 1) { return make_rational(n, d); }

inline Polynomial lin(long c0, long c1) {
    return Polynomial::linear(Rational(c0), Rational(c1));
}

// y itself
inline Polynomial yvar() { return lin(0, 1); }

struct Table2Row {
    PiecewisePoly mu;
    PiecewisePoly nu;
};

inline std::map<std::string, Table2Row> table2() {
    std::map<std::string, Table2Row> rows;
    const Polynomial y = yvar();

    // Shared factored pieces.
    const Polynomial mu_318_neg = frac(4, 3) * pow(lin(3, 1), 2) * lin(3, 2);    // (4/3)(y+3)^2(2y+3)
    const Polynomial mu_318_pos = frac(4, 3) * pow(lin(-3, 1), 2) * lin(3, -2);  // (4/3)(y-3)^2(3-2y)
    const Polynomial nu_318_neg = frac(2, 1) * y * pow(lin(3, 1), 2);            // 2y(3+y)^2
    const Polynomial nu_318_pos = frac(2, 1) * y * pow(lin(3, -1), 2);           // 2y(3-y)^2
    const Polynomial mu_cube_neg = frac(2, 3) * pow(lin(2, 1), 3);               // (2/3)(y+2)^3
    const Polynomial mu_cube_pos = frac(-2, 3) * pow(lin(-2, 1), 3);             // -(2/3)(y-2)^3
    const Polynomial nu_par_neg = frac(4, 1) * y * lin(2, 1);                    // 4y(2+y)
    const Polynomial nu_par_pos = frac(4, 1) * y * lin(2, -1);                   // 4y(2-y)
    const Polynomial mu_y2_neg = frac(1, 3) * y * y * lin(3, 1);                 // (1/3)y^2(y+3)
    const Polynomial mu_y2_pos = frac(-1, 3) * y * y * lin(-3, 1);               // -(1/3)y^2(y-3)
    const Polynomial nu_half = frac(1, 2) * y * lin(3, -1) * lin(3, 1);          // (1/2)y(3-y)(y+3)

    rows.emplace("3-2-3",
                 Table2Row{PiecewisePoly({frac(-1), frac(0), frac(1)},
                                         {Polynomial::constant(frac(16, 3)),
                                          frac(4, 3) * lin(1, -2) * pow(lin(2, -1), 2)}),
                           PiecewisePoly({frac(-1), frac(0), frac(1)},
                                         {frac(8, 1) * y, frac(2, 1) * y * pow(lin(2, -1), 2)})});
    rows.emplace("3-2-4", Table2Row{PiecewisePoly({frac(-3), frac(0), frac(3)},
                                                  {mu_y2_neg, mu_y2_pos}),
                                    PiecewisePoly({frac(-3), frac(3)}, {nu_half})});
    rows.emplace("3-2-5", Table2Row{PiecewisePoly({frac(-2), frac(0), frac(2)},
                                                  {mu_cube_neg, mu_cube_pos}),
                                    PiecewisePoly({frac(-2), frac(0), frac(2)},
                                                  {nu_par_neg, nu_par_pos})});
    rows.emplace("3-2-6",
                 Table2Row{PiecewisePoly({frac(-2), frac(-1), frac(0), frac(3)},
                                         {mu_cube_neg, mu_y2_neg, mu_y2_pos}),
                           PiecewisePoly({frac(-2), frac(-1), frac(3)}, {nu_par_neg, nu_half})});
    rows.emplace("3-2-8", Table2Row{PiecewisePoly({frac(-1), frac(0), frac(2)},
                                                  {mu_cube_neg, mu_cube_pos}),
                                    PiecewisePoly({frac(-1), frac(0), frac(2)},
                                                  {nu_par_neg, nu_par_pos})});
    rows.emplace("3-2-9",
                 Table2Row{PiecewisePoly({frac(-2), frac(-1), frac(0), frac(1), frac(2)},
                                         {mu_cube_neg, mu_y2_neg, mu_y2_pos, mu_cube_pos}),
                           PiecewisePoly({frac(-2), frac(-1), frac(1), frac(2)},
                                         {nu_par_neg, nu_half, nu_par_pos})});
    rows.emplace("3-2-11", Table2Row{PiecewisePoly({frac(-1), frac(0), frac(1)},
                                                   {mu_cube_neg, mu_cube_pos}),
                                     PiecewisePoly({frac(-1), frac(0), frac(1)},
                                                   {nu_par_neg, nu_par_pos})});
    rows.emplace("3-2-17",
                 Table2Row{PiecewisePoly({frac(-1), frac(0), frac(1)},
                                         {Polynomial::constant(frac(36)),
                                          frac(4, 3) * pow(lin(3, -2), 2) * lin(3, -4)}),
                           PiecewisePoly({frac(-1), frac(0), frac(1)},
                                         {frac(18, 1) * y, frac(2, 1) * y * pow(lin(3, -2), 2)})});
    rows.emplace("3-2-18", Table2Row{PiecewisePoly({frac(-3), frac(0), frac(3)},
                                                   {mu_318_neg, mu_318_pos}),
                                     PiecewisePoly({frac(-3), frac(0), frac(3)},
                                                   {nu_318_neg, nu_318_pos})});
    rows.emplace("3-2-19",
                 Table2Row{PiecewisePoly({frac(-3), frac(-1), frac(1), frac(3)},
                                         {mu_318_neg, Polynomial::constant(frac(16, 3)), mu_318_pos}),
                           PiecewisePoly({frac(-3), frac(-1), frac(1), frac(3)},
                                         {nu_318_neg, frac(8, 1) * y, nu_318_pos})});
    rows.emplace("3-2-21", Table2Row{PiecewisePoly({frac(-1), frac(0), frac(3)},
                                                   {mu_318_neg, mu_318_pos}),
                                     PiecewisePoly({frac(-1), frac(0), frac(3)},
                                                   {nu_318_neg, nu_318_pos})});
    rows.emplace("3-2-23", Table2Row{PiecewisePoly({frac(-1), frac(0), frac(1)},
                                                   {mu_318_neg, mu_318_pos}),
                                     PiecewisePoly({frac(-1), frac(0), frac(1)},
                                                   {nu_318_neg, nu_318_pos})});
    return rows;
}

}  // namespace kstab::testdata

#pragma once

#include <vector>

#include "kstab/piecewise.h"
#include "kstab/polynomial.h"

namespace kstab {

// One isolated real root: the closed interval [lo, hi] contains exactly one
// root of the queried polynomial. lo == hi marks an exactly known rational
// root. multiplicity refers to the original (not square-free) polynomial.
struct RootInterval {
    Rational lo;
    Rational hi;
    int multiplicity = 1;
};

// Certified isolation of all real roots of p in the closed interval [a, b].
// Square-free decomposition first, then Descartes-rule bisection per factor.
// Returned intervals are pairwise disjoint, sorted, and have width <=
// resolution. Roots at a or b count (degenerate [r, r] intervals).
// Throws std::invalid_argument for the zero polynomial, std::domain_error
// for a > b.
std::vector<RootInterval> isolate_roots(const Polynomial& p, const Rational& a,
                                        const Rational& b, const Rational& resolution);

// Sign-analysis certificate for one polynomial piece on [lo, hi].
struct PieceSignProof {
    Rational lo;
    Rational hi;
    bool piece_is_zero = false;
    std::vector<RootInterval> roots;
    std::vector<Rational> sample_points;  // every root-free gap is sampled
    Rational min_sample_value;            // 0 for a zero piece
};

struct NonnegativityReport {
    bool nonnegative = true;
    bool identically_zero = false;     // zero on all of [a, b] ∩ support
    bool zero_on_subinterval = false;  // some positive-length piece is the zero polynomial
    bool has_witness = false;          // set when !nonnegative
    Rational witness_point;
    Rational witness_value;
    std::vector<PieceSignProof> proofs;
};

// Exact decision of p >= 0 on [a, b] ∩ support, by isolating the roots of
// each piece and sampling every root-free gap at rational points.
NonnegativityReport is_nonnegative_on(const PiecewisePoly& p, const Rational& a,
                                      const Rational& b);

}  // namespace kstab

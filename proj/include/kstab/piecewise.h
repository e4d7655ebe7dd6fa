#pragma once

#include <vector>

#include "kstab/polynomial.h"

namespace kstab {

// Piecewise polynomial over a strictly increasing rational breakpoint grid
// b_0 < ... < b_k, with pieces[i] live on [b_i, b_{i+1}]. Evaluation outside
// [b_0, b_k] is 0. Addition and scaling refine to the union of breakpoints
// and stay exact.
class PiecewisePoly {
public:
    PiecewisePoly() = default;  // empty support, identically zero
    PiecewisePoly(std::vector<Rational> breakpoints, std::vector<Polynomial> pieces);

    static PiecewisePoly single(Rational lo, Rational hi, Polynomial p);

    bool empty() const { return pieces_.empty(); }
    std::size_t piece_count() const { return pieces_.size(); }
    const std::vector<Rational>& breakpoints() const { return breakpoints_; }
    const std::vector<Polynomial>& pieces() const { return pieces_; }
    const Rational& support_lo() const;
    const Rational& support_hi() const;

    Rational eval(const Rational& y) const;
    double eval_double(double y) const;

    // Exact integral of the density over [a, b] ∩ support; requires a <= b.
    Rational integral(const Rational& a, const Rational& b) const;
    Rational integral() const;  // over the full support

    bool is_identically_zero() const;
    bool has_zero_piece() const;

    // Same function with extra breakpoints inserted (values inside the
    // support split pieces; values outside are ignored).
    PiecewisePoly refined(const std::vector<Rational>& extra) const;
    PiecewisePoly restricted(const Rational& a, const Rational& b) const;
    PiecewisePoly reflected() const;  // y ↦ p(-y)
    // p(y) + p(-y) on [0, support_hi]; requires support symmetric about 0.
    PiecewisePoly folded_even() const;

    PiecewisePoly multiplied_by(const Polynomial& g) const;

    PiecewisePoly operator-() const;
    friend PiecewisePoly operator+(const PiecewisePoly& a, const PiecewisePoly& b);
    friend PiecewisePoly operator-(const PiecewisePoly& a, const PiecewisePoly& b);
    friend PiecewisePoly operator*(const Rational& s, const PiecewisePoly& p);

    // Equality as functions on the line (supports may be carved differently).
    friend bool operator==(const PiecewisePoly& a, const PiecewisePoly& b);
    friend bool operator!=(const PiecewisePoly& a, const PiecewisePoly& b) { return !(a == b); }

private:
    std::vector<Rational> breakpoints_;
    std::vector<Polynomial> pieces_;
};

}  // namespace kstab

#pragma once

#include <vector>

#include "kstab/polynomial.h"

namespace kstab {

struct Point2 {
    Rational x;
    Rational y;
    friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
};

// Horizontal section {x : (x, y) ∈ P} of a convex polytope; a single
// interval, possibly degenerate (x_lo == x_hi at an apex).
struct Slice {
    Rational y;
    Rational x_lo;
    Rational x_hi;
};

// Convex 2-D moment polytope with rational vertices, the kappa basepoint and
// the exponent k of the density x^k carried by the Duistermaat-Heckman
// measure. Vertices are normalized to counterclockwise order; collinear or
// repeated input vertices are rejected.
class MomentPolytope {
public:
    MomentPolytope(std::vector<Point2> vertices, Point2 kappa, unsigned dh_exponent);

    const std::vector<Point2>& vertices() const { return vertices_; }
    const Point2& kappa() const { return kappa_; }
    unsigned dh_exponent() const { return dh_exponent_; }

    Rational min_y() const;
    Rational max_y() const;

    bool contains(const Point2& p) const;  // closed polytope

    // Sorted distinct vertex y-coordinates; between consecutive values both
    // slice endpoints are affine functions of y.
    std::vector<Rational> y_breakpoints() const;

    // Throws std::domain_error when y is outside [min_y, max_y].
    Slice slice_at(const Rational& y) const;

    bool is_y_symmetric() const;

    Rational area() const;  // shoelace

    // Affine slice bounds on the slab between y_breakpoints()[i] and [i+1],
    // as degree <= 1 polynomials in y.
    struct SlabBounds {
        Polynomial x_lo;
        Polynomial x_hi;
    };
    SlabBounds slab_bounds(std::size_t slab_index) const;

private:
    std::vector<Point2> vertices_;
    Point2 kappa_;
    unsigned dh_exponent_;
};

}  // namespace kstab

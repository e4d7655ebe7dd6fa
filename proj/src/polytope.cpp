#include "kstab/polytope.h"

#include <algorithm>
#include <stdexcept>

namespace kstab {

namespace {

Rational cross(const Point2& o, const Point2& a, const Point2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Rational signed_area_twice(const std::vector<Point2>& vs) {
    Rational s = 0;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const Point2& p = vs[i];
        const Point2& q = vs[(i + 1) % vs.size()];
        s += p.x * q.y - q.x * p.y;
    }
    return s;
}

}  // namespace

MomentPolytope::MomentPolytope(std::vector<Point2> vertices, Point2 kappa, unsigned dh_exponent)
    : vertices_(std::move(vertices)), kappa_(std::move(kappa)), dh_exponent_(dh_exponent) {
    if (vertices_.size() < 3) throw std::invalid_argument("polytope: need at least 3 vertices");

    Rational area2 = signed_area_twice(vertices_);
    if (area2 == 0) throw std::invalid_argument("polytope: degenerate (zero area)");
    if (area2 < 0) std::reverse(vertices_.begin(), vertices_.end());

    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Rational c = cross(vertices_[i], vertices_[(i + 1) % n], vertices_[(i + 2) % n]);
        if (c <= 0)
            throw std::invalid_argument("polytope: vertices must form a strictly convex polygon");
    }
    for (const auto& v : vertices_)
        if (v.x < 0) throw std::invalid_argument("polytope: must lie in the half-plane x >= 0");
}

bool MomentPolytope::contains(const Point2& p) const {
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i)
        if (cross(vertices_[i], vertices_[(i + 1) % n], p) < 0) return false;
    return true;
}

Rational MomentPolytope::min_y() const {
    Rational m = vertices_[0].y;
    for (const auto& v : vertices_) m = std::min(m, v.y);
    return m;
}

Rational MomentPolytope::max_y() const {
    Rational m = vertices_[0].y;
    for (const auto& v : vertices_) m = std::max(m, v.y);
    return m;
}

std::vector<Rational> MomentPolytope::y_breakpoints() const {
    std::vector<Rational> ys;
    ys.reserve(vertices_.size());
    for (const auto& v : vertices_) ys.push_back(v.y);
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    return ys;
}

Slice MomentPolytope::slice_at(const Rational& y) const {
    if (y < min_y() || y > max_y()) throw std::domain_error("slice_at: y outside polytope range");
    bool found = false;
    Rational xlo, xhi;
    auto take = [&](const Rational& x) {
        if (!found) {
            xlo = x;
            xhi = x;
            found = true;
        } else {
            xlo = std::min(xlo, x);
            xhi = std::max(xhi, x);
        }
    };
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& p = vertices_[i];
        const Point2& q = vertices_[(i + 1) % n];
        if (p.y == q.y) {
            if (p.y == y) {
                take(p.x);
                take(q.x);
            }
            continue;
        }
        const Rational ymin = std::min(p.y, q.y);
        const Rational ymax = std::max(p.y, q.y);
        if (y < ymin || y > ymax) continue;
        take(p.x + (y - p.y) * (q.x - p.x) / (q.y - p.y));
    }
    return Slice{y, xlo, xhi};
}

bool MomentPolytope::is_y_symmetric() const {
    for (const auto& v : vertices_) {
        const Point2 mirror{v.x, -v.y};
        if (std::find(vertices_.begin(), vertices_.end(), mirror) == vertices_.end()) return false;
    }
    return true;
}

Rational MomentPolytope::area() const { return signed_area_twice(vertices_) / 2; }

MomentPolytope::SlabBounds MomentPolytope::slab_bounds(std::size_t slab_index) const {
    const auto ys = y_breakpoints();
    if (slab_index + 1 >= ys.size()) throw std::out_of_range("slab_bounds: bad slab index");
    const Rational& ylo = ys[slab_index];
    const Rational& yhi = ys[slab_index + 1];
    const Rational ymid = (ylo + yhi) / 2;

    // Exactly two non-horizontal edges span each slab of a strictly convex
    // polygon; the smaller at the midpoint is the left boundary.
    std::vector<std::pair<Rational, Polynomial>> covering;
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& p = vertices_[i];
        const Point2& q = vertices_[(i + 1) % n];
        if (p.y == q.y) continue;
        const Rational ymin = std::min(p.y, q.y);
        const Rational ymax = std::max(p.y, q.y);
        if (!(ymin <= ylo && yhi <= ymax)) continue;
        const Rational slope = (q.x - p.x) / (q.y - p.y);
        const Polynomial fn = Polynomial::linear(p.x - slope * p.y, slope);
        covering.emplace_back(fn.eval(ymid), fn);
    }
    if (covering.size() != 2) throw std::logic_error("slab_bounds: slab not covered by two edges");
    if (covering[0].first > covering[1].first) std::swap(covering[0], covering[1]);
    return SlabBounds{covering[0].second, covering[1].second};
}

}  // namespace kstab

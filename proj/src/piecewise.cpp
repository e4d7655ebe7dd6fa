#include "kstab/piecewise.h"

#include <algorithm>
#include <stdexcept>

namespace kstab {

PiecewisePoly::PiecewisePoly(std::vector<Rational> breakpoints, std::vector<Polynomial> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
    if (breakpoints_.empty() && pieces_.empty()) return;
    if (breakpoints_.size() != pieces_.size() + 1)
        throw std::invalid_argument("piecewise: need one more breakpoint than pieces");
    for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i)
        if (!(breakpoints_[i] < breakpoints_[i + 1]))
            throw std::invalid_argument("piecewise: breakpoints must be strictly increasing");
}

PiecewisePoly PiecewisePoly::single(Rational lo, Rational hi, Polynomial p) {
    return PiecewisePoly({std::move(lo), std::move(hi)}, {std::move(p)});
}

const Rational& PiecewisePoly::support_lo() const {
    if (empty()) throw std::logic_error("piecewise: empty support");
    return breakpoints_.front();
}

const Rational& PiecewisePoly::support_hi() const {
    if (empty()) throw std::logic_error("piecewise: empty support");
    return breakpoints_.back();
}

Rational PiecewisePoly::eval(const Rational& y) const {
    if (empty() || y < breakpoints_.front() || y > breakpoints_.back()) return Rational(0);
    // upper_bound - 1 gives the piece whose half-open cell [b_i, b_{i+1})
    // contains y; the top endpoint falls to the last piece.
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), y);
    std::size_t idx = static_cast<std::size_t>(it - breakpoints_.begin());
    if (idx == 0) idx = 1;
    if (idx > pieces_.size()) idx = pieces_.size();
    return pieces_[idx - 1].eval(y);
}

double PiecewisePoly::eval_double(double y) const {
    if (empty()) return 0.0;
    const double lo = breakpoints_.front().get_d();
    const double hi = breakpoints_.back().get_d();
    if (y < lo || y > hi) return 0.0;
    std::size_t idx = pieces_.size();
    for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
        if (y <= breakpoints_[i].get_d()) {
            idx = i;
            break;
        }
    }
    if (idx == 0) idx = 1;
    if (idx > pieces_.size()) idx = pieces_.size();
    return pieces_[idx - 1].eval_double(y);
}

Rational PiecewisePoly::integral(const Rational& a, const Rational& b) const {
    if (a > b) throw std::domain_error("piecewise integral: a > b");
    if (empty()) return Rational(0);
    Rational lo = std::max(a, breakpoints_.front());
    Rational hi = std::min(b, breakpoints_.back());
    if (lo >= hi) return Rational(0);
    Rational total = 0;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        const Rational& plo = breakpoints_[i];
        const Rational& phi = breakpoints_[i + 1];
        Rational clo = std::max(lo, plo);
        Rational chi = std::min(hi, phi);
        if (clo < chi) total += pieces_[i].integral(clo, chi);
    }
    return total;
}

Rational PiecewisePoly::integral() const {
    if (empty()) return Rational(0);
    return integral(breakpoints_.front(), breakpoints_.back());
}

bool PiecewisePoly::is_identically_zero() const {
    for (const auto& p : pieces_)
        if (!p.is_zero()) return false;
    return true;
}

bool PiecewisePoly::has_zero_piece() const {
    for (const auto& p : pieces_)
        if (p.is_zero()) return true;
    return false;
}

PiecewisePoly PiecewisePoly::refined(const std::vector<Rational>& extra) const {
    if (empty()) return *this;
    std::vector<Rational> bps = breakpoints_;
    for (const auto& x : extra)
        if (x > breakpoints_.front() && x < breakpoints_.back()) bps.push_back(x);
    std::sort(bps.begin(), bps.end());
    bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
    std::vector<Polynomial> ps;
    ps.reserve(bps.size() - 1);
    for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
        const Rational mid = (bps[i] + bps[i + 1]) / 2;
        auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), mid);
        std::size_t idx = static_cast<std::size_t>(it - breakpoints_.begin());
        ps.push_back(pieces_[idx - 1]);
    }
    return PiecewisePoly(std::move(bps), std::move(ps));
}

PiecewisePoly PiecewisePoly::restricted(const Rational& a, const Rational& b) const {
    if (a > b) throw std::domain_error("piecewise restriction: a > b");
    if (empty()) return PiecewisePoly();
    Rational lo = std::max(a, breakpoints_.front());
    Rational hi = std::min(b, breakpoints_.back());
    if (lo >= hi) return PiecewisePoly();
    PiecewisePoly r = refined({lo, hi});
    std::vector<Rational> bps;
    std::vector<Polynomial> ps;
    for (std::size_t i = 0; i < r.pieces_.size(); ++i) {
        if (r.breakpoints_[i] >= lo && r.breakpoints_[i + 1] <= hi) {
            if (bps.empty()) bps.push_back(r.breakpoints_[i]);
            bps.push_back(r.breakpoints_[i + 1]);
            ps.push_back(r.pieces_[i]);
        }
    }
    return PiecewisePoly(std::move(bps), std::move(ps));
}

PiecewisePoly PiecewisePoly::reflected() const {
    if (empty()) return PiecewisePoly();
    std::vector<Rational> bps(breakpoints_.rbegin(), breakpoints_.rend());
    for (auto& b : bps) b = -b;
    std::vector<Polynomial> ps(pieces_.rbegin(), pieces_.rend());
    for (auto& p : ps) p = p.compose_affine(Rational(0), Rational(-1));
    return PiecewisePoly(std::move(bps), std::move(ps));
}

PiecewisePoly PiecewisePoly::folded_even() const {
    if (empty()) return PiecewisePoly();
    if (support_lo() != -support_hi())
        throw std::domain_error("folded_even: support not symmetric about 0");
    PiecewisePoly sum = *this + reflected();
    return sum.restricted(Rational(0), support_hi());
}

PiecewisePoly PiecewisePoly::multiplied_by(const Polynomial& g) const {
    std::vector<Polynomial> ps = pieces_;
    for (auto& p : ps) p *= g;
    return PiecewisePoly(breakpoints_, std::move(ps));
}

PiecewisePoly PiecewisePoly::operator-() const {
    std::vector<Polynomial> ps = pieces_;
    for (auto& p : ps) p = -p;
    return PiecewisePoly(breakpoints_, std::move(ps));
}

PiecewisePoly operator+(const PiecewisePoly& a, const PiecewisePoly& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    std::vector<Rational> bps = a.breakpoints_;
    bps.insert(bps.end(), b.breakpoints_.begin(), b.breakpoints_.end());
    std::sort(bps.begin(), bps.end());
    bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
    std::vector<Polynomial> ps;
    ps.reserve(bps.size() - 1);
    auto piece_at = [](const PiecewisePoly& f, const Rational& mid) -> Polynomial {
        if (f.empty() || mid < f.breakpoints_.front() || mid > f.breakpoints_.back())
            return Polynomial();
        auto it = std::upper_bound(f.breakpoints_.begin(), f.breakpoints_.end(), mid);
        std::size_t idx = static_cast<std::size_t>(it - f.breakpoints_.begin());
        if (idx == 0 || idx > f.pieces_.size()) return Polynomial();
        return f.pieces_[idx - 1];
    };
    for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
        const Rational mid = (bps[i] + bps[i + 1]) / 2;
        ps.push_back(piece_at(a, mid) + piece_at(b, mid));
    }
    return PiecewisePoly(std::move(bps), std::move(ps));
}

PiecewisePoly operator-(const PiecewisePoly& a, const PiecewisePoly& b) { return a + (-b); }

PiecewisePoly operator*(const Rational& s, const PiecewisePoly& p) {
    std::vector<Polynomial> ps = p.pieces_;
    for (auto& q : ps) q *= s;
    return PiecewisePoly(p.breakpoints_, std::move(ps));
}

bool operator==(const PiecewisePoly& a, const PiecewisePoly& b) {
    return (a - b).is_identically_zero();
}

}  // namespace kstab

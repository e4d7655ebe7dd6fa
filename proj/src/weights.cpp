#include "kstab/weights.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "kstab/quadrature.h"
#include "kstab/root_isolation.h"

namespace kstab {

namespace {

double parse_double(const std::string& s) {
    double v = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) throw WeightParseError("bad number: " + s);
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

// C^inf ramp: 0 for u <= 0, 1 for u >= 1.
double smooth_step(double u) {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    const double e1 = std::exp(-1.0 / u);
    const double e2 = std::exp(-1.0 / (1.0 - u));
    return e1 / (e1 + e2);
}

double bump_one_sided(const BumpWeight& b, double y) {
    return smooth_step((y - b.lo) / b.epsilon) * smooth_step((b.hi - y) / b.epsilon);
}

std::string format_double(double v) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

WeightSpec::WeightSpec(Variant v) : v_(std::move(v)) {
    if (const auto* e = std::get_if<ExpSumWeight>(&v_)) {
        if (e->terms.empty()) throw std::invalid_argument("expsum weight needs at least one term");
    }
    if (const auto* b = std::get_if<BumpWeight>(&v_)) {
        if (!(b->hi > b->lo)) throw std::invalid_argument("bump weight needs hi > lo");
        if (!(b->epsilon > 0.0)) throw std::invalid_argument("bump weight needs eps > 0");
        if (2.0 * b->epsilon > b->hi - b->lo)
            throw std::invalid_argument("bump weight needs 2*eps <= hi - lo");
        if (b->floor < 0.0) throw std::invalid_argument("bump weight needs floor >= 0");
    }
}

bool WeightSpec::is_even() const {
    struct Visitor {
        bool operator()(const ConstantWeight&) const { return true; }
        bool operator()(const PolynomialWeight& w) const { return w.poly.is_even(); }
        bool operator()(const CoshWeight&) const { return true; }
        bool operator()(const SechWeight&) const { return true; }
        bool operator()(const ExpSumWeight& w) const {
            std::vector<std::pair<double, double>> rest = w.terms;
            while (!rest.empty()) {
                const auto [c, r] = rest.back();
                rest.pop_back();
                if (r == 0.0) continue;
                auto it = std::find(rest.begin(), rest.end(), std::make_pair(c, -r));
                if (it == rest.end()) return false;
                rest.erase(it);
            }
            return true;
        }
        bool operator()(const BumpWeight& w) const { return w.symmetrize; }
    };
    return std::visit(Visitor{}, v_);
}

double WeightSpec::eval(double y) const {
    struct Visitor {
        double y;
        double operator()(const ConstantWeight& w) const { return to_double(w.value); }
        double operator()(const PolynomialWeight& w) const { return w.poly.eval_double(y); }
        double operator()(const CoshWeight& w) const { return std::cosh(w.a * y); }
        double operator()(const SechWeight&) const { return 1.0 / std::cosh(y); }
        double operator()(const ExpSumWeight& w) const {
            double s = 0.0;
            for (const auto& [c, r] : w.terms) s += c * std::exp(r * y);
            return s;
        }
        double operator()(const BumpWeight& w) const {
            double v = bump_one_sided(w, y);
            if (w.symmetrize) v += bump_one_sided(w, -y);
            return v + w.floor;
        }
    };
    return std::visit(Visitor{y}, v_);
}

std::string WeightSpec::describe() const {
    struct Visitor {
        std::string operator()(const ConstantWeight& w) const { return "const:" + to_string(w.value); }
        std::string operator()(const PolynomialWeight& w) const {
            std::string s = "poly:";
            const auto& cs = w.poly.coefficients();
            if (cs.empty()) return s + "0";
            for (std::size_t i = 0; i < cs.size(); ++i) {
                if (i) s += ",";
                s += to_string(cs[i]);
            }
            return s;
        }
        std::string operator()(const CoshWeight& w) const { return "cosh:a=" + format_double(w.a); }
        std::string operator()(const SechWeight&) const { return "sech"; }
        std::string operator()(const ExpSumWeight& w) const {
            std::string s = "expsum:";
            for (std::size_t i = 0; i < w.terms.size(); ++i) {
                if (i) s += ";";
                s += "(" + format_double(w.terms[i].first) + "," + format_double(w.terms[i].second) + ")";
            }
            return s;
        }
        std::string operator()(const BumpWeight& w) const {
            return "bump:lo=" + format_double(w.lo) + ",hi=" + format_double(w.hi) +
                   ",eps=" + format_double(w.epsilon) + ",sym=" + (w.symmetrize ? "true" : "false");
        }
    };
    return std::visit(Visitor{}, v_);
}

WeightSpec WeightSpec::parse(const std::string& text) {
    const std::size_t colon = text.find(':');
    const std::string kind = text.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);

    if (kind == "sech") {
        if (!args.empty()) throw WeightParseError("sech takes no arguments");
        return WeightSpec(SechWeight{});
    }
    if (kind == "const") {
        try {
            return WeightSpec(ConstantWeight{parse_rational(args)});
        } catch (const std::invalid_argument& e) {
            throw WeightParseError(std::string("const: ") + e.what());
        }
    }
    if (kind == "poly") {
        std::vector<Rational> coeffs;
        try {
            for (const auto& part : split(args, ',')) coeffs.push_back(parse_rational(part));
        } catch (const std::invalid_argument& e) {
            throw WeightParseError(std::string("poly: ") + e.what());
        }
        return WeightSpec(PolynomialWeight{Polynomial(std::move(coeffs))});
    }
    if (kind == "cosh") {
        if (args.rfind("a=", 0) != 0) throw WeightParseError("cosh expects a=<value>");
        return WeightSpec(CoshWeight{parse_double(args.substr(2))});
    }
    if (kind == "expsum") {
        ExpSumWeight w;
        for (const auto& part : split(args, ';')) {
            if (part.size() < 5 || part.front() != '(' || part.back() != ')')
                throw WeightParseError("expsum expects (c,r);(c,r)...");
            const auto inner = split(part.substr(1, part.size() - 2), ',');
            if (inner.size() != 2) throw WeightParseError("expsum expects (c,r) pairs");
            w.terms.emplace_back(parse_double(inner[0]), parse_double(inner[1]));
        }
        return WeightSpec(std::move(w));
    }
    if (kind == "bump") {
        BumpWeight w;
        bool have_lo = false, have_hi = false, have_eps = false;
        for (const auto& part : split(args, ',')) {
            const std::size_t eq = part.find('=');
            if (eq == std::string::npos) throw WeightParseError("bump expects key=value pairs");
            const std::string key = part.substr(0, eq);
            const std::string val = part.substr(eq + 1);
            if (key == "lo") {
                w.lo = parse_double(val);
                have_lo = true;
            } else if (key == "hi") {
                w.hi = parse_double(val);
                have_hi = true;
            } else if (key == "eps") {
                w.epsilon = parse_double(val);
                have_eps = true;
            } else if (key == "sym") {
                if (val == "true")
                    w.symmetrize = true;
                else if (val == "false")
                    w.symmetrize = false;
                else
                    throw WeightParseError("bump sym expects true or false");
            } else {
                throw WeightParseError("bump: unknown key " + key);
            }
        }
        if (!have_lo || !have_hi || !have_eps) throw WeightParseError("bump needs lo, hi, eps");
        try {
            return WeightSpec(std::move(w));
        } catch (const std::invalid_argument& e) {
            throw WeightParseError(e.what());
        }
    }
    throw WeightParseError("unknown weight kind: " + kind);
}

bool validate_positive_on(const WeightSpec& g, double a, double b) {
    if (!(a <= b)) return false;
    struct Visitor {
        double a, b;
        const WeightSpec* spec;
        bool operator()(const ConstantWeight& w) const { return w.value > 0; }
        bool operator()(const PolynomialWeight& w) const {
            if (w.poly.is_zero()) return false;
            const Rational ra(a), rb(b);
            if (!isolate_roots(w.poly, ra, rb, (rb - ra + 1) / 4).empty()) return false;
            return w.poly.eval((ra + rb) / 2) > 0;
        }
        bool operator()(const CoshWeight&) const { return true; }
        bool operator()(const SechWeight&) const { return true; }
        bool operator()(const ExpSumWeight& w) const {
            const double big = std::max(std::abs(a), std::abs(b));
            double lipschitz = 0.0;
            for (const auto& [c, r] : w.terms)
                lipschitz += std::abs(c * r) * std::exp(std::abs(r) * big);
            for (int n = 64; n <= (1 << 20); n *= 4) {
                const double h = (b - a) / n;
                double min_val = spec->eval(a);
                for (int i = 0; i <= n; ++i) min_val = std::min(min_val, spec->eval(a + i * h));
                if (min_val <= 0.0) return false;
                if (min_val > 0.5 * lipschitz * h) return true;
            }
            return false;
        }
        bool operator()(const BumpWeight& w) const { return w.floor > 0.0; }
    };
    return std::visit(Visitor{a, b, &g}, g.variant());
}

const char* pairing_method_name(PairingMethod m) {
    switch (m) {
        case PairingMethod::ExactRational: return "exact_rational";
        case PairingMethod::ClosedForm: return "closed_form";
        case PairingMethod::Quadrature: return "quadrature";
    }
    return "unknown";
}

Rational pair_exact(const PiecewisePoly& density, const Polynomial& g) {
    return density.multiplied_by(g).integral();
}

namespace {

// ∫ p(y) e^{ry} dy = e^{ry} Q(y) with Q' + rQ = p, solved coefficientwise
// from the top degree down. Needs |r| away from 0.
double poly_exp_piece(const Polynomial& p, double r, double lo, double hi, double& magnitude) {
    const int d = p.degree();
    std::vector<double> q(static_cast<std::size_t>(d) + 1, 0.0);
    for (int m = d; m >= 0; --m) {
        double rhs = p.coeff(static_cast<std::size_t>(m)).get_d();
        if (m < d) rhs -= (m + 1) * q[static_cast<std::size_t>(m + 1)];
        q[static_cast<std::size_t>(m)] = rhs / r;
    }
    auto horner = [&](double y) {
        double acc = 0.0;
        for (int m = d; m >= 0; --m) acc = acc * y + q[static_cast<std::size_t>(m)];
        return acc;
    };
    const double vhi = std::exp(r * hi) * horner(hi);
    const double vlo = std::exp(r * lo) * horner(lo);
    magnitude += std::abs(vhi) + std::abs(vlo);
    return vhi - vlo;
}

// Truncated exponential as an exact polynomial; the double rate converts to
// a rational exactly, so the truncation is the only error.
Polynomial exp_series_poly(double rate, int terms) {
    const Rational r(rate);
    std::vector<Rational> coeffs(static_cast<std::size_t>(terms) + 1);
    Rational c = 1;
    coeffs[0] = c;
    for (int j = 1; j <= terms; ++j) {
        c *= r;
        c /= Rational(j);
        coeffs[static_cast<std::size_t>(j)] = c;
    }
    return Polynomial(std::move(coeffs));
}

// ∫ density(y) e^{ry} dy over the support, series route for small |r|.
double density_exp_pairing(const PiecewisePoly& density, double r, double& magnitude) {
    if (density.empty()) return 0.0;
    const double ymax = std::max(std::abs(to_double(density.support_lo())),
                                 std::abs(to_double(density.support_hi())));
    if (std::abs(r) * ymax <= 1.0) {
        const Rational exact = pair_exact(density, exp_series_poly(r, 30));
        const double v = to_double(exact);
        magnitude += std::abs(v);
        return v;
    }
    double total = 0.0;
    for (std::size_t i = 0; i < density.piece_count(); ++i) {
        total += poly_exp_piece(density.pieces()[i], r, to_double(density.breakpoints()[i]),
                                to_double(density.breakpoints()[i + 1]), magnitude);
    }
    return total;
}

PairingResult pair_quadrature_impl(const SignedMeasure& m, const WeightSpec& g, double rel_tol) {
    PairingResult out;
    out.method = PairingMethod::Quadrature;
    if (m.density.empty()) return out;
    const double a = to_double(m.density.support_lo());
    const double b = to_double(m.density.support_hi());
    std::vector<double> splits;
    for (const auto& bp : m.density.breakpoints()) splits.push_back(to_double(bp));
    if (const auto* bump = std::get_if<BumpWeight>(&g.variant())) {
        for (double s : {bump->lo, bump->lo + bump->epsilon, bump->hi - bump->epsilon, bump->hi}) {
            splits.push_back(s);
            if (bump->symmetrize) splits.push_back(-s);
        }
    }
    const auto f = [&](double y) { return m.density.eval_double(y) * g.eval(y); };
    const QuadratureResult q = integrate_adaptive(f, a, b, std::move(splits), rel_tol);
    out.value = q.value;
    out.error_bound = q.error_estimate;
    return out;
}

}  // namespace

PairingResult pair_measure_quadrature(const SignedMeasure& m, const WeightSpec& g, double rel_tol) {
    return pair_quadrature_impl(m, g, rel_tol);
}

PairingResult pair_measure(const SignedMeasure& m, const WeightSpec& g, double rel_tol) {
    if (!(rel_tol > 0)) throw std::domain_error("pair: tol must be positive");
    PairingResult out;
    if (m.density.empty()) {
        out.exact = Rational(0);
        return out;
    }

    if (const auto* c = std::get_if<ConstantWeight>(&g.variant())) {
        Rational exact = c->value * m.density.integral();
        out.value = to_double(exact);
        out.exact = std::move(exact);
        return out;
    }
    if (const auto* p = std::get_if<PolynomialWeight>(&g.variant())) {
        Rational exact = pair_exact(m.density, p->poly);
        out.value = to_double(exact);
        out.exact = std::move(exact);
        return out;
    }
    if (const auto* w = std::get_if<CoshWeight>(&g.variant())) {
        if (w->a == 0.0) {
            Rational exact = m.density.integral();
            out.value = to_double(exact);
            out.exact = std::move(exact);
            return out;
        }
        double magnitude = 0.0;
        const double v = 0.5 * (density_exp_pairing(m.density, w->a, magnitude) +
                                density_exp_pairing(m.density, -w->a, magnitude));
        out.value = v;
        out.method = PairingMethod::ClosedForm;
        out.error_bound = 1e-13 * (1.0 + magnitude);
        return out;
    }
    if (const auto* w = std::get_if<ExpSumWeight>(&g.variant())) {
        double magnitude = 0.0;
        double v = 0.0;
        for (const auto& [c, r] : w->terms) v += c * density_exp_pairing(m.density, r, magnitude);
        out.value = v;
        out.method = PairingMethod::ClosedForm;
        out.error_bound = 1e-13 * (1.0 + magnitude);
        return out;
    }
    return pair_quadrature_impl(m, g, rel_tol);
}

const CaseData& threshold_case_data(ThresholdCase c) {
    return find_case(c == ThresholdCase::Q3 ? "3-2-18" : "3-2-19");
}

double mu_cosh_closed_form(ThresholdCase c, double a) {
    if (std::abs(a) < 0.25) {
        // The explicit expressions lose all precision near their removable
        // singularity at a = 0; pair the density against the truncated cosh
        // series instead (exact up to the series remainder).
        const CaseData& data = threshold_case_data(c);
        const SignedMeasure mu = mu_density(data.polytope, data.dm_id);
        const Rational ra(a);
        std::vector<Rational> coeffs(22, Rational(0));
        Rational term = 1;
        coeffs[0] = term;
        for (int k = 1; k <= 10; ++k) {
            term *= ra * ra;
            term /= Rational((2 * k - 1) * (2 * k));
            coeffs[static_cast<std::size_t>(2 * k)] = term;
        }
        return to_double(pair_exact(mu.density, Polynomial(std::move(coeffs))));
    }
    if (c == ThresholdCase::Q3) {
        return (-16.0 / std::pow(a, 4)) *
               (6.0 * a * a + a * std::sinh(3.0 * a) - 2.0 * std::cosh(3.0 * a) + 2.0);
    }
    return (32.0 / std::pow(a, 4)) *
           (-std::cosh(a) + std::cosh(3.0 * a) - 2.0 * a * std::sinh(a) -
            a * std::sinh(a) * std::cosh(2.0 * a) - a * a * std::cosh(a));
}

double density_abs_mass(const PiecewisePoly& p) {
    if (p.empty()) return 0.0;
    double total = 0.0;
    for (std::size_t i = 0; i < p.piece_count(); ++i) {
        const double lo = to_double(p.breakpoints()[i]);
        const double hi = to_double(p.breakpoints()[i + 1]);
        const int n = 128;
        const double h = (hi - lo) / n;
        double s = 0.0;
        for (int j = 0; j <= n; ++j) {
            const double w = (j == 0 || j == n) ? 0.5 : 1.0;
            s += w * std::abs(p.pieces()[i].eval_double(lo + j * h));
        }
        total += s * h;
    }
    return total;
}

}  // namespace kstab

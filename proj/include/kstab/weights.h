#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "kstab/measures.h"
#include "kstab/polynomial.h"

namespace kstab {

struct WeightParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NonPositiveWeightError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ConstantWeight {
    Rational value;
};
struct PolynomialWeight {
    Polynomial poly;
};
// y ↦ cosh(a*y)
struct CoshWeight {
    double a = 0.0;
};
// y ↦ 1/cosh(y)
struct SechWeight {};
// y ↦ Σ c_i * exp(r_i * y)
struct ExpSumWeight {
    std::vector<std::pair<double, double>> terms;  // (coefficient, rate)
};
// Smooth surrogate for the indicator of [lo, hi]: a C^∞ ramp of width
// epsilon inside each edge, plus a global positivity floor. symmetrize adds
// the mirror copy on [-hi, -lo].
struct BumpWeight {
    double lo = 0.0;
    double hi = 0.0;
    double epsilon = 0.0;
    bool symmetrize = false;
    double floor = 1e-6;
};

class WeightSpec {
public:
    using Variant =
        std::variant<ConstantWeight, PolynomialWeight, CoshWeight, SechWeight, ExpSumWeight, BumpWeight>;

    explicit WeightSpec(Variant v);  // validates structural parameters

    static WeightSpec constant(Rational c) { return WeightSpec(ConstantWeight{std::move(c)}); }
    static WeightSpec polynomial(Polynomial p) { return WeightSpec(PolynomialWeight{std::move(p)}); }
    static WeightSpec cosh_family(double a) { return WeightSpec(CoshWeight{a}); }
    static WeightSpec sech() { return WeightSpec(SechWeight{}); }

    const Variant& variant() const { return v_; }
    bool is_even() const;
    double eval(double y) const;
    std::string describe() const;  // mini-language text

    // Mini-language: const:1 | poly:c0,c1,... | cosh:a=1.5 | sech |
    // expsum:(c,r);(c,r) | bump:lo=1.5,hi=3,eps=0.05,sym=true
    static WeightSpec parse(const std::string& text);

private:
    Variant v_;
};

// g > 0 on [a, b]: exact for constant/polynomial variants (root isolation),
// structural for cosh/sech/bump, dense sampling with a derivative bound for
// exp sums.
bool validate_positive_on(const WeightSpec& g, double a, double b);

enum class PairingMethod { ExactRational, ClosedForm, Quadrature };
const char* pairing_method_name(PairingMethod m);

struct PairingResult {
    double value = 0.0;
    PairingMethod method = PairingMethod::ExactRational;
    double error_bound = 0.0;
    std::optional<Rational> exact;  // set when method == ExactRational
};

// ∫ density(y) g(y) dy over the support. Polynomial-type weights integrate
// exactly; cosh/expsum go through per-piece closed forms for ∫ y^m e^{ry} dy;
// sech and bump weights use adaptive quadrature split at the breakpoints.
PairingResult pair_measure(const SignedMeasure& m, const WeightSpec& g, double rel_tol);

// Force the adaptive-quadrature backend (cross-checks and tests).
PairingResult pair_measure_quadrature(const SignedMeasure& m, const WeightSpec& g, double rel_tol);

// Exact rational pairing against a polynomial weight.
Rational pair_exact(const PiecewisePoly& density, const Polynomial& g);

// The two catalog cases with a one-parameter cosh family criterion.
enum class ThresholdCase { Q3, MM2_29 };
const CaseData& threshold_case_data(ThresholdCase c);

// mu paired against y ↦ cosh(a*y), as an explicit function of a; the a = 0
// value is the exact pairing mu(1). Accurate for all a (series evaluation
// near 0 avoids the removable-singularity cancellation).
double mu_cosh_closed_form(ThresholdCase c, double a);

// Crude numeric ∫ |density|, used only to scale verdict tolerances.
double density_abs_mass(const PiecewisePoly& p);

}  // namespace kstab

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "kstab/rational.h"

namespace kstab {

// Dense univariate polynomial with exact rational coefficients.
// coeffs[i] multiplies x^i; trailing zeros are trimmed, so the zero
// polynomial is the empty coefficient list and degree() == -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(Rational c);
    // c0 + c1*x
    static Polynomial linear(Rational c0, Rational c1);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coeff(std::size_t i) const;
    Rational leading_coeff() const;

    Rational eval(const Rational& x) const;
    double eval_double(double x) const;

    Polynomial derivative() const;
    Polynomial antiderivative() const;
    Rational integral(const Rational& a, const Rational& b) const;

    // p(c0 + c1*x), exact.
    Polynomial compose_affine(const Rational& c0, const Rational& c1) const;

    bool is_even() const;  // only even powers present
    bool is_odd() const;   // only odd powers present

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(const Rational& s, Polynomial p) { return p *= s; }
    friend Polynomial operator*(Polynomial p, const Rational& s) { return p *= s; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    std::string to_string(const std::string& var = "y") const;

private:
    std::vector<Rational> coeffs_;
    void trim();
};

Polynomial pow(const Polynomial& p, unsigned e);

// Euclidean division in Q[x]; divisor must be nonzero.
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& num, const Polynomial& den);
// Exact quotient; throws std::logic_error on a nonzero remainder.
Polynomial poly_exact_div(const Polynomial& num, const Polynomial& den);
// Monic gcd (1 for coprime inputs, 0 only if both inputs are 0).
Polynomial poly_gcd(Polynomial a, Polynomial b);

// Yun decomposition p = lc * prod f_i^i with the f_i monic, square-free,
// pairwise coprime; only nontrivial factors are returned.
std::vector<std::pair<Polynomial, int>> square_free_decomposition(const Polynomial& p);
Polynomial square_free_part(const Polynomial& p);

}  // namespace kstab

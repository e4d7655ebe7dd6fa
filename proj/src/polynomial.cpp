#include "kstab/polynomial.h"

#include <sstream>
#include <stdexcept>

namespace kstab {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(Rational c) {
    if (c == 0) return Polynomial();
    return Polynomial({std::move(c)});
}

Polynomial Polynomial::linear(Rational c0, Rational c1) {
    return Polynomial({std::move(c0), std::move(c1)});
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t i) const {
    if (i >= coeffs_.size()) return Rational(0);
    return coeffs_[i];
}

Rational Polynomial::leading_coeff() const {
    if (coeffs_.empty()) return Rational(0);
    return coeffs_.back();
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

double Polynomial::eval_double(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return Polynomial(std::move(d));
}

Polynomial Polynomial::antiderivative() const {
    if (coeffs_.empty()) return Polynomial();
    std::vector<Rational> a(coeffs_.size() + 1);
    a[0] = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        a[i + 1] = coeffs_[i] / Rational(static_cast<long>(i + 1));
    return Polynomial(std::move(a));
}

Rational Polynomial::integral(const Rational& a, const Rational& b) const {
    const Polynomial F = antiderivative();
    return F.eval(b) - F.eval(a);
}

Polynomial Polynomial::compose_affine(const Rational& c0, const Rational& c1) const {
    const Polynomial inner = Polynomial::linear(c0, c1);
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= inner;
        acc += Polynomial::constant(*it);
    }
    return acc;
}

bool Polynomial::is_even() const {
    for (std::size_t i = 1; i < coeffs_.size(); i += 2)
        if (coeffs_[i] != 0) return false;
    return true;
}

bool Polynomial::is_odd() const {
    for (std::size_t i = 0; i < coeffs_.size(); i += 2)
        if (coeffs_[i] != 0) return false;
    return true;
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> n(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) n[i] = -coeffs_[i];
    return Polynomial(std::move(n));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    if (coeffs_.empty() || rhs.coeffs_.empty()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> prod(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
    coeffs_ = std::move(prod);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
}

std::string Polynomial::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        Rational c = coeffs_[i];
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        Rational a = abs(c);
        if (i == 0 || a != 1) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

Polynomial pow(const Polynomial& p, unsigned e) {
    Polynomial result = Polynomial::constant(1);
    Polynomial b = p;
    while (e > 0) {
        if (e & 1u) result *= b;
        b *= b;
        e >>= 1u;
    }
    return result;
}

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw std::invalid_argument("polynomial division by zero");
    std::vector<Rational> rem = num.coefficients();
    const int dn = den.degree();
    const Rational lead = den.leading_coeff();
    if (static_cast<int>(rem.size()) - 1 < dn) return {Polynomial(), num};
    std::vector<Rational> quot(rem.size() - dn, Rational(0));
    for (int i = static_cast<int>(rem.size()) - 1; i >= dn; --i) {
        if (rem[i] == 0) continue;
        Rational q = rem[i] / lead;
        quot[i - dn] = q;
        for (int j = 0; j <= dn; ++j) rem[i - dn + j] -= q * den.coefficients()[j];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial poly_exact_div(const Polynomial& num, const Polynomial& den) {
    auto [q, r] = poly_divmod(num, den);
    if (!r.is_zero()) throw std::logic_error("poly_exact_div: nonzero remainder");
    return q;
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    const Rational inv = Rational(1) / a.leading_coeff();
    return a * inv;
}

std::vector<std::pair<Polynomial, int>> square_free_decomposition(const Polynomial& p) {
    std::vector<std::pair<Polynomial, int>> factors;
    if (p.is_zero()) throw std::invalid_argument("square-free decomposition of zero polynomial");
    if (p.degree() == 0) return factors;

    // Yun's algorithm over Q[x].
    Polynomial d = p.derivative();
    Polynomial a0 = poly_gcd(p, d);
    Polynomial b = poly_exact_div(p, a0);
    Polynomial c = poly_exact_div(d, a0);
    Polynomial z = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        Polynomial g = poly_gcd(b, z);
        if (g.degree() > 0) factors.emplace_back(g, i);
        b = poly_exact_div(b, g);
        c = poly_exact_div(z, g);
        z = c - b.derivative();
        ++i;
    }
    return factors;
}

Polynomial square_free_part(const Polynomial& p) {
    Polynomial result = Polynomial::constant(1);
    for (const auto& [f, m] : square_free_decomposition(p)) result *= f;
    return result;
}

}  // namespace kstab

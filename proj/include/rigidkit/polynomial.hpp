#ifndef RIGIDKIT_POLYNOMIAL_HPP
#define RIGIDKIT_POLYNOMIAL_HPP

#include <utility>
#include <vector>

#include "rigidkit/qmatrix.hpp"
#include "rigidkit/rational.hpp"

namespace rigidkit {

// Dense univariate polynomial over Q, coefficients ascending. Internal
// support for characteristic polynomials and spectral projectors.
class Poly {
public:
    Poly() {}
    explicit Poly(QVector coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(const Rational& c) { return Poly(QVector{c}); }
    static Poly x() { return Poly(QVector{Rational(0), Rational(1)}); }
    // (x - r)
    static Poly linear(const Rational& r) { return Poly(QVector{-r, Rational(1)}); }

    const QVector& coeffs() const { return c_; }
    bool isZero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& leading() const { return c_.back(); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& s) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    // quotient/remainder by a nonzero divisor
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;
    Poly derivative() const;
    Poly monic() const;
    Poly pow(std::size_t k) const;

    Rational eval(const Rational& x) const;
    QMatrix evalMatrix(const QMatrix& m) const;   // Horner

    static Poly gcd(Poly a, Poly b);              // monic gcd
    // extended gcd: returns (g, u, v) with u*a + v*b = g, g monic
    static void extGcd(const Poly& a, const Poly& b, Poly& g, Poly& u, Poly& v);

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    QVector c_;
};

} // namespace rigidkit

#endif

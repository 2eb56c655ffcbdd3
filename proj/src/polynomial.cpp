#include "rigidkit/polynomial.hpp"

#include <algorithm>

#include "rigidkit/errors.hpp"

namespace rigidkit {

Poly Poly::operator+(const Poly& o) const {
    QVector r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    QVector r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    if (isZero() || o.isZero()) return Poly();
    QVector r(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            r[i + j] += c_[i] * o.c_[j];
        }
    }
    return Poly(std::move(r));
}

Poly Poly::operator*(const Rational& s) const {
    if (s == 0) return Poly();
    QVector r = c_;
    for (auto& x : r) x *= s;
    return Poly(std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.isZero()) throw DimensionMismatch("poly division by zero");
    QVector rem = c_;
    const int dd = divisor.degree();
    const int dn = degree();
    if (dn < dd) return {Poly(), *this};
    QVector quot(dn - dd + 1, Rational(0));
    for (int k = dn - dd; k >= 0; --k) {
        Rational q = rem[k + dd] / divisor.c_[dd];
        quot[k] = q;
        if (q == 0) continue;
        for (int j = 0; j <= dd; ++j) rem[k + j] -= q * divisor.c_[j];
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    QVector r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(r));
}

Poly Poly::monic() const {
    if (isZero()) return *this;
    return *this * (1 / leading());
}

Poly Poly::pow(std::size_t k) const {
    Poly acc = constant(Rational(1));
    Poly base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return acc;
}

Rational Poly::eval(const Rational& x) const {
    Rational r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

QMatrix Poly::evalMatrix(const QMatrix& m) const {
    const std::size_t n = m.rows();
    QMatrix r(n, n);
    if (isZero()) return r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r = r * m;
        for (std::size_t i = 0; i < n; ++i) r(i, i) += *it;
    }
    return r;
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.isZero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

void Poly::extGcd(const Poly& a, const Poly& b, Poly& g, Poly& u, Poly& v) {
    Poly r0 = a, r1 = b;
    Poly u0 = constant(Rational(1)), u1;
    Poly v0, v1 = constant(Rational(1));
    while (!r1.isZero()) {
        auto [q, r] = r0.divmod(r1);
        Poly nu = u0 - q * u1;
        Poly nv = v0 - q * v1;
        r0 = std::move(r1); r1 = std::move(r);
        u0 = std::move(u1); u1 = std::move(nu);
        v0 = std::move(v1); v1 = std::move(nv);
    }
    Rational lead = r0.isZero() ? Rational(1) : r0.leading();
    Rational inv = 1 / lead;
    g = r0 * inv;
    u = u0 * inv;
    v = v0 * inv;
}

} // namespace rigidkit

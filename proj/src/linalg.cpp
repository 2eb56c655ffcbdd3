#include "rigidkit/linalg.hpp"

#include <algorithm>
#include <map>

#include "rigidkit/errors.hpp"

namespace rigidkit {

namespace {

Integer lcmOfDenominators(const QMatrix& m) {
    Integer d(1);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), m(i, j).get_den().get_mpz_t());
    return d;
}

// Berkowitz: descending coefficient vector of det(xI - A), division-free.
std::vector<Rational> berkowitz(const QMatrix& a) {
    const std::size_t n = a.rows();
    std::vector<Rational> coeff{Rational(1), -a(0, 0)};
    for (std::size_t r = 2; r <= n; ++r) {
        // Toeplitz column: s_0 = 1, s_1 = -A[r-1][r-1], s_k = -(R B^{k-2} C)
        std::vector<Rational> s(r + 1, Rational(0));
        s[0] = 1;
        s[1] = -a(r - 1, r - 1);
        QVector v(r - 1);
        for (std::size_t i = 0; i < r - 1; ++i) v[i] = a(i, r - 1);
        for (std::size_t k = 2; k <= r; ++k) {
            Rational dot(0);
            for (std::size_t i = 0; i < r - 1; ++i)
                if (a(r - 1, i) != 0 && v[i] != 0) dot += a(r - 1, i) * v[i];
            s[k] = -dot;
            if (k == r) break;
            QVector w(r - 1, Rational(0));
            for (std::size_t i = 0; i < r - 1; ++i)
                for (std::size_t j = 0; j < r - 1; ++j)
                    if (a(i, j) != 0 && v[j] != 0) w[i] += a(i, j) * v[j];
            v = std::move(w);
        }
        std::vector<Rational> next(r + 1, Rational(0));
        for (std::size_t i = 0; i <= r; ++i)
            for (std::size_t j = 0; j < coeff.size() && j <= i; ++j)
                if (s[i - j] != 0 && coeff[j] != 0) next[i] += s[i - j] * coeff[j];
        coeff = std::move(next);
    }
    return coeff;
}

void factorInto(Integer n, std::map<Integer, unsigned>& primes);

Integer pollardRho(const Integer& n) {
    // Brent's cycle variant; n is odd, composite, not a perfect power of a
    // small prime (trial division already ran).
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xC0FFEEUL);
    while (true) {
        Integer c = rng.get_z_range(n - 3) + 1;
        Integer x = rng.get_z_range(n - 2) + 2;
        Integer y = x, d(1);
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Integer diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factorInto(Integer n, std::map<Integer, unsigned>& primes) {
    for (long p : {2L, 3L, 5L}) {
        while (n % p == 0) {
            ++primes[Integer(p)];
            n /= p;
        }
    }
    long inc[8] = {4, 2, 4, 2, 4, 6, 2, 6};
    long p = 7;
    int idx = 0;
    while (p <= 1000000 && Integer(p) * p <= n) {
        while (n % p == 0) {
            ++primes[Integer(p)];
            n /= p;
        }
        p += inc[idx];
        idx = (idx + 1) % 8;
    }
    if (n == 1) return;
    if (Integer(p) * p > n || mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
        ++primes[n];
        return;
    }
    Integer d = pollardRho(n);
    factorInto(d, primes);
    factorInto(n / d, primes);
}

} // namespace

std::vector<Integer> integerDivisors(const Integer& n) {
    Integer a = abs(n);
    if (a == 0) throw DimensionMismatch("divisors of zero");
    std::map<Integer, unsigned> primes;
    if (a > 1) factorInto(a, primes);
    std::vector<Integer> divs{Integer(1)};
    for (const auto& [p, e] : primes) {
        if (divs.size() * (e + 1) > (1u << 22))
            throw Error("DivisorOverflow", "too many divisors during root search");
        std::vector<Integer> next;
        next.reserve(divs.size() * (e + 1));
        Integer pk(1);
        for (unsigned k = 0; k <= e; ++k) {
            for (const auto& d : divs) next.push_back(d * pk);
            pk *= p;
        }
        divs = std::move(next);
    }
    std::size_t m = divs.size();
    divs.reserve(2 * m);
    for (std::size_t i = 0; i < m; ++i) divs.push_back(-divs[i]);
    return divs;
}

Poly charPoly(const QMatrix& m) {
    if (!m.isSquare()) throw DimensionMismatch("charPoly of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Poly::constant(Rational(1));
    Integer d = lcmOfDenominators(m);
    QMatrix b = m * Rational(d);
    std::vector<Rational> desc = berkowitz(b);   // coefficients of det(xI - dM)
    // det(xI - M) = d^{-n} det((dx)I - dM): coefficient k picks up d^{k-n}.
    QVector asc(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        Rational scale = rat(Integer(1), Integer(1));
        if (k < n) {
            Integer pw;
            mpz_pow_ui(pw.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(n - k));
            scale = rat(Integer(1), pw);
        }
        asc[k] = desc[n - k] * scale;
    }
    return Poly(std::move(asc));
}

std::vector<std::pair<Rational, std::size_t>> rationalSpectrum(const QMatrix& m) {
    if (!m.isSquare()) throw DimensionMismatch("spectrum of non-square matrix");
    const std::size_t n = m.rows();
    std::vector<std::pair<Rational, std::size_t>> out;
    if (n == 0) return out;

    Integer d = lcmOfDenominators(m);
    QMatrix b = m * Rational(d);
    Poly p = charPoly(b);   // integer monic; eigenvalues of b = d * eigenvalues of m

    // Strip the zero eigenvalue first.
    std::size_t zeroMult = 0;
    QVector pc = p.coeffs();
    while (zeroMult < pc.size() - 1 && pc[zeroMult] == 0) ++zeroMult;
    Poly stripped(QVector(pc.begin() + zeroMult, pc.end()));
    if (zeroMult > 0) out.push_back({Rational(0), zeroMult});

    std::size_t found = zeroMult;
    if (stripped.degree() > 0) {
        Poly sf = stripped.divmod(Poly::gcd(stripped, stripped.derivative())).first;
        // Monic integer polynomial: every rational root is an integer
        // divisor of the constant term.
        Integer a0 = sf.coeffs()[0].get_num();
        for (const Integer& cand : integerDivisors(a0)) {
            Rational r = rat(cand, Integer(1));
            if (sf.eval(r) != 0) continue;
            std::size_t mult = 0;
            Poly lin = Poly::linear(r);
            Poly cur = stripped;
            while (true) {
                auto [q, rem] = cur.divmod(lin);
                if (!rem.isZero()) break;
                cur = q;
                ++mult;
            }
            out.push_back({rat(cand, d), mult});
            found += mult;
        }
    }
    if (found < n)
        throw RationalSpectrumRequired(
            "characteristic polynomial has an irrational factor of degree " +
            std::to_string(n - found));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::vector<JointEigenspace> jointGeneralizedEigenspaces(const std::vector<QMatrix>& family) {
    if (family.empty()) throw DimensionMismatch("empty family");
    const std::size_t n = family[0].rows();
    for (const auto& m : family)
        if (!m.isSquare() || m.rows() != n)
            throw DimensionMismatch("family members must be square of equal size");
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            if (!QMatrix::commute(family[i], family[j]))
                throw NotCommuting("family members " + std::to_string(i) + "," +
                                   std::to_string(j) + " do not commute");

    std::vector<JointEigenspace> current{{QVector{}, Subspace::full(n)}};
    for (const auto& m : family) {
        std::vector<JointEigenspace> next;
        for (const auto& part : current) {
            const auto& basis = part.space.basis();
            const std::size_t k = part.space.dim();
            if (k == 0) continue;
            QMatrix restricted(k, k);
            for (std::size_t i = 0; i < k; ++i) {
                QVector image = m.applyTo(basis[i]);
                auto coords = part.space.coordinatesOf(image);
                if (!coords)
                    throw NotCommuting("subspace not invariant; family is inconsistent");
                for (std::size_t j = 0; j < k; ++j) restricted(j, i) = (*coords)[j];
            }
            for (const auto& [lambda, mult] : rationalSpectrum(restricted)) {
                QMatrix shifted = restricted;
                for (std::size_t i = 0; i < k; ++i) shifted(i, i) -= lambda;
                Subspace genCoords = kernel(shifted.pow(mult));
                std::vector<QVector> ambientVecs;
                for (const auto& u : genCoords.basis()) {
                    QVector v(n, Rational(0));
                    for (std::size_t j = 0; j < k; ++j) {
                        if (u[j] == 0) continue;
                        for (std::size_t t = 0; t < n; ++t) v[t] += u[j] * basis[j][t];
                    }
                    ambientVecs.push_back(std::move(v));
                }
                QVector ev = part.eigenvalue;
                ev.push_back(lambda);
                next.push_back({std::move(ev),
                                Subspace::fromVectors(n, std::move(ambientVecs))});
            }
        }
        current = std::move(next);
    }
    std::sort(current.begin(), current.end(), [](const JointEigenspace& a, const JointEigenspace& b) {
        return a.eigenvalue < b.eigenvalue;
    });
    return current;
}

JCPair jordanChevalley(const QMatrix& m) {
    if (!m.isSquare()) throw DimensionMismatch("jordanChevalley of non-square matrix");
    const std::size_t n = m.rows();
    auto spectrum = rationalSpectrum(m);

    // s(x) = sum_i lambda_i e_i(x) where e_i are the CRT idempotents
    // modulo (x - lambda_i)^{m_i}; then S = s(M) is a polynomial in M.
    Poly p = Poly::constant(Rational(1));
    std::vector<Poly> primary;
    for (const auto& [lambda, mult] : spectrum) {
        Poly q = Poly::linear(lambda).pow(mult);
        primary.push_back(q);
        p = p * q;
    }
    Poly s;
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
        Poly f = p.divmod(primary[i]).first;
        Poly g, u, v;
        Poly::extGcd(f, primary[i], g, u, v);
        // u*f = 1 mod primary[i]; e_i = u*f mod p
        Poly e = (u * f).divmod(p).second;
        s = s + e * spectrum[i].first;
    }
    QMatrix semisimple = s.evalMatrix(m);
    QMatrix nilpotent = m - semisimple;
    if (!QMatrix::commute(semisimple, nilpotent))
        throw Error("Internal", "Jordan-Chevalley parts do not commute");
    if (!nilpotent.pow(n).isZero())
        throw Error("Internal", "Jordan-Chevalley nilpotent part is not nilpotent");
    return {std::move(semisimple), std::move(nilpotent)};
}

bool isSemisimple(const QMatrix& m) {
    auto spectrum = rationalSpectrum(m);
    Poly sf = Poly::constant(Rational(1));
    for (const auto& [lambda, mult] : spectrum) sf = sf * Poly::linear(lambda);
    return sf.evalMatrix(m).isZero();
}

} // namespace rigidkit

#ifndef RIGIDKIT_LINALG_HPP
#define RIGIDKIT_LINALG_HPP

#include <utility>
#include <vector>

#include "rigidkit/polynomial.hpp"
#include "rigidkit/qmatrix.hpp"
#include "rigidkit/subspace.hpp"

namespace rigidkit {

// Characteristic polynomial det(xI - M), monic, exact. Fraction-free
// Berkowitz elimination on the denominator-cleared matrix.
Poly charPoly(const QMatrix& m);

// Eigenvalues with algebraic multiplicities, sorted ascending. Throws
// RationalSpectrumRequired if the characteristic polynomial has an
// irreducible factor of degree >= 2 (e.g. rotational parts).
std::vector<std::pair<Rational, std::size_t>> rationalSpectrum(const QMatrix& m);

struct JointEigenspace {
    QVector eigenvalue;   // one entry per family member
    Subspace space;
};

// Joint generalized eigenspace decomposition of a commuting family with
// rational spectra. The spaces are a direct-sum decomposition of the
// ambient space; on each, member i acts as eigenvalue[i]*Id + nilpotent.
std::vector<JointEigenspace> jointGeneralizedEigenspaces(const std::vector<QMatrix>& family);

struct JCPair {
    QMatrix semisimplePart;
    QMatrix nilpotentPart;
};

// Additive Jordan-Chevalley decomposition M = S + N with SN = NS and both
// parts polynomials in M (spectral projectors via CRT in Q[x]).
JCPair jordanChevalley(const QMatrix& m);

// True iff m is semisimple (diagonalizable over Q); requires rational
// spectrum.
bool isSemisimple(const QMatrix& m);

// All (positive and negative) divisors of a nonzero integer; helper for
// rational root extraction. Factorization by trial division plus Pollard
// rho for any large cofactor.
std::vector<Integer> integerDivisors(const Integer& n);

} // namespace rigidkit

#endif

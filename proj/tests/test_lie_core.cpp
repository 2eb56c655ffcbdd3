#include "doctest.h"

#include "rigidkit/lie_algebra.hpp"
#include "rigidkit/linalg.hpp"

using namespace rigidkit;

namespace {

QMatrix blockDiag(const QMatrix& a, const QMatrix& b) {
    QMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

const QMatrix kE = QMatrix::unit(2, 0, 1);
const QMatrix kF = QMatrix::unit(2, 1, 0);
const QMatrix kH = QMatrix::fromLongs(2, 2, {1, 0, 0, -1});

} // namespace

TEST_CASE("closure of the sl(2) triple") {
    LieAlgebra l = buildFromMatrices({kE, kH, kF});
    CHECK(l.dim() == 3);
    QVector h = l.coordinatesOfMatrix(kH);
    QVector e = l.coordinatesOfMatrix(kE);
    QVector he = l.bracket(h, e);
    QVector twoE = e;
    for (auto& x : twoE) x *= 2;
    CHECK(he == twoE);
}

TEST_CASE("closure of sl(3) generators") {
    std::vector<QMatrix> gens;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (i != j) gens.push_back(QMatrix::unit(3, i, j));
    gens.push_back(QMatrix::fromLongs(3, 3, {1, 0, 0, 0, -1, 0, 0, 0, 0}));
    LieAlgebra l = buildFromMatrices(gens);   // constructor verifies Jacobi
    CHECK(l.dim() == 8);
}

TEST_CASE("two block-diagonal copies of sl(2) close to a direct sum") {
    std::vector<QMatrix> gens;
    QMatrix z2 = QMatrix::zero(2);
    for (const QMatrix* m : {&kE, &kH, &kF}) {
        gens.push_back(blockDiag(*m, z2));
        gens.push_back(blockDiag(z2, *m));
    }
    LieAlgebra l = buildFromMatrices(gens);
    CHECK(l.dim() == 6);
    CHECK(derivedAndPerfect(l).isPerfect);
    // centralizer of the first copy is exactly the second copy
    std::vector<QVector> firstCopy;
    for (int k = 0; k < 3; ++k) firstCopy.push_back(l.coordinatesOfMatrix(gens[2 * k]));
    Subspace c = centralizer(l, firstCopy);
    CHECK(c.dim() == 3);
    for (const auto& v : c.basis()) {
        QMatrix m = l.matrixOf(v);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 4; ++j) CHECK(m(i, j) == 0);
    }
}

TEST_CASE("buildFromMatrices is idempotent on its own realization") {
    LieAlgebra l = buildFromMatrices({kE, kH, kF});
    LieAlgebra l2 = buildFromMatrices(l.realization());
    CHECK(l.structureConstants() == l2.structureConstants());
}

TEST_CASE("closure cap triggers ClosureExplosion") {
    CHECK_THROWS_AS(buildFromMatrices({kE, kF}, BuildOptions{2}), ClosureExplosion);
}

TEST_CASE("semidirect with the trivial representation is a direct sum") {
    LieAlgebra g = buildFromMatrices({kE, kH, kF});
    LieAlgebra s = semidirect(g, Representation::trivial(g, 2));
    CHECK(s.dim() == 5);
    DerivedReport inner = derivedAndPerfect(g);
    DerivedReport outer = derivedAndPerfect(s);
    CHECK(outer.derived.dim() == inner.derived.dim());
    CHECK_FALSE(outer.isPerfect);
    // the abelian ideal brackets to zero
    QVector e4(5, Rational(0)), e5(5, Rational(0));
    e4[3] = 1;
    e5[4] = 1;
    CHECK(isZeroVector(s.bracket(e4, e5)));
}

TEST_CASE("sl(2) semidirect R^2 via the standard representation") {
    LieAlgebra g = buildFromMatrices({kE, kH, kF});
    Representation std2 = Representation::standard(g);
    LieAlgebra s = semidirect(g, std2);
    CHECK(s.dim() == 5);

    // bracket spot-check [(X,0),(0,t)] = drho(X) t on every basis pair
    for (std::size_t i = 0; i < 3; ++i) {
        QVector x(3, Rational(0));
        x[i] = 1;
        QMatrix dx = std2.actionOf(x);
        for (std::size_t t = 0; t < 2; ++t) {
            QVector lhs = s.bracketBasis(i, 3 + t);
            for (std::size_t k = 0; k < 3; ++k) CHECK(lhs[k] == 0);
            for (std::size_t ss = 0; ss < 2; ++ss) CHECK(lhs[3 + ss] == dx(ss, t));
        }
    }
}

TEST_CASE("centralizer of the diagonal Cartan in sl(3) is the Cartan") {
    LieAlgebra l = LieAlgebra::sl(3);
    QVector h1(8, Rational(0)), h2(8, Rational(0));
    h1[6] = 1;
    h2[7] = 1;
    Subspace c = centralizer(l, {h1, h2});
    CHECK(c.dim() == 2);
    CHECK(c.contains(h1));
    CHECK(c.contains(h2));
}

TEST_CASE("centralizer of the SL(4) example split part has dimension 5") {
    LieAlgebra l = LieAlgebra::sl(4);
    QMatrix s1 = QMatrix::diagonal({Rational(1), Rational(1), Rational(0), Rational(-2)});
    QMatrix s2 = QMatrix::diagonal({Rational(0), Rational(0), Rational(1), Rational(-1)});
    Subspace c = centralizer(l, {l.coordinatesOfMatrix(s1), l.coordinatesOfMatrix(s2)});
    CHECK(c.dim() == 5);

    // independent kernel oracle on 4x4 matrix space: commute with both split
    // generators and be traceless
    std::vector<QVector> rows;
    auto addCommutatorRows = [&](const QMatrix& s) {
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                QVector row(16, Rational(0));
                for (std::size_t k = 0; k < 4; ++k) {
                    row[4 * k + j] += s(i, k);
                    row[4 * i + k] -= s(k, j);
                }
                rows.push_back(std::move(row));
            }
    };
    addCommutatorRows(s1);
    addCommutatorRows(s2);
    QVector traceRow(16, Rational(0));
    for (std::size_t i = 0; i < 4; ++i) traceRow[4 * i + i] = 1;
    rows.push_back(traceRow);
    QMatrix stacked(rows.size(), 16);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < 16; ++j) stacked(i, j) = rows[i][j];
    CHECK(kernel(stacked).dim() == 5);
}

TEST_CASE("centralizer of all of sl(3) is zero") {
    LieAlgebra l = LieAlgebra::sl(3);
    std::vector<QVector> all;
    for (std::size_t i = 0; i < l.dim(); ++i) {
        QVector e(l.dim(), Rational(0));
        e[i] = 1;
        all.push_back(std::move(e));
    }
    CHECK(centralizer(l, all).dim() == 0);
}

TEST_CASE("derived subalgebra and perfectness") {
    LieAlgebra sl2 = buildFromMatrices({kE, kH, kF});
    CHECK(derivedAndPerfect(sl2).isPerfect);

    // abelian R^2 as structure constants
    LieAlgebra::StructureTable c(2, std::vector<QVector>(2, QVector(2, Rational(0))));
    LieAlgebra ab = LieAlgebra::fromStructureConstants(c);
    DerivedReport r = derivedAndPerfect(ab);
    CHECK(r.derived.dim() == 0);
    CHECK_FALSE(r.isPerfect);
}

TEST_CASE("abelian subalgebra rejects non-commuting generators") {
    LieAlgebra l = buildFromMatrices({kE, kH, kF});
    CHECK_THROWS_AS(AbelianSubalgebra(l, std::vector<QMatrix>{kE, kF}), NotAbelian);
}

TEST_CASE("representation homomorphism property is enforced") {
    LieAlgebra g = buildFromMatrices({kE, kH, kF});
    std::vector<QMatrix> bad{QMatrix::identity(2), QMatrix::identity(2), QMatrix::identity(2)};
    CHECK_THROWS_AS(Representation(g, bad), NotARepresentation);
}

TEST_CASE("declared blocks must be invariant and non-trivial") {
    LieAlgebra g = buildFromMatrices({kE, kH, kF});
    std::vector<QMatrix> act = g.realization();
    // non-invariant line
    Subspace line = Subspace::fromVectors(2, {{Rational(1), Rational(0)}});
    CHECK_THROWS_AS(Representation(g, act, {line}), NotARepresentation);
    // the full space is invariant and non-trivial
    CHECK_NOTHROW(Representation(g, act, {Subspace::full(2)}));
}

TEST_CASE("sl(n) helper matches closure construction") {
    LieAlgebra l = LieAlgebra::sl(3);
    CHECK(l.dim() == 8);
    CHECK(l.basisLabels()[0] == "E12");
    CHECK(l.basisLabels()[6] == "H1");
    // [H1, E12] = 2 E12
    QVector h1(8, Rational(0));
    h1[6] = 1;
    QVector e12(8, Rational(0));
    e12[0] = 1;
    QVector br = l.bracket(h1, e12);
    CHECK(br[0] == 2);
    for (std::size_t k = 1; k < 8; ++k) CHECK(br[k] == 0);
}

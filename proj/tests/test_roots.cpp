#include "doctest.h"

#include <set>

#include "rigidkit/linalg.hpp"
#include "rigidkit/root_system.hpp"

using namespace rigidkit;

namespace {

// The SL(4) example: A = exp{diag-block [[t,s],[0,t]], s, -2t-s}.
struct Sl4Example {
    LieAlgebra algebra = LieAlgebra::sl(4);
    QMatrix gen1 = QMatrix::diagonal({Rational(1), Rational(1), Rational(0), Rational(-2)});
    QMatrix gen2 = QMatrix::unit(4, 0, 1) +
                   QMatrix::diagonal({Rational(0), Rational(0), Rational(1), Rational(-1)});
    AbelianSubalgebra subalgebra{algebra, std::vector<QMatrix>{gen1, gen2}};
};

// The SL(dm) embedding at d = 2, m = 3, mu = (1, 2, -3).
struct SlDmExample {
    std::vector<long> mu{1, 2, -3};
    LieAlgebra algebra = LieAlgebra::sl(6);
    QMatrix gen1 = QMatrix::diagonal({Rational(1), Rational(0), Rational(2), Rational(0),
                                      Rational(-3), Rational(0)});
    QMatrix gen2 = QMatrix::diagonal({Rational(0), Rational(1), Rational(0), Rational(2),
                                      Rational(0), Rational(-3)});
    AbelianSubalgebra subalgebra{algebra, std::vector<QMatrix>{gen1, gen2}};

    // {mu_i t_k - mu_j t_l : (i,k) != (j,l)} with multiplicities, from the
    // formula alone.
    std::map<Functional, std::size_t> rootsFromFormula() const {
        std::map<Functional, std::size_t> expect;
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 2; ++k)
                for (int j = 0; j < 3; ++j)
                    for (int l = 0; l < 2; ++l) {
                        if (i == j && k == l) continue;
                        QVector c(2, Rational(0));
                        c[k] += Rational(mu[i]);
                        c[l] -= Rational(mu[j]);
                        Functional f(std::move(c));
                        if (f.isZero()) continue;   // does not occur for distinct mu
                        ++expect[f];
                    }
        return expect;
    }
};

Functional fun(std::initializer_list<long> cs) {
    QVector v;
    for (long c : cs) v.push_back(Rational(c));
    return Functional(std::move(v));
}

} // namespace

TEST_CASE("sl(3) full Cartan root system is the textbook A2") {
    SlCartanModel model = slCartanModel(3);
    const RestrictedRootSystem& sys = model.system;
    CHECK(sys.roots.size() == 6);
    for (const auto& [f, space] : sys.roots) CHECK(space.dim() == 1);
    CHECK(sys.zeroSpace.dim() == 2);
    CHECK(sys.negationSymmetric);
}

TEST_CASE("SL(4) example: restricted roots, dimensions and neutral algebra") {
    Sl4Example ex;
    RestrictedRootSystem sys = restrictedRoots(ex.algebra, ex.subalgebra);

    CHECK(sys.zeroSpace.dim() == 5);
    REQUIRE(sys.roots.size() == 6);
    auto dimOf = [&](const Functional& f) {
        const Subspace* s = sys.rootSpace(f);
        REQUIRE(s != nullptr);
        return s->dim();
    };
    CHECK(dimOf(fun({1, -1})) == 2);
    CHECK(dimOf(fun({-1, 1})) == 2);
    CHECK(dimOf(fun({3, 1})) == 2);
    CHECK(dimOf(fun({-3, -1})) == 2);
    CHECK(dimOf(fun({2, 2})) == 1);
    CHECK(dimOf(fun({-2, -2})) == 1);

    // same data as a joint-eigenspace statement: 6 roots + zero space
    std::vector<QMatrix> ads;
    for (const auto& z : ex.subalgebra.generatorCoords())
        ads.push_back(jordanChevalley(ex.algebra.adjoint(z)).semisimplePart);
    CHECK(jointGeneralizedEigenspaces(ads).size() == 7);
}

TEST_CASE("SL(dm) embedding: roots match the formula") {
    SlDmExample ex;
    RestrictedRootSystem sys = restrictedRoots(ex.algebra, ex.subalgebra);
    auto expect = ex.rootsFromFormula();

    REQUIRE(sys.roots.size() == expect.size());
    for (const auto& [f, mult] : expect) {
        const Subspace* s = sys.rootSpace(f);
        REQUIRE(s != nullptr);
        CHECK(s->dim() == mult);
    }
    CHECK(sys.zeroSpace.dim() == 5);
    CHECK(sys.negationSymmetric);
}

TEST_CASE("restricted weights of the sl(3) standard representation") {
    SlCartanModel model = slCartanModel(3);
    Representation std3 = Representation::standard(model.algebra);
    auto weights = restrictedWeights(std3, model.cartan);
    REQUIRE(weights.size() == 3);
    CHECK(weights.count(fun({1, 0})) == 1);
    CHECK(weights.count(fun({-1, 1})) == 1);
    CHECK(weights.count(fun({0, -1})) == 1);
    for (const auto& [f, space] : weights) {
        CHECK(space.dim() == 1);
        CHECK_FALSE(f.isZero());
    }
}

TEST_CASE("a drho-invariant killed vector produces the zero weight") {
    LieAlgebra sl2 = LieAlgebra::sl(2);
    // standard rep plus a trivial line
    std::vector<QMatrix> act;
    for (const auto& m : sl2.realization()) {
        QMatrix big(3, 3);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) big(i, j) = m(i, j);
        act.push_back(big);
    }
    Representation rho(sl2, act);
    QVector h(3, Rational(0));
    h[2] = 1;   // H is the third basis element of sl(2) in the textbook order
    AbelianSubalgebra a(sl2, std::vector<QVector>{h});
    auto weights = restrictedWeights(rho, a);
    REQUIRE(weights.size() == 3);
    CHECK(weights.count(fun({0})) == 1);
    CHECK(weights.at(fun({0})).dim() == 1);
}

TEST_CASE("sl(2) standard weights restricted to the Cartan line") {
    LieAlgebra sl2 = LieAlgebra::sl(2);
    QVector h(3, Rational(0));
    h[2] = 1;
    AbelianSubalgebra a(sl2, std::vector<QVector>{h});
    auto weights = restrictedWeights(Representation::standard(sl2), a);
    REQUIRE(weights.size() == 2);
    CHECK(weights.count(fun({1})) == 1);
    CHECK(weights.count(fun({-1})) == 1);
}

TEST_CASE("coarse classes: sl(3) Cartan gives six singletons") {
    SlCartanModel model = slCartanModel(3);
    auto classes = coarseClasses(model.system);
    CHECK(classes.size() == 6);
    for (const auto& cls : classes) {
        CHECK(cls.members.size() == 1);
        CHECK(cls.space.dim() == 1);
    }
}

TEST_CASE("coarse classes: SL(4) example has no positive-proportional merging") {
    Sl4Example ex;
    auto classes = coarseClasses(restrictedRoots(ex.algebra, ex.subalgebra));
    CHECK(classes.size() == 6);
    for (const auto& cls : classes) CHECK(cls.members.size() == 1);
}

TEST_CASE("coarse classes: SL(dm) merges proportional multiples") {
    SlDmExample ex;
    RestrictedRootSystem sys = restrictedRoots(ex.algebra, ex.subalgebra);
    auto classes = coarseClasses(sys);
    // the i = j roots mu_i (t_1 - t_2) all share the ray (1,-1)
    bool found = false;
    for (const auto& cls : classes)
        if (cls.rayKey == "1,-1") {
            found = true;
            CHECK(cls.members.size() == 3);
            CHECK(cls.space.dim() == 3);
        }
    CHECK(found);
    CHECK(classes.size() < sys.roots.size());
}

TEST_CASE("chambers: a single pair of opposite functionals gives two") {
    LieAlgebra sl2 = LieAlgebra::sl(2);
    QVector h(3, Rational(0));
    h[2] = 1;
    AbelianSubalgebra a(sl2, std::vector<QVector>{h});
    ChamberReport chambers = weylChambers(restrictedRoots(sl2, a));
    CHECK(chambers.count() == 2);
}

TEST_CASE("chambers: SL(4) example has six") {
    Sl4Example ex;
    ChamberReport chambers = weylChambers(restrictedRoots(ex.algebra, ex.subalgebra));
    CHECK(chambers.count() == 6);
    std::set<std::vector<int>> distinct(chambers.signVectors.begin(), chambers.signVectors.end());
    CHECK(distinct.size() == 6);
}

TEST_CASE("chambers: sl(3) Cartan has six, sl(4) Cartan has twenty-four") {
    CHECK(weylChambers(slCartanModel(3).system).count() == 6);
    CHECK(weylChambers(slCartanModel(4).system).count() == 24);
}

TEST_CASE("chamber witnesses carry strict consistent signs") {
    Sl4Example ex;
    RestrictedRootSystem sys = restrictedRoots(ex.algebra, ex.subalgebra);
    ChamberReport chambers = weylChambers(sys);
    CHECK(chambers.count() % 2 == 0);
    for (std::size_t c = 0; c < chambers.count(); ++c) {
        for (std::size_t fi = 0; fi < chambers.functionals.size(); ++fi) {
            Rational v(0);
            for (std::size_t i = 0; i < 2; ++i)
                v += chambers.functionals[fi].coords()[i] * chambers.witnesses[c][i];
            CHECK(v != 0);
            CHECK((v > 0 ? 1 : -1) == chambers.signVectors[c][fi]);
        }
    }
}

TEST_CASE("detection in the SL(4) example: exactly e1-e2 and e2-e1 are undetected") {
    Sl4Example ex;
    SlCartanModel model = slCartanModel(4);
    DetectionReport report = detection(model.system, ex.subalgebra, model.algebra);
    CHECK_FALSE(report.allDetected);
    std::size_t undetected = 0;
    for (const auto& row : report.rows) {
        if (!row.detected) {
            ++undetected;
            CHECK((row.label == "e1-e2" || row.label == "e2-e1"));
            CHECK(row.restriction.isZero());
        }
    }
    CHECK(undetected == 2);
}

TEST_CASE("detection in the SL(dm) example: everything is detected") {
    SlDmExample ex;
    SlCartanModel model = slCartanModel(6);
    DetectionReport report = detection(model.system, ex.subalgebra, model.algebra);
    CHECK(report.allDetected);
    CHECK(report.rows.size() == 30);
}

TEST_CASE("detection of the full Cartan against itself") {
    SlCartanModel model = slCartanModel(3);
    DetectionReport report = detection(model.system, model.cartan, model.algebra);
    CHECK(report.allDetected);
}

TEST_CASE("detection-restriction dimension consistency") {
    Sl4Example ex;
    RestrictedRootSystem sys = restrictedRoots(ex.algebra, ex.subalgebra);
    SlCartanModel model = slCartanModel(4);
    DetectionReport report = detection(model.system, ex.subalgebra, model.algebra);
    for (const auto& [mu, space] : sys.roots) {
        std::size_t total = 0;
        for (const auto& row : report.rows)
            if (row.restriction == mu) ++total;   // Cartan root spaces are 1-dim
        CHECK(total == space.dim());
    }
}

TEST_CASE("weyl reflections in e-coordinates") {
    QVector s{Rational(1), Rational(-1), Rational(0)};   // e1-e2
    QVector r{Rational(4), Rational(7), Rational(-11)};
    QVector img = weylReflect(s, r);
    CHECK(img == QVector{Rational(7), Rational(4), Rational(-11)});

    QVector s23{Rational(0), Rational(1), Rational(-1)};
    QVector r12{Rational(1), Rational(-1), Rational(0)};
    CHECK(weylReflect(s23, r12) == QVector{Rational(1), Rational(0), Rational(-1)});
}

TEST_CASE("reflections are involutions on every stored root") {
    SlCartanModel model = slCartanModel(4);
    for (const auto& s : model.roots)
        for (const auto& r : model.roots) {
            QVector once = weylReflect(s.eCoords, r.eCoords);
            CHECK(weylReflect(s.eCoords, once) == r.eCoords);
            CHECK(model.rootByECoords(once) != nullptr);
        }
}

TEST_CASE("normalizer quotient of the SL(4) example is {id, (34)}") {
    Sl4Example ex;
    SlCartanModel model = slCartanModel(4);
    auto quotient = normalizerQuotient(model, ex.subalgebra);
    REQUIRE(quotient.size() == 2);
    CHECK(quotient[0] == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(quotient[1] == std::vector<std::size_t>{0, 1, 3, 2});
}

TEST_CASE("detecting conjugator for the undetected root of the SL(4) example") {
    Sl4Example ex;
    SlCartanModel model = slCartanModel(4);
    DetectionReport report = detection(model.system, ex.subalgebra, model.algebra);
    const SlRoot* r12 = model.rootByECoords({Rational(1), Rational(-1), Rational(0), Rational(0)});
    REQUIRE(r12 != nullptr);
    ConjugatorSearch search = findDetectingConjugator(model, report, *r12);
    REQUIRE(search.found());
    CHECK(search.witnesses.size() >= 2);
    bool hasLemmaWitness = false;
    for (const auto& w : search.witnesses) {
        CHECK_FALSE(w.image.onCartan == r12->onCartan);
        if (w.conjugator.label == "e2-e3" && w.image.label == "e1-e3") hasLemmaWitness = true;
    }
    CHECK(hasLemmaWitness);
}

TEST_CASE("rigidity report for the SL(4) example") {
    Sl4Example ex;
    RigidityReport report = rigidityReport(ex.algebra, ex.subalgebra);
    CHECK(report.genuinelyHigherRank);
    REQUIRE(report.allRootsDetected.has_value());
    CHECK_FALSE(*report.allRootsDetected);
    CHECK(report.actionType == ActionType::I);
    REQUIRE(report.semisimpleOnEachClass.count("1,-1") == 1);
    CHECK_FALSE(report.semisimpleOnEachClass.at("1,-1"));
    REQUIRE(report.semisimpleOnEachClass.count("1,1") == 1);
    CHECK(report.semisimpleOnEachClass.at("1,1"));
}

TEST_CASE("rank-one subalgebras are not genuinely higher rank") {
    LieAlgebra sl3 = LieAlgebra::sl(3);
    QMatrix regular = QMatrix::diagonal({Rational(1), Rational(2), Rational(-3)});
    AbelianSubalgebra a(sl3, std::vector<QMatrix>{regular});
    RigidityReport report = rigidityReport(sl3, a);
    CHECK_FALSE(report.genuinelyHigherRank);
}

TEST_CASE("rigidity report for the SL(dm) example") {
    SlDmExample ex;
    RigidityReport report = rigidityReport(ex.algebra, ex.subalgebra);
    CHECK(report.genuinelyHigherRank);
    REQUIRE(report.allRootsDetected.has_value());
    CHECK(*report.allRootsDetected);
    for (const auto& [ray, flag] : report.semisimpleOnEachClass) CHECK(flag);
}

#ifndef RIGIDKIT_ROOT_SYSTEM_HPP
#define RIGIDKIT_ROOT_SYSTEM_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rigidkit/functional.hpp"
#include "rigidkit/lie_algebra.hpp"
#include "rigidkit/subspace.hpp"

namespace rigidkit {

// Decomposition g = g_0 + sum g_mu under the split parts of an abelian
// subalgebra, with coarse (positive-ray) classes. Weight data for a twisted
// fiber is attached separately and participates in chambers and classes of
// the combined functional set.
struct RestrictedRootSystem {
    AbelianSubalgebra subalgebra;
    std::size_t algebraDim = 0;
    Subspace zeroSpace;                       // g_0
    std::map<Functional, Subspace> roots;     // nonzero functionals only
    // Weight decomposition of the fiber (includes the zero weight when
    // present); ambient dimension of these spaces is the fiber dimension.
    std::optional<std::map<Functional, Subspace>> weights;
    bool negationSymmetric = false;

    std::vector<Functional> nonzeroFunctionals() const;   // roots then nonzero weights
    const Subspace* rootSpace(const Functional& f) const; // nullptr if absent
};

RestrictedRootSystem restrictedRoots(const LieAlgebra& l, const AbelianSubalgebra& a);

std::map<Functional, Subspace> restrictedWeights(const Representation& rho,
                                                 const AbelianSubalgebra& a);

// Attach a weight decomposition (from restrictedWeights) to a root system.
void attachWeights(RestrictedRootSystem& sys, std::map<Functional, Subspace> weights);

struct CoarseClass {
    std::string rayKey;
    std::vector<Functional> members;   // the roots in the positive ray
    Subspace space;                    // sum of the member root spaces
};

// Partition of the nonzero root functionals by positive-proportionality;
// the class space is the coarse Lyapunov subalgebra g^{(mu)}.
std::vector<CoarseClass> coarseClasses(const RestrictedRootSystem& sys);

struct ChamberReport {
    std::vector<Functional> functionals;        // evaluation order for sign vectors
    std::vector<QVector> witnesses;             // one interior rational point per chamber
    std::vector<std::vector<int>> signVectors;  // +1/-1 per functional, per chamber
    std::size_t count() const { return witnesses.size(); }
};

// Enumerates all chambers (connected components of the regular set) via
// Fourier-Motzkin feasibility over candidate sign vectors.
ChamberReport weylChambers(const RestrictedRootSystem& sys);

// Feasibility of the strict homogeneous system {c . x > 0}; returns an
// interior witness when feasible. Exposed for reuse (orders, chambers).
std::optional<QVector> strictFeasibleWitness(const std::vector<QVector>& constraints,
                                             std::size_t dim);

struct DetectionRow {
    std::string label;        // "e1-e2" for sl(n) Cartan roots
    Functional cartanRoot;    // functional on the Cartan generators
    Functional restriction;   // functional on the subalgebra generators
    bool detected = false;
};

struct DetectionReport {
    std::vector<DetectionRow> rows;
    bool allDetected = false;
};

// Restriction of every root of `cartanSys` to the split parts of the
// generators of `a`; a root is detected iff its restriction is nonzero.
DetectionReport detection(const RestrictedRootSystem& cartanSys, const AbelianSubalgebra& a,
                          const LieAlgebra& l);

// Reflection w_s(r) = r - 2<s,r>/<s,s> s in e-coordinates of the ambient
// sl(n) Cartan model.
QVector weylReflect(const QVector& sE, const QVector& rE);

// sl(n) Cartan bookkeeping: the full diagonal Cartan, its root system, and
// the e-coordinate labels of the roots.
struct SlRoot {
    std::size_t i, j;         // root e_i - e_j (0-indexed)
    Functional onCartan;      // functional on the H_k generators
    QVector eCoords;          // length n
    std::string label;        // "e1-e2"
};

struct SlCartanModel {
    std::size_t n = 0;
    LieAlgebra algebra;             // sl(n) with the textbook basis
    AbelianSubalgebra cartan;       // H_1..H_{n-1}
    RestrictedRootSystem system;    // full Cartan root system
    std::vector<SlRoot> roots;

    const SlRoot* rootByECoords(const QVector& e) const;
    const SlRoot* rootByFunctional(const Functional& f) const;
};

SlCartanModel slCartanModel(std::size_t n);

// N(A')/C(A') inside the permutation Weyl group of sl(n): permutations
// preserving the span of the split diagonal parts, modulo those acting
// trivially on it. Returns the lexicographically smallest representative
// (one-line, 0-indexed) of each induced action, identity first.
std::vector<std::vector<std::size_t>> normalizerQuotient(const SlCartanModel& model,
                                                         const AbelianSubalgebra& a);

struct ConjugatorWitness {
    SlRoot conjugator;   // detected r1, not proportional to r over A
    SlRoot image;        // w_{r1}(r), detected
};

struct ConjugatorSearch {
    std::vector<ConjugatorWitness> witnesses;
    bool found() const { return !witnesses.empty(); }
};

// Witnesses for recovering a Cartan root via a detected reflection: all
// detected r1 with r1 not proportional to r over A and w_{r1}(r) detected.
ConjugatorSearch findDetectingConjugator(const SlCartanModel& model,
                                         const DetectionReport& report, const SlRoot& r);

enum class ActionType { I, II };

struct RigidityReport {
    bool genuinelyHigherRank = false;
    std::optional<bool> allRootsDetected;
    std::optional<bool> zeroWeightPresent;
    bool symplecticContribution = false;
    std::size_t symplecticDimension = 0;
    ActionType actionType = ActionType::I;   // II iff symplectic && zero weight present
    std::map<std::string, bool> semisimpleOnEachClass;   // by ray key
};

struct RigidityOptions {
    std::optional<std::vector<Subspace>> idealBlocks;   // declared simple ideals
    std::optional<Representation> rho;
    std::optional<SlCartanModel> cartanModel;   // auto-built for realized sl(n)
};

RigidityReport rigidityReport(const LieAlgebra& l, const AbelianSubalgebra& a,
                              const RigidityOptions& options = {});

} // namespace rigidkit

#endif

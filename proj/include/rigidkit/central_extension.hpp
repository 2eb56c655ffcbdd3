#ifndef RIGIDKIT_CENTRAL_EXTENSION_HPP
#define RIGIDKIT_CENTRAL_EXTENSION_HPP

#include <array>
#include <optional>
#include <vector>

#include "rigidkit/lie_algebra.hpp"
#include "rigidkit/qmatrix.hpp"

namespace rigidkit {

// An antisymmetric bilinear form on the fiber, omega(v, w) = v^T J w.
struct TwoForm {
    QMatrix matrix;

    explicit TwoForm(QMatrix m);
    Rational evaluate(const QVector& v, const QVector& w) const;
};

// Exact basis of I_G = {J antisymmetric : drho(b_i)^T J + J drho(b_i) = 0
// for every basis element}; empty means non-symplectic.
std::vector<TwoForm> invariantTwoForms(const Representation& rho);

struct SymplecticClass {
    bool symplectic = false;
    std::size_t dimension = 0;
};

SymplecticClass classifySymplectic(const Representation& rho);

// g_rho' = g + e + z with the omega-twisted bracket
// [(X1,V1,Z1),(X2,V2,Z2)] =
//   ([X1,X2], drho(X1)V2 - drho(X2)V1, omega_1(V1,V2), ..., omega_n(V1,V2)).
struct CentralExtensionAlgebra {
    LieAlgebra base;                  // g_rho = semidirect(g, rho)
    std::vector<TwoForm> formsBasis;  // basis of I_G
    LieAlgebra extended;              // g + e + z
    std::size_t gDim = 0;
    std::size_t fiberDim = 0;
    std::size_t centerDim = 0;
};

CentralExtensionAlgebra buildUniversalExtension(const LieAlgebra& g, const Representation& rho);

struct ExtensionPropertyReport {
    bool jacobiHolds = false;
    std::optional<std::array<std::size_t, 3>> jacobiFailure;
    bool centerIsCentral = false;
    bool projectionIsHomomorphism = false;
    bool extendedPerfect = false;
    bool perfectnessApplicable = false;   // base perfect and blocks non-trivial
    bool fiberBracketSpansCenter = false;
    bool allHold() const {
        return jacobiHolds && centerIsCentral && projectionIsHomomorphism &&
               (!perfectnessApplicable || extendedPerfect) && fiberBracketSpansCenter;
    }
};

ExtensionPropertyReport verifyExtensionProperties(const CentralExtensionAlgebra& e);

// For a user-supplied central extension determined by a single invariant
// form omega, checks that the canonical map from the universal extension
// (identity on g + e, z-coordinates contracted through the expansion of
// omega in formsBasis) is a Lie algebra homomorphism.
bool verifyUniversalMapTo(const CentralExtensionAlgebra& e, const TwoForm& omega);

} // namespace rigidkit

#endif

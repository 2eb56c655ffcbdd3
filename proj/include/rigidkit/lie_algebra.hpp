#ifndef RIGIDKIT_LIE_ALGEBRA_HPP
#define RIGIDKIT_LIE_ALGEBRA_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rigidkit/qmatrix.hpp"
#include "rigidkit/subspace.hpp"

namespace rigidkit {

// A finite-dimensional Lie algebra over Q given by structure constants
// [b_i, b_j] = sum_k c[i][j][k] b_k, optionally carrying a faithful matrix
// realization of the basis. Antisymmetry, Jacobi and consistency with the
// realization are enforced at construction; value semantics throughout.
class LieAlgebra {
public:
    using StructureTable = std::vector<std::vector<QVector>>;

    LieAlgebra() = default;   // the zero algebra

    static LieAlgebra fromStructureConstants(StructureTable c,
                                             std::vector<std::string> labels = {},
                                             std::optional<std::vector<QMatrix>> realization = std::nullopt);
    // Escape hatch for negative-control tests and verification reports: no
    // invariant checks run.
    static LieAlgebra fromStructureConstantsUnchecked(StructureTable c,
                                                      std::vector<std::string> labels = {},
                                                      std::optional<std::vector<QMatrix>> realization = std::nullopt);

    // sl(n) with the textbook basis: E_ij (i != j) in row-major order of
    // (i, j), then H_k = E_kk - E_{k+1,k+1}.
    static LieAlgebra sl(std::size_t n);

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basisLabels() const { return labels_; }
    const StructureTable& structureConstants() const { return c_; }
    bool hasRealization() const { return realization_.has_value(); }
    const std::vector<QMatrix>& realization() const { return *realization_; }

    // [u, v] in coordinates.
    QVector bracket(const QVector& u, const QVector& v) const;
    const QVector& bracketBasis(std::size_t i, std::size_t j) const { return c_[i][j]; }
    // ad(u) as a dim x dim matrix acting on coordinates.
    QMatrix adjoint(const QVector& u) const;

    // Coordinates of a matrix in the realization basis; NotInSpan if the
    // matrix is outside the algebra.
    QVector coordinatesOfMatrix(const QMatrix& m) const;
    QMatrix matrixOf(const QVector& coords) const;

    // First Jacobi-violating triple (i,j,k), if any.
    std::optional<std::array<std::size_t, 3>> firstJacobiFailure() const;
    bool antisymmetric() const;

private:
    void validate() const;

    std::size_t dim_ = 0;
    std::vector<std::string> labels_;
    StructureTable c_;
    std::optional<std::vector<QMatrix>> realization_;
    std::optional<Subspace> realizationSpan_;   // cached flattened span
    std::optional<QMatrix> echelonToBasis_;     // echelon coords -> basis coords
    void cacheRealizationSpan();
};

struct BuildOptions {
    std::size_t dimensionCap = 128;
};

// Bracket-closure of a set of matrix generators, with the canonical
// reduced-echelon basis of the resulting span (so rebuilding from the
// realization reproduces identical structure constants).
LieAlgebra buildFromMatrices(const std::vector<QMatrix>& generators,
                             const BuildOptions& options = {});

// A finite-dimensional representation: one action matrix per basis element.
// The homomorphism property is enforced at construction
// (drho([X,Y]) = [drho(X), drho(Y)]); declared blocks are checked for
// invariance and for not being all-zero-action, nothing more.
class Representation {
public:
    Representation(LieAlgebra algebra, std::vector<QMatrix> actionMatrices,
                   std::vector<Subspace> declaredIrreducibleBlocks = {});
    // Explicit target dimension; required when the algebra has dimension 0.
    Representation(LieAlgebra algebra, std::size_t targetDim, std::vector<QMatrix> actionMatrices,
                   std::vector<Subspace> declaredIrreducibleBlocks = {});

    const LieAlgebra& algebra() const { return algebra_; }
    std::size_t targetDim() const { return targetDim_; }
    const std::vector<QMatrix>& actionMatrices() const { return action_; }
    const std::vector<Subspace>& declaredIrreducibleBlocks() const { return blocks_; }

    // drho(u) for u in coordinates.
    QMatrix actionOf(const QVector& coords) const;

    static Representation trivial(LieAlgebra algebra, std::size_t targetDim);
    // For a matrix-realized algebra: the defining (standard) representation.
    static Representation standard(LieAlgebra algebra);
    static Representation adjointRep(LieAlgebra algebra);

private:
    void validate() const;
    LieAlgebra algebra_;
    std::size_t targetDim_;
    std::vector<QMatrix> action_;
    std::vector<Subspace> blocks_;
};

// Abelian subalgebra given by generators, stored both as coordinates in the
// parent basis and (when the parent is realized) as matrices.
class AbelianSubalgebra {
public:
    AbelianSubalgebra() = default;   // empty; populated by the factories below
    AbelianSubalgebra(const LieAlgebra& parent, std::vector<QMatrix> generatorMatrices);
    AbelianSubalgebra(const LieAlgebra& parent, std::vector<QVector> generatorCoords);

    std::size_t rank() const { return coords_.size(); }
    const std::vector<QVector>& generatorCoords() const { return coords_; }
    const std::vector<QMatrix>& generatorMatrices() const { return matrices_; }
    bool hasMatrices() const { return !matrices_.empty(); }

private:
    void validate(const LieAlgebra& parent);
    std::vector<QVector> coords_;
    std::vector<QMatrix> matrices_;
};

// g semidirect rho R^N per the bracket [(X,0),(0,t)] = drho(X) t; basis is
// the basis of g followed by the standard basis of R^N.
LieAlgebra semidirect(const LieAlgebra& g, const Representation& rho);

// {Z : [Z, s] = 0 for all s in S}, exact; elements in coordinates.
Subspace centralizer(const LieAlgebra& l, const std::vector<QVector>& elements);

struct DerivedReport {
    Subspace derived;
    bool isPerfect;
};

DerivedReport derivedAndPerfect(const LieAlgebra& l);

} // namespace rigidkit

#endif

#include "rigidkit/lie_algebra.hpp"

#include <algorithm>

#include "rigidkit/errors.hpp"

namespace rigidkit {

LieAlgebra LieAlgebra::fromStructureConstants(StructureTable c, std::vector<std::string> labels,
                                              std::optional<std::vector<QMatrix>> realization) {
    LieAlgebra l = fromStructureConstantsUnchecked(std::move(c), std::move(labels), std::move(realization));
    l.validate();
    return l;
}

LieAlgebra LieAlgebra::fromStructureConstantsUnchecked(StructureTable c, std::vector<std::string> labels,
                                                       std::optional<std::vector<QMatrix>> realization) {
    LieAlgebra l;
    l.dim_ = c.size();
    for (const auto& row : c) {
        if (row.size() != l.dim_) throw DimensionMismatch("structure table not square");
        for (const auto& v : row)
            if (v.size() != l.dim_) throw DimensionMismatch("structure constant vector length");
    }
    l.c_ = std::move(c);
    if (labels.empty()) {
        for (std::size_t i = 0; i < l.dim_; ++i) labels.push_back("b" + std::to_string(i));
    }
    if (labels.size() != l.dim_) throw DimensionMismatch("label count");
    l.labels_ = std::move(labels);
    l.realization_ = std::move(realization);
    l.cacheRealizationSpan();
    return l;
}

void LieAlgebra::cacheRealizationSpan() {
    if (!realization_) return;
    if (realization_->size() != dim_) throw DimensionMismatch("realization size");
    std::vector<QVector> rows;
    rows.reserve(dim_);
    for (const auto& m : *realization_) rows.push_back(m.flatten());
    std::size_t ambient = rows.empty() ? 0 : rows[0].size();
    Subspace span = Subspace::fromVectors(ambient, rows);
    if (span.dim() != dim_) throw DimensionMismatch("realization matrices are dependent");
    QMatrix change(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        auto cj = span.coordinatesOf((*realization_)[j].flatten());
        for (std::size_t i = 0; i < dim_; ++i) change(i, j) = (*cj)[i];
    }
    echelonToBasis_ = change.inverse();
    realizationSpan_ = std::move(span);
}

void LieAlgebra::validate() const {
    if (!antisymmetric())
        throw Error("NotAntisymmetric", "structure constants are not antisymmetric");
    if (auto bad = firstJacobiFailure())
        throw Error("JacobiFailure", "Jacobi identity fails on basis triple (" +
                                         std::to_string((*bad)[0]) + "," + std::to_string((*bad)[1]) +
                                         "," + std::to_string((*bad)[2]) + ")");
    if (realization_) {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j) {
                QMatrix mb = QMatrix::bracket((*realization_)[i], (*realization_)[j]);
                if (mb != matrixOf(c_[i][j]))
                    throw Error("RealizationMismatch",
                                "matrix bracket does not reproduce structure constants at (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
            }
    }
}

bool LieAlgebra::antisymmetric() const {
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            for (std::size_t k = 0; k < dim_; ++k)
                if (c_[i][j][k] != -c_[j][i][k]) return false;
        }
    }
    return true;
}

QVector LieAlgebra::bracket(const QVector& u, const QVector& v) const {
    if (u.size() != dim_ || v.size() != dim_) throw DimensionMismatch("bracket operand length");
    QVector out(dim_, Rational(0));
    for (std::size_t i = 0; i < dim_; ++i) {
        if (u[i] == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (v[j] == 0) continue;
            Rational f = u[i] * v[j];
            const QVector& row = c_[i][j];
            for (std::size_t k = 0; k < dim_; ++k)
                if (row[k] != 0) out[k] += f * row[k];
        }
    }
    return out;
}

QMatrix LieAlgebra::adjoint(const QVector& u) const {
    QMatrix ad(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        QVector ej(dim_, Rational(0));
        ej[j] = 1;
        QVector col = bracket(u, ej);
        for (std::size_t k = 0; k < dim_; ++k) ad(k, j) = col[k];
    }
    return ad;
}

std::optional<std::array<std::size_t, 3>> LieAlgebra::firstJacobiFailure() const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j) {
            const QVector& cij = c_[i][j];
            for (std::size_t k = j + 1; k < dim_; ++k) {
                QVector acc(dim_, Rational(0));
                auto addBracket = [&](const QVector& inner, std::size_t outer, bool outerOnRight) {
                    for (std::size_t m = 0; m < dim_; ++m) {
                        if (inner[m] == 0) continue;
                        const QVector& row = outerOnRight ? c_[m][outer] : c_[outer][m];
                        for (std::size_t t = 0; t < dim_; ++t)
                            if (row[t] != 0) acc[t] += inner[m] * row[t];
                    }
                };
                // [[i,j],k] + [[j,k],i] + [[k,i],j]
                addBracket(cij, k, true);
                addBracket(c_[j][k], i, true);
                addBracket(c_[k][i], j, true);
                if (!isZeroVector(acc)) return std::array<std::size_t, 3>{i, j, k};
            }
        }
    return std::nullopt;
}

QVector LieAlgebra::coordinatesOfMatrix(const QMatrix& m) const {
    if (!realization_) throw NotSupported("algebra has no matrix realization");
    auto coords = realizationSpan_->coordinatesOf(m.flatten());
    if (!coords) throw NotInSpan("matrix is not in the algebra span");
    return echelonToBasis_->applyTo(*coords);
}

QMatrix LieAlgebra::matrixOf(const QVector& coords) const {
    if (!realization_) throw NotSupported("algebra has no matrix realization");
    if (coords.size() != dim_) throw DimensionMismatch("coordinate length");
    const std::size_t n = (*realization_)[0].rows();
    QMatrix out(n, (*realization_)[0].cols());
    for (std::size_t i = 0; i < dim_; ++i)
        if (coords[i] != 0) out = out + (*realization_)[i] * coords[i];
    return out;
}

LieAlgebra LieAlgebra::sl(std::size_t n) {
    if (n < 2) throw DimensionMismatch("sl(n) needs n >= 2");
    std::vector<QMatrix> basis;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            basis.push_back(QMatrix::unit(n, i, j));
            labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
        }
    for (std::size_t k = 0; k + 1 < n; ++k) {
        basis.push_back(QMatrix::unit(n, k, k) - QMatrix::unit(n, k + 1, k + 1));
        labels.push_back("H" + std::to_string(k + 1));
    }
    const std::size_t dim = basis.size();
    std::vector<QVector> flat;
    for (const auto& m : basis) flat.push_back(m.flatten());
    Subspace span = Subspace::fromVectors(n * n, flat);

    StructureTable c(dim, std::vector<QVector>(dim, QVector(dim, Rational(0))));
    QMatrix change(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        auto cj = span.coordinatesOf(flat[j]);
        for (std::size_t i = 0; i < dim; ++i) change(i, j) = (*cj)[i];
    }
    QMatrix changeInv = change.inverse();
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) {
            QMatrix b = QMatrix::bracket(basis[i], basis[j]);
            auto ech = span.coordinatesOf(b.flatten());
            if (!ech) throw Error("Internal", "sl(n) bracket escaped the span");
            QVector coords = changeInv.applyTo(*ech);
            c[i][j] = coords;
            for (std::size_t k = 0; k < dim; ++k) c[j][i][k] = -coords[k];
        }
    return fromStructureConstants(std::move(c), std::move(labels), std::move(basis));
}

LieAlgebra buildFromMatrices(const std::vector<QMatrix>& generators, const BuildOptions& options) {
    if (generators.empty()) throw DimensionMismatch("no generators");
    const std::size_t n = generators[0].rows();
    for (const auto& g : generators)
        if (!g.isSquare() || g.rows() != n)
            throw DimensionMismatch("generators must be square of equal size");

    std::vector<QVector> rows;
    for (const auto& g : generators) rows.push_back(g.flatten());
    Subspace span = Subspace::fromVectors(n * n, rows);
    while (true) {
        if (span.dim() > options.dimensionCap)
            throw ClosureExplosion("closure dimension exceeded cap " +
                                   std::to_string(options.dimensionCap));
        std::vector<QVector> next = span.basis();
        bool grew = false;
        const auto& basis = span.basis();
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = i + 1; j < basis.size(); ++j) {
                QMatrix a = QMatrix::unflatten(n, n, basis[i]);
                QMatrix b = QMatrix::unflatten(n, n, basis[j]);
                QVector br = QMatrix::bracket(a, b).flatten();
                if (!span.contains(br)) {
                    next.push_back(br);
                    grew = true;
                }
            }
        if (!grew) break;
        span = Subspace::fromVectors(n * n, next);
        if (span.dim() > options.dimensionCap)
            throw ClosureExplosion("closure dimension exceeded cap " +
                                   std::to_string(options.dimensionCap));
    }

    const std::size_t dim = span.dim();
    std::vector<QMatrix> basis;
    for (const auto& v : span.basis()) basis.push_back(QMatrix::unflatten(n, n, v));
    LieAlgebra::StructureTable c(dim, std::vector<QVector>(dim, QVector(dim, Rational(0))));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) {
            QVector br = QMatrix::bracket(basis[i], basis[j]).flatten();
            auto coords = span.coordinatesOf(br);
            if (!coords) throw Error("Internal", "closure is not closed");
            c[i][j] = *coords;
            for (std::size_t k = 0; k < dim; ++k) c[j][i][k] = -(*coords)[k];
        }
    return LieAlgebra::fromStructureConstants(std::move(c), {}, std::move(basis));
}

Representation::Representation(LieAlgebra algebra, std::vector<QMatrix> actionMatrices,
                               std::vector<Subspace> declaredIrreducibleBlocks)
    : algebra_(std::move(algebra)), action_(std::move(actionMatrices)),
      blocks_(std::move(declaredIrreducibleBlocks)) {
    targetDim_ = action_.empty() ? 0 : action_[0].rows();
    validate();
}

Representation::Representation(LieAlgebra algebra, std::size_t targetDim,
                               std::vector<QMatrix> actionMatrices,
                               std::vector<Subspace> declaredIrreducibleBlocks)
    : algebra_(std::move(algebra)), targetDim_(targetDim), action_(std::move(actionMatrices)),
      blocks_(std::move(declaredIrreducibleBlocks)) {
    validate();
}

void Representation::validate() const {
    if (action_.size() != algebra_.dim())
        throw NotARepresentation("one action matrix per basis element required");
    for (const auto& m : action_)
        if (!m.isSquare() || m.rows() != targetDim_)
            throw NotARepresentation("action matrices must be square of equal size");
    const std::size_t d = algebra_.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            QMatrix lhs = actionOf(algebra_.bracketBasis(i, j));
            if (lhs != QMatrix::bracket(action_[i], action_[j]))
                throw NotARepresentation("drho([b_i,b_j]) != [drho(b_i), drho(b_j)] at (" +
                                         std::to_string(i) + "," + std::to_string(j) + ")");
        }
    for (const auto& block : blocks_) {
        if (block.ambientDim() != targetDim_)
            throw NotARepresentation("declared block has wrong ambient dimension");
        bool allZero = true;
        for (const auto& m : action_)
            for (const auto& v : block.basis()) {
                QVector image = m.applyTo(v);
                if (!block.contains(image))
                    throw NotARepresentation("declared block is not invariant");
                if (!isZeroVector(image)) allZero = false;
            }
        if (allZero && block.dim() > 0 && algebra_.dim() > 0)
            throw NotARepresentation("declared block carries the trivial action");
    }
}

QMatrix Representation::actionOf(const QVector& coords) const {
    if (coords.size() != algebra_.dim()) throw DimensionMismatch("actionOf coordinate length");
    QMatrix out(targetDim_, targetDim_);
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0) out = out + action_[i] * coords[i];
    return out;
}

Representation Representation::trivial(LieAlgebra algebra, std::size_t targetDim) {
    std::vector<QMatrix> action(algebra.dim(), QMatrix(targetDim, targetDim));
    return Representation(std::move(algebra), std::move(action));
}

Representation Representation::standard(LieAlgebra algebra) {
    if (!algebra.hasRealization()) throw NotSupported("standard rep needs a realization");
    std::vector<QMatrix> action = algebra.realization();
    return Representation(std::move(algebra), std::move(action));
}

Representation Representation::adjointRep(LieAlgebra algebra) {
    std::vector<QMatrix> action;
    for (std::size_t i = 0; i < algebra.dim(); ++i) {
        QVector ei(algebra.dim(), Rational(0));
        ei[i] = 1;
        action.push_back(algebra.adjoint(ei));
    }
    return Representation(std::move(algebra), std::move(action));
}

AbelianSubalgebra::AbelianSubalgebra(const LieAlgebra& parent, std::vector<QMatrix> generatorMatrices)
    : matrices_(std::move(generatorMatrices)) {
    for (const auto& m : matrices_) coords_.push_back(parent.coordinatesOfMatrix(m));
    validate(parent);
}

AbelianSubalgebra::AbelianSubalgebra(const LieAlgebra& parent, std::vector<QVector> generatorCoords)
    : coords_(std::move(generatorCoords)) {
    if (parent.hasRealization())
        for (const auto& c : coords_) matrices_.push_back(parent.matrixOf(c));
    validate(parent);
}

void AbelianSubalgebra::validate(const LieAlgebra& parent) {
    if (coords_.empty()) throw DimensionMismatch("abelian subalgebra needs generators");
    for (std::size_t i = 0; i < coords_.size(); ++i)
        for (std::size_t j = i + 1; j < coords_.size(); ++j)
            if (!isZeroVector(parent.bracket(coords_[i], coords_[j])))
                throw NotAbelian("generators " + std::to_string(i) + "," + std::to_string(j) +
                                 " do not commute");
    Subspace span = Subspace::fromVectors(parent.dim(), coords_);
    if (span.dim() != coords_.size())
        throw DimensionMismatch("abelian generators are linearly dependent");
}

LieAlgebra semidirect(const LieAlgebra& g, const Representation& rho) {
    const std::size_t m = g.dim(), n = rho.targetDim(), dim = m + n;
    LieAlgebra::StructureTable c(dim, std::vector<QVector>(dim, QVector(dim, Rational(0))));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const QVector& v = g.bracketBasis(i, j);
            for (std::size_t k = 0; k < m; ++k) c[i][j][k] = v[k];
        }
    const auto& act = rho.actionMatrices();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t t = 0; t < n; ++t) {
            // [ (b_i,0), (0,e_t) ] = (0, drho(b_i) e_t)
            for (std::size_t s = 0; s < n; ++s) {
                c[i][m + t][m + s] = act[i](s, t);
                c[m + t][i][m + s] = -act[i](s, t);
            }
        }
    std::vector<std::string> labels = g.basisLabels();
    for (std::size_t t = 0; t < n; ++t) labels.push_back("e" + std::to_string(t + 1));
    return LieAlgebra::fromStructureConstants(std::move(c), std::move(labels));
}

Subspace centralizer(const LieAlgebra& l, const std::vector<QVector>& elements) {
    const std::size_t dim = l.dim();
    std::vector<QVector> rows;
    for (const auto& s : elements) {
        // [z, s] = 0 <=> ad(s) z = 0 (antisymmetry)
        QMatrix ad = l.adjoint(s);
        for (std::size_t i = 0; i < dim; ++i) rows.push_back(ad.rowVector(i));
    }
    QMatrix stacked(rows.size(), dim);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j) stacked(i, j) = rows[i][j];
    return kernel(stacked);
}

DerivedReport derivedAndPerfect(const LieAlgebra& l) {
    std::vector<QVector> brackets;
    for (std::size_t i = 0; i < l.dim(); ++i)
        for (std::size_t j = i + 1; j < l.dim(); ++j) brackets.push_back(l.bracketBasis(i, j));
    Subspace derived = Subspace::fromVectors(l.dim(), std::move(brackets));
    bool perfect = derived.dim() == l.dim();
    return {std::move(derived), perfect};
}

} // namespace rigidkit

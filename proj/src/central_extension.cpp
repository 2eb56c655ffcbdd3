#include "rigidkit/central_extension.hpp"

#include "rigidkit/errors.hpp"
#include "rigidkit/subspace.hpp"

namespace rigidkit {

TwoForm::TwoForm(QMatrix m) : matrix(std::move(m)) {
    if (!matrix.isSquare()) throw DimensionMismatch("two-form matrix must be square");
    if (!(matrix + matrix.transpose()).isZero())
        throw DimensionMismatch("two-form matrix must be antisymmetric");
}

Rational TwoForm::evaluate(const QVector& v, const QVector& w) const {
    QVector jw = matrix.applyTo(w);
    Rational acc(0);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0 && jw[i] != 0) acc += v[i] * jw[i];
    return acc;
}

std::vector<TwoForm> invariantTwoForms(const Representation& rho) {
    const std::size_t n = rho.targetDim();
    if (n == 0) return {};
    // Unknowns: strictly upper entries of J, column-major over pairs (p<q).
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) pairs.push_back({p, q});
    const std::size_t unknowns = pairs.size();

    auto entryCoeff = [&](std::size_t i, std::size_t j, std::size_t var) -> Rational {
        // J_{ij} in terms of unknown `var` (J_{pq} = x, J_{qp} = -x).
        auto [p, q] = pairs[var];
        if (i == p && j == q) return Rational(1);
        if (i == q && j == p) return Rational(-1);
        return Rational(0);
    };

    std::vector<QVector> rows;
    for (const QMatrix& d : rho.actionMatrices()) {
        // D^T J + J D = 0, entrywise (i,j): sum_k D_{ki} J_{kj} + J_{ik} D_{kj}.
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {   // the matrix is antisymmetric
                QVector row(unknowns, Rational(0));
                for (std::size_t var = 0; var < unknowns; ++var) {
                    Rational acc(0);
                    for (std::size_t k = 0; k < n; ++k) {
                        if (d(k, i) != 0) acc += d(k, i) * entryCoeff(k, j, var);
                        if (d(k, j) != 0) acc += entryCoeff(i, k, var) * d(k, j);
                    }
                    row[var] = acc;
                }
                rows.push_back(std::move(row));
            }
    }
    Subspace sol;
    if (rows.empty()) {
        sol = Subspace::full(unknowns);
    } else {
        QMatrix system(rows.size(), unknowns);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < unknowns; ++j) system(i, j) = rows[i][j];
        sol = kernel(system);
    }
    std::vector<TwoForm> forms;
    for (const auto& x : sol.basis()) {
        QMatrix j(n, n);
        for (std::size_t var = 0; var < unknowns; ++var) {
            auto [p, q] = pairs[var];
            j(p, q) = x[var];
            j(q, p) = -x[var];
        }
        forms.emplace_back(std::move(j));
    }
    return forms;
}

SymplecticClass classifySymplectic(const Representation& rho) {
    auto forms = invariantTwoForms(rho);
    return {!forms.empty(), forms.size()};
}

CentralExtensionAlgebra buildUniversalExtension(const LieAlgebra& g, const Representation& rho) {
    std::vector<TwoForm> forms = invariantTwoForms(rho);
    const std::size_t m = g.dim(), fiber = rho.targetDim(), z = forms.size();
    const std::size_t dim = m + fiber + z;

    LieAlgebra base = semidirect(g, rho);

    LieAlgebra::StructureTable c(dim, std::vector<QVector>(dim, QVector(dim, Rational(0))));
    // g x g and g x e from the semidirect product
    for (std::size_t i = 0; i < m + fiber; ++i)
        for (std::size_t j = 0; j < m + fiber; ++j) {
            const QVector& v = base.bracketBasis(i, j);
            for (std::size_t k = 0; k < m + fiber; ++k) c[i][j][k] = v[k];
        }
    // e x e lands in the center through the forms
    for (std::size_t s = 0; s < fiber; ++s)
        for (std::size_t t = 0; t < fiber; ++t) {
            if (s == t) continue;
            for (std::size_t f = 0; f < z; ++f)
                c[m + s][m + t][m + fiber + f] = forms[f].matrix(s, t);
        }
    std::vector<std::string> labels = base.basisLabels();
    for (std::size_t f = 0; f < z; ++f) labels.push_back("z" + std::to_string(f + 1));

    CentralExtensionAlgebra out;
    out.extended = LieAlgebra::fromStructureConstants(std::move(c), std::move(labels));
    out.base = std::move(base);
    out.formsBasis = std::move(forms);
    out.gDim = m;
    out.fiberDim = fiber;
    out.centerDim = z;
    return out;
}

ExtensionPropertyReport verifyExtensionProperties(const CentralExtensionAlgebra& e) {
    ExtensionPropertyReport report;
    const LieAlgebra& ext = e.extended;
    const std::size_t m = e.gDim, fiber = e.fiberDim, z = e.centerDim;
    const std::size_t dim = ext.dim();

    report.jacobiFailure = ext.firstJacobiFailure();
    report.jacobiHolds = !report.jacobiFailure.has_value() && ext.antisymmetric();

    // (b) z is contained in the center
    report.centerIsCentral = true;
    for (std::size_t f = 0; f < z; ++f)
        for (std::size_t i = 0; i < dim; ++i)
            if (!isZeroVector(ext.bracketBasis(m + fiber + f, i))) report.centerIsCentral = false;

    // (c) dropping the z coordinates is a homomorphism onto the base
    report.projectionIsHomomorphism = true;
    for (std::size_t i = 0; i < m + fiber && report.projectionIsHomomorphism; ++i)
        for (std::size_t j = 0; j < m + fiber; ++j) {
            const QVector& top = ext.bracketBasis(i, j);
            const QVector& bottom = e.base.bracketBasis(i, j);
            for (std::size_t k = 0; k < m + fiber; ++k)
                if (top[k] != bottom[k]) {
                    report.projectionIsHomomorphism = false;
                    break;
                }
        }

    // (d) perfectness, when it is supposed to hold
    DerivedReport derived = derivedAndPerfect(ext);
    report.extendedPerfect = derived.isPerfect;
    report.perfectnessApplicable = derivedAndPerfect(e.base).isPerfect;

    // (e) [e, e] spans z
    std::vector<QVector> fiberBrackets;
    for (std::size_t s = 0; s < fiber; ++s)
        for (std::size_t t = s + 1; t < fiber; ++t) {
            QVector center(z, Rational(0));
            const QVector& b = ext.bracketBasis(m + s, m + t);
            for (std::size_t f = 0; f < z; ++f) center[f] = b[m + fiber + f];
            fiberBrackets.push_back(std::move(center));
        }
    Subspace span = z == 0 ? Subspace(0) : Subspace::fromVectors(z, fiberBrackets);
    report.fiberBracketSpansCenter = span.dim() == z;
    return report;
}

bool verifyUniversalMapTo(const CentralExtensionAlgebra& e, const TwoForm& omega) {
    // Express omega in the forms basis.
    const std::size_t n = omega.matrix.rows();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) pairs.push_back({p, q});
    QMatrix system(pairs.size(), e.centerDim);
    QVector rhs(pairs.size());
    for (std::size_t r = 0; r < pairs.size(); ++r) {
        auto [p, q] = pairs[r];
        for (std::size_t f = 0; f < e.centerDim; ++f) system(r, f) = e.formsBasis[f].matrix(p, q);
        rhs[r] = omega.matrix(p, q);
    }
    QVector expansion;
    {
        // least structured path: solve by RREF of the augmented system
        std::vector<QVector> rows;
        for (std::size_t r = 0; r < pairs.size(); ++r) {
            QVector row = system.rowVector(r);
            row.push_back(rhs[r]);
            rows.push_back(std::move(row));
        }
        rowReduce(rows);
        expansion.assign(e.centerDim, Rational(0));
        for (const auto& row : rows) {
            std::size_t lead = 0;
            while (lead <= e.centerDim && row[lead] == 0) ++lead;
            if (lead == e.centerDim) return false;   // omega not invariant: inconsistent
            if (lead > e.centerDim) continue;
            expansion[lead] = row[e.centerDim];
            for (std::size_t f = lead + 1; f < e.centerDim; ++f)
                if (row[f] != 0) expansion[lead] -= row[f] * expansion[f];
        }
    }

    // The target algebra h = g + e + R Z with bracket twisted by omega.
    const std::size_t m = e.gDim, fiber = e.fiberDim;
    const std::size_t hdim = m + fiber + 1;
    LieAlgebra::StructureTable c(hdim, std::vector<QVector>(hdim, QVector(hdim, Rational(0))));
    for (std::size_t i = 0; i < m + fiber; ++i)
        for (std::size_t j = 0; j < m + fiber; ++j) {
            const QVector& v = e.base.bracketBasis(i, j);
            for (std::size_t k = 0; k < m + fiber; ++k) c[i][j][k] = v[k];
        }
    for (std::size_t s = 0; s < fiber; ++s)
        for (std::size_t t = 0; t < fiber; ++t)
            if (s != t) c[m + s][m + t][m + fiber] = omega.matrix(s, t);
    LieAlgebra h = LieAlgebra::fromStructureConstants(std::move(c));

    // phi: identity on g + e, z_f -> expansion[f] * Z. Check
    // phi([x,y]_ext) = [phi(x), phi(y)]_h on basis pairs.
    auto phi = [&](const QVector& v) {
        QVector out(hdim, Rational(0));
        for (std::size_t k = 0; k < m + fiber; ++k) out[k] = v[k];
        for (std::size_t f = 0; f < e.centerDim; ++f)
            if (v[m + fiber + f] != 0) out[m + fiber] += expansion[f] * v[m + fiber + f];
        return out;
    };
    const std::size_t edim = e.extended.dim();
    for (std::size_t i = 0; i < edim; ++i)
        for (std::size_t j = i + 1; j < edim; ++j) {
            QVector ei(edim, Rational(0)), ej(edim, Rational(0));
            ei[i] = 1;
            ej[j] = 1;
            QVector lhs = phi(e.extended.bracket(ei, ej));
            QVector rhs2 = h.bracket(phi(ei), phi(ej));
            if (lhs != rhs2) return false;
        }
    return true;
}

} // namespace rigidkit

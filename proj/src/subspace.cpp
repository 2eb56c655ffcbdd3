#include "rigidkit/subspace.hpp"

#include <algorithm>

#include "rigidkit/errors.hpp"

namespace rigidkit {

std::vector<std::size_t> rowReduce(std::vector<QVector>& rows) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    const std::size_t n = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t sel = rank;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[rank]);
        Rational inv = 1 / rows[rank][col];
        for (auto& x : rows[rank]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            Rational f = rows[i][col];
            for (std::size_t j = col; j < n; ++j) rows[i][j] -= f * rows[rank][j];
        }
        pivots.push_back(col);
        ++rank;
    }
    rows.resize(rank);
    return pivots;
}

Subspace Subspace::fromVectors(std::size_t ambientDim, std::vector<QVector> vectors) {
    for (const auto& v : vectors)
        if (v.size() != ambientDim) throw DimensionMismatch("subspace vector size");
    Subspace s(ambientDim);
    s.pivots_ = rowReduce(vectors);
    s.basis_ = std::move(vectors);
    return s;
}

Subspace Subspace::full(std::size_t ambientDim) {
    std::vector<QVector> rows(ambientDim, QVector(ambientDim, Rational(0)));
    for (std::size_t i = 0; i < ambientDim; ++i) rows[i][i] = 1;
    return fromVectors(ambientDim, std::move(rows));
}

QVector Subspace::reduceAgainst(const QVector& v) const {
    QVector r = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Rational& c = r[pivots_[i]];
        if (c == 0) continue;
        Rational f = c;
        for (std::size_t j = 0; j < ambient_; ++j) r[j] -= f * basis_[i][j];
    }
    return r;
}

bool Subspace::contains(const QVector& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("contains vector size");
    return isZeroVector(reduceAgainst(v));
}

bool Subspace::containsSubspace(const Subspace& other) const {
    for (const auto& v : other.basis_)
        if (!contains(v)) return false;
    return true;
}

std::optional<QVector> Subspace::coordinatesOf(const QVector& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("coordinatesOf vector size");
    QVector coords(basis_.size(), Rational(0));
    QVector r = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Rational c = r[pivots_[i]];
        if (c == 0) continue;
        coords[i] = c;
        for (std::size_t j = 0; j < ambient_; ++j) r[j] -= c * basis_[i][j];
    }
    if (!isZeroVector(r)) return std::nullopt;
    return coords;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw DimensionMismatch("subspace sum ambient");
    std::vector<QVector> rows = basis_;
    rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
    return fromVectors(ambient_, std::move(rows));
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw DimensionMismatch("subspace intersect ambient");
    // Zassenhaus: row reduce [B1 B1; B2 0]; rows with zero left block carry
    // the intersection in the right block.
    const std::size_t n = ambient_;
    std::vector<QVector> rows;
    for (const auto& b : basis_) {
        QVector r(2 * n, Rational(0));
        for (std::size_t j = 0; j < n; ++j) {
            r[j] = b[j];
            r[n + j] = b[j];
        }
        rows.push_back(std::move(r));
    }
    for (const auto& b : other.basis_) {
        QVector r(2 * n, Rational(0));
        for (std::size_t j = 0; j < n; ++j) r[j] = b[j];
        rows.push_back(std::move(r));
    }
    rowReduce(rows);
    std::vector<QVector> inter;
    for (const auto& r : rows) {
        bool leftZero = true;
        for (std::size_t j = 0; j < n; ++j)
            if (r[j] != 0) {
                leftZero = false;
                break;
            }
        if (!leftZero) continue;
        inter.emplace_back(r.begin() + n, r.end());
    }
    return fromVectors(n, std::move(inter));
}

Subspace kernel(const QMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<QVector> r;
    r.reserve(rows);
    for (std::size_t i = 0; i < rows; ++i) r.push_back(m.rowVector(i));
    std::vector<std::size_t> pivots = rowReduce(r);
    std::vector<bool> isPivot(cols, false);
    for (auto p : pivots) isPivot[p] = true;
    std::vector<QVector> basis;
    for (std::size_t freeCol = 0; freeCol < cols; ++freeCol) {
        if (isPivot[freeCol]) continue;
        QVector v(cols, Rational(0));
        v[freeCol] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -r[i][freeCol];
        basis.push_back(std::move(v));
    }
    return Subspace::fromVectors(cols, std::move(basis));
}

} // namespace rigidkit

#ifndef RIGIDKIT_SUBSPACE_HPP
#define RIGIDKIT_SUBSPACE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "rigidkit/qmatrix.hpp"
#include "rigidkit/rational.hpp"

namespace rigidkit {

// In-place reduced row echelon form. Returns pivot column indices; zero
// rows are removed.
std::vector<std::size_t> rowReduce(std::vector<QVector>& rows);

// A linear subspace of Q^n stored as a reduced-row-echelon basis, so two
// subspaces are equal iff their representations are identical.
class Subspace {
public:
    Subspace() : ambient_(0) {}
    explicit Subspace(std::size_t ambientDim) : ambient_(ambientDim) {}
    static Subspace fromVectors(std::size_t ambientDim, std::vector<QVector> vectors);
    static Subspace full(std::size_t ambientDim);

    std::size_t ambientDim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<QVector>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const QVector& v) const;
    bool containsSubspace(const Subspace& other) const;
    // Coordinates of v in the echelon basis; nullopt if v is outside.
    std::optional<QVector> coordinatesOf(const QVector& v) const;
    // Residue of v after reducing against the basis (zero iff contained).
    QVector reduceAgainst(const QVector& v) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    std::size_t ambient_;
    std::vector<QVector> basis_;   // RREF rows
    std::vector<std::size_t> pivots_;
};

// Exact null space {x : M x = 0} as a canonical Subspace.
Subspace kernel(const QMatrix& m);

} // namespace rigidkit

#endif

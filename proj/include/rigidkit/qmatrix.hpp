#ifndef RIGIDKIT_QMATRIX_HPP
#define RIGIDKIT_QMATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "rigidkit/rational.hpp"

namespace rigidkit {

// Dense exact rational matrix, row-major.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, Rational(0)) {}

    // Row-major list of long entries, mostly for tests and builders.
    static QMatrix fromLongs(std::size_t rows, std::size_t cols,
                             std::initializer_list<long> entries);
    static QMatrix identity(std::size_t n);
    static QMatrix zero(std::size_t n) { return QMatrix(n, n); }
    // Elementary matrix E_{ij} (0-indexed).
    static QMatrix unit(std::size_t n, std::size_t i, std::size_t j);
    static QMatrix diagonal(const QVector& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool isSquare() const { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    QMatrix operator-() const;
    QMatrix operator*(const QMatrix& o) const;
    QMatrix operator*(const Rational& s) const;
    bool operator==(const QMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
    bool operator!=(const QMatrix& o) const { return !(*this == o); }

    QMatrix transpose() const;
    QMatrix pow(std::size_t k) const;
    Rational trace() const;
    bool isZero() const;
    bool isIdentity() const;

    QVector applyTo(const QVector& v) const;   // this * v (column convention)
    QVector rowVector(std::size_t i) const;

    // Row-major flattening; the bridge between matrix space and QVector
    // subspaces.
    QVector flatten() const { return e_; }
    static QMatrix unflatten(std::size_t rows, std::size_t cols, const QVector& v);

    // [A,B] = AB - BA
    static QMatrix bracket(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }
    static bool commute(const QMatrix& a, const QMatrix& b) { return bracket(a, b).isZero(); }

    // exp of a nilpotent matrix via the terminating series; throws NotInSpan
    // if the series does not terminate within the dimension.
    QMatrix expNilpotent() const;
    // log of a unipotent matrix (I + nilpotent), exact.
    QMatrix logUnipotent() const;
    bool isNilpotent() const;
    bool isUnipotent() const;

    // Rational solve: this * x = rhs, unique-solution path (throws if
    // singular/inconsistent). Used for small internal systems only.
    QVector solve(const QVector& rhs) const;
    QMatrix inverse() const;

    std::string str() const;

private:
    std::size_t rows_, cols_;
    QVector e_;
};

} // namespace rigidkit

#endif

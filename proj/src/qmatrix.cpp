#include "rigidkit/qmatrix.hpp"

#include <sstream>

#include "rigidkit/errors.hpp"

namespace rigidkit {

QMatrix QMatrix::fromLongs(std::size_t rows, std::size_t cols,
                           std::initializer_list<long> entries) {
    if (entries.size() != rows * cols)
        throw DimensionMismatch("entry count != rows*cols");
    QMatrix m(rows, cols);
    std::size_t k = 0;
    for (long v : entries) m.e_[k++] = Rational(v);
    return m;
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMatrix QMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
    QMatrix m(n, n);
    m(i, j) = 1;
    return m;
}

QMatrix QMatrix::diagonal(const QVector& d) {
    QMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix add");
    QMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sub");
    QMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
    return r;
}

QMatrix QMatrix::operator-() const {
    QMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
    return r;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix mul");
    QMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Rational& b = o(k, j);
                if (b == 0) continue;
                r(i, j) += a * b;
            }
        }
    return r;
}

QMatrix QMatrix::operator*(const Rational& s) const {
    QMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * s;
    return r;
}

QMatrix QMatrix::transpose() const {
    QMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

QMatrix QMatrix::pow(std::size_t k) const {
    if (!isSquare()) throw DimensionMismatch("pow of non-square matrix");
    QMatrix acc = identity(rows_);
    QMatrix base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return acc;
}

Rational QMatrix::trace() const {
    Rational t(0);
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
}

bool QMatrix::isZero() const {
    for (const auto& x : e_)
        if (x != 0) return false;
    return true;
}

bool QMatrix::isIdentity() const {
    if (!isSquare()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

QVector QMatrix::applyTo(const QVector& v) const {
    if (v.size() != cols_) throw DimensionMismatch("applyTo size");
    QVector r(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Rational& a = (*this)(i, j);
            if (a != 0 && v[j] != 0) r[i] += a * v[j];
        }
    return r;
}

QVector QMatrix::rowVector(std::size_t i) const {
    return QVector(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
}

QMatrix QMatrix::unflatten(std::size_t rows, std::size_t cols, const QVector& v) {
    if (v.size() != rows * cols) throw DimensionMismatch("unflatten size");
    QMatrix m(rows, cols);
    m.e_ = v;
    return m;
}

bool QMatrix::isNilpotent() const {
    if (!isSquare()) return false;
    QMatrix p = *this;
    // index of nilpotency is at most the dimension
    for (std::size_t k = 1; k <= rows_; ++k) {
        if (p.isZero()) return true;
        p = p * (*this);
    }
    return p.isZero();
}

bool QMatrix::isUnipotent() const {
    if (!isSquare()) return false;
    return (*this - identity(rows_)).isNilpotent();
}

QMatrix QMatrix::expNilpotent() const {
    if (!isSquare()) throw DimensionMismatch("exp of non-square matrix");
    QMatrix acc = identity(rows_);
    QMatrix term = identity(rows_);
    for (std::size_t k = 1; k <= rows_; ++k) {
        term = term * (*this);
        term = term * rat(1, static_cast<long>(k));
        if (term.isZero()) return acc;
        acc = acc + term;
    }
    if (!(term * (*this)).isZero())
        throw NotInSpan("expNilpotent: matrix is not nilpotent");
    return acc;
}

QMatrix QMatrix::logUnipotent() const {
    if (!isSquare()) throw DimensionMismatch("log of non-square matrix");
    QMatrix k = *this - identity(rows_);
    if (!k.isNilpotent())
        throw NotInSpan("logUnipotent: matrix is not unipotent");
    QMatrix acc(rows_, rows_);
    QMatrix p = identity(rows_);
    for (std::size_t j = 1; j <= rows_; ++j) {
        p = p * k;
        if (p.isZero()) break;
        Rational c = rat(j % 2 == 1 ? 1 : -1, static_cast<long>(j));
        acc = acc + p * c;
    }
    return acc;
}

QVector QMatrix::solve(const QVector& rhs) const {
    if (rhs.size() != rows_) throw DimensionMismatch("solve rhs size");
    // Gauss-Jordan on the augmented system.
    std::vector<QVector> aug(rows_, QVector(cols_ + 1, Rational(0)));
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug[i][j] = (*this)(i, j);
        aug[i][cols_] = rhs[i];
    }
    std::size_t rank = 0;
    std::vector<std::size_t> pivotCol;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t sel = rank;
        while (sel < rows_ && aug[sel][col] == 0) ++sel;
        if (sel == rows_) continue;
        std::swap(aug[sel], aug[rank]);
        Rational inv = 1 / aug[rank][col];
        for (auto& x : aug[rank]) x *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == rank || aug[i][col] == 0) continue;
            Rational f = aug[i][col];
            for (std::size_t j = col; j <= cols_; ++j) aug[i][j] -= f * aug[rank][j];
        }
        pivotCol.push_back(col);
        ++rank;
    }
    for (std::size_t i = rank; i < rows_; ++i)
        if (aug[i][cols_] != 0) throw NotInSpan("solve: inconsistent system");
    if (rank < cols_) throw NotInSpan("solve: underdetermined system");
    QVector x(cols_, Rational(0));
    for (std::size_t i = 0; i < rank; ++i) x[pivotCol[i]] = aug[i][cols_];
    return x;
}

QMatrix QMatrix::inverse() const {
    if (!isSquare()) throw DimensionMismatch("inverse of non-square matrix");
    std::size_t n = rows_;
    QMatrix inv = identity(n);
    QMatrix a = *this;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && a(sel, col) == 0) ++sel;
        if (sel == n) throw NotInSpan("inverse: singular matrix");
        if (sel != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(sel, j), a(col, j));
                std::swap(inv(sel, j), inv(col, j));
            }
        Rational p = 1 / a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) *= p;
            inv(col, j) *= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            Rational f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

std::string QMatrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (std::size_t j = 0; j < cols_; ++j)
            os << toString((*this)(i, j)) << (j + 1 < cols_ ? " " : "");
        os << (i + 1 < rows_ ? ";\n" : "]");
    }
    return os.str();
}

} // namespace rigidkit
